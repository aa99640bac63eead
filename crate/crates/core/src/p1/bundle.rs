//! Split quiver bundles on the projective line.

use crate::error::{Error, Result};
use crate::quiver::Quiver;
use crate::types::{TypeVector, VertexType};

use super::poly::PolyMatrix;

/// `O(a_1) ⊕ … ⊕ O(a_k)`, summand degrees stored in descending order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SplitBundle {
    degrees: Vec<i64>,
}

impl SplitBundle {
    pub fn new(mut degrees: Vec<i64>) -> Self {
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        SplitBundle { degrees }
    }

    pub fn line(d: i64) -> Self {
        SplitBundle { degrees: vec![d] }
    }

    pub fn degrees(&self) -> &[i64] {
        &self.degrees
    }

    pub fn rank(&self) -> usize {
        self.degrees.len()
    }

    pub fn degree(&self) -> i64 {
        self.degrees.iter().sum()
    }

    pub fn vertex_type(&self) -> VertexType {
        VertexType::new(self.rank() as u32, self.degree())
    }
}

/// Permutation sorting `degrees` descending (stable); `perm[new] = old`.
fn descending_order(degrees: &[i64]) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..degrees.len()).collect();
    perm.sort_by(|&a, &b| degrees[b].cmp(&degrees[a]));
    perm
}

/// A quiver bundle `(E•, φ•)` on the projective line with split vertex bundles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuiverBundleP1 {
    quiver: Quiver,
    bundles: Vec<SplitBundle>,
    maps: Vec<PolyMatrix>,
}

impl QuiverBundleP1 {
    /// Builds a bundle from summand degrees in any order; each arrow matrix is indexed by the
    /// summands as given and is permuted along with them.
    pub fn new(quiver: Quiver, summands: Vec<Vec<i64>>, maps: Vec<PolyMatrix>) -> Result<Self> {
        if summands.len() != quiver.vertex_count() {
            return Err(Error::VertexMismatch {
                expected: quiver.vertex_count(),
                found: summands.len(),
            });
        }
        if maps.len() != quiver.arrows().len() {
            return Err(Error::MalformedBundle(format!(
                "{} arrow maps for {} arrows",
                maps.len(),
                quiver.arrows().len()
            )));
        }
        for (arrow, m) in quiver.arrows().iter().zip(&maps) {
            let (src, tgt) = (&summands[arrow.tail], &summands[arrow.head]);
            if m.rows() != tgt.len() || m.cols() != src.len() {
                return Err(Error::MalformedBundle(format!(
                    "arrow {}: matrix is {}x{}, expected {}x{}",
                    arrow.id,
                    m.rows(),
                    m.cols(),
                    tgt.len(),
                    src.len()
                )));
            }
            for (j, dt) in tgt.iter().enumerate() {
                for (k, ds) in src.iter().enumerate() {
                    let want = dt - ds;
                    if m.get(j, k).degree() != want {
                        return Err(Error::MalformedBundle(format!(
                            "arrow {}: entry ({j},{k}) must be homogeneous of degree {want} \
                             with {} coefficients",
                            arrow.id,
                            (want + 1).max(0)
                        )));
                    }
                }
            }
        }

        let perms: Vec<Vec<usize>> = summands.iter().map(|s| descending_order(s)).collect();
        let maps = quiver
            .arrows()
            .iter()
            .zip(&maps)
            .map(|(arrow, m)| {
                let (pt, ph) = (&perms[arrow.tail], &perms[arrow.head]);
                PolyMatrix::from_rows(
                    ph.iter()
                        .map(|&j| pt.iter().map(|&k| m.get(j, k).clone()).collect())
                        .collect(),
                    pt.len(),
                )
            })
            .collect();
        let bundles = summands.into_iter().map(SplitBundle::new).collect();
        Ok(QuiverBundleP1 {
            quiver,
            bundles,
            maps,
        })
    }

    /// All arrow maps zero.
    pub fn with_zero_maps(quiver: Quiver, summands: Vec<Vec<i64>>) -> Result<Self> {
        let maps = quiver
            .arrows()
            .iter()
            .map(|a| {
                PolyMatrix::zero(
                    summands.get(a.tail).map_or(&[][..], |s| s),
                    summands.get(a.head).map_or(&[][..], |s| s),
                )
            })
            .collect();
        QuiverBundleP1::new(quiver, summands, maps)
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn bundles(&self) -> &[SplitBundle] {
        &self.bundles
    }

    pub fn bundle(&self, i: usize) -> &SplitBundle {
        &self.bundles[i]
    }

    pub fn maps(&self) -> &[PolyMatrix] {
        &self.maps
    }

    pub fn map(&self, a: usize) -> &PolyMatrix {
        &self.maps[a]
    }

    pub fn type_vector(&self) -> TypeVector {
        TypeVector::new(self.bundles.iter().map(SplitBundle::vertex_type).collect())
            .expect("bundle types are consistent")
    }

    pub(crate) fn check_same_quiver(&self, other: &QuiverBundleP1) -> Result<()> {
        if self.quiver == other.quiver {
            Ok(())
        } else {
            Err(Error::QuiverMismatch)
        }
    }
}
