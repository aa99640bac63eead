//! α-stability of split quiver bundles on the line.
//!
//! With rank one at every vertex the sub-Q-bundles are exactly the vertex sets closed under
//! arrows carrying a nonzero map, so stability is decided by enumeration. In higher rank only
//! sub-Q-bundles spanned by summands are searched, which can exhibit instability but never
//! certify stability.

use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::rational::{format_rational, int, Rational};
use crate::stability::BundleStability;
use crate::types::{alpha_slope, StabilityParameter, TypeVector, VertexType};

use super::bundle::QuiverBundleP1;

/// A sub-Q-bundle given by vertex names and its α-slope.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SubobjectWitness {
    pub vertices: Vec<String>,
    pub subtype: TypeVector,
    #[serde(with = "crate::rational::serde_str")]
    pub slope: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RankOneVerdict {
    pub stability: BundleStability,
    #[serde(with = "crate::rational::serde_str")]
    pub slope: Rational,
    /// A proper subobject of maximal slope; absent when there are none.
    pub witness: Option<SubobjectWitness>,
}

/// Exact α-stability when every vertex carries a line bundle.
pub fn rank_one_stability(
    e: &QuiverBundleP1,
    alpha: &StabilityParameter,
) -> Result<RankOneVerdict> {
    let q = e.quiver();
    let n = q.vertex_count();
    alpha.check_len(n)?;
    if let Some(i) = (0..n).find(|&i| e.bundle(i).rank() != 1) {
        return Err(Error::RankNotOne {
            vertex: q.vertex_name(i).to_owned(),
            rank: e.bundle(i).rank(),
        });
    }
    if n >= usize::BITS as usize - 1 {
        return Err(Error::InvalidType(format!(
            "{n} vertices is too many to enumerate"
        )));
    }
    let t = e.type_vector();
    let slope = alpha_slope(&t, alpha)?;

    let live: Vec<(usize, usize)> = q
        .arrows()
        .iter()
        .enumerate()
        .filter(|(ai, _)| !e.map(*ai).is_zero())
        .map(|(_, a)| (a.tail, a.head))
        .collect();
    let full = (1usize << n) - 1;

    let mut best: Option<(Rational, usize)> = None;
    for mask in 1..full {
        let closed = live
            .iter()
            .all(|&(t, h)| mask & (1 << t) == 0 || mask & (1 << h) != 0);
        if !closed {
            continue;
        }
        let members: Vec<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
        let deg: Rational = members
            .iter()
            .map(|&i| alpha.weight(i) + int(e.bundle(i).degree()))
            .sum();
        let mu = deg / int(members.len() as i64);
        // Ties go to fewer vertices, then the lexicographically first vertex list.
        let better = match &best {
            None => true,
            Some((b, bm)) => {
                mu > *b
                    || (mu == *b
                        && (mask.count_ones(), vertex_list(mask, n))
                            < (bm.count_ones(), vertex_list(*bm, n)))
            }
        };
        if better {
            best = Some((mu, mask));
        }
    }

    let witness = best.map(|(mu, mask)| {
        let vs = vertex_list(mask, n);
        let subtype = TypeVector::new(
            (0..n)
                .map(|i| {
                    if vs.contains(&i) {
                        e.bundle(i).vertex_type()
                    } else {
                        VertexType::ZERO
                    }
                })
                .collect(),
        )
        .expect("nonzero subtype");
        SubobjectWitness {
            vertices: vs.iter().map(|&i| q.vertex_name(i).to_owned()).collect(),
            subtype,
            slope: mu,
        }
    });
    let stability = match &witness {
        Some(w) if w.slope > slope => BundleStability::Unstable,
        Some(w) if w.slope == slope => BundleStability::StrictlySemistable,
        _ => BundleStability::Stable,
    };
    Ok(RankOneVerdict {
        stability,
        slope,
        witness,
    })
}

fn vertex_list(mask: usize, n: usize) -> Vec<usize> {
    (0..n).filter(|i| mask & (1 << i) != 0).collect()
}

/// A split sub-Q-bundle whose slope is at least that of the bundle.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SplitWitness {
    /// Chosen summand degrees per vertex.
    pub summands: Vec<Vec<i64>>,
    pub subtype: TypeVector,
    #[serde(with = "crate::rational::serde_str")]
    pub slope: Rational,
    #[serde(with = "crate::rational::serde_str")]
    pub excess: Rational,
    /// Slope strictly exceeds that of the bundle, so the bundle is unstable.
    pub strict: bool,
}

impl std::fmt::Display for SplitWitness {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "subtype {} slope {}",
            self.subtype,
            format_rational(&self.slope)
        )
    }
}

/// Upper bound on the total rank searched; `2^n` summand subsets are enumerated.
pub const MAX_SPLIT_SEARCH_RANK: usize = 20;

/// Searches sub-Q-bundles spanned by subsets of summands for one of slope `>= μ_α(E)`.
///
/// Returns the candidate of largest slope (ties broken by enumeration order). `None` does not
/// certify stability: non-split subbundles are not searched.
pub fn split_destabilizer_search(
    e: &QuiverBundleP1,
    alpha: &StabilityParameter,
) -> Result<Option<SplitWitness>> {
    let q = e.quiver();
    let n = q.vertex_count();
    alpha.check_len(n)?;
    let t = e.type_vector();
    let slope = alpha_slope(&t, alpha)?;
    let total = t.total_rank() as usize;
    if total > MAX_SPLIT_SEARCH_RANK {
        return Err(Error::InvalidType(format!(
            "total rank {total} exceeds the split search limit {MAX_SPLIT_SEARCH_RANK}"
        )));
    }
    // Global bit index of summand k at vertex i.
    let offsets: Vec<usize> = (0..n)
        .scan(0, |acc, i| {
            let o = *acc;
            *acc += e.bundle(i).rank();
            Some(o)
        })
        .collect();
    let bit = |i: usize, k: usize| 1usize << (offsets[i] + k);

    let mut best: Option<(Rational, usize)> = None;
    for mask in 1..(1usize << total) - 1 {
        let invariant = q.arrows().iter().enumerate().all(|(ai, a)| {
            let phi = e.map(ai);
            (0..phi.cols())
                .filter(|&k| mask & bit(a.tail, k) != 0)
                .all(|k| {
                    (0..phi.rows())
                        .filter(|&j| mask & bit(a.head, j) == 0)
                        .all(|j| phi.get(j, k).is_zero())
                })
        });
        if !invariant {
            continue;
        }
        let mut rank = 0i64;
        let mut deg = Rational::zero();
        for i in 0..n {
            for (k, d) in e.bundle(i).degrees().iter().enumerate() {
                if mask & bit(i, k) != 0 {
                    rank += 1;
                    deg += alpha.weight(i) + int(*d);
                }
            }
        }
        let mu = deg / int(rank);
        if best.as_ref().is_none_or(|(b, _)| mu > *b) {
            best = Some((mu, mask));
        }
    }

    Ok(best.filter(|(mu, _)| *mu >= slope).map(|(mu, mask)| {
        let summands: Vec<Vec<i64>> = (0..n)
            .map(|i| {
                e.bundle(i)
                    .degrees()
                    .iter()
                    .enumerate()
                    .filter(|(k, _)| mask & bit(i, *k) != 0)
                    .map(|(_, d)| *d)
                    .collect()
            })
            .collect();
        let subtype = TypeVector::new(
            summands
                .iter()
                .map(|s| VertexType::new(s.len() as u32, s.iter().sum()))
                .collect(),
        )
        .expect("nonzero subtype");
        let excess = &mu - &slope;
        SplitWitness {
            summands,
            subtype,
            strict: excess > Rational::zero(),
            slope: mu,
            excess,
        }
    }))
}
