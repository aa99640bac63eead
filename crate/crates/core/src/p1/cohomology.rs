//! Hypercohomology of the Hom complex `F⁰ → F¹` for split quiver bundles on the line.
//!
//! `H⁰(O(n))` has the monomial basis `x0^(n−i) x1^i`. `H¹(O(n))` is computed on the two-chart
//! cover `{x0 ≠ 0}, {x1 ≠ 0}`: its classes are the Laurent monomials `x0^i x1^j` with `i, j ≤ −1`
//! and `i + j = n`, indexed here by `s = −1 − j`. Multiplying a class by a polynomial multiplies
//! monomials and drops every product with a non-negative exponent.

use num_traits::Zero;
use serde::Serialize;

use crate::error::Result;
use crate::linalg::{rank, Matrix};
use crate::rational::Rational;

use super::bundle::QuiverBundleP1;
use super::poly::{space_dim, HomogPoly};

/// `dim Hom(O(a), O(b)) = max(b − a + 1, 0)`.
pub fn hom_dim(a: i64, b: i64) -> usize {
    space_dim(b - a)
}

/// `dim Ext¹(O(a), O(b)) = h¹(O(b − a)) = max(a − b − 1, 0)`.
pub fn ext1_dim(a: i64, b: i64) -> usize {
    (a - b - 1).max(0) as usize
}

/// Which sheaf cohomology group a differential acts on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CohomologyDegree {
    Zero,
    One,
}

impl CohomologyDegree {
    /// Dimension of `H^p(O(n))`.
    pub fn dim(self, n: i64) -> usize {
        match self {
            CohomologyDegree::Zero => space_dim(n),
            CohomologyDegree::One => (-n - 1).max(0) as usize,
        }
    }

    /// Index of basis element `idx` times `x0^(m−k) x1^k`, or `None` if the product vanishes.
    fn multiply(self, idx: usize, k: usize, target_dim: usize) -> Option<usize> {
        let s = match self {
            CohomologyDegree::Zero => idx + k,
            CohomologyDegree::One => idx.checked_sub(k)?,
        };
        (s < target_dim).then_some(s)
    }
}

/// Offsets of the blocks `Hom(O(a_k), O(b_j))` inside a direct sum of Hom spaces.
#[derive(Debug, Clone)]
pub(crate) struct BlockLayout {
    /// `[group][j][k] -> (offset, dim)`.
    blocks: Vec<Vec<Vec<(usize, usize)>>>,
    total: usize,
}

impl BlockLayout {
    /// Each group is `(source summand degrees, target summand degrees)`.
    pub(crate) fn new<'a>(
        groups: impl IntoIterator<Item = (&'a [i64], &'a [i64])>,
        deg: CohomologyDegree,
        twist: i64,
    ) -> Self {
        let mut total = 0;
        let blocks = groups
            .into_iter()
            .map(|(src, tgt)| {
                tgt.iter()
                    .map(|b| {
                        src.iter()
                            .map(|a| {
                                let dim = deg.dim(b + twist - a);
                                let block = (total, dim);
                                total += dim;
                                block
                            })
                            .collect()
                    })
                    .collect()
            })
            .collect();
        BlockLayout { blocks, total }
    }

    pub(crate) fn block(&self, group: usize, j: usize, k: usize) -> (usize, usize) {
        self.blocks[group][j][k]
    }

    pub(crate) fn group_range(&self, group: usize) -> std::ops::Range<usize> {
        let first = self.blocks[group].iter().flatten().next();
        let last = self.blocks[group].iter().flatten().last();
        match (first, last) {
            (Some(&(s, _)), Some(&(o, d))) => s..o + d,
            _ => {
                // Empty group: locate its position from the neighbours.
                let start = self.blocks[..group]
                    .iter()
                    .flat_map(|g| g.iter().flatten())
                    .last()
                    .map_or(0, |&(o, d)| o + d);
                start..start
            }
        }
    }

    pub(crate) fn total(&self) -> usize {
        self.total
    }
}

/// Adds `sign · poly · e_idx` (with `e_idx` in a block of `deg`) into column `col`.
fn accumulate(
    m: &mut Matrix,
    col: usize,
    idx: usize,
    poly: &HomogPoly,
    (offset, dim): (usize, usize),
    deg: CohomologyDegree,
    negate: bool,
) {
    for (k, c) in poly.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        if let Some(s) = deg.multiply(idx, k, dim) {
            let v: Rational = if negate { -c.clone() } else { c.clone() };
            m.add_to(offset + s, col, &v);
        }
    }
}

/// The map `H^p(F⁰) → H^p(F¹)` with its codomain layout.
#[derive(Debug, Clone)]
pub struct Differential {
    pub matrix: Matrix,
    pub(crate) codomain: BlockLayout,
}

/// `ψ ↦ (ψ_ha ∘ φ_a − φ'_a ∘ ψ_ta)_a` on `H^p`, for `ψ_i ∈ H^p(Hom(E_i, E'_i))`.
pub fn differential(
    e: &QuiverBundleP1,
    e2: &QuiverBundleP1,
    deg: CohomologyDegree,
) -> Result<Differential> {
    e.check_same_quiver(e2)?;
    let q = e.quiver();
    let domain = BlockLayout::new(
        (0..q.vertex_count()).map(|i| (e.bundle(i).degrees(), e2.bundle(i).degrees())),
        deg,
        0,
    );
    let codomain = BlockLayout::new(
        q.arrows()
            .iter()
            .map(|a| (e.bundle(a.tail).degrees(), e2.bundle(a.head).degrees())),
        deg,
        0,
    );
    let mut matrix = Matrix::zeros(codomain.total(), domain.total());

    for i in 0..q.vertex_count() {
        let (src, tgt) = (e.bundle(i).degrees(), e2.bundle(i).degrees());
        for j in 0..tgt.len() {
            for k in 0..src.len() {
                let (off, dim) = domain.block(i, j, k);
                for s in 0..dim {
                    let col = off + s;
                    for (ai, arrow) in q.arrows().iter().enumerate() {
                        if arrow.head == i {
                            // ψ_ha ∘ φ_a: row j of the result picks up ψ[j,k]·φ[k,k'].
                            let phi = e.map(ai);
                            for kk in 0..phi.cols() {
                                let block = codomain.block(ai, j, kk);
                                accumulate(&mut matrix, col, s, phi.get(k, kk), block, deg, false);
                            }
                        }
                        if arrow.tail == i {
                            // −φ'_a ∘ ψ_ta: column k of the result picks up φ'[j',j]·ψ[j,k].
                            let phi2 = e2.map(ai);
                            for jj in 0..phi2.rows() {
                                let block = codomain.block(ai, jj, k);
                                accumulate(&mut matrix, col, s, phi2.get(jj, j), block, deg, true);
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(Differential { matrix, codomain })
}

/// `d⁰ : ⊕_i Hom(E_i, E'_i) → ⊕_a Hom(E_ta, E'_ha)` on monomial bases.
pub fn build_d0(e: &QuiverBundleP1, e2: &QuiverBundleP1) -> Result<Matrix> {
    Ok(differential(e, e2, CohomologyDegree::Zero)?.matrix)
}

/// `d¹ : ⊕_i Ext¹(E_i, E'_i) → ⊕_a Ext¹(E_ta, E'_ha)` on Čech bases.
pub fn build_d1(e: &QuiverBundleP1, e2: &QuiverBundleP1) -> Result<Matrix> {
    Ok(differential(e, e2, CohomologyDegree::One)?.matrix)
}

/// Dimensions of the six-term sequence
/// `0 → ℍ⁰ → H⁰(F⁰) → H⁰(F¹) → ℍ¹ → H¹(F⁰) → H¹(F¹) → ℍ² → 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[allow(non_snake_case)]
pub struct HypercohProfile {
    pub h0F0: usize,
    pub h0F1: usize,
    pub h1F0: usize,
    pub h1F1: usize,
    pub H0: usize,
    pub H1: usize,
    pub H2: usize,
    pub chi: i64,
}

impl HypercohProfile {
    /// `ℍ⁰ − h⁰F⁰ + h⁰F¹ − ℍ¹ + h¹F⁰ − h¹F¹ + ℍ² = 0`.
    pub fn alternating_sum(&self) -> i64 {
        self.H0 as i64 - self.h0F0 as i64 + self.h0F1 as i64 - self.H1 as i64 + self.h1F0 as i64
            - self.h1F1 as i64
            + self.H2 as i64
    }

    pub fn h(&self) -> (usize, usize, usize) {
        (self.H0, self.H1, self.H2)
    }
}

#[allow(non_snake_case)]
pub fn hypercoh_profile(e: &QuiverBundleP1, e2: &QuiverBundleP1) -> Result<HypercohProfile> {
    let d0 = build_d0(e, e2)?;
    let d1 = build_d1(e, e2)?;
    let (rk0, rk1) = (rank(&d0), rank(&d1));
    let (h0F0, h0F1, h1F0, h1F1) = (d0.cols(), d0.rows(), d1.cols(), d1.rows());
    let H0 = h0F0 - rk0;
    let H1 = (h0F1 - rk0) + (h1F0 - rk1);
    let H2 = h1F1 - rk1;
    Ok(HypercohProfile {
        h0F0,
        h0F1,
        h1F0,
        h1F1,
        H0,
        H1,
        H2,
        chi: H0 as i64 - H1 as i64 + H2 as i64,
    })
}

/// Both sides of Serre duality at one arrow.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SerreDualDims {
    /// `dim ker P_a` with `P_a(ξ) = ((φ_a ⊗ id_K) ∘ ξ, ξ ∘ φ'_a)`.
    pub kernel_pa: usize,
    /// `dim coker d¹_a`, the arrow-`a` component of `d¹`.
    pub coker_d1: usize,
}

/// Canonical degree on the line.
const K: i64 = -2;

/// Computes `P_a : Hom(E'_ha, E_ta ⊗ K) → Hom(E'_ha, E_ha ⊗ K) ⊕ Hom(E'_ta, E_ta ⊗ K)` on global
/// sections and the cokernel of `d¹` restricted to arrow `a`.
///
/// For a loop the two targets coincide and the transpose of `d¹_a` is `ξ ↦ φ∘ξ − ξ∘φ'`.
pub fn serre_dual_pa(
    e: &QuiverBundleP1,
    e2: &QuiverBundleP1,
    arrow: usize,
) -> Result<SerreDualDims> {
    e.check_same_quiver(e2)?;
    let a = &e.quiver().arrows()[arrow];
    let (phi, phi2) = (e.map(arrow), e2.map(arrow));
    let zero = CohomologyDegree::Zero;

    let source = BlockLayout::new(
        [(e2.bundle(a.head).degrees(), e.bundle(a.tail).degrees())],
        zero,
        K,
    );
    let mut groups = vec![(e2.bundle(a.head).degrees(), e.bundle(a.head).degrees())];
    if !a.is_loop() {
        groups.push((e2.bundle(a.tail).degrees(), e.bundle(a.tail).degrees()));
    }
    let target = BlockLayout::new(groups, zero, K);
    let second = if a.is_loop() { 0 } else { 1 };

    let mut m = Matrix::zeros(target.total(), source.total());
    let (rows, cols) = (e.bundle(a.tail).rank(), e2.bundle(a.head).rank());
    for k in 0..rows {
        for j in 0..cols {
            let (off, dim) = source.block(0, k, j);
            for s in 0..dim {
                let col = off + s;
                // (φ ∘ ξ)[l, j] = Σ_k φ[l, k] ξ[k, j]
                for l in 0..phi.rows() {
                    accumulate(
                        &mut m,
                        col,
                        s,
                        phi.get(l, k),
                        target.block(0, l, j),
                        zero,
                        false,
                    );
                }
                // (ξ ∘ φ')[k, n] = Σ_j ξ[k, j] φ'[j, n]
                for n in 0..phi2.cols() {
                    let block = target.block(second, k, n);
                    accumulate(&mut m, col, s, phi2.get(j, n), block, zero, a.is_loop());
                }
            }
        }
    }
    let kernel_pa = source.total() - rank(&m);

    let d1 = differential(e, e2, CohomologyDegree::One)?;
    let range: Vec<usize> = d1.codomain.group_range(arrow).collect();
    let coker_d1 = range.len() - rank(&d1.matrix.select_rows(&range));
    Ok(SerreDualDims {
        kernel_pa,
        coker_d1,
    })
}
