//! Morphisms of quiver bundles, solved directly from the commuting squares.
//!
//! This deliberately avoids the differential `d⁰`: the unknowns are the coefficients of the
//! vertex maps `f_i`, and each square `φ'_a ∘ f_ta = f_ha ∘ φ_a` is imposed by evaluating both
//! sides at `(x0, x1) = (1, t)` for `t = 0, …, n`, which pins down a homogeneous polynomial of
//! degree `n`. The resulting system is solved by Gauss–Jordan elimination over `Q`.

use num_traits::Zero;

use crate::error::Result;
use crate::linalg::{nullspace, Matrix};
use crate::rational::{int, Rational};

use super::bundle::QuiverBundleP1;
use super::poly::{space_dim, HomogPoly, PolyMatrix};

/// `Hom(E•, E'•)`, with a basis of morphisms `(f_i)_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomSpace {
    pub dim: usize,
    pub basis: Vec<Vec<PolyMatrix>>,
}

struct Unknowns {
    /// `[vertex][j][k] -> first unknown` for entry `f_i[j, k]` of degree `b_j − a_k`.
    start: Vec<Vec<Vec<usize>>>,
    count: usize,
}

impl Unknowns {
    fn new(e: &QuiverBundleP1, e2: &QuiverBundleP1) -> Self {
        let mut count = 0;
        let start = (0..e.quiver().vertex_count())
            .map(|i| {
                let (src, tgt) = (e.bundle(i).degrees(), e2.bundle(i).degrees());
                tgt.iter()
                    .map(|b| {
                        src.iter()
                            .map(|a| {
                                let s = count;
                                count += space_dim(b - a);
                                s
                            })
                            .collect()
                    })
                    .collect()
            })
            .collect();
        Unknowns { start, count }
    }
}

fn powers(t: &Rational, n: usize) -> Vec<Rational> {
    let mut out = Vec::with_capacity(n);
    let mut p = int(1);
    for _ in 0..n {
        out.push(p.clone());
        p *= t;
    }
    out
}

/// Solves `φ'_a ∘ f_ta = f_ha ∘ φ_a` for all arrows.
pub fn hom_intertwiners(e: &QuiverBundleP1, e2: &QuiverBundleP1) -> Result<HomSpace> {
    e.check_same_quiver(e2)?;
    let q = e.quiver();
    let unknowns = Unknowns::new(e, e2);
    let mut rows: Vec<Vec<Rational>> = Vec::new();

    for (ai, arrow) in q.arrows().iter().enumerate() {
        let (ta, ha) = (arrow.tail, arrow.head);
        let (phi, phi2) = (e.map(ai), e2.map(ai));
        let src_t = e.bundle(ta).degrees();
        let src_h = e.bundle(ha).degrees();
        let tgt_t = e2.bundle(ta).degrees();
        let tgt_h = e2.bundle(ha).degrees();
        for (j, b) in tgt_h.iter().enumerate() {
            for (k, a) in src_t.iter().enumerate() {
                let n = b - a;
                if n < 0 {
                    continue;
                }
                for t in 0..=n {
                    let t = int(t);
                    let mut row = vec![Rational::zero(); unknowns.count];
                    // f_ha[j, l] · φ[l, k]
                    for (l, al) in src_h.iter().enumerate() {
                        let deg = space_dim(b - al);
                        let value = phi.get(l, k).eval_affine(&t);
                        if value.is_zero() {
                            continue;
                        }
                        let base = unknowns.start[ha][j][l];
                        for (m, tp) in powers(&t, deg).iter().enumerate() {
                            row[base + m] += &value * tp;
                        }
                    }
                    // − φ'[j, l] · f_ta[l, k]
                    for (l, bl) in tgt_t.iter().enumerate() {
                        let deg = space_dim(bl - a);
                        let value = phi2.get(j, l).eval_affine(&t);
                        if value.is_zero() {
                            continue;
                        }
                        let base = unknowns.start[ta][l][k];
                        for (m, tp) in powers(&t, deg).iter().enumerate() {
                            row[base + m] -= &value * tp;
                        }
                    }
                    if row.iter().any(|x| !x.is_zero()) {
                        rows.push(row);
                    }
                }
            }
        }
    }

    let system = Matrix::from_rows(rows, unknowns.count);
    let basis = nullspace(&system)
        .into_iter()
        .map(|v| {
            (0..q.vertex_count())
                .map(|i| {
                    let (src, tgt) = (e.bundle(i).degrees(), e2.bundle(i).degrees());
                    let rows = tgt
                        .iter()
                        .enumerate()
                        .map(|(j, b)| {
                            src.iter()
                                .enumerate()
                                .map(|(k, a)| {
                                    let s = unknowns.start[i][j][k];
                                    let n = b - a;
                                    HomogPoly::new(n, v[s..s + space_dim(n)].to_vec())
                                        .expect("unknown block has the right length")
                                })
                                .collect()
                        })
                        .collect();
                    PolyMatrix::from_rows(rows, src.len())
                })
                .collect()
        })
        .collect::<Vec<_>>();
    Ok(HomSpace {
        dim: basis.len(),
        basis,
    })
}

/// Whether `(f_i)_i` commutes with the arrow maps, checked by polynomial multiplication.
pub fn is_morphism(e: &QuiverBundleP1, e2: &QuiverBundleP1, f: &[PolyMatrix]) -> bool {
    e.quiver().arrows().iter().enumerate().all(|(ai, arrow)| {
        let src = e.bundle(arrow.tail).degrees();
        let tgt = e2.bundle(arrow.head).degrees();
        let mut lhs = PolyMatrix::zero(src, tgt);
        let mut rhs = PolyMatrix::zero(src, tgt);
        // Entry-wise sums so that rank-zero intermediate bundles need no special case.
        for j in 0..tgt.len() {
            for k in 0..src.len() {
                for l in 0..e.bundle(arrow.head).rank() {
                    lhs.get_mut(j, k)
                        .add_assign(&f[arrow.head].get(j, l).mul(e.map(ai).get(l, k)));
                }
                for l in 0..e2.bundle(arrow.tail).rank() {
                    rhs.get_mut(j, k)
                        .add_assign(&e2.map(ai).get(j, l).mul(f[arrow.tail].get(l, k)));
                }
            }
        }
        lhs == rhs
    })
}
