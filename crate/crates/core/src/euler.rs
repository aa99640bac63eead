//! Euler form of two types and the expected moduli dimension.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::quiver::Quiver;
use crate::types::{GenusContext, TypeVector, VertexType};

/// `χ(E, F) = (1-g)·rk E·rk F + rk E·deg F − rk F·deg E` for bundles on a genus-`g` curve.
pub fn riemann_roch_chi(r: u32, d: i64, r2: u32, d2: i64, g: GenusContext) -> i64 {
    let (r, r2) = (r as i64, r2 as i64);
    (1 - g.genus() as i64) * r * r2 + r * d2 - r2 * d
}

fn chi_of(e: VertexType, f: VertexType, g: GenusContext) -> i64 {
    riemann_roch_chi(e.rank, e.degree, f.rank, f.degree, g)
}

/// `χ(E•, E'•)` together with its per-vertex and per-arrow pieces.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EulerSummary {
    pub chi: i64,
    pub vertex_contributions: Vec<i64>,
    pub arrow_contributions: Vec<i64>,
}

/// `χ(E•, E'•) = Σ_i χ(E_i, E'_i) − Σ_a χ(E_ta, E'_ha)`.
pub fn euler_form(
    q: &Quiver,
    t: &TypeVector,
    t2: &TypeVector,
    g: GenusContext,
) -> Result<EulerSummary> {
    t.check_len(q.vertex_count())?;
    t2.check_len(q.vertex_count())?;
    let vertex_contributions: Vec<i64> = t
        .entries()
        .iter()
        .zip(t2.entries())
        .map(|(&e, &f)| chi_of(e, f, g))
        .collect();
    let arrow_contributions: Vec<i64> = q
        .arrows()
        .iter()
        .map(|a| chi_of(t.entries()[a.tail], t2.entries()[a.head], g))
        .collect();
    let chi = vertex_contributions.iter().sum::<i64>() - arrow_contributions.iter().sum::<i64>();
    Ok(EulerSummary {
        chi,
        vertex_contributions,
        arrow_contributions,
    })
}

/// `1 − χ(E•, E•)`, the dimension of the moduli space at a smooth point.
pub fn expected_dimension(q: &Quiver, t: &TypeVector, g: GenusContext) -> Result<i64> {
    t.check_len(q.vertex_count())?;
    if t.total_rank() == 0 {
        return Err(Error::ZeroTotalRank);
    }
    Ok(1 - euler_form(q, t, t, g)?.chi)
}

/// Checks `χ(E,E) = χ(E',E') + χ(E'',E'') + χ(E'',E') + χ(E',E'')` for `E` of type `t' + t''`.
pub fn extension_additivity_check(
    q: &Quiver,
    t1: &TypeVector,
    t2: &TypeVector,
    g: GenusContext,
) -> Result<bool> {
    let sum = t1.checked_add(t2)?;
    let chi = |a: &TypeVector, b: &TypeVector| euler_form(q, a, b, g).map(|s| s.chi);
    let whole = chi(&sum, &sum)?;
    let parts = chi(t1, t1)? + chi(t2, t2)? + chi(t2, t1)? + chi(t1, t2)?;
    Ok(whole == parts)
}
