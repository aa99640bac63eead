use num_traits::Zero;
use serde::Serialize;

use crate::quiver::{Arrow, Quiver};
use crate::rational::{int, Rational};
use crate::types::{GenusContext, StabilityParameter};

/// `α_ta − α_ha`; zero for a loop.
pub fn arrow_gap(arrow: &Arrow, alpha: &StabilityParameter) -> Rational {
    if arrow.is_loop() {
        Rational::zero()
    } else {
        alpha.weight(arrow.tail) - alpha.weight(arrow.head)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ArrowGap {
    pub arrow: String,
    #[serde(with = "crate::rational::serde_str")]
    pub gap: Rational,
    pub satisfied: bool,
    /// The gap equals `2g − 2` exactly.
    pub boundary: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SmoothnessReport {
    pub bound: i64,
    pub arrows: Vec<ArrowGap>,
    pub smooth: bool,
}

impl SmoothnessReport {
    pub fn on_boundary(&self) -> bool {
        self.smooth && self.arrows.iter().any(|a| a.boundary)
    }
}

/// Tests `α_ta − α_ha ≥ 2g − 2` on every arrow; equality counts as satisfied.
///
/// Panics if `alpha` is not defined on the vertices of `q`.
pub fn smoothness_region_check(
    q: &Quiver,
    alpha: &StabilityParameter,
    g: GenusContext,
) -> SmoothnessReport {
    assert_eq!(
        alpha.len(),
        q.vertex_count(),
        "stability parameter over the wrong vertex set"
    );
    let bound = g.canonical_degree();
    let b = int(bound);
    let arrows: Vec<ArrowGap> = q
        .arrows()
        .iter()
        .map(|a| {
            let gap = arrow_gap(a, alpha);
            ArrowGap {
                arrow: a.id.clone(),
                satisfied: gap >= b,
                boundary: gap == b,
                gap,
            }
        })
        .collect();
    let smooth = arrows.iter().all(|a| a.satisfied);
    SmoothnessReport {
        bound,
        arrows,
        smooth,
    }
}
