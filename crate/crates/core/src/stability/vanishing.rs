//! Hypotheses under which the second hypercohomology of the Hom complex vanishes.
//!
//! The four cases differ in what they need: the gap conditions are read off `α` and `g`, while
//! stability of the two bundles and properties of the arrow maps are facts the caller supplies
//! (for example from [`crate::p1::rank_one_stability`] or [`crate::p1::map_certificate`]).

use num_traits::Zero;
use serde::Serialize;

use super::smoothness::arrow_gap;
use crate::error::{Error, Result};
use crate::quiver::Quiver;
use crate::rational::{format_rational, int, Rational};
use crate::types::{GenusContext, StabilityParameter};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VanishingHypothesis {
    /// Arrows in `perturbed` need a weak gap plus stability for a perturbed parameter; all other
    /// arrows need a strict gap. `epsilon[k]` belongs to arrow `perturbed[k]`.
    MixedPerturbed {
        perturbed: Vec<usize>,
        epsilon: Vec<Rational>,
    },
    /// Strict gap `α_ta − α_ha > 2g − 2` on every arrow.
    StrictGapAll,
    /// Weak gap on every arrow, one bundle stable and the other semistable of the same slope.
    WeakGapWithStable,
    /// Every arrow map is injective or generically surjective.
    MapsInjectiveOrGenericallySurjective,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum VanishingClause {
    MixedPerturbed,
    StrictGapAll,
    WeakGapWithStable,
    MapsInjectiveOrGenericallySurjective,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BundleStability {
    Unstable,
    StrictlySemistable,
    Stable,
}

impl BundleStability {
    pub fn is_semistable(self) -> bool {
        self >= BundleStability::StrictlySemistable
    }

    pub fn is_stable(self) -> bool {
        self == BundleStability::Stable
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ArrowMapFact {
    pub injective: bool,
    pub generically_surjective: bool,
}

/// Caller-supplied facts about the pair `(E•, E'•)`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct StabilityFacts {
    /// α-stability of `E•` and `E'•` and whether their α-slopes agree.
    pub pair: Option<(BundleStability, BundleStability, bool)>,
    /// Per arrow index: one of the bundles is stable for `α − ε_ta·u_ta`.
    pub perturbed_stable: Option<Vec<bool>>,
    /// Per arrow index.
    pub arrow_maps: Option<Vec<ArrowMapFact>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VanishingVerdict {
    pub holds: bool,
    pub clause: VanishingClause,
    pub justification: Vec<String>,
}

struct Trace {
    holds: bool,
    lines: Vec<String>,
}

impl Trace {
    fn new() -> Self {
        Trace {
            holds: true,
            lines: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, line: String) {
        self.holds &= ok;
        self.lines
            .push(format!("{} {line}", if ok { "ok:" } else { "FAILS:" }));
    }

    fn note(&mut self, line: &str) {
        self.lines.push(format!("note: {line}"));
    }
}

fn gap_check(
    trace: &mut Trace,
    q: &Quiver,
    a: usize,
    alpha: &StabilityParameter,
    g: GenusContext,
    strict: bool,
) {
    let arrow = &q.arrows()[a];
    let gap = arrow_gap(arrow, alpha);
    let bound = int(g.canonical_degree());
    let (ok, op) = if strict {
        (gap > bound, ">")
    } else {
        (gap >= bound, ">=")
    };
    trace.check(
        ok,
        format!(
            "arrow {}: gap {} {op} {}",
            arrow.id,
            format_rational(&gap),
            g.canonical_degree()
        ),
    );
}

fn semistable_same_slope(trace: &mut Trace, pair: (BundleStability, BundleStability, bool)) {
    let (e, e2, same) = pair;
    trace.check(
        e.is_semistable() && e2.is_semistable(),
        "both bundles α-semistable".into(),
    );
    trace.check(same, "equal α-slopes".into());
}

/// Decides whether the selected vanishing hypothesis holds for the supplied data.
pub fn h2_vanishing_hypotheses(
    q: &Quiver,
    alpha: &StabilityParameter,
    g: GenusContext,
    hyp: &VanishingHypothesis,
    facts: &StabilityFacts,
) -> Result<VanishingVerdict> {
    alpha.check_len(q.vertex_count())?;
    let n_arrows = q.arrows().len();
    let mut trace = Trace::new();

    let clause = match hyp {
        VanishingHypothesis::StrictGapAll => {
            match facts.pair {
                Some(pair) => semistable_same_slope(&mut trace, pair),
                None => trace.note("semistability and equal slopes assumed (no facts supplied)"),
            }
            for a in 0..n_arrows {
                gap_check(&mut trace, q, a, alpha, g, true);
            }
            VanishingClause::StrictGapAll
        }
        VanishingHypothesis::WeakGapWithStable => {
            let (e, e2, same) = facts.pair.ok_or_else(|| {
                Error::NotCheckable("stability of both bundles must be supplied".into())
            })?;
            trace.check(
                (e.is_stable() && e2.is_semistable()) || (e2.is_stable() && e.is_semistable()),
                "one bundle α-stable, the other α-semistable".into(),
            );
            trace.check(same, "equal α-slopes".into());
            for a in 0..n_arrows {
                gap_check(&mut trace, q, a, alpha, g, false);
            }
            VanishingClause::WeakGapWithStable
        }
        VanishingHypothesis::MapsInjectiveOrGenericallySurjective => {
            let maps = facts.arrow_maps.as_ref().ok_or_else(|| {
                Error::NotCheckable(
                    "injectivity/generic surjectivity of the maps must be supplied".into(),
                )
            })?;
            if maps.len() != n_arrows {
                return Err(Error::NotCheckable(format!(
                    "map facts for {} arrows, quiver has {n_arrows}",
                    maps.len()
                )));
            }
            for (arrow, m) in q.arrows().iter().zip(maps) {
                let how = match (m.injective, m.generically_surjective) {
                    (true, _) => "injective",
                    (false, true) => "generically surjective",
                    (false, false) => "neither injective nor generically surjective",
                };
                trace.check(
                    m.injective || m.generically_surjective,
                    format!("arrow {}: map {how}", arrow.id),
                );
            }
            VanishingClause::MapsInjectiveOrGenericallySurjective
        }
        VanishingHypothesis::MixedPerturbed { perturbed, epsilon } => {
            if perturbed.len() != epsilon.len() {
                return Err(Error::InvalidHypothesis("one ε per perturbed arrow".into()));
            }
            if let Some(e) = epsilon.iter().find(|e| *e < &Rational::zero()) {
                return Err(Error::InvalidHypothesis(format!(
                    "ε must be non-negative, got {}",
                    format_rational(e)
                )));
            }
            if let Some(&a) = perturbed.iter().find(|&&a| a >= n_arrows) {
                return Err(Error::InvalidHypothesis(format!("no arrow with index {a}")));
            }
            let pair = facts.pair.ok_or_else(|| {
                Error::NotCheckable("stability of both bundles must be supplied".into())
            })?;
            let pert = facts.perturbed_stable.as_ref().ok_or_else(|| {
                Error::NotCheckable("perturbed-parameter stability must be supplied".into())
            })?;
            if pert.len() != n_arrows {
                return Err(Error::NotCheckable(format!(
                    "perturbed stability facts for {} arrows, quiver has {n_arrows}",
                    pert.len()
                )));
            }
            semistable_same_slope(&mut trace, pair);
            for (a, &stable) in pert.iter().enumerate() {
                match perturbed.iter().position(|&p| p == a) {
                    Some(k) => {
                        let arrow = &q.arrows()[a];
                        trace.check(
                            stable,
                            format!(
                                "arrow {}: a bundle is stable for α − {}·u_{}",
                                arrow.id,
                                format_rational(&epsilon[k]),
                                q.vertex_name(arrow.tail)
                            ),
                        );
                        gap_check(&mut trace, q, a, alpha, g, false);
                    }
                    None => gap_check(&mut trace, q, a, alpha, g, true),
                }
            }
            VanishingClause::MixedPerturbed
        }
    };

    Ok(VanishingVerdict {
        holds: trace.holds,
        clause,
        justification: trace.lines,
    })
}
