//! Parameter-space predicates and wall-and-chamber analysis.

mod smoothness;
mod vanishing;
mod walls;

pub use smoothness::{arrow_gap, smoothness_region_check, ArrowGap, SmoothnessReport};
pub use vanishing::{
    h2_vanishing_hypotheses, ArrowMapFact, BundleStability, StabilityFacts, VanishingClause,
    VanishingHypothesis, VanishingVerdict,
};
pub use walls::{
    classify_parameter, enumerate_walls, potential_destabilizers, sort_walls, wall_from_subtype,
    Candidate, Destabilizers, ParameterClass, Wall, WallKind, WallSet,
};
