use thiserror::Error;

use crate::quiver::Violation;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid quiver: {}", join_violations(.0))]
    InvalidQuiver(Vec<Violation>),

    #[error("vertex-set mismatch: expected {expected} vertices, found {found}")]
    VertexMismatch { expected: usize, found: usize },

    #[error("invalid type: {0}")]
    InvalidType(String),

    #[error("slope/dimension undefined: total rank is zero")]
    ZeroTotalRank,

    #[error("hypothesis not checkable: {0}")]
    NotCheckable(String),

    #[error("invalid hypothesis: {0}")]
    InvalidHypothesis(String),

    #[error("quiver bundles live on different quivers")]
    QuiverMismatch,

    #[error("malformed bundle: {0}")]
    MalformedBundle(String),

    #[error("vertex {vertex} has rank {rank}; rank-one stability needs rank 1 everywhere")]
    RankNotOne { vertex: String, rank: usize },

    #[error("unsatisfiable constraint: {0}")]
    Unsatisfiable(String),

    #[error("parse error: {0}")]
    Parse(String),
}

fn join_violations(vs: &[Violation]) -> String {
    vs.iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join("; ")
}
