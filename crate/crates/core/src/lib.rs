//! Numerical invariants of moduli spaces of quiver bundles on smooth projective curves.
//!
//! The crate is organised bottom-up:
//!
//! * [`quiver`] and [`types`] hold the combinatorial data: quivers, discrete types `(rank, degree)`
//!   per vertex, stability parameters, and the α-degree / α-slope arithmetic.
//! * [`euler`] evaluates the Euler form of two types through Riemann–Roch and the expected
//!   dimension `1 - χ(E, E)` of the moduli space at a smooth point.
//! * [`stability`] holds the parameter-space predicates (smoothness region, H²-vanishing
//!   hypotheses) and the wall-and-chamber analysis.
//! * [`p1`] is an exact verification engine on the projective line: split quiver bundles with
//!   polynomial arrow maps, the hypercohomology of the two-term Hom complex, Serre duality, and
//!   stability in the rank-one case.
//! * [`problem`] and [`report`] implement the JSON problem format and the command reports used by
//!   the `quiver-moduli` binary.
//!
//! All arithmetic is exact: stability weights are rationals and every rank is computed by exact
//! elimination.

pub mod error;
pub mod euler;
pub mod linalg;
pub mod p1;
pub mod problem;
pub mod quiver;
pub mod rational;
pub mod report;
pub mod stability;
pub mod types;

pub use error::{Error, Result};
pub use quiver::{Arrow, Quiver, ValidationReport, Violation};
pub use rational::Rational;
pub use types::{DegreeWindow, GenusContext, StabilityParameter, TypeVector, VertexType};
