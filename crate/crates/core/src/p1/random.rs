//! Seeded random genus-0 instances.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::quiver::Quiver;
use crate::rational::{ratio, Rational};

use super::bundle::QuiverBundleP1;
use super::poly::{map_certificate, space_dim, HomogPoly, PolyMatrix};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceLimits {
    pub max_vertices: usize,
    pub max_rank: u32,
    pub max_abs_degree: i64,
}

impl Default for InstanceLimits {
    fn default() -> Self {
        InstanceLimits {
            max_vertices: 3,
            max_rank: 3,
            max_abs_degree: 4,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum MapConstraint {
    #[default]
    None,
    Injective,
    GenericallySurjective,
    /// Each arrow map is injective or generically surjective (whichever the ranks allow).
    InjectiveOrGenericallySurjective,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct InstanceOptions {
    pub limits: InstanceLimits,
    pub constraint: MapConstraint,
    /// Return `(E, E)` instead of two independent bundles on the same quiver.
    pub self_pair: bool,
    pub allow_loops: bool,
}

impl Default for InstanceOptions {
    fn default() -> Self {
        InstanceOptions {
            limits: InstanceLimits::default(),
            constraint: MapConstraint::None,
            self_pair: false,
            allow_loops: true,
        }
    }
}

const MAP_ATTEMPTS: usize = 20;
const INSTANCE_ATTEMPTS: usize = 200;

fn random_coefficient(rng: &mut impl Rng) -> Rational {
    ratio(rng.gen_range(-3..=3), rng.gen_range(1..=2))
}

fn random_poly(rng: &mut impl Rng, degree: i64, zero_prob: f64) -> HomogPoly {
    if degree < 0 || rng.gen_bool(zero_prob) {
        return HomogPoly::zero(degree);
    }
    let coeffs = (0..space_dim(degree))
        .map(|_| random_coefficient(rng))
        .collect();
    HomogPoly::new(degree, coeffs).expect("length matches degree")
}

fn random_matrix(rng: &mut impl Rng, source: &[i64], target: &[i64], zero_prob: f64) -> PolyMatrix {
    let rows = target
        .iter()
        .map(|b| {
            source
                .iter()
                .map(|a| random_poly(rng, b - a, zero_prob))
                .collect()
        })
        .collect();
    PolyMatrix::from_rows(rows, source.len())
}

fn satisfies(phi: &PolyMatrix, c: MapConstraint) -> bool {
    let cert = map_certificate(phi);
    match c {
        MapConstraint::None => true,
        MapConstraint::Injective => cert.injective,
        MapConstraint::GenericallySurjective => cert.generically_surjective,
        MapConstraint::InjectiveOrGenericallySurjective => {
            cert.injective || cert.generically_surjective
        }
    }
}

/// Random arrow maps on fixed summands, honouring the constraint on every arrow.
pub fn random_bundle_on(
    rng: &mut impl Rng,
    quiver: &Quiver,
    summands: Vec<Vec<i64>>,
    constraint: MapConstraint,
) -> Result<QuiverBundleP1> {
    if summands.len() != quiver.vertex_count() {
        return Err(Error::VertexMismatch {
            expected: quiver.vertex_count(),
            found: summands.len(),
        });
    }
    let mut maps = Vec::with_capacity(quiver.arrows().len());
    for a in quiver.arrows() {
        let (src, tgt) = (&summands[a.tail], &summands[a.head]);
        let feasible = match constraint {
            MapConstraint::None => true,
            MapConstraint::Injective => src.len() <= tgt.len(),
            MapConstraint::GenericallySurjective => src.len() >= tgt.len(),
            MapConstraint::InjectiveOrGenericallySurjective => true,
        };
        if !feasible {
            return Err(Error::Unsatisfiable(format!(
                "arrow {}: ranks {} -> {} do not allow {constraint:?}",
                a.id,
                src.len(),
                tgt.len()
            )));
        }
        let zero_prob = if constraint == MapConstraint::None {
            0.3
        } else {
            0.1
        };
        let phi = (0..MAP_ATTEMPTS)
            .map(|_| random_matrix(rng, src, tgt, zero_prob))
            .find(|m| satisfies(m, constraint))
            .ok_or_else(|| {
                Error::Unsatisfiable(format!(
                    "arrow {}: no {constraint:?} map found for degrees {src:?} -> {tgt:?}",
                    a.id
                ))
            })?;
        maps.push(phi);
    }
    QuiverBundleP1::new(quiver.clone(), summands, maps)
}

/// [`random_bundle_on`] driven by a seed.
pub fn random_bundle_with_summands(
    seed: u64,
    quiver: &Quiver,
    summands: Vec<Vec<i64>>,
    constraint: MapConstraint,
) -> Result<QuiverBundleP1> {
    random_bundle_on(
        &mut ChaCha8Rng::seed_from_u64(seed),
        quiver,
        summands,
        constraint,
    )
}

fn random_quiver(rng: &mut impl Rng, limits: &InstanceLimits, allow_loops: bool) -> Quiver {
    let n = rng.gen_range(1..=limits.max_vertices.max(1));
    let mut pairs = Vec::new();
    for t in 0..n {
        for h in 0..n {
            let p = if t == h {
                if allow_loops {
                    0.15
                } else {
                    0.0
                }
            } else {
                0.5
            };
            if rng.gen_bool(p) {
                pairs.push((t, h));
            }
        }
    }
    pairs.shuffle(rng);
    Quiver::from_indices(n, &pairs).expect("distinct ordered pairs")
}

fn random_summands(rng: &mut impl Rng, n: usize, limits: &InstanceLimits) -> Vec<Vec<i64>> {
    let d = limits.max_abs_degree;
    (0..n)
        .map(|_| {
            let r = rng.gen_range(1..=limits.max_rank.max(1));
            (0..r).map(|_| rng.gen_range(-d..=d)).collect()
        })
        .collect()
}

/// A deterministic pseudo-random pair `(E, E')` of quiver bundles on one random quiver.
///
/// Draws that cannot meet the map constraint are redrawn a bounded number of times.
pub fn random_instance(
    seed: u64,
    opts: &InstanceOptions,
) -> Result<(QuiverBundleP1, QuiverBundleP1)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let allow_loops = opts.allow_loops && opts.constraint == MapConstraint::None;
    let mut last = None;
    for _ in 0..INSTANCE_ATTEMPTS {
        let q = random_quiver(&mut rng, &opts.limits, allow_loops);
        let s = random_summands(&mut rng, q.vertex_count(), &opts.limits);
        let e = match random_bundle_on(&mut rng, &q, s, opts.constraint) {
            Ok(e) => e,
            Err(err @ Error::Unsatisfiable(_)) => {
                last = Some(err);
                continue;
            }
            Err(err) => return Err(err),
        };
        if opts.self_pair {
            return Ok((e.clone(), e));
        }
        let s2 = random_summands(&mut rng, q.vertex_count(), &opts.limits);
        match random_bundle_on(&mut rng, &q, s2, opts.constraint) {
            Ok(e2) => return Ok((e, e2)),
            Err(err @ Error::Unsatisfiable(_)) => last = Some(err),
            Err(err) => return Err(err),
        }
    }
    Err(last.unwrap_or_else(|| Error::Unsatisfiable("no instance drawn".into())))
}
