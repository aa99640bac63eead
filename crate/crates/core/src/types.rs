//! Discrete types, stability parameters and slope arithmetic.

use std::fmt;
use std::ops::{Add, RangeInclusive};

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{format_rational, int, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct VertexType {
    pub rank: u32,
    pub degree: i64,
}

impl VertexType {
    pub const ZERO: VertexType = VertexType { rank: 0, degree: 0 };

    pub fn new(rank: u32, degree: i64) -> Self {
        VertexType { rank, degree }
    }
}

/// Per-vertex `(rank, degree)` pairs: the discrete invariant of a quiver bundle.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct TypeVector(Vec<VertexType>);

impl TypeVector {
    /// Fails when the total rank is zero but some degree is not.
    pub fn new(entries: Vec<VertexType>) -> Result<Self> {
        let t = TypeVector(entries);
        if t.total_rank() == 0 && t.0.iter().any(|e| e.degree != 0) {
            return Err(Error::InvalidType(format!(
                "type {t} has total rank 0 but nonzero degree"
            )));
        }
        Ok(t)
    }

    pub fn from_pairs(pairs: &[(u32, i64)]) -> Result<Self> {
        TypeVector::new(pairs.iter().map(|&(r, d)| VertexType::new(r, d)).collect())
    }

    pub fn zero(n: usize) -> Self {
        TypeVector(vec![VertexType::ZERO; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|e| *e == VertexType::ZERO)
    }

    pub fn entries(&self) -> &[VertexType] {
        &self.0
    }

    pub fn rank(&self, i: usize) -> u32 {
        self.0[i].rank
    }

    pub fn degree(&self, i: usize) -> i64 {
        self.0[i].degree
    }

    pub fn total_rank(&self) -> i64 {
        self.0.iter().map(|e| e.rank as i64).sum()
    }

    pub fn total_degree(&self) -> i64 {
        self.0.iter().map(|e| e.degree).sum()
    }

    pub(crate) fn check_len(&self, n: usize) -> Result<()> {
        if self.len() == n {
            Ok(())
        } else {
            Err(Error::VertexMismatch {
                expected: n,
                found: self.len(),
            })
        }
    }

    /// Componentwise sum.
    pub fn checked_add(&self, other: &TypeVector) -> Result<TypeVector> {
        other.check_len(self.len())?;
        Ok(TypeVector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| VertexType::new(a.rank + b.rank, a.degree + b.degree))
                .collect(),
        ))
    }
}

impl Add for &TypeVector {
    type Output = TypeVector;

    /// Panics on length mismatch; see [`TypeVector::checked_add`].
    fn add(self, rhs: &TypeVector) -> TypeVector {
        self.checked_add(rhs)
            .expect("types over the same vertex set")
    }
}

impl fmt::Display for TypeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "({},{})", e.rank, e.degree)?;
        }
        write!(f, ")")
    }
}

/// Per-vertex rational weights `α`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct StabilityParameter(#[serde(with = "crate::rational::serde_str_vec")] Vec<Rational>);

impl StabilityParameter {
    pub fn new(weights: Vec<Rational>) -> Self {
        StabilityParameter(weights)
    }

    pub fn from_ints(weights: &[i64]) -> Self {
        StabilityParameter(weights.iter().map(|&w| int(w)).collect())
    }

    pub fn zero(n: usize) -> Self {
        StabilityParameter(vec![Rational::zero(); n])
    }

    pub fn weights(&self) -> &[Rational] {
        &self.0
    }

    pub fn weight(&self, i: usize) -> &Rational {
        &self.0[i]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `α + c` in every coordinate.
    pub fn shifted(&self, c: &Rational) -> Self {
        StabilityParameter(self.0.iter().map(|w| w + c).collect())
    }

    /// `α - ε·u_v`, with `u_v` the coordinate unit vector at vertex `v`.
    pub fn perturbed(&self, vertex: usize, epsilon: &Rational) -> Self {
        let mut w = self.0.clone();
        w[vertex] -= epsilon;
        StabilityParameter(w)
    }

    pub(crate) fn check_len(&self, n: usize) -> Result<()> {
        if self.len() == n {
            Ok(())
        } else {
            Err(Error::VertexMismatch {
                expected: n,
                found: self.len(),
            })
        }
    }
}

impl fmt::Display for StabilityParameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let w: Vec<String> = self.0.iter().map(format_rational).collect();
        write!(f, "({})", w.join(", "))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct GenusContext(u32);

impl GenusContext {
    pub fn new(genus: u32) -> Self {
        GenusContext(genus)
    }

    pub fn genus(self) -> u32 {
        self.0
    }

    /// `2g - 2`, the degree of the canonical bundle.
    pub fn canonical_degree(self) -> i64 {
        2 * self.0 as i64 - 2
    }
}

/// `deg_α(t) = Σ (α_i r_i + d_i)`.
pub fn alpha_degree(t: &TypeVector, alpha: &StabilityParameter) -> Result<Rational> {
    alpha.check_len(t.len())?;
    Ok(t.0
        .iter()
        .zip(&alpha.0)
        .map(|(e, w)| w * int(e.rank as i64) + int(e.degree))
        .sum())
}

/// `μ_α(t) = deg_α(t) / Σ r_i`.
pub fn alpha_slope(t: &TypeVector, alpha: &StabilityParameter) -> Result<Rational> {
    let deg = alpha_degree(t, alpha)?;
    match t.total_rank() {
        0 => Err(Error::ZeroTotalRank),
        r => Ok(deg / int(r)),
    }
}

/// Per-vertex inclusive degree bounds for candidate subtypes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeWindow(Vec<RangeInclusive<i64>>);

impl DegreeWindow {
    pub fn new(ranges: Vec<RangeInclusive<i64>>) -> Self {
        DegreeWindow(ranges)
    }

    pub fn uniform(n: usize, lo: i64, hi: i64) -> Self {
        DegreeWindow(vec![lo..=hi; n])
    }

    pub fn ranges(&self) -> &[RangeInclusive<i64>] {
        &self.0
    }

    pub fn contains(&self, other: &DegreeWindow) -> bool {
        self.0.len() == other.0.len()
            && self.0.iter().zip(&other.0).all(|(big, small)| {
                small.is_empty() || (big.start() <= small.start() && small.end() <= big.end())
            })
    }
}

/// Candidate subtypes `t'` with `0 <= r'_i <= r_i` and `d'_i` in the window.
///
/// A vertex with `r'_i = 0` carries degree 0 and is not constrained by the window. The zero type
/// and `t` itself are excluded. Output is in odometer order (the first vertex varies fastest, each
/// vertex running through rank then degree ascending), hence sorted and duplicate-free.
pub fn enumerate_subtypes(t: &TypeVector, window: &DegreeWindow) -> Result<Vec<TypeVector>> {
    if window.0.len() != t.len() {
        return Err(Error::VertexMismatch {
            expected: t.len(),
            found: window.0.len(),
        });
    }
    let choices: Vec<Vec<VertexType>> =
        t.0.iter()
            .zip(&window.0)
            .map(|(e, w)| {
                let mut c = vec![VertexType::ZERO];
                for r in 1..=e.rank {
                    c.extend(w.clone().map(|d| VertexType::new(r, d)));
                }
                c
            })
            .collect();

    let mut out = Vec::new();
    let mut idx = vec![0usize; t.len()];
    loop {
        let cand = TypeVector(idx.iter().zip(&choices).map(|(&k, c)| c[k]).collect());
        if !cand.is_zero() && cand != *t {
            out.push(cand);
        }
        // Advance the odometer, first vertex fastest.
        let mut pos = 0;
        loop {
            if pos == idx.len() {
                return Ok(out);
            }
            idx[pos] += 1;
            if idx[pos] < choices[pos].len() {
                break;
            }
            idx[pos] = 0;
            pos += 1;
        }
    }
}

/// Sort key matching the order produced by [`enumerate_subtypes`].
pub fn odometer_key(t: &TypeVector) -> Vec<VertexType> {
    t.0.iter().rev().copied().collect()
}
