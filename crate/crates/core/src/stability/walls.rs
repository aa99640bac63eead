//! Walls in the stability parameter space.
//!
//! A candidate subtype `t'` of `t` ties slopes with `t` exactly on the affine hyperplane
//! `Σ_i (R·r'_i − R'·r_i)·α_i + (R·D' − R'·D) = 0`, where `R, R'` are the total ranks and `D, D'`
//! the total degrees. Walls are stored with integer coefficients of content one and a positive
//! leading coefficient, so equal hyperplanes compare equal.

use std::fmt;

use num_integer::Integer;
use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::rational::{format_rational, int, Rational};
use crate::types::{alpha_slope, enumerate_subtypes, DegreeWindow, StabilityParameter, TypeVector};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum WallKind {
    /// A genuine hyperplane.
    Hyperplane,
    /// Zero normal and zero offset: the slopes tie for every `α`.
    Everywhere,
    /// Zero normal, nonzero offset: the slopes never tie.
    Nowhere,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Wall {
    pub normal: Vec<i64>,
    pub offset: i64,
    pub witness_subtype: TypeVector,
    pub kind: WallKind,
}

impl Wall {
    fn canonical(mut normal: Vec<i64>, mut offset: i64, witness_subtype: TypeVector) -> Self {
        let content = normal.iter().fold(offset.abs(), |acc, &c| acc.gcd(&c));
        if content > 1 {
            normal.iter_mut().for_each(|c| *c /= content);
            offset /= content;
        }
        let lead = normal.iter().copied().find(|&c| c != 0).unwrap_or(offset);
        if lead < 0 {
            normal.iter_mut().for_each(|c| *c = -*c);
            offset = -offset;
        }
        let kind = match (normal.iter().all(|&c| c == 0), offset == 0) {
            (false, _) => WallKind::Hyperplane,
            (true, true) => WallKind::Everywhere,
            (true, false) => WallKind::Nowhere,
        };
        Wall {
            normal,
            offset,
            witness_subtype,
            kind,
        }
    }

    /// Re-canonicalises; a no-op on walls built by this module.
    pub fn canonicalized(&self) -> Wall {
        Wall::canonical(
            self.normal.clone(),
            self.offset,
            self.witness_subtype.clone(),
        )
    }

    pub fn is_degenerate(&self) -> bool {
        self.kind != WallKind::Hyperplane
    }

    /// `Σ normal_i·α_i + offset`.
    pub fn evaluate(&self, alpha: &StabilityParameter) -> Rational {
        self.normal
            .iter()
            .zip(alpha.weights())
            .map(|(&c, w)| int(c) * w)
            .sum::<Rational>()
            + int(self.offset)
    }

    pub fn contains(&self, alpha: &StabilityParameter) -> bool {
        self.evaluate(alpha).is_zero()
    }

    /// The equation with vertex names as subscripts, e.g. `α_1 - α_2 = 1`.
    pub fn equation(&self, vertex_names: &[String]) -> String {
        let mut lhs = String::new();
        for (c, name) in self.normal.iter().zip(vertex_names) {
            if *c == 0 {
                continue;
            }
            let mag = c.abs();
            if lhs.is_empty() {
                if *c < 0 {
                    lhs.push('-');
                }
            } else {
                lhs.push_str(if *c < 0 { " - " } else { " + " });
            }
            if mag != 1 {
                lhs.push_str(&mag.to_string());
            }
            lhs.push_str("α_");
            lhs.push_str(name);
        }
        if lhs.is_empty() {
            lhs.push('0');
        }
        format!("{lhs} = {}", -self.offset)
    }

    fn sort_key(&self) -> (&[i64], i64) {
        (&self.normal, self.offset)
    }
}

impl fmt::Display for Wall {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (1..=self.normal.len()).map(|i| i.to_string()).collect();
        write!(
            f,
            "{} [witness {}]",
            self.equation(&names),
            self.witness_subtype
        )
    }
}

/// The slope-tie locus `μ_α(t') = μ_α(t)` in canonical form.
pub fn wall_from_subtype(t: &TypeVector, sub: &TypeVector) -> Result<Wall> {
    sub.check_len(t.len())?;
    let (r, r_sub) = (t.total_rank(), sub.total_rank());
    if r_sub == 0 || r == 0 {
        return Err(Error::ZeroTotalRank);
    }
    let normal = t
        .entries()
        .iter()
        .zip(sub.entries())
        .map(|(e, s)| r * s.rank as i64 - r_sub * e.rank as i64)
        .collect();
    let offset = r * sub.total_degree() - r_sub * t.total_degree();
    Ok(Wall::canonical(normal, offset, sub.clone()))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WallSet {
    /// Genuine hyperplanes, deduplicated and sorted by `(normal, offset)`; each keeps its smallest
    /// witness in vertex-major lexicographic order.
    pub walls: Vec<Wall>,
    /// One entry per candidate whose tie locus is degenerate.
    pub degenerate: Vec<Wall>,
}

/// Walls from every candidate subtype in the window.
pub fn enumerate_walls(t: &TypeVector, window: &DegreeWindow) -> Result<WallSet> {
    if t.total_rank() == 0 {
        return Ok(WallSet {
            walls: vec![],
            degenerate: vec![],
        });
    }
    let mut walls: Vec<Wall> = Vec::new();
    let mut degenerate = Vec::new();
    for sub in enumerate_subtypes(t, window)? {
        let w = wall_from_subtype(t, &sub)?;
        if w.is_degenerate() {
            degenerate.push(w);
        } else {
            walls.push(w);
        }
    }
    sort_walls(&mut walls);
    walls.dedup_by(|later, first| later.sort_key() == first.sort_key());
    Ok(WallSet { walls, degenerate })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "class", content = "walls")]
pub enum ParameterClass {
    OnWall(Vec<Wall>),
    ChamberInterior,
}

/// Exact membership of `α` in each wall.
pub fn classify_parameter(alpha: &StabilityParameter, walls: &[Wall]) -> ParameterClass {
    let hit: Vec<Wall> = walls
        .iter()
        .filter(|w| w.contains(alpha))
        .cloned()
        .collect();
    if hit.is_empty() {
        ParameterClass::ChamberInterior
    } else {
        ParameterClass::OnWall(hit)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Candidate {
    pub subtype: TypeVector,
    #[serde(with = "crate::rational::serde_str")]
    pub excess: Rational,
}

/// Numerical destabilizing candidates. Whether a sub-bundle of each type exists is not decided.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Destabilizers {
    #[serde(with = "crate::rational::serde_str")]
    pub slope: Rational,
    /// `μ_α(t') > μ_α(t)`, with excess `μ_α(t') − μ_α(t)`.
    pub strict: Vec<Candidate>,
    /// `μ_α(t') = μ_α(t)`.
    pub ties: Vec<TypeVector>,
}

impl fmt::Display for Candidate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} excess {}",
            self.subtype,
            format_rational(&self.excess)
        )
    }
}

pub fn potential_destabilizers(
    t: &TypeVector,
    alpha: &StabilityParameter,
    window: &DegreeWindow,
) -> Result<Destabilizers> {
    let slope = alpha_slope(t, alpha)?;
    let mut strict = Vec::new();
    let mut ties = Vec::new();
    for sub in enumerate_subtypes(t, window)? {
        let excess = alpha_slope(&sub, alpha)? - &slope;
        if excess > Rational::zero() {
            strict.push(Candidate {
                subtype: sub,
                excess,
            });
        } else if excess.is_zero() {
            ties.push(sub);
        }
    }
    Ok(Destabilizers {
        slope,
        strict,
        ties,
    })
}

/// Sorts walls into the order used by [`enumerate_walls`]; exposed for callers merging sets.
pub fn sort_walls(walls: &mut [Wall]) {
    walls.sort_by(|a, b| {
        a.sort_key()
            .cmp(&b.sort_key())
            .then_with(|| a.witness_subtype.entries().cmp(b.witness_subtype.entries()))
    });
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    fn tv(p: &[(u32, i64)]) -> TypeVector {
        TypeVector::from_pairs(p).unwrap()
    }

    #[test]
    fn degenerate_walls_single_vertex() {
        let t = tv(&[(2, 0)]);
        let w = wall_from_subtype(&t, &tv(&[(1, 0)])).unwrap();
        assert_eq!(
            (w.normal.clone(), w.offset, w.kind),
            (vec![0], 0, WallKind::Everywhere)
        );
        let w = wall_from_subtype(&t, &tv(&[(1, 1)])).unwrap();
        assert_eq!(
            (w.normal.clone(), w.offset, w.kind),
            (vec![0], 1, WallKind::Nowhere)
        );
    }

    #[test]
    fn a2_wall() {
        let t = tv(&[(1, 0), (1, 1)]);
        let w = wall_from_subtype(&t, &tv(&[(0, 0), (1, 1)])).unwrap();
        assert_eq!(w.normal, vec![1, -1]);
        assert_eq!(w.offset, -1);
        assert_eq!(w.to_string(), "α_1 - α_2 = 1 [witness ((0,0),(1,1))]");
    }

    #[test]
    fn zero_rank_subtype_rejected() {
        let t = tv(&[(1, 0), (1, 1)]);
        assert_eq!(
            wall_from_subtype(&t, &TypeVector::zero(2)),
            Err(Error::ZeroTotalRank)
        );
    }

    #[test]
    fn enumerate_single_vertex_only_degenerate() {
        let s = enumerate_walls(&tv(&[(3, 1)]), &DegreeWindow::uniform(1, -2, 2)).unwrap();
        assert!(s.walls.is_empty());
        assert!(!s.degenerate.is_empty());
    }

    #[test]
    fn enumerate_a2_contains_wall() {
        let t = tv(&[(1, 0), (1, 1)]);
        let s = enumerate_walls(&t, &DegreeWindow::uniform(2, 0, 1)).unwrap();
        assert!(s
            .walls
            .iter()
            .any(|w| w.normal == vec![1, -1] && w.offset == -1));
        let mut keys: Vec<_> = s.walls.iter().map(|w| w.sort_key()).collect();
        let n = keys.len();
        keys.dedup();
        assert_eq!(keys.len(), n);
    }

    #[test]
    fn zero_rank_only_window_has_no_walls() {
        let s = enumerate_walls(&tv(&[(1, 0), (1, 1)]), &DegreeWindow::uniform(2, 5, 4)).unwrap();
        assert!(s.walls.is_empty() && s.degenerate.is_empty());
    }

    #[test]
    fn classify_examples() {
        let t = tv(&[(1, 0), (1, 1)]);
        let w = wall_from_subtype(&t, &tv(&[(0, 0), (1, 1)])).unwrap();
        let walls = vec![w];
        assert_eq!(
            classify_parameter(&StabilityParameter::from_ints(&[2, 0]), &walls),
            ParameterClass::ChamberInterior
        );
        assert!(matches!(
            classify_parameter(&StabilityParameter::from_ints(&[1, 0]), &walls),
            ParameterClass::OnWall(_)
        ));
        let a = StabilityParameter::new(vec![ratio(3, 2), ratio(1, 2)]);
        assert!(matches!(
            classify_parameter(&a, &walls),
            ParameterClass::OnWall(_)
        ));
    }

    #[test]
    fn destabilizer_examples() {
        let t = tv(&[(1, 0), (1, 1)]);
        let w = DegreeWindow::uniform(2, 0, 1);
        let target = tv(&[(0, 0), (1, 1)]);
        let d = potential_destabilizers(&t, &StabilityParameter::zero(2), &w).unwrap();
        assert_eq!(d.slope, ratio(1, 2));
        let hit = d.strict.iter().find(|c| c.subtype == target).unwrap();
        assert_eq!(hit.excess, ratio(1, 2));

        let d = potential_destabilizers(&t, &StabilityParameter::from_ints(&[3, 0]), &w).unwrap();
        assert!(d.strict.iter().all(|c| c.subtype != target));
        assert!(!d.ties.contains(&target));

        let empty = DegreeWindow::uniform(2, 1, 0);
        let d = potential_destabilizers(&t, &StabilityParameter::zero(2), &empty).unwrap();
        assert!(d.strict.is_empty() && d.ties.is_empty());
    }

    #[test]
    fn canonicalization_is_idempotent() {
        let w = Wall::canonical(vec![0, -4, 6], 8, TypeVector::zero(3));
        assert_eq!((w.normal.clone(), w.offset), (vec![0, 2, -3], -4));
        assert_eq!(w.canonicalized(), w);
    }
}
