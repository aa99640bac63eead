//! Command reports: each is a serializable record plus a plain-text rendering built from the
//! same fields, so `--json` and the text form always agree.

use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::euler::{euler_form, expected_dimension};
use crate::p1::{
    hom_intertwiners, hypercoh_profile, map_certificate, random_instance, rank_one_stability,
    serre_dual_pa, split_destabilizer_search, InstanceLimits, InstanceOptions, QuiverBundleP1,
    SplitWitness, SubobjectWitness,
};
use crate::problem::Problem;
use crate::rational::{format_rational, Rational};
use crate::stability::{
    classify_parameter, enumerate_walls, smoothness_region_check, ArrowGap, BundleStability,
    ParameterClass,
};
use crate::types::DegreeWindow;

pub trait Report: Serialize {
    fn render(&self) -> String;

    /// `false` when a verification failed; the binary then exits with status 1.
    fn passed(&self) -> bool {
        true
    }
}

// ---------------------------------------------------------------------------------------------
// euler / dim

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VertexContribution {
    pub vertex: String,
    pub contribution: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ArrowContribution {
    pub arrow: String,
    pub tail: String,
    pub head: String,
    pub contribution: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EulerReport {
    pub genus: u32,
    #[serde(rename = "type")]
    pub type_vector: String,
    pub chi: i64,
    pub vertices: Vec<VertexContribution>,
    /// Subtracted from the vertex sum.
    pub arrows: Vec<ArrowContribution>,
}

pub fn euler_report(p: &Problem) -> Result<EulerReport> {
    let s = euler_form(&p.quiver, &p.type_vector, &p.type_vector, p.genus)?;
    let names = p.vertex_names();
    Ok(EulerReport {
        genus: p.genus.genus(),
        type_vector: p.type_vector.to_string(),
        chi: s.chi,
        vertices: names
            .iter()
            .zip(s.vertex_contributions)
            .map(|(v, c)| VertexContribution {
                vertex: v.clone(),
                contribution: c,
            })
            .collect(),
        arrows: p
            .quiver
            .arrows()
            .iter()
            .zip(s.arrow_contributions)
            .map(|(a, c)| ArrowContribution {
                arrow: a.id.clone(),
                tail: names[a.tail].clone(),
                head: names[a.head].clone(),
                contribution: c,
            })
            .collect(),
    })
}

impl Report for EulerReport {
    fn render(&self) -> String {
        let mut out = format!("chi = {}\n", self.chi);
        let _ = writeln!(out, "type {} genus {}", self.type_vector, self.genus);
        for v in &self.vertices {
            let _ = writeln!(out, "  vertex {}: {:+}", v.vertex, v.contribution);
        }
        for a in &self.arrows {
            let _ = writeln!(
                out,
                "  arrow {} ({} -> {}): {:+}",
                a.arrow, a.tail, a.head, -a.contribution
            );
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DimReport {
    pub genus: u32,
    #[serde(rename = "type")]
    pub type_vector: String,
    pub chi: i64,
    pub dimension: i64,
}

pub fn dim_report(p: &Problem) -> Result<DimReport> {
    let dimension = expected_dimension(&p.quiver, &p.type_vector, p.genus)?;
    Ok(DimReport {
        genus: p.genus.genus(),
        type_vector: p.type_vector.to_string(),
        chi: 1 - dimension,
        dimension,
    })
}

impl Report for DimReport {
    fn render(&self) -> String {
        format!(
            "expected dimension = {}\ntype {} genus {} chi {}\n",
            self.dimension, self.type_vector, self.genus, self.chi
        )
    }
}

// ---------------------------------------------------------------------------------------------
// smooth

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SmoothReport {
    /// `"yes"`, `"yes (boundary)"` or `"no"`.
    pub verdict: String,
    pub bound: i64,
    pub alpha: Vec<String>,
    pub arrows: Vec<ArrowGap>,
    pub offending: Vec<String>,
}

pub fn smooth_report(p: &Problem) -> Result<SmoothReport> {
    p.alpha.check_len(p.quiver.vertex_count())?;
    let r = smoothness_region_check(&p.quiver, &p.alpha, p.genus);
    let verdict = match (r.smooth, r.on_boundary()) {
        (true, false) => "yes",
        (true, true) => "yes (boundary)",
        (false, _) => "no",
    };
    Ok(SmoothReport {
        verdict: verdict.to_owned(),
        bound: r.bound,
        alpha: p.alpha.weights().iter().map(format_rational).collect(),
        offending: r
            .arrows
            .iter()
            .filter(|a| !a.satisfied)
            .map(|a| a.arrow.clone())
            .collect(),
        arrows: r.arrows,
    })
}

impl Report for SmoothReport {
    fn render(&self) -> String {
        let mut out = format!("SMOOTH REGION: {}", self.verdict);
        if !self.offending.is_empty() {
            let _ = write!(out, " (violated at {})", self.offending.join(", "));
        }
        let _ = writeln!(
            out,
            "\nalpha = ({}); bound 2g-2 = {}",
            self.alpha.join(", "),
            self.bound
        );
        for a in &self.arrows {
            let mark = match (a.satisfied, a.boundary) {
                (true, true) => "ok (boundary)",
                (true, false) => "ok",
                (false, _) => "VIOLATED",
            };
            let _ = writeln!(
                out,
                "  {}: gap {} {}",
                a.arrow,
                format_rational(&a.gap),
                mark
            );
        }
        out
    }
}

// ---------------------------------------------------------------------------------------------
// walls

/// Parses `lo..hi` (the same window at every vertex) or a comma-separated list of one
/// `lo..hi` per vertex.
pub fn parse_window(s: &str, vertices: usize) -> Result<DegreeWindow> {
    let one = |part: &str| -> Result<(i64, i64)> {
        let bad = || Error::Parse(format!("malformed window {part:?}; expected lo..hi"));
        let (lo, hi) = part.trim().split_once("..").ok_or_else(bad)?;
        let lo: i64 = lo.trim().parse().map_err(|_| bad())?;
        let hi: i64 = hi.trim().parse().map_err(|_| bad())?;
        if lo > hi {
            return Err(Error::Parse(format!("empty window {part:?}")));
        }
        Ok((lo, hi))
    };
    let parts: Vec<&str> = s.split(',').collect();
    match parts.len() {
        1 => {
            let (lo, hi) = one(parts[0])?;
            Ok(DegreeWindow::uniform(vertices, lo, hi))
        }
        k if k == vertices => Ok(DegreeWindow::new(
            parts
                .iter()
                .map(|p| one(p).map(|(lo, hi)| lo..=hi))
                .collect::<Result<_>>()?,
        )),
        k => Err(Error::Parse(format!(
            "window lists {k} ranges for {vertices} vertices"
        ))),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WallRow {
    pub equation: String,
    pub normal: Vec<i64>,
    pub offset: i64,
    pub witness: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WallsReport {
    #[serde(rename = "type")]
    pub type_vector: String,
    pub window: String,
    pub walls: Vec<WallRow>,
    pub degenerate: usize,
    /// Equations of the walls through `alpha`; empty in a chamber interior.
    pub alpha_on: Vec<String>,
}

pub fn walls_report(p: &Problem, window: &str) -> Result<WallsReport> {
    let w = parse_window(window, p.quiver.vertex_count())?;
    let set = enumerate_walls(&p.type_vector, &w)?;
    let names = p.vertex_names();
    let alpha_on = match classify_parameter(&p.alpha, &set.walls) {
        ParameterClass::ChamberInterior => vec![],
        ParameterClass::OnWall(ws) => ws.iter().map(|w| w.equation(names)).collect(),
    };
    Ok(WallsReport {
        type_vector: p.type_vector.to_string(),
        window: window.to_owned(),
        walls: set
            .walls
            .iter()
            .map(|w| WallRow {
                equation: w.equation(names),
                normal: w.normal.clone(),
                offset: w.offset,
                witness: w.witness_subtype.to_string(),
            })
            .collect(),
        degenerate: set.degenerate.len(),
        alpha_on,
    })
}

impl Report for WallsReport {
    fn render(&self) -> String {
        let mut out = String::new();
        if self.walls.is_empty() {
            let _ = writeln!(
                out,
                "no non-degenerate walls; {} degenerate",
                self.degenerate
            );
        } else {
            for w in &self.walls {
                let _ = writeln!(out, "{} [witness {}]", w.equation, w.witness);
            }
            let _ = writeln!(
                out,
                "{} walls; {} degenerate",
                self.walls.len(),
                self.degenerate
            );
        }
        if self.alpha_on.is_empty() {
            out.push_str("alpha: chamber interior\n");
        } else {
            let _ = writeln!(out, "alpha: on wall {}", self.alpha_on.join("; "));
        }
        out
    }
}

// ---------------------------------------------------------------------------------------------
// oracle-verify

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckStatus {
    Pass,
    Fail,
    /// Hypotheses not met; nothing to check.
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub status: CheckStatus,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InstanceResult {
    pub label: String,
    #[serde(rename = "H")]
    pub h: [usize; 3],
    pub chi: i64,
    pub checks: Vec<Check>,
    pub pass: bool,
}

impl InstanceResult {
    fn line(&self) -> String {
        let mut s = format!(
            "{}: H=({},{},{}) chi={} {}",
            self.label,
            self.h[0],
            self.h[1],
            self.h[2],
            self.chi,
            if self.pass { "PASS" } else { "FAIL" }
        );
        let failed: Vec<String> = self
            .checks
            .iter()
            .filter(|c| c.status == CheckStatus::Fail)
            .map(|c| format!("{} ({})", c.name, c.detail))
            .collect();
        if !failed.is_empty() {
            let _ = write!(s, " [{}]", failed.join("; "));
        }
        s
    }
}

fn check(name: &'static str, ok: bool, detail: String) -> Check {
    let status = if ok {
        CheckStatus::Pass
    } else {
        CheckStatus::Fail
    };
    Check {
        name,
        status,
        detail,
    }
}

/// The full battery on one pair `(E, E')` of quiver bundles on the line.
///
/// H² vanishing is only asserted for `E = E'` on a loop-free quiver whose arrow maps are all
/// injective or generically surjective; otherwise it is reported as skipped.
pub fn verify_instance(
    label: impl Into<String>,
    e: &QuiverBundleP1,
    e2: &QuiverBundleP1,
) -> Result<InstanceResult> {
    let q = e.quiver();
    let profile = hypercoh_profile(e, e2)?;
    let euler = euler_form(
        q,
        &e.type_vector(),
        &e2.type_vector(),
        crate::GenusContext::new(0),
    )?;
    let hom = hom_intertwiners(e, e2)?;

    let mut checks = vec![
        check(
            "chi agreement",
            profile.chi == euler.chi,
            format!(
                "hypercohomology {} vs Riemann-Roch {}",
                profile.chi, euler.chi
            ),
        ),
        check(
            "alternating sum",
            profile.alternating_sum() == 0,
            format!("six-term sum {}", profile.alternating_sum()),
        ),
        check(
            "hom agreement",
            hom.dim == profile.H0,
            format!("intertwiners {} vs H0 {}", hom.dim, profile.H0),
        ),
    ];

    let mut serre_bad = Vec::new();
    for (ai, a) in q.arrows().iter().enumerate() {
        let d = serre_dual_pa(e, e2, ai)?;
        if d.kernel_pa != d.coker_d1 {
            serre_bad.push(format!(
                "{}: ker {} vs coker {}",
                a.id, d.kernel_pa, d.coker_d1
            ));
        }
    }
    checks.push(check(
        "serre duality",
        serre_bad.is_empty(),
        if serre_bad.is_empty() {
            format!("{} arrows", q.arrows().len())
        } else {
            serre_bad.join(", ")
        },
    ));

    let certified = e == e2
        && q.arrows().iter().all(|a| !a.is_loop())
        && e.maps().iter().all(|m| {
            let c = map_certificate(m);
            c.injective || c.generically_surjective
        });
    checks.push(if certified {
        check(
            "h2 vanishing",
            profile.H2 == 0,
            format!("H2 = {}", profile.H2),
        )
    } else {
        Check {
            name: "h2 vanishing",
            status: CheckStatus::Skipped,
            detail: "map certificates absent".into(),
        }
    });

    let pass = checks.iter().all(|c| c.status != CheckStatus::Fail);
    Ok(InstanceResult {
        label: label.into(),
        h: [profile.H0, profile.H1, profile.H2],
        chi: profile.chi,
        checks,
        pass,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OracleReport {
    pub instances: Vec<InstanceResult>,
    pub passed: usize,
    pub total: usize,
}

impl OracleReport {
    fn from_results(instances: Vec<InstanceResult>) -> Self {
        let passed = instances.iter().filter(|r| r.pass).count();
        OracleReport {
            total: instances.len(),
            passed,
            instances,
        }
    }
}

/// Runs the battery on the problem's bundle paired with itself.
pub fn oracle_report(p: &Problem) -> Result<OracleReport> {
    if p.genus.genus() != 0 {
        return Err(Error::Parse("oracle requires genus 0".into()));
    }
    let e = p.require_bundle("oracle-verify")?;
    Ok(OracleReport::from_results(vec![verify_instance(
        "instance", e, e,
    )?]))
}

/// Parses `V,R,D`: vertices, rank and absolute summand degree bounds.
pub fn parse_limits(s: &str) -> Result<InstanceLimits> {
    let bad = || Error::Parse(format!("malformed limits {s:?}; expected V,R,D"));
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    let [v, r, d] = parts.as_slice() else {
        return Err(bad());
    };
    let limits = InstanceLimits {
        max_vertices: v.parse().map_err(|_| bad())?,
        max_rank: r.parse().map_err(|_| bad())?,
        max_abs_degree: d.parse().map_err(|_| bad())?,
    };
    if limits.max_vertices == 0 || limits.max_rank == 0 || limits.max_abs_degree < 0 {
        return Err(bad());
    }
    Ok(limits)
}

/// `count` random pairs; instance `i` is drawn from seed `seed + i`.
pub fn oracle_random_report(seed: u64, count: u64, limits: InstanceLimits) -> Result<OracleReport> {
    let opts = InstanceOptions {
        limits,
        ..InstanceOptions::default()
    };
    let results = (0..count)
        .map(|i| {
            let s = seed.wrapping_add(i);
            let (e, e2) = random_instance(s, &opts)?;
            verify_instance(format!("seed {s}"), &e, &e2)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(OracleReport::from_results(results))
}

impl Report for OracleReport {
    fn render(&self) -> String {
        let mut out = String::new();
        for r in &self.instances {
            let _ = writeln!(out, "{}", r.line());
        }
        let _ = writeln!(out, "{}/{} pass", self.passed, self.total);
        out
    }

    fn passed(&self) -> bool {
        self.passed == self.total
    }
}

// ---------------------------------------------------------------------------------------------
// stability

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "method", rename_all = "snake_case")]
pub enum StabilityOutcome {
    /// Every vertex has rank one; the verdict is exact.
    RankOne {
        stability: BundleStability,
        witness: Option<SubobjectWitness>,
    },
    /// Only split sub-Q-bundles were searched.
    SplitSearch { witness: Option<SplitWitness> },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StabilityReport {
    pub verdict: String,
    pub alpha: Vec<String>,
    #[serde(with = "crate::rational::serde_str")]
    pub slope: Rational,
    pub outcome: StabilityOutcome,
}

fn set_label(w: &SubobjectWitness) -> String {
    format!("S={{{}}}", w.vertices.join(","))
}

pub fn stability_report(p: &Problem) -> Result<StabilityReport> {
    let e = p.require_bundle("stability")?;
    let alpha = p.alpha.weights().iter().map(format_rational).collect();
    if e.bundles().iter().all(|b| b.rank() == 1) {
        let v = rank_one_stability(e, &p.alpha)?;
        let verdict = match (v.stability, &v.witness) {
            (BundleStability::Stable, _) => "STABLE".to_owned(),
            (BundleStability::StrictlySemistable, Some(w)) => {
                format!("STRICTLY SEMISTABLE (witness {})", set_label(w))
            }
            (BundleStability::Unstable, Some(w)) => format!(
                "UNSTABLE (witness {}, slope {} > {})",
                set_label(w),
                format_rational(&w.slope),
                format_rational(&v.slope)
            ),
            (s, None) => format!("{s:?}").to_uppercase(),
        };
        return Ok(StabilityReport {
            verdict,
            alpha,
            slope: v.slope,
            outcome: StabilityOutcome::RankOne {
                stability: v.stability,
                witness: v.witness,
            },
        });
    }
    let slope = crate::types::alpha_slope(&p.type_vector, &p.alpha)?;
    let witness = split_destabilizer_search(e, &p.alpha)?;
    let verdict = match &witness {
        None => "NO SPLIT DESTABILIZER (inconclusive)".to_owned(),
        Some(w) if w.strict => format!("UNSTABLE (split destabilizer {w})"),
        Some(w) => format!("NOT STABLE (equal-slope split subobject {w}; semistability undecided)"),
    };
    Ok(StabilityReport {
        verdict,
        alpha,
        slope,
        outcome: StabilityOutcome::SplitSearch { witness },
    })
}

impl Report for StabilityReport {
    fn render(&self) -> String {
        format!(
            "{}\nalpha = ({}); slope {}\n",
            self.verdict,
            self.alpha.join(", "),
            format_rational(&self.slope)
        )
    }
}
