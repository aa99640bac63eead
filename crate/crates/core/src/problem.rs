//! The JSON problem format read by the `quiver-moduli` binary.
//!
//! ```json
//! {
//!   "quiver": {
//!     "vertices": ["1", "2"],
//!     "arrows": [{ "id": "a", "tail": "1", "head": "2" }]
//!   },
//!   "genus": 0,
//!   "alpha": ["0", "0"],
//!   "type": [{ "rank": 1, "degree": 0 }, { "rank": 1, "degree": 1 }],
//!   "bundle": {
//!     "vertices": [[0], [1]],
//!     "arrows": [[[["1", "0"]]]]
//!   }
//! }
//! ```
//!
//! * `alpha` lists one rational string (`"p"` or `"p/q"`) per vertex, in vertex order; it
//!   defaults to all zeros.
//! * `type` lists `(rank, degree)` per vertex. It may be omitted when a bundle is given, in which
//!   case it is read off the bundle; if both are present they must agree.
//! * `bundle` is only allowed in genus 0. `vertices[i]` lists the summand degrees of `E_i`
//!   (`E_i = ⊕ O(a_ij)`). `arrows[k]` is the matrix of the k-th arrow: one row per summand of the
//!   head, one column per summand of the tail. Entry `(j, l)` is homogeneous of degree
//!   `b_j − a_l` and is written `["c0", …, "cn"]` for `Σ cᵢ x0^(n−i) x1^i`, i.e. in descending
//!   powers of `x0`; an entry of negative degree is `[]`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::p1::{HomogPoly, PolyMatrix, QuiverBundleP1};
use crate::quiver::Quiver;
use crate::rational::parse_rational;
use crate::types::{GenusContext, StabilityParameter, TypeVector, VertexType};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArrowDecl {
    pub id: String,
    pub tail: String,
    pub head: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuiverDecl {
    pub vertices: Vec<String>,
    #[serde(default)]
    pub arrows: Vec<ArrowDecl>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BundleDecl {
    pub vertices: Vec<Vec<i64>>,
    #[serde(default)]
    pub arrows: Vec<Vec<Vec<Vec<String>>>>,
}

/// The raw document, field for field.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemFile {
    pub quiver: QuiverDecl,
    #[serde(default)]
    pub genus: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha: Option<Vec<String>>,
    #[serde(rename = "type", default, skip_serializing_if = "Option::is_none")]
    pub type_vector: Option<Vec<VertexType>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bundle: Option<BundleDecl>,
}

/// A validated problem.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Problem {
    pub quiver: Quiver,
    pub genus: GenusContext,
    pub alpha: StabilityParameter,
    pub type_vector: TypeVector,
    pub bundle: Option<QuiverBundleP1>,
}

impl Problem {
    pub fn from_json(text: &str) -> Result<Problem> {
        let file: ProblemFile =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        file.validate()
    }

    pub fn vertex_names(&self) -> &[String] {
        self.quiver.vertices()
    }

    /// The bundle, or an error naming the command that needs it.
    pub fn require_bundle(&self, command: &str) -> Result<&QuiverBundleP1> {
        self.bundle
            .as_ref()
            .ok_or_else(|| Error::Parse(format!("{command} requires a bundle section")))
    }
}

impl ProblemFile {
    pub fn validate(&self) -> Result<Problem> {
        let arrows: Vec<(String, String, String)> = self
            .quiver
            .arrows
            .iter()
            .map(|a| (a.id.clone(), a.tail.clone(), a.head.clone()))
            .collect();
        let quiver = Quiver::new(&self.quiver.vertices, &arrows)?;
        let n = quiver.vertex_count();

        let alpha = match &self.alpha {
            None => StabilityParameter::zero(n),
            Some(ws) => {
                if ws.len() != n {
                    return Err(Error::Parse(format!(
                        "alpha: {} weights for {n} vertices",
                        ws.len()
                    )));
                }
                let weights = ws
                    .iter()
                    .enumerate()
                    .map(|(i, w)| {
                        parse_rational(w).map_err(|e| Error::Parse(format!("alpha[{i}]: {e}")))
                    })
                    .collect::<Result<Vec<_>>>()?;
                StabilityParameter::new(weights)
            }
        };

        let declared = match &self.type_vector {
            None => None,
            Some(entries) => {
                if entries.len() != n {
                    return Err(Error::Parse(format!(
                        "type: {} entries for {n} vertices",
                        entries.len()
                    )));
                }
                Some(TypeVector::new(entries.clone())?)
            }
        };

        let bundle = match &self.bundle {
            None => None,
            Some(_) if self.genus != 0 => {
                return Err(Error::Parse(format!(
                    "oracle requires genus 0 (bundle section given with genus {})",
                    self.genus
                )))
            }
            Some(decl) => Some(parse_bundle(&quiver, decl)?),
        };

        let type_vector = match (declared, &bundle) {
            (Some(t), Some(b)) => {
                let from_bundle = b.type_vector();
                if t != from_bundle {
                    return Err(Error::Parse(format!(
                        "type {t} disagrees with the bundle, whose type is {from_bundle}"
                    )));
                }
                t
            }
            (Some(t), None) => t,
            (None, Some(b)) => b.type_vector(),
            (None, None) => {
                return Err(Error::Parse("either type or bundle must be given".into()));
            }
        };

        Ok(Problem {
            quiver,
            genus: GenusContext::new(self.genus),
            alpha,
            type_vector,
            bundle,
        })
    }
}

fn parse_bundle(quiver: &Quiver, decl: &BundleDecl) -> Result<QuiverBundleP1> {
    if decl.vertices.len() != quiver.vertex_count() {
        return Err(Error::Parse(format!(
            "bundle.vertices: {} entries for {} vertices",
            decl.vertices.len(),
            quiver.vertex_count()
        )));
    }
    if decl.arrows.len() != quiver.arrows().len() {
        return Err(Error::Parse(format!(
            "bundle.arrows: {} matrices for {} arrows",
            decl.arrows.len(),
            quiver.arrows().len()
        )));
    }
    let mut maps = Vec::with_capacity(decl.arrows.len());
    for (k, (arrow, rows)) in quiver.arrows().iter().zip(&decl.arrows).enumerate() {
        let src = &decl.vertices[arrow.tail];
        let tgt = &decl.vertices[arrow.head];
        let at = |j: usize, l: usize| format!("bundle.arrows[{k}] ({})[{j}][{l}]", arrow.id);
        if rows.len() != tgt.len() || rows.iter().any(|r| r.len() != src.len()) {
            return Err(Error::Parse(format!(
                "bundle.arrows[{k}] ({}): expected a {}x{} matrix",
                arrow.id,
                tgt.len(),
                src.len()
            )));
        }
        let mut poly_rows = Vec::with_capacity(rows.len());
        for (j, row) in rows.iter().enumerate() {
            let mut entries = Vec::with_capacity(row.len());
            for (l, coeffs) in row.iter().enumerate() {
                let degree = tgt[j] - src[l];
                let values = coeffs
                    .iter()
                    .map(|c| {
                        parse_rational(c).map_err(|e| Error::Parse(format!("{}: {e}", at(j, l))))
                    })
                    .collect::<Result<Vec<_>>>()?;
                let poly = HomogPoly::new(degree, values).ok_or_else(|| {
                    Error::Parse(format!(
                        "{}: degree {degree} entry needs {} coefficients, found {}",
                        at(j, l),
                        (degree + 1).max(0),
                        coeffs.len()
                    ))
                })?;
                entries.push(poly);
            }
            poly_rows.push(entries);
        }
        maps.push(PolyMatrix::from_rows(poly_rows, src.len()));
    }
    QuiverBundleP1::new(quiver.clone(), decl.vertices.clone(), maps)
}
