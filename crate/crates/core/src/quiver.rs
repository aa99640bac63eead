//! Finite quivers with at most one arrow per ordered pair of vertices.

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An arrow `tail -> head`, with endpoints stored as vertex indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub id: String,
    pub tail: usize,
    pub head: usize,
}

impl Arrow {
    pub fn is_loop(&self) -> bool {
        self.tail == self.head
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum Violation {
    DuplicateVertex { vertex: String },
    DuplicateArrowId { arrow: String },
    DanglingEndpoint { arrow: String, vertex: String },
    ParallelArrows { first: String, second: String },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::DuplicateVertex { vertex } => write!(f, "duplicate vertex {vertex:?}"),
            Violation::DuplicateArrowId { arrow } => write!(f, "duplicate arrow id {arrow:?}"),
            Violation::DanglingEndpoint { arrow, vertex } => {
                write!(f, "structural error: arrow {arrow:?} uses undeclared vertex {vertex:?}")
            }
            Violation::ParallelArrows { first, second } => write!(
                f,
                "parallel arrows violate the single-arrow hypothesis: {first:?} and {second:?} share endpoints"
            ),
        }
    }
}

/// Outcome of [`validate_quiver`].
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
    /// Arrows whose tail equals their head. Loops are allowed, at most one per vertex.
    pub loops: Vec<String>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks a raw quiver description: unique identifiers, declared endpoints, no parallel arrows.
pub fn validate_quiver<V, A>(vertices: &[V], arrows: &[(A, V, V)]) -> ValidationReport
where
    V: AsRef<str>,
    A: AsRef<str>,
{
    let mut report = ValidationReport::default();

    let mut seen = HashSet::new();
    for v in vertices {
        if !seen.insert(v.as_ref()) {
            report.violations.push(Violation::DuplicateVertex {
                vertex: v.as_ref().to_owned(),
            });
        }
    }

    let mut ids = HashSet::new();
    let mut pairs: Vec<((&str, &str), &str)> = Vec::new();
    for (id, tail, head) in arrows {
        let (id, tail, head) = (id.as_ref(), tail.as_ref(), head.as_ref());
        if !ids.insert(id) {
            report.violations.push(Violation::DuplicateArrowId {
                arrow: id.to_owned(),
            });
        }
        for end in [tail, head] {
            if !seen.contains(end) {
                report.violations.push(Violation::DanglingEndpoint {
                    arrow: id.to_owned(),
                    vertex: end.to_owned(),
                });
            }
        }
        if let Some((_, first)) = pairs.iter().find(|(p, _)| *p == (tail, head)) {
            report.violations.push(Violation::ParallelArrows {
                first: (*first).to_owned(),
                second: id.to_owned(),
            });
        } else {
            pairs.push(((tail, head), id));
        }
        if tail == head {
            report.loops.push(id.to_owned());
        }
    }
    report
}

/// A validated quiver. Vertex order is input order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
}

impl Quiver {
    pub fn new<V, A>(vertices: &[V], arrows: &[(A, V, V)]) -> Result<Self>
    where
        V: AsRef<str>,
        A: AsRef<str>,
    {
        let report = validate_quiver(vertices, arrows);
        if !report.is_valid() {
            return Err(Error::InvalidQuiver(report.violations));
        }
        let vertices: Vec<String> = vertices.iter().map(|v| v.as_ref().to_owned()).collect();
        let index = |name: &str| vertices.iter().position(|v| v == name).expect("validated");
        let arrows = arrows
            .iter()
            .map(|(id, t, h)| Arrow {
                id: id.as_ref().to_owned(),
                tail: index(t.as_ref()),
                head: index(h.as_ref()),
            })
            .collect();
        Ok(Quiver { vertices, arrows })
    }

    /// Vertices named `"1"`, …, `"n"` and arrows `"a1"`, …, given by index pairs.
    pub fn from_indices(n: usize, arrows: &[(usize, usize)]) -> Result<Self> {
        let names: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
        let arrows: Vec<(String, String, String)> = arrows
            .iter()
            .enumerate()
            .map(|(k, &(t, h))| {
                let name = |i: usize| names.get(i).cloned().unwrap_or_else(|| format!("#{i}"));
                (format!("a{}", k + 1), name(t), name(h))
            })
            .collect();
        Quiver::new(&names, &arrows)
    }

    /// The linear quiver `1 -> 2 -> … -> n`.
    pub fn chain(n: usize) -> Self {
        let arrows: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Quiver::from_indices(n, &arrows).expect("chain quivers are valid")
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == name)
    }

    pub fn arrow_index(&self, id: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.id == id)
    }

    pub fn vertex_name(&self, i: usize) -> &str {
        &self.vertices[i]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minimal_chain_is_valid() {
        let r = validate_quiver(&["1", "2"], &[("a", "1", "2")]);
        assert!(r.is_valid());
        assert!(r.loops.is_empty());
    }

    #[test]
    fn single_loop_is_valid_and_flagged() {
        let r = validate_quiver(&["1"], &[("a", "1", "1")]);
        assert!(r.is_valid());
        assert_eq!(r.loops, vec!["a".to_string()]);
    }

    #[test]
    fn parallel_arrows_rejected() {
        let r = validate_quiver(&["1", "2"], &[("a", "1", "2"), ("b", "1", "2")]);
        assert_eq!(
            r.violations,
            vec![Violation::ParallelArrows {
                first: "a".into(),
                second: "b".into()
            }]
        );
        assert!(r.violations[0]
            .to_string()
            .contains("parallel arrows violate the single-arrow hypothesis"));
        assert!(Quiver::new(&["1", "2"], &[("a", "1", "2"), ("b", "1", "2")]).is_err());
    }

    #[test]
    fn opposite_arrows_are_not_parallel() {
        assert!(validate_quiver(&["1", "2"], &[("a", "1", "2"), ("b", "2", "1")]).is_valid());
    }

    #[test]
    fn dangling_and_duplicates() {
        let r = validate_quiver(&["1", "1"], &[("a", "1", "3"), ("a", "3", "1")]);
        assert!(r
            .violations
            .contains(&Violation::DuplicateVertex { vertex: "1".into() }));
        assert!(r
            .violations
            .contains(&Violation::DuplicateArrowId { arrow: "a".into() }));
        assert!(r.violations.contains(&Violation::DanglingEndpoint {
            arrow: "a".into(),
            vertex: "3".into()
        }));
    }

    #[test]
    fn indices_resolve() {
        let q = Quiver::chain(3);
        assert_eq!(q.vertex_count(), 3);
        assert_eq!(q.arrows()[1].tail, 1);
        assert_eq!(q.arrows()[1].head, 2);
        assert_eq!(q.vertex_index("2"), Some(1));
        assert_eq!(q.arrow_index("a2"), Some(1));
    }
}
