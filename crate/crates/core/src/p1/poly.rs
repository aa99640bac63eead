//! Homogeneous polynomials in `x0, x1` and matrices of them.

use std::fmt;

use num_traits::{One, Zero};

use crate::rational::{format_rational, Rational};
use crate::stability::ArrowMapFact;

/// A homogeneous polynomial `Σ c_i x0^(n−i) x1^i` of degree `n`.
///
/// For `n < 0` the only element is zero and `coeffs` is empty.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HomogPoly {
    degree: i64,
    coeffs: Vec<Rational>,
}

pub(crate) fn space_dim(degree: i64) -> usize {
    (degree + 1).max(0) as usize
}

impl HomogPoly {
    pub fn zero(degree: i64) -> Self {
        HomogPoly {
            degree,
            coeffs: vec![Rational::zero(); space_dim(degree)],
        }
    }

    /// `None` unless `coeffs.len() == max(degree + 1, 0)`.
    pub fn new(degree: i64, coeffs: Vec<Rational>) -> Option<Self> {
        (coeffs.len() == space_dim(degree)).then_some(HomogPoly { degree, coeffs })
    }

    pub fn constant(c: Rational) -> Self {
        HomogPoly {
            degree: 0,
            coeffs: vec![c],
        }
    }

    /// `c · x0^(n−i) x1^i`.
    pub fn monomial(degree: i64, i: usize, c: Rational) -> Self {
        let mut p = HomogPoly::zero(degree);
        p.coeffs[i] = c;
        p
    }

    pub fn degree(&self) -> i64 {
        self.degree
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn mul(&self, other: &HomogPoly) -> HomogPoly {
        let mut out = HomogPoly::zero(self.degree + other.degree);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out.coeffs[i + j] += a * b;
                }
            }
        }
        out
    }

    /// Panics on degree mismatch.
    pub fn add_assign(&mut self, other: &HomogPoly) {
        assert_eq!(
            self.degree, other.degree,
            "adding polynomials of different degrees"
        );
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *a += b;
        }
    }

    pub fn sub_assign(&mut self, other: &HomogPoly) {
        assert_eq!(
            self.degree, other.degree,
            "subtracting polynomials of different degrees"
        );
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *a -= b;
        }
    }

    pub fn scale(&self, c: &Rational) -> HomogPoly {
        HomogPoly {
            degree: self.degree,
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// Value at `(x0, x1) = (1, t)`.
    pub fn eval_affine(&self, t: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * t + c)
    }
}

impl fmt::Display for HomogPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.degree;
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let (e0, e1) = (n - i as i64, i as i64);
            let mono = match (e0, e1) {
                (0, 0) => String::new(),
                (a, 0) => pow("x0", a),
                (0, b) => pow("x1", b),
                (a, b) => format!("{}{}", pow("x0", a), pow("x1", b)),
            };
            if mono.is_empty() {
                write!(f, "{}", format_rational(c))?;
            } else if c.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{}*{mono}", format_rational(c))?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

fn pow(v: &str, e: i64) -> String {
    if e == 1 {
        v.to_owned()
    } else {
        format!("{v}^{e}")
    }
}

/// Matrix of homogeneous polynomials, indexed `(target summand, source summand)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<HomogPoly>,
}

impl PolyMatrix {
    pub fn from_rows(rows: Vec<Vec<HomogPoly>>, cols: usize) -> Self {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged polynomial matrix");
            entries.extend(r);
        }
        PolyMatrix {
            rows: n,
            cols,
            entries,
        }
    }

    /// Zero map `O(source) -> O(target)` summand-wise.
    pub fn zero(source: &[i64], target: &[i64]) -> Self {
        let rows = target
            .iter()
            .map(|b| source.iter().map(|a| HomogPoly::zero(b - a)).collect())
            .collect();
        PolyMatrix::from_rows(rows, source.len())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &HomogPoly {
        &self.entries[r * self.cols + c]
    }

    pub fn get_mut(&mut self, r: usize, c: usize) -> &mut HomogPoly {
        &mut self.entries[r * self.cols + c]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(HomogPoly::is_zero)
    }

    /// Checks that entry `(j, k)` has degree `target[j] − source[k]`.
    pub fn matches_degrees(&self, source: &[i64], target: &[i64]) -> bool {
        self.rows == target.len()
            && self.cols == source.len()
            && (0..self.rows)
                .all(|j| (0..self.cols).all(|k| self.get(j, k).degree() == target[j] - source[k]))
    }

    /// `self ∘ rhs`. Panics if the inner dimension is zero, where the entry degrees are unknown.
    pub fn compose(&self, rhs: &PolyMatrix) -> PolyMatrix {
        assert_eq!(
            self.cols, rhs.rows,
            "composing incompatible polynomial matrices"
        );
        assert!(self.cols > 0, "composition through a rank-zero bundle");
        let rows = (0..self.rows)
            .map(|j| {
                (0..rhs.cols)
                    .map(|k| {
                        let mut acc = self.get(j, 0).mul(rhs.get(0, k));
                        for l in 1..self.cols {
                            acc.add_assign(&self.get(j, l).mul(rhs.get(l, k)));
                        }
                        acc
                    })
                    .collect()
            })
            .collect();
        PolyMatrix::from_rows(rows, rhs.cols)
    }

    /// Square submatrix on the given rows and columns.
    fn minor(&self, rows: &[usize], cols: &[usize]) -> PolyMatrix {
        PolyMatrix::from_rows(
            rows.iter()
                .map(|&r| cols.iter().map(|&c| self.get(r, c).clone()).collect())
                .collect(),
            cols.len(),
        )
    }

    /// Determinant by cofactor expansion along the first row; `None` for a 0×0 matrix.
    pub fn determinant(&self) -> Option<HomogPoly> {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        match self.rows {
            0 => None,
            1 => Some(self.get(0, 0).clone()),
            n => {
                let rest: Vec<usize> = (1..n).collect();
                let mut acc: Option<HomogPoly> = None;
                for k in 0..n {
                    let cols: Vec<usize> = (0..n).filter(|&c| c != k).collect();
                    let term = self
                        .get(0, k)
                        .mul(&self.minor(&rest, &cols).determinant().expect("n >= 2"));
                    match acc.as_mut() {
                        None if k % 2 == 0 => acc = Some(term),
                        None => acc = Some(term.scale(&-Rational::one())),
                        Some(a) if k % 2 == 0 => a.add_assign(&term),
                        Some(a) => a.sub_assign(&term),
                    }
                }
                acc
            }
        }
    }

    /// Whether some maximal minor is a nonzero polynomial.
    fn some_maximal_minor_nonzero(&self) -> bool {
        let m = self.rows.min(self.cols);
        if m == 0 {
            return true;
        }
        let row_sets = subsets(self.rows, m);
        let col_sets = subsets(self.cols, m);
        row_sets.iter().any(|rs| {
            col_sets.iter().any(|cs| {
                self.minor(rs, cs)
                    .determinant()
                    .is_some_and(|d| !d.is_zero())
            })
        })
    }
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub(crate) fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Injectivity and generic surjectivity of a sheaf map between split bundles.
///
/// A map `E -> F` of vector bundles is injective (as a sheaf map) iff `rk E <= rk F` and some
/// maximal minor is a nonzero polynomial; generically surjective iff `rk E >= rk F` and the same.
pub fn map_certificate(phi: &PolyMatrix) -> ArrowMapFact {
    let (target, source) = (phi.rows(), phi.cols());
    let full = phi.some_maximal_minor_nonzero();
    ArrowMapFact {
        injective: source <= target && full,
        generically_surjective: source >= target && full,
    }
}
