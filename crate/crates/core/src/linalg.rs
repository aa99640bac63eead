//! Exact linear algebra over the rationals.
//!
//! Two independent routes are provided: [`rank`] clears denominators and runs fraction-free
//! integer elimination with primitive-row normalisation, while [`nullspace`] performs
//! Gauss–Jordan elimination directly over `Q`. The oracle compares results obtained through the
//! two routes, so neither calls the other.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::rational::Rational;

/// Dense row-major matrix of exact rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>, cols: usize) -> Self {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged matrix");
            data.extend(r);
        }
        Matrix {
            rows: n,
            cols,
            data,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rational) {
        self.data[r * self.cols + c] = v;
    }

    pub fn add_to(&mut self, r: usize, c: usize, v: &Rational) {
        self.data[r * self.cols + c] += v;
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    /// Submatrix on the given rows, all columns.
    pub fn select_rows(&self, rows: &[usize]) -> Matrix {
        Matrix::from_rows(
            rows.iter().map(|&r| self.row(r).to_vec()).collect(),
            self.cols,
        )
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|r| self.row(r).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }
}

/// Scales a rational row to a primitive integer row.
fn primitive_row(row: &[Rational]) -> Vec<BigInt> {
    let lcm = row
        .iter()
        .filter(|x| !x.is_zero())
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = row.iter().map(|x| (x * &lcm).to_integer()).collect();
    make_primitive(ints)
}

fn make_primitive(mut row: Vec<BigInt>) -> Vec<BigInt> {
    let content = row.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if !content.is_zero() && !content.is_one() {
        row.iter_mut().for_each(|x| *x /= &content);
    }
    row
}

/// Rank by fraction-free integer elimination.
pub fn rank(m: &Matrix) -> usize {
    let mut rows: Vec<Vec<BigInt>> = (0..m.rows())
        .map(|r| primitive_row(m.row(r)))
        .filter(|r| r.iter().any(|x| !x.is_zero()))
        .collect();
    let mut rank = 0;
    for col in 0..m.cols() {
        if rank == rows.len() {
            break;
        }
        let pivot = (rank..rows.len())
            .filter(|&r| !rows[r][col].is_zero())
            .min_by_key(|&r| rows[r][col].abs());
        let Some(p) = pivot else { continue };
        rows.swap(rank, p);
        let (head, tail) = rows.split_at_mut(rank + 1);
        let prow = &head[rank];
        let pv = &prow[col];
        for row in tail.iter_mut() {
            if row[col].is_zero() {
                continue;
            }
            let g = pv.gcd(&row[col]);
            let scale_row = pv / &g;
            let scale_piv = &row[col] / &g;
            for (x, y) in row.iter_mut().zip(prow.iter()).skip(col) {
                if y.is_zero() {
                    if !x.is_zero() {
                        *x *= &scale_row;
                    }
                } else {
                    *x = &*x * &scale_row - y * &scale_piv;
                }
            }
            let taken = std::mem::take(row);
            *row = make_primitive(taken);
        }
        rank += 1;
    }
    rank
}

/// Reduced row echelon form over `Q`; returns the pivot columns.
pub fn rref(m: &Matrix) -> (Matrix, Vec<usize>) {
    let mut a = m.clone();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..a.cols {
        if r == a.rows {
            break;
        }
        let Some(p) = (r..a.rows).find(|&i| !a.get(i, c).is_zero()) else {
            continue;
        };
        if p != r {
            for k in 0..a.cols {
                a.data.swap(p * a.cols + k, r * a.cols + k);
            }
        }
        let inv = a.get(r, c).recip();
        for k in c..a.cols {
            let v = a.get(r, k) * &inv;
            a.set(r, k, v);
        }
        let prow: Vec<Rational> = a.row(r).to_vec();
        for i in 0..a.rows {
            if i == r || a.get(i, c).is_zero() {
                continue;
            }
            let f = a.get(i, c).clone();
            for (k, pk) in prow.iter().enumerate().skip(c) {
                if !pk.is_zero() {
                    let v = a.get(i, k) - &f * pk;
                    a.set(i, k, v);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    (a, pivots)
}

/// Basis of `{x : m·x = 0}` via Gauss–Jordan over `Q`.
pub fn nullspace(m: &Matrix) -> Vec<Vec<Rational>> {
    let (reduced, pivots) = rref(m);
    let free: Vec<usize> = (0..m.cols()).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Rational::zero(); m.cols()];
            v[f] = Rational::one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = -reduced.get(i, f).clone();
            }
            v
        })
        .collect()
}
