//! Exact dense linear algebra over ℚ.
//!
//! Everything here is exact: there are no tolerances anywhere, so a vector
//! either lies in a subspace or it does not. Subspaces keep a canonical basis
//! (the nonzero rows of a reduced row echelon form) which makes set equality
//! the same thing as structural equality.

mod matrix;
mod subspace;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

pub use matrix::Matrix;
pub use subspace::Subspace;

/// Arbitrary-precision fraction, always stored in lowest terms with a
/// positive denominator.
pub type Rational = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `p/q` as a reduced rational. Panics if `q == 0`.
pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

pub fn zero_vector(n: usize) -> Vec<Rational> {
    vec![Rational::zero(); n]
}

/// Standard basis vector `e_i` of ℚⁿ.
pub fn unit_vector(n: usize, i: usize) -> Vec<Rational> {
    let mut v = zero_vector(n);
    v[i] = Rational::one();
    v
}

pub fn is_zero_vector(v: &[Rational]) -> bool {
    v.iter().all(Zero::is_zero)
}

/// Reduced row echelon form and its pivot columns.
///
/// Pivots are taken as the first nonzero entry going down each column. In
/// exact arithmetic the result does not depend on that choice.
pub fn rref(m: &Matrix) -> (Matrix, Vec<usize>) {
    let mut a = m.clone();
    let (rows, cols) = (a.rows(), a.cols());
    let mut pivots = Vec::new();
    let mut next_row = 0;
    for col in 0..cols {
        if next_row == rows {
            break;
        }
        let Some(pivot_row) = (next_row..rows).find(|&r| !a[(r, col)].is_zero()) else {
            continue;
        };
        a.swap_rows(pivot_row, next_row);
        let inv = a[(next_row, col)].recip();
        for c in col..cols {
            let scaled = &a[(next_row, c)] * &inv;
            a[(next_row, c)] = scaled;
        }
        for r in 0..rows {
            if r == next_row || a[(r, col)].is_zero() {
                continue;
            }
            let factor = a[(r, col)].clone();
            for c in col..cols {
                if a[(next_row, c)].is_zero() {
                    continue;
                }
                let delta = &factor * &a[(next_row, c)];
                a[(r, c)] -= delta;
            }
        }
        pivots.push(col);
        next_row += 1;
    }
    (a, pivots)
}

/// Right kernel `{v : m·v = 0}` as a canonical subspace of ℚ^cols.
pub fn nullspace(m: &Matrix) -> Subspace {
    let cols = m.cols();
    let (reduced, pivots) = rref(m);
    let mut is_pivot = vec![false; cols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let mut basis = Vec::with_capacity(cols - pivots.len());
    for free in (0..cols).filter(|&c| !is_pivot[c]) {
        let mut v = zero_vector(cols);
        v[free] = Rational::one();
        for (r, &p) in pivots.iter().enumerate() {
            let x = &reduced[(r, free)];
            if !x.is_zero() {
                v[p] = -x;
            }
        }
        basis.push(v);
    }
    Subspace::span(&basis, cols).expect("kernel vectors have the ambient length")
}
