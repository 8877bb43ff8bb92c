#![allow(dead_code)]

use derivscope::linalg::{int, unit_vector};
use derivscope::{Algebra, DerivationParams, Rational};
use num_traits::Zero;
use rand::Rng;

/// Derivation-space dimension by a second route: every unknown `D[a][b]` is
/// probed with the unit map `e_b ↦ e_a`, the identity residuals are read off
/// through algebra products only, and the rank is taken by inserting rows one
/// at a time into a growing echelon set.
pub fn naive_derivation_dim(a: &Algebra, p: &DerivationParams) -> usize {
    let n = a.dim();
    let e: Vec<Vec<Rational>> = (0..n).map(|i| unit_vector(n, i)).collect();
    // columns[unknown] = residual vector over (i, j, k)
    let mut columns: Vec<Vec<Rational>> = Vec::with_capacity(n * n);
    for b in 0..n {
        for r in 0..n {
            let apply = |v: &[Rational]| -> Vec<Rational> {
                let mut out = vec![Rational::zero(); n];
                out[r] = v[b].clone();
                out
            };
            let mut col = Vec::with_capacity(n * n * n);
            for i in 0..n {
                for j in 0..n {
                    let mu = a.product(&e[i], &e[j]).unwrap();
                    let lhs = apply(&mu);
                    let left = a.product(&apply(&e[i]), &e[j]).unwrap();
                    let right = a.product(&e[i], &apply(&e[j])).unwrap();
                    for k in 0..n {
                        col.push(&p.alpha * &lhs[k] - &p.beta * &left[k] - &p.gamma * &right[k]);
                    }
                }
            }
            columns.push(col);
        }
    }
    let rows: Vec<Vec<Rational>> = (0..n * n * n)
        .map(|row| columns.iter().map(|c| c[row].clone()).collect())
        .collect();
    n * n - incremental_rank(rows)
}

/// Rank by inserting each row into a list of reduced rows with distinct
/// leading positions.
pub fn incremental_rank(rows: Vec<Vec<Rational>>) -> usize {
    let mut basis: Vec<(usize, Vec<Rational>)> = Vec::new();
    for mut row in rows {
        for (lead, b) in &basis {
            if !row[*lead].is_zero() {
                let f = row[*lead].clone() / &b[*lead];
                for (x, y) in row.iter_mut().zip(b) {
                    *x -= &f * y;
                }
            }
        }
        if let Some(lead) = row.iter().position(|x| !x.is_zero()) {
            // Keep earlier rows free of the new lead so later reductions stay exact.
            for (_, b) in basis.iter_mut() {
                if !b[lead].is_zero() {
                    let f = b[lead].clone() / &row[lead];
                    for (x, y) in b.iter_mut().zip(&row) {
                        *x -= &f * y;
                    }
                }
            }
            basis.push((lead, row));
        }
    }
    basis.len()
}

/// Anti-commutative law on ℚⁿ with every constant drawn from `{−1, 0, 1}`.
pub fn random_law<R: Rng>(n: usize, rng: &mut R) -> Algebra {
    let mut products = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let v: Vec<Rational> = (0..n).map(|_| int(rng.gen_range(-1..=1))).collect();
            products.push((i, j, v));
        }
    }
    Algebra::from_products(n, products).unwrap()
}

/// Vector with entries in `{−3, …, 3}`.
pub fn random_vector<R: Rng>(n: usize, rng: &mut R) -> Vec<Rational> {
    (0..n).map(|_| int(rng.gen_range(-3..=3))).collect()
}
