//! Anti-commutative algebras given by structure constants.
//!
//! Only the products `μ(e_i, e_j)` with `i < j` are stored. The rest follow
//! from antisymmetry: `μ(e_j, e_i) = −μ(e_i, e_j)` and `μ(e_i, e_i) = 0`.
//! Missing keys denote a zero product.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;
use thiserror::Error;

use crate::derivations::LinearMap;
use crate::linalg::{is_zero_vector, nullspace, unit_vector, zero_vector, Matrix, Rational, Subspace};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("basis index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("μ(e_{0}, e_{0}) must be zero in an anti-commutative algebra")]
    DiagonalProduct(usize),
    #[error("expected a square matrix, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },
    #[error("change of basis requires an invertible map")]
    SingularChangeOfBasis,
}

/// A problem found by [`Algebra::validate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// Key `(i, j)` with `i >= j`.
    UnorderedKey { i: usize, j: usize },
    /// Key refers to an index `>= dim`.
    IndexOutOfRange { i: usize, j: usize, dim: usize },
    /// Stored vector does not have length `dim`.
    WrongLength { i: usize, j: usize, len: usize, dim: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::UnorderedKey { i, j } => {
                write!(f, "key ({i}, {j}) violates the i < j rule")
            }
            Violation::IndexOutOfRange { i, j, dim } => {
                write!(f, "key ({i}, {j}) has an index outside 0..{dim}")
            }
            Violation::WrongLength { i, j, len, dim } => {
                write!(f, "product ({i}, {j}) has {len} coordinates, expected {dim}")
            }
        }
    }
}

#[derive(Clone, Debug)]
pub struct Algebra {
    dim: usize,
    constants: BTreeMap<(usize, usize), Vec<Rational>>,
    name: Option<String>,
}

/// Structural equality: same dimension and same structure constants. The
/// name is a label and does not participate.
impl PartialEq for Algebra {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.constants == other.constants
    }
}

impl Eq for Algebra {}

impl Algebra {
    /// The abelian algebra of dimension `dim`.
    pub fn new(dim: usize) -> Self {
        Self {
            dim,
            constants: BTreeMap::new(),
            name: None,
        }
    }

    /// Wraps raw constants without checking them. Use [`Algebra::validate`]
    /// before computing with the result.
    pub fn from_parts_unchecked(dim: usize, constants: BTreeMap<(usize, usize), Vec<Rational>>) -> Self {
        Self {
            dim,
            constants,
            name: None,
        }
    }

    /// Builds an algebra from `(i, j, μ(e_i, e_j))` triples in any order.
    pub fn from_products(
        dim: usize,
        products: impl IntoIterator<Item = (usize, usize, Vec<Rational>)>,
    ) -> Result<Self, AlgebraError> {
        let mut a = Self::new(dim);
        for (i, j, v) in products {
            a.set_product(i, j, v)?;
        }
        Ok(a)
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    /// Name for reports; falls back to a dimension tag.
    pub fn label(&self) -> String {
        self.name.clone().unwrap_or_else(|| format!("algebra(dim={})", self.dim))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Stored `(i, j) -> μ(e_i, e_j)` entries, `i < j`, nonzero only.
    pub fn constants(&self) -> &BTreeMap<(usize, usize), Vec<Rational>> {
        &self.constants
    }

    pub fn is_abelian(&self) -> bool {
        self.constants.values().all(|v| is_zero_vector(v))
    }

    /// Sets `μ(e_i, e_j) = v`, storing `−v` under `(j, i)` when `i > j`.
    pub fn set_product(&mut self, i: usize, j: usize, v: Vec<Rational>) -> Result<(), AlgebraError> {
        for index in [i, j] {
            if index >= self.dim {
                return Err(AlgebraError::IndexOutOfRange { index, dim: self.dim });
            }
        }
        if v.len() != self.dim {
            return Err(AlgebraError::DimensionMismatch {
                expected: self.dim,
                found: v.len(),
            });
        }
        if i == j {
            return if is_zero_vector(&v) {
                Ok(())
            } else {
                Err(AlgebraError::DiagonalProduct(i))
            };
        }
        let (key, v) = if i < j {
            ((i, j), v)
        } else {
            ((j, i), v.into_iter().map(|x| -x).collect())
        };
        if is_zero_vector(&v) {
            self.constants.remove(&key);
        } else {
            self.constants.insert(key, v);
        }
        Ok(())
    }

    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        for (&(i, j), v) in &self.constants {
            if i >= self.dim || j >= self.dim {
                out.push(Violation::IndexOutOfRange { i, j, dim: self.dim });
            } else if i >= j {
                out.push(Violation::UnorderedKey { i, j });
            }
            if v.len() != self.dim {
                out.push(Violation::WrongLength {
                    i,
                    j,
                    len: v.len(),
                    dim: self.dim,
                });
            }
        }
        out
    }

    /// `c_{ij}^k`, with antisymmetry applied.
    pub fn constant(&self, i: usize, j: usize, k: usize) -> Rational {
        match i.cmp(&j) {
            std::cmp::Ordering::Less => self.constants.get(&(i, j)).map_or_else(Rational::zero, |v| v[k].clone()),
            std::cmp::Ordering::Greater => {
                self.constants.get(&(j, i)).map_or_else(Rational::zero, |v| -&v[k])
            }
            std::cmp::Ordering::Equal => Rational::zero(),
        }
    }

    /// `μ(e_i, e_j)` as a coordinate vector.
    pub fn basis_product(&self, i: usize, j: usize) -> Vec<Rational> {
        match i.cmp(&j) {
            std::cmp::Ordering::Less => self.constants.get(&(i, j)).cloned().unwrap_or_else(|| zero_vector(self.dim)),
            std::cmp::Ordering::Greater => self
                .constants
                .get(&(j, i))
                .map(|v| v.iter().map(|x| -x).collect())
                .unwrap_or_else(|| zero_vector(self.dim)),
            std::cmp::Ordering::Equal => zero_vector(self.dim),
        }
    }

    fn check_len(&self, v: &[Rational]) -> Result<(), AlgebraError> {
        if v.len() != self.dim {
            return Err(AlgebraError::DimensionMismatch {
                expected: self.dim,
                found: v.len(),
            });
        }
        Ok(())
    }

    /// Bilinear extension of the structure constants.
    pub fn product(&self, x: &[Rational], y: &[Rational]) -> Result<Vec<Rational>, AlgebraError> {
        self.check_len(x)?;
        self.check_len(y)?;
        Ok(self.mul(x, y))
    }

    /// [`Algebra::product`] without the length checks.
    pub(crate) fn mul(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        let mut out = zero_vector(self.dim);
        for (&(i, j), c) in &self.constants {
            let coeff = &x[i] * &y[j] - &x[j] * &y[i];
            if coeff.is_zero() {
                continue;
            }
            for (o, ck) in out.iter_mut().zip(c) {
                if !ck.is_zero() {
                    *o += &coeff * ck;
                }
            }
        }
        out
    }

    /// `μ(x, μ(y, z)) + μ(y, μ(z, x)) + μ(z, μ(x, y))`.
    pub fn jacobiator(&self, x: &[Rational], y: &[Rational], z: &[Rational]) -> Result<Vec<Rational>, AlgebraError> {
        self.check_len(x)?;
        self.check_len(y)?;
        self.check_len(z)?;
        Ok(self.jac(x, y, z))
    }

    fn jac(&self, x: &[Rational], y: &[Rational], z: &[Rational]) -> Vec<Rational> {
        let a = self.mul(x, &self.mul(y, z));
        let b = self.mul(y, &self.mul(z, x));
        let c = self.mul(z, &self.mul(x, y));
        a.iter().zip(&b).zip(&c).map(|((a, b), c)| a + b + c).collect()
    }

    /// First basis triple `i < j < k` with a nonzero jacobiator, if any.
    pub fn jacobi_violation(&self) -> Option<(usize, usize, usize, Vec<Rational>)> {
        let n = self.dim;
        let e: Vec<_> = (0..n).map(|i| unit_vector(n, i)).collect();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let v = self.jac(&e[i], &e[j], &e[k]);
                    if !is_zero_vector(&v) {
                        return Some((i, j, k, v));
                    }
                }
            }
        }
        None
    }

    /// Jacobi identity on basis triples `i < j < k`, which is complete by
    /// trilinearity and antisymmetry.
    pub fn is_lie(&self) -> bool {
        self.jacobi_violation().is_none()
    }

    /// `μ(U, W)`: span of the products of basis vectors of `u` and `w`.
    pub fn product_subspace(&self, u: &Subspace, w: &Subspace) -> Result<Subspace, AlgebraError> {
        for s in [u, w] {
            if s.ambient_dim() != self.dim {
                return Err(AlgebraError::DimensionMismatch {
                    expected: self.dim,
                    found: s.ambient_dim(),
                });
            }
        }
        let mut products = Vec::new();
        for x in u.basis_vectors() {
            for y in w.basis_vectors() {
                products.push(self.mul(x, y));
            }
        }
        Ok(Subspace::span(&products, self.dim).expect("products have length dim"))
    }

    /// The derived algebra `μ(V, V)`.
    pub fn derived_algebra(&self) -> Subspace {
        let products: Vec<_> = self.constants.values().cloned().collect();
        Subspace::span(&products, self.dim).expect("stored vectors have length dim")
    }

    pub fn is_perfect(&self) -> bool {
        self.derived_algebra().is_full()
    }

    /// `𝔤₂ = μ(𝔤⁽²⁾, 𝔤)`.
    pub fn lower_central_second(&self) -> Subspace {
        self.product_subspace(&self.derived_algebra(), &Subspace::full(self.dim))
            .expect("subspaces live in the algebra")
    }

    /// `{X : μ(X, g) = 0 for every generator g}`.
    pub fn centralizer<V: AsRef<[Rational]>>(&self, generators: &[V]) -> Result<Subspace, AlgebraError> {
        let n = self.dim;
        for g in generators {
            self.check_len(g.as_ref())?;
        }
        // X ↦ μ(X, g) has column m equal to μ(e_m, g).
        let mut system = Matrix::zeros(0, n);
        for g in generators {
            let columns: Vec<_> = (0..n).map(|m| self.mul(&unit_vector(n, m), g.as_ref())).collect();
            let block = Matrix::from_columns(n, &columns).expect("columns have length dim");
            system = system.vstack(&block).expect("blocks share the column count");
        }
        Ok(nullspace(&system))
    }

    pub fn center(&self) -> Subspace {
        let basis: Vec<_> = (0..self.dim).map(|i| unit_vector(self.dim, i)).collect();
        self.centralizer(&basis).expect("basis vectors have length dim")
    }

    /// Direct product with `self`'s basis first, then `other`'s.
    pub fn direct_product(&self, other: &Algebra) -> Algebra {
        let dim = self.dim + other.dim;
        let mut constants = BTreeMap::new();
        for (&(i, j), v) in &self.constants {
            let mut w = v.clone();
            w.resize(dim, Rational::zero());
            constants.insert((i, j), w);
        }
        for (&(i, j), v) in &other.constants {
            let mut w = zero_vector(self.dim);
            w.extend(v.iter().cloned());
            constants.insert((i + self.dim, j + self.dim), w);
        }
        let name = match (&self.name, &other.name) {
            (Some(a), Some(b)) => Some(format!("{a}x{b}")),
            _ => None,
        };
        Algebra { dim, constants, name }
    }

    /// `K ⋉_T K^m`: the generator `e_0` acts on `e_1..e_m` through `T`, and
    /// all other products vanish.
    pub fn one_dim_extension(t_map: &Matrix) -> Result<Algebra, AlgebraError> {
        if !t_map.is_square() {
            return Err(AlgebraError::NotSquare {
                rows: t_map.rows(),
                cols: t_map.cols(),
            });
        }
        let m = t_map.rows();
        let mut a = Algebra::new(m + 1);
        for i in 0..m {
            let mut v = vec![Rational::zero()];
            v.extend(t_map.column(i));
            a.set_product(0, i + 1, v)?;
        }
        Ok(a)
    }

    /// Transported law `g·μ(X, Y) = g μ(g⁻¹X, g⁻¹Y)`.
    pub fn change_of_basis(&self, g: &LinearMap) -> Result<Algebra, AlgebraError> {
        if g.dim() != self.dim {
            return Err(AlgebraError::DimensionMismatch {
                expected: self.dim,
                found: g.dim(),
            });
        }
        let h = g.inverse().ok_or(AlgebraError::SingularChangeOfBasis)?;
        let columns: Vec<_> = (0..self.dim).map(|i| h.image_of_basis(i)).collect();
        let mut out = Algebra::new(self.dim);
        out.name = self.name.clone();
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                let v = g.apply(&self.mul(&columns[i], &columns[j]));
                out.set_product(i, j, v)?;
            }
        }
        Ok(out)
    }

    /// Law with constants `μ + s·λ`.
    pub fn deformed_product(&self, lambda: &Algebra, s: &Rational) -> Result<Algebra, AlgebraError> {
        if lambda.dim != self.dim {
            return Err(AlgebraError::DimensionMismatch {
                expected: self.dim,
                found: lambda.dim,
            });
        }
        let mut out = self.clone();
        out.name = None;
        for (&(i, j), v) in &lambda.constants {
            let base = self.basis_product(i, j);
            let w = base.iter().zip(v).map(|(b, l)| b + s * l).collect();
            out.set_product(i, j, w)?;
        }
        Ok(out)
    }
}
