use num_traits::Zero;

use super::{is_zero_vector, nullspace, rref, unit_vector, LinalgError, Matrix, Rational};

/// Subspace of ℚⁿ held by its reduced row echelon basis.
///
/// The basis is canonical, so two subspaces are equal as sets exactly when
/// they compare equal with `==`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient_dim: usize) -> Self {
        Self {
            ambient_dim,
            basis: Matrix::zeros(0, ambient_dim),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Self {
            ambient_dim,
            basis: Matrix::identity(ambient_dim),
            pivots: (0..ambient_dim).collect(),
        }
    }

    /// Row space of `m`.
    pub fn row_space(m: &Matrix) -> Self {
        let (mut reduced, pivots) = rref(m);
        reduced.truncate_rows(pivots.len());
        Self {
            ambient_dim: m.cols(),
            basis: reduced,
            pivots,
        }
    }

    /// Canonical span of `vectors`; every vector must have length `ambient_dim`.
    pub fn span<V: AsRef<[Rational]>>(vectors: &[V], ambient_dim: usize) -> Result<Self, LinalgError> {
        let rows = vectors.iter().map(|v| v.as_ref().to_vec()).collect();
        Ok(Self::row_space(&Matrix::from_rows(ambient_dim, rows)?))
    }

    /// Span of the standard basis vectors with the given indices.
    pub fn coordinate(ambient_dim: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let vectors: Vec<_> = indices.into_iter().map(|i| unit_vector(ambient_dim, i)).collect();
        Self::span(&vectors, ambient_dim).expect("unit vectors have the ambient length")
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn is_zero(&self) -> bool {
        self.pivots.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient_dim
    }

    /// Basis vectors as the rows of an RREF matrix.
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> impl Iterator<Item = &[Rational]> + '_ {
        self.basis.row_vectors()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    fn check_ambient(&self, other: &Self) -> Result<(), LinalgError> {
        if self.ambient_dim != other.ambient_dim {
            return Err(LinalgError::DimensionMismatch {
                expected: self.ambient_dim,
                found: other.ambient_dim,
            });
        }
        Ok(())
    }

    pub fn sum(&self, other: &Self) -> Result<Self, LinalgError> {
        self.check_ambient(other)?;
        Ok(Self::row_space(&self.basis.vstack(&other.basis)?))
    }

    /// `self ∩ other`, computed as the annihilator of `ann(self) + ann(other)`.
    pub fn intersect(&self, other: &Self) -> Result<Self, LinalgError> {
        self.check_ambient(other)?;
        let ann = self.annihilator().sum(&other.annihilator())?;
        Ok(ann.annihilator())
    }

    /// `{x : ⟨b, x⟩ = 0 for every basis vector b}` under the standard dot product.
    pub fn annihilator(&self) -> Self {
        nullspace(&self.basis)
    }

    /// Coordinates of `v` in the canonical basis, or `None` if `v ∉ self`.
    ///
    /// With an RREF basis the only candidate coefficients are the entries of
    /// `v` at the pivot columns; membership is the residual being zero.
    pub fn coordinates(&self, v: &[Rational]) -> Option<Vec<Rational>> {
        assert_eq!(v.len(), self.ambient_dim, "vector length mismatch");
        let coeffs: Vec<Rational> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut residual = v.to_vec();
        for (row, c) in self.basis.row_vectors().zip(&coeffs) {
            if c.is_zero() {
                continue;
            }
            for (r, b) in residual.iter_mut().zip(row) {
                if !b.is_zero() {
                    *r -= c * b;
                }
            }
        }
        is_zero_vector(&residual).then_some(coeffs)
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        self.coordinates(v).is_some()
    }

    pub fn is_subspace_of(&self, other: &Self) -> bool {
        self.ambient_dim == other.ambient_dim && self.basis_vectors().all(|b| other.contains(b))
    }

    /// Span of the standard basis vectors whose indices are not pivots of
    /// this subspace. Always a complement: the sum is everything and the
    /// intersection is zero.
    pub fn coordinate_complement(&self) -> Self {
        let mut is_pivot = vec![false; self.ambient_dim];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        Self::coordinate(self.ambient_dim, (0..self.ambient_dim).filter(|&i| !is_pivot[i]))
    }

    /// Image of this subspace under a square matrix acting on column vectors.
    pub fn image_under(&self, m: &Matrix) -> Self {
        assert_eq!(m.cols(), self.ambient_dim, "matrix does not act on this ambient space");
        let images: Vec<_> = self.basis_vectors().map(|b| m.mul_vec(b)).collect();
        Self::span(&images, m.rows()).expect("images have the codomain length")
    }
}

impl Default for Subspace {
    fn default() -> Self {
        Self::zero(0)
    }
}
