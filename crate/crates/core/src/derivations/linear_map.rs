use crate::linalg::{LinalgError, Matrix, Rational};

/// Endomorphism of ℚⁿ. Column `j` of the matrix holds the coordinates of
/// the image of `e_j`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LinearMap {
    matrix: Matrix,
}

impl LinearMap {
    pub fn new(matrix: Matrix) -> Result<Self, LinalgError> {
        if !matrix.is_square() {
            return Err(LinalgError::DimensionMismatch {
                expected: matrix.rows(),
                found: matrix.cols(),
            });
        }
        Ok(Self { matrix })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            matrix: Matrix::identity(n),
        }
    }

    pub fn zero(n: usize) -> Self {
        Self {
            matrix: Matrix::zeros(n, n),
        }
    }

    pub fn diagonal(diag: &[Rational]) -> Self {
        Self {
            matrix: Matrix::diagonal(diag),
        }
    }

    /// Map sending `e_j` to `images[j]`.
    pub fn from_images(images: &[Vec<Rational>]) -> Result<Self, LinalgError> {
        Self::new(Matrix::from_columns(images.len(), images)?)
    }

    /// Inverse of [`LinearMap::vectorize`]: column-major, `n²` entries.
    pub fn from_vectorized(n: usize, v: &[Rational]) -> Result<Self, LinalgError> {
        if v.len() != n * n {
            return Err(LinalgError::DimensionMismatch {
                expected: n * n,
                found: v.len(),
            });
        }
        Ok(Self {
            matrix: Matrix::from_fn(n, n, |r, c| v[c * n + r].clone()),
        })
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> Matrix {
        self.matrix
    }

    /// Column-major flattening: all of `D(e_0)`, then `D(e_1)`, and so on.
    pub fn vectorize(&self) -> Vec<Rational> {
        let n = self.dim();
        let mut out = Vec::with_capacity(n * n);
        for c in 0..n {
            out.extend(self.matrix.column(c));
        }
        out
    }

    pub fn apply(&self, v: &[Rational]) -> Vec<Rational> {
        self.matrix.mul_vec(v)
    }

    /// Image of the basis vector `e_j`.
    pub fn image_of_basis(&self, j: usize) -> Vec<Rational> {
        self.matrix.column(j)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Self {
        Self {
            matrix: self.matrix.matmul(&other.matrix),
        }
    }

    pub fn scale(&self, k: &Rational) -> Self {
        Self {
            matrix: self.matrix.scale(k),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        Self {
            matrix: self.matrix.add(&other.matrix),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self {
            matrix: self.matrix.sub(&other.matrix),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        Self {
            matrix: self.matrix.pow(k),
        }
    }

    pub fn inverse(&self) -> Option<Self> {
        self.matrix.inverse().map(|matrix| Self { matrix })
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }
}
