//! (α,β,γ)-derivations and the spaces built from them.
//!
//! A linear map `D` is an (α,β,γ)-derivation of `(V, μ)` when
//!
//! ```text
//! α·D(μ(X, Y)) = β·μ(DX, Y) + γ·μ(X, DY)    for all X, Y ∈ V.
//! ```
//!
//! The condition is linear in the entries of `D`, so the set of solutions is
//! the kernel of a matrix acting on the column-major vectorization of `D`
//! (see [`LinearMap::vectorize`]). Swapping `X` and `Y` exchanges the roles of
//! β and γ, so the system has one block of rows per *ordered* basis pair.

mod linear_map;

use std::fmt;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::algebra::Algebra;
use crate::linalg::{int, is_zero_vector, nullspace, unit_vector, zero_vector, Matrix, Rational, Subspace};

pub use linear_map::LinearMap;

/// The scalars `(α, β, γ)`. Every triple is legal, including `(0, 0, 0)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct DerivationParams {
    pub alpha: Rational,
    pub beta: Rational,
    pub gamma: Rational,
}

impl DerivationParams {
    pub fn new(alpha: Rational, beta: Rational, gamma: Rational) -> Self {
        Self { alpha, beta, gamma }
    }

    pub fn from_ints(alpha: i64, beta: i64, gamma: i64) -> Self {
        Self::new(int(alpha), int(beta), int(gamma))
    }

    /// `(t, 1, 0)`, the family behind φ_{n,t}.
    pub fn phi(t: Rational) -> Self {
        Self::new(t, Rational::one(), Rational::zero())
    }

    /// `(1, 1, 0)`: the centroid.
    pub fn centroid() -> Self {
        Self::from_ints(1, 1, 0)
    }
}

impl fmt::Display for DerivationParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.alpha, self.beta, self.gamma)
    }
}

/// What a [`MapSpace`] is a space of.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum SpaceKind {
    Derivations(DerivationParams),
    /// `Ω = {T : Im T ⊆ Z, 𝔄⁽²⁾ ⊆ Ker T}`.
    Omega,
}

/// A subspace of `L(V; V)` with a canonical basis.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MapSpace {
    kind: SpaceKind,
    algebra_dim: usize,
    basis: Vec<LinearMap>,
    vectorized: Subspace,
}

impl MapSpace {
    /// Space whose vectorizations are the given subspace of ℚ^{n²}.
    pub fn from_vectorized(kind: SpaceKind, algebra_dim: usize, vectorized: Subspace) -> Self {
        assert_eq!(vectorized.ambient_dim(), algebra_dim * algebra_dim, "not a space of n×n maps");
        let basis = vectorized
            .basis_vectors()
            .map(|v| LinearMap::from_vectorized(algebra_dim, v).expect("length is n²"))
            .collect();
        Self {
            kind,
            algebra_dim,
            basis,
            vectorized,
        }
    }

    /// Span of arbitrary maps, canonicalized. Nothing is checked about `kind`.
    pub fn from_maps(kind: SpaceKind, algebra_dim: usize, maps: &[LinearMap]) -> Self {
        let vectors: Vec<_> = maps
            .iter()
            .map(|m| {
                assert_eq!(m.dim(), algebra_dim, "map of the wrong size");
                m.vectorize()
            })
            .collect();
        let sub = Subspace::span(&vectors, algebra_dim * algebra_dim).expect("vectorizations have length n²");
        Self::from_vectorized(kind, algebra_dim, sub)
    }

    pub fn kind(&self) -> &SpaceKind {
        &self.kind
    }

    pub fn params(&self) -> Option<&DerivationParams> {
        match &self.kind {
            SpaceKind::Derivations(p) => Some(p),
            SpaceKind::Omega => None,
        }
    }

    pub fn algebra_dim(&self) -> usize {
        self.algebra_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[LinearMap] {
        &self.basis
    }

    pub fn vectorized(&self) -> &Subspace {
        &self.vectorized
    }

    pub fn contains(&self, d: &LinearMap) -> bool {
        d.dim() == self.algebra_dim && self.vectorized.contains(&d.vectorize())
    }

    pub fn is_subspace_of(&self, other: &MapSpace) -> bool {
        self.vectorized.is_subspace_of(&other.vectorized)
    }
}

/// A basis pair on which the defining identity fails, with both sides.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IdentityDefect {
    pub i: usize,
    pub j: usize,
    /// `α·D(μ(e_i, e_j))`
    pub lhs: Vec<Rational>,
    /// `β·μ(De_i, e_j) + γ·μ(e_i, De_j)`
    pub rhs: Vec<Rational>,
}

impl fmt::Display for IdentityDefect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "pair (e_{}, e_{}): lhs = [", self.i, self.j)?;
        write_vector(f, &self.lhs)?;
        write!(f, "], rhs = [")?;
        write_vector(f, &self.rhs)?;
        write!(f, "]")
    }
}

pub(crate) fn write_vector(f: &mut impl fmt::Write, v: &[Rational]) -> fmt::Result {
    for (k, x) in v.iter().enumerate() {
        if k > 0 {
            write!(f, ", ")?;
        }
        write!(f, "{x}")?;
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DerivationError {
    #[error("parameter t = {0} is excluded (t must avoid 0 and 1)")]
    ExcludedParameter(Rational),
    #[error("the algebra does not satisfy the Jacobi identity")]
    NotLie,
    #[error("the algebra is perfect")]
    Perfect,
    #[error("map is not a {params}-derivation: {defect}")]
    NotADerivation {
        params: DerivationParams,
        defect: IdentityDefect,
    },
    #[error("subspace is not a complement of the derived algebra")]
    NotAComplement,
    #[error("image of derived-algebra basis vector {0} leaves Z ∩ 𝔤⁽²⁾")]
    ImageEscapesCodomain(usize),
    #[error("λ(e_{i}, e_{j}) + λ(e_{j}, e_{i}) ≠ 0")]
    NotAntisymmetric { i: usize, j: usize },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
}

/// `t ∈ {0, 1}`.
pub fn is_excluded_parameter(t: &Rational) -> bool {
    t.is_zero() || t.is_one()
}

fn require_admissible_t(t: &Rational) -> Result<(), DerivationError> {
    if is_excluded_parameter(t) {
        return Err(DerivationError::ExcludedParameter(t.clone()));
    }
    Ok(())
}

fn require_dim(a: &Algebra, d: &LinearMap) -> Result<(), DerivationError> {
    if a.dim() != d.dim() {
        return Err(DerivationError::DimensionMismatch {
            expected: a.dim(),
            found: d.dim(),
        });
    }
    Ok(())
}

fn require_derivation(a: &Algebra, p: &DerivationParams, d: &LinearMap) -> Result<(), DerivationError> {
    require_dim(a, d)?;
    match identity_defect(a, p, d) {
        None => Ok(()),
        Some(defect) => Err(DerivationError::NotADerivation {
            params: p.clone(),
            defect,
        }),
    }
}

/// First ordered basis pair `(i, j)` where `d` violates the `p`-identity.
pub fn identity_defect(a: &Algebra, p: &DerivationParams, d: &LinearMap) -> Option<IdentityDefect> {
    let n = a.dim();
    assert_eq!(d.dim(), n, "map and algebra dimensions differ");
    let images: Vec<_> = (0..n).map(|j| d.image_of_basis(j)).collect();
    let e: Vec<_> = (0..n).map(|i| unit_vector(n, i)).collect();
    for i in 0..n {
        for j in 0..n {
            let lhs: Vec<Rational> = d.apply(&a.basis_product(i, j)).iter().map(|x| x * &p.alpha).collect();
            let left = a.mul(&images[i], &e[j]);
            let right = a.mul(&e[i], &images[j]);
            let rhs: Vec<Rational> = left
                .iter()
                .zip(&right)
                .map(|(l, r)| &p.beta * l + &p.gamma * r)
                .collect();
            if lhs != rhs {
                return Some(IdentityDefect { i, j, lhs, rhs });
            }
        }
    }
    None
}

pub fn is_derivation(a: &Algebra, p: &DerivationParams, d: &LinearMap) -> bool {
    identity_defect(a, p, d).is_none()
}

/// Linear system whose kernel is the vectorized derivation space.
///
/// Shape `n³ × n²`. Row `(i·n + j)·n + k` is coordinate `k` of
/// `α·D(μ(e_i, e_j)) − β·μ(De_i, e_j) − γ·μ(e_i, De_j)` over every ordered
/// pair `(i, j)`; column `c·n + r` is the unknown entry `D[r][c]`.
pub fn constraint_matrix(a: &Algebra, p: &DerivationParams) -> Matrix {
    let n = a.dim();
    let mut m = Matrix::zeros(n * n * n, n * n);
    let products: Vec<Vec<Vec<Rational>>> = (0..n).map(|i| (0..n).map(|j| a.basis_product(i, j)).collect()).collect();
    for i in 0..n {
        for j in 0..n {
            let base = (i * n + j) * n;
            if !p.alpha.is_zero() {
                for (mm, c) in products[i][j].iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    let coeff = &p.alpha * c;
                    for k in 0..n {
                        m[(base + k, mm * n + k)] += &coeff;
                    }
                }
            }
            for r in 0..n {
                if !p.beta.is_zero() {
                    for (k, c) in products[r][j].iter().enumerate() {
                        if !c.is_zero() {
                            m[(base + k, i * n + r)] -= &p.beta * c;
                        }
                    }
                }
                if !p.gamma.is_zero() {
                    for (k, c) in products[i][r].iter().enumerate() {
                        if !c.is_zero() {
                            m[(base + k, j * n + r)] -= &p.gamma * c;
                        }
                    }
                }
            }
        }
    }
    m
}

/// `D(α,β,γ)(𝔄)`. Each basis map is re-checked against the identity.
pub fn derivation_space(a: &Algebra, p: &DerivationParams) -> MapSpace {
    let n = a.dim();
    let system = constraint_matrix(a, p);
    let space = MapSpace::from_vectorized(SpaceKind::Derivations(p.clone()), n, nullspace(&system));
    for (idx, d) in space.basis().iter().enumerate() {
        if let Some(defect) = identity_defect(a, p, d) {
            panic!("solver returned a non-derivation as basis element {idx}: {defect}");
        }
    }
    space
}

/// φ_{n,t}(μ) = dim D(t,1,0).
pub fn phi(a: &Algebra, t: &Rational) -> usize {
    derivation_space(a, &DerivationParams::phi(t.clone())).dim()
}

/// `Ω(𝔄) = D(0,1,0) ∩ D(1,0,0)`.
pub fn omega_space(a: &Algebra) -> MapSpace {
    let image_in_center = derivation_space(a, &DerivationParams::from_ints(0, 1, 0));
    let kills_derived = derivation_space(a, &DerivationParams::from_ints(1, 0, 0));
    let both = image_in_center
        .vectorized()
        .intersect(kills_derived.vectorized())
        .expect("both live in L(V; V)");
    MapSpace::from_vectorized(SpaceKind::Omega, a.dim(), both)
}

/// The centroid `D(1,1,0)(𝔄)`.
pub fn centroid(a: &Algebra) -> MapSpace {
    derivation_space(a, &DerivationParams::centroid())
}

fn require_non_perfect_lie(a: &Algebra) -> Result<(), DerivationError> {
    if !a.is_lie() {
        return Err(DerivationError::NotLie);
    }
    if a.is_perfect() {
        return Err(DerivationError::Perfect);
    }
    Ok(())
}

/// Sends `d ∈ D(t,1,0)` to the map acting as `(s/t)·d` on the coordinate
/// complement of `𝔤⁽²⁾` and as `d` on `𝔤⁽²⁾`. The result lies in
/// `D(s,1,0)`; for `s ∉ {0, 1}` swapping `t` and `s` inverts it.
pub fn transport(a: &Algebra, d: &LinearMap, t: &Rational, s: &Rational) -> Result<LinearMap, DerivationError> {
    let complement = a.derived_algebra().coordinate_complement();
    transport_with_complement(a, d, t, s, &complement)
}

/// [`transport`] with an explicit complement of the derived algebra.
pub fn transport_with_complement(
    a: &Algebra,
    d: &LinearMap,
    t: &Rational,
    s: &Rational,
    complement: &Subspace,
) -> Result<LinearMap, DerivationError> {
    require_admissible_t(t)?;
    require_non_perfect_lie(a)?;
    require_derivation(a, &DerivationParams::phi(t.clone()), d)?;
    let derived = a.derived_algebra();
    if complement.ambient_dim() != a.dim()
        || complement.dim() + derived.dim() != a.dim()
        || !complement.sum(&derived).map_or(false, |s| s.is_full())
    {
        return Err(DerivationError::NotAComplement);
    }
    let n = a.dim();
    let columns: Vec<Vec<Rational>> = complement
        .basis_vectors()
        .chain(derived.basis_vectors())
        .map(<[Rational]>::to_vec)
        .collect();
    let change = Matrix::from_columns(n, &columns).expect("basis vectors have length n");
    let change_inv = change.inverse().expect("complement and derived algebra span V");
    let ratio = s / t;
    let scale: Vec<Rational> = (0..n)
        .map(|i| if i < complement.dim() { ratio.clone() } else { Rational::one() })
        .collect();
    let m = d
        .matrix()
        .matmul(&change)
        .matmul(&Matrix::diagonal(&scale))
        .matmul(&change_inv);
    Ok(LinearMap::new(m).expect("square"))
}

/// Matrix of `d` restricted to `𝔤⁽²⁾ → Z(𝔤) ∩ 𝔤⁽²⁾`, in the canonical bases
/// of both subspaces (rows: codomain, columns: domain).
///
/// A zero-dimensional codomain yields an empty matrix.
pub fn restrict_to_derived(a: &Algebra, d: &LinearMap, t: &Rational) -> Result<Matrix, DerivationError> {
    require_admissible_t(t)?;
    if !a.is_lie() {
        return Err(DerivationError::NotLie);
    }
    require_derivation(a, &DerivationParams::phi(t.clone()), d)?;
    let derived = a.derived_algebra();
    let codomain = a.center().intersect(&derived).expect("same ambient space");
    let mut columns = Vec::with_capacity(derived.dim());
    for (idx, b) in derived.basis_vectors().enumerate() {
        let coords = codomain
            .coordinates(&d.apply(b))
            .ok_or(DerivationError::ImageEscapesCodomain(idx))?;
        columns.push(coords);
    }
    Ok(Matrix::from_columns(codomain.dim(), &columns).expect("coordinates have codomain length"))
}

/// Smallest `k ≤ n` with `d^k = 0` (at least 1), or `None` if `d` is not nilpotent.
pub fn is_nilpotent(d: &LinearMap) -> Option<usize> {
    let n = d.dim().max(1);
    let mut power = d.clone();
    for k in 1..=n {
        if power.is_zero() {
            return Some(k);
        }
        power = power.compose(d);
    }
    None
}

/// Number of pairs `i < j` among `n` indices.
pub fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Lexicographic index of the pair `(i, j)`, `i < j < n`.
pub fn pair_index(n: usize, i: usize, j: usize) -> usize {
    assert!(i < j && j < n, "pair ({i}, {j}) is not ordered inside 0..{n}");
    i * n - i * (i + 1) / 2 + (j - i - 1)
}

/// Coordinates of the law in structure-constant space: entry
/// `pair_index(i, j)·n + k` is `c_{ij}^k`.
pub fn structure_vector(a: &Algebra) -> Vec<Rational> {
    let n = a.dim();
    let mut v = zero_vector(pair_count(n) * n);
    for (&(i, j), c) in a.constants() {
        let base = pair_index(n, i, j) * n;
        for (k, x) in c.iter().enumerate() {
            v[base + k] = x.clone();
        }
    }
    v
}

/// Inverse of [`structure_vector`].
pub fn algebra_from_structure_vector(n: usize, v: &[Rational]) -> Result<Algebra, DerivationError> {
    if v.len() != pair_count(n) * n {
        return Err(DerivationError::DimensionMismatch {
            expected: pair_count(n) * n,
            found: v.len(),
        });
    }
    let mut a = Algebra::new(n);
    for i in 0..n {
        for j in i + 1..n {
            let base = pair_index(n, i, j) * n;
            a.set_product(i, j, v[base..base + n].to_vec())
                .expect("indices and lengths are in range");
        }
    }
    Ok(a)
}

/// All anti-commutative laws on ℚⁿ for which `d` satisfies the `p`-identity,
/// as a subspace of structure-constant space (see [`structure_vector`]).
pub fn products_admitting(d: &LinearMap, p: &DerivationParams) -> Subspace {
    let n = d.dim();
    let cols = pair_count(n) * n;
    // Column of the unknown c_{xy}^z with its antisymmetry sign.
    let unknown = |x: usize, y: usize, z: usize| -> Option<(usize, Rational)> {
        match x.cmp(&y) {
            std::cmp::Ordering::Less => Some((pair_index(n, x, y) * n + z, Rational::one())),
            std::cmp::Ordering::Greater => Some((pair_index(n, y, x) * n + z, -Rational::one())),
            std::cmp::Ordering::Equal => None,
        }
    };
    let dm = d.matrix();
    let mut rows = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let mut row = zero_vector(cols);
                // α·Σ_m c_{ij}^m D[k][m]
                for m in 0..n {
                    let dkm = &dm[(k, m)];
                    if p.alpha.is_zero() || dkm.is_zero() {
                        continue;
                    }
                    if let Some((col, sign)) = unknown(i, j, m) {
                        row[col] += &p.alpha * dkm * sign;
                    }
                }
                for r in 0..n {
                    // −β·Σ_r D[r][i] c_{rj}^k
                    let dri = &dm[(r, i)];
                    if !p.beta.is_zero() && !dri.is_zero() {
                        if let Some((col, sign)) = unknown(r, j, k) {
                            row[col] -= &p.beta * dri * sign;
                        }
                    }
                    // −γ·Σ_r D[r][j] c_{ir}^k
                    let drj = &dm[(r, j)];
                    if !p.gamma.is_zero() && !drj.is_zero() {
                        if let Some((col, sign)) = unknown(i, r, k) {
                            row[col] -= &p.gamma * drj * sign;
                        }
                    }
                }
                if !is_zero_vector(&row) {
                    rows.push(row);
                }
            }
        }
    }
    nullspace(&Matrix::from_rows(cols, rows).expect("rows have the unknown count"))
}

/// `λ(X, Y) = μ(DX, Y)` for `d ∈ D(t,1,0)` of a Lie algebra.
pub fn deformation_cocycle(a: &Algebra, d: &LinearMap, t: &Rational) -> Result<Algebra, DerivationError> {
    require_admissible_t(t)?;
    if !a.is_lie() {
        return Err(DerivationError::NotLie);
    }
    require_derivation(a, &DerivationParams::phi(t.clone()), d)?;
    cocycle_unchecked(a, d)
}

/// [`deformation_cocycle`] without the derivation preconditions; still
/// rejects a non-antisymmetric result.
pub fn cocycle_unchecked(a: &Algebra, d: &LinearMap) -> Result<Algebra, DerivationError> {
    require_dim(a, d)?;
    let n = a.dim();
    let e: Vec<_> = (0..n).map(|i| unit_vector(n, i)).collect();
    let images: Vec<_> = (0..n).map(|j| d.image_of_basis(j)).collect();
    let mut lambda = Algebra::new(n);
    for i in 0..n {
        for j in i..n {
            let ij = a.mul(&images[i], &e[j]);
            let ji = a.mul(&images[j], &e[i]);
            let sum: Vec<Rational> = ij.iter().zip(&ji).map(|(x, y)| x + y).collect();
            if !is_zero_vector(&sum) {
                return Err(DerivationError::NotAntisymmetric { i, j });
            }
            if i < j {
                lambda.set_product(i, j, ij).expect("indices in range");
            }
        }
    }
    Ok(lambda)
}
