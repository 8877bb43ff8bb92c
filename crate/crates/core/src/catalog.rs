//! Named algebras used as fixtures, each with the invariants known for it.
//!
//! Indices are 0-based throughout, so the product written `μ(e1, e3) = e1`
//! for 𝔄_s is stored as `μ(e_0, e_2) = e_0` here.

use std::fmt;

use num_traits::Zero;
use thiserror::Error;

use crate::algebra::Algebra;
use crate::derivations::{centroid, derivation_space, omega_space, phi, DerivationParams};
use crate::linalg::{int, ratio, unit_vector, zero_vector, Matrix, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("unknown catalog algebra `{0}`")]
    UnknownName(String),
    #[error("`{name}` expects {expected} parameter(s), got {found}")]
    Arity {
        name: String,
        expected: usize,
        found: usize,
    },
    #[error("`{name}` parameter must be a non-negative integer, got {value}")]
    NotANatural { name: String, value: Rational },
    #[error("standard filiform algebras need dimension at least 4, got {0}")]
    FiliformTooSmall(usize),
}

fn named(a: Algebra, name: impl Into<String>) -> Algebra {
    a.with_name(name)
}

/// `Kⁿ` with the zero product.
pub fn abelian(n: usize) -> Algebra {
    named(Algebra::new(n), format!("abelian({n})"))
}

/// The affine Lie algebra: `μ(e_0, e_1) = e_1`.
pub fn aff() -> Algebra {
    let a = Algebra::one_dim_extension(&Matrix::identity(1)).expect("identity is square");
    named(a, "aff")
}

/// Heisenberg algebra: `μ(e_0, e_1) = e_2`.
pub fn heisenberg3() -> Algebra {
    let a = Algebra::from_products(3, [(0, 1, unit_vector(3, 2))]).expect("valid constants");
    named(a, "h3")
}

/// `𝔄_s`: `μ(e_0, e_2) = e_0`, `μ(e_0, e_3) = s·e_1`, `μ(e_1, e_2) = s·e_1`.
pub fn family_as(s: Rational) -> Algebra {
    let mut s_e1 = zero_vector(4);
    s_e1[1] = s.clone();
    let a = Algebra::from_products(4, [(0, 2, unit_vector(4, 0)), (0, 3, s_e1.clone()), (1, 2, s_e1)])
        .expect("valid constants");
    named(a, format!("As({s})"))
}

/// `sl₂` on `(h, e, f)`: `[h, e] = 2e`, `[h, f] = −2f`, `[e, f] = h`.
pub fn sl2() -> Algebra {
    let a = Algebra::from_products(
        3,
        [
            (0, 1, vec![int(0), int(2), int(0)]),
            (0, 2, vec![int(0), int(0), int(-2)]),
            (1, 2, vec![int(1), int(0), int(0)]),
        ],
    )
    .expect("valid constants");
    debug_assert!(a.is_lie() && a.is_perfect());
    named(a, "sl2")
}

/// Single nilpotent Jordan block of size `m`: `e_i ↦ e_{i+1}`, `e_{m−1} ↦ 0`.
pub fn jordan_block(m: usize) -> Matrix {
    Matrix::from_fn(m, m, |r, c| if r == c + 1 { int(1) } else { Rational::zero() })
}

/// Standard filiform algebra of dimension `n`: the extension of `K^{n−1}` by
/// one nilpotent Jordan block, so `μ(e_0, e_i) = e_{i+1}` for `1 ≤ i ≤ n−2`.
pub fn standard_filiform(n: usize) -> Result<Algebra, CatalogError> {
    if n < 4 {
        return Err(CatalogError::FiliformTooSmall(n));
    }
    let a = Algebra::one_dim_extension(&jordan_block(n - 1)).expect("Jordan block is square");
    Ok(named(a, format!("filiform({n})")))
}

/// `a × K^m`.
pub fn with_abelian_factor(a: &Algebra, m: usize) -> Algebra {
    if m == 0 {
        return a.clone();
    }
    let product = a.direct_product(&Algebra::new(m));
    named(product, format!("{}xK^{m}", a.label()))
}

/// Names accepted by [`by_name`], with their parameter lists.
pub const NAMES: &[(&str, &str)] = &[
    ("abelian", "<n>"),
    ("aff", ""),
    ("h3", ""),
    ("As", "<s>"),
    ("sl2", ""),
    ("filiform", "<n>"),
];

fn natural(name: &str, value: &Rational) -> Result<usize, CatalogError> {
    let err = || CatalogError::NotANatural {
        name: name.to_string(),
        value: value.clone(),
    };
    if !value.is_integer() {
        return Err(err());
    }
    usize::try_from(value.to_integer()).map_err(|_| err())
}

/// Looks up a catalog constructor by name.
pub fn by_name(name: &str, params: &[Rational]) -> Result<Algebra, CatalogError> {
    let arity = |expected: usize| {
        if params.len() == expected {
            Ok(())
        } else {
            Err(CatalogError::Arity {
                name: name.to_string(),
                expected,
                found: params.len(),
            })
        }
    };
    match name {
        "abelian" => {
            arity(1)?;
            Ok(abelian(natural(name, &params[0])?))
        }
        "aff" => arity(0).map(|_| aff()),
        "h3" => arity(0).map(|_| heisenberg3()),
        "As" => {
            arity(1)?;
            Ok(family_as(params[0].clone()))
        }
        "sl2" => arity(0).map(|_| sl2()),
        "filiform" => {
            arity(1)?;
            standard_filiform(natural(name, &params[0])?)
        }
        other => Err(CatalogError::UnknownName(other.to_string())),
    }
}

/// An invariant that can be recomputed from an algebra.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Invariant {
    IsLie,
    IsPerfect,
    DerivedDim,
    CenterDim,
    OmegaDim,
    CentroidDim,
    /// φ_{n,t}
    Phi(Rational),
    /// dim D(α,β,γ)
    Derivations(DerivationParams),
}

impl fmt::Display for Invariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Invariant::IsLie => write!(f, "is_lie"),
            Invariant::IsPerfect => write!(f, "is_perfect"),
            Invariant::DerivedDim => write!(f, "dim_derived"),
            Invariant::CenterDim => write!(f, "dim_center"),
            Invariant::OmegaDim => write!(f, "dim_omega"),
            Invariant::CentroidDim => write!(f, "dim_centroid"),
            Invariant::Phi(t) => write!(f, "phi({t})"),
            Invariant::Derivations(p) => write!(f, "dim_D{p}"),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum InvariantValue {
    Flag(bool),
    Count(usize),
}

impl fmt::Display for InvariantValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InvariantValue::Flag(b) => write!(f, "{b}"),
            InvariantValue::Count(n) => write!(f, "{n}"),
        }
    }
}

impl Invariant {
    pub fn compute(&self, a: &Algebra) -> InvariantValue {
        use InvariantValue::{Count, Flag};
        match self {
            Invariant::IsLie => Flag(a.is_lie()),
            Invariant::IsPerfect => Flag(a.is_perfect()),
            Invariant::DerivedDim => Count(a.derived_algebra().dim()),
            Invariant::CenterDim => Count(a.center().dim()),
            Invariant::OmegaDim => Count(omega_space(a).dim()),
            Invariant::CentroidDim => Count(centroid(a).dim()),
            Invariant::Phi(t) => Count(phi(a, t)),
            Invariant::Derivations(p) => Count(derivation_space(a, p).dim()),
        }
    }
}

/// One expected value that disagreed with recomputation.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Mismatch {
    pub invariant: Invariant,
    pub expected: InvariantValue,
    pub actual: InvariantValue,
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: String,
    pub params: Vec<Rational>,
    pub algebra: Algebra,
    pub expected: Vec<(Invariant, InvariantValue)>,
}

impl CatalogEntry {
    pub fn new(algebra: Algebra, params: Vec<Rational>) -> Self {
        Self {
            name: algebra.label(),
            params,
            algebra,
            expected: Vec::new(),
        }
    }

    pub fn expect(mut self, invariant: Invariant, value: InvariantValue) -> Self {
        self.expected.push((invariant, value));
        self
    }

    fn count(self, invariant: Invariant, n: usize) -> Self {
        self.expect(invariant, InvariantValue::Count(n))
    }

    fn flag(self, invariant: Invariant, b: bool) -> Self {
        self.expect(invariant, InvariantValue::Flag(b))
    }

    /// Recomputes every expected invariant.
    pub fn mismatches(&self) -> Vec<Mismatch> {
        self.expected
            .iter()
            .filter_map(|(invariant, expected)| {
                let actual = invariant.compute(&self.algebra);
                (actual != *expected).then(|| Mismatch {
                    invariant: invariant.clone(),
                    expected: *expected,
                    actual,
                })
            })
            .collect()
    }
}

/// The fixture set the verifier runs against by default.
pub fn default_catalog() -> Vec<CatalogEntry> {
    use Invariant::*;
    let two = int(2);
    let mut out = vec![
        CatalogEntry::new(abelian(3), vec![int(3)])
            .flag(IsLie, true)
            .count(DerivedDim, 0)
            .count(CenterDim, 3)
            .count(OmegaDim, 9)
            .count(Phi(two.clone()), 9),
        CatalogEntry::new(aff(), vec![])
            .flag(IsLie, true)
            .count(CenterDim, 0)
            .count(CentroidDim, 1)
            .count(Derivations(DerivationParams::from_ints(-1, 1, 0)), 0),
    ];
    for m in 1..=2usize {
        // φ = dim Ω = (m + 1)·m on aff × K^m.
        out.push(
            CatalogEntry::new(with_abelian_factor(&aff(), m), vec![int(m as i64)])
                .flag(IsLie, true)
                .count(OmegaDim, (m + 1) * m)
                .count(Phi(two.clone()), (m + 1) * m)
                .count(Phi(int(-1)), (m + 1) * m),
        );
    }
    out.push(
        CatalogEntry::new(heisenberg3(), vec![])
            .flag(IsLie, true)
            .count(DerivedDim, 1)
            .count(CenterDim, 1)
            .count(OmegaDim, 2)
            .count(Phi(two.clone()), 3),
    );
    for m in 1..=2usize {
        // Ω has dimension (m + 2)(m + 1) and the upper bound adds one.
        let omega = (m + 2) * (m + 1);
        out.push(
            CatalogEntry::new(with_abelian_factor(&heisenberg3(), m), vec![int(m as i64)])
                .flag(IsLie, true)
                .count(OmegaDim, omega)
                .count(Phi(two.clone()), omega + 1),
        );
    }
    out.push(
        CatalogEntry::new(family_as(int(0)), vec![int(0)])
            .flag(IsLie, true)
            .count(Phi(two.clone()), 6),
    );
    out.push(CatalogEntry::new(family_as(int(1)), vec![int(1)]).flag(IsLie, true));
    for s in [int(2), int(3), ratio(1, 2), int(-1)] {
        out.push(
            CatalogEntry::new(family_as(s.clone()), vec![s.clone()])
                .flag(IsLie, false)
                .count(DerivedDim, 2)
                .count(Phi(s.clone()), 1)
                .count(Phi(&s + int(1)), 0),
        );
    }
    out.push(
        CatalogEntry::new(with_abelian_factor(&family_as(two.clone()), 1), vec![two.clone(), int(1)])
            .flag(IsLie, false)
            .count(Phi(two.clone()), 1 + 3),
    );
    out.push(
        CatalogEntry::new(sl2(), vec![])
            .flag(IsLie, true)
            .flag(IsPerfect, true)
            .count(CenterDim, 0)
            .count(Phi(two.clone()), 0),
    );
    let sl2_squared = sl2().direct_product(&sl2()).with_name("sl2xsl2");
    out.push(
        CatalogEntry::new(sl2_squared, vec![])
            .flag(IsLie, true)
            .flag(IsPerfect, true)
            .count(Phi(two.clone()), 0),
    );
    for n in 4..=6usize {
        out.push(
            CatalogEntry::new(standard_filiform(n).expect("n >= 4"), vec![int(n as i64)])
                .flag(IsLie, true)
                .count(OmegaDim, 2)
                .count(CentroidDim, 3)
                .count(Phi(two.clone()), 2),
        );
    }
    out
}
