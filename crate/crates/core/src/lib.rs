//! Exact computation of (α,β,γ)-derivation spaces of finite-dimensional
//! anti-commutative algebras over ℚ, together with the invariants built on
//! them (φ_{n,t}, Ω, the centroid) and executable checks of their known
//! properties.
//!
//! Algebras are given by structure constants with 0-based indices; linear
//! maps are square matrices whose column `j` is the image of `e_j`.

pub mod algebra;
pub mod catalog;
pub mod derivations;
pub mod linalg;
pub mod verifier;

pub use algebra::{Algebra, AlgebraError};
pub use derivations::{DerivationParams, LinearMap, MapSpace};
pub use linalg::{Matrix, Rational, Subspace};
