//! A verification toolkit for finitely presented *-algebras carrying finite
//! cyclic group actions: crossed products, twisted joins, equivariant
//! homomorphisms, and the obstructions that rule them out.
//!
//! The engine works in two registers that check each other:
//!
//! * **Exact**: noncommutative *-polynomials over cyclotomic rationals
//!   extended by path parameters `(t, s)` with `s^2 = 1 - t^2`, reduced to
//!   normal form by oriented rewriting systems ([`poly`]). Identities such as
//!   `a_t^2 + b_t^2 = 1` are certified by a zero normal form.
//! * **Numeric**: concrete matrix representations of the same presentations
//!   ([`numeric`]), used to cross-check every symbolic verdict and to drive
//!   spectral detectors (projection ranks, determinant winding numbers,
//!   sampled homotopy certificates) in [`obstruction`].
//!
//! Higher layers build cyclic actions ([`action`]), crossed products and the
//! matrix expansion map ([`crossed`]), twisted joins with boundary conditions
//! ([`join`]), and generator-level *-homomorphisms with equivariance
//! certification ([`hom`]). Named end-to-end scenarios with declared expected
//! verdicts live in [`scenario`] and behind the `ncbu` command-line tool.

pub mod error;
pub mod scalar;

pub mod poly;

pub mod action;
pub mod crossed;
pub mod hom;
pub mod join;

pub mod numeric;
pub mod obstruction;
pub mod scenario;

/// Tolerance tiers used across numeric checks.
pub mod tolerance {
    /// Residual allowed on directly assigned quantities (e.g. representation
    /// relations at construction).
    pub const ASSIGNED: f64 = 1e-12;
    /// Residual allowed on constructed quantities (e.g. block expansions).
    pub const CONSTRUCTED: f64 = 1e-10;
    /// Residual allowed on derived quantities (e.g. oracle comparisons over
    /// a sampling grid).
    pub const DERIVED: f64 = 1e-9;
}

pub use error::{
    NumericError, ObstructionError, PolyError, ScalarError, ScenarioError, StructureError,
};
