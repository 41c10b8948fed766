// SPDX-License-Identifier: Apache-2.0

//! Symmetrized Mordell-Tornheim zeta values ζ̄ₙ(1, …, 1).
//!
//! ζ̄ₙ sums 1/|a₁⋯aₙ| over all nonzero integer tuples with a₁ + … + aₙ = 0.
//! This crate evaluates it along two independent routes:
//!
//! * [`series`] builds the exact closed form, a complete Bell polynomial over
//!   the Taylor coefficients of ln Γ(1-2x) - 2 ln Γ(1-x), as a
//!   [`ZetaPolynomial`] with rational coefficients;
//! * [`oracle`] sums the defining lattice series directly, either by brute
//!   force over a box or through the faster sign-signature decomposition.
//!
//! [`inversion`] turns the closed forms around (ζ(n) as a polynomial in ζ̄ₖ)
//! and runs empirical checks on the monomial count and on rationality of
//! ζ̄ₙ / πⁿ.

pub mod algebra;
pub mod bigfloat;
pub mod combinatorics;
pub mod constants;
pub mod inversion;
pub mod oracle;
pub mod series;
mod summation;

pub use algebra::{
    Basis, Eta, EtaPolynomial, Monomial, Polynomial, ZbarPolynomial, Zeta, ZetaBar, ZetaMonomial,
    ZetaPolynomial,
};
pub use bigfloat::{BigFloat, DEFAULT_DIGITS};
pub use inversion::InversionIdentity;
pub use oracle::{OracleResult, WeightVector};
pub use series::{closed_form, closed_form_eta, FormalSeries};

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("zeta argument must be an integer >= 2, got {0}")]
    ZetaArgument(i64),
    #[error("gamma argument must be a positive integer, got {0}")]
    GammaArgument(i64),
    #[error("precision of {digits} digits is below the minimum of {min}")]
    Precision { digits: usize, min: usize },
    #[error("accelerated series for eta({k}) did not confirm {digits} digits")]
    SelfCheck { k: u32, digits: usize },
    #[error("cutoff must be at least 1")]
    Cutoff,
    #[error("weights must be non-empty and every weight >= 1")]
    Weights,
    #[error("exact lattice mode supports depth <= {max_depth} and cutoff <= {max_cutoff}")]
    ExactModeLimits { max_depth: usize, max_cutoff: u64 },
    #[error("x = {0} lies outside [0, 1/2)")]
    Domain(String),
    #[error("series exponential needs a zero constant term")]
    NonZeroConstantTerm,
    #[error("inversion failed at n = {n}: {reason}")]
    Inversion { n: usize, reason: String },
    #[error("{what} must be at least {min}")]
    Argument { what: &'static str, min: u64 },
}
