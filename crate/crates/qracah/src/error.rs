//! Crate-wide error type.

use thiserror::Error;

/// Errors raised by evaluation, verification and study routines.
#[derive(Debug, Error)]
pub enum Error {
    /// Precision context violates its invariants (digits/tolerance floors).
    #[error("invalid precision: {0}")]
    InvalidPrecision(String),

    /// A parameter set fails the admissibility conditions of its family.
    /// The message names the violated condition.
    #[error("invalid parameter: {0}")]
    Parameter(String),

    /// Gamma_q evaluated at a non-positive integer (within rel_tol of one).
    #[error("Gamma_q pole: s = {s} is a non-positive integer within tolerance")]
    Pole { s: f64 },

    /// A denominator q-Pochhammer symbol vanished inside a series.
    #[error("denominator q-Pochhammer vanishes at term k = {k}")]
    DenominatorZero { k: usize },

    /// Requested degree exceeds the finite family's range.
    #[error("degree n = {n} out of range (maximum {max})")]
    Degree { n: usize, max: usize },

    /// An infinite sum or product failed its truncation criterion.
    #[error("no convergence within {max_terms} terms")]
    NonConvergence { max_terms: usize },

    /// The mass-point modification is not quasi-definite at this degree:
    /// kappa_m(left, right) = 0.
    #[error("singular Krall modification: kappa_{m}(left,right) vanishes")]
    SingularModification { m: i64 },

    /// Christoffel-Darboux form requested at coincident points.
    #[error("coincident points in Christoffel-Darboux kernel form")]
    CoincidentPoints,

    /// CLI configuration error.
    #[error("config: {0}")]
    Config(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
