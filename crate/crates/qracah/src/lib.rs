//! Non-standard q-Racah, big q-Jacobi, dual q-Hahn and q-Hahn monic orthogonal
//! polynomials, their two-mass-point Krall-type modifications, and the limit
//! transitions connecting them.
//!
//! The q-Racah family here lives on the parameter-free q-quadratic lattice
//! mu(s) = [s]_q [s+1]_q built from symmetric q-numbers. Under suitable
//! parameter transforms and a renormalization C_n, the family degenerates into
//! big q-Jacobi (N -> infinity), dual q-Hahn (q^alpha -> 0) and q-Hahn
//! (q^a -> 0) polynomials, carrying orthogonality relations, norms and
//! three-term recurrence coefficients along. This crate evaluates all four
//! families and their Krall-type modifications at configurable precision and
//! verifies the limits numerically.
//!
//! Modules:
//! - [`precision`]: configurable-precision arithmetic ([`Real`]) and the
//!   tolerance policy ([`PrecisionContext`])
//! - [`qcore`]: symmetric q-numbers, q-Pochhammer symbols, q-Gamma functions,
//!   terminating basic hypergeometric series, Jackson q-integral
//! - [`racah`]: the non-standard q-Racah family, including the transformed
//!   (big-q-Jacobi-bound) evaluation path
//! - [`bigjacobi`]: the monic big q-Jacobi family
//! - [`hahn`]: the monic dual q-Hahn and q-Hahn families
//! - [`krall`]: reproducing kernels and two-mass-point Krall machinery,
//!   generic over the family
//! - [`limits`]: parameter transforms, normalization constants C_n, and the
//!   convergence studies
//! - [`report`]: structured verification reports with JSON/CSV serialization
//! - [`cli`]: command-line front end (eval / verify / limit-study)

pub mod bigjacobi;
pub mod cli;
pub mod error;
pub mod hahn;
pub mod krall;
pub mod limits;
pub mod precision;
pub mod qcore;
pub mod racah;
pub mod report;

pub use error::{Error, Result};
pub use precision::{PrecisionContext, Real};

