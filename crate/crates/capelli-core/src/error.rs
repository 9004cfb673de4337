//! Error type shared by every layer of the crate.
//!
//! Errors come in two flavors: *usage* errors (bad arguments, degenerate
//! specializations, inputs outside a function's domain) and *internal*
//! errors, which signal that a mathematical invariant the theory guarantees
//! failed to hold — always an implementation bug, never a user mistake.
//! [`Error::is_internal`] separates the two so a CLI can map them to
//! distinct exit codes.

use thiserror::Error;

/// All failure modes of the library.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    /// Division by the zero element of a coefficient field or ring.
    #[error("division by zero")]
    DivisionByZero,

    /// A specialization hit a zero denominator or a forbidden parameter
    /// value (for example `q = 0` where an inverse of `q` is required).
    #[error("degenerate specialization: {0}")]
    DegenerateSpecialization(String),

    /// `limit_q1` was asked for a limit that does not exist (the argument
    /// vanishes to lower order at `q = 1` than the requested power; a
    /// negative order is a pole).
    #[error("limit does not exist: zero of order {found} at q=1, need at least {need}")]
    LimitDoesNotExist { need: u32, found: i64 },

    /// Two operands live over different parameter sets or different
    /// numbers of main variables.
    #[error("mismatched domains: {0}")]
    MismatchedDomains(String),

    /// An argument was outside the function's domain (bad index, empty
    /// composition, a box outside the diagram, sizes that differ where
    /// equality is required, ...).
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// Exact division was requested but the divisor does not divide the
    /// dividend. Internal when it arises from a divided difference or an
    /// operator pipeline, where the theory guarantees divisibility.
    #[error("exact division failed: {0}")]
    DivisibilityViolation(String),

    /// A polynomial expected to be symmetric was not.
    #[error("polynomial is not symmetric")]
    NotSymmetric,

    /// A linear system the theory guarantees to be nonsingular was
    /// singular, or a randomized specialization failed the genericity
    /// screen too many times.
    #[error("singular system: {0}")]
    SingularSystem(String),

    /// An operator whose output is guaranteed to be a genuine polynomial
    /// produced negative exponents, or another structural guarantee broke.
    #[error("internal invariant violated: {0}")]
    InternalInvariant(String),
}

impl Error {
    /// True for errors that can only arise from a bug in this library (as
    /// opposed to a caller handing in bad input).
    pub fn is_internal(&self) -> bool {
        matches!(
            self,
            Error::DivisibilityViolation(_) | Error::SingularSystem(_) | Error::InternalInvariant(_)
        )
    }
}
