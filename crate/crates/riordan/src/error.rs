//! Error type shared by the series kernel and the array layers.

use thiserror::Error;

/// Errors raised by series and Riordan-array operations.
///
/// All operations are exact; an error always means a violated precondition,
/// never a numerical problem.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Division by a series whose constant term is zero (or by the zero series).
    #[error("division by a series with zero constant term")]
    NonUnitDivisor,

    /// Composition `f(g)` requires `g(0) = 0`.
    #[error("composition requires an inner series with zero constant term")]
    NonzeroConstantTerm,

    /// Reversion requires `f(0) = 0` and `f'(0) != 0`.
    #[error("series is not revertible (need f(0) = 0 and f'(0) != 0)")]
    NotRevertible,

    /// Rational powers are only defined here for series with constant term 1.
    #[error("rational power requires a series with constant term 1")]
    NonUnitConstant,

    /// A coefficient beyond the stored truncation order was requested.
    #[error("coefficient index {wanted} exceeds truncation order {order}")]
    OrderExceeded { wanted: usize, order: usize },

    /// Dividing by `t^k` would discard a nonzero low-order coefficient.
    #[error("not divisible by t: a nonzero low-order coefficient would be discarded")]
    NotDivisibleByT,

    /// The operation needs more truncated coefficients than are available.
    #[error("truncation order {available} is insufficient (need at least {required})")]
    InsufficientOrder { required: usize, available: usize },

    /// The pair (g, f) does not satisfy the Riordan-array invariants.
    #[error("not a Riordan array: {0}")]
    InvalidArray(&'static str),

    /// The Z-sequence formula presumes the normalization g(0) = 1.
    #[error("Z-sequence requires g(0) = 1")]
    UnnormalizedG,

    /// A partition sum was asked for more derivative values than supplied.
    #[error("need {required} derivative values, got {available}")]
    InsufficientDerivatives { required: usize, available: usize },
}

/// Convenient alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
