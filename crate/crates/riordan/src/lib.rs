//! Exact Riordan-array algebra over truncated formal power series.
//!
//! Everything is computed with arbitrary-precision rational arithmetic; there
//! is no floating point anywhere and every comparison in the crate is an
//! exact equality.
//!
//! The layers, bottom up:
//!
//! - [`series`]: the power-series kernel (ring arithmetic, composition,
//!   reversion, integer and rational powers), generic over the coefficient
//!   field through the [`Coeff`] trait.
//! - [`riordan`]: Riordan arrays `(g, f)` with entry access, group
//!   operations, A/Z-sequences, subgroup classification, and the column
//!   convolution identity.
//! - [`onepth`]: the vertical and horizontal one-pth subarray constructions,
//!   their generating-function form, the index-extraction oracles, and a
//!   Lagrange-inversion coefficient extractor.
//! - [`bell`]: integer partitions, partial Bell polynomials, and
//!   partition-sum composition coefficients with their reciprocal pair.
//! - [`catalog`]: named series and arrays (Pascal, Delannoy, Catalan,
//!   Fuss-Catalan, ...) with closed-form entry formulas.
//! - [`identities`]: parameterized identity checks, each computing its two
//!   sides by independent routes, swept over grids into reports.
//! - [`gfparse`]: a small expression language for specifying generating
//!   functions on the command line.
//!
//! The kernel and array layers are generic over the scalar; the concrete
//! aliases below fix the exact rational instantiation used by the catalog,
//! the identity suites, and the CLI.

pub mod bell;
pub mod catalog;
pub mod error;
pub mod gfparse;
pub mod identities;
pub mod onepth;
pub mod riordan;
pub mod series;

pub use error::{Error, Result};
pub use onepth::{OnePthSpec, Orientation, PhiData};
pub use riordan::{RiordanArray, SequencePair, Subgroup};
pub use series::{Coeff, PowerSeries};

/// Exact rational scalar: arbitrary-precision integer numerator and
/// (positive) denominator, always in lowest terms.
pub type Rat = num::BigRational;

/// Truncated power series over exact rationals.
pub type RatSeries = PowerSeries<Rat>;

/// Riordan array over exact rationals.
pub type RatArray = RiordanArray<Rat>;

/// Default truncation order used by the CLI and the identity suites.
pub const DEFAULT_ORDER: usize = 24;

/// Parses an exact rational from a `num` or `num/den` token.
pub fn parse_rat(s: &str) -> std::result::Result<Rat, String> {
    s.trim()
        .parse::<Rat>()
        .map_err(|e| format!("invalid rational {s:?}: {e}"))
}
