use thiserror::Error;

use crate::monoid_ring::Generator;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// `a_0` is not a generator; the recurrences treat it as the constant 0.
    #[error("a0 is not a generator (a_0 = 0 by convention)")]
    ZeroSubscriptA,

    #[error("cannot parse generator `{0}`")]
    BadGenerator(String),

    #[error("cannot parse polynomial: {0}")]
    Parse(String),

    #[error("index {k} is below the first index {first} of the sequence")]
    IndexBelowStart { k: i64, first: i64 },

    #[error("index {k} exceeds the construction cap {cap}")]
    AboveCap { k: i64, cap: i64 },

    #[error("no value assigned to generator {0}")]
    Unassigned(Generator),

    #[error("unknown {kind} `{name}`")]
    UnknownName { kind: &'static str, name: String },

    #[error("index vector {index:?} is not strictly descending within [0, {k}]")]
    BadIndex { index: Vec<u32>, k: i64 },

    #[error("generating function denominator has zero constant term")]
    SingularDenominator,

    #[error("generating function coefficients are not integral at n = {0}")]
    NonIntegralSeries(usize),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
