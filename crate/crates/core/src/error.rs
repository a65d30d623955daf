use thiserror::Error;

use crate::barcode::BarId;

/// Errors produced by barcode, matching and persistence operations.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid interval [{birth}, {death}): {reason}")]
    InvalidInterval {
        birth: f64,
        death: f64,
        reason: &'static str,
    },

    #[error("duplicate bar id {0}")]
    DuplicateBarId(BarId),

    #[error("unknown bar id {0}")]
    UnknownBarId(BarId),

    #[error("bar {0} is matched more than once")]
    NotInjective(BarId),

    #[error("bars {left} and {right} have different dimensions")]
    DimensionMismatch { left: BarId, right: BarId },

    #[error("bars {left} and {right} have disjoint intervals")]
    DisjointPair { left: BarId, right: BarId },

    #[error("matchings are not composable: middle barcodes differ")]
    BarcodeMismatch,

    #[error("no canonical injection: group with death {death} in dimension {dim} does not fit")]
    NoCanonicalInjection { dim: usize, death: f64 },

    #[error("no canonical coinjection: group with birth {birth} in dimension {dim} does not fit")]
    NoCanonicalCoinjection { dim: usize, birth: f64 },

    #[error("shift must be non-negative, got {0}")]
    NegativeShift(f64),

    #[error("instance too large: {size} exceeds the limit of {limit}")]
    SizeLimit { size: usize, limit: usize },

    #[error("interval grid needs at least one bar")]
    EmptyGrid,

    #[error("matchings must both be sub-barcode matchings or both overlap matchings")]
    MixedMatchingKinds,

    #[error("no value for vertex {0}")]
    MissingVertexValue(usize),

    #[error("upper bound below lower bound at vertices {0:?}")]
    BoundViolation(Vec<usize>),

    #[error("invalid simplex: {0}")]
    InvalidSimplex(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
