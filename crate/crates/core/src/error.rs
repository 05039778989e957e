use thiserror::Error;

use crate::partition::{Partition, Rectangle};

/// Errors raised by shape arithmetic, reductions and classifiers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("parts must be weakly decreasing: {0:?}")]
    NotWeaklyDecreasing(Vec<usize>),

    #[error("shape has more boxes than fit in a machine word")]
    TooLarge,

    #[error("rectangle sides must be positive (got {width}x{height})")]
    EmptyRectangle { width: usize, height: usize },

    #[error("{inner} is not contained in {outer}")]
    NotContained { inner: String, outer: String },

    #[error("{partition} does not fit in the {rect} rectangle")]
    NotInRectangle {
        partition: Partition,
        rect: Rectangle,
    },

    #[error("column {0} of the shape is empty")]
    EmptyColumn(usize),

    #[error("column {column} is outside 1..={width}")]
    InvalidColumn { column: usize, width: usize },

    #[error("shape {0} is not basic")]
    NotBasic(String),

    #[error("cannot strip {depth} boxes: column {column} holds only {size}")]
    StripTooDeep {
        depth: usize,
        column: usize,
        size: usize,
    },

    #[error("cannot delete {requested} rows from a shape with {available}")]
    TooManyRows { requested: usize, available: usize },

    #[error("precondition failed: {0}")]
    PreconditionFailed(String),

    #[error("shape {shape} is not reduced for n = {n}: {reason}")]
    NotReduced {
        shape: String,
        n: usize,
        reason: String,
    },

    #[error("malformed tableau: {0}")]
    MalformedTableau(String),

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
