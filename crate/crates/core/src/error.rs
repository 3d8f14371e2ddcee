use std::fmt;

use thiserror::Error;

/// Sweep axis of a tensor-product interpolation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axis {
    X,
    Y,
    Z,
}

impl fmt::Display for Axis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Axis::X => "x",
            Axis::Y => "y",
            Axis::Z => "z",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum InterpError {
    #[error("a mesh needs at least 2 points, got {0}")]
    TooFewPoints(usize),

    #[error("mesh is not strictly increasing at index {index} ({prev} >= {next})")]
    NotIncreasing { index: usize, prev: f64, next: f64 },

    #[error("non-finite value {value} at index {index}")]
    NonFinite { index: usize, value: f64 },

    #[error("length mismatch: expected {expected} values, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },

    #[error("output point {value} (index {index}) lies outside the mesh range [{lo}, {hi}]")]
    OutOfRange {
        index: usize,
        value: f64,
        lo: f64,
        hi: f64,
    },

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("{axis} sweep, line {line}: {source}")]
    Line {
        axis: Axis,
        line: usize,
        #[source]
        source: Box<InterpError>,
    },
}

impl InterpError {
    pub(crate) fn on_line(self, axis: Axis, line: usize) -> Self {
        InterpError::Line {
            axis,
            line,
            source: Box::new(self),
        }
    }
}

pub type Result<T> = std::result::Result<T, InterpError>;
