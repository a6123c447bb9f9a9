//! Crate-wide error type.

use thiserror::Error;

use crate::metric::MetricViolation;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// A scalar argument lies outside the numeric domain of the operation
    /// (NaN, infinity, or a negative length where one is not allowed).
    #[error("domain error: {0}")]
    Domain(String),

    /// The operation is defined only for a subset of curvature regimes
    /// (e.g. the kappa-matrices require kappa != 0).
    #[error("invalid curvature regime: {0}")]
    InvalidRegime(String),

    /// Mismatched or non-square dimensions.
    #[error("shape error: {0}")]
    Shape(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// The input failed metric-axiom validation.
    #[error("metric validation failed ({} violation{}): {}",
            .0.len(), if .0.len() == 1 { "" } else { "s" }, summarize(.0))]
    InvalidMetric(Vec<MetricViolation>),

    /// Malformed input file. `line` and `column` are 1-based.
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

fn summarize(violations: &[MetricViolation]) -> String {
    const SHOWN: usize = 3;
    let mut parts: Vec<String> = violations.iter().take(SHOWN).map(|v| v.to_string()).collect();
    if violations.len() > SHOWN {
        parts.push(format!("... and {} more", violations.len() - SHOWN));
    }
    parts.join("; ")
}
