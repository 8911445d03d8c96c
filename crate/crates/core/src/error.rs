//! Error type shared across the crate.

use std::fmt;

use crate::ext::Interval;

/// Errors produced by curve operations, distribution queries and the
/// simulation/oracle layers.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// A point was evaluated outside the domain of an operator.
    /// Carries the queried abscissa and the operator's domain.
    Domain { x: f64, dom: Interval },
    /// An argument violated a documented constraint (e.g. a scale factor
    /// that must be positive).
    Argument(String),
    /// The input is outside what the implementation can represent or
    /// compute (infinite mean, divergent moment, oversized oracle input).
    Capability(String),
    /// A stated precondition failed a runtime certification; carries a
    /// witness triple when one exists (e.g. the grid points violating a
    /// convexity certificate).
    Precondition {
        message: String,
        witness: Option<[f64; 3]>,
    },
    /// An index was out of range.
    Index { index: usize, len: usize },
    /// Malformed serialized input.
    Parse(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Domain { x, dom } => {
                write!(f, "point {x} outside domain {dom}")
            }
            Error::Argument(msg) => write!(f, "invalid argument: {msg}"),
            Error::Capability(msg) => write!(f, "unsupported input: {msg}"),
            Error::Precondition { message, witness } => match witness {
                Some([a, b, c]) => {
                    write!(f, "precondition failed: {message} (witness {a}, {b}, {c})")
                }
                None => write!(f, "precondition failed: {message}"),
            },
            Error::Index { index, len } => {
                write!(f, "index {index} out of range (len {len})")
            }
            Error::Parse(msg) => write!(f, "parse error: {msg}"),
        }
    }
}

impl std::error::Error for Error {}

impl Error {
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Domain { .. } => "domain",
            Error::Argument(_) => "argument",
            Error::Capability(_) => "capability",
            Error::Precondition { .. } => "precondition",
            Error::Index { .. } => "index",
            Error::Parse(_) => "parse",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
