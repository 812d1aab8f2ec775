use alloc::string::String;
use core::fmt;

/// Which validation rule a network definition broke.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NetworkFault {
    DuplicateId,
    BadStates,
    UnknownParent,
    BadParents,
    RowCount,
    RowLength,
    BadProbability,
    RowSum,
    Cycle,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    InvalidArgument(String),
    UnsupportedDimension { requested: usize, max: usize },
    InvalidParams(String),
    IndexOverflow { index: u64, limit: u64 },
    SequenceExhausted { capacity: u64 },
    InvalidInput(String),
    Unsupported(String),
    /// `at` names the offending node (and row, where relevant).
    Network { fault: NetworkFault, at: String, detail: String },
    TooLarge { configurations: u128, limit: u128 },
    ImpossibleEvidence,
    DegenerateEstimate,
    SupportViolation(String),
    ShapeMismatch(String),
}

pub type Result<T> = core::result::Result<T, Error>;

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidArgument(msg) => write!(f, "invalid argument: {msg}"),
            Error::UnsupportedDimension { requested, max } => {
                write!(f, "unsupported dimension {requested} (maximum {max})")
            }
            Error::InvalidParams(msg) => write!(f, "invalid direction-number parameters: {msg}"),
            Error::IndexOverflow { index, limit } => {
                write!(f, "point index {index} out of range (limit {limit})")
            }
            Error::SequenceExhausted { capacity } => {
                write!(f, "sequence exhausted after {capacity} points")
            }
            Error::InvalidInput(msg) => write!(f, "invalid input: {msg}"),
            Error::Unsupported(msg) => write!(f, "unsupported: {msg}"),
            Error::Network { fault, at, detail } => write!(f, "{at}: {fault:?}: {detail}"),
            Error::TooLarge { configurations, limit } => write!(
                f,
                "joint state space has {configurations} configurations (limit {limit})"
            ),
            Error::ImpossibleEvidence => f.write_str("evidence has probability zero"),
            Error::DegenerateEstimate => f.write_str("all importance weights are zero"),
            Error::SupportViolation(msg) => write!(f, "importance function support violation: {msg}"),
            Error::ShapeMismatch(msg) => write!(f, "shape mismatch: {msg}"),
        }
    }
}

impl core::error::Error for Error {}
