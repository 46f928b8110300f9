use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("malformed document: {0}")]
    Malformed(String),

    #[error("invalid rational literal {literal:?}: {reason}")]
    Rational { literal: String, reason: &'static str },

    #[error("element {0} lies outside the model domain")]
    Domain(String),

    #[error("index {index} out of range for carrier of order {order}")]
    IndexOutOfRange { index: usize, order: usize },

    #[error("row {row} is not a permutation: entry {entry} appears more than once")]
    LatinSquare { row: usize, entry: usize },

    #[error("table has no two-sided identity element")]
    MissingIdentity,

    #[error("element {element} has {count} two-sided inverses, expected exactly one")]
    NoUniqueInverse { element: usize, count: usize },

    #[error("gyr[{x},{y}]({z}) has {count} solutions, expected exactly one")]
    GyrationUnsolvable { x: usize, y: usize, z: usize, count: usize },

    #[error("operands belong to different models ({left} and {right})")]
    ModelMismatch { left: String, right: String },

    #[error("exhaustive strategy requires a finite carrier")]
    ExhaustiveUnsupported,

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("chain is not certified at the {0} level")]
    Uncertified(&'static str),

    #[error("dyadic family is not monotone: V({lower}) is not contained in V({upper}); witness {witness}")]
    Monotonicity {
        lower: String,
        upper: String,
        witness: String,
    },

    #[error("depth {0} is outside the supported range 1..=20")]
    Depth(u32),

    #[error("io error on {path}: {reason}")]
    Io { path: String, reason: String },
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Malformed(e.to_string())
    }
}
