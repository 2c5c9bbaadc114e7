use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("operation requires a nonzero polynomial")]
    ZeroPolynomial,

    #[error("marker 2 requires a word of length 2, got length {len}")]
    Marker { len: usize },

    #[error("empty word where a nonempty word is required")]
    EmptyWord,

    #[error("dot position {dot} out of range for a word of length {len}")]
    DotOutOfRange { dot: usize, len: usize },

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("variable index {index} outside a presentation with {len} variables")]
    VariableOutOfRange { index: usize, len: usize },

    #[error("presentations differ: {0}")]
    PresentationMismatch(String),

    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("zero denominator at line {line}, column {column}")]
    ZeroDenominator { line: usize, column: usize },

    #[error("a degree bound is required")]
    MissingBound,

    #[error("degree bound {bound} too small (minimum {minimum})")]
    BoundTooSmall { bound: usize, minimum: usize },

    #[error("polynomial of degree {degree} exceeds the degree bound {bound}")]
    DegreeOverflow { degree: usize, bound: usize },

    #[error("non-binomial element produced while completing a disemigroup presentation: {0}")]
    BinomialInvariantViolated(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
