use alloc::string::String;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("gcd of two zero polynomials is undefined")]
    BothZero,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("series of a ratio is singular at the origin (denominator vanishes at 0)")]
    SingularAtOrigin,
    #[error("duplicated interpolation abscissa {0}")]
    DuplicateAbscissa(String),
    #[error("interpolation needs at least one point")]
    NoPoints,
    #[error("beta must be nonzero")]
    ZeroBeta,
    #[error("Routh-Hurwitz test needs a polynomial of degree at least 1")]
    DegreeTooLow,
    #[error("phase is undefined: transfer function has a zero or pole at the origin")]
    PhaseUndefined,
    #[error("deviation is zero through {0} terms (flat beyond horizon)")]
    FlatBeyondHorizon(usize),
    #[error("gamma must be positive, got {0}")]
    NonPositiveGamma(String),
    #[error("numerator degree m={m} exceeds denominator degree n={n}")]
    NumeratorDegreeTooHigh { m: usize, n: usize },
    #[error("invalid degrees: {0}")]
    InvalidDegrees(String),
    #[error("matching index j={j} out of range 1..={max}")]
    IndexOutOfRange { j: usize, max: usize },
    #[error("A_j^(1/2j) = 1: the minus branch has no finite solution")]
    NoFiniteSolution,
    #[error("invalid grid: {0}")]
    InvalidGrid(String),
    #[error("insufficient samples: need at least {need}, got {got}")]
    InsufficientSamples { need: usize, got: usize },
    #[error("gamma sample {0} is excluded (must avoid 0 and 1)")]
    ExcludedSample(String),
    #[error("interpolated polynomial exceeds degree bound {0}")]
    DegreeBoundExceeded(usize),
    #[error("precision must be at least 1")]
    BadPrecision,
    #[error("invalid surd radicand: {0}")]
    BadRadicand(String),
}
