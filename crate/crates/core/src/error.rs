use alloc::string::String;
use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

/// Errors raised by semigroup construction, the Clifford oracle and the
/// closed-form family evaluators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// An argument is outside the documented domain.
    InvalidInput(String),
    /// The generators have a common divisor greater than one, so the
    /// complement in ℕ is infinite.
    NotNumerical { gcd: u64 },
    /// The semigroup does not have maximal embedding dimension.
    NotMaxEmbedding { embedding_dimension: usize, multiplicity: u64 },
    /// Run lengths are not nondecreasing or gap lengths are not nonincreasing.
    NotMonotoneBlocks,
    /// The family parameters fall outside the regimes with a known result.
    UnsupportedParameters(String),
    /// A closed-form division did not come out exact.
    InexactDivision { numerator: i128, denominator: i128 },
    /// Integer arithmetic exceeded the supported width.
    Overflow,
    /// The conductor is at least `at_least`, above the materialization cap.
    ConductorTooLarge { at_least: u64, cap: u64 },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidInput(msg) => write!(f, "invalid input: {msg}"),
            Error::NotNumerical { gcd } => {
                write!(f, "not a numerical semigroup (gcd {gcd})")
            }
            Error::NotMaxEmbedding {
                embedding_dimension,
                multiplicity,
            } => write!(
                f,
                "not of maximal embedding dimension (e = {embedding_dimension}, m = {multiplicity})"
            ),
            Error::NotMonotoneBlocks => write!(
                f,
                "run lengths are not nondecreasing or gap lengths are not nonincreasing"
            ),
            Error::UnsupportedParameters(msg) => write!(f, "unsupported parameters: {msg}"),
            Error::InexactDivision {
                numerator,
                denominator,
            } => write!(f, "inexact division {numerator} / {denominator}"),
            Error::Overflow => write!(f, "integer overflow"),
            Error::ConductorTooLarge { at_least, cap } => {
                write!(f, "conductor is at least {at_least}, above the cap {cap}")
            }
        }
    }
}

impl core::error::Error for Error {}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }
}
