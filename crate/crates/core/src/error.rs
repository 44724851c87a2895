use alloc::string::String;
use core::fmt;

/// Errors raised by the algebraic operations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// Two objects that must agree in size do not.
    DimensionMismatch { expected: usize, found: usize },
    /// A projective point was given as the zero vector.
    ZeroPoint,
    /// The chosen linear form vanishes at the point it should dehomogenize.
    DehomogenizerVanishes,
    /// A polynomial does not have the degree its position requires.
    DegreeMismatch { expected: i64, found: i64 },
    /// Sections must be listed by ascending degree.
    UnsortedDegrees,
    /// Inputs fail the w-basic hypothesis at a listed point.
    HypothesisViolation { point: usize, required: usize, actual: usize },
    /// The given sections do not generate the fiber at a point.
    GenerationFailure { point: usize, width: usize, mu: usize },
    /// The coefficient field has too few elements for a deterministic choice.
    FieldTooSmall { characteristic: u64, points: usize },
    NotPrime(u64),
    TooFewPoints { required: usize, found: usize },
    InvalidArgument(String),
    Parse(String),
    /// An internal consistency check failed; this indicates a bug.
    Internal(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DimensionMismatch { expected, found } => {
                write!(f, "dimension mismatch: expected {expected}, found {found}")
            }
            Error::ZeroPoint => f.write_str("the zero vector is not a projective point"),
            Error::DehomogenizerVanishes => f.write_str("linear form vanishes at the point"),
            Error::DegreeMismatch { expected, found } => {
                write!(f, "degree mismatch: expected {expected}, found {found}")
            }
            Error::UnsortedDegrees => f.write_str("sections are not sorted by ascending degree"),
            Error::HypothesisViolation { point, required, actual } => write!(
                f,
                "hypothesis fails at point {point}: width {actual} < required {required}"
            ),
            Error::GenerationFailure { point, width, mu } => write!(
                f,
                "sections do not generate the fiber at point {point}: width {width} < mu {mu}"
            ),
            Error::FieldTooSmall { characteristic, points } => write!(
                f,
                "field of characteristic {characteristic} is too small for {points} points"
            ),
            Error::NotPrime(p) => write!(f, "{p} is not a supported prime"),
            Error::TooFewPoints { required, found } => {
                write!(f, "need at least {required} points, got {found}")
            }
            Error::InvalidArgument(msg) => write!(f, "invalid argument: {msg}"),
            Error::Parse(msg) => write!(f, "parse error: {msg}"),
            Error::Internal(msg) => write!(f, "internal check failed: {msg}"),
        }
    }
}

impl core::error::Error for Error {}
