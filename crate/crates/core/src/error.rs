use alloc::string::String;
use core::fmt;

/// Errors raised by the algebra engine.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Two values computed at different truncation orders were combined.
    OrderMismatch { left: usize, right: usize },
    /// Inversion requested for an element whose ξ-constant part is not an
    /// invertible scalar.
    NotInvertible(&'static str),
    /// `exp` or a power-series substitution was given an element with a
    /// nonzero ξ⁰ part.
    NotXiPositive,
    InvalidDimension { what: &'static str, got: usize, min: usize },
    AlgebraMismatch { expected: usize, found: usize },
    /// A twist was requested with coefficients that violate one of the
    /// bracket constraints of its variant.
    Constraint { relation: &'static str, detail: String },
    /// An action table that fails validation.
    InvalidAction(String),
    /// Lie algebra data that does not satisfy antisymmetry or Jacobi.
    Inconsistent(String),
    Parse(String),
    /// An exported matrix did not stabilize between orders `K` and `K + 1`.
    NotStabilized { order: usize },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::OrderMismatch { left, right } => {
                write!(f, "truncation order mismatch: {} vs {}", left, right)
            }
            Error::NotInvertible(what) => write!(f, "not invertible: {}", what),
            Error::NotXiPositive => f.write_str("element has a nonzero ξ-constant part"),
            Error::InvalidDimension { what, got, min } => {
                write!(f, "invalid dimension for {}: {} (need at least {})", what, got, min)
            }
            Error::AlgebraMismatch { expected, found } => write!(
                f,
                "algebra mismatch: element of dimension {} used with algebra of dimension {}",
                found, expected
            ),
            Error::Constraint { relation, detail } => {
                write!(f, "coefficient constraint violated ({}): {}", relation, detail)
            }
            Error::InvalidAction(msg) => write!(f, "invalid action constants: {}", msg),
            Error::Inconsistent(msg) => write!(f, "inconsistent structure constants: {}", msg),
            Error::Parse(msg) => write!(f, "parse error: {}", msg),
            Error::NotStabilized { order } => write!(
                f,
                "matrix entries did not stabilize between orders {} and {}; increase K",
                order,
                order + 1
            ),
        }
    }
}

pub type Result<T, E = Error> = core::result::Result<T, E>;

impl core::error::Error for Error {}
