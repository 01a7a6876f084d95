use core::fmt;

/// Errors raised by parameter validation and numerical consistency checks.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// A parameter lies outside its documented domain.
    Range {
        /// Parameter name, e.g. `"gamma"` or `"p"`.
        name: &'static str,
        /// Offending value.
        value: f64,
        /// Inclusive lower bound.
        min: f64,
        /// Inclusive upper bound.
        max: f64,
    },
    /// The requested combination is not supported by the operation.
    Unsupported(&'static str),
    /// A result that must be real carried an imaginary part above tolerance.
    Numerical {
        /// What was being computed.
        what: &'static str,
        /// Size of the residue.
        residue: f64,
    },
    /// Shape mismatch between matrices or vectors.
    Shape {
        /// Expected dimension.
        expected: usize,
        /// Dimension found.
        found: usize,
    },
    /// Unknown name in a lookup table (games, pairings, case ids).
    Unknown(&'static str),
}

/// Crate-wide result alias.
pub type Result<T> = core::result::Result<T, Error>;

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Range { name, value, min, max } => {
                write!(f, "{name} = {value} is outside [{min}, {max}]")
            }
            Error::Unsupported(what) => write!(f, "unsupported: {what}"),
            Error::Numerical { what, residue } => {
                write!(f, "{what}: imaginary residue {residue:e} above tolerance")
            }
            Error::Shape { expected, found } => {
                write!(f, "dimension mismatch: expected {expected}, found {found}")
            }
            Error::Unknown(kind) => write!(f, "unknown {kind}"),
        }
    }
}

impl core::error::Error for Error {}

/// Slack allowed when checking closed parameter intervals, so literals such
/// as `pi/2` computed in floating point are never rejected.
pub(crate) const RANGE_SLACK: f64 = 1e-12;

pub(crate) fn check_range(name: &'static str, value: f64, min: f64, max: f64) -> Result<f64> {
    if value.is_finite() && value >= min - RANGE_SLACK && value <= max + RANGE_SLACK {
        Ok(value)
    } else {
        Err(Error::Range { name, value, min, max })
    }
}
