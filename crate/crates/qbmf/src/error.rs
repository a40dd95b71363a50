use std::fmt;
use std::io;

/// Errors produced by any stage of the denoising toolkit.
#[derive(Debug)]
pub enum Error {
    /// Underlying file IO failure, including truncated image payloads.
    Io(io::Error),
    /// Malformed or unsupported image container data.
    Format(String),
    /// The container is well-formed but uses a sample depth we do not handle.
    UnsupportedMaxval(u32),
    /// Two operands that must share dimensions do not.
    ShapeMismatch(String),
    /// A value is outside the range an operation is defined on.
    Domain(String),
    /// A superposed state was found where a computational basis state was
    /// required; plane-level operations attach the offending `(row, col)`.
    CbsViolation { location: Option<(usize, usize)> },
    /// A measurement operator set fails the completeness relation by
    /// `deviation` (max absolute entry of sum(M'M) - I).
    IncompleteOperators { deviation: f64 },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Io(e) => write!(f, "io error: {e}"),
            Error::Format(msg) => write!(f, "format error: {msg}"),
            Error::UnsupportedMaxval(maxval) => {
                write!(f, "unsupported sample depth: maxval {maxval} (only 255 is supported)")
            }
            Error::ShapeMismatch(msg) => write!(f, "shape mismatch: {msg}"),
            Error::Domain(msg) => write!(f, "domain error: {msg}"),
            Error::CbsViolation { location } => {
                write!(f, "strict mode requires |0> or |1>, found a superposed state")?;
                if let Some((r, c)) = location {
                    write!(f, " at ({r}, {c})")?;
                }
                Ok(())
            }
            Error::IncompleteOperators { deviation } => {
                write!(f, "measurement operators violate completeness (deviation {deviation:e})")
            }
        }
    }
}

impl std::error::Error for Error {
    fn source(&self) -> Option<&(dyn std::error::Error + 'static)> {
        match self {
            Error::Io(e) => Some(e),
            _ => None,
        }
    }
}

impl From<io::Error> for Error {
    fn from(e: io::Error) -> Self {
        Error::Io(e)
    }
}

pub type Result<T> = std::result::Result<T, Error>;
