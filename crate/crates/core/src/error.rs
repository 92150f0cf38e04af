//! Error type shared by every evaluation layer.

use thiserror::Error;

use crate::scalar_qpoch::Symbol;

/// Failure of an evaluation.
///
/// [`QError::Pole`] and [`QError::PoleAtExtension`] are the resample signals used by the
/// sweep driver; everything else indicates a malformed request.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QError {
    #[error("symbol {0} has no bound value")]
    MissingBinding(Symbol),
    #[error("half-integer power of {0} needs a square-root seed")]
    NonRationalPower(Symbol),
    #[error("pole in the negative-length extension of {0}")]
    PoleAtExtension(String),
    #[error("vanishing denominator factor {0}")]
    Pole(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("infinite product needs |base| < 1, got base {0}")]
    DivergentBase(String),
    #[error("theta function argument is zero")]
    ZeroArgument,
    #[error("series terms stopped decaying after {terms} terms")]
    NoDecay { terms: usize },
    #[error("{0} cannot be evaluated in exact arithmetic")]
    ExactUnsupported(&'static str),
    #[error("unknown series {0}")]
    UnknownSeries(String),
    #[error("precision must be at least 30 digits, got {0}")]
    PrecisionTooLow(u32),
    #[error("invalid request: {0}")]
    Invalid(String),
}

impl QError {
    /// Whether the error means "this binding sits on a pole; draw another".
    pub fn is_pole(&self) -> bool {
        matches!(
            self,
            QError::Pole(_) | QError::PoleAtExtension(_) | QError::DivisionByZero | QError::ZeroArgument
        )
    }
}

pub type QResult<T> = Result<T, QError>;
