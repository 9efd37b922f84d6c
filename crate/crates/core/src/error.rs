use alloc::string::String;

use thiserror::Error;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("input error: {0}")]
    Input(String),
    #[error("ambient dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("class is not a unit (codimension-0 coefficient is zero)")]
    NotAUnit,
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("polynomial is not homogeneous")]
    NotHomogeneous,
    #[error("zero polynomial where a nonzero one is required")]
    ZeroPolynomial,
    #[error("variable index {index} out of range for {nvars} variables")]
    VariableOutOfRange { index: usize, nvars: usize },
    #[error("too many variables: {0} (at most {max})", max = crate::polyalg::MAX_VARS)]
    TooManyVariables(usize),
    #[error("prime {p} rejected: {reason}")]
    BadPrime { p: u64, reason: String },
    #[error("mixed degrees or fields in a polynomial list")]
    MixedInputs,
    #[error("basis is not a Groebner basis")]
    NotGroebner,
    #[error("degenerate input: {0}")]
    Degenerate(String),
    #[error("probabilistic failure: {0}")]
    Probabilistic(String),
    #[error("randomized computation gave no agreed answer: {reason} ({} trials)", log.len())]
    TrialsExhausted { reason: String, log: alloc::vec::Vec<crate::segreengine::TrialRecord> },
    #[error("internal inconsistency: {0}")]
    Internal(String),
    #[error("non-integral class where an integral one is required")]
    NonIntegral,
}
