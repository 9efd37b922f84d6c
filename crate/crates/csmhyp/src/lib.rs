//! IO, file formats and the command-line front end for `csmhyp-core`.

pub mod cli;
pub mod fixtures;
pub mod json;
pub mod render;

use csmhyp_core::Error;

pub use cli::{run, RunConfig};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INTERNAL: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_VERIFICATION: i32 = 3;
pub const EXIT_RANDOMNESS: i32 = 4;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error(transparent)]
    Core(#[from] Error),
    #[error("verification failed: {0}")]
    Verification(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => EXIT_INPUT,
            CliError::Verification(_) => EXIT_VERIFICATION,
            CliError::Core(e) => match e {
                Error::Input(_)
                | Error::Parse { .. }
                | Error::NotHomogeneous
                | Error::ZeroPolynomial
                | Error::VariableOutOfRange { .. }
                | Error::TooManyVariables(_)
                | Error::BadPrime { .. }
                | Error::Degenerate(_)
                | Error::DimensionMismatch { .. } => EXIT_INPUT,
                Error::Probabilistic(_) | Error::TrialsExhausted { .. } => EXIT_RANDOMNESS,
                _ => EXIT_INTERNAL,
            },
        }
    }

    pub fn kind(&self) -> &'static str {
        match self.exit_code() {
            EXIT_INPUT => "input",
            EXIT_VERIFICATION => "verification",
            EXIT_RANDOMNESS => "randomness",
            _ => "internal",
        }
    }
}
