//! Process exit codes. These are a stable contract; see the README.

use dualfb_core::algebra::AlgebraError;
use dualfb_core::Error;

pub const FAILURE: u8 = 1;
pub const NOT_BIORTHOGONAL: u8 = 2;
pub const ZERO_ACCURACY: u8 = 3;
pub const NO_FIR_DUAL: u8 = 4;
pub const COMPLETION_UNSUPPORTED: u8 = 5;
pub const SINGULAR_PARAMETER: u8 = 6;
pub const UNSUPPORTED_DILATION: u8 = 7;
/// Malformed input or bad arguments (sysexits `EX_USAGE`/`EX_DATAERR` range).
pub const USAGE: u8 = 64;
/// Reading or writing a file failed (sysexits `EX_IOERR`).
pub const IO: u8 = 74;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] Error),
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{path}: {source}")]
    Input { path: String, source: Error },
    #[error("verification failed")]
    VerifyFailed,
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(e) => core_code(e),
            CliError::Usage(_) | CliError::Input { .. } => USAGE,
            CliError::Io { .. } => IO,
            CliError::VerifyFailed => FAILURE,
        }
    }
}

fn core_code(e: &Error) -> u8 {
    match e {
        Error::NotBiorthogonal => NOT_BIORTHOGONAL,
        Error::ZeroAccuracy(_) | Error::NotRefinable(_) => ZERO_ACCURACY,
        Error::NoFirDual { .. } => NO_FIR_DUAL,
        Error::CompletionUnsupported => COMPLETION_UNSUPPORTED,
        Error::SingularParameter(_) => SINGULAR_PARAMETER,
        Error::UnsupportedDilation(_) => UNSUPPORTED_DILATION,
        Error::Json(_)
        | Error::Format(_)
        | Error::Csv(_)
        | Error::Algebra(AlgebraError::Parse(_))
        | Error::NoIterations
        | Error::CascadeTooLarge(_)
        | Error::InvalidDilation(_)
        | Error::RoleMismatch { .. }
        | Error::NotLowpass(_)
        | Error::DilationMismatch { .. } => USAGE,
        Error::Io(_) => IO,
        _ => FAILURE,
    }
}
