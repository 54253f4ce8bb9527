use crate::algebra::{AlgebraError, Rational};

/// Which input of a three-filter construction an error refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Slot {
    /// The given lowpass `h`.
    Compression,
    /// The biorthogonality supplier `f`.
    Cofilter,
    /// The accuracy supplier `g`.
    Prediction,
}

impl std::fmt::Display for Slot {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Slot::Compression => "h",
            Slot::Cofilter => "f",
            Slot::Prediction => "g",
        })
    }
}

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("dilation must be at least 2, got {0}")]
    InvalidDilation(u32),
    #[error("dilation mismatch: {left} vs {right}")]
    DilationMismatch { left: u32, right: u32 },
    #[error("expected {expected} polyphase entries, got {got}")]
    PolyphaseArity { expected: usize, got: usize },
    #[error("the zero filter has no accuracy or vanishing moments")]
    ZeroFilter,
    #[error("{role} filter taps must sum to {expected}, got {sum}")]
    RoleMismatch { role: &'static str, expected: &'static str, sum: Rational },
    #[error("polyphase entries mix rational and √q-scaled coefficients")]
    MixedNormalization,
    #[error("Burt–Adelson cofilter is singular at a = {0}")]
    SingularParameter(Rational),
    #[error("no FIR dual exists: polyphase components share the factor {gcd}")]
    NoFirDual { gcd: String },
    #[error("automatic cofilter search supports dilation 2 only (got {0}); supply the cofilter explicitly")]
    UnsupportedDilation(u32),
    #[error("cofilter f is not biorthogonal to h")]
    NotBiorthogonal,
    #[error("filter {0} has zero accuracy")]
    ZeroAccuracy(Slot),
    #[error("filter {0} is not a lowpass filter")]
    NotLowpass(Slot),
    #[error("completion needs a cofilter with a unit-monomial polyphase component")]
    CompletionUnsupported,
    #[error("matrix shapes {left:?} and {right:?} do not compose")]
    ShapeMismatch { left: (usize, usize), right: (usize, usize) },
    #[error("cascade needs at least one iteration")]
    NoIterations,
    #[error("cascade refused: {0}")]
    NotRefinable(&'static str),
    #[error("cascade would produce {0} samples; use fewer iterations")]
    CascadeTooLarge(u128),
    #[error("cascade result has no samples")]
    EmptyCascade,
    #[error("malformed input: {0}")]
    Format(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
