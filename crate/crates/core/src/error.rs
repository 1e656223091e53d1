use thiserror::Error;

/// Every failure mode of the library. Variants carry enough context to be
/// mapped onto CLI exit codes without string matching.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("gamma function has a pole at {0}")]
    GammaPole(f64),
    #[error("invalid alpha {alpha}: {reason}")]
    InvalidAlpha { alpha: String, reason: String },
    #[error("alpha = {0} is a negative integer")]
    NegativeIntegerAlpha(String),
    #[error("index {index} out of range (available: {len})")]
    IndexOutOfRange { index: i64, len: usize },
    #[error("leading coefficient a_0 is zero")]
    ZeroLeadingCoefficient,
    #[error("z = 0 is a pole of the derivative coefficients for k = {0}")]
    ZeroArgumentWithPole(usize),
    #[error("invalid u: {0}")]
    InvalidU(String),
    #[error("invalid lambda {0}: must differ from 0 and -1")]
    InvalidLambda(f64),
    #[error("Newton refinement failed for zero index {0}")]
    NewtonDivergence(usize),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("zero table too short: need {need}, have {have}")]
    TableTooShort { need: usize, have: usize },
    #[error("argument {0} is a pole")]
    PoleInput(String),
    #[error("x and y coincide")]
    CoincidentArguments,
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("cannot parse {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
