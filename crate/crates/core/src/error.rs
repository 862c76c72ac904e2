use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("variable index {index} out of range 0..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("polynomial is not divisible by the linear form {form}")]
    NonDivisible { form: String },
    #[error("cannot divide by the zero linear form")]
    ZeroLinearForm,
    #[error("not a paravector: has parts of grade 2 or higher")]
    NotParavector,
    #[error("zero has no inverse")]
    ZeroVector,
    #[error("unknown group `{0}`")]
    UnknownGroup(String),
    #[error("group `{group}` takes {expected} multiplicity value(s), got {got}")]
    BadKappaArity { group: String, expected: usize, got: usize },
    #[error("multiplicity values must be non-negative, got {0}")]
    NegativeKappa(String),
    #[error("zero vector cannot be a root")]
    ZeroRoot,
    #[error("root {0} has a nonzero x0 coordinate")]
    RootMovesAxis(String),
    #[error("reflections generate more than {limit} elements")]
    GroupTooLarge { limit: usize },
    #[error("invalid group: {0}")]
    InvalidGroup(String),
    #[error("Dunkl dimension mu = {mu} is not an odd integer")]
    ParityViolation { mu: String },
    #[error("seed zbar^{j}*z^{k} needs j <= m = {m}")]
    SeedOrderTooHigh { j: u32, k: u32, m: u32 },
    #[error("seed expansion broke conjugation parity")]
    SeedParity,
    #[error("factor is not Dunkl-monogenic; residual {residual}")]
    FactorNotMonogenic { residual: String },
    #[error("polynomial is not homogeneous")]
    NotHomogeneous,
    #[error("polynomial depends on x0")]
    DependsOnX0,
    #[error("exact linear solve failed: {0}")]
    SolveFailed(String),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

impl Error {
    /// True for failures that can only come from a bug in the engine (or a
    /// false identity), as opposed to bad input.
    pub fn is_internal(&self) -> bool {
        matches!(
            self,
            Error::NonDivisible { .. } | Error::SolveFailed(_) | Error::SeedParity
        )
    }
}
