use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("modulus {0} is not an odd prime below 2^31")]
    BadModulus(u64),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("ambient variable count mismatch: expected {expected}, got {got}")]
    AmbientMismatch { expected: usize, got: usize },

    #[error("at most {max} variables supported, got {got}")]
    TooManyVariables { max: usize, got: usize },

    #[error("{0} is undefined on the zero module")]
    ZeroModule(&'static str),

    #[error("ideal is not an M-reduction within the scan cap {cap}")]
    NotReduction { cap: usize },

    #[error("all {trials} reduction trials failed (dimension mis-set or modulus too small?)")]
    TrialsExhausted { trials: usize },

    #[error("candidate ideal is not contained in I")]
    NotSubideal,

    #[error("module eventually annihilated: I^{n}M is the zero module")]
    ModuleAnnihilated { n: usize },

    #[error("invalid basis element: {0}")]
    InvalidElement(String),

    #[error("invalid instance file: {0}")]
    InvalidInstance(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}
