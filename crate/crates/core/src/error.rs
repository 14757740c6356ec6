use thiserror::Error;

/// Errors raised while building designs, running trials or evaluating tests.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid design: {0}")]
    InvalidDesign(String),

    #[error("invalid scenario: {0}")]
    InvalidScenario(String),

    #[error("randomization rule returned an invalid probability vector {probs:?}: {reason}")]
    InvalidRule { probs: Vec<f64>, reason: String },

    #[error("rule `{rule}` cannot be used in the {regime} regime")]
    IncompatibleRule { rule: String, regime: String },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("unknown preset `{0}`")]
    UnknownPreset(String),

    #[error("config error: {0}")]
    Config(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
