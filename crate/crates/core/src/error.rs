use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension {0} is out of range (supported: 0..={1})")]
    DimensionOutOfRange(u32, u32),

    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(u32, u32),

    #[error("word {bits:#x} does not fit in {n} bits")]
    WordOutOfRange { n: u32, bits: u64 },

    #[error("basis index {index} out of range for n = {n}")]
    IndexOutOfRange { n: u32, index: u32 },

    #[error("parse error at {position}: {message}")]
    Parse { position: String, message: String },

    #[error("invalid twist: {0}")]
    InvalidTwist(String),

    #[error("duplicate perturbation row {0}")]
    DuplicateRow(String),

    #[error("twisting function is not linear in its second argument")]
    NotLinear,

    #[error("associator is undefined for perturbed twisting functions")]
    PerturbedAssociator,

    #[error("algebra elements live over different twisting functions")]
    SpecMismatch,

    #[error("pair is not multiplicative: {0}")]
    NotMultiplicative(String),

    #[error("{0} is not a subset of {1}")]
    NotSubset(&'static str, &'static str),

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("work budget exceeded: {required} > {budget}")]
    BudgetExceeded { required: u128, budget: u128 },

    #[error("construction failed verification: {0}")]
    ConstructionFailed(String),
}

pub type Result<T> = std::result::Result<T, Error>;

/// A serde_json failure as a [`Error::Parse`] with its line and column.
pub(crate) fn json_error(e: serde_json::Error) -> Error {
    let full = e.to_string();
    let suffix = format!(" at line {} column {}", e.line(), e.column());
    Error::Parse {
        position: format!("line {} column {}", e.line(), e.column()),
        message: full.strip_suffix(&suffix).unwrap_or(&full).to_string(),
    }
}
