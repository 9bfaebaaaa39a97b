use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("unsupported root system {0}")]
    UnsupportedType(String),
    #[error("denominator vanishes under r -> q, s -> q^-1: {0}")]
    SpecializationPole(String),
    #[error("word {0} is not Lyndon")]
    NotLyndon(String),
    #[error("operands live on different sides of the algebra")]
    MixedSides,
    #[error("element is not homogeneous")]
    Inhomogeneous,
    #[error("weight mismatch: expected {expected:?}, found {found:?}")]
    WeightMismatch { expected: Vec<i32>, found: Vec<i32> },
    #[error("no good Lyndon word found for root {0:?}")]
    NoGoodWord(Vec<i32>),
    #[error("singular Gram matrix at weight {0:?}")]
    SingularGram(Vec<i32>),
    #[error("normal form residual does not vanish at weight {0:?}")]
    Residual(Vec<i32>),
    #[error("vanishing denominator in c_beta recursion for root {0:?}")]
    CBetaPole(Vec<i32>),
    #[error("malformed input: {0}")]
    Parse(String),
    #[error("cache file: {0}")]
    Cache(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
