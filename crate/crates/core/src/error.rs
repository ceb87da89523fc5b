use thiserror::Error;

/// Every failure the library can report.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("malformed ring or element text: {0}")]
    SpecSyntax(String),
    #[error("unsupported ring: {0}")]
    UnsupportedRing(String),
    #[error("ring mismatch: {0} vs {1}")]
    RingMismatch(String, String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("bad indices ({i}, {j}) for size {n}")]
    BadIndices { n: usize, i: usize, j: usize },
    #[error("Pfaffian of an odd-sized matrix ({0})")]
    OddSize(usize),
    #[error("matrix is not alternating: {0}")]
    NotAlternating(String),
    #[error("matrix is not idempotent")]
    NotIdempotent,
    #[error("morphism is not compatible with the idempotents of its source and target")]
    NotModuleMap,
    #[error("module is not of constant rank 2")]
    RankNot2,
    #[error("module is not of constant rank 1")]
    RankNot1,
    #[error("rows do not form a Bezout pair: sum of products is {0}, expected 1")]
    NotBezoutPair(String),
    #[error("epimorphism is not unimodular")]
    NotUnimodular,
    #[error("not a section of the epimorphism")]
    NotSection,
    #[error("morphism is not invertible: {0}")]
    NotInvertible(String),
    #[error("not an elementary generator: {0}")]
    NotElementaryGenerator(String),
    #[error("identity failed to verify (implementation bug): {0}")]
    VerificationFailed(String),
    #[error("witness invalid at move {index}: {reason}")]
    WitnessInvalid { index: usize, reason: String },
    #[error("move {index} is illegal in mode {mode}: {reason}")]
    ModeViolation {
        index: usize,
        mode: String,
        reason: String,
    },
    #[error("search exhausted after exploring {explored} states")]
    SearchExhausted { explored: usize },
    #[error("ring {0} is not finite")]
    RingNotFinite(String),
    #[error("i/o error: {0}")]
    Io(String),
    #[error("json error: {0}")]
    Json(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}
