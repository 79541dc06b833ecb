use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("point has {found} attributes, expected {expected}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("attribute index {index} out of range for {m} attributes")]
    AttributeOutOfRange { index: usize, m: usize },

    #[error("row index {index} out of range for {n} rows")]
    RowOutOfRange { index: usize, n: usize },

    #[error("code {code} is not valid for attribute {attribute} with {size} categories")]
    InvalidCode { attribute: usize, code: u32, size: usize },

    #[error("invalid attribute space: {0}")]
    InvalidSpace(String),

    #[error("invalid dataset: {0}")]
    InvalidDataset(String),

    #[error("the mode of an empty set of points is undefined")]
    EmptyCluster,

    #[error("row {row} is not assigned to a cluster in [0, {k})")]
    Unassigned { row: usize, k: usize },

    #[error("cluster {cluster} is empty after the initial assignment")]
    DegenerateInitialisation { cluster: usize },

    #[error("k = {k} is invalid for a dataset of {n} rows")]
    InvalidK { k: usize, n: usize },

    #[error("k = {k} exceeds the {distinct} distinct rows of the dataset")]
    TooFewDistinctRows { k: usize, distinct: usize },

    #[error("initial modes {first} and {second} are identical")]
    DuplicateModes { first: usize, second: usize },

    #[error("initial mode {index} is not a row of the dataset")]
    ModeNotInDataset { index: usize },

    #[error("max_iterations must be positive")]
    ZeroIterations,

    #[error("invalid matching game: {0}")]
    InvalidInstance(String),

    #[error("invalid matching: {0}")]
    InvalidMatching(String),

    #[error("instance of {residents} residents x {hospitals} hospitals is too large to enumerate")]
    EnumerationTooLarge { residents: usize, hospitals: usize },

    #[error("a resident was left unmatched by the matching initialisation")]
    UnmatchedResident,

    #[error("invalid cost curve: {0}")]
    InvalidCurve(String),

    #[error("dataset of {n} rows is too small to derive a k range; give k explicitly")]
    TooFewRowsForKRange { n: usize },

    #[error("need at least {needed} values, got {found}")]
    TooFewValues { needed: usize, found: usize },

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("ingestion failed for {path}: {reason}")]
    Ingest { path: PathBuf, reason: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Whether the error arose while reading input data, as opposed to a bad
    /// configuration or an algorithmic precondition.
    pub fn is_ingest(&self) -> bool {
        matches!(self, Error::Ingest { .. } | Error::Csv(_) | Error::Io(_))
    }
}
