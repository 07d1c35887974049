use thiserror::Error;

/// Errors raised by path, partition, growth and geometry operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("not a Dyck excursion: {reason} at index {index}")]
    NotAnExcursion { index: usize, reason: &'static str },

    #[error("position {k} out of range 0..={max}")]
    IndexOutOfRange { k: usize, max: usize },

    #[error("path is not pair-encodable: even-index increment is 0 at k={k}")]
    NotPairEncodable { k: usize },

    #[error("not a partition of 0..{n}: {reason}")]
    NotAPartition { n: usize, reason: String },

    #[error("blocks cross: witness ({a}, {b}, {c}, {d})")]
    CrossingBlocks { a: usize, b: usize, c: usize, d: usize },

    #[error("not a pair partition: block of size {size}")]
    NotAPairPartition { size: usize },

    #[error("malformed trajectory at step {step}: {reason}")]
    MalformedTrajectory { step: usize, reason: String },

    #[error("lamination is empty")]
    EmptyLamination,

    #[error("chords cross in the open disk")]
    CrossingChords,

    #[error("enumeration size {n} exceeds the limit {limit}")]
    TooLarge { n: usize, limit: usize },

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
