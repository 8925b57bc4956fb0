use thiserror::Error;

/// Errors raised by the library.
///
/// Invalid mathematical input (bad rank, bad partition, weight outside the
/// dominant cone) and corrupt table data are kept apart so that callers can
/// distinguish "you asked for something that does not exist" from "the bundled
/// or user-supplied data is inconsistent".
#[derive(Debug, Error)]
pub enum Error {
    #[error("unsupported rank {rank} for series {series}")]
    UnsupportedRank { series: char, rank: usize },

    #[error("cannot parse group name `{0}`")]
    GroupParse(String),

    #[error("cannot parse partition `{0}`")]
    PartitionParse(String),

    #[error("partition {partition} is not a valid class of {group}")]
    InvalidPartition { group: String, partition: String },

    #[error("dimension mismatch: expected length {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("weight is not dominant integral: {0}")]
    NonDominantWeight(String),

    #[error("operation requires a classical class, got {0}")]
    NotClassical(String),

    #[error("operation requires a class of series {expected}, got {got}")]
    WrongSeries { expected: char, got: char },

    #[error("no class labelled `{label}` in the {group} table")]
    UnknownLabel { group: String, label: String },

    #[error("exceptional data table for {0} is missing")]
    MissingTable(String),

    #[error("orbit table rejected: {0}")]
    SchemaViolation(String),

    #[error("weight multiset is not an sl2 character: {0}")]
    InconsistentMultiset(String),

    #[error("polynomial has an odd-degree term; not in the image of the index-two subring")]
    OddDegreeTerm,

    #[error("Dynkin index routes disagree for {class}: partition formula {partition_route}, root sum {root_route}")]
    IndexRoutesDisagree {
        class: String,
        partition_route: u64,
        root_route: u64,
    },

    #[error("class data is corrupt: {0}")]
    CorruptData(String),

    #[error("operation not defined for the trivial class")]
    TrivialClass,

    #[error("gcd mod {p} is not a power of (x - {d}): {gcd}")]
    GcdNotPower { p: u64, d: u64, gcd: String },

    #[error("all generators vanish; Koszul homology lemma does not apply")]
    AllGeneratorsZero,

    #[error("{0}")]
    Unsupported(String),

    #[error("no simple group has dimension {0}")]
    NoGroupOfDimension(u64),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
