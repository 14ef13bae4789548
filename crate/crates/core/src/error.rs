use thiserror::Error;

use crate::graph::ValidationReport;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("edges {first} and {second} are not composable")]
    NotComposable { first: String, second: String },

    #[error("an empty edge sequence has no endpoints; use the identity path at a vertex")]
    EmptyPath,

    #[error("paths are not composable: source {source_vertex} differs from range {range_vertex}")]
    EndpointMismatch {
        source_vertex: String,
        range_vertex: String,
    },

    #[error("degree {0} has the wrong number of coordinates for a rank-{1} graph")]
    RankMismatch(String, usize),

    #[error("segment bounds {m} <= {n} <= {degree} do not hold")]
    SegmentOutOfRange {
        m: String,
        n: String,
        degree: String,
    },

    #[error("color {color} out of range 1..={rank}")]
    ColorOutOfRange { color: usize, rank: usize },

    #[error("unknown vertex {0}")]
    UnknownVertex(String),

    #[error("unknown edge {0}")]
    UnknownEdge(String),

    #[error("degree {degree} exceeds the enumeration cap of {cap} per coordinate")]
    EnumerationCap { degree: String, cap: u32 },

    #[error("dual graph would have {count} vertices, above the limit of {limit}")]
    DualTooLarge { count: usize, limit: usize },

    #[error("operation requires a 2-graph, got rank {0}")]
    NotRankTwo(usize),

    #[error("coordinate matrix for color {0} is not a {{0,1}}-matrix")]
    NotZeroOne(usize),

    #[error("word is not allowable: {0}")]
    NotAllowable(String),

    #[error("graph has {0}")]
    SinksOrSources(String),

    #[error("invalid witness for displacement {displacement}: {reason}")]
    InvalidWitness { displacement: String, reason: String },

    #[error("no connecting path from {from} to {to}")]
    NoConnector { from: String, to: String },

    #[error("requested {requested} blocks but only {available} witnesses were supplied")]
    NotEnoughWitnesses { requested: usize, available: usize },

    #[error("matrix has {0} rows/columns, above the minor enumeration limit of 6")]
    MinorLimit(usize),

    #[error("constructed graph failed validation:\n{0}")]
    Invalid(ValidationReport),
}
