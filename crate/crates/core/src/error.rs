use thiserror::Error;

/// Errors shared across the toolkit.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("ground set size {n} exceeds the supported capacity of 64 entries")]
    CapacityExceeded { n: u32 },

    #[error("invalid vertex: {0}")]
    InvalidVertex(String),

    #[error("invalid swap: {0}")]
    InvalidSwap(String),

    #[error("entry {entry} out of range 1..={n}")]
    InvalidEntry { entry: u32, n: u32 },

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("degenerate graph: J({n},{n}) is a single isolated vertex; connectivity is undefined")]
    DegenerateGraph { n: u32 },

    #[error("graph is not connected")]
    NotConnected,

    #[error("removing every vertex leaves the empty graph")]
    EmptyRemainder,

    #[error("terminals {s} and {t} are adjacent; local connectivity is undefined here")]
    AdjacentTerminals { s: u32, t: u32 },

    #[error("invalid edge pair: {0}")]
    InvalidPair(String),

    #[error("complete graph has no vertex cut")]
    NoVertexCut,

    #[error("instance too large: {0}")]
    TooLarge(String),

    #[error("search budget of {budget} branch nodes exceeded (bounds: {lower} <= kappa' <= {upper})")]
    BudgetExceeded {
        budget: u64,
        lower: u64,
        /// Best feasible size found, or `u64::MAX` when none was found.
        upper: u64,
    },

    #[error("no super vertex-cut of size <= {bound} exists (lower bound {lower})")]
    SizeBoundExceeded { bound: u64, lower: u64 },

    #[error(
        "flow search found no super vertex-cut; only the exhaustive oracle may conclude +infinity"
    )]
    NoSuperCutFound,

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("rank {rank} out of range for a graph on {len} vertices")]
    RankRange { rank: u32, len: u32 },

    #[error("parse error: {0}")]
    Parse(String),
}
