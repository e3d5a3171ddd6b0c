use crate::rootsys::Series;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid rank {rank} for series {series}")]
    InvalidRank { series: Series, rank: usize },
    #[error("unknown series `{0}` (expected one of A, B, C, D, E, F, G)")]
    UnknownSeries(String),
    #[error("root does not belong to this root system")]
    ForeignRoot,
    #[error("vector has length {got}, expected {expected}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("operation requires an irreducible root system, got {components} components")]
    Reducible { components: usize },
    #[error("crossed node set is empty; G/G is not a flag variety")]
    EmptyCrossing,
    #[error("node {node} out of range for rank {rank}")]
    NodeOutOfRange { node: usize, rank: usize },
    #[error("root is not a member of the given set")]
    NotInSet,
    #[error("root set is not closed under the parabolic action")]
    NotASubmodule,
    #[error("factor {component} is not crossed at exactly one node")]
    NotMaximal { component: usize },
    #[error("flag is not a Borel flag (all nodes crossed)")]
    NotBorel,
    #[error("enumeration exceeded guard of {cap} submodules")]
    GuardOverflow { cap: u64 },
    #[error("brute force refused: {size} noncompact roots exceeds the limit of {limit}")]
    OracleGuard { size: usize, limit: usize },
    #[error("invalid descriptor: {0}")]
    Descriptor(String),
}
