use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SagpError {
    #[error("cannot index an empty sequence")]
    EmptySequence,

    #[error("sequence must end with a unique, strictly smallest terminal symbol")]
    BadTerminal,

    #[error("rank {rank} outside 1..={len}")]
    RankOutOfRange { rank: usize, len: usize },

    #[error("position {pos} is not in the reversed half of the augmented text (n = {n})")]
    NotReversedPosition { pos: usize, n: usize },

    #[error("position {pos} outside 1..={n}")]
    PositionOutOfRange { pos: usize, n: usize },

    #[error("value {value} outside universe 1..={universe}")]
    OutOfUniverse { value: usize, universe: usize },

    #[error("input length {len} exceeds the brute-force bound {bound}")]
    OracleBound { len: usize, bound: usize },

    #[error("growing tree holds suffixes from {actual}, expected {expected}")]
    TreeState { expected: usize, actual: usize },

    #[error("alphabet size must be at least 1")]
    EmptyAlphabet,
}

pub type Result<T> = std::result::Result<T, SagpError>;
