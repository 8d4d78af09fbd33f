use thiserror::Error;

/// Errors reported by the library. Indices in messages are 1-based, matching
/// the `x_1..x_2n` / `b_1..b_n` conventions used throughout the crate docs.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("word is empty; a Dyck word has semilength >= 1")]
    EmptyWord,
    #[error("word length {0} is odd; a Dyck word has even length")]
    OddLength(usize),
    #[error("symbol at position {position} is not 0 or 1")]
    InvalidSymbol { position: usize },
    #[error("prefix of length {prefix_len} contains more 1s than 0s")]
    NegativePrefix { prefix_len: usize },
    #[error("word has {zeros} 0s and {ones} 1s; a Dyck word has equal counts")]
    Unbalanced { zeros: usize, ones: usize },
    #[error("expected {expected} positions, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },
    #[error("positions must be strictly increasing: b{index} = {value} after b{} = {prev}", index - 1)]
    NotIncreasing {
        index: usize,
        prev: usize,
        value: usize,
    },
    #[error("b{index} = {value} outside [{lo}, {hi}]")]
    BoundViolation {
        index: usize,
        value: usize,
        lo: usize,
        hi: usize,
    },
    #[error("count exceeds 64 bits")]
    Overflow,
    #[error("row {row} exceeds table size {n_max}")]
    RowOutOfRange { row: usize, n_max: usize },
    #[error("ballot table covers rows up to {n_max}, but semilength {needed} is required")]
    TableTooSmall { needed: usize, n_max: usize },
    #[error("rank {rank} outside [1, {max}]")]
    RankOutOfRange { rank: u64, max: u64 },
    #[error("cannot encode an empty tree")]
    EmptyTree,
    #[error("tree syntax error at byte {offset}: {reason}")]
    TreeSyntax {
        offset: usize,
        reason: &'static str,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
