use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("infinitesimal character must have at least one entry")]
    EmptyCharacter,
    #[error("entries must be strictly decreasing (entry {index} is not larger than its successor)")]
    NotStrictlyDecreasing { index: usize },
    #[error("entry {index} has the wrong parity for rank {rank}")]
    ParityViolation { index: usize, rank: usize },
    #[error("rank {small} cannot interlace with rank {big}; expected {}", big.saturating_sub(1))]
    IncompatibleRanks { big: usize, small: usize },
    #[error("both characters share a parity, so their entries could tie")]
    ParityClash,
    #[error("shaded cell ({row}, {col}) breaks lower-left closure")]
    ClosureViolation { row: usize, col: usize },
    #[error("cell ({row}, {col}) lies outside the {rows}x{cols} grid")]
    CellOutOfRange {
        row: usize,
        col: usize,
        rows: usize,
        cols: usize,
    },
    #[error("invalid symbol '{symbol}' at position {position} (expected A or B)")]
    InvalidSymbol { symbol: char, position: usize },
    #[error("a string with {a_count} A's needs {} B's, found {b_count}", a_count.saturating_sub(1))]
    SymbolCount { a_count: usize, b_count: usize },
    #[error("invalid code bit '{symbol}' at position {position} (expected 0 or 1)")]
    InvalidBit { symbol: char, position: usize },
    #[error("a code needs at least one bit")]
    EmptyCode,
    #[error("code has length {code}, infinitesimal character has rank {rank}")]
    LengthMismatch { code: usize, rank: usize },
    #[error("expected {expected} archimedean places, found {found}")]
    PlaceMismatch { expected: usize, found: usize },
    #[error("at least one archimedean place is required")]
    NoPlaces,
    #[error("all places must carry strings of the same rank")]
    MixedRanks,
    #[error("{what} = {value} exceeds the bound {bound}")]
    BoundExceeded {
        what: &'static str,
        value: i64,
        bound: i64,
    },
    #[error("expected {expected} labels, found {found}")]
    LabelCountMismatch { expected: usize, found: usize },
    #[error("label '{0}' is used more than once")]
    DuplicateLabel(String),
    #[error("weight is not dominant (entry {index} is smaller than its successor)")]
    NonDominant { index: usize },
    #[error("U(1) component {found} does not balance the trace (expected {expected})")]
    TraceImbalance { expected: i64, found: i64 },
    #[error("position index {k} is outside 1..={max}")]
    InvalidPosition { k: usize, max: usize },
    #[error("rank {rank} exceeds the Selmer datum dimension {dim}")]
    RankOutOfRange { rank: usize, dim: usize },
    #[error("cannot parse '{0}' as an integer or half-integer")]
    InvalidHalfInt(String),
    #[error("strings are not nearby")]
    NotNearby,
}
