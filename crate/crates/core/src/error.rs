use alloc::string::String;

use crate::word::Word;

pub type Result<T, E = Error> = core::result::Result<T, E>;

/// Errors from operations on an already validated system. Validation problems
/// are reported separately through [`ValidationError`](crate::system::ValidationError).
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("cannot parse word {0:?}")]
    WordSyntax(String),
    #[error("word {0} is not an admissible path")]
    InadmissibleWord(Word),
    #[error("symbol {0} is not an edge of the system")]
    UnknownSymbol(u16),
    #[error("unknown vertex id {0}")]
    UnknownVertex(u32),
    #[error("word {word} has ξ = {xi}, no prefix lies in Ω_{level}")]
    NoPrefixAtLevel { word: Word, xi: u32, level: u32 },
    #[error("level {level} is below the required minimum {required}")]
    LevelTooSmall { level: u32, required: u32 },
    #[error("spectral radius stays above 1 on the whole bracket up to dimension {dimension}")]
    NoRootInRange { dimension: usize },
    #[error("depth {depth} needs {words} words, over the cap of {cap}")]
    DepthTooLarge { depth: u32, words: u64, cap: u64 },
    #[error("tile is not part of the context tiling")]
    TileNotInContext,
    #[error("invalid address: {0}")]
    InvalidAddress(String),
    #[error("tiling is not deflatable: {0}")]
    NotDeflatable(String),
    #[error("no witness found with p, q ≤ {bound}")]
    Inconclusive { bound: usize },
    #[error("class representative is too short to shift")]
    PrefixTooShort,
    #[error("period word is empty")]
    EmptyPeriod,
    #[error("operation needs ambient dimension in {supported}, got {dimension}")]
    UnsupportedDimension { dimension: usize, supported: &'static str },
}
