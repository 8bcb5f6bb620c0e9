use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("position {pos} out of range 0..{len}")]
    OutOfRange { pos: usize, len: usize },

    #[error("symbol {symbol} does not fit the {mode} alphabet")]
    SymbolTooLarge { symbol: u32, mode: &'static str },

    #[error("factor {index}: {kind}")]
    Invalid { index: usize, kind: Violation },

    #[error("factor {0} is a char factor and has no source")]
    NotACopy(usize),

    #[error("interval boundaries must be strictly increasing (at index {0})")]
    NonIncreasingBoundaries(usize),

    #[error("query {query} outside [{lo}, {hi})")]
    QueryOutOfRange { query: usize, lo: usize, hi: usize },

    #[error("grammar error: {0}")]
    Grammar(String),

    #[error("not an off-line range-sum instance: {0}")]
    NotOrsp(&'static str),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("archive error at byte {offset}: {reason}")]
    Archive { offset: usize, reason: String },
}

/// The first rule broken by a factorization.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Violation {
    /// A copy factor references a factor that does not precede it.
    ForwardReference,
    /// A copy factor references zero factors.
    EmptyCopy,
    /// The expansion of a factor differs from the text it is supposed to cover.
    SourceMismatch,
    /// Factor lengths do not add up to the text length.
    LengthMismatch,
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Violation::ForwardReference => "forward reference",
            Violation::EmptyCopy => "empty copy",
            Violation::SourceMismatch => "source mismatch",
            Violation::LengthMismatch => "length mismatch",
        })
    }
}
