use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("symbol not in grammar")]
    UnknownSymbol,
    #[error("grammar contains a cycle through {0}")]
    Cycle(String),
    #[error("start symbol {0} has no rule")]
    BadStart(u32),
    #[error("expansion length overflows u64")]
    Overflow,
    #[error("position {pos} out of range 1..={len}")]
    OutOfRange { pos: u64, len: u64 },
    #[error("expansion too short")]
    ExpansionTooShort,
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("grammar is not admissible")]
    NotAdmissible,
    #[error("not a maximal string")]
    NotMaximal,
    #[error("empty input")]
    EmptyInput,
    #[error("input length {len} exceeds the cap {cap}")]
    TooLong { len: usize, cap: usize },
    #[error("symbol {0} not in alphabet")]
    NotInAlphabet(String),
    #[error("{0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn pre<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Precondition(msg.into()))
}
