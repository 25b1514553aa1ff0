use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("game {0} is not all-small")]
    NotAllSmall(String),

    #[error(
        "far-star probes disagree for {game}: *{small} gives {first:?}, *{large} gives {second:?}"
    )]
    UnstableProbe {
        game: String,
        small: u32,
        large: u32,
        first: crate::Outcome,
        second: crate::Outcome,
    },

    #[error("internal consistency failure: {0}")]
    Inconsistent(String),

    #[error("expected a nonempty strip")]
    EmptyStrip,

    #[error("invalid partition: {0}")]
    Partition(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
