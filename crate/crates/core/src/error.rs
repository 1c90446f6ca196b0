use std::io;

/// Errors produced by index construction, queries and index files.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("text is empty; at least one byte is required")]
    EmptyText,

    #[error("text of {len} bytes exceeds the supported maximum of {max} bytes")]
    TextTooLarge { len: usize, max: usize },

    #[error("position {pos} is out of range 1..={len}")]
    PositionOutOfRange { pos: usize, len: usize },

    #[error("interval (start={start}, length={length}) is invalid for a text of {len} bytes")]
    InvalidInterval {
        start: usize,
        length: usize,
        len: usize,
    },

    #[error("walk positions must be consumed in order: expected {expected}, got {got}")]
    WalkOutOfOrder { expected: usize, got: usize },

    #[error("invalid index file: {0}")]
    InvalidIndex(String),

    #[error(transparent)]
    Io(#[from] io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
