use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("a composition needs at least one part")]
    EmptyComposition,

    #[error("part {index} is {value}, parts must be positive")]
    NonPositivePart { index: usize, value: i128 },

    #[error("arithmetic overflow: {0}")]
    Overflow(&'static str),

    #[error("ParseError at token {token}: {text:?} is not an integer")]
    Parse { token: usize, text: String },

    #[error("index {index} outside 1..={len}")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("element {element} outside 1..={n}")]
    OutOfRange { element: u64, n: u64 },

    #[error("composition {0} is not circular")]
    NotCircular(String),

    #[error("the root (1,1) has no parent")]
    NoParent,

    #[error("the one-point composition (1) is not a node of the tree")]
    SinglePart,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
