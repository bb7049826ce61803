use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlphabetError {
    #[error("alphabet must contain at least one symbol")]
    Empty,
    #[error("symbol {0:?} appears more than once in the alphabet")]
    Duplicate(char),
    #[error("symbol {0:?} is reserved and cannot be part of an alphabet")]
    Reserved(char),
}

/// Errors raised while reading bracket, solid or IUPAC notation.
///
/// Positions are 1-based character offsets into the input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("character {ch:?} at position {position} is not in the alphabet")]
    UnknownCharacter { ch: char, position: usize },
    #[error("empty bracket group at position {position}")]
    EmptyBracket { position: usize },
    #[error("bracket group opened at position {position} is never closed")]
    UnclosedBracket { position: usize },
    #[error("unexpected {ch:?} at position {position}")]
    UnexpectedBracket { ch: char, position: usize },
    #[error("{ch:?} at position {position} is not an IUPAC nucleotide code")]
    UnknownCode { ch: char, position: usize },
}

impl ParseError {
    /// 1-based character offset the error refers to.
    pub fn position(&self) -> usize {
        match *self {
            ParseError::UnknownCharacter { position, .. }
            | ParseError::EmptyBracket { position }
            | ParseError::UnclosedBracket { position }
            | ParseError::UnexpectedBracket { position, .. }
            | ParseError::UnknownCode { position, .. } => position,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StringError {
    #[error("substring [{start}, {end}] is out of range for length {len}")]
    OutOfRange {
        start: usize,
        end: usize,
        len: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LceError {
    #[error("sequence is empty")]
    Empty,
    #[error("sequence does not end with the separator")]
    MissingSeparator,
    #[error("separator occurs {count} times; it must occur exactly once")]
    SeparatorNotUnique { count: usize },
    #[error("offset pair ({i}, {j}) is out of range for length {len}")]
    OutOfRange { i: usize, j: usize, len: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatchError {
    #[error("pattern is empty")]
    EmptyPattern,
    #[error("index length {actual} does not fit text length {text} + pattern length {pattern} + separator")]
    IndexMismatch {
        actual: usize,
        text: usize,
        pattern: usize,
    },
    #[error(transparent)]
    Lce(#[from] LceError),
}
