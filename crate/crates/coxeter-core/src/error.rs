use thiserror::Error;

/// Errors raised by the combinatorial engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoxeterError {
    #[error("matrix is not square: row {row} has {len} entries, expected {rank}")]
    NotSquare { row: usize, len: usize, rank: usize },
    #[error("matrix is not symmetric at ({i},{j})")]
    NotSymmetric { i: usize, j: usize },
    #[error("diagonal entry at ({i},{i}) is not 1")]
    DiagonalNotOne { i: usize },
    #[error("off-diagonal entry at ({i},{j}) is less than 2")]
    OffDiagonalTooSmall { i: usize, j: usize },
    #[error("bad matrix entry at ({i},{j}): {text:?}")]
    BadEntry { i: usize, j: usize, text: String },
    #[error("letter {letter} is out of range for rank {rank}")]
    LetterOutOfRange { letter: usize, rank: usize },
    #[error("braid closure exceeded the cap of {cap} words")]
    WordTooLong { cap: usize },
    #[error("ball enumeration exceeded the cap of {cap} elements")]
    BallTooLarge { cap: usize },
    #[error("element set is not closed under multiplication by generators")]
    NotClosed,
    #[error("matrix parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, CoxeterError>;
