use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by the zero rational function")]
    DivisionByZero,
    #[error("denominator vanishes at the evaluation point")]
    Pole,
    #[error("not weakly decreasing: {0:?}")]
    InvalidPartition(Vec<usize>),
    #[error("shape chain violates the interlacing invariant at step {0}")]
    InvalidChain(usize),
    #[error("recording chain must add exactly one box per step (step {0})")]
    InvalidRecordingChain(usize),
    #[error("letter {letter} out of range 1..={bound}")]
    LetterOutOfRange { letter: usize, bound: usize },
    #[error("row input is not a Young tableau: {0}")]
    InvalidTableau(String),
    #[error("not a permutation of 1..={0}")]
    NotAPermutation(usize),
    #[error("({0}, {1}, {2}) is not a connected triplet")]
    InvalidTriplet(String, String, String),
    #[error("unknown algorithm {0:?}")]
    UnknownAlgorithm(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
