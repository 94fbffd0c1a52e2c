use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RecognizerError {
    #[error("generator {index} is not an involution")]
    NotInvolution { index: usize },
    #[error("generator {index} is the identity")]
    IdentityGenerator { index: usize },
    #[error("group closure exceeded the cap of {cap} elements")]
    CapExceeded { cap: usize },
    #[error("permutations act on different domains ({left} vs {right} points)")]
    DegreeMismatch { left: usize, right: usize },
    #[error("permutation parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error(transparent)]
    Coxeter(#[from] coxeter_core::CoxeterError),
}

pub type Result<T> = std::result::Result<T, RecognizerError>;
