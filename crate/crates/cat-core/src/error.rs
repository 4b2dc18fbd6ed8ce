use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatError {
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("unknown arrow `{0}`")]
    UnknownArrow(String),
    #[error("duplicate identifier `{0}`")]
    Duplicate(String),
    #[error("composition of `{0}` and `{1}` listed twice")]
    DuplicateComposition(String, String),
    #[error("path is empty")]
    EmptyPath,
    #[error("arrows do not meet at path position {0}")]
    NonComposable(usize),
    #[error("composition undefined at path position {0}")]
    Undefined(usize),
    #[error("search budget of {0} steps exhausted")]
    BudgetExhausted(u64),
    #[error("malformed document: {0}")]
    Malformed(String),
}
