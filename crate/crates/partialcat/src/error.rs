use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartialError {
    #[error("search budget of {0} exhausted")]
    BudgetExhausted(u64),
    #[error("not a partial subcategory: {0}")]
    NotPartialSubcategory(String),
    #[error("invalid tone system: {0}")]
    InvalidToneSystem(String),
    #[error("malformed input: {0}")]
    Malformed(String),
    #[error(transparent)]
    Cat(#[from] cat_core::CatError),
    #[error(transparent)]
    Flat(#[from] flat::FlatError),
}
