use cat_core::CatError;
use group_action::ActionError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FoldError {
    #[error("not foldable: {0}")]
    NotFoldable(String),
    #[error("not semi-regular: {0}")]
    NotSemiRegular(String),
    #[error("not translative: {0}")]
    NotTranslative(String),
    #[error("given set is not a transversal: {0}")]
    GivenSetNotTransversal(String),
    #[error("malformed representation: {0}")]
    Malformed(String),
    #[error(transparent)]
    Action(#[from] ActionError),
    #[error(transparent)]
    Cat(#[from] CatError),
}
