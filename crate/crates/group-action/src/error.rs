use cat_core::CatError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ActionError {
    #[error("action is not semi-regular: {0}")]
    NotSemiRegular(String),
    #[error("action is not foldable: {0}")]
    NotFoldable(String),
    #[error("action is not translative: {0}")]
    NotTranslative(String),
    #[error("action is not right-normal: {0}")]
    NotRightNormal(String),
    #[error("invalid group: {0}")]
    InvalidGroup(String),
    #[error("invalid action: {0}")]
    InvalidAction(String),
    #[error(transparent)]
    Cat(#[from] CatError),
}
