use thiserror::Error;

#[derive(Debug, Error)]
pub enum GenError {
    #[error("parameter out of range: {0}")]
    Parameter(String),
    #[error("generated action is invalid: {0}")]
    InvalidAction(String),
    #[error(transparent)]
    Cat(#[from] cat_core::CatError),
    #[error(transparent)]
    Action(#[from] group_action::ActionError),
    #[error(transparent)]
    Flat(#[from] flat::FlatError),
    #[error(transparent)]
    Partial(#[from] partialcat::PartialError),
}
