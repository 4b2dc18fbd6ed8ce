use cat_core::CatError;
use group_action::ActionError;
use orbitfold::FoldError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FlatError {
    #[error("vertex category is not simple: {0}")]
    NotSimple(String),
    #[error("vertex category does not match its cone: {0}")]
    ConeMismatch(String),
    #[error("arrow {0} is not an irreducible arrow followed by a loop")]
    NotRepresentable(String),
    #[error("arrow {arrow} has several irreducible decompositions: {decompositions:?}")]
    NotUniquelyRepresentable {
        arrow: String,
        decompositions: Vec<(String, String)>,
    },
    #[error("no exchange loop for arrow {0}")]
    NotRightNormal(String),
    #[error("loops at {0} are not told apart by their labels")]
    LoopLabels(String),
    #[error("law `{law}` fails at {witness:?}")]
    AxiomViolation { law: String, witness: Vec<String> },
    #[error("vertex group is infinite; a window is required")]
    InfiniteGroup,
    #[error("malformed input: {0}")]
    Malformed(String),
    #[error(transparent)]
    Fold(#[from] FoldError),
    #[error(transparent)]
    Action(#[from] ActionError),
    #[error(transparent)]
    Cat(#[from] CatError),
}

impl FlatError {
    pub(crate) fn from_report(r: &cat_core::ValidationReport) -> Option<FlatError> {
        r.violations.first().map(|v| FlatError::AxiomViolation {
            law: v.law.clone(),
            witness: v.witness.clone(),
        })
    }
}
