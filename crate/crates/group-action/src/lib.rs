//! Finite groups acting on finite categories by automorphisms.
//!
//! Actions are stored as explicit tables per group element. Besides orbit
//! computation this crate decides the action properties the folding
//! machinery depends on: semi-regularity, foldability, translativity and
//! right-normality (with its C' exchange table).

mod action;
mod annotation_group;
mod error;
mod group;
mod predicates;

pub use action::{ActionDoc, CategoryAction, Generator, GroupTableDoc};
pub use annotation_group::{AnnotationGroup, GroupElem};
pub use error::ActionError;
pub use group::FiniteGroup;
pub use predicates::{
    check_action, check_cprime_laws, is_foldable, is_right_normal, is_semiregular, is_translative,
    is_translative_within, orbit_subcategory_arrows, orbits, CPrime, CPrimeTable, FixWitness, FoldWitness, OrbitIso,
    RightNormality, Translativity,
};
