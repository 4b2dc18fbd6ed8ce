//! Folding a category by a group action.
//!
//! [`orbit_category`] builds the category of orbits of a foldable action.
//! For semi-regular actions a [`Transversal`] picks one vertex per orbit,
//! which yields the canonical automorphisms `g_T`, the natural annotation
//! `A_T` and a [`Representation`] that unfolds back to the original
//! category.

mod error;
mod fold;
mod representation;

pub use error::FoldError;
pub use fold::{
    build_representation, canonical_automorphism, choose_transversal, natural_annotation, orbit_category,
    transversal_category, OrbitCategory, Strategy, Transversal,
};
pub use representation::{is_faithful, Annotation, Representation};
