//! Partial subcategories of annotated categories.
//!
//! A [`PartialSubcategory`] is a subgraph closed under identities whose
//! concatenation is inherited from the parent. [`check_defining`] decides
//! whether it generates the parent, [`property_catalogue`] evaluates the
//! order-theoretic flags and [`search_maximal`] looks for maximal
//! subgraphs keeping a chosen set of them. [`ToneSystem`] carries the
//! interval map behind [`sigma_classes`].

mod catalogue;
mod defining;
mod error;
mod sigma;
mod sub;

pub use catalogue::{
    antisymmetry_witness, completeness, extension_units, flat_flags, is_faithful, is_ordered, is_s_symmetric,
    is_simple, property_catalogue, relation_antisymmetry_witness, restrict_action, search_maximal, AnnotatedCategory,
    Flag, FlatRepresentation, MaximalSearch, PropertyFlags,
};
pub use defining::{check_defining, check_fully_defining, Defining, Tri};
pub use error::PartialError;
pub use sigma::{check_equivalence, sigma_classes, ToneSystem};
pub use sub::{check_partial_subcategory, PartialSubcategory};
