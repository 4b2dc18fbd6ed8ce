//! Flat descriptions of foldable categories.
//!
//! A right-normal translative action is determined by much less than its
//! orbit category with annotation: the irreducible arrows (those that do
//! not end in a removable loop), a loop category at one vertex, a cocycle
//! `n` recording which loop a composite of irreducibles carries, and an
//! exchange table `C` for moving loops past arrows. This crate computes
//! those pieces, checks their axioms, rebuilds the original category from
//! them (singleton extension, flat unfolding) and compares two flat
//! descriptions up to a change of transversal.

mod error;
mod exchange;
mod extension;
mod flatcat;
mod groupal;
mod iso;
mod reduce;
mod rep;
mod unfolding;

pub use error::FlatError;
pub use exchange::{check_exchange_laws, derive_c, derive_c_orbit, ExchangeTable};
pub use extension::{product_decomposition, singleton_extension, Extension, ProductDecomposition};
pub use flatcat::{check_r_homomorphism, flat_orbit_category, FlatOrbit};
pub use groupal::{check_shift_isomorphism, shift_neutral, vertex_category, Cone, RightGroupalCategory};
pub use iso::{check_flat_iso, find_layer_shift, unfolding_map, FlatRepIso};
pub use reduce::{check_split_laws, irreducible_arrows, r_n_maps, Irreducibles, SplitMaps};
pub use rep::{
    flat_rep_from_action, flat_rep_from_representation, CocycleTable, FlatBundle, FlatCategoryRepresentation,
    LabelExchange,
};
pub use unfolding::{flat_to_plain, unfold_flat, FlatUnfolding};
