//! Finite small categories as validated data.
//!
//! A [`Category`] is a finite directed multigraph with one identity loop per
//! vertex and a composition table. Composition is written in diagrammatic
//! order: `compose(a, b)` is defined when `dst(a) == src(b)` and runs from
//! `src(a)` to `dst(b)`. A category whose table may leave composable pairs
//! undefined carries the `partial` flag.
//!
//! Everything downstream (group actions, orbit folds, unfoldings, flat
//! representations) is built on this crate.

mod category;
mod dot;
mod error;
mod iso;
mod json;
mod morphism;
mod partition;
mod path;
mod quotient;
mod report;

pub use category::{Arrow, Category, CategoryBuilder};
pub use dot::to_dot;
pub use error::CatError;
pub use iso::{find_isomorphism, IsoSearch};
pub use json::{ArrowDoc, CategoryDoc};
pub use morphism::{check_morphism, CatMorphism, MorphismFlags};
pub use partition::Partition;
pub use path::{bounded_path_category, bounded_path_category_capped, compose_path, Digraph};
pub use quotient::{congruence_closure, quotient_by_congruence, Congruence, Quotient};
pub use report::{validate_category, ValidationReport, Verdict, Violation};

/// Default step budget for searches when the caller has no preference.
pub const DEFAULT_BUDGET: u64 = 2_000_000;
