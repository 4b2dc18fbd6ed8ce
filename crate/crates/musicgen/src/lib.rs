//! Deterministic generators for the musical examples and the fixtures
//! shared by the tests.
//!
//! Every generator is a pure function of its parameters; [`generate`]
//! dispatches on a [`FixtureSpec`] and [`Fixture::to_json_value`] gives a
//! canonical, byte-stable document.

mod actions;
mod error;
mod lattice;
mod pitch;
mod tones;

use cat_core::Category;
use group_action::CategoryAction;
use orbitfold::Representation;
use partialcat::{FlatRepresentation, ToneSystem};
use serde_json::{json, Value};

pub use actions::{gen_chain_bundle, gen_fix_k, gen_product, gen_zn_cover, validated, MAX_SIZE};
pub use error::GenError;
pub use lattice::{
    box_offset, box_translations, gen_box_flat, gen_box_fold, gen_lattice_window, gen_tonnetz, ThirdPeriod,
};
pub use pitch::{
    gen_diatonic, gen_shepard, gen_tet, gen_zn_fold, interval_class, pitch_class, tet_bundle, tet_rotation, Diatonic,
    DIATONIC_STEPS,
};
pub use tones::{
    all_tone_systems, diatonic_tones, glued_tetrachords, tet_tones, tonnetz_tones, LOWER_TILE, UPPER_TILE,
};

/// A generator together with its parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FixtureSpec {
    FixK,
    ChainBundle { k: usize, h: usize },
    ZnCover { n: usize, m: usize, dmax: usize },
    Product { k: usize, h: usize },
    ZnFold { n: usize, dmax: usize },
    Tet { n: usize },
    Shepard { n: usize },
    Diatonic,
    Tonnetz { third: ThirdPeriod },
    LatticeWindow,
    GluedTetrachords,
}

impl FixtureSpec {
    pub fn name(&self) -> &'static str {
        match self {
            FixtureSpec::FixK => "fix_k",
            FixtureSpec::ChainBundle { .. } => "chain_bundle",
            FixtureSpec::ZnCover { .. } => "zn_cover",
            FixtureSpec::Product { .. } => "product",
            FixtureSpec::ZnFold { .. } => "zn_fold",
            FixtureSpec::Tet { .. } => "tet",
            FixtureSpec::Shepard { .. } => "shepard",
            FixtureSpec::Diatonic => "diatonic",
            FixtureSpec::Tonnetz { .. } => "tonnetz",
            FixtureSpec::LatticeWindow => "lattice_window",
            FixtureSpec::GluedTetrachords => "glued_tetrachords",
        }
    }

    pub fn names() -> &'static [&'static str] {
        &[
            "fix_k",
            "chain_bundle",
            "zn_cover",
            "product",
            "zn_fold",
            "tet",
            "shepard",
            "diatonic",
            "tonnetz",
            "lattice_window",
            "glued_tetrachords",
        ]
    }
}

/// Output of [`generate`].
#[derive(Debug, Clone)]
pub enum Fixture {
    /// A category with several actions on it.
    Actions(Category, Vec<CategoryAction>),
    Action(CategoryAction),
    Representation(Representation),
    Flat(FlatRepresentation),
    Diatonic(Box<Diatonic>),
    Tones(ToneSystem),
}

fn category_json(c: &Category) -> Value {
    serde_json::to_value(c.to_doc()).expect("category documents serialize")
}

fn action_json(a: &CategoryAction) -> Value {
    serde_json::to_value(a.to_doc()).expect("action documents serialize")
}

impl Fixture {
    pub fn kind(&self) -> &'static str {
        match self {
            Fixture::Actions(..) => "actions",
            Fixture::Action(_) => "action",
            Fixture::Representation(_) => "representation",
            Fixture::Flat(_) => "flat",
            Fixture::Diatonic(_) => "diatonic",
            Fixture::Tones(_) => "tones",
        }
    }

    /// Main document. Categories acted on are stored in it and the
    /// actions alongside, see [`Fixture::actions_json`].
    pub fn to_json_value(&self) -> Value {
        match self {
            Fixture::Actions(c, _) => category_json(c),
            Fixture::Action(a) => category_json(a.category()),
            Fixture::Representation(r) => r.to_json_value(),
            Fixture::Flat(f) => f.to_json_value(),
            Fixture::Diatonic(d) => {
                let s = &d.scale.completion.base;
                let c = &d.chromatic.completion.base;
                let map: serde_json::Map<String, Value> = s
                    .vertices()
                    .map(|x| (s.vertex_name(x).to_string(), json!(c.vertex_name(d.vertex_map[x]))))
                    .collect();
                json!({"scale": d.scale.to_json_value(), "chromatic": d.chromatic.to_json_value(), "embedding": map})
            }
            Fixture::Tones(t) => t.to_json_value(),
        }
    }

    /// Actions of the fixture, if any, as a list of documents.
    pub fn actions_json(&self) -> Option<Value> {
        match self {
            Fixture::Actions(_, acts) => Some(Value::Array(acts.iter().map(action_json).collect())),
            Fixture::Action(a) => Some(Value::Array(vec![action_json(a)])),
            _ => None,
        }
    }
}

pub fn generate(spec: &FixtureSpec) -> Result<Fixture, GenError> {
    Ok(match *spec {
        FixtureSpec::FixK => {
            let (k, diagonal, product) = gen_fix_k()?;
            Fixture::Actions(k, vec![diagonal, product])
        }
        FixtureSpec::ChainBundle { k, h } => Fixture::Action(gen_chain_bundle(k, h)?),
        FixtureSpec::ZnCover { n, m, dmax } => Fixture::Action(gen_zn_cover(n, m, dmax)?),
        FixtureSpec::Product { k, h } => Fixture::Action(gen_product(k, h)?),
        FixtureSpec::ZnFold { n, dmax } => Fixture::Representation(gen_zn_fold(n, dmax)?),
        FixtureSpec::Tet { n } => Fixture::Flat(gen_tet(n)?),
        FixtureSpec::Shepard { n } => Fixture::Flat(gen_shepard(n)?),
        FixtureSpec::Diatonic => Fixture::Diatonic(Box::new(gen_diatonic()?)),
        FixtureSpec::Tonnetz { third } => Fixture::Flat(gen_tonnetz(third)?),
        FixtureSpec::LatticeWindow => Fixture::Representation(gen_lattice_window()?),
        FixtureSpec::GluedTetrachords => Fixture::Tones(glued_tetrachords()?),
    })
}
