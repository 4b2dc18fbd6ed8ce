//! Unfolding a representation `(K, A, G)` into the category on pairs
//! `(x, g)`: the arrow `(a, g)` runs from `(dom a, g)` to
//! `(cod a, A(a) g)` and `(a, g) (b, A(a) g) = (a * b, g)`.
//!
//! Finite groups unfold completely; infinite annotation groups are unfolded
//! over a finite window of layers into a partial category.

use std::collections::HashMap;

use cat_core::{find_isomorphism, CatError, CatMorphism, Category, CategoryBuilder, ValidationReport};
use group_action::{ActionError, AnnotationGroup, CategoryAction, GroupElem};
use orbitfold::{build_representation, orbit_category, FoldError, Representation, Transversal};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum UnfoldError {
    #[error("annotation group is infinite; use a bounded window")]
    InfiniteGroup,
    #[error("invalid annotation: {0}")]
    InvalidAnnotation(String),
    #[error("invalid window: {0}")]
    InvalidWindow(String),
    #[error(transparent)]
    Fold(#[from] FoldError),
    #[error(transparent)]
    Action(#[from] ActionError),
    #[error(transparent)]
    Cat(#[from] CatError),
}

/// Checks `A(a * b) = A(b) A(a)` and `A(id) = 1`.
pub fn check_annotation(r: &Representation) -> ValidationReport {
    r.check()
}

/// Unfolded category with its pair encoding.
#[derive(Debug, Clone)]
pub struct Unfolding {
    pub category: Category,
    pub source: Representation,
    /// Layers used, in construction order; `None` for a full unfolding.
    pub window: Option<Vec<GroupElem>>,
    pub vertex_pairs: Vec<(usize, GroupElem)>,
    pub arrow_pairs: Vec<(usize, GroupElem)>,
    vertex_index: HashMap<(usize, GroupElem), usize>,
    arrow_index: HashMap<(usize, GroupElem), usize>,
}

impl Unfolding {
    pub fn vertex(&self, x: usize, g: &GroupElem) -> Option<usize> {
        self.vertex_index.get(&(x, g.clone())).copied()
    }

    pub fn arrow(&self, a: usize, g: &GroupElem) -> Option<usize> {
        self.arrow_index.get(&(a, g.clone())).copied()
    }
}

fn build(r: &Representation, layers: &[GroupElem], bounded: bool) -> Result<Unfolding, UnfoldError> {
    let report = r.check();
    if !report.is_valid() {
        return Err(UnfoldError::InvalidAnnotation(report.to_string()));
    }
    let k = &r.category;
    let grp = r.group();
    for g in layers {
        if !grp.contains(g) {
            return Err(UnfoldError::InvalidWindow(format!("{g:?} is not a canonical element")));
        }
    }
    let layer_set: std::collections::HashSet<&GroupElem> = layers.iter().collect();
    let mut b = CategoryBuilder::new();
    b.set_partial(bounded || k.is_partial());
    let mut vertex_pairs = Vec::new();
    let mut arrow_pairs = Vec::new();
    let mut vertex_index = HashMap::new();
    let mut arrow_index = HashMap::new();
    for g in layers {
        let tag = grp.render(g);
        for x in k.vertices() {
            let v = b.vertex_with_identity(
                &format!("{}@{tag}", k.vertex_name(x)),
                &format!("{}@{tag}", k.arrow_name(k.identity(x))),
            );
            vertex_pairs.push((x, g.clone()));
            vertex_index.insert((x, g.clone()), v);
            let id = b.identity_of(v);
            while arrow_pairs.len() <= id {
                arrow_pairs.push((usize::MAX, grp.neutral()));
            }
            arrow_pairs[id] = (k.identity(x), g.clone());
            arrow_index.insert((k.identity(x), g.clone()), id);
        }
    }
    for g in layers {
        let tag = grp.render(g);
        for a in k.arrow_ids().filter(|&a| !k.is_identity(a)) {
            let h = grp.mul(r.label(a), g);
            if !layer_set.contains(&h) {
                continue;
            }
            let id = b.arrow(
                &format!("{}@{tag}", k.arrow_name(a)),
                vertex_index[&(k.src(a), g.clone())],
                vertex_index[&(k.dst(a), h)],
            );
            while arrow_pairs.len() <= id {
                arrow_pairs.push((usize::MAX, grp.neutral()));
            }
            arrow_pairs[id] = (a, g.clone());
            arrow_index.insert((a, g.clone()), id);
        }
    }
    for (&(a, ref g), &ag) in &arrow_index {
        let h = grp.mul(r.label(a), g);
        for &bb in k.out_arrows(k.dst(a)) {
            let (Some(&bh), Some(ab)) = (arrow_index.get(&(bb, h.clone())), k.compose(a, bb)) else {
                continue;
            };
            b.set_compose(ag, bh, arrow_index[&(ab, g.clone())]);
        }
    }
    Ok(Unfolding {
        category: b.build_unchecked(),
        source: r.clone(),
        window: bounded.then(|| layers.to_vec()),
        vertex_pairs,
        arrow_pairs,
        vertex_index,
        arrow_index,
    })
}

/// Full unfolding over a finite annotation group.
pub fn unfold(r: &Representation) -> Result<Unfolding, UnfoldError> {
    let layers = r.group().enumerate().ok_or(UnfoldError::InfiniteGroup)?;
    build(r, &layers, false)
}

/// Unfolding restricted to the given layers. An arrow `(a, g)` is kept iff
/// both `g` and `A(a) g` are in the window; composites are defined iff
/// they are defined in the base. The result is flagged partial.
pub fn bounded_unfold(r: &Representation, window: &[GroupElem]) -> Result<Unfolding, UnfoldError> {
    let mut seen = std::collections::HashSet::new();
    let layers: Vec<GroupElem> = window.iter().filter(|g| seen.insert((*g).clone())).cloned().collect();
    build(r, &layers, true)
}

/// Axis-aligned box of an abelian group: one inclusive range per free
/// coordinate; torsion coordinates range over all residues.
pub fn box_window(group: &AnnotationGroup, ranges: &[(i64, i64)]) -> Result<Vec<GroupElem>, UnfoldError> {
    let AnnotationGroup::Abelian { free_rank, torsion } = group else {
        return Err(UnfoldError::InvalidWindow("box windows need an abelian group".into()));
    };
    if ranges.len() != *free_rank {
        return Err(UnfoldError::InvalidWindow(format!("expected {free_rank} ranges")));
    }
    let mut axes: Vec<(i64, i64)> = ranges.to_vec();
    axes.extend(torsion.iter().map(|&n| (0, n - 1)));
    let mut out = vec![Vec::new()];
    for (lo, hi) in axes {
        out = out
            .into_iter()
            .flat_map(|p: Vec<i64>| {
                (lo..=hi).map(move |k| {
                    let mut q = p.clone();
                    q.push(k);
                    q
                })
            })
            .collect();
    }
    Ok(out.into_iter().map(GroupElem::Vector).collect())
}

/// `(x, h)^g = (x, h g)` and `(a, h)^g = (a, h g)` on a full unfolding.
pub fn induced_action(u: &Unfolding) -> Result<CategoryAction, UnfoldError> {
    if u.window.is_some() {
        return Err(UnfoldError::InfiniteGroup);
    }
    let grp = u.source.group();
    let fg = grp.to_finite_group().ok_or(UnfoldError::InfiniteGroup)?;
    let elems = grp.enumerate().ok_or(UnfoldError::InfiniteGroup)?;
    let vertex: Vec<Vec<usize>> = elems
        .iter()
        .map(|g| {
            u.vertex_pairs
                .iter()
                .map(|(x, h)| u.vertex(*x, &grp.mul(h, g)).unwrap())
                .collect()
        })
        .collect();
    let arrow: Vec<Vec<usize>> = elems
        .iter()
        .map(|g| {
            u.arrow_pairs
                .iter()
                .map(|(a, h)| u.arrow(*a, &grp.mul(h, g)).unwrap())
                .collect()
        })
        .collect();
    Ok(CategoryAction::from_tables(u.category.clone(), fg, vertex, arrow)?)
}

/// `(x, g) -> x`, `(a, g) -> a`.
pub fn projection(u: &Unfolding) -> CatMorphism {
    CatMorphism {
        vertex_map: u.vertex_pairs.iter().map(|(x, _)| *x).collect(),
        arrow_map: u.arrow_pairs.iter().map(|(a, _)| *a).collect(),
    }
}

/// Outcome of [`verify_roundtrips`] with the isomorphisms found.
#[derive(Debug, Clone)]
pub struct RoundTrips {
    /// Orbit category of the unfolding under the induced action is
    /// isomorphic to the orbit category of the source action.
    pub refold_ok: bool,
    /// The unfolding of the natural representation is isomorphic to the
    /// acted-on category.
    pub unfold_ok: bool,
    pub refold_witness: Option<CatMorphism>,
    pub unfold_witness: Option<CatMorphism>,
    pub unfolding: Unfolding,
}

fn is_iso(f: &CatMorphism, c: &Category, d: &Category) -> bool {
    let flags = cat_core::check_morphism(f, c, d);
    flags.valid && f.is_bijective(d) && {
        // inverse must preserve definedness as well
        let inv = f.inverse().unwrap();
        cat_core::check_morphism(&inv, d, c).valid
    }
}

/// The map `(x^G, g) -> t^g`, `(a^G, g) -> ` the member of `a^G` starting
/// at `t^g`, with `t` the transversal representative of `dom a`.
fn reconstruction_map(
    act: &CategoryAction,
    t: &Transversal,
    orbit: &orbitfold::OrbitCategory,
    u: &Unfolding,
) -> Option<CatMorphism> {
    let c = act.category();
    let grp = u.source.group();
    let rep_of = |x: usize| -> usize { *orbit.vertex_members(x).iter().find(|v| t.contains(**v)).unwrap() };
    let elem = |g: &GroupElem| grp.finite_index(g).unwrap();
    let vertex_map: Vec<usize> = u
        .vertex_pairs
        .iter()
        .map(|(x, g)| act.act_vertex(rep_of(*x), elem(g)))
        .collect();
    let mut arrow_map = Vec::with_capacity(u.arrow_pairs.len());
    for (a, g) in &u.arrow_pairs {
        let start = act.act_vertex(rep_of(orbit.category.src(*a)), elem(g));
        let m = orbit.arrow_members(*a).iter().copied().find(|&m| c.src(m) == start)?;
        arrow_map.push(m);
    }
    Some(CatMorphism { vertex_map, arrow_map })
}

/// Both reconstruction round trips for a semi-regular, foldable action.
///
/// The explicit reconstruction map is tried first and verified as an
/// isomorphism; only if it fails is the exhaustive search run.
pub fn verify_roundtrips(act: &CategoryAction, t: &Transversal, budget: u64) -> Result<RoundTrips, UnfoldError> {
    let (rep, orbit) = build_representation(act, t)?;
    let u = unfold(&rep)?;
    let src = act.category();
    let unfold_witness = match reconstruction_map(act, t, &orbit, &u) {
        Some(f) if is_iso(&f, &u.category, src) => Some(f),
        _ => find_isomorphism(&u.category, src, budget)?,
    };
    let induced = induced_action(&u)?;
    let refolded = orbit_category(&induced)?;
    // The refold is named by least members; pair classes by projection.
    let pi = projection(&u);
    let candidate = CatMorphism {
        vertex_map: refolded.vertex_members.iter().map(|m| pi.vertex_map[m[0]]).collect(),
        arrow_map: refolded.arrow_members.iter().map(|m| pi.arrow_map[m[0]]).collect(),
    };
    let refold_witness = if is_iso(&candidate, &refolded.category, &orbit.category) {
        Some(candidate)
    } else {
        find_isomorphism(&refolded.category, &orbit.category, budget)?
    };
    Ok(RoundTrips {
        refold_ok: refold_witness.is_some(),
        unfold_ok: unfold_witness.is_some(),
        refold_witness,
        unfold_witness,
        unfolding: u,
    })
}
