//! Unfolding a flat representation: vertices `(x, g)` and arrows
//! `(a, v, g): (dom a, g) -> (cod a, v A(a) g)` for `v` in the cone.

use std::collections::HashMap;

use cat_core::{CatMorphism, Category, CategoryBuilder};
use group_action::GroupElem;
use unfold::Unfolding;

use crate::error::FlatError;
use crate::rep::{FlatBundle, FlatCategoryRepresentation};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlatUnfolding {
    pub category: Category,
    pub vertex_pairs: Vec<(usize, GroupElem)>,
    /// `(base arrow, loop label, layer)` of every arrow.
    pub arrow_triples: Vec<(usize, GroupElem, GroupElem)>,
    vertex_index: HashMap<(usize, GroupElem), usize>,
    arrow_index: HashMap<(usize, GroupElem, GroupElem), usize>,
}

impl FlatUnfolding {
    pub fn vertex(&self, x: usize, g: &GroupElem) -> Option<usize> {
        self.vertex_index.get(&(x, g.clone())).copied()
    }

    pub fn arrow(&self, a: usize, v: &GroupElem, g: &GroupElem) -> Option<usize> {
        self.arrow_index.get(&(a, v.clone(), g.clone())).copied()
    }
}

/// Unfolds `f` over the whole vertex group, or over `window` (then the
/// result is partial). Names: `x@g` and `a|v@g`.
pub fn unfold_flat(f: &FlatCategoryRepresentation, window: Option<&[GroupElem]>) -> Result<FlatUnfolding, FlatError> {
    if let Some(e) = FlatError::from_report(&f.check()) {
        return Err(e);
    }
    let g = &f.g.group;
    let layers: Vec<GroupElem> = match window {
        Some(w) => w.to_vec(),
        None => g.enumerate().ok_or(FlatError::InfiniteGroup)?,
    };
    if let Some(e) = layers.iter().find(|e| !g.contains(e)) {
        return Err(FlatError::Malformed(format!(
            "window element {e:?} is not in the group"
        )));
    }
    let k = &f.base;
    let one = g.neutral();
    let mut b = CategoryBuilder::new();
    let mut vertex_pairs = Vec::new();
    let mut vertex_index = HashMap::new();
    let mut arrow_triples = Vec::new();
    let mut arrow_index = HashMap::new();
    for h in &layers {
        for x in k.vertices() {
            let id = k.identity(x);
            let w = b.vertex_with_identity(
                &format!("{}@{}", k.vertex_name(x), g.render(h)),
                &format!("{}|{}@{}", k.arrow_name(id), g.render(&one), g.render(h)),
            );
            vertex_index.insert((x, h.clone()), w);
            vertex_pairs.push((x, h.clone()));
            let ida = b.identity_of(w);
            arrow_index.insert((id, one.clone(), h.clone()), ida);
            arrow_triples.push((id, one.clone(), h.clone()));
        }
    }
    for h in &layers {
        for a in k.arrow_ids() {
            let base = g.mul(&f.annotation[a], h);
            for t in &layers {
                let v = g.div(t, &base);
                if !f.g.in_cone(&v) || (k.is_identity(a) && v == one) {
                    continue;
                }
                let src = vertex_index[&(k.src(a), h.clone())];
                let dst = vertex_index[&(k.dst(a), t.clone())];
                let id = b.arrow(
                    &format!("{}|{}@{}", k.arrow_name(a), g.render(&v), g.render(h)),
                    src,
                    dst,
                );
                arrow_index.insert((a, v.clone(), h.clone()), id);
                arrow_triples.push((a, v, h.clone()));
            }
        }
    }
    arrow_triples.sort_by_key(|t| arrow_index[t]);
    let mut out_of: HashMap<(usize, GroupElem), Vec<usize>> = HashMap::new();
    for (i, (a, _, h)) in arrow_triples.iter().enumerate() {
        out_of.entry((k.src(*a), h.clone())).or_default().push(i);
    }
    for (i, (a, v, h)) in arrow_triples.iter().enumerate() {
        let next = g.mul(&f.extension_annotation(*a, v), h);
        let Some(outs) = out_of.get(&(k.dst(*a), next)) else {
            continue;
        };
        for &j in outs {
            let (bb, w, _) = &arrow_triples[j];
            if let Some((ab, u)) = f.extension_composite(*a, v, *bb, w) {
                if let Some(&z) = arrow_index.get(&(ab, u, h.clone())) {
                    b.set_compose(i, j, z);
                }
            }
        }
    }
    let c = b.build()?;
    let partial = window.is_some() || k.is_partial() || c.has_missing_composites();
    Ok(FlatUnfolding {
        category: c.with_partial(partial),
        vertex_pairs,
        arrow_triples,
        vertex_index,
        arrow_index,
    })
}

/// `(x, g) -> (x, g)`, `(a, v, g) -> (a * loop_v, g)` from the flat
/// unfolding of a bundle into the plain unfolding of its orbit
/// representation; `None` when some image is missing.
pub fn flat_to_plain(bundle: &FlatBundle, fu: &FlatUnfolding, pu: &Unfolding) -> Option<CatMorphism> {
    let k = &bundle.orbit.category;
    let vertex_map = fu
        .vertex_pairs
        .iter()
        .map(|(x, g)| pu.vertex(*x, g))
        .collect::<Option<Vec<_>>>()?;
    let arrow_map = fu
        .arrow_triples
        .iter()
        .map(|(a, v, g)| {
            let oa = bundle.flat.to_orbit[*a];
            let l = bundle.loop_at(k.dst(oa), v)?;
            pu.arrow(k.compose(oa, l)?, g)
        })
        .collect::<Option<Vec<_>>>()?;
    Some(CatMorphism { vertex_map, arrow_map })
}
