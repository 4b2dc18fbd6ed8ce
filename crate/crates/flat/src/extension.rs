//! Singleton extensions: arrows `(a, v)` of a flat base with a loop label,
//! composed through the cocycle and the exchange table.

use std::collections::{BTreeSet, HashMap};

use cat_core::{check_morphism, validate_category, CatMorphism, Category, CategoryBuilder};
use group_action::GroupElem;

use crate::error::FlatError;
use crate::rep::{FlatBundle, FlatCategoryRepresentation};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Extension {
    pub category: Category,
    /// `(base arrow, loop label)` of every arrow.
    pub pairs: Vec<(usize, GroupElem)>,
    index: HashMap<(usize, GroupElem), usize>,
}

impl Extension {
    pub fn arrow(&self, a: usize, v: &GroupElem) -> Option<usize> {
        self.index.get(&(a, v.clone())).copied()
    }
}

/// Extension over the loop labels `loops`, optionally restricted to the
/// pairs in `support`. Arrows are named `a|v`. Fails with the first broken
/// law when the data violate the cocycle and exchange axioms or the result
/// is not a category.
pub fn singleton_extension(
    f: &FlatCategoryRepresentation,
    loops: &[GroupElem],
    support: Option<&BTreeSet<(usize, GroupElem)>>,
) -> Result<Extension, FlatError> {
    if let Some(e) = FlatError::from_report(&f.check_extension_axioms()) {
        return Err(e);
    }
    let k = &f.base;
    let g = &f.g.group;
    let one = g.neutral();
    let mut b = CategoryBuilder::new();
    let mut pairs = Vec::new();
    let mut index = HashMap::new();
    for v in k.vertices() {
        let id = k.identity(v);
        let w = b.vertex_with_identity(k.vertex_name(v), &format!("{}|{}", k.arrow_name(id), g.render(&one)));
        index.insert((id, one.clone()), b.identity_of(w));
        pairs.push((id, one.clone()));
    }
    for a in k.arrow_ids() {
        for v in loops {
            if k.is_identity(a) && *v == one {
                continue;
            }
            if !f.g.in_cone(v) || support.is_some_and(|s| !s.contains(&(a, v.clone()))) {
                continue;
            }
            let id = b.arrow(&format!("{}|{}", k.arrow_name(a), g.render(v)), k.src(a), k.dst(a));
            index.insert((a, v.clone()), id);
            pairs.push((a, v.clone()));
        }
    }
    let mut out_of: Vec<Vec<usize>> = vec![Vec::new(); k.num_vertices()];
    for (i, (a, _)) in pairs.iter().enumerate() {
        out_of[k.src(*a)].push(i);
    }
    for (i, (a, x)) in pairs.iter().enumerate() {
        for &j in &out_of[k.dst(*a)] {
            let (bb, y) = &pairs[j];
            if let Some(p) = f.extension_composite(*a, x, *bb, y) {
                if let Some(&z) = index.get(&p) {
                    b.set_compose(i, j, z);
                }
            }
        }
    }
    let c = b.build()?;
    let partial = c.has_missing_composites();
    let category = c.with_partial(partial);
    if let Some(FlatError::AxiomViolation { law, witness }) = FlatError::from_report(&validate_category(&category)) {
        return Err(FlatError::AxiomViolation {
            law: format!("extension-{law}"),
            witness,
        });
    }
    Ok(Extension { category, pairs, index })
}

/// Irreducible-times-loop decomposition of the category behind a flat
/// bundle: the extension on realised pairs `(a, v)` and its isomorphism
/// `(a, v) -> a * loop_v` onto the original category.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductDecomposition {
    pub extension: Extension,
    pub to_orbit: CatMorphism,
}

pub fn product_decomposition(bundle: &FlatBundle) -> Result<ProductDecomposition, FlatError> {
    let k = &bundle.orbit.category;
    let f = &bundle.rep;
    let mut support = BTreeSet::new();
    let mut labels = BTreeSet::new();
    let mut image = HashMap::new();
    for (fa, &a) in bundle.flat.to_orbit.iter().enumerate() {
        for (lab, &l) in &bundle.loops_by_label[k.dst(a)] {
            if let Some(al) = k.compose(a, l) {
                support.insert((fa, lab.clone()));
                labels.insert(lab.clone());
                image.insert((fa, lab.clone()), al);
            }
        }
    }
    let loops: Vec<GroupElem> = labels.into_iter().collect();
    let extension = singleton_extension(f, &loops, Some(&support))?;
    let to_orbit = CatMorphism {
        vertex_map: extension.category.vertices().collect(),
        arrow_map: extension.pairs.iter().map(|p| image[p]).collect(),
    };
    let fwd = check_morphism(&to_orbit, &extension.category, k);
    let back = to_orbit
        .inverse()
        .map(|inv| check_morphism(&inv, k, &extension.category));
    if !fwd.valid || !to_orbit.is_bijective(k) || !back.is_some_and(|b| b.valid) {
        let witness = fwd
            .report
            .violations
            .first()
            .map(|v| v.witness.clone())
            .unwrap_or_default();
        return Err(FlatError::AxiomViolation {
            law: "product-isomorphism".into(),
            witness,
        });
    }
    Ok(ProductDecomposition { extension, to_orbit })
}
