use std::collections::{BTreeMap, BTreeSet};

use cat_core::{CatMorphism, Category, CategoryBuilder, ValidationReport};

/// Subgraph of a parent category containing every identity of its
/// vertices, with the concatenation inherited from the parent: `a . b`
/// is defined exactly when `a * b` lies in the subgraph. Indices refer to
/// the parent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialSubcategory {
    pub vertices: BTreeSet<usize>,
    pub arrows: BTreeSet<usize>,
    pub concat: BTreeMap<(usize, usize), usize>,
}

impl PartialSubcategory {
    /// Adds the identities of `vertices` and the endpoints of `arrows`,
    /// then fills in the inherited concatenation.
    pub fn induced(
        k: &Category,
        vertices: impl IntoIterator<Item = usize>,
        arrows: impl IntoIterator<Item = usize>,
    ) -> Self {
        let mut vs: BTreeSet<usize> = vertices.into_iter().collect();
        let mut arr: BTreeSet<usize> = arrows.into_iter().collect();
        for &a in &arr {
            vs.insert(k.src(a));
            vs.insert(k.dst(a));
        }
        arr.extend(vs.iter().map(|&v| k.identity(v)));
        let mut concat = BTreeMap::new();
        for &a in &arr {
            for &b in k.out_arrows(k.dst(a)) {
                if let Some(ab) = k.compose(a, b) {
                    if arr.contains(&b) && arr.contains(&ab) {
                        concat.insert((a, b), ab);
                    }
                }
            }
        }
        Self {
            vertices: vs,
            arrows: arr,
            concat,
        }
    }

    /// All vertices of `k` and the given arrows.
    pub fn spanning(k: &Category, arrows: impl IntoIterator<Item = usize>) -> Self {
        Self::induced(k, k.vertices(), arrows)
    }

    pub fn whole(k: &Category) -> Self {
        Self::spanning(k, k.arrow_ids())
    }

    pub fn discrete(k: &Category) -> Self {
        Self::spanning(k, std::iter::empty())
    }

    pub fn non_identity_arrows<'a>(&'a self, k: &'a Category) -> impl Iterator<Item = usize> + 'a {
        self.arrows.iter().copied().filter(move |&a| !k.is_identity(a))
    }

    pub fn union(&self, other: &Self, k: &Category) -> Self {
        Self::induced(
            k,
            self.vertices.union(&other.vertices).copied(),
            self.arrows.union(&other.arrows).copied(),
        )
    }

    pub fn intersection(&self, other: &Self, k: &Category) -> Self {
        Self::induced(
            k,
            self.vertices.intersection(&other.vertices).copied(),
            self.arrows.intersection(&other.arrows).copied(),
        )
    }

    pub fn is_subgraph_of(&self, other: &Self) -> bool {
        self.vertices.is_subset(&other.vertices) && self.arrows.is_subset(&other.arrows)
    }

    /// The subcategory as a partial category, with its embedding into `k`.
    pub fn to_category(&self, k: &Category) -> (Category, CatMorphism) {
        let mut b = CategoryBuilder::new();
        b.set_partial(true);
        let mut vmap = BTreeMap::new();
        let mut vertex_map = Vec::new();
        let mut amap = BTreeMap::new();
        let mut arrow_map = Vec::new();
        for &v in &self.vertices {
            let w = b.vertex_with_identity(k.vertex_name(v), k.arrow_name(k.identity(v)));
            vmap.insert(v, w);
            vertex_map.push(v);
            amap.insert(k.identity(v), b.identity_of(w));
            arrow_map.push(k.identity(v));
        }
        for &a in &self.arrows {
            if let std::collections::btree_map::Entry::Vacant(e) = amap.entry(a) {
                e.insert(b.arrow(k.arrow_name(a), vmap[&k.src(a)], vmap[&k.dst(a)]));
                arrow_map.push(a);
            }
        }
        for (&(x, y), z) in &self.concat {
            b.set_compose(amap[&x], amap[&y], amap[z]);
        }
        let c = b.build_unchecked();
        let partial = c.has_missing_composites();
        (c.with_partial(partial), CatMorphism { vertex_map, arrow_map })
    }
}

/// Law tags: `vertex-range`, `arrow-range`, `arrow-endpoint`,
/// `missing-identity`, `concatenation-rule` (defined iff the composite is
/// in the subgraph), `concatenation-value`.
pub fn check_partial_subcategory(p: &PartialSubcategory, k: &Category) -> ValidationReport {
    let mut r = ValidationReport::default();
    if let Some(&v) = p.vertices.iter().find(|&&v| v >= k.num_vertices()) {
        r.push("vertex-range", vec![format!("#{v}")]);
        return r;
    }
    if let Some(&a) = p.arrows.iter().find(|&&a| a >= k.num_arrows()) {
        r.push("arrow-range", vec![format!("#{a}")]);
        return r;
    }
    let name = |a: usize| k.arrow_name(a).to_string();
    for &v in &p.vertices {
        if !p.arrows.contains(&k.identity(v)) {
            r.push("missing-identity", vec![k.vertex_name(v).to_string()]);
        }
    }
    for &a in &p.arrows {
        if !p.vertices.contains(&k.src(a)) || !p.vertices.contains(&k.dst(a)) {
            r.push("arrow-endpoint", vec![name(a)]);
        }
    }
    for &a in &p.arrows {
        for &b in k.out_arrows(k.dst(a)) {
            if !p.arrows.contains(&b) {
                continue;
            }
            let inside = k.compose(a, b).filter(|ab| p.arrows.contains(ab));
            match (inside, p.concat.get(&(a, b))) {
                (Some(ab), Some(&c)) if ab != c => r.push("concatenation-value", vec![name(a), name(b)]),
                (Some(_), None) | (None, Some(_)) => r.push("concatenation-rule", vec![name(a), name(b)]),
                _ => {}
            }
        }
    }
    for &(a, b) in p.concat.keys() {
        if k.dst(a) != k.src(b) || !p.arrows.contains(&a) || !p.arrows.contains(&b) {
            r.push("concatenation-rule", vec![name(a), name(b)]);
        }
    }
    r
}
