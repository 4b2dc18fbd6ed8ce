//! Flat orbit categories: irreducible arrows with `x . y = r(x * y)`.

use std::collections::BTreeMap;

use cat_core::{CatMorphism, Category, CategoryBuilder, ValidationReport};

use crate::error::FlatError;
use crate::reduce::{r_n_maps, SplitMaps};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlatOrbit {
    pub category: Category,
    /// Arrow of the original category behind each flat arrow.
    pub to_orbit: Vec<usize>,
    /// Flat arrow of each irreducible arrow.
    pub from_orbit: Vec<Option<usize>>,
    pub split: SplitMaps,
}

impl FlatOrbit {
    /// `r` as a flat arrow.
    pub fn r(&self, a: usize) -> usize {
        self.from_orbit[self.split.r[a]].expect("r lands in irreducible arrows")
    }

    /// `r` as index data from the original category onto the flat one.
    pub fn r_morphism(&self, k: &Category) -> CatMorphism {
        CatMorphism {
            vertex_map: k.vertices().collect(),
            arrow_map: k.arrow_ids().map(|a| self.r(a)).collect(),
        }
    }

    /// `n(a * b)` for every composable pair of flat arrows whose composite
    /// exists in the original category, as loops there.
    pub fn n_hat(&self, k: &Category) -> BTreeMap<(usize, usize), usize> {
        let mut out = BTreeMap::new();
        for (x, y, _) in self.category.compositions() {
            if let Some(p) = k.compose(self.to_orbit[x], self.to_orbit[y]) {
                out.insert((x, y), self.split.n[p]);
            }
        }
        out
    }
}

/// Flat category of a uniquely representable category `k`. Vertices and
/// irreducible arrows keep their names; `x . y` is defined iff `x * y` is.
pub fn flat_orbit_category(k: &Category) -> Result<FlatOrbit, FlatError> {
    let split = r_n_maps(k)?;
    let mut b = CategoryBuilder::new();
    let mut from_orbit = vec![None; k.num_arrows()];
    let mut to_orbit = Vec::new();
    for v in k.vertices() {
        let id = k.identity(v);
        let w = b.vertex_with_identity(k.vertex_name(v), k.arrow_name(id));
        from_orbit[id] = Some(b.identity_of(w));
        to_orbit.push(id);
    }
    for a in k.arrow_ids() {
        if split.irreducibles.irreducible[a] && !k.is_identity(a) {
            from_orbit[a] = Some(b.arrow(k.arrow_name(a), k.src(a), k.dst(a)));
            to_orbit.push(a);
        }
    }
    let mut flat_to_orbit = vec![0; to_orbit.len()];
    for (a, f) in from_orbit.iter().enumerate() {
        if let Some(f) = f {
            flat_to_orbit[*f] = a;
        }
    }
    for &x in &flat_to_orbit {
        for &y in k.out_arrows(k.dst(x)) {
            if let (Some(fx), Some(fy), Some(xy)) = (from_orbit[x], from_orbit[y], k.compose(x, y)) {
                b.set_compose(fx, fy, from_orbit[split.r[xy]].expect("r is irreducible"));
            }
        }
    }
    let c = b.build_unchecked();
    let partial = c.has_missing_composites();
    Ok(FlatOrbit {
        category: c.with_partial(partial),
        to_orbit: flat_to_orbit,
        from_orbit,
        split,
    })
}

/// `r(a) . r(b) = r(a * b)` wherever `a * b` is defined. Law tag:
/// `r-homomorphism`.
pub fn check_r_homomorphism(k: &Category, f: &FlatOrbit) -> ValidationReport {
    let mut rep = ValidationReport::default();
    for (a, b, ab) in k.compositions() {
        if f.category.compose(f.r(a), f.r(b)) != Some(f.r(ab)) {
            rep.push(
                "r-homomorphism",
                vec![k.arrow_name(a).to_string(), k.arrow_name(b).to_string()],
            );
        }
    }
    rep
}
