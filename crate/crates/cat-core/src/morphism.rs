use std::collections::HashSet;

use crate::category::Category;
use crate::report::ValidationReport;

/// Index-level functor data between two categories held elsewhere.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CatMorphism {
    pub vertex_map: Vec<usize>,
    pub arrow_map: Vec<usize>,
}

impl CatMorphism {
    pub fn identity(c: &Category) -> Self {
        Self {
            vertex_map: c.vertices().collect(),
            arrow_map: c.arrow_ids().collect(),
        }
    }

    /// `self` followed by `next`.
    pub fn then(&self, next: &CatMorphism) -> CatMorphism {
        CatMorphism {
            vertex_map: self.vertex_map.iter().map(|&v| next.vertex_map[v]).collect(),
            arrow_map: self.arrow_map.iter().map(|&a| next.arrow_map[a]).collect(),
        }
    }

    /// Inverse of a bijective morphism; `None` when not bijective.
    pub fn inverse(&self) -> Option<CatMorphism> {
        let invert = |m: &[usize]| -> Option<Vec<usize>> {
            let mut inv = vec![usize::MAX; m.len()];
            for (i, &j) in m.iter().enumerate() {
                if j >= m.len() || inv[j] != usize::MAX {
                    return None;
                }
                inv[j] = i;
            }
            Some(inv)
        };
        Some(CatMorphism {
            vertex_map: invert(&self.vertex_map)?,
            arrow_map: invert(&self.arrow_map)?,
        })
    }

    pub fn is_bijective(&self, target: &Category) -> bool {
        self.vertex_map.len() == target.num_vertices()
            && self.arrow_map.len() == target.num_arrows()
            && self.inverse().is_some()
    }

    /// Name-level rendering `src -> dst` of the arrow map.
    pub fn describe(&self, source: &Category, target: &Category) -> Vec<(String, String)> {
        self.arrow_map
            .iter()
            .enumerate()
            .map(|(a, &b)| (source.arrow_name(a).to_string(), target.arrow_name(b).to_string()))
            .collect()
    }
}

/// Result of [`check_morphism`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MorphismFlags {
    pub valid: bool,
    pub full: bool,
    pub faithful: bool,
    pub report: ValidationReport,
}

/// Checks that `f` is a functor `source -> target` and whether it is full
/// and faithful. For partial sources, composition is only required to be
/// preserved where it is defined in the source.
///
/// `full`: every target arrow is the image of some arrow. `faithful`: arrows
/// with a common domain have distinct images (so in particular the map is
/// injective on every hom-set). These are the notions under which covering
/// projections and orbit projections are full and faithful.
pub fn check_morphism(f: &CatMorphism, source: &Category, target: &Category) -> MorphismFlags {
    let mut r = ValidationReport::default();
    if f.vertex_map.len() != source.num_vertices() || f.arrow_map.len() != source.num_arrows() {
        r.push("shape", vec!["map sizes differ from source".into()]);
        return MorphismFlags {
            valid: false,
            full: false,
            faithful: false,
            report: r,
        };
    }
    let in_range =
        f.vertex_map.iter().all(|&v| v < target.num_vertices()) && f.arrow_map.iter().all(|&a| a < target.num_arrows());
    if !in_range {
        r.push("shape", vec!["map leaves target".into()]);
        return MorphismFlags {
            valid: false,
            full: false,
            faithful: false,
            report: r,
        };
    }
    let sname = |a: usize| source.arrow_name(a).to_string();
    for a in source.arrow_ids() {
        let b = f.arrow_map[a];
        if target.src(b) != f.vertex_map[source.src(a)] || target.dst(b) != f.vertex_map[source.dst(a)] {
            r.push("endpoint", vec![sname(a)]);
        }
    }
    for v in source.vertices() {
        if f.arrow_map[source.identity(v)] != target.identity(f.vertex_map[v]) {
            r.push("identity", vec![source.vertex_name(v).to_string()]);
        }
    }
    for (a, b, ab) in source.compositions() {
        if target.compose(f.arrow_map[a], f.arrow_map[b]) != Some(f.arrow_map[ab]) {
            r.push("composition", vec![sname(a), sname(b)]);
        }
    }
    let valid = r.is_valid();

    let mut hit = vec![false; target.num_arrows()];
    for &b in &f.arrow_map {
        hit[b] = true;
    }
    let full = hit.iter().all(|&h| h);
    let faithful = source.vertices().all(|x| {
        let images: HashSet<usize> = source.out_arrows(x).iter().map(|&a| f.arrow_map[a]).collect();
        images.len() == source.out_arrows(x).len()
    });
    MorphismFlags {
        valid,
        full,
        faithful,
        report: r,
    }
}
