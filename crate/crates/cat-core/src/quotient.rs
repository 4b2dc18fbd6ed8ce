use std::collections::HashMap;

use crate::category::{Category, CategoryBuilder};
use crate::morphism::CatMorphism;
use crate::partition::Partition;

/// Arrow partition of a category with the vertex partition it induces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Congruence {
    pub arrows: Partition,
    pub vertices: Partition,
}

impl Congruence {
    /// Kernel of a morphism: arrows (vertices) identified iff equal images.
    pub fn kernel(f: &CatMorphism) -> Self {
        Congruence {
            arrows: Partition::from_labels(&f.arrow_map),
            vertices: Partition::from_labels(&f.vertex_map),
        }
    }

    /// True iff composable representatives of equal classes compose into
    /// equal classes (wherever the composites are defined).
    pub fn is_compatible(&self, c: &Category) -> bool {
        let mut seen: HashMap<(usize, usize), usize> = HashMap::new();
        for (a, b, ab) in c.compositions() {
            let key = (self.arrows.class_of(a), self.arrows.class_of(b));
            let k = self.arrows.class_of(ab);
            if *seen.entry(key).or_insert(k) != k {
                return false;
            }
        }
        true
    }
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.0[x] != x {
            self.0[x] = self.0[self.0[x]];
            x = self.0[x];
        }
        x
    }

    /// Keeps the smaller index as root; returns true if a merge happened.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.0[hi] = lo;
        true
    }
}

/// Smallest congruence containing the seed pairs whose quotient is a
/// (partial) category.
///
/// Worklist fixpoint: merging two arrows merges their endpoints, merging two
/// vertices merges their identities, equal classes of composable pairs
/// force equal classes of composites, and where both bracketings of a class
/// triple are defined their results are merged. The last rule only fires
/// once vertices have been merged.
pub fn congruence_closure(c: &Category, seeds: &[(usize, usize)]) -> Congruence {
    let mut ua = UnionFind::new(c.num_arrows());
    let mut uv = UnionFind::new(c.num_vertices());
    for &(a, b) in seeds {
        ua.union(a, b);
    }
    let comps = c.compositions();
    loop {
        let mut changed = false;
        for a in c.arrow_ids() {
            let r = ua.find(a);
            changed |= uv.union(c.src(a), c.src(r));
            changed |= uv.union(c.dst(a), c.dst(r));
        }
        for v in c.vertices() {
            let r = uv.find(v);
            changed |= ua.union(c.identity(v), c.identity(r));
        }
        let mut image: HashMap<(usize, usize), usize> = HashMap::new();
        for &(a, b, ab) in &comps {
            let key = (ua.find(a), ua.find(b));
            match image.get(&key) {
                Some(&prev) => changed |= ua.union(prev, ab),
                None => {
                    image.insert(key, ab);
                }
            }
        }
        // Merged vertices let classes compose through different source
        // pairs; both bracketings must then land in one class.
        let table: HashMap<(usize, usize), usize> = image
            .iter()
            .map(|(&(x, y), &z)| ((ua.find(x), ua.find(y)), ua.find(z)))
            .collect();
        let mut by_first: HashMap<usize, Vec<(usize, usize)>> = HashMap::new();
        for (&(x, y), &z) in &table {
            by_first.entry(x).or_default().push((y, z));
        }
        for (&(x, y), &xy) in &table {
            for &(w, yw) in by_first.get(&y).map_or(&[][..], |v| v.as_slice()) {
                if let (Some(&l), Some(&r)) = (table.get(&(xy, w)), table.get(&(x, yw))) {
                    changed |= ua.union(l, r);
                }
            }
        }
        if !changed {
            break;
        }
    }
    let arep: Vec<usize> = (0..c.num_arrows()).map(|a| ua.find(a)).collect();
    let vrep: Vec<usize> = (0..c.num_vertices()).map(|v| uv.find(v)).collect();
    Congruence {
        arrows: Partition::from_representatives(&arep),
        vertices: Partition::from_representatives(&vrep),
    }
}

/// Quotient category with its projection and the congruence used.
#[derive(Debug, Clone)]
pub struct Quotient {
    pub category: Category,
    pub projection: CatMorphism,
    pub congruence: Congruence,
}

/// Quotient by the congruence generated by `seeds`.
///
/// Classes are named by their lexicographically least member. The result is
/// flagged partial iff some composable pair of classes has no composite
/// (possible when the source is partial or vertices were merged).
pub fn quotient_by_congruence(c: &Category, seeds: &[(usize, usize)]) -> Quotient {
    let cong = congruence_closure(c, seeds);
    let least = |members: &[usize], name: &dyn Fn(usize) -> String| -> String {
        members.iter().map(|&m| name(m)).min().unwrap()
    };
    let mut b = CategoryBuilder::new();
    let vname = |v: usize| c.vertex_name(v).to_string();
    let aname = |a: usize| c.arrow_name(a).to_string();
    let mut vclass_vertex = Vec::new();
    for cls in cong.vertices.classes() {
        let id_class = cong.arrows.class(cong.arrows.class_of(c.identity(cls[0])));
        vclass_vertex.push(b.vertex_with_identity(&least(cls, &vname), &least(id_class, &aname)));
    }
    let mut aclass_arrow = vec![usize::MAX; cong.arrows.num_classes()];
    for v in c.vertices() {
        let k = cong.arrows.class_of(c.identity(v));
        aclass_arrow[k] = b.identity_of(vclass_vertex[cong.vertices.class_of(v)]);
    }
    for (k, cls) in cong.arrows.classes().iter().enumerate() {
        if aclass_arrow[k] != usize::MAX {
            continue;
        }
        let a = cls[0];
        aclass_arrow[k] = b.arrow(
            &least(cls, &aname),
            vclass_vertex[cong.vertices.class_of(c.src(a))],
            vclass_vertex[cong.vertices.class_of(c.dst(a))],
        );
    }
    for (x, y, z) in c.compositions() {
        let q = |a: usize| aclass_arrow[cong.arrows.class_of(a)];
        b.set_compose(q(x), q(y), q(z));
    }
    let mut cat = b.build_unchecked();
    let partial = cat.has_missing_composites();
    cat = cat.with_partial(partial);
    let projection = CatMorphism {
        vertex_map: c.vertices().map(|v| vclass_vertex[cong.vertices.class_of(v)]).collect(),
        arrow_map: c.arrow_ids().map(|a| aclass_arrow[cong.arrows.class_of(a)]).collect(),
    };
    Quotient {
        category: cat,
        projection,
        congruence: cong,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::morphism::check_morphism;
    use crate::path::{bounded_path_category, Digraph};
    use crate::report::validate_category;

    #[test]
    fn empty_seed_is_isomorphic_copy() {
        let g = Digraph {
            vertices: vec!["x".into(), "y".into()],
            edges: vec![("f".into(), 0, 1)],
        };
        let p = bounded_path_category(&g, 1).with_partial(false);
        let q = quotient_by_congruence(&p, &[]);
        assert_eq!(q.category.num_arrows(), p.num_arrows());
        let flags = check_morphism(&q.projection, &p, &q.category);
        assert!(flags.valid && flags.full && flags.faithful);
    }

    #[test]
    fn loop_collapses_to_identity() {
        let g = Digraph {
            vertices: vec!["x".into()],
            edges: vec![("l".into(), 0, 0)],
        };
        let p = bounded_path_category(&g, 3);
        let q = quotient_by_congruence(&p, &[(p.a("l"), p.identity(0))]);
        assert_eq!(q.category.num_vertices(), 1);
        assert_eq!(q.category.num_arrows(), 1);
        assert!(!q.category.is_partial());
        assert!(validate_category(&q.category).is_valid());
        assert_eq!(Congruence::kernel(&q.projection).arrows, q.congruence.arrows);
    }
}
