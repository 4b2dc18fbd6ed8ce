use std::collections::HashMap;

use crate::error::CatError;

/// A named arrow between two vertex indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub name: String,
    pub src: usize,
    pub dst: usize,
}

/// Finite (possibly partial) category with string identifiers.
///
/// Vertices and arrows are addressed by dense indices; names are kept for
/// serialization and witnesses. Instances are immutable once built.
#[derive(Debug, Clone)]
pub struct Category {
    vertex_names: Vec<String>,
    arrows: Vec<Arrow>,
    identity: Vec<usize>,
    compose: HashMap<(usize, usize), usize>,
    partial: bool,
    vertex_index: HashMap<String, usize>,
    arrow_index: HashMap<String, usize>,
    out_arrows: Vec<Vec<usize>>,
    in_arrows: Vec<Vec<usize>>,
}

impl PartialEq for Category {
    fn eq(&self, other: &Self) -> bool {
        self.vertex_names == other.vertex_names
            && self.arrows == other.arrows
            && self.identity == other.identity
            && self.compose == other.compose
            && self.partial == other.partial
    }
}

impl Eq for Category {}

impl Category {
    pub fn num_vertices(&self) -> usize {
        self.vertex_names.len()
    }

    pub fn num_arrows(&self) -> usize {
        self.arrows.len()
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.vertex_names.len()
    }

    pub fn arrow_ids(&self) -> std::ops::Range<usize> {
        0..self.arrows.len()
    }

    pub fn vertex_name(&self, v: usize) -> &str {
        &self.vertex_names[v]
    }

    pub fn vertex_names(&self) -> &[String] {
        &self.vertex_names
    }

    pub fn arrow(&self, a: usize) -> &Arrow {
        &self.arrows[a]
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn arrow_name(&self, a: usize) -> &str {
        &self.arrows[a].name
    }

    pub fn src(&self, a: usize) -> usize {
        self.arrows[a].src
    }

    pub fn dst(&self, a: usize) -> usize {
        self.arrows[a].dst
    }

    pub fn identity(&self, v: usize) -> usize {
        self.identity[v]
    }

    pub fn is_identity(&self, a: usize) -> bool {
        let x = self.arrows[a].src;
        self.arrows[a].dst == x && self.identity[x] == a
    }

    pub fn is_loop(&self, a: usize) -> bool {
        self.arrows[a].src == self.arrows[a].dst
    }

    pub fn is_partial(&self) -> bool {
        self.partial
    }

    /// Composite `a * b` (first `a`, then `b`) if listed.
    pub fn compose(&self, a: usize, b: usize) -> Option<usize> {
        self.compose.get(&(a, b)).copied()
    }

    /// All listed compositions as `(a, b, a*b)`, sorted by index.
    pub fn compositions(&self) -> Vec<(usize, usize, usize)> {
        let mut v: Vec<_> = self.compose.iter().map(|(&(a, b), &c)| (a, b, c)).collect();
        v.sort_unstable();
        v
    }

    pub fn num_compositions(&self) -> usize {
        self.compose.len()
    }

    pub fn vertex_id(&self, name: &str) -> Option<usize> {
        self.vertex_index.get(name).copied()
    }

    pub fn arrow_id(&self, name: &str) -> Option<usize> {
        self.arrow_index.get(name).copied()
    }

    /// Like [`Category::arrow_id`] but panics with the name; for fixtures and tests.
    pub fn a(&self, name: &str) -> usize {
        self.arrow_id(name).unwrap_or_else(|| panic!("no arrow named `{name}`"))
    }

    /// Like [`Category::vertex_id`] but panics with the name.
    pub fn v(&self, name: &str) -> usize {
        self.vertex_id(name)
            .unwrap_or_else(|| panic!("no vertex named `{name}`"))
    }

    pub fn out_arrows(&self, v: usize) -> &[usize] {
        &self.out_arrows[v]
    }

    pub fn in_arrows(&self, v: usize) -> &[usize] {
        &self.in_arrows[v]
    }

    /// Arrows from `x` to `y`.
    pub fn hom(&self, x: usize, y: usize) -> Vec<usize> {
        self.out_arrows[x]
            .iter()
            .copied()
            .filter(|&a| self.arrows[a].dst == y)
            .collect()
    }

    /// Loops at `v`, identity included.
    pub fn loops_at(&self, v: usize) -> Vec<usize> {
        self.hom(v, v)
    }

    /// Number of arrows for every ordered vertex pair.
    pub fn hom_counts(&self) -> Vec<Vec<usize>> {
        let n = self.num_vertices();
        let mut m = vec![vec![0usize; n]; n];
        for a in &self.arrows {
            m[a.src][a.dst] += 1;
        }
        m
    }

    /// True iff every ordered vertex pair carries at most one arrow.
    pub fn is_simple(&self) -> bool {
        self.hom_counts().iter().flatten().all(|&k| k <= 1)
    }

    /// Number of pairs `(x, y)` with `x * y == a`.
    pub fn factorization_count(&self, a: usize) -> usize {
        self.compose.values().filter(|&&c| c == a).count()
    }

    /// Full subcategory on the given vertices. Returns the subcategory and,
    /// for each of its arrows, the index of the arrow in `self`.
    pub fn full_subcategory(&self, vertices: &[usize]) -> (Category, Vec<usize>) {
        let mut keep = vec![false; self.num_vertices()];
        for &v in vertices {
            keep[v] = true;
        }
        let mut b = CategoryBuilder::new();
        b.set_partial(self.partial);
        let mut vmap = vec![usize::MAX; self.num_vertices()];
        for v in self.vertices().filter(|&v| keep[v]) {
            vmap[v] = b.vertex_with_identity(&self.vertex_names[v], &self.arrows[self.identity[v]].name);
        }
        let mut amap = vec![usize::MAX; self.num_arrows()];
        let mut back = Vec::new();
        for (i, a) in self.arrows.iter().enumerate() {
            if !(keep[a.src] && keep[a.dst]) {
                continue;
            }
            if self.identity[a.src] == i {
                amap[i] = b.identity_of(vmap[a.src]);
            } else {
                amap[i] = b.arrow(&a.name, vmap[a.src], vmap[a.dst]);
            }
        }
        let mut order: Vec<(usize, usize)> = amap
            .iter()
            .enumerate()
            .filter(|(_, &t)| t != usize::MAX)
            .map(|(s, &t)| (t, s))
            .collect();
        order.sort_unstable();
        back.extend(order.into_iter().map(|(_, s)| s));
        for (&(x, y), &z) in &self.compose {
            if amap[x] != usize::MAX && amap[y] != usize::MAX && amap[z] != usize::MAX {
                b.set_compose(amap[x], amap[y], amap[z]);
            }
        }
        (b.build_unchecked(), back)
    }

    /// Copy with the `partial` flag replaced.
    pub fn with_partial(&self, partial: bool) -> Category {
        let mut c = self.clone();
        c.partial = partial;
        c
    }

    /// True iff some composable pair has no listed composite.
    pub fn has_missing_composites(&self) -> bool {
        self.arrows.iter().enumerate().any(|(a, arr)| {
            self.out_arrows[arr.dst]
                .iter()
                .any(|&b| !self.compose.contains_key(&(a, b)))
        })
    }
}

/// Incremental constructor for [`Category`].
///
/// Adding a vertex adds its identity loop; `build` fills in the identity
/// laws for every pair that was not listed explicitly.
#[derive(Debug, Default, Clone)]
pub struct CategoryBuilder {
    vertex_names: Vec<String>,
    arrows: Vec<Arrow>,
    identity: Vec<usize>,
    compose: HashMap<(usize, usize), usize>,
    partial: bool,
    duplicate_compose: Option<(usize, usize)>,
}

impl CategoryBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn set_partial(&mut self, partial: bool) -> &mut Self {
        self.partial = partial;
        self
    }

    /// Adds a vertex with identity named `id_<name>`.
    pub fn vertex(&mut self, name: &str) -> usize {
        self.vertex_with_identity(name, &format!("id_{name}"))
    }

    pub fn vertex_with_identity(&mut self, name: &str, identity: &str) -> usize {
        let v = self.vertex_names.len();
        self.vertex_names.push(name.to_string());
        let a = self.arrows.len();
        self.arrows.push(Arrow {
            name: identity.to_string(),
            src: v,
            dst: v,
        });
        self.identity.push(a);
        v
    }

    pub fn identity_of(&self, v: usize) -> usize {
        self.identity[v]
    }

    pub fn arrow(&mut self, name: &str, src: usize, dst: usize) -> usize {
        let a = self.arrows.len();
        self.arrows.push(Arrow {
            name: name.to_string(),
            src,
            dst,
        });
        a
    }

    pub fn set_compose(&mut self, a: usize, b: usize, c: usize) -> &mut Self {
        if self.compose.insert((a, b), c).is_some() && self.duplicate_compose.is_none() {
            self.duplicate_compose = Some((a, b));
        }
        self
    }

    pub fn num_vertices(&self) -> usize {
        self.vertex_names.len()
    }

    pub fn num_arrows(&self) -> usize {
        self.arrows.len()
    }

    pub fn src(&self, a: usize) -> usize {
        self.arrows[a].src
    }

    pub fn dst(&self, a: usize) -> usize {
        self.arrows[a].dst
    }

    fn fill_identity_laws(&mut self) {
        for (a, arr) in self.arrows.iter().enumerate() {
            self.compose.entry((self.identity[arr.src], a)).or_insert(a);
            self.compose.entry((a, self.identity[arr.dst])).or_insert(a);
        }
    }

    /// Checks identifier uniqueness and index ranges, fills identity laws.
    pub fn build(mut self) -> Result<Category, CatError> {
        let nv = self.vertex_names.len();
        let na = self.arrows.len();
        let mut seen = std::collections::HashSet::new();
        for n in &self.vertex_names {
            if !seen.insert(n.clone()) {
                return Err(CatError::Duplicate(n.clone()));
            }
        }
        let mut seen = std::collections::HashSet::new();
        for a in &self.arrows {
            if !seen.insert(a.name.clone()) {
                return Err(CatError::Duplicate(a.name.clone()));
            }
            if a.src >= nv {
                return Err(CatError::UnknownVertex(format!("#{}", a.src)));
            }
            if a.dst >= nv {
                return Err(CatError::UnknownVertex(format!("#{}", a.dst)));
            }
        }
        for (&(a, b), &c) in &self.compose {
            for x in [a, b, c] {
                if x >= na {
                    return Err(CatError::UnknownArrow(format!("#{x}")));
                }
            }
        }
        if let Some((a, b)) = self.duplicate_compose {
            return Err(CatError::DuplicateComposition(
                self.arrows[a].name.clone(),
                self.arrows[b].name.clone(),
            ));
        }
        self.fill_identity_laws();
        Ok(self.finish())
    }

    /// Builds without the uniqueness checks; for internal constructors whose
    /// output is unique by construction.
    pub fn build_unchecked(mut self) -> Category {
        self.fill_identity_laws();
        self.finish()
    }

    fn finish(self) -> Category {
        let nv = self.vertex_names.len();
        let mut out_arrows = vec![Vec::new(); nv];
        let mut in_arrows = vec![Vec::new(); nv];
        for (i, a) in self.arrows.iter().enumerate() {
            out_arrows[a.src].push(i);
            in_arrows[a.dst].push(i);
        }
        let vertex_index = self
            .vertex_names
            .iter()
            .enumerate()
            .map(|(i, n)| (n.clone(), i))
            .collect();
        let arrow_index = self
            .arrows
            .iter()
            .enumerate()
            .map(|(i, a)| (a.name.clone(), i))
            .collect();
        Category {
            vertex_names: self.vertex_names,
            arrows: self.arrows,
            identity: self.identity,
            compose: self.compose,
            partial: self.partial,
            vertex_index,
            arrow_index,
            out_arrows,
            in_arrows,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two_chain() -> Category {
        let mut b = CategoryBuilder::new();
        let x = b.vertex("x");
        let y = b.vertex("y");
        let z = b.vertex("z");
        let f = b.arrow("f", x, y);
        let g = b.arrow("g", y, z);
        let fg = b.arrow("fg", x, z);
        b.set_compose(f, g, fg);
        b.build().unwrap()
    }

    #[test]
    fn identity_laws_are_filled() {
        let c = two_chain();
        let f = c.a("f");
        assert_eq!(c.compose(c.identity(c.v("x")), f), Some(f));
        assert_eq!(c.compose(f, c.identity(c.v("y"))), Some(f));
        assert!(c.is_simple());
        assert!(!c.has_missing_composites());
    }

    #[test]
    fn duplicate_names_rejected() {
        let mut b = CategoryBuilder::new();
        b.vertex("x");
        b.vertex("x");
        assert_eq!(b.build(), Err(CatError::Duplicate("x".into())));
    }

    #[test]
    fn full_subcategory_keeps_names() {
        let c = two_chain();
        let (s, back) = c.full_subcategory(&[c.v("x"), c.v("y")]);
        assert_eq!(s.num_vertices(), 2);
        assert_eq!(s.num_arrows(), 3);
        for (i, &o) in back.iter().enumerate() {
            assert_eq!(s.arrow_name(i), c.arrow_name(o));
        }
    }
}
