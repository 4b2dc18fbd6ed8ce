//! Whether a partial subcategory generates its parent.
//!
//! Fully defining: the path category of `P` modulo `a * b == a . b` is
//! the parent. Paths are enumerated up to `max_len + 1` and rewritten by
//! the concatenations of `P`; every rewrite shortens a path, so once all
//! paths of length `max_len + 1` are rewritable the bounded picture is the
//! whole picture and the verdict is exact.
//!
//! Flat defining: additionally every loop of the path category is
//! identified with an identity. Parallel paths inside a strongly connected
//! piece then coincide, so when the condensation has at most one route
//! between any two pieces the quotient is the reachability preorder.
//! Otherwise the bounded enumeration runs with closed subpaths deletable,
//! which makes every path of length `nv` rewritable.

use std::collections::HashMap;

use cat_core::{find_isomorphism, Category, CategoryBuilder, Partition};

use crate::error::PartialError;
use crate::sub::PartialSubcategory;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Tri {
    True,
    False,
    Unknown,
}

impl Tri {
    pub fn from_bool(b: bool) -> Self {
        if b {
            Tri::True
        } else {
            Tri::False
        }
    }

    pub fn and(self, other: Tri) -> Tri {
        match (self, other) {
            (Tri::False, _) | (_, Tri::False) => Tri::False,
            (Tri::True, Tri::True) => Tri::True,
            _ => Tri::Unknown,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Tri::True => "true",
            Tri::False => "false",
            Tri::Unknown => "unknown",
        }
    }
}

impl std::fmt::Display for Tri {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Defining {
    pub fully: Tri,
    pub flat: Tri,
}

fn reachability(p: &PartialSubcategory, k: &Category) -> HashMap<usize, Vec<bool>> {
    let nv = k.num_vertices();
    let mut out = HashMap::new();
    for &s in &p.vertices {
        let mut seen = vec![false; nv];
        seen[s] = true;
        let mut stack = vec![s];
        while let Some(x) = stack.pop() {
            for &a in k.out_arrows(x) {
                if p.arrows.contains(&a) && !seen[k.dst(a)] {
                    seen[k.dst(a)] = true;
                    stack.push(k.dst(a));
                }
            }
        }
        out.insert(s, seen);
    }
    out
}

/// Decides both notions, with paths of length at most `max_len + 1` and
/// at most `max_paths` of them.
pub fn check_defining(
    p: &PartialSubcategory,
    k: &Category,
    max_len: usize,
    max_paths: u64,
) -> Result<Defining, PartialError> {
    let reach = reachability(p, k);
    let fully = bounded_quotient(p, k, &reach, max_len, max_paths, false)?;
    let flat = flat_defining(p, k, &reach, max_paths)?;
    Ok(Defining { fully, flat })
}

/// Path enumeration shared by both notions. With `drop_loops` every
/// closed subpath may also be deleted. All relations used hold in `k`, so
/// classes never merge beyond the fibres of the map to `k`.
/// The fully defining half of [`check_defining`] alone.
pub fn check_fully_defining(
    p: &PartialSubcategory,
    k: &Category,
    max_len: usize,
    max_paths: u64,
) -> Result<Tri, PartialError> {
    bounded_quotient(p, k, &reachability(p, k), max_len, max_paths, false)
}

fn bounded_quotient(
    p: &PartialSubcategory,
    k: &Category,
    reach: &HashMap<usize, Vec<bool>>,
    max_len: usize,
    max_paths: u64,
    drop_loops: bool,
) -> Result<Tri, PartialError> {
    if p.vertices.len() != k.num_vertices() {
        return Ok(Tri::False);
    }
    let arrows: Vec<usize> = p.non_identity_arrows(k).collect();
    let mut paths: Vec<Vec<usize>> = Vec::new();
    let mut image: Vec<usize> = Vec::new();
    for &v in &p.vertices {
        paths.push(Vec::new());
        image.push(k.identity(v));
    }
    let mut frontier: Vec<(Vec<usize>, usize)> = arrows.iter().map(|&a| (vec![a], a)).collect();
    let mut longest = Vec::new();
    for len in 1..=max_len + 1 {
        let mut next = Vec::new();
        for (path, img) in frontier {
            if len == max_len + 1 {
                longest.push(paths.len());
            } else {
                for &b in k.out_arrows(k.dst(*path.last().unwrap())) {
                    if !p.arrows.contains(&b) || k.is_identity(b) {
                        continue;
                    }
                    let Some(c) = k.compose(img, b) else {
                        // The free composite has no counterpart in `k`.
                        return Ok(Tri::False);
                    };
                    let mut q = path.clone();
                    q.push(b);
                    next.push((q, c));
                }
            }
            paths.push(path);
            image.push(img);
            if paths.len() as u64 > max_paths {
                return Err(PartialError::BudgetExhausted(max_paths));
            }
        }
        frontier = next;
    }
    let index: HashMap<&[usize], usize> = paths.iter().enumerate().map(|(i, q)| (q.as_slice(), i)).collect();
    let empty_of: HashMap<usize, usize> = p.vertices.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let mut parent: Vec<usize> = (0..paths.len()).collect();
    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while parent[r] != r {
            r = parent[r];
        }
        let mut y = x;
        while parent[y] != r {
            let n = parent[y];
            parent[y] = r;
            y = n;
        }
        r
    }
    let mut rewritable = vec![false; paths.len()];
    for (i, q) in paths.iter().enumerate() {
        if drop_loops {
            for j in 0..q.len() {
                for l in j..q.len() {
                    if k.src(q[j]) != k.dst(q[l]) {
                        continue;
                    }
                    rewritable[i] = true;
                    let r: Vec<usize> = q[..j].iter().chain(&q[l + 1..]).copied().collect();
                    let target = if r.is_empty() {
                        Some(empty_of[&k.src(q[0])])
                    } else {
                        index.get(r.as_slice()).copied()
                    };
                    if let Some(t) = target {
                        let (a, b) = (find(&mut parent, i), find(&mut parent, t));
                        parent[a] = b;
                    }
                }
            }
        }
        for j in 0..q.len().saturating_sub(1) {
            let Some(&c) = p.concat.get(&(q[j], q[j + 1])) else {
                continue;
            };
            rewritable[i] = true;
            let mut r: Vec<usize> = q[..j].to_vec();
            if !k.is_identity(c) {
                r.push(c);
            }
            r.extend_from_slice(&q[j + 2..]);
            let target = if r.is_empty() {
                Some(empty_of[&k.src(q[0])])
            } else {
                index.get(r.as_slice()).copied()
            };
            if let Some(t) = target {
                let (a, b) = (find(&mut parent, i), find(&mut parent, t));
                parent[a] = b;
            }
        }
    }
    let all_rewritable = longest.iter().all(|&i| rewritable[i]);
    let classes: Vec<usize> = (0..paths.len()).map(|i| find(&mut parent, i)).collect();
    let mut class_of_image: HashMap<usize, usize> = HashMap::new();
    let mut kernel_ok = true;
    for (i, &img) in image.iter().enumerate() {
        if let Some(&c) = class_of_image.get(&img) {
            kernel_ok &= c == classes[i];
        } else {
            class_of_image.insert(img, classes[i]);
        }
    }
    let surjective = class_of_image.len() == k.num_arrows();
    let unreachable = k.arrow_ids().any(|a| !reach[&k.src(a)][k.dst(a)]);
    Ok(if unreachable || (all_rewritable && !surjective) {
        Tri::False
    } else if all_rewritable && surjective && kernel_ok {
        Tri::True
    } else {
        Tri::Unknown
    })
}

fn flat_defining(
    p: &PartialSubcategory,
    k: &Category,
    reach: &HashMap<usize, Vec<bool>>,
    budget: u64,
) -> Result<Tri, PartialError> {
    if p.vertices.len() != k.num_vertices() {
        return Ok(Tri::False);
    }
    if !k.is_simple() {
        return Ok(Tri::Unknown);
    }
    let nv = k.num_vertices();
    let comp: Vec<usize> = (0..nv)
        .map(|x| (0..nv).find(|&y| reach[&x][y] && reach[&y][x]).unwrap())
        .collect();
    let pieces = Partition::from_labels(&comp);
    // Routes between pieces, saturated at 2; inter-piece arrows only.
    let np = pieces.num_classes();
    let mut edges = vec![vec![0u8; np]; np];
    for a in p.non_identity_arrows(k) {
        let (s, t) = (pieces.class_of(k.src(a)), pieces.class_of(k.dst(a)));
        if s != t {
            edges[s][t] = (edges[s][t] + 1).min(2);
        }
    }
    let piece_reach = |s: usize, t: usize| reach[&pieces.class(s)[0]][pieces.class(t)[0]];
    let mut order: Vec<usize> = (0..np).collect();
    order.sort_by_key(|&s| std::cmp::Reverse((0..np).filter(|&t| piece_reach(s, t)).count()));
    for &s in &order {
        let mut routes = vec![0u8; np];
        routes[s] = 1;
        for &u in &order {
            if routes[u] == 0 {
                continue;
            }
            for t in 0..np {
                if edges[u][t] > 0 && t != u {
                    routes[t] = (routes[t] + routes[u] * edges[u][t]).min(2);
                }
            }
        }
        if routes.iter().any(|&r| r > 1) {
            // Closed subpaths vanish, so paths with a repeated vertex are
            // never needed beyond length `nv`.
            return bounded_quotient(p, k, reach, nv.saturating_sub(1), budget, true);
        }
    }
    let total = !k.has_missing_composites();
    let canonical = total
        && k.vertices()
            .all(|x| k.vertices().all(|y| reach[&x][y] == !k.hom(x, y).is_empty()));
    if canonical {
        return Ok(Tri::True);
    }
    let mut b = CategoryBuilder::new();
    for v in k.vertices() {
        b.vertex(k.vertex_name(v));
    }
    let mut arrow = vec![vec![usize::MAX; nv]; nv];
    for x in 0..nv {
        arrow[x][x] = b.identity_of(x);
        for y in 0..nv {
            if x != y && reach[&x][y] {
                arrow[x][y] = b.arrow(&format!("{x}>{y}"), x, y);
            }
        }
    }
    for x in 0..nv {
        for y in 0..nv {
            for z in 0..nv {
                if reach[&x][y] && reach[&y][z] {
                    b.set_compose(arrow[x][y], arrow[y][z], arrow[x][z]);
                }
            }
        }
    }
    let q = b.build_unchecked();
    match find_isomorphism(&q, k, budget) {
        Ok(Some(_)) => Ok(Tri::True),
        Ok(None) => Ok(Tri::False),
        Err(_) => Err(PartialError::BudgetExhausted(budget)),
    }
}
