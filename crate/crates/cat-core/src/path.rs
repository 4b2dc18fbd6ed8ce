use std::collections::HashMap;

use crate::category::{Category, CategoryBuilder};
use crate::error::CatError;

/// Left fold of composition along a path of arrow indices.
pub fn compose_path(c: &Category, path: &[usize]) -> Result<usize, CatError> {
    let (&first, rest) = path.split_first().ok_or(CatError::EmptyPath)?;
    let mut acc = first;
    for (i, &a) in rest.iter().enumerate() {
        if c.dst(acc) != c.src(a) {
            return Err(CatError::NonComposable(i + 1));
        }
        acc = c.compose(acc, a).ok_or(CatError::Undefined(i + 1))?;
    }
    Ok(acc)
}

/// Plain directed multigraph: named vertices and named edges.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Digraph {
    pub vertices: Vec<String>,
    pub edges: Vec<(String, usize, usize)>,
}

impl Digraph {
    /// Non-identity arrows of `c` as edges; vertex order is kept.
    pub fn underlying(c: &Category) -> Self {
        Digraph {
            vertices: c.vertex_names().to_vec(),
            edges: c
                .arrow_ids()
                .filter(|&a| !c.is_identity(a))
                .map(|a| (c.arrow_name(a).to_string(), c.src(a), c.dst(a)))
                .collect(),
        }
    }
}

/// Partial category of edge paths of length at most `max_len`.
///
/// Paths are named by their edge names joined with `.`; the empty path at
/// `x` is the identity `id_x`. Concatenation is defined iff the combined
/// length stays within the bound.
pub fn bounded_path_category(g: &Digraph, max_len: usize) -> Category {
    bounded_path_category_capped(g, max_len, usize::MAX).expect("uncapped enumeration always completes")
}

/// As [`bounded_path_category`], giving up with `None` once more than
/// `max_paths` paths would be produced.
pub fn bounded_path_category_capped(g: &Digraph, max_len: usize, max_paths: usize) -> Option<Category> {
    let mut b = CategoryBuilder::new();
    b.set_partial(true);
    for v in &g.vertices {
        b.vertex(v);
    }
    let mut out: Vec<Vec<usize>> = vec![Vec::new(); g.vertices.len()];
    for (i, e) in g.edges.iter().enumerate() {
        out[e.1].push(i);
    }
    // paths[k] = (edge sequence, arrow id) of length k
    let mut by_seq: HashMap<Vec<usize>, usize> = HashMap::new();
    let mut layers: Vec<Vec<Vec<usize>>> = vec![Vec::new()];
    let mut count = g.vertices.len();
    for len in 1..=max_len {
        let mut layer = Vec::new();
        if len == 1 {
            for i in 0..g.edges.len() {
                layer.push(vec![i]);
            }
        } else {
            for p in &layers[len - 1] {
                let end = g.edges[*p.last().unwrap()].2;
                for &e in &out[end] {
                    let mut q = p.clone();
                    q.push(e);
                    layer.push(q);
                }
            }
        }
        count += layer.len();
        if count > max_paths {
            return None;
        }
        for p in &layer {
            let name = p.iter().map(|&e| g.edges[e].0.as_str()).collect::<Vec<_>>().join(".");
            let id = b.arrow(&name, g.edges[p[0]].1, g.edges[*p.last().unwrap()].2);
            by_seq.insert(p.clone(), id);
        }
        layers.push(layer);
    }
    let starting: Vec<Vec<Vec<usize>>> = layers
        .iter()
        .map(|layer| {
            let mut s = vec![Vec::new(); g.vertices.len()];
            for (i, p) in layer.iter().enumerate() {
                if let Some(&e) = p.first() {
                    s[g.edges[e].1].push(i);
                }
            }
            s
        })
        .collect();
    for l1 in 1..=max_len {
        for l2 in 1..=(max_len - l1) {
            for p in &layers[l1] {
                let end = g.edges[*p.last().unwrap()].2;
                for &qi in &starting[l2][end] {
                    let q = &layers[l2][qi];
                    let mut pq = p.clone();
                    pq.extend_from_slice(q);
                    b.set_compose(by_seq[p], by_seq[q], by_seq[&pq]);
                }
            }
        }
    }
    Some(b.build_unchecked())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::validate_category;

    #[test]
    fn single_edge() {
        let g = Digraph {
            vertices: vec!["x".into(), "y".into()],
            edges: vec![("e".into(), 0, 1)],
        };
        let p = bounded_path_category(&g, 3);
        assert_eq!(p.num_arrows(), 3);
        assert!(validate_category(&p).is_valid());
    }

    #[test]
    fn two_cycle_counts_match_brute_force() {
        let g = Digraph {
            vertices: vec!["x".into(), "y".into()],
            edges: vec![("f".into(), 0, 1), ("g".into(), 1, 0)],
        };
        let p = bounded_path_category(&g, 2);
        // 2 identities + f, g + f.g, g.f
        assert_eq!(p.num_arrows(), 6);
        assert!(p.arrow_id("f.g").is_some() && p.arrow_id("g.f").is_some());
        assert!(p.compose(p.a("f"), p.a("g.f")).is_none());
        assert!(validate_category(&p).is_valid());
    }

    #[test]
    fn compose_path_errors() {
        let g = Digraph {
            vertices: vec!["x".into(), "y".into()],
            edges: vec![("f".into(), 0, 1), ("g".into(), 1, 0)],
        };
        let p = bounded_path_category(&g, 2);
        assert_eq!(compose_path(&p, &[p.a("f"), p.a("f")]), Err(CatError::NonComposable(1)));
        assert_eq!(
            compose_path(&p, &[p.a("f"), p.a("g"), p.a("f")]),
            Err(CatError::Undefined(2))
        );
        assert_eq!(compose_path(&p, &[]), Err(CatError::EmptyPath));
    }
}
