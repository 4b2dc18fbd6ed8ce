//! Backtracking isomorphism search for finite (partial) categories.
//!
//! Vertices are matched first, pruned by per-vertex signatures (loop count,
//! degrees, hom-set size profile) and by pairwise hom-set sizes. For a full
//! vertex bijection the arrows are matched per hom-set; every assignment is
//! propagated through the composition table, so most composite arrows are
//! forced rather than guessed. For partial categories, definedness of a
//! composite must also agree on both sides.
//!
//! The step counter makes "budget exhausted" distinguishable from "no
//! isomorphism": `Ok(None)` is only returned after the whole space was
//! explored.

use std::collections::HashMap;

use crate::category::Category;
use crate::error::CatError;
use crate::morphism::CatMorphism;

type VertexSig = (usize, usize, usize, Vec<(usize, usize)>);
type ArrowSig = (bool, bool, usize, usize, usize);

struct Profile {
    hom: Vec<Vec<usize>>,
    vsig: Vec<VertexSig>,
    asig: Vec<ArrowSig>,
}

impl Profile {
    fn new(c: &Category) -> Self {
        let hom = c.hom_counts();
        let n = c.num_vertices();
        let vsig = (0..n)
            .map(|x| {
                let mut prof: Vec<(usize, usize)> =
                    (0..n).filter(|&y| y != x).map(|y| (hom[x][y], hom[y][x])).collect();
                prof.sort_unstable();
                (hom[x][x], c.out_arrows(x).len(), c.in_arrows(x).len(), prof)
            })
            .collect();
        let mut fact = vec![0usize; c.num_arrows()];
        let mut right = vec![0usize; c.num_arrows()];
        let mut left = vec![0usize; c.num_arrows()];
        for (a, b, ab) in c.compositions() {
            fact[ab] += 1;
            right[a] += 1;
            left[b] += 1;
        }
        let asig = c
            .arrow_ids()
            .map(|a| (c.is_identity(a), c.is_loop(a), fact[a], right[a], left[a]))
            .collect();
        Profile { hom, vsig, asig }
    }
}

fn same_multiset<T: Ord + Clone>(a: &[T], b: &[T]) -> bool {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    x.sort();
    y.sort();
    x == y
}

/// Configurable isomorphism search between two categories.
pub struct IsoSearch<'a> {
    c: &'a Category,
    d: &'a Category,
    budget: u64,
    steps: u64,
    pc: Profile,
    pd: Profile,
    vmap: Vec<usize>,
    vused: Vec<bool>,
    amap: Vec<usize>,
    aused: Vec<bool>,
    trail: Vec<usize>,
    arrow_order: Vec<usize>,
}

const NONE: usize = usize::MAX;

impl<'a> IsoSearch<'a> {
    pub fn new(c: &'a Category, d: &'a Category, budget: u64) -> Self {
        let pc = Profile::new(c);
        let pd = Profile::new(d);
        let mut arrow_order: Vec<usize> = c.arrow_ids().filter(|&a| !c.is_identity(a)).collect();
        arrow_order.sort_by_key(|&a| (pc.asig[a].2, a));
        IsoSearch {
            c,
            d,
            budget,
            steps: 0,
            vmap: vec![NONE; c.num_vertices()],
            vused: vec![false; d.num_vertices()],
            amap: vec![NONE; c.num_arrows()],
            aused: vec![false; d.num_arrows()],
            trail: Vec::new(),
            arrow_order,
            pc,
            pd,
        }
    }

    pub fn steps_used(&self) -> u64 {
        self.steps
    }

    fn tick(&mut self) -> Result<(), CatError> {
        self.steps += 1;
        if self.steps > self.budget {
            Err(CatError::BudgetExhausted(self.budget))
        } else {
            Ok(())
        }
    }

    fn quick_reject(&self) -> bool {
        let (c, d) = (self.c, self.d);
        c.num_vertices() != d.num_vertices()
            || c.num_arrows() != d.num_arrows()
            || c.num_compositions() != d.num_compositions()
            || !same_multiset(&self.pc.vsig, &self.pd.vsig)
            || !same_multiset(&self.pc.asig, &self.pd.asig)
    }

    fn vertex_order(&self) -> Vec<usize> {
        let n = self.c.num_vertices();
        let mut freq: HashMap<&VertexSig, usize> = HashMap::new();
        for s in &self.pc.vsig {
            *freq.entry(s).or_default() += 1;
        }
        let rarity: Vec<usize> = (0..n).map(|x| freq[&self.pc.vsig[x]]).collect();
        let mut placed = vec![false; n];
        let mut order: Vec<usize> = Vec::with_capacity(n);
        for _ in 0..n {
            let next = (0..n)
                .filter(|&x| !placed[x])
                .max_by_key(|&x| {
                    let links = order
                        .iter()
                        .filter(|&&y| self.pc.hom[x][y] + self.pc.hom[y][x] > 0)
                        .count();
                    (links, std::cmp::Reverse(rarity[x]), std::cmp::Reverse(x))
                })
                .unwrap();
            placed[next] = true;
            order.push(next);
        }
        order
    }

    /// Runs the search. `Ok(None)` means no isomorphism exists.
    pub fn run(&mut self) -> Result<Option<CatMorphism>, CatError> {
        if self.quick_reject() {
            return Ok(None);
        }
        let order = self.vertex_order();
        if self.match_vertices(&order, 0)? {
            Ok(Some(CatMorphism {
                vertex_map: self.vmap.clone(),
                arrow_map: self.amap.clone(),
            }))
        } else {
            Ok(None)
        }
    }

    fn match_vertices(&mut self, order: &[usize], depth: usize) -> Result<bool, CatError> {
        if depth == order.len() {
            return self.match_arrows_start();
        }
        let x = order[depth];
        for y in 0..self.d.num_vertices() {
            if self.vused[y] || self.pc.vsig[x] != self.pd.vsig[y] {
                continue;
            }
            let consistent = order[..depth].iter().all(|&x2| {
                let y2 = self.vmap[x2];
                self.pc.hom[x][x2] == self.pd.hom[y][y2] && self.pc.hom[x2][x] == self.pd.hom[y2][y]
            });
            if !consistent {
                continue;
            }
            self.tick()?;
            self.vmap[x] = y;
            self.vused[y] = true;
            if self.match_vertices(order, depth + 1)? {
                return Ok(true);
            }
            self.vmap[x] = NONE;
            self.vused[y] = false;
        }
        Ok(false)
    }

    fn match_arrows_start(&mut self) -> Result<bool, CatError> {
        let mark = self.trail.len();
        let mut ok = true;
        for x in self.c.vertices() {
            let (a, b) = (self.c.identity(x), self.d.identity(self.vmap[x]));
            if !self.assign(a, b)? {
                ok = false;
                break;
            }
        }
        if ok && self.match_arrows(0)? {
            return Ok(true);
        }
        self.undo(mark);
        Ok(false)
    }

    fn match_arrows(&mut self, from: usize) -> Result<bool, CatError> {
        let Some(pos) = (from..self.arrow_order.len()).find(|&i| self.amap[self.arrow_order[i]] == NONE) else {
            return Ok(true);
        };
        let a = self.arrow_order[pos];
        let (sx, sy) = (self.vmap[self.c.src(a)], self.vmap[self.c.dst(a)]);
        let candidates: Vec<usize> = self
            .d
            .hom(sx, sy)
            .into_iter()
            .filter(|&b| !self.aused[b] && self.pd.asig[b] == self.pc.asig[a])
            .collect();
        for b in candidates {
            let mark = self.trail.len();
            if self.assign(a, b)? && self.match_arrows(pos + 1)? {
                return Ok(true);
            }
            self.undo(mark);
        }
        Ok(false)
    }

    fn undo(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let a = self.trail.pop().unwrap();
            self.aused[self.amap[a]] = false;
            self.amap[a] = NONE;
        }
    }

    /// Assigns `a -> b` and everything it forces. On `false` the caller
    /// must undo to its mark.
    fn assign(&mut self, a: usize, b: usize) -> Result<bool, CatError> {
        let (c, d) = (self.c, self.d);
        let mut stack = vec![(a, b)];
        while let Some((a, b)) = stack.pop() {
            self.tick()?;
            if self.amap[a] != NONE {
                if self.amap[a] != b {
                    return Ok(false);
                }
                continue;
            }
            if self.aused[b]
                || self.pc.asig[a] != self.pd.asig[b]
                || d.src(b) != self.vmap[c.src(a)]
                || d.dst(b) != self.vmap[c.dst(a)]
            {
                return Ok(false);
            }
            self.amap[a] = b;
            self.aused[b] = true;
            self.trail.push(a);
            for &x in c.out_arrows(c.dst(a)) {
                let fx = self.amap[x];
                if fx == NONE {
                    continue;
                }
                match (c.compose(a, x), d.compose(b, fx)) {
                    (Some(p), Some(q)) => stack.push((p, q)),
                    (None, None) => {}
                    _ => return Ok(false),
                }
            }
            for &x in c.in_arrows(c.src(a)) {
                let fx = self.amap[x];
                if fx == NONE {
                    continue;
                }
                match (c.compose(x, a), d.compose(fx, b)) {
                    (Some(p), Some(q)) => stack.push((p, q)),
                    (None, None) => {}
                    _ => return Ok(false),
                }
            }
        }
        Ok(true)
    }
}

/// Searches for an isomorphism `c -> d` within `budget` steps.
pub fn find_isomorphism(c: &Category, d: &Category, budget: u64) -> Result<Option<CatMorphism>, CatError> {
    IsoSearch::new(c, d, budget).run()
}
