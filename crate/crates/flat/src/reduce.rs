//! Irreducible arrows and the maps `r`, `n` splitting every arrow into an
//! irreducible part followed by a loop.

use cat_core::{Category, ValidationReport};

use crate::error::FlatError;

/// Irreducibility data of a category.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Irreducibles {
    pub irreducible: Vec<bool>,
    /// For every arrow, all pairs `(b, l)` with `b` irreducible, `l` a loop
    /// at its codomain and `b * l` equal to the arrow.
    pub decompositions: Vec<Vec<(usize, usize)>>,
}

impl Irreducibles {
    pub fn arrows(&self) -> Vec<usize> {
        (0..self.irreducible.len()).filter(|&a| self.irreducible[a]).collect()
    }

    /// First arrow with no decomposition.
    pub fn unrepresentable(&self) -> Option<usize> {
        self.decompositions.iter().position(|d| d.is_empty())
    }

    /// First arrow with two or more decompositions.
    pub fn ambiguous(&self) -> Option<usize> {
        self.decompositions.iter().position(|d| d.len() > 1)
    }

    pub fn uniquely_representable(&self) -> bool {
        self.decompositions.iter().all(|d| d.len() == 1)
    }
}

/// An arrow `a: x -> y` is reducible when `a = b * l` for some `b` in
/// `Mor(x, y)` and a non-identity loop `l` at `y`.
pub fn irreducible_arrows(k: &Category) -> Irreducibles {
    let reducible_by = |a: usize| -> bool {
        let (x, y) = (k.src(a), k.dst(a));
        let hom = k.hom(x, y);
        k.loops_at(y)
            .into_iter()
            .filter(|&l| !k.is_identity(l))
            .any(|l| hom.iter().any(|&b| k.compose(b, l) == Some(a)))
    };
    let irreducible: Vec<bool> = k.arrow_ids().map(|a| !reducible_by(a)).collect();
    let decompositions = k
        .arrow_ids()
        .map(|a| {
            let (x, y) = (k.src(a), k.dst(a));
            let mut out = Vec::new();
            for b in k.hom(x, y) {
                if !irreducible[b] {
                    continue;
                }
                for l in k.loops_at(y) {
                    if k.compose(b, l) == Some(a) {
                        out.push((b, l));
                    }
                }
            }
            out
        })
        .collect();
    Irreducibles {
        irreducible,
        decompositions,
    }
}

/// `r(a)` is the irreducible part of `a`, `n(a)` the loop after it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitMaps {
    pub r: Vec<usize>,
    pub n: Vec<usize>,
    pub irreducibles: Irreducibles,
}

/// Splitting maps of a uniquely representable category.
pub fn r_n_maps(k: &Category) -> Result<SplitMaps, FlatError> {
    let irr = irreducible_arrows(k);
    if let Some(a) = irr.unrepresentable() {
        return Err(FlatError::NotRepresentable(k.arrow_name(a).to_string()));
    }
    if let Some(a) = irr.ambiguous() {
        return Err(FlatError::NotUniquelyRepresentable {
            arrow: k.arrow_name(a).to_string(),
            decompositions: irr.decompositions[a]
                .iter()
                .map(|&(b, l)| (k.arrow_name(b).to_string(), k.arrow_name(l).to_string()))
                .collect(),
        });
    }
    Ok(SplitMaps {
        r: irr.decompositions.iter().map(|d| d[0].0).collect(),
        n: irr.decompositions.iter().map(|d| d[0].1).collect(),
        irreducibles: irr,
    })
}

/// Laws of the splitting maps.
///
/// Law tags: `split` (`a = r(a) * n(a)`), `split-identity`
/// (`r(id) = n(id) = id`), `split-right-unit`, `split-left-unit`,
/// `split-of-irreducible` (`n(r(a)) = id`), `split-loop-invariance`
/// (`r(a * l) = r(a)` for loops `l`), `split-irreducible` (`r(a)` is
/// irreducible).
pub fn check_split_laws(k: &Category, s: &SplitMaps) -> ValidationReport {
    let mut rep = ValidationReport::default();
    let name = |a: usize| k.arrow_name(a).to_string();
    for a in k.arrow_ids() {
        let (x, y) = (k.src(a), k.dst(a));
        if k.compose(s.r[a], s.n[a]) != Some(a) {
            rep.push("split", vec![name(a)]);
        }
        if !s.irreducibles.irreducible[s.r[a]] {
            rep.push("split-irreducible", vec![name(a)]);
        }
        if k.is_identity(a) && (s.r[a] != a || s.n[a] != a) {
            rep.push("split-identity", vec![name(a)]);
        }
        match k.compose(a, k.identity(y)) {
            Some(b) if s.r[b] == s.r[a] && s.n[b] == s.n[a] => {}
            _ => rep.push("split-right-unit", vec![name(a)]),
        }
        match k.compose(k.identity(x), a) {
            Some(b) if s.r[b] == s.r[a] && s.n[b] == s.n[a] => {}
            _ => rep.push("split-left-unit", vec![name(a)]),
        }
        if s.n[s.r[a]] != k.identity(y) {
            rep.push("split-of-irreducible", vec![name(a)]);
        }
        for l in k.loops_at(y) {
            if let Some(al) = k.compose(a, l) {
                if s.r[al] != s.r[a] {
                    rep.push("split-loop-invariance", vec![name(a), name(l)]);
                }
            }
        }
    }
    rep
}
