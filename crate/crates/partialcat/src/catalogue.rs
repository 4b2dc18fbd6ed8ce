use std::collections::{BTreeSet, HashMap};
use std::fmt;

use cat_core::Category;
use flat::FlatCategoryRepresentation;
use group_action::{is_semiregular, is_translative, AnnotationGroup, CategoryAction, GroupElem};
use serde_json::{json, Value};

use crate::defining::{check_fully_defining, Tri};
use crate::error::PartialError;
use crate::sub::PartialSubcategory;

/// Annotated category the catalogue is evaluated against.
#[derive(Debug, Clone, Copy)]
pub struct AnnotatedCategory<'a> {
    pub category: &'a Category,
    pub labels: &'a [GroupElem],
    pub group: &'a AnnotationGroup,
}

/// A partial subcategory of the base of a flat category representation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlatRepresentation {
    pub completion: FlatCategoryRepresentation,
    pub part: PartialSubcategory,
}

impl FlatRepresentation {
    pub fn whole(completion: FlatCategoryRepresentation) -> Self {
        let part = PartialSubcategory::whole(&completion.base);
        Self { completion, part }
    }

    pub fn annotated(&self) -> AnnotatedCategory<'_> {
        AnnotatedCategory {
            category: &self.completion.base,
            labels: &self.completion.annotation,
            group: &self.completion.g.group,
        }
    }

    pub fn to_json_value(&self) -> Value {
        let k = &self.completion.base;
        let names: Vec<&str> = self.part.non_identity_arrows(k).map(|a| k.arrow_name(a)).collect();
        json!({"completion": self.completion.to_json_value(), "arrows": names})
    }

    pub fn from_json_value(v: &Value) -> Result<Self, PartialError> {
        let completion = FlatCategoryRepresentation::from_json_value(
            v.get("completion")
                .ok_or_else(|| PartialError::Malformed("missing completion".into()))?,
        )?;
        let names = v
            .get("arrows")
            .and_then(Value::as_array)
            .ok_or_else(|| PartialError::Malformed("missing arrows".into()))?;
        let k = &completion.base;
        let mut arrows = Vec::new();
        for n in names {
            let s = n
                .as_str()
                .ok_or_else(|| PartialError::Malformed("arrow names are strings".into()))?;
            arrows.push(
                k.arrow_id(s)
                    .ok_or_else(|| PartialError::Malformed(format!("unknown arrow `{s}`")))?,
            );
        }
        let part = PartialSubcategory::spanning(k, arrows);
        Ok(Self { completion, part })
    }
}

/// The property catalogue; every entry is a tri-state because
/// completeness is decided within a search budget.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PropertyFlags {
    pub faithful: Tri,
    pub simple: Tri,
    pub ordered: Tri,
    pub s_symmetric: Tri,
    pub translatively_s_symmetric: Tri,
    pub antisymmetric: Tri,
    pub complete: Tri,
    pub antisym_s_complete: Tri,
}

impl PropertyFlags {
    pub fn rows(&self) -> [(&'static str, Tri); 8] {
        [
            ("faithful", self.faithful),
            ("simple", self.simple),
            ("ordered", self.ordered),
            ("s-symmetric", self.s_symmetric),
            ("translatively-s-symmetric", self.translatively_s_symmetric),
            ("antisymmetric", self.antisymmetric),
            ("complete", self.complete),
            ("antisymmetrically-s-complete", self.antisym_s_complete),
        ]
    }
}

impl fmt::Display for PropertyFlags {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (name, v)) in self.rows().iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{name:<30}{v}")?;
        }
        Ok(())
    }
}

/// Parallel arrows of `p` carry distinct labels.
pub fn is_faithful(a: &AnnotatedCategory, p: &PartialSubcategory) -> bool {
    let mut seen = HashMap::new();
    for &x in &p.arrows {
        let k = a.category;
        if seen.insert((k.src(x), k.dst(x), a.labels[x].clone()), x).is_some() {
            return false;
        }
    }
    true
}

/// At most one arrow between any two vertices (identities included).
pub fn is_simple(k: &Category, p: &PartialSubcategory) -> bool {
    let mut seen = BTreeSet::new();
    p.arrows.iter().all(|&x| seen.insert((k.src(x), k.dst(x))))
}

/// No non-identity `a, b` in `p` with `a: x -> y`, `b: y -> x` and
/// `A(a) A(b) = 1`; the first offending pair otherwise.
pub fn antisymmetry_witness(a: &AnnotatedCategory, p: &PartialSubcategory) -> Option<(usize, usize)> {
    let k = a.category;
    for x in p.non_identity_arrows(k) {
        for &y in k.out_arrows(k.dst(x)) {
            if k.dst(y) == k.src(x)
                && !k.is_identity(y)
                && p.arrows.contains(&y)
                && a.group.is_neutral(&a.group.mul(&a.labels[x], &a.labels[y]))
            {
                return Some((x, y));
            }
        }
    }
    None
}

/// Two distinct vertices related both ways by `p`, if any.
pub fn relation_antisymmetry_witness(k: &Category, p: &PartialSubcategory) -> Option<(usize, usize)> {
    let rel: BTreeSet<(usize, usize)> = p.arrows.iter().map(|&x| (k.src(x), k.dst(x))).collect();
    rel.iter().find(|&&(x, y)| x != y && rel.contains(&(y, x))).copied()
}

/// The relation "some arrow x -> y in `p`" is reflexive, antisymmetric and
/// transitive.
pub fn is_ordered(k: &Category, p: &PartialSubcategory) -> bool {
    let rel: BTreeSet<(usize, usize)> = p.arrows.iter().map(|&x| (k.src(x), k.dst(x))).collect();
    let reflexive = p.vertices.iter().all(|&v| rel.contains(&(v, v)));
    let transitive = rel.iter().all(|&(x, y)| {
        rel.iter()
            .filter(|&&(u, _)| u == y)
            .all(|&(_, z)| rel.contains(&(x, z)))
    });
    reflexive && relation_antisymmetry_witness(k, p).is_none() && transitive
}

/// `s` maps `p` into itself and is transitive on its vertices.
pub fn is_s_symmetric(s: &CategoryAction, p: &PartialSubcategory) -> bool {
    let g = s.group();
    let closed = g.elements().all(|e| {
        p.vertices.iter().all(|&v| p.vertices.contains(&s.act_vertex(v, e)))
            && p.arrows.iter().all(|&a| p.arrows.contains(&s.act_arrow(a, e)))
    });
    let Some(&v0) = p.vertices.iter().next() else {
        return closed;
    };
    let orbit: BTreeSet<usize> = g.elements().map(|e| s.act_vertex(v0, e)).collect();
    closed && orbit == p.vertices
}

/// `s` restricted to `p` as an action on the partial subcategory.
pub fn restrict_action(s: &CategoryAction, p: &PartialSubcategory, k: &Category) -> Option<CategoryAction> {
    let (c, emb) = p.to_category(k);
    let vinv: HashMap<usize, usize> = emb.vertex_map.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let ainv: HashMap<usize, usize> = emb.arrow_map.iter().enumerate().map(|(i, &a)| (a, i)).collect();
    let g = s.group();
    let mut vt = Vec::new();
    let mut at = Vec::new();
    for e in g.elements() {
        vt.push(
            emb.vertex_map
                .iter()
                .map(|&v| vinv.get(&s.act_vertex(v, e)).copied())
                .collect::<Option<Vec<_>>>()?,
        );
        at.push(
            emb.arrow_map
                .iter()
                .map(|&a| ainv.get(&s.act_arrow(a, e)).copied())
                .collect::<Option<Vec<_>>>()?,
        );
    }
    CategoryAction::from_tables(c, g.clone(), vt, at).ok()
}

fn translatively_symmetric(s: &CategoryAction, p: &PartialSubcategory, k: &Category) -> bool {
    if !is_s_symmetric(s, p) {
        return false;
    }
    let Some(r) = restrict_action(s, p, k) else {
        return false;
    };
    is_semiregular(&r).holds() && is_translative(&r).is_ok_and(|t| t.holds())
}

/// `p` fully defines `k`, searching path lengths up to the vertex count
/// plus one within `budget` paths.
pub fn completeness(k: &Category, p: &PartialSubcategory, budget: u64) -> Tri {
    for len in 1..=k.num_vertices() + 1 {
        match check_fully_defining(p, k, len, budget) {
            Ok(t) if t != Tri::Unknown => return t,
            Ok(_) => {}
            Err(_) => return Tri::Unknown,
        }
    }
    Tri::Unknown
}

/// Units the catalogue grows partial subcategories by: arrow orbits of
/// `s`, or single arrows.
pub fn extension_units(k: &Category, s: Option<&CategoryAction>) -> Vec<Vec<usize>> {
    match s {
        Some(s) => {
            let (_, ao) = s.orbits();
            ao.classes()
                .iter()
                .filter(|cls| !k.is_identity(cls[0]))
                .cloned()
                .collect()
        }
        None => k.arrow_ids().filter(|&a| !k.is_identity(a)).map(|a| vec![a]).collect(),
    }
}

/// Evaluates every flag of `p` against the annotated category `a`.
pub fn property_catalogue(
    a: &AnnotatedCategory,
    p: &PartialSubcategory,
    s: Option<&CategoryAction>,
    budget: u64,
) -> PropertyFlags {
    let k = a.category;
    let antisym = antisymmetry_witness(a, p).is_none();
    let (sym, trans) = match s {
        Some(s) => (
            Tri::from_bool(is_s_symmetric(s, p)),
            Tri::from_bool(translatively_symmetric(s, p, k)),
        ),
        None => (Tri::Unknown, Tri::Unknown),
    };
    let complete = completeness(k, p, budget);
    let base = Tri::from_bool(antisym).and(sym).and(complete);
    let antisym_s_complete = if base == Tri::True {
        let extendable = extension_units(k, s).into_iter().any(|unit| {
            if unit.iter().all(|x| p.arrows.contains(x)) {
                return false;
            }
            let bigger =
                PartialSubcategory::induced(k, p.vertices.iter().copied(), p.arrows.iter().copied().chain(unit));
            antisymmetry_witness(a, &bigger).is_none() && s.is_none_or(|s| is_s_symmetric(s, &bigger))
        });
        Tri::from_bool(!extendable)
    } else {
        base
    };
    PropertyFlags {
        faithful: Tri::from_bool(is_faithful(a, p)),
        simple: Tri::from_bool(is_simple(k, p)),
        ordered: Tri::from_bool(is_ordered(k, p)),
        s_symmetric: sym,
        translatively_s_symmetric: trans,
        antisymmetric: Tri::from_bool(antisym),
        complete,
        antisym_s_complete,
    }
}

/// Flags of a flat representation against its own completion.
pub fn flat_flags(f: &FlatRepresentation, s: Option<&CategoryAction>, budget: u64) -> PropertyFlags {
    property_catalogue(&f.annotated(), &f.part, s, budget)
}

/// Properties the maximal search keeps.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Flag {
    Faithful,
    Simple,
    Antisymmetric,
    Ordered,
    SSymmetric,
}

impl std::str::FromStr for Flag {
    type Err = PartialError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "faithful" => Flag::Faithful,
            "simple" => Flag::Simple,
            "antisymmetric" => Flag::Antisymmetric,
            "ordered" => Flag::Ordered,
            "s-symmetric" | "symmetric" => Flag::SSymmetric,
            other => return Err(PartialError::Malformed(format!("unknown flag `{other}`"))),
        })
    }
}

fn holds(a: &AnnotatedCategory, s: Option<&CategoryAction>, p: &PartialSubcategory, flag: Flag) -> bool {
    match flag {
        Flag::Faithful => is_faithful(a, p),
        Flag::Simple => is_simple(a.category, p),
        Flag::Antisymmetric => antisymmetry_witness(a, p).is_none(),
        Flag::Ordered => is_ordered(a.category, p),
        Flag::SSymmetric => s.is_none_or(|s| is_s_symmetric(s, p)),
    }
}

/// Result of [`search_maximal`]. `exhaustive` is false when the budget
/// ran out before every combination of units was visited.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MaximalSearch {
    pub maximal: Vec<(PartialSubcategory, PropertyFlags)>,
    pub exhaustive: bool,
}

/// Spanning partial subcategories keeping `required`, grown by the units
/// of [`extension_units`], that no single further unit extends. A greedy
/// ascent always contributes one result; an exhaustive subset search adds
/// the others while `budget` nodes last.
pub fn search_maximal(
    a: &AnnotatedCategory,
    s: Option<&CategoryAction>,
    required: &[Flag],
    budget: u64,
) -> Result<MaximalSearch, PartialError> {
    let k = a.category;
    let units = extension_units(k, s);
    let build =
        |chosen: &[usize]| PartialSubcategory::spanning(k, chosen.iter().flat_map(|&u| units[u].iter().copied()));
    let ok = |p: &PartialSubcategory| required.iter().all(|&f| holds(a, s, p, f));
    // Ordered is not inherited by sub-relations, so it only filters results.
    let prunable: Vec<Flag> = required.iter().copied().filter(|&f| f != Flag::Ordered).collect();
    let ok_prefix = |p: &PartialSubcategory| prunable.iter().all(|&f| holds(a, s, p, f));
    let is_maximal = |chosen: &[usize]| {
        (0..units.len()).filter(|u| !chosen.contains(u)).all(|u| {
            let mut c = chosen.to_vec();
            c.push(u);
            !ok(&build(&c))
        })
    };

    let mut found: Vec<BTreeSet<usize>> = Vec::new();
    let mut greedy = Vec::new();
    for u in 0..units.len() {
        greedy.push(u);
        if !ok(&build(&greedy)) {
            greedy.pop();
        }
    }
    if ok(&build(&greedy)) && is_maximal(&greedy) {
        found.push(greedy.iter().copied().collect());
    }

    let mut steps = 0u64;
    let mut exhaustive = true;
    let mut stack: Vec<(usize, Vec<usize>)> = vec![(0, Vec::new())];
    while let Some((i, chosen)) = stack.pop() {
        steps += 1;
        if steps > budget {
            exhaustive = false;
            break;
        }
        if i == units.len() {
            if ok(&build(&chosen)) && is_maximal(&chosen) {
                let set: BTreeSet<usize> = chosen.iter().copied().collect();
                if !found.contains(&set) {
                    found.push(set);
                }
            }
            continue;
        }
        stack.push((i + 1, chosen.clone()));
        let mut with = chosen;
        with.push(i);
        if ok_prefix(&build(&with)) {
            stack.push((i + 1, with));
        }
    }
    let maximal = found
        .into_iter()
        .map(|set| {
            let chosen: Vec<usize> = set.into_iter().collect();
            let p = build(&chosen);
            let flags = property_catalogue(a, &p, s, budget);
            (p, flags)
        })
        .collect();
    Ok(MaximalSearch { maximal, exhaustive })
}
