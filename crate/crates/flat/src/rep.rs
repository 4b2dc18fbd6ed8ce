//! Flat category representations: a base category with an annotation, the
//! cocycle `n`, the exchange table `C` and a right-groupal loop category.
//! Loops are identified with their labels in the loop group.

use std::collections::{BTreeMap, BTreeSet};

use cat_core::{Category, CategoryDoc, ValidationReport};
use group_action::{AnnotationGroup, GroupElem};
use orbitfold::Representation;
use serde_json::{json, Value};

use crate::error::FlatError;
use crate::exchange::{derive_c_orbit, ExchangeTable};
use crate::flatcat::{flat_orbit_category, FlatOrbit};
use crate::groupal::{Cone, RightGroupalCategory};

pub type CocycleTable = BTreeMap<(usize, usize), GroupElem>;
pub type LabelExchange = BTreeMap<(usize, GroupElem), GroupElem>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlatCategoryRepresentation {
    pub base: Category,
    pub annotation: Vec<GroupElem>,
    pub n: CocycleTable,
    pub c: LabelExchange,
    pub g: RightGroupalCategory,
}

impl FlatCategoryRepresentation {
    pub fn group(&self) -> &AnnotationGroup {
        &self.g.group
    }

    pub fn one(&self) -> GroupElem {
        self.g.group.neutral()
    }

    pub fn n_of(&self, a: usize, b: usize) -> Option<&GroupElem> {
        self.n.get(&(a, b))
    }

    pub fn c_of(&self, a: usize, v: &GroupElem) -> Option<&GroupElem> {
        self.c.get(&(a, v.clone()))
    }

    /// A pair is consistent when its cocycle is trivial.
    pub fn is_consistent_pair(&self, a: usize, b: usize) -> bool {
        self.n_of(a, b).is_some_and(|v| self.g.group.is_neutral(v))
    }

    /// Loops quantified over by the checks: the whole cone when finite,
    /// otherwise every label the tables mention.
    pub fn loop_support(&self) -> Vec<GroupElem> {
        if let Some(l) = self.g.loops() {
            return l;
        }
        let mut s: BTreeSet<GroupElem> = BTreeSet::new();
        s.insert(self.one());
        for ((_, v), w) in &self.c {
            s.insert(v.clone());
            s.insert(w.clone());
        }
        s.extend(self.n.values().cloned());
        s.into_iter().collect()
    }

    /// Annotation of the extension arrow `(a, v)`: `v A(a)`.
    pub fn extension_annotation(&self, a: usize, v: &GroupElem) -> GroupElem {
        self.g.group.mul(v, &self.annotation[a])
    }

    /// `(a, x) * (b, y) = (a . b, y C(b, x) n(a, b))`, with every step
    /// defined.
    pub fn extension_composite(&self, a: usize, x: &GroupElem, b: usize, y: &GroupElem) -> Option<(usize, GroupElem)> {
        let ab = self.base.compose(a, b)?;
        let u = self.g.compose_loops(self.n_of(a, b)?, self.c_of(b, x)?)?;
        Some((ab, self.g.compose_loops(&u, y)?))
    }

    fn render(&self, v: &GroupElem) -> String {
        self.g.group.render(v)
    }

    fn an(&self, a: usize) -> String {
        self.base.arrow_name(a).to_string()
    }

    /// Cocycle and exchange laws. Where one side of an equation needs a
    /// table entry that is absent the equation is skipped; where every
    /// entry exists both sides must agree, including definedness.
    ///
    /// Law tags: `cone-values`, `n-domain`, `n-unit`, `c-unit`,
    /// `extension-left-unit`, `n-cocycle`, `c-multiplicative`, `c-twist`.
    pub fn check_extension_axioms(&self) -> ValidationReport {
        let mut r = ValidationReport::default();
        let k = &self.base;
        let one = self.one();
        let support = self.loop_support();
        for (&(a, b), v) in &self.n {
            if !self.g.in_cone(v) {
                r.push("cone-values", vec![self.an(a), self.an(b)]);
            }
            if k.compose(a, b).is_none() {
                r.push("n-domain", vec![self.an(a), self.an(b)]);
            }
        }
        for ((a, x), y) in &self.c {
            if !self.g.in_cone(x) || !self.g.in_cone(y) {
                r.push("cone-values", vec![self.an(*a), self.render(x)]);
            }
        }
        for (a, b, _) in k.compositions() {
            if self.n_of(a, b).is_none() {
                r.push("n-domain", vec![self.an(a), self.an(b)]);
            }
        }
        for a in k.arrow_ids() {
            let (x, y) = (k.src(a), k.dst(a));
            for (p, q) in [(k.identity(x), a), (a, k.identity(y))] {
                if self.n_of(p, q) != Some(&one) {
                    r.push("n-unit", vec![self.an(p), self.an(q)]);
                }
            }
            if self.c_of(a, &one) != Some(&one) {
                r.push("c-unit", vec![self.an(a)]);
            }
            for v in &support {
                if let Some(cv) = self.c_of(a, v) {
                    if self.extension_composite(k.identity(x), v, a, &one) != Some((a, cv.clone())) {
                        r.push("extension-left-unit", vec![self.an(a), self.render(v)]);
                    }
                }
            }
        }
        for (a, b, ab) in k.compositions() {
            let nab = &self.n[&(a, b)];
            for &c in k.out_arrows(k.dst(b)) {
                let (Some(bc), Some(abc)) = (k.compose(b, c), k.compose(ab, c)) else {
                    continue;
                };
                if k.compose(a, bc) != Some(abc) {
                    continue;
                }
                let (Some(n1), Some(n2), Some(n3), Some(cc)) =
                    (self.n_of(a, bc), self.n_of(b, c), self.n_of(ab, c), self.c_of(c, nab))
                else {
                    continue;
                };
                if self.g.compose_loops(n1, n2) != self.g.compose_loops(n3, cc) {
                    r.push("n-cocycle", vec![self.an(a), self.an(b), self.an(c)]);
                }
            }
            for x in &support {
                let (Some(cabx), Some(cax)) = (self.c_of(ab, x), self.c_of(a, x)) else {
                    continue;
                };
                let Some(cbcax) = self.c_of(b, cax) else { continue };
                if self.g.compose_loops(cabx, nab) != self.g.compose_loops(nab, cbcax) {
                    r.push("c-twist", vec![self.an(a), self.an(b), self.render(x)]);
                }
            }
        }
        for a in k.arrow_ids() {
            for x in &support {
                let Some(cx) = self.c_of(a, x) else { continue };
                for y in &support {
                    let Some(cy) = self.c_of(a, y) else { continue };
                    let Some(xy) = self.g.compose_loops(x, y) else { continue };
                    let Some(cxy) = self.c_of(a, &xy) else { continue };
                    if self.g.compose_loops(cx, cy).as_ref() != Some(cxy) {
                        r.push("c-multiplicative", vec![self.an(a), self.render(x), self.render(y)]);
                    }
                }
            }
        }
        r
    }

    /// Compatibility of the annotation with `n` and `C`.
    ///
    /// Law tags: `annotation-shape`, `annotation-identity`,
    /// `annotation-split` (`A'(a, v) = A'(id, v) A'(a, 1)`),
    /// `n-annotation` (`n(a, b) = A(b) A(a) A(a . b)^-1`), `c-annotation`
    /// (`A(a) v = C(a, v) A(a)`).
    pub fn check_annotation_axioms(&self) -> ValidationReport {
        let mut r = ValidationReport::default();
        let k = &self.base;
        let g = &self.g.group;
        let one = self.one();
        if self.annotation.len() != k.num_arrows() || self.annotation.iter().any(|e| !g.contains(e)) {
            r.push("annotation-shape", vec![]);
            return r;
        }
        for v in k.vertices() {
            if !g.is_neutral(&self.annotation[k.identity(v)]) {
                r.push("annotation-identity", vec![k.vertex_name(v).to_string()]);
            }
        }
        let support = self.loop_support();
        for a in k.arrow_ids() {
            let id = k.identity(k.dst(a));
            for v in &support {
                let lhs = self.extension_annotation(a, v);
                let rhs = g.mul(&self.extension_annotation(id, v), &self.extension_annotation(a, &one));
                if lhs != rhs {
                    r.push("annotation-split", vec![self.an(a), self.render(v)]);
                }
            }
        }
        for ((a, b), v) in &self.n {
            let Some(ab) = k.compose(*a, *b) else { continue };
            let expect = g.div(&g.mul(&self.annotation[*b], &self.annotation[*a]), &self.annotation[ab]);
            if *v != expect {
                r.push("n-annotation", vec![self.an(*a), self.an(*b)]);
            }
        }
        for ((a, v), w) in &self.c {
            if g.mul(&self.annotation[*a], v) != g.mul(w, &self.annotation[*a]) {
                r.push("c-annotation", vec![self.an(*a), self.render(v)]);
            }
        }
        r
    }

    /// All laws.
    pub fn check(&self) -> ValidationReport {
        let mut r = self.check_annotation_axioms();
        if r.mentions("annotation-shape") {
            return r;
        }
        r.extend(self.check_extension_axioms());
        r
    }

    pub fn to_json_value(&self) -> Value {
        let g = &self.g.group;
        let k = &self.base;
        let ann: serde_json::Map<String, Value> = k
            .arrow_ids()
            .map(|a| (self.an(a), g.elem_to_json(&self.annotation[a])))
            .collect();
        let n: Vec<Value> = self
            .n
            .iter()
            .map(|((a, b), v)| json!([self.an(*a), self.an(*b), g.elem_to_json(v)]))
            .collect();
        let c: Vec<Value> = self
            .c
            .iter()
            .map(|((a, v), w)| json!([self.an(*a), g.elem_to_json(v), g.elem_to_json(w)]))
            .collect();
        let cone = match &self.g.cone {
            Cone::Orthant => json!("orthant"),
            Cone::Finite(s) => Value::Array(s.iter().map(|e| g.elem_to_json(e)).collect()),
        };
        json!({
            "base": serde_json::to_value(k.to_doc()).expect("category documents serialize"),
            "A": ann,
            "n": n,
            "C": c,
            "G": {"group": g.to_json(), "cone": cone, "neutral": g.elem_to_json(&self.g.neutral)},
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_json_value()).expect("values serialize")
    }

    pub fn from_json_value(v: &Value) -> Result<Self, FlatError> {
        let bad = |m: &str| FlatError::Malformed(m.to_string());
        let doc: CategoryDoc = serde_json::from_value(v.get("base").cloned().ok_or_else(|| bad("missing base"))?)
            .map_err(|e| FlatError::Malformed(e.to_string()))?;
        let base = Category::from_doc(&doc)?;
        let gv = v.get("G").ok_or_else(|| bad("missing G"))?;
        let group = AnnotationGroup::from_json(gv.get("group").ok_or_else(|| bad("missing G.group"))?)?;
        let elem = |x: &Value| group.elem_from_json(x).map_err(FlatError::from);
        let cone = match gv.get("cone") {
            Some(Value::String(s)) if s == "orthant" => Cone::Orthant,
            Some(Value::Array(xs)) => Cone::Finite(xs.iter().map(elem).collect::<Result<_, _>>()?),
            _ => return Err(bad("G.cone must be \"orthant\" or a list")),
        };
        let mut g = RightGroupalCategory::new(group.clone(), cone)?;
        if let Some(nv) = gv.get("neutral") {
            g.neutral = elem(nv)?;
        }
        let arrow = |x: &Value| -> Result<usize, FlatError> {
            let s = x.as_str().ok_or_else(|| bad("arrow names are strings"))?;
            base.arrow_id(s)
                .ok_or_else(|| FlatError::Malformed(format!("unknown arrow `{s}`")))
        };
        let amap = v.get("A").and_then(Value::as_object).ok_or_else(|| bad("missing A"))?;
        let mut annotation = vec![group.neutral(); base.num_arrows()];
        for (name, e) in amap {
            annotation[arrow(&json!(name))?] = elem(e)?;
        }
        let triples = |key: &str| -> Result<Vec<Vec<Value>>, FlatError> {
            let arr = v
                .get(key)
                .and_then(Value::as_array)
                .ok_or_else(|| FlatError::Malformed(format!("missing {key}")))?;
            arr.iter()
                .map(|t| match t.as_array() {
                    Some(t) if t.len() == 3 => Ok(t.clone()),
                    _ => Err(FlatError::Malformed(format!("{key} entries are triples"))),
                })
                .collect()
        };
        let mut n = CocycleTable::new();
        for t in triples("n")? {
            n.insert((arrow(&t[0])?, arrow(&t[1])?), elem(&t[2])?);
        }
        let mut c = LabelExchange::new();
        for t in triples("C")? {
            c.insert((arrow(&t[0])?, elem(&t[1])?), elem(&t[2])?);
        }
        Ok(Self {
            base,
            annotation,
            n,
            c,
            g,
        })
    }

    pub fn from_json(text: &str) -> Result<Self, FlatError> {
        let v: Value = serde_json::from_str(text).map_err(|e| FlatError::Malformed(e.to_string()))?;
        Self::from_json_value(&v)
    }
}

/// A flat representation together with the category it was read off.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlatBundle {
    pub rep: FlatCategoryRepresentation,
    /// The uniquely representable category behind the flat one.
    pub orbit: Representation,
    pub flat: FlatOrbit,
    /// Per vertex of `orbit`, its loops by label.
    pub loops_by_label: Vec<BTreeMap<GroupElem, usize>>,
}

impl FlatBundle {
    /// Loop of the orbit category at `v` with label `l`.
    pub fn loop_at(&self, v: usize, l: &GroupElem) -> Option<usize> {
        self.loops_by_label[v].get(l).copied()
    }
}

/// Flat representation read off a representation whose category is
/// uniquely representable and whose loops carry distinct labels in the
/// cone of `g`. `exchange` defaults to [`derive_c_orbit`].
pub fn flat_rep_from_representation(
    orbit: &Representation,
    g: RightGroupalCategory,
    exchange: Option<&ExchangeTable>,
) -> Result<FlatBundle, FlatError> {
    let k = &orbit.category;
    if *orbit.group() != g.group {
        return Err(FlatError::Malformed(
            "annotation group differs from the loop group".into(),
        ));
    }
    let flat = flat_orbit_category(k)?;
    let mut loops_by_label = Vec::new();
    for v in k.vertices() {
        let mut m = BTreeMap::new();
        for l in k.loops_at(v) {
            let lab = orbit.label(l).clone();
            if !g.in_cone(&lab) {
                return Err(FlatError::ConeMismatch(format!(
                    "loop {} outside the cone",
                    k.arrow_name(l)
                )));
            }
            if m.insert(lab, l).is_some() {
                return Err(FlatError::LoopLabels(k.vertex_name(v).to_string()));
            }
        }
        loops_by_label.push(m);
    }
    let derived;
    let ex = match exchange {
        Some(t) => t,
        None => {
            derived = derive_c_orbit(k)?;
            &derived
        }
    };
    let annotation: Vec<GroupElem> = flat.to_orbit.iter().map(|&a| orbit.label(a).clone()).collect();
    let n = flat
        .n_hat(k)
        .into_iter()
        .map(|(p, l)| (p, orbit.label(l).clone()))
        .collect();
    let mut c = LabelExchange::new();
    for (f, &a) in flat.to_orbit.iter().enumerate() {
        for x in k.loops_at(k.src(a)) {
            if let Some(&y) = ex.get(&(a, x)) {
                c.insert((f, orbit.label(x).clone()), orbit.label(y).clone());
            }
        }
    }
    let rep = FlatCategoryRepresentation {
        base: flat.category.clone(),
        annotation,
        n,
        c,
        g,
    };
    Ok(FlatBundle {
        rep,
        orbit: orbit.clone(),
        flat,
        loops_by_label,
    })
}

/// Flat representation of a right-normal translative action: the natural
/// representation on its orbit category, the vertex category at
/// `vertex` and the exchange table of the action.
pub fn flat_rep_from_action(
    act: &group_action::CategoryAction,
    t: &orbitfold::Transversal,
    vertex: usize,
) -> Result<FlatBundle, FlatError> {
    let (orbit, _) = orbitfold::build_representation(act, t)?;
    let g = crate::groupal::vertex_category(act, vertex)?;
    let (_, ex) = crate::exchange::derive_c(act)?;
    flat_rep_from_representation(&orbit, g, Some(&ex))
}
