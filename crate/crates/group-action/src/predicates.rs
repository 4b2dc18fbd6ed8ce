use std::collections::{BTreeMap, HashMap};

use cat_core::{CatError, Partition, ValidationReport, Verdict, DEFAULT_BUDGET};

use crate::action::CategoryAction;
use crate::error::ActionError;

/// Checks that every element acts as a category automorphism (including
/// agreement on definedness for partial categories) and the action laws
/// `x^1 = x`, `(x^g)^h = x^(gh)`.
///
/// Law tags: `bijective`, `endpoint`, `identity`, `composition`,
/// `action-neutral`, `action-product`.
pub fn check_action(act: &CategoryAction) -> ValidationReport {
    let c = act.category();
    let grp = act.group();
    let mut r = ValidationReport::default();
    let aname = |a: usize| c.arrow_name(a).to_string();
    for g in grp.elements() {
        let gname = grp.name(g).to_string();
        let vt = &act.vertex_table()[g];
        let at = &act.arrow_table()[g];
        let mut seen = vec![false; c.num_vertices()];
        let mut seen_a = vec![false; c.num_arrows()];
        if !vt.iter().all(|&v| !std::mem::replace(&mut seen[v], true))
            || !at.iter().all(|&a| !std::mem::replace(&mut seen_a[a], true))
        {
            r.push("bijective", vec![gname.clone()]);
            continue;
        }
        for a in c.arrow_ids() {
            if c.src(at[a]) != vt[c.src(a)] || c.dst(at[a]) != vt[c.dst(a)] {
                r.push("endpoint", vec![gname.clone(), aname(a)]);
            }
        }
        for v in c.vertices() {
            if at[c.identity(v)] != c.identity(vt[v]) {
                r.push("identity", vec![gname.clone(), c.vertex_name(v).to_string()]);
            }
        }
        for a in c.arrow_ids() {
            for &b in c.out_arrows(c.dst(a)) {
                let image = c.compose(a, b).map(|ab| at[ab]);
                if c.compose(at[a], at[b]) != image {
                    r.push("composition", vec![gname.clone(), aname(a), aname(b)]);
                }
            }
        }
    }
    let e = grp.neutral();
    if act.vertex_table()[e].iter().enumerate().any(|(i, &v)| i != v)
        || act.arrow_table()[e].iter().enumerate().any(|(i, &a)| i != a)
    {
        r.push("action-neutral", vec![grp.name(e).to_string()]);
    }
    for g in grp.elements() {
        for h in grp.elements() {
            let gh = grp.mul(g, h);
            let v_ok = c
                .vertices()
                .all(|v| act.act_vertex(act.act_vertex(v, g), h) == act.act_vertex(v, gh));
            let a_ok = c
                .arrow_ids()
                .all(|a| act.act_arrow(act.act_arrow(a, g), h) == act.act_arrow(a, gh));
            if !(v_ok && a_ok) {
                r.push("action-product", vec![grp.name(g).to_string(), grp.name(h).to_string()]);
            }
        }
    }
    r
}

/// Vertex and arrow orbits.
pub fn orbits(act: &CategoryAction) -> (Partition, Partition) {
    act.orbits()
}

/// A non-neutral element fixing a vertex or an arrow.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixWitness {
    pub element: String,
    pub fixed: String,
}

pub fn is_semiregular(act: &CategoryAction) -> Verdict<FixWitness> {
    let c = act.category();
    let grp = act.group();
    for g in grp.elements().filter(|&g| g != grp.neutral()) {
        if let Some(v) = c.vertices().find(|&v| act.act_vertex(v, g) == v) {
            return Verdict::Fails(FixWitness {
                element: grp.name(g).to_string(),
                fixed: c.vertex_name(v).to_string(),
            });
        }
        if let Some(a) = c.arrow_ids().find(|&a| act.act_arrow(a, g) == a) {
            return Verdict::Fails(FixWitness {
                element: grp.name(g).to_string(),
                fixed: c.arrow_name(a).to_string(),
            });
        }
    }
    Verdict::Holds
}

/// Two composable pairs with equal orbits whose composites have different
/// orbits (or where only one composite is defined).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FoldWitness {
    pub first: (String, String),
    pub second: (String, String),
    pub first_composite: Option<String>,
    pub second_composite: Option<String>,
}

impl std::fmt::Display for FoldWitness {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let show = |c: &Option<String>| c.clone().unwrap_or_else(|| "undefined".into());
        write!(
            f,
            "({}, {}) -> {} vs ({}, {}) -> {}",
            self.first.0,
            self.first.1,
            show(&self.first_composite),
            self.second.0,
            self.second.1,
            show(&self.second_composite)
        )
    }
}

pub fn is_foldable(act: &CategoryAction) -> Verdict<FoldWitness> {
    let c = act.category();
    let (_, ao) = act.orbits();
    let mut seen: HashMap<(usize, usize), (usize, usize, Option<usize>)> = HashMap::new();
    for a in c.arrow_ids() {
        for &b in c.out_arrows(c.dst(a)) {
            let key = (ao.class_of(a), ao.class_of(b));
            let ab = c.compose(a, b);
            let class = ab.map(|x| ao.class_of(x));
            match seen.get(&key) {
                None => {
                    seen.insert(key, (a, b, ab));
                }
                Some(&(p, q, pq)) => {
                    if pq.map(|x| ao.class_of(x)) != class {
                        let name = |x: Option<usize>| x.map(|i| c.arrow_name(i).to_string());
                        return Verdict::Fails(FoldWitness {
                            first: (c.arrow_name(p).into(), c.arrow_name(q).into()),
                            second: (c.arrow_name(a).into(), c.arrow_name(b).into()),
                            first_composite: name(pq),
                            second_composite: name(ab),
                        });
                    }
                }
            }
        }
    }
    Verdict::Holds
}

/// Isomorphism between the full subcategories on two vertex orbits that
/// commutes with the action, as parent-index pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitIso {
    pub from_orbit: usize,
    pub to_orbit: usize,
    pub vertex_map: Vec<(usize, usize)>,
    pub arrow_map: Vec<(usize, usize)>,
}

/// Outcome of the translativity test: witnesses from the first vertex orbit
/// to every other orbit, or the first orbit pair without one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Translativity {
    pub witnesses: Vec<OrbitIso>,
    pub failure: Option<(String, String)>,
}

impl Translativity {
    pub fn holds(&self) -> bool {
        self.failure.is_none()
    }
}

/// Arrows of the full subcategory on the given vertex set, in index order.
pub fn orbit_subcategory_arrows(act: &CategoryAction, vertices: &[usize]) -> Vec<usize> {
    let c = act.category();
    let mut inside = vec![false; c.num_vertices()];
    for &v in vertices {
        inside[v] = true;
    }
    c.arrow_ids()
        .filter(|&a| inside[c.src(a)] && inside[c.dst(a)])
        .collect()
}

struct OrbitMatcher<'a> {
    act: &'a CategoryAction,
    reps: Vec<usize>,
    arrow_class: &'a Partition,
    pairs: Vec<(usize, usize, Option<usize>)>,
    amap: HashMap<usize, usize>,
    used: Vec<bool>,
    vmap: HashMap<usize, usize>,
    steps: u64,
    budget: u64,
}

impl OrbitMatcher<'_> {
    fn assign_orbit(&mut self, r: usize, s: usize) {
        for g in self.act.group().elements() {
            self.amap.insert(self.act.act_arrow(r, g), self.act.act_arrow(s, g));
        }
        self.used[self.arrow_class.class_of(s)] = true;
    }

    fn unassign_orbit(&mut self, r: usize, s: usize) {
        for g in self.act.group().elements() {
            self.amap.remove(&self.act.act_arrow(r, g));
        }
        self.used[self.arrow_class.class_of(s)] = false;
    }

    fn consistent(&self) -> bool {
        let c = self.act.category();
        self.pairs.iter().all(|&(p, q, pq)| {
            let (Some(&fp), Some(&fq)) = (self.amap.get(&p), self.amap.get(&q)) else {
                return true;
            };
            match pq {
                None => c.compose(fp, fq).is_none(),
                Some(x) => match self.amap.get(&x) {
                    Some(&fx) => c.compose(fp, fq) == Some(fx),
                    None => c.compose(fp, fq).is_some(),
                },
            }
        })
    }

    fn search(&mut self, i: usize) -> Result<bool, ActionError> {
        self.steps += 1;
        if self.steps > self.budget {
            return Err(CatError::BudgetExhausted(self.budget).into());
        }
        if i == self.reps.len() {
            return Ok(true);
        }
        let c = self.act.category();
        let r = self.reps[i];
        let candidates = c.hom(self.vmap[&c.src(r)], self.vmap[&c.dst(r)]);
        for s in candidates {
            if self.used[self.arrow_class.class_of(s)] || c.is_identity(r) != c.is_identity(s) {
                continue;
            }
            self.assign_orbit(r, s);
            if self.consistent() && self.search(i + 1)? {
                return Ok(true);
            }
            self.unassign_orbit(r, s);
        }
        Ok(false)
    }
}

fn orbit_iso(
    act: &CategoryAction,
    vo: &Partition,
    ao: &Partition,
    from: usize,
    to: usize,
    budget: u64,
) -> Result<Option<OrbitIso>, ActionError> {
    let c = act.category();
    let grp = act.group();
    let (va, vb) = (vo.class(from), vo.class(to));
    let (aa, ab) = (orbit_subcategory_arrows(act, va), orbit_subcategory_arrows(act, vb));
    if va.len() != vb.len() || aa.len() != ab.len() {
        return Ok(None);
    }
    let mut reps: Vec<usize> = aa
        .iter()
        .copied()
        .filter(|&a| ao.class(ao.class_of(a))[0] == a)
        .collect();
    reps.sort_by_key(|&a| (c.is_identity(a), a));
    let mut pairs = Vec::new();
    for &p in &aa {
        for &q in c.out_arrows(c.dst(p)) {
            if va.contains(&c.dst(q)) {
                pairs.push((p, q, c.compose(p, q)));
            }
        }
    }
    let x0 = va[0];
    for &y in vb {
        let vmap: HashMap<usize, usize> = grp
            .elements()
            .map(|g| (act.act_vertex(x0, g), act.act_vertex(y, g)))
            .collect();
        let mut m = OrbitMatcher {
            act,
            reps: reps.clone(),
            arrow_class: ao,
            pairs: pairs.clone(),
            amap: HashMap::new(),
            used: vec![false; ao.num_classes()],
            vmap: vmap.clone(),
            steps: 0,
            budget,
        };
        if m.search(0)? {
            let mut vertex_map: Vec<(usize, usize)> = vmap.into_iter().collect();
            vertex_map.sort_unstable();
            let mut arrow_map: Vec<(usize, usize)> = m.amap.into_iter().collect();
            arrow_map.sort_unstable();
            return Ok(Some(OrbitIso {
                from_orbit: from,
                to_orbit: to,
                vertex_map,
                arrow_map,
            }));
        }
    }
    Ok(None)
}

/// Translativity: semi-regular, and the full subcategories on any two
/// vertex orbits are isomorphic through a map commuting with the action.
/// Commuting isomorphisms compose, so witnesses from the first orbit to
/// each other orbit suffice.
pub fn is_translative(act: &CategoryAction) -> Result<Translativity, ActionError> {
    is_translative_within(act, DEFAULT_BUDGET)
}

pub fn is_translative_within(act: &CategoryAction, budget: u64) -> Result<Translativity, ActionError> {
    if let Verdict::Fails(w) = is_semiregular(act) {
        return Err(ActionError::NotSemiRegular(format!("{} fixes {}", w.element, w.fixed)));
    }
    let c = act.category();
    let (vo, ao) = act.orbits();
    let mut witnesses = Vec::new();
    for to in 0..vo.num_classes() {
        match orbit_iso(act, &vo, &ao, 0, to, budget)? {
            Some(w) => witnesses.push(w),
            None => {
                return Ok(Translativity {
                    witnesses,
                    failure: Some((
                        c.vertex_name(vo.class(0)[0]).to_string(),
                        c.vertex_name(vo.class(to)[0]).to_string(),
                    )),
                })
            }
        }
    }
    Ok(Translativity {
        witnesses,
        failure: None,
    })
}

/// Entry of the C' table: `x * a = a^shift * value`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CPrime {
    pub shift: usize,
    pub value: usize,
}

/// C' table keyed by `(a, x)` with `x` in the full subcategory on the
/// vertex orbit of `dom a` and `cod x = dom a`. Pairs whose composite
/// `x * a` is undefined (partial categories) have no entry.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CPrimeTable {
    pub entries: BTreeMap<(usize, usize), CPrime>,
}

impl CPrimeTable {
    pub fn get(&self, a: usize, x: usize) -> Option<CPrime> {
        self.entries.get(&(a, x)).copied()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RightNormality {
    pub table: CPrimeTable,
    /// First `(a, x)` with no admissible C' value.
    pub failure: Option<(String, String)>,
}

impl RightNormality {
    pub fn holds(&self) -> bool {
        self.failure.is_none()
    }
}

/// Right-normality through the representative criterion: for every arrow
/// `a` and every `x` in the orbit subcategory of `dom a` ending at `dom a`,
/// some `g` and `C'(a, x)` in the orbit subcategory of `cod a` satisfy
/// `x * a = a^g * C'(a, x)`, with `C'(a, id) = id`. Ties are broken by the
/// least arrow name.
pub fn is_right_normal(act: &CategoryAction) -> Result<RightNormality, ActionError> {
    let t = is_translative(act)?;
    if let Some((x, y)) = t.failure {
        return Err(ActionError::NotTranslative(format!("orbits of {x} and {y}")));
    }
    let c = act.category();
    let (vo, _) = act.orbits();
    let mut table = CPrimeTable::default();
    for a in c.arrow_ids() {
        let (da, ca) = (c.src(a), c.dst(a));
        for &x in c.in_arrows(da) {
            if !vo.same_class(c.src(x), da) {
                continue;
            }
            if x == c.identity(da) {
                table.entries.insert(
                    (a, x),
                    CPrime {
                        shift: act.group().neutral(),
                        value: c.identity(ca),
                    },
                );
                continue;
            }
            let Some(xa) = c.compose(x, a) else {
                continue;
            };
            let g = act
                .element_moving_vertex(da, c.src(x))
                .expect("vertices of one orbit are related by the group");
            let ag = act.act_arrow(a, g);
            let best = c
                .hom(c.dst(ag), ca)
                .into_iter()
                .filter(|&y| c.compose(ag, y) == Some(xa))
                .min_by(|&p, &q| c.arrow_name(p).cmp(c.arrow_name(q)));
            match best {
                Some(y) => {
                    table.entries.insert((a, x), CPrime { shift: g, value: y });
                }
                None => {
                    return Ok(RightNormality {
                        table,
                        failure: Some((c.arrow_name(a).to_string(), c.arrow_name(x).to_string())),
                    })
                }
            }
        }
    }
    Ok(RightNormality { table, failure: None })
}

/// Checks a C' table against its defining exchange law and the derived
/// laws: the product law for `C'(a, x * y)`, `a * C'(a, id) = a`, and
/// `C'(id, x) = x`.
///
/// Law tags: `c-prime-exchange`, `c-prime-product`, `c-prime-unit`,
/// `c-prime-identity`.
pub fn check_cprime_laws(act: &CategoryAction, table: &CPrimeTable) -> ValidationReport {
    let c = act.category();
    let mut r = ValidationReport::default();
    let n = |a: usize| c.arrow_name(a).to_string();
    for (&(a, x), e) in &table.entries {
        let ag = act.act_arrow(a, e.shift);
        if c.compose(ag, e.value) != c.compose(x, a) || c.compose(x, a).is_none() {
            r.push("c-prime-exchange", vec![n(a), n(x)]);
        }
        if x == c.identity(c.src(a)) && (e.value != c.identity(c.dst(a)) || c.compose(a, e.value) != Some(a)) {
            r.push("c-prime-unit", vec![n(a)]);
        }
        if c.is_identity(a) && e.value != x {
            r.push("c-prime-identity", vec![n(a), n(x)]);
        }
    }
    for (&(a, y), ey) in &table.entries {
        let ay = act.act_arrow(a, ey.shift);
        for &x in c.in_arrows(c.src(y)) {
            let (Some(xy), Some(ex)) = (c.compose(x, y), table.get(ay, x)) else {
                continue;
            };
            let Some(exy) = table.get(a, xy) else {
                continue;
            };
            let axy = act.act_arrow(a, exy.shift);
            let left = c.compose(axy, exy.value);
            let right = c
                .compose(act.act_arrow(ay, ex.shift), ex.value)
                .and_then(|p| c.compose(p, ey.value));
            if let (Some(l), Some(rt)) = (left, right) {
                if l != rt || act.act_arrow(ay, ex.shift) != axy {
                    r.push("c-prime-product", vec![n(a), n(x), n(y)]);
                }
            }
        }
    }
    r
}
