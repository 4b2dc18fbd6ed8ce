//! Isomorphisms of flat representations: a base isomorphism `phi` plus a
//! layer shift `s_x` per vertex, acting on layers by `g -> s_x g`.

use std::collections::VecDeque;

use cat_core::{check_morphism, CatMorphism, ValidationReport};
use group_action::GroupElem;

use crate::rep::FlatCategoryRepresentation;
use crate::unfolding::FlatUnfolding;

/// `phi` maps the base of the second representation onto the base of the
/// first; `shifts` is indexed by vertices of the second base.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlatRepIso {
    pub phi: CatMorphism,
    pub shifts: Vec<GroupElem>,
}

/// Checks `i` as an isomorphism `f2 -> f1`.
///
/// Law tags: `base-isomorphism`, `groupal-isomorphism`,
/// `shift-automorphism` (conjugation by every shift preserves the cone),
/// `iso-annotation` (`B(a) = s_cod^-1 A(phi a) s_dom`), `iso-n`
/// (`m(a, b) = s^-1 n(phi a, phi b) s` with `s = s_cod b`), `iso-c`
/// (`D(a, x) = s_cod^-1 C(phi a, s_dom x s_dom^-1) s_cod`).
pub fn check_flat_iso(
    i: &FlatRepIso,
    f1: &FlatCategoryRepresentation,
    f2: &FlatCategoryRepresentation,
) -> ValidationReport {
    let mut r = ValidationReport::default();
    let (k1, k2) = (&f1.base, &f2.base);
    let m = check_morphism(&i.phi, k2, k1);
    if !m.valid || !i.phi.is_bijective(k1) || i.shifts.len() != k2.num_vertices() {
        r.push(
            "base-isomorphism",
            m.report
                .violations
                .first()
                .map(|v| v.witness.clone())
                .unwrap_or_default(),
        );
        return r;
    }
    if f1.g.group != f2.g.group || f1.g.cone != f2.g.cone {
        r.push("groupal-isomorphism", vec![]);
        return r;
    }
    let g = &f1.g.group;
    let name = |a: usize| k2.arrow_name(a).to_string();
    let conj = |s: &GroupElem, v: &GroupElem| g.mul(&g.mul(s, v), &g.inv(s));
    let unconj = |s: &GroupElem, v: &GroupElem| g.mul(&g.mul(&g.inv(s), v), s);
    let mut support = f1.loop_support();
    support.extend(f2.loop_support());
    for (x, s) in i.shifts.iter().enumerate() {
        if !g.contains(s) {
            r.push("shift-automorphism", vec![k2.vertex_name(x).to_string()]);
            continue;
        }
        for v in &support {
            if f1.g.in_cone(v) != f1.g.in_cone(&conj(s, v)) {
                r.push("shift-automorphism", vec![k2.vertex_name(x).to_string(), g.render(v)]);
            }
        }
    }
    if !r.is_valid() {
        return r;
    }
    let s = |x: usize| &i.shifts[x];
    let pa = |a: usize| i.phi.arrow_map[a];
    for a in k2.arrow_ids() {
        let expect = g.mul(&g.mul(&g.inv(s(k2.dst(a))), &f1.annotation[pa(a)]), s(k2.src(a)));
        if f2.annotation[a] != expect {
            r.push("iso-annotation", vec![name(a)]);
        }
    }
    for a in k2.arrow_ids() {
        for &b in k2.out_arrows(k2.dst(a)) {
            let lhs = f2.n_of(a, b).cloned();
            let rhs = f1.n_of(pa(a), pa(b)).map(|v| unconj(s(k2.dst(b)), v));
            if lhs != rhs {
                r.push("iso-n", vec![name(a), name(b)]);
            }
        }
    }
    for ((a, x), d) in &f2.c {
        let (sd, sc) = (s(k2.src(*a)), s(k2.dst(*a)));
        let rhs = f1.c_of(pa(*a), &conj(sd, x)).map(|v| unconj(sc, v));
        if rhs.as_ref() != Some(d) {
            r.push("iso-c", vec![name(*a), g.render(x)]);
        }
    }
    let inv = i.phi.inverse().expect("bijective");
    for (a1, y) in f1.c.keys() {
        let a = inv.arrow_map[*a1];
        let x = unconj(s(k2.src(a)), y);
        if f2.c_of(a, &x).is_none() {
            r.push("iso-c", vec![name(a), g.render(&x)]);
        }
    }
    r
}

/// Solves the annotation law for the shifts by propagation along arrows,
/// starting from the neutral element in every connected component, then
/// checks the result.
pub fn find_layer_shift(
    f1: &FlatCategoryRepresentation,
    f2: &FlatCategoryRepresentation,
    phi: &CatMorphism,
) -> Option<FlatRepIso> {
    let k2 = &f2.base;
    let g = &f1.g.group;
    let mut shifts: Vec<Option<GroupElem>> = vec![None; k2.num_vertices()];
    for start in k2.vertices() {
        if shifts[start].is_some() {
            continue;
        }
        shifts[start] = Some(g.neutral());
        let mut queue = VecDeque::from([start]);
        while let Some(x) = queue.pop_front() {
            let sx = shifts[x].clone().expect("queued vertices are set");
            for &a in k2.out_arrows(x) {
                let y = k2.dst(a);
                if shifts[y].is_none() {
                    let a1 = &f1.annotation[phi.arrow_map[a]];
                    shifts[y] = Some(g.mul(&g.mul(a1, &sx), &g.inv(&f2.annotation[a])));
                    queue.push_back(y);
                }
            }
            for &a in k2.in_arrows(x) {
                let y = k2.src(a);
                if shifts[y].is_none() {
                    let a1 = &f1.annotation[phi.arrow_map[a]];
                    shifts[y] = Some(g.mul(&g.mul(&g.inv(a1), &sx), &f2.annotation[a]));
                    queue.push_back(y);
                }
            }
        }
    }
    let iso = FlatRepIso {
        phi: phi.clone(),
        shifts: shifts.into_iter().map(|s| s.expect("every vertex reached")).collect(),
    };
    check_flat_iso(&iso, f1, f2).is_valid().then_some(iso)
}

/// Map of unfoldings `u2 -> u1` induced by `i`:
/// `(x, g) -> (phi x, s_x g)` and
/// `(a, v, g) -> (phi a, s_cod v s_cod^-1, s_dom g)`. `None` when an image
/// falls outside `u1`.
pub fn unfolding_map(
    i: &FlatRepIso,
    f1: &FlatCategoryRepresentation,
    f2: &FlatCategoryRepresentation,
    u1: &FlatUnfolding,
    u2: &FlatUnfolding,
) -> Option<CatMorphism> {
    let g = &f1.g.group;
    let k2 = &f2.base;
    let vertex_map = u2
        .vertex_pairs
        .iter()
        .map(|(x, h)| u1.vertex(i.phi.vertex_map[*x], &g.mul(&i.shifts[*x], h)))
        .collect::<Option<Vec<_>>>()?;
    let arrow_map = u2
        .arrow_triples
        .iter()
        .map(|(a, v, h)| {
            let sc = &i.shifts[k2.dst(*a)];
            let sd = &i.shifts[k2.src(*a)];
            let v1 = g.mul(&g.mul(sc, v), &g.inv(sc));
            u1.arrow(i.phi.arrow_map[*a], &v1, &g.mul(sd, h))
        })
        .collect::<Option<Vec<_>>>()?;
    Some(CatMorphism { vertex_map, arrow_map })
}
