//! Simple right-groupal categories: a group `G` whose elements are the
//! vertices, with an arrow `x -> y` exactly when `y x^-1` lies in a cone.
//! Right translation by `g` is then an automorphism, and the loop orbits
//! are indexed by cone elements.

use std::collections::BTreeSet;

use cat_core::{Category, CategoryBuilder, ValidationReport};
use group_action::{is_semiregular, is_translative, AnnotationGroup, CategoryAction, GroupElem};

use crate::error::FlatError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Cone {
    /// Vectors whose free coordinates are all nonnegative.
    Orthant,
    Finite(BTreeSet<GroupElem>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RightGroupalCategory {
    pub group: AnnotationGroup,
    pub cone: Cone,
    /// Neutral element of the vertex operation `x . y = x n^-1 y`; the
    /// group's own neutral element unless shifted.
    pub neutral: GroupElem,
}

impl RightGroupalCategory {
    pub fn new(group: AnnotationGroup, cone: Cone) -> Result<Self, FlatError> {
        let one = group.neutral();
        match &cone {
            Cone::Orthant => {
                if group.is_finite() {
                    return Err(FlatError::Malformed("orthant cone needs free coordinates".into()));
                }
            }
            Cone::Finite(s) => {
                if !s.contains(&one) {
                    return Err(FlatError::Malformed("cone must contain the neutral element".into()));
                }
                if let Some(e) = s.iter().find(|e| !group.contains(e)) {
                    return Err(FlatError::Malformed(format!("cone element {e:?} is not in the group")));
                }
            }
        }
        Ok(Self {
            group,
            cone,
            neutral: one,
        })
    }

    /// The orthant over `Z^rank`.
    pub fn orthant(rank: usize) -> Self {
        Self::new(AnnotationGroup::free(rank), Cone::Orthant).expect("free groups carry an orthant")
    }

    pub fn in_cone(&self, v: &GroupElem) -> bool {
        match &self.cone {
            Cone::Finite(s) => s.contains(v),
            Cone::Orthant => match (&self.group, v) {
                (AnnotationGroup::Abelian { free_rank, .. }, GroupElem::Vector(c)) => {
                    self.group.contains(v) && c[..*free_rank].iter().all(|&x| x >= 0)
                }
                _ => false,
            },
        }
    }

    /// Vertex operation.
    pub fn mul(&self, x: &GroupElem, y: &GroupElem) -> GroupElem {
        let g = &self.group;
        g.mul(&g.mul(x, &g.inv(&self.neutral)), y)
    }

    /// Inverse for [`RightGroupalCategory::mul`].
    pub fn inv(&self, x: &GroupElem) -> GroupElem {
        let g = &self.group;
        g.mul(&g.mul(&self.neutral, &g.inv(x)), &self.neutral)
    }

    /// Label of the loop orbit containing `x -> y`.
    pub fn loop_of(&self, x: &GroupElem, y: &GroupElem) -> GroupElem {
        self.group.div(y, x)
    }

    pub fn has_arrow(&self, x: &GroupElem, y: &GroupElem) -> bool {
        self.in_cone(&self.loop_of(x, y))
    }

    /// Loop `v` followed by loop `w`, when the composite stays in the cone.
    pub fn compose_loops(&self, v: &GroupElem, w: &GroupElem) -> Option<GroupElem> {
        if !self.in_cone(v) || !self.in_cone(w) {
            return None;
        }
        let u = self.group.mul(w, v);
        self.in_cone(&u).then_some(u)
    }

    /// Cone elements, when finite.
    pub fn loops(&self) -> Option<Vec<GroupElem>> {
        match &self.cone {
            Cone::Finite(s) => Some(s.iter().cloned().collect()),
            Cone::Orthant => None,
        }
    }

    /// Full subcategory on `vertices`. Names are the rendered elements,
    /// arrows are `x>y`.
    pub fn to_category(&self, vertices: &[GroupElem]) -> Category {
        let g = &self.group;
        let mut b = CategoryBuilder::new();
        b.set_partial(true);
        let ids: Vec<usize> = vertices
            .iter()
            .map(|x| b.vertex_with_identity(&g.render(x), &format!("{}>{}", g.render(x), g.render(x))))
            .collect();
        let mut arrow = vec![vec![None; vertices.len()]; vertices.len()];
        for (i, x) in vertices.iter().enumerate() {
            arrow[i][i] = Some(b.identity_of(ids[i]));
            for (j, y) in vertices.iter().enumerate() {
                if i != j && self.has_arrow(x, y) {
                    arrow[i][j] = Some(b.arrow(&format!("{}>{}", g.render(x), g.render(y)), ids[i], ids[j]));
                }
            }
        }
        for i in 0..vertices.len() {
            for j in 0..vertices.len() {
                for k in 0..vertices.len() {
                    if let (Some(p), Some(q), Some(r)) = (arrow[i][j], arrow[j][k], arrow[i][k]) {
                        let v = self.loop_of(&vertices[i], &vertices[j]);
                        let w = self.loop_of(&vertices[j], &vertices[k]);
                        if self.compose_loops(&v, &w).is_some() {
                            b.set_compose(p, q, r);
                        }
                    }
                }
            }
        }
        let c = b.build_unchecked();
        let partial = c.has_missing_composites();
        c.with_partial(partial)
    }

    /// The whole category with the vertex group acting by right
    /// multiplication; finite groups only.
    pub fn right_action(&self) -> Result<CategoryAction, FlatError> {
        let elems = self.group.enumerate().ok_or(FlatError::InfiniteGroup)?;
        let c = self.to_category(&elems);
        let names: Vec<String> = elems.iter().map(|e| self.group.render(e)).collect();
        let pos = |e: &GroupElem| elems.iter().position(|x| x == e).expect("closed under mul");
        let table: Vec<Vec<usize>> = elems
            .iter()
            .map(|x| elems.iter().map(|y| pos(&self.mul(x, y))).collect())
            .collect();
        let grp = group_action::FiniteGroup::from_table(names, table)?;
        let vt: Vec<Vec<usize>> = elems
            .iter()
            .map(|g| elems.iter().map(|x| pos(&self.mul(x, g))).collect())
            .collect();
        let at: Vec<Vec<usize>> = elems
            .iter()
            .map(|g| {
                c.arrow_ids()
                    .map(|a| {
                        let (x, y) = (pos(&self.mul(&elems[c.src(a)], g)), pos(&self.mul(&elems[c.dst(a)], g)));
                        c.hom(x, y)[0]
                    })
                    .collect()
            })
            .collect();
        Ok(CategoryAction::from_tables(c, grp, vt, at)?)
    }

    /// Hom-sets are translates of hom-sets at the neutral element:
    /// `Mor(x, y) = Mor(1, y x^-1) x = Mor(x y^-1, 1) y`, checked on
    /// `sample`. Law tag: `hom-translation`.
    pub fn check_hom_translation(&self, sample: &[GroupElem]) -> ValidationReport {
        let mut r = ValidationReport::default();
        let one = &self.neutral;
        let g = &self.group;
        for x in sample {
            for y in sample {
                let q = self.mul(y, &self.inv(x));
                let p = self.mul(x, &self.inv(y));
                let left = self.has_arrow(one, &q) && self.mul(one, x) == *x && self.mul(&q, x) == *y;
                let right = self.has_arrow(&p, one) && self.mul(&p, y) == *x && self.mul(one, y) == *y;
                let direct = self.has_arrow(x, y);
                if left != direct || right != direct {
                    r.push("hom-translation", vec![g.render(x), g.render(y)]);
                }
            }
        }
        r
    }
}

/// Same category with the vertex operation re-centred at `a`:
/// `x ._a y = x . a^-1 . y`. The map `x -> x . a` is an isomorphism from
/// the old structure to the new one.
pub fn shift_neutral(g: &RightGroupalCategory, a: &GroupElem) -> RightGroupalCategory {
    RightGroupalCategory {
        group: g.group.clone(),
        cone: g.cone.clone(),
        neutral: a.clone(),
    }
}

/// Checks that `x -> x . a` carries `old` onto `shift_neutral(old, a)` on
/// `sample`: products, neutral elements and arrows. Law tag:
/// `shift-isomorphism`.
pub fn check_shift_isomorphism(old: &RightGroupalCategory, a: &GroupElem, sample: &[GroupElem]) -> ValidationReport {
    let new = shift_neutral(old, a);
    let f = |x: &GroupElem| old.mul(x, a);
    let mut r = ValidationReport::default();
    let render = |x: &GroupElem| old.group.render(x);
    if f(&old.neutral) != new.neutral {
        r.push("shift-isomorphism", vec!["neutral".into()]);
    }
    for x in sample {
        for y in sample {
            if f(&old.mul(x, y)) != new.mul(&f(x), &f(y)) || old.has_arrow(x, y) != new.has_arrow(&f(x), &f(y)) {
                r.push("shift-isomorphism", vec![render(x), render(y)]);
            }
        }
    }
    r
}

/// Vertex category of a translative semi-regular action at vertex `x`: the
/// full subcategory on the orbit of `x`, with `x^g` identified with `g`.
/// Fails unless that subcategory is simple and described by its cone.
pub fn vertex_category(act: &CategoryAction, x: usize) -> Result<RightGroupalCategory, FlatError> {
    if let Some(w) = is_semiregular(act).witness() {
        return Err(FlatError::Action(group_action::ActionError::NotSemiRegular(format!(
            "{} fixes {}",
            w.element, w.fixed
        ))));
    }
    let tr = is_translative(act)?;
    if let Some((p, q)) = tr.failure {
        return Err(FlatError::Action(group_action::ActionError::NotTranslative(format!(
            "orbits of {p} and {q}"
        ))));
    }
    let c = act.category();
    let grp = act.group();
    let orbit: Vec<usize> = grp.elements().map(|g| act.act_vertex(x, g)).collect();
    let mut cone = BTreeSet::new();
    for g in grp.elements() {
        for h in grp.elements() {
            let hom = c.hom(orbit[g], orbit[h]);
            if hom.len() > 1 {
                return Err(FlatError::NotSimple(format!(
                    "{} arrows {} -> {}",
                    hom.len(),
                    c.vertex_name(orbit[g]),
                    c.vertex_name(orbit[h])
                )));
            }
            if !hom.is_empty() {
                cone.insert(GroupElem::Finite(grp.mul(h, grp.inv(g))));
            }
        }
    }
    let out = RightGroupalCategory {
        group: AnnotationGroup::Finite(grp.clone()),
        cone: Cone::Finite(cone),
        neutral: GroupElem::Finite(grp.neutral()),
    };
    let e = GroupElem::Finite;
    for g in grp.elements() {
        for h in grp.elements() {
            let hom = c.hom(orbit[g], orbit[h]);
            if hom.is_empty() == out.has_arrow(&e(g), &e(h)) {
                return Err(FlatError::ConeMismatch(format!(
                    "{} -> {}",
                    c.vertex_name(orbit[g]),
                    c.vertex_name(orbit[h])
                )));
            }
            let Some(&p) = hom.first() else { continue };
            for k in grp.elements() {
                let Some(&q) = c.hom(orbit[h], orbit[k]).first() else {
                    continue;
                };
                let v = out.loop_of(&e(g), &e(h));
                let w = out.loop_of(&e(h), &e(k));
                if c.compose(p, q).is_some() != out.compose_loops(&v, &w).is_some() {
                    return Err(FlatError::ConeMismatch(format!(
                        "composite of {} and {}",
                        c.arrow_name(p),
                        c.arrow_name(q)
                    )));
                }
            }
        }
    }
    Ok(out)
}
