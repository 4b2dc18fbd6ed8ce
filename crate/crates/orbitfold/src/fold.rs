use std::collections::HashMap;

use cat_core::{CatMorphism, Category, CategoryBuilder, Partition, Verdict};
use group_action::{is_foldable, is_semiregular, is_translative, AnnotationGroup, CategoryAction, GroupElem};

use crate::error::FoldError;
use crate::representation::{Annotation, Representation};

/// Orbit category together with its class partitions and the projection
/// from the acted-on category.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitCategory {
    pub category: Category,
    /// Source vertices of each orbit-category vertex.
    pub vertex_members: Vec<Vec<usize>>,
    /// Source arrows of each orbit-category arrow.
    pub arrow_members: Vec<Vec<usize>>,
    pub projection: CatMorphism,
}

impl OrbitCategory {
    pub fn vertex_members(&self, v: usize) -> &[usize] {
        &self.vertex_members[v]
    }

    pub fn arrow_members(&self, a: usize) -> &[usize] {
        &self.arrow_members[a]
    }

    /// Kernel partitions of the projection (vertex, arrow).
    pub fn partitions(&self) -> (Partition, Partition) {
        (
            Partition::from_labels(&self.projection.vertex_map),
            Partition::from_labels(&self.projection.arrow_map),
        )
    }
}

pub(crate) fn require_semiregular(act: &CategoryAction) -> Result<(), FoldError> {
    match is_semiregular(act) {
        Verdict::Holds => Ok(()),
        Verdict::Fails(w) => Err(FoldError::NotSemiRegular(format!("{} fixes {}", w.element, w.fixed))),
    }
}

pub(crate) fn require_foldable(act: &CategoryAction) -> Result<(), FoldError> {
    match is_foldable(act) {
        Verdict::Holds => Ok(()),
        Verdict::Fails(w) => Err(FoldError::NotFoldable(w.to_string())),
    }
}

/// Orbit category of a foldable action. Classes are named by their
/// lexicographically least member; composites come from any composable
/// pair of representatives, which foldability makes independent of the
/// choice. Semi-regularity is not needed for this construction.
pub fn orbit_category(act: &CategoryAction) -> Result<OrbitCategory, FoldError> {
    require_foldable(act)?;
    let c = act.category();
    let (vo, ao) = act.orbits();
    let least = |members: &[usize], name: &dyn Fn(usize) -> String| members.iter().map(|&m| name(m)).min().unwrap();
    let mut b = CategoryBuilder::new();
    b.set_partial(c.is_partial());
    let mut vclass = Vec::new();
    for cls in vo.classes() {
        let id_cls = ao.class(ao.class_of(c.identity(cls[0])));
        vclass.push(b.vertex_with_identity(
            &least(cls, &|v| c.vertex_name(v).to_string()),
            &least(id_cls, &|a| c.arrow_name(a).to_string()),
        ));
    }
    let mut aclass = vec![usize::MAX; ao.num_classes()];
    for v in c.vertices() {
        aclass[ao.class_of(c.identity(v))] = b.identity_of(vclass[vo.class_of(v)]);
    }
    for (k, cls) in ao.classes().iter().enumerate() {
        if aclass[k] == usize::MAX {
            let a = cls[0];
            aclass[k] = b.arrow(
                &least(cls, &|x| c.arrow_name(x).to_string()),
                vclass[vo.class_of(c.src(a))],
                vclass[vo.class_of(c.dst(a))],
            );
        }
    }
    let q = |a: usize| aclass[ao.class_of(a)];
    let mut table: HashMap<(usize, usize), usize> = HashMap::new();
    for (x, y, z) in c.compositions() {
        table.insert((q(x), q(y)), q(z));
    }
    for ((x, y), z) in table {
        b.set_compose(x, y, z);
    }
    let category = b.build()?;
    let projection = CatMorphism {
        vertex_map: c.vertices().map(|v| vclass[vo.class_of(v)]).collect(),
        arrow_map: c.arrow_ids().map(q).collect(),
    };
    let mut vertex_members = vec![Vec::new(); category.num_vertices()];
    for v in c.vertices() {
        vertex_members[projection.vertex_map[v]].push(v);
    }
    let mut arrow_members = vec![Vec::new(); category.num_arrows()];
    for a in c.arrow_ids() {
        arrow_members[projection.arrow_map[a]].push(a);
    }
    Ok(OrbitCategory {
        category,
        vertex_members,
        arrow_members,
        projection,
    })
}

/// One representative per vertex orbit, in orbit order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Transversal {
    pub chosen: Vec<usize>,
    pub strategy: String,
}

impl Transversal {
    pub fn contains(&self, v: usize) -> bool {
        self.chosen.contains(&v)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Strategy {
    /// Least vertex index of every orbit.
    First,
    /// Vertex names supplied by the caller.
    Given(Vec<String>),
}

pub fn choose_transversal(act: &CategoryAction, strategy: &Strategy) -> Result<Transversal, FoldError> {
    let c = act.category();
    let (vo, _) = act.orbits();
    match strategy {
        Strategy::First => Ok(Transversal {
            chosen: vo.classes().iter().map(|cls| cls[0]).collect(),
            strategy: "first".into(),
        }),
        Strategy::Given(names) => {
            let mut chosen = vec![usize::MAX; vo.num_classes()];
            for n in names {
                let v = c
                    .vertex_id(n)
                    .ok_or_else(|| FoldError::GivenSetNotTransversal(format!("unknown vertex `{n}`")))?;
                let k = vo.class_of(v);
                if chosen[k] != usize::MAX {
                    return Err(FoldError::GivenSetNotTransversal(format!(
                        "`{}` and `{n}` lie in one orbit",
                        c.vertex_name(chosen[k])
                    )));
                }
                chosen[k] = v;
            }
            if let Some(k) = chosen.iter().position(|&v| v == usize::MAX) {
                return Err(FoldError::GivenSetNotTransversal(format!(
                    "orbit of `{}` has no representative",
                    c.vertex_name(vo.class(k)[0])
                )));
            }
            Ok(Transversal {
                chosen,
                strategy: "given".into(),
            })
        }
    }
}

/// `g_T(x)`: the element with `t^g = x` for the representative `t` of the
/// orbit of `x`. Unique when the action is semi-regular.
pub fn canonical_automorphism(act: &CategoryAction, t: &Transversal, x: usize) -> usize {
    let rep = t
        .chosen
        .iter()
        .copied()
        .find(|&r| act.element_moving_vertex(r, x).is_some())
        .expect("transversal meets every orbit");
    act.element_moving_vertex(rep, x).unwrap()
}

/// `A_T(a) = g_T(cod a) g_T(dom a)^-1` on the orbit category, checked to be
/// constant on every arrow orbit.
pub fn natural_annotation(act: &CategoryAction, t: &Transversal) -> Result<(OrbitCategory, Annotation), FoldError> {
    require_semiregular(act)?;
    let orbit = orbit_category(act)?;
    let c = act.category();
    let grp = act.group();
    let gt: Vec<usize> = c.vertices().map(|x| canonical_automorphism(act, t, x)).collect();
    let mut labels = Vec::with_capacity(orbit.category.num_arrows());
    for k in orbit.category.arrow_ids() {
        let members = orbit.arrow_members(k);
        let value = |a: usize| grp.mul(gt[c.dst(a)], grp.inv(gt[c.src(a)]));
        let v = value(members[0]);
        if let Some(&bad) = members.iter().find(|&&a| value(a) != v) {
            return Err(FoldError::Malformed(format!(
                "natural annotation differs on the orbit of {}",
                c.arrow_name(bad)
            )));
        }
        labels.push(GroupElem::Finite(v));
    }
    let ann = Annotation {
        group: AnnotationGroup::Finite(grp.clone()),
        labels,
    };
    Ok((orbit, ann))
}

/// Category on the transversal: `Mor(x, y)` collects the arrows from `x`
/// into the orbit of `y`, and `a *_T b = a * b^(A_T(a))`.
pub fn transversal_category(act: &CategoryAction, t: &Transversal) -> Result<Category, FoldError> {
    require_semiregular(act)?;
    require_foldable(act)?;
    let tr = is_translative(act)?;
    if let Some((x, y)) = tr.failure {
        return Err(FoldError::NotTranslative(format!("orbits of {x} and {y}")));
    }
    let c = act.category();
    let (vo, _) = act.orbits();
    let gt: Vec<usize> = c.vertices().map(|x| canonical_automorphism(act, t, x)).collect();
    let mut b = CategoryBuilder::new();
    b.set_partial(c.is_partial());
    let mut vmap = HashMap::new();
    for &x in &t.chosen {
        vmap.insert(x, b.vertex_with_identity(c.vertex_name(x), c.arrow_name(c.identity(x))));
    }
    let rep_of_class: Vec<usize> = vo
        .classes()
        .iter()
        .map(|cls| *cls.iter().find(|v| t.contains(**v)).unwrap())
        .collect();
    let mut amap = HashMap::new();
    for &x in &t.chosen {
        amap.insert(c.identity(x), b.identity_of(vmap[&x]));
        for &a in c.out_arrows(x) {
            if a == c.identity(x) {
                continue;
            }
            let y = rep_of_class[vo.class_of(c.dst(a))];
            amap.insert(a, b.arrow(c.arrow_name(a), vmap[&x], vmap[&y]));
        }
    }
    let mut entries = Vec::new();
    for (&a, &ta) in &amap {
        let shift = gt[c.dst(a)];
        let z = c.dst(a);
        let y = rep_of_class[vo.class_of(z)];
        for &bb in c.out_arrows(y) {
            let shifted = act.act_arrow(bb, shift);
            debug_assert_eq!(c.src(shifted), z);
            if let Some(ab) = c.compose(a, shifted) {
                entries.push((ta, amap[&bb], amap[&ab]));
            }
        }
    }
    for (x, y, z) in entries {
        b.set_compose(x, y, z);
    }
    Ok(b.build()?)
}

/// Orbit category, natural annotation and the acting group as a
/// [`Representation`].
pub fn build_representation(
    act: &CategoryAction,
    t: &Transversal,
) -> Result<(Representation, OrbitCategory), FoldError> {
    let (orbit, ann) = natural_annotation(act, t)?;
    Ok((Representation::new(orbit.category.clone(), ann), orbit))
}
