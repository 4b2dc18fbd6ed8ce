#![allow(dead_code)]

use cat_core::{Category, CategoryBuilder};
use flat::{flat_rep_from_representation, RightGroupalCategory};
use group_action::{check_action, AnnotationGroup, CategoryAction, GroupElem};
use orbitfold::{Annotation, Representation};
use partialcat::{FlatRepresentation, PartialSubcategory};

/// Orbit window on Z_n with arrows `p{i}+{d}` for d <= dmax, labelled by
/// how often they wrap.
pub fn zn_fold(n: usize, dmax: usize) -> Representation {
    let mut b = CategoryBuilder::new();
    b.set_partial(true);
    for i in 0..n {
        b.vertex(&format!("p{i}"));
    }
    let mut arr = vec![vec![0; dmax + 1]; n];
    for i in 0..n {
        arr[i][0] = b.identity_of(i);
        for d in 1..=dmax {
            arr[i][d] = b.arrow(&format!("p{i}+{d}"), i, (i + d) % n);
        }
    }
    for i in 0..n {
        for d1 in 0..=dmax {
            for d2 in 0..=dmax - d1 {
                b.set_compose(arr[i][d1], arr[(i + d1) % n][d2], arr[i][d1 + d2]);
            }
        }
    }
    let k = b.build().unwrap();
    let mut labels = vec![GroupElem::Vector(vec![0]); k.num_arrows()];
    for i in 0..n {
        for d in 0..=dmax {
            labels[arr[i][d]] = GroupElem::Vector(vec![((i + d) / n) as i64]);
        }
    }
    Representation::new(
        k,
        Annotation {
            group: AnnotationGroup::free(1),
            labels,
        },
    )
}

/// The flat n-tone pitch category, whole.
pub fn tet(n: usize) -> FlatRepresentation {
    let bundle = flat_rep_from_representation(&zn_fold(n, 2 * n), RightGroupalCategory::orthant(1), None).unwrap();
    FlatRepresentation::whole(bundle.rep)
}

pub fn pitch(k: &Category, v: usize) -> usize {
    k.vertex_name(v)[1..].parse().unwrap()
}

/// Interval class of an arrow of the flat pitch category.
pub fn step(k: &Category, n: usize, a: usize) -> usize {
    (pitch(k, k.dst(a)) + n - pitch(k, k.src(a))) % n
}

/// Z_n rotating pitch classes of a simple pitch category.
pub fn rotation(k: &Category, n: usize) -> CategoryAction {
    let by_pitch: Vec<usize> = {
        let mut v = vec![0; n];
        for x in k.vertices() {
            v[pitch(k, x)] = x;
        }
        v
    };
    let vp: Vec<usize> = k.vertices().map(|x| by_pitch[(pitch(k, x) + 1) % n]).collect();
    let ap: Vec<usize> = k.arrow_ids().map(|a| k.hom(vp[k.src(a)], vp[k.dst(a)])[0]).collect();
    let act = CategoryAction::generated(k.clone(), &[("r".into(), vp, ap)]).unwrap();
    assert!(check_action(&act).is_valid());
    act
}

/// Arrows whose interval class d satisfies 2d < n.
pub fn shepard(n: usize) -> FlatRepresentation {
    let whole = tet(n);
    let k = &whole.completion.base;
    let arrows: Vec<usize> = k.arrow_ids().filter(|&a| 2 * step(k, n, a) < n).collect();
    let part = PartialSubcategory::spanning(k, arrows);
    FlatRepresentation {
        completion: whole.completion,
        part,
    }
}

/// Order category of the chain 0 < 1 < ... < h.
pub fn chain(h: usize) -> Category {
    let mut b = CategoryBuilder::new();
    for i in 0..=h {
        b.vertex(&format!("c{i}"));
    }
    let mut arr = vec![vec![usize::MAX; h + 1]; h + 1];
    for i in 0..=h {
        arr[i][i] = b.identity_of(i);
        for j in i + 1..=h {
            arr[i][j] = b.arrow(&format!("c{i}<c{j}"), i, j);
        }
    }
    for i in 0..=h {
        for j in i..=h {
            for l in j..=h {
                b.set_compose(arr[i][j], arr[j][l], arr[i][l]);
            }
        }
    }
    b.build().unwrap()
}

pub fn chain_labels(k: &Category) -> Vec<GroupElem> {
    vec![GroupElem::Vector(vec![0]); k.num_arrows()]
}

/// Arrows between neighbours of the chain.
pub fn cover_relation(k: &Category) -> PartialSubcategory {
    let covers = k.arrow_ids().filter(|&a| {
        let (s, t): (usize, usize) = (k.src(a), k.dst(a));
        t == s + 1
    });
    PartialSubcategory::spanning(k, covers)
}
