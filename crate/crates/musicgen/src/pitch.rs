//! Equal temperaments, the Shepard relation and the diatonic embedding.

use cat_core::{Category, CategoryBuilder};
use flat::{flat_rep_from_representation, FlatBundle, RightGroupalCategory};
use group_action::{AnnotationGroup, CategoryAction, GroupElem};
use orbitfold::{Annotation, Representation};
use partialcat::{FlatRepresentation, PartialSubcategory};

use crate::actions::{bound, validated, MAX_SIZE};
use crate::error::GenError;

/// Orbit window of the integers modulo `n`: arrows `p{i}+{d}` for
/// `0 < d <= dmax`, composable while the length stays within `dmax`, each
/// labelled by how many octaves it crosses.
pub fn gen_zn_fold(n: usize, dmax: usize) -> Result<Representation, GenError> {
    bound("n", n, 1, MAX_SIZE)?;
    bound("dmax", dmax, 0, 4 * MAX_SIZE)?;
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
    let k = b.build()?;
    let mut labels = vec![GroupElem::Vector(vec![0]); k.num_arrows()];
    for i in 0..n {
        for d in 0..=dmax {
            labels[arr[i][d]] = GroupElem::Vector(vec![((i + d) / n) as i64]);
        }
    }
    Ok(Representation::new(
        k,
        Annotation {
            group: AnnotationGroup::free(1),
            labels,
        },
    ))
}

/// Flat bundle of the window `gen_zn_fold(n, 2n)` over the nonnegative
/// integers; the window is wide enough that every pair of irreducible
/// arrows composes.
pub fn tet_bundle(n: usize) -> Result<FlatBundle, GenError> {
    bound("n", n, 1, MAX_SIZE)?;
    Ok(flat_rep_from_representation(
        &gen_zn_fold(n, 2 * n)?,
        RightGroupalCategory::orthant(1),
        None,
    )?)
}

/// The n-tone equal temperament: the whole flat pitch category.
pub fn gen_tet(n: usize) -> Result<FlatRepresentation, GenError> {
    Ok(FlatRepresentation::whole(tet_bundle(n)?.rep))
}

/// Pitch class of a vertex named `p{i}`.
pub fn pitch_class(k: &Category, v: usize) -> usize {
    k.vertex_name(v)[1..].parse().expect("pitch vertices are named p<i>")
}

/// Interval class `d` of an arrow between pitch classes.
pub fn interval_class(k: &Category, n: usize, a: usize) -> usize {
    (pitch_class(k, k.dst(a)) + n - pitch_class(k, k.src(a))) % n
}

/// `Z_n` rotating the pitch classes of a flat pitch category.
pub fn tet_rotation(k: &Category, n: usize) -> Result<CategoryAction, GenError> {
    if !k.is_simple() || k.num_vertices() != n {
        return Err(GenError::Parameter(
            "rotation needs a simple category on n pitch classes".into(),
        ));
    }
    let mut by_class = vec![usize::MAX; n];
    for x in k.vertices() {
        by_class[pitch_class(k, x)] = x;
    }
    let vp: Vec<usize> = k.vertices().map(|x| by_class[(pitch_class(k, x) + 1) % n]).collect();
    let mut ap = Vec::with_capacity(k.num_arrows());
    for a in k.arrow_ids() {
        let image = k.hom(vp[k.src(a)], vp[k.dst(a)]);
        ap.push(
            *image
                .first()
                .ok_or_else(|| GenError::Parameter("category is not rotation invariant".into()))?,
        );
    }
    validated(CategoryAction::generated(k.clone(), &[("r".into(), vp, ap)])?)
}

/// Arrows of the flat pitch category whose interval class `d` satisfies
/// `2d < n`: tones heard as lower than the target.
pub fn gen_shepard(n: usize) -> Result<FlatRepresentation, GenError> {
    bound("n", n, 2, MAX_SIZE)?;
    let whole = gen_tet(n)?;
    let k = &whole.completion.base;
    let arrows: Vec<usize> = k.arrow_ids().filter(|&a| 2 * interval_class(k, n, a) < n).collect();
    let part = PartialSubcategory::spanning(k, arrows);
    Ok(FlatRepresentation {
        completion: whole.completion,
        part,
    })
}

/// Major scale offsets within the octave.
pub const DIATONIC_STEPS: [usize; 7] = [0, 2, 4, 5, 7, 9, 11];

/// The 7-tone temperament together with the map of its vertices into the
/// 12-tone temperament.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diatonic {
    pub scale: FlatRepresentation,
    pub chromatic: FlatRepresentation,
    /// `vertex_map[x]` is the chromatic vertex of scale vertex `x`.
    pub vertex_map: Vec<usize>,
}

pub fn gen_diatonic() -> Result<Diatonic, GenError> {
    let scale = gen_tet(7)?;
    let chromatic = gen_tet(12)?;
    let (s, c) = (&scale.completion.base, &chromatic.completion.base);
    let vertex_map = s
        .vertices()
        .map(|x| {
            let target = DIATONIC_STEPS[pitch_class(s, x)];
            c.vertices()
                .find(|&y| pitch_class(c, y) == target)
                .expect("every pitch class is a vertex")
        })
        .collect();
    Ok(Diatonic {
        scale,
        chromatic,
        vertex_map,
    })
}
