//! Windows of integer lattices folded by a rectangular sublattice.

use std::collections::BTreeMap;

use cat_core::{Category, CategoryBuilder};
use flat::{FlatCategoryRepresentation, RightGroupalCategory};
use group_action::{AnnotationGroup, CategoryAction, GroupElem};
use orbitfold::{Annotation, Representation};
use partialcat::{FlatRepresentation, PartialSubcategory};

use crate::actions::{bound, validated};
use crate::error::GenError;

fn tuple(v: &[usize]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(","))
}

/// All vectors `v` with `0 <= v[i] < ends[i]`, lexicographically.
fn boxed(ends: &[usize]) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for &e in ends {
        out = out
            .into_iter()
            .flat_map(|p: Vec<usize>| {
                (0..e).map(move |x| {
                    let mut q = p.clone();
                    q.push(x);
                    q
                })
            })
            .collect();
    }
    out
}

fn wraps(periods: &[usize], v: &[usize], d: &[usize]) -> GroupElem {
    GroupElem::Vector(
        periods
            .iter()
            .enumerate()
            .map(|(i, &p)| ((v[i] + d[i]) / p) as i64)
            .collect(),
    )
}

fn shifted(periods: &[usize], v: &[usize], d: &[usize]) -> Vec<usize> {
    periods.iter().enumerate().map(|(i, &p)| (v[i] + d[i]) % p).collect()
}

fn check_periods(periods: &[usize]) -> Result<(), GenError> {
    bound("rank", periods.len(), 1, 4)?;
    for &p in periods {
        bound("period", p, 1, 24)?;
    }
    Ok(())
}

/// The product order on `Z^r` folded by `p_1 Z x ... x p_r Z`, windowed to
/// arrow lengths `0 <= d <= dmax` componentwise. Vertices are named by
/// residues `(a,b)`, arrows `(a,b)+(d1,d2)`; labels count the periods
/// crossed in each coordinate.
pub fn gen_box_fold(periods: &[usize], dmax: &[usize]) -> Result<Representation, GenError> {
    check_periods(periods)?;
    if dmax.len() != periods.len() {
        return Err(GenError::Parameter("one window bound per coordinate".into()));
    }
    for &d in dmax {
        bound("dmax", d, 0, 48)?;
    }
    let verts = boxed(periods);
    let steps = boxed(&dmax.iter().map(|d| d + 1).collect::<Vec<_>>());
    let mut b = CategoryBuilder::new();
    b.set_partial(true);
    let vid: BTreeMap<Vec<usize>, usize> = verts.iter().map(|v| (v.clone(), b.vertex(&tuple(v)))).collect();
    let mut aid: BTreeMap<(usize, Vec<usize>), usize> = BTreeMap::new();
    let mut labels = Vec::new();
    let zero = vec![0; periods.len()];
    for v in &verts {
        let x = vid[v];
        for d in &steps {
            let id = if *d == zero {
                b.identity_of(x)
            } else {
                b.arrow(&format!("{}+{}", tuple(v), tuple(d)), x, vid[&shifted(periods, v, d)])
            };
            aid.insert((x, d.clone()), id);
            if labels.len() <= id {
                labels.resize(id + 1, GroupElem::Vector(zero.iter().map(|_| 0).collect()));
            }
            labels[id] = wraps(periods, v, d);
        }
    }
    for v in &verts {
        let x = vid[v];
        for d1 in &steps {
            let y = vid[&shifted(periods, v, d1)];
            for d2 in &steps {
                let sum: Vec<usize> = d1.iter().zip(d2).map(|(a, b)| a + b).collect();
                if sum.iter().zip(dmax).all(|(s, m)| s <= m) {
                    b.set_compose(aid[&(x, d1.clone())], aid[&(y, d2.clone())], aid[&(x, sum)]);
                }
            }
        }
    }
    let k = b.build()?;
    Ok(Representation::new(
        k,
        Annotation {
            group: AnnotationGroup::free(periods.len()),
            labels,
        },
    ))
}

/// The window of the planar example: `Z x Z` folded by `4Z x 3Z` with
/// arrow lengths up to 7 in each coordinate.
pub fn gen_lattice_window() -> Result<Representation, GenError> {
    gen_box_fold(&[4, 3], &[7, 7])
}

/// Flat category of the folded lattice, built directly: one arrow between
/// any two residues, with offset `d` in `[0, p)` per coordinate. Loops are
/// labelled by periods crossed and commute with every arrow.
pub fn gen_box_flat(periods: &[usize]) -> Result<FlatCategoryRepresentation, GenError> {
    check_periods(periods)?;
    let r = periods.len();
    let verts = boxed(periods);
    let mut b = CategoryBuilder::new();
    let vid: BTreeMap<Vec<usize>, usize> = verts.iter().map(|v| (v.clone(), b.vertex(&tuple(v)))).collect();
    let offset =
        |x: &[usize], y: &[usize]| -> Vec<usize> { (0..r).map(|i| (y[i] + periods[i] - x[i]) % periods[i]).collect() };
    let zero = vec![0; r];
    let mut arrow = vec![vec![0; verts.len()]; verts.len()];
    let mut annotation = Vec::new();
    for (xi, x) in verts.iter().enumerate() {
        for (yi, y) in verts.iter().enumerate() {
            let d = offset(x, y);
            let id = if d == zero {
                b.identity_of(vid[x])
            } else {
                b.arrow(&format!("{}+{}", tuple(x), tuple(&d)), vid[x], vid[y])
            };
            arrow[xi][yi] = id;
            if annotation.len() <= id {
                annotation.resize(id + 1, GroupElem::Vector(vec![0; r]));
            }
            annotation[id] = wraps(periods, x, &d);
        }
    }
    let nv = verts.len();
    for x in 0..nv {
        for y in 0..nv {
            for z in 0..nv {
                b.set_compose(arrow[x][y], arrow[y][z], arrow[x][z]);
            }
        }
    }
    let base = b.build()?;
    let group = AnnotationGroup::free(r);
    let mut n = BTreeMap::new();
    for x in 0..nv {
        for y in 0..nv {
            for z in 0..nv {
                let (a, c, ac) = (arrow[x][y], arrow[y][z], arrow[x][z]);
                let v = group.div(&group.mul(&annotation[c], &annotation[a]), &annotation[ac]);
                n.insert((a, c), v);
            }
        }
    }
    let loops: Vec<GroupElem> = boxed(&vec![2; r])
        .into_iter()
        .map(|v| GroupElem::Vector(v.into_iter().map(|x| x as i64).collect()))
        .collect();
    let mut c = BTreeMap::new();
    for a in base.arrow_ids() {
        for v in &loops {
            c.insert((a, v.clone()), v.clone());
        }
    }
    let rep = FlatCategoryRepresentation {
        base,
        annotation,
        n,
        c,
        g: RightGroupalCategory::orthant(r),
    };
    if let Some(v) = rep.check().violations.first() {
        return Err(GenError::InvalidAction(format!("flat lattice: {v}")));
    }
    Ok(rep)
}

/// Offsets of an arrow of [`gen_box_flat`], parsed from its name.
pub fn box_offset(k: &Category, a: usize) -> Vec<usize> {
    if k.is_identity(a) {
        let dims = k.vertex_name(k.src(a)).matches(',').count() + 1;
        return vec![0; dims];
    }
    let name = k.arrow_name(a);
    let (_, d) = name.split_once(")+(").expect("box arrows are named (x)+(d)");
    d.trim_end_matches(')')
        .split(',')
        .map(|s| s.parse().expect("offsets are integers"))
        .collect()
}

/// Third period of the chroma torus; the folded group is
/// `Z x 12Z x third Z`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ThirdPeriod {
    Two,
    Three,
}

impl ThirdPeriod {
    pub fn value(self) -> usize {
        match self {
            ThirdPeriod::Two => 2,
            ThirdPeriod::Three => 3,
        }
    }
}

/// The torus of chromas: the flat lattice with periods `(1, 12, third)`,
/// restricted to the neighbour relation (every offset 0 or 1).
pub fn gen_tonnetz(third: ThirdPeriod) -> Result<FlatRepresentation, GenError> {
    let completion = gen_box_flat(&[1, 12, third.value()])?;
    let k = &completion.base;
    let arrows: Vec<usize> = k
        .arrow_ids()
        .filter(|&a| box_offset(k, a).iter().all(|&d| d <= 1))
        .collect();
    let part = PartialSubcategory::spanning(k, arrows);
    Ok(FlatRepresentation { completion, part })
}

/// Translations of the residues of a [`gen_box_flat`] category, generated
/// by the unit vectors of the coordinates with nontrivial period.
pub fn box_translations(k: &Category, periods: &[usize]) -> Result<CategoryAction, GenError> {
    let parse = |v: usize| -> Vec<usize> {
        let name = k.vertex_name(v);
        name[1..name.len() - 1]
            .split(',')
            .map(|s| s.parse().expect("residue"))
            .collect()
    };
    let coords: Vec<Vec<usize>> = k.vertices().map(parse).collect();
    let index: BTreeMap<&Vec<usize>, usize> = coords.iter().enumerate().map(|(i, c)| (c, i)).collect();
    let mut gens = Vec::new();
    for (i, &p) in periods.iter().enumerate() {
        if p == 1 {
            continue;
        }
        let vp: Vec<usize> = coords
            .iter()
            .map(|c| {
                let mut d = c.clone();
                d[i] = (d[i] + 1) % p;
                index[&d]
            })
            .collect();
        let ap: Vec<usize> = k.arrow_ids().map(|a| k.hom(vp[k.src(a)], vp[k.dst(a)])[0]).collect();
        gens.push((format!("t{i}"), vp, ap));
    }
    validated(CategoryAction::generated(k.clone(), &gens)?)
}
