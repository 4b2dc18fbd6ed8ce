#![allow(dead_code)]

use cat_core::{Category, CategoryBuilder};
use group_action::{AnnotationGroup, CategoryAction, Generator, GroupElem};
use orbitfold::{Annotation, Representation};

/// The five-vertex category with a, b into 3 and c, d out of 3.
pub fn fix_k() -> Category {
    let mut b = CategoryBuilder::new();
    let v: Vec<usize> = (1..=5).map(|i| b.vertex(&i.to_string())).collect();
    let a = b.arrow("a", v[0], v[2]);
    let bb = b.arrow("b", v[1], v[2]);
    let c = b.arrow("c", v[2], v[3]);
    let d = b.arrow("d", v[2], v[4]);
    for (x, xn) in [(a, "a"), (bb, "b")] {
        for (y, yn, t) in [(c, "c", v[3]), (d, "d", v[4])] {
            let s = if xn == "a" { v[0] } else { v[1] };
            let xy = b.arrow(&format!("{xn}*{yn}"), s, t);
            b.set_compose(x, y, xy);
        }
    }
    b.build().unwrap()
}

fn pairs(list: &[(&str, &str)]) -> Vec<(String, String)> {
    list.iter()
        .flat_map(|&(x, y)| [(x.to_string(), y.to_string()), (y.to_string(), x.to_string())])
        .collect()
}

pub fn phi() -> Generator {
    Generator {
        name: "phi".into(),
        vertices: pairs(&[("1", "2")]),
        arrows: pairs(&[("id_1", "id_2"), ("a", "b"), ("a*c", "b*c"), ("a*d", "b*d")]),
    }
}

pub fn psi() -> Generator {
    Generator {
        name: "psi".into(),
        vertices: pairs(&[("4", "5")]),
        arrows: pairs(&[("id_4", "id_5"), ("c", "d"), ("a*c", "a*d"), ("b*c", "b*d")]),
    }
}

pub fn phipsi() -> Generator {
    Generator {
        name: "phipsi".into(),
        vertices: pairs(&[("1", "2"), ("4", "5")]),
        arrows: pairs(&[
            ("id_1", "id_2"),
            ("id_4", "id_5"),
            ("a", "b"),
            ("c", "d"),
            ("a*c", "b*d"),
            ("a*d", "b*c"),
        ]),
    }
}

/// k disjoint chains of height h (h+1 vertices each) rotated by Z_k.
pub fn chain_bundle(k: usize, h: usize) -> CategoryAction {
    let mut b = CategoryBuilder::new();
    let mut v = vec![vec![0; h + 1]; k];
    for i in 0..k {
        for j in 0..=h {
            v[i][j] = b.vertex(&format!("c{i}_{j}"));
        }
    }
    let mut arr = vec![vec![vec![usize::MAX; h + 1]; h + 1]; k];
    for i in 0..k {
        for j in 0..=h {
            arr[i][j][j] = b.identity_of(v[i][j]);
            for l in j + 1..=h {
                arr[i][j][l] = b.arrow(&format!("c{i}_{j}_{l}"), v[i][j], v[i][l]);
            }
        }
        for j in 0..=h {
            for l in j..=h {
                for m in l..=h {
                    b.set_compose(arr[i][j][l], arr[i][l][m], arr[i][j][m]);
                }
            }
        }
    }
    let c = b.build().unwrap();
    let vp: Vec<usize> = c
        .vertex_names()
        .iter()
        .map(|n| {
            let (i, j) = n[1..].split_once('_').unwrap();
            let i: usize = i.parse().unwrap();
            c.v(&format!("c{}_{j}", (i + 1) % k))
        })
        .collect();
    let ap: Vec<usize> = c
        .arrow_ids()
        .map(|a| {
            let (s, t) = (c.src(a), c.dst(a));
            c.hom(vp[s], vp[t])[0]
        })
        .collect();
    CategoryAction::generated(c, &[("r".into(), vp, ap)]).unwrap()
}

/// Z_{nm} with arrows (i, d), 0 <= d <= dmax, composition defined while the
/// total length stays within dmax; Z_m acts by i -> i + n.
pub fn zn_cover(n: usize, m: usize, dmax: usize) -> CategoryAction {
    let size = n * m;
    assert!(dmax < size);
    let mut b = CategoryBuilder::new();
    b.set_partial(true);
    for i in 0..size {
        b.vertex(&format!("v{i}"));
    }
    let mut arr = vec![vec![0; dmax + 1]; size];
    for i in 0..size {
        arr[i][0] = b.identity_of(i);
        for d in 1..=dmax {
            arr[i][d] = b.arrow(&format!("v{i}+{d}"), i, (i + d) % size);
        }
    }
    for i in 0..size {
        for d1 in 0..=dmax {
            for d2 in 0..=dmax - d1 {
                b.set_compose(arr[i][d1], arr[(i + d1) % size][d2], arr[i][d1 + d2]);
            }
        }
    }
    let c = b.build().unwrap();
    let vp: Vec<usize> = (0..size).map(|i| (i + n) % size).collect();
    let mut ap = vec![0; c.num_arrows()];
    for i in 0..size {
        for d in 0..=dmax {
            ap[arr[i][d]] = arr[(i + n) % size][d];
        }
    }
    CategoryAction::generated(c, &[("s".into(), vp, ap)]).unwrap()
}

/// Orbit {g0, g1} carries an isomorphism pair, orbit {b0, b1} is discrete.
pub fn groupoid_and_antichain() -> CategoryAction {
    let mut b = CategoryBuilder::new();
    let g0 = b.vertex("g0");
    let g1 = b.vertex("g1");
    let b0 = b.vertex("b0");
    let b1 = b.vertex("b1");
    let f = b.arrow("f", g0, g1);
    let fi = b.arrow("f'", g1, g0);
    b.set_compose(f, fi, b.identity_of(g0));
    b.set_compose(fi, f, b.identity_of(g1));
    let c = b.build().unwrap();
    let vp = vec![g1, g0, b1, b0];
    let mut ap: Vec<usize> = c.arrow_ids().collect();
    for (x, y) in [("id_g0", "id_g1"), ("id_b0", "id_b1"), ("f", "f'")] {
        ap[c.a(x)] = c.a(y);
        ap[c.a(y)] = c.a(x);
    }
    CategoryAction::generated(c, &[("s".into(), vp, ap)]).unwrap()
}

/// Z_2 x chain with one arrow between (s, j) and (t, l) whenever j <= l;
/// Z_2 acts by left multiplication on the first factor.
pub fn z2_times_chain(h: usize) -> CategoryAction {
    let mut b = CategoryBuilder::new();
    let mut v = vec![vec![0; h + 1]; 2];
    for s in 0..2 {
        for j in 0..=h {
            v[s][j] = b.vertex(&format!("{s}_{j}"));
        }
    }
    let mut arr = std::collections::HashMap::new();
    for s in 0..2 {
        for j in 0..=h {
            for t in 0..2 {
                for l in j..=h {
                    let id = if s == t && j == l {
                        b.identity_of(v[s][j])
                    } else {
                        b.arrow(&format!("{s}_{j}>{t}_{l}"), v[s][j], v[t][l])
                    };
                    arr.insert((s, j, t, l), id);
                }
            }
        }
    }
    for (&(s, j, t, l), &x) in &arr {
        for (&(t2, l2, u, m), &y) in &arr {
            if (t2, l2) == (t, l) {
                b.set_compose(x, y, arr[&(s, j, u, m)]);
            }
        }
    }
    let c = b.build().unwrap();
    let flip = |n: &str| -> String {
        let s = if n.starts_with('0') { '1' } else { '0' };
        format!("{s}{}", &n[1..])
    };
    let vp: Vec<usize> = c.vertices().map(|x| c.v(&flip(c.vertex_name(x)))).collect();
    let ap: Vec<usize> = c.arrow_ids().map(|a| c.hom(vp[c.src(a)], vp[c.dst(a)])[0]).collect();
    CategoryAction::generated(c, &[("l".into(), vp, ap)]).unwrap()
}

/// Orbit-level window on Z_n: arrows (i, d) for 0 <= d <= dmax named
/// `p{i}+{d}`, composition while the length stays within dmax, annotated in
/// Z by how many times the arrow wraps, shifted by per-vertex offsets.
pub fn zn_fold(n: usize, dmax: usize, offsets: &[i64]) -> Representation {
    assert_eq!(offsets.len(), n);
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
            let wraps = ((i + d) / n) as i64;
            labels[arr[i][d]] = GroupElem::Vector(vec![wraps + offsets[i] - offsets[(i + d) % n]]);
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

/// Two irreducible arrows x -> y that agree after the loop m at y.
pub fn two_routes() -> Category {
    let mut b = CategoryBuilder::new();
    let x = b.vertex("x");
    let y = b.vertex("y");
    let a = b.arrow("a", x, y);
    let a2 = b.arrow("a'", x, y);
    let bb = b.arrow("b", x, y);
    let m = b.arrow("m", y, y);
    b.set_compose(m, m, m);
    b.set_compose(a, m, bb);
    b.set_compose(a2, m, bb);
    b.set_compose(bb, m, bb);
    b.build().unwrap()
}

/// One vertex with an idempotent loop, under the trivial group.
pub fn idempotent_loop() -> CategoryAction {
    let mut b = CategoryBuilder::new();
    let x = b.vertex("x");
    let e = b.arrow("e", x, x);
    b.set_compose(e, e, e);
    CategoryAction::trivial(b.build().unwrap())
}
