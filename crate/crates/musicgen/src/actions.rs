//! Finite group actions used as fixtures.

use std::collections::HashMap;

use cat_core::{Category, CategoryBuilder};
use group_action::{check_action, is_foldable, is_semiregular, CategoryAction, Generator};

use crate::error::GenError;

/// Largest parameter accepted by the size-driven generators.
pub const MAX_SIZE: usize = 64;

pub(crate) fn bound(name: &str, v: usize, lo: usize, hi: usize) -> Result<(), GenError> {
    if v < lo || v > hi {
        return Err(GenError::Parameter(format!("{name} = {v} outside {lo}..={hi}")));
    }
    Ok(())
}

/// Rejects actions failing the action laws, semi-regularity or
/// foldability.
pub fn validated(act: CategoryAction) -> Result<CategoryAction, GenError> {
    let r = check_action(&act);
    if let Some(v) = r.violations.first() {
        return Err(GenError::InvalidAction(v.to_string()));
    }
    if !is_semiregular(&act).holds() {
        return Err(GenError::InvalidAction("not semi-regular".into()));
    }
    if !is_foldable(&act).holds() {
        return Err(GenError::InvalidAction("not foldable".into()));
    }
    Ok(act)
}

fn swap_pairs(list: &[(&str, &str)]) -> Vec<(String, String)> {
    list.iter()
        .flat_map(|&(x, y)| [(x.to_string(), y.to_string()), (y.to_string(), x.to_string())])
        .collect()
}

/// Five vertices, `a, b` into 3 and `c, d` out of it, with all four
/// composites. Returns the actions generated by `phi psi` and by
/// `phi, psi`. Neither is semi-regular (vertex 3 is fixed), so they are
/// only checked against the action laws.
pub fn gen_fix_k() -> Result<(Category, CategoryAction, CategoryAction), GenError> {
    let mut b = CategoryBuilder::new();
    let v: Vec<usize> = (1..=5).map(|i| b.vertex(&i.to_string())).collect();
    let a = b.arrow("a", v[0], v[2]);
    let bb = b.arrow("b", v[1], v[2]);
    let c = b.arrow("c", v[2], v[3]);
    let d = b.arrow("d", v[2], v[4]);
    for (x, xn, s) in [(a, "a", v[0]), (bb, "b", v[1])] {
        for (y, yn, t) in [(c, "c", v[3]), (d, "d", v[4])] {
            let xy = b.arrow(&format!("{xn}*{yn}"), s, t);
            b.set_compose(x, y, xy);
        }
    }
    let k = b.build()?;
    let phi = Generator {
        name: "phi".into(),
        vertices: swap_pairs(&[("1", "2")]),
        arrows: swap_pairs(&[("id_1", "id_2"), ("a", "b"), ("a*c", "b*c"), ("a*d", "b*d")]),
    };
    let psi = Generator {
        name: "psi".into(),
        vertices: swap_pairs(&[("4", "5")]),
        arrows: swap_pairs(&[("id_4", "id_5"), ("c", "d"), ("a*c", "a*d"), ("b*c", "b*d")]),
    };
    let phipsi = Generator {
        name: "phipsi".into(),
        vertices: swap_pairs(&[("1", "2"), ("4", "5")]),
        arrows: swap_pairs(&[
            ("id_1", "id_2"),
            ("id_4", "id_5"),
            ("a", "b"),
            ("c", "d"),
            ("a*c", "b*d"),
            ("a*d", "b*c"),
        ]),
    };
    let diagonal = CategoryAction::generated_by_names(k.clone(), &[phipsi])?;
    let product = CategoryAction::generated_by_names(k.clone(), &[phi, psi])?;
    for act in [&diagonal, &product] {
        if let Some(v) = check_action(act).violations.first() {
            return Err(GenError::InvalidAction(v.to_string()));
        }
    }
    Ok((k, diagonal, product))
}

/// `k` disjoint chains `c{i}_0 < ... < c{i}_h`, rotated by `Z_k`.
pub fn gen_chain_bundle(k: usize, h: usize) -> Result<CategoryAction, GenError> {
    bound("k", k, 1, MAX_SIZE)?;
    bound("h", h, 0, MAX_SIZE)?;
    let mut b = CategoryBuilder::new();
    let v: Vec<Vec<usize>> = (0..k)
        .map(|i| (0..=h).map(|j| b.vertex(&format!("c{i}_{j}"))).collect())
        .collect();
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
    let c = b.build()?;
    let vp: Vec<usize> = (0..k)
        .flat_map(|i| (0..=h).map(move |j| (i, j)))
        .map(|(i, j)| v[(i + 1) % k][j])
        .collect();
    let mut ap = vec![0; c.num_arrows()];
    for i in 0..k {
        for j in 0..=h {
            for l in j..=h {
                ap[arr[i][j][l]] = arr[(i + 1) % k][j][l];
            }
        }
    }
    validated(CategoryAction::generated(c, &[("r".into(), vp, ap)])?)
}

/// `Z_{nm}` with arrows `v{i}+{d}` for `d <= dmax`, composable while the
/// length stays within `dmax`; `Z_m` acts by `i -> i + n`.
pub fn gen_zn_cover(n: usize, m: usize, dmax: usize) -> Result<CategoryAction, GenError> {
    bound("n", n, 1, MAX_SIZE)?;
    bound("m", m, 1, MAX_SIZE)?;
    let size = n * m;
    bound("dmax", dmax, 0, size - 1)?;
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
    let c = b.build()?;
    let vp: Vec<usize> = (0..size).map(|i| (i + n) % size).collect();
    let mut ap = vec![0; c.num_arrows()];
    for i in 0..size {
        for d in 0..=dmax {
            ap[arr[i][d]] = arr[(i + n) % size][d];
        }
    }
    validated(CategoryAction::generated(c, &[("s".into(), vp, ap)])?)
}

/// `Z_k` times the chain `0 < ... < h`: one arrow `(s,j) -> (t,l)` whenever
/// `j <= l`, with `Z_k` rotating the first factor.
pub fn gen_product(k: usize, h: usize) -> Result<CategoryAction, GenError> {
    bound("k", k, 1, 16)?;
    bound("h", h, 0, 16)?;
    let mut b = CategoryBuilder::new();
    let v: Vec<Vec<usize>> = (0..k)
        .map(|s| (0..=h).map(|j| b.vertex(&format!("{s}_{j}"))).collect())
        .collect();
    let mut arr: HashMap<(usize, usize, usize, usize), usize> = HashMap::new();
    for s in 0..k {
        for j in 0..=h {
            for t in 0..k {
                for l in j..=h {
                    let id = if (s, j) == (t, l) {
                        b.identity_of(v[s][j])
                    } else {
                        b.arrow(&format!("{s}_{j}>{t}_{l}"), v[s][j], v[t][l])
                    };
                    arr.insert((s, j, t, l), id);
                }
            }
        }
    }
    let mut keys: Vec<_> = arr.keys().copied().collect();
    keys.sort_unstable();
    for &(s, j, t, l) in &keys {
        for &(t2, l2, u, m) in &keys {
            if (t2, l2) == (t, l) {
                b.set_compose(arr[&(s, j, t, l)], arr[&(t, l, u, m)], arr[&(s, j, u, m)]);
            }
        }
    }
    let c = b.build()?;
    let vp: Vec<usize> = (0..k)
        .flat_map(|s| (0..=h).map(move |j| (s, j)))
        .map(|(s, j)| v[(s + 1) % k][j])
        .collect();
    let mut ap = vec![0; c.num_arrows()];
    for &(s, j, t, l) in &keys {
        ap[arr[&(s, j, t, l)]] = arr[&((s + 1) % k, j, (t + 1) % k, l)];
    }
    validated(CategoryAction::generated(c, &[("l".into(), vp, ap)])?)
}
