//! The exchange table `C`: for a loop `x` at `dom a`, `C(a, x)` is a loop
//! at `cod a` with `x * a = a * C(a, x)`.

use std::collections::BTreeMap;

use cat_core::{Category, ValidationReport};
use group_action::{is_right_normal, CategoryAction};
use orbitfold::{orbit_category, OrbitCategory};

use crate::error::FlatError;

/// Keyed by `(a, x)`; pairs with `x * a` undefined have no entry.
pub type ExchangeTable = BTreeMap<(usize, usize), usize>;

/// Exchange table read off `k` directly, choosing the least-named loop
/// when several qualify.
pub fn derive_c_orbit(k: &Category) -> Result<ExchangeTable, FlatError> {
    let mut out = ExchangeTable::new();
    for a in k.arrow_ids() {
        let (x0, y0) = (k.src(a), k.dst(a));
        for x in k.loops_at(x0) {
            let Some(xa) = k.compose(x, a) else { continue };
            let best = k
                .loops_at(y0)
                .into_iter()
                .filter(|&y| k.compose(a, y) == Some(xa))
                .min_by(|&p, &q| k.arrow_name(p).cmp(k.arrow_name(q)));
            match best {
                Some(y) => {
                    out.insert((a, x), y);
                }
                None => {
                    return Err(FlatError::NotRightNormal(format!(
                        "{} after {}",
                        k.arrow_name(a),
                        k.arrow_name(x)
                    )))
                }
            }
        }
    }
    Ok(out)
}

/// Exchange table on the orbit category, pushed down from the C' table of
/// a right-normal action and checked against the orbit composition.
pub fn derive_c(act: &CategoryAction) -> Result<(OrbitCategory, ExchangeTable), FlatError> {
    let orbit = orbit_category(act)?;
    let rn = is_right_normal(act)?;
    if let Some((a, x)) = rn.failure {
        return Err(FlatError::NotRightNormal(format!("{a} after {x}")));
    }
    let k = &orbit.category;
    let q = |a: usize| orbit.projection.arrow_map[a];
    let mut out = ExchangeTable::new();
    for (&(a, x), e) in &rn.table.entries {
        out.entry((q(a), q(x))).or_insert(q(e.value));
    }
    for (&(a, x), &y) in &out {
        let ok = k.src(x) == k.src(a) && k.dst(x) == k.src(a) && k.src(y) == k.dst(a) && k.dst(y) == k.dst(a);
        if !ok || k.compose(x, a).is_none() || k.compose(x, a) != k.compose(a, y) {
            return Err(FlatError::NotRightNormal(format!(
                "{} after {}",
                k.arrow_name(a),
                k.arrow_name(x)
            )));
        }
    }
    Ok((orbit, out))
}

/// Laws of an exchange table on `k`.
///
/// Law tags: `exchange` (`x * a = a * C(a, x)`), `exchange-unit`
/// (`C(a, id) = id`), `exchange-identity` (`C(id, x) = x`),
/// `exchange-product` (`C(a, x * y) = C(a, x) * C(a, y)` where all
/// entries exist).
pub fn check_exchange_laws(k: &Category, c: &ExchangeTable) -> ValidationReport {
    let mut rep = ValidationReport::default();
    let name = |a: usize| k.arrow_name(a).to_string();
    for (&(a, x), &y) in c {
        if k.compose(x, a).is_none() || k.compose(x, a) != k.compose(a, y) {
            rep.push("exchange", vec![name(a), name(x)]);
        }
        if k.is_identity(x) && y != k.identity(k.dst(a)) {
            rep.push("exchange-unit", vec![name(a)]);
        }
        if k.is_identity(a) && y != x {
            rep.push("exchange-identity", vec![name(a), name(x)]);
        }
    }
    for (&(a, x), &cx) in c {
        for w in k.loops_at(k.src(a)) {
            let (Some(xw), Some(&cw)) = (k.compose(x, w), c.get(&(a, w))) else {
                continue;
            };
            let Some(&cxw) = c.get(&(a, xw)) else { continue };
            if k.compose(cx, cw) != Some(cxw) {
                rep.push("exchange-product", vec![name(a), name(x), name(w)]);
            }
        }
    }
    rep
}
