//! Acceptance suite. Every criterion prints one PASS/FAIL line with its
//! elapsed time; the target exits non-zero if any criterion fails or
//! exceeds its runtime bound.

use std::collections::{BTreeMap, BTreeSet};
use std::time::{Duration, Instant};

use cat_core::{check_morphism, find_isomorphism, validate_category, CatMorphism, Category, Partition};
use flat::{
    check_flat_iso, check_r_homomorphism, check_split_laws, find_layer_shift, flat_rep_from_action,
    flat_rep_from_representation, flat_to_plain, product_decomposition, r_n_maps, singleton_extension, unfold_flat,
    unfolding_map, FlatBundle, FlatCategoryRepresentation, RightGroupalCategory,
};
use group_action::{check_action, is_foldable, AnnotationGroup, CategoryAction, GroupElem};
use musicgen::{
    all_tone_systems, gen_chain_bundle, gen_fix_k, gen_lattice_window, gen_product, gen_shepard, gen_tet, gen_zn_cover,
    gen_zn_fold, tet_bundle, tet_rotation,
};
use orbitfold::{choose_transversal, orbit_category, Strategy, Transversal};
use partialcat::{
    check_equivalence, flat_flags, relation_antisymmetry_witness, sigma_classes, PartialSubcategory, Tri,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use unfold::{induced_action, projection, verify_roundtrips};

const BUDGET: u64 = 1_000_000;
const SEED: u64 = 0x5eed_0f01d;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn ok<T, E: std::fmt::Debug>(r: Result<T, E>, what: &str) -> Result<T, String> {
    r.map_err(|e| format!("{what}: {e:?}"))
}

fn isomorphic(a: &Category, b: &Category) -> Result<bool, String> {
    Ok(ok(find_isomorphism(a, b, BUDGET), "isomorphism search")?.is_some())
}

fn non_identity(c: &Category) -> usize {
    c.arrow_ids().filter(|&a| !c.is_identity(a)).count()
}

fn z(k: i64) -> GroupElem {
    GroupElem::Vector(vec![k])
}

fn z_range(lo: i64, hi: i64) -> Vec<GroupElem> {
    (lo..=hi).map(z).collect()
}

/// Classes of a partition as a set of sets, independent of class order.
fn class_set(p: &Partition) -> BTreeSet<BTreeSet<usize>> {
    p.classes().iter().map(|c| c.iter().copied().collect()).collect()
}

/// Kernel of a map given as a vector, as a set of fibres.
fn kernel(map: &[usize]) -> BTreeSet<BTreeSet<usize>> {
    let mut fibres: BTreeMap<usize, BTreeSet<usize>> = BTreeMap::new();
    for (i, &j) in map.iter().enumerate() {
        fibres.entry(j).or_default().insert(i);
    }
    fibres.into_values().collect()
}

fn path_exists(k: &Category, names: &[&str], from: &str, to: &str) -> bool {
    let Some(arrows) = names.iter().map(|n| k.arrow_id(n)).collect::<Option<Vec<usize>>>() else {
        return false;
    };
    k.src(arrows[0]) == k.v(from)
        && arrows.windows(2).all(|w| k.dst(w[0]) == k.src(w[1]))
        && k.dst(*arrows.last().unwrap()) == k.v(to)
}

fn criterion_1() -> Outcome {
    let (k, diagonal, product) = ok(gen_fix_k(), "gen_fix_k")?;
    let w = is_foldable(&diagonal);
    let w = w.witness().ok_or("diagonal action reported foldable")?;
    let arrows = [&w.first.0, &w.first.1, &w.second.0, &w.second.1];
    let composites = [&w.first_composite, &w.second_composite];
    let right = ["c", "d"];
    let composite_names = ["a*c", "a*d", "b*c", "b*d"];
    ensure(arrows.iter().any(|a| right.contains(&a.as_str())), || {
        format!("witness {w} avoids c and d")
    })?;
    let defined: Vec<&str> = composites.iter().filter_map(|c| c.as_deref()).collect();
    ensure(
        !defined.is_empty() && defined.iter().all(|a| composite_names.contains(a)),
        || format!("witness {w} has foreign composites"),
    )?;
    ensure(is_foldable(&product).holds(), || "product action not foldable".into())?;
    let orbit = ok(orbit_category(&product), "orbit category")?;
    let (v, a) = (orbit.category.num_vertices(), non_identity(&orbit.category));
    ensure(v == 3 && a == 3, || {
        format!("orbit category has {v} vertices, {a} arrows")
    })?;
    ensure(k.num_vertices() == 5, || "fixture size".into())?;
    Ok(format!("witness {w}; orbit category 3 vertices, 3 arrows"))
}

fn criterion_2() -> Outcome {
    let r = ok(gen_lattice_window(), "lattice window")?;
    let k = &r.category;
    ensure(
        path_exists(
            k,
            &["(0,0)+(0,1)", "(0,1)+(1,0)", "(1,1)+(1,0)", "(2,1)+(1,0)"],
            "(0,0)",
            "(3,1)",
        ),
        || "first path missing".into(),
    )?;
    ensure(
        path_exists(
            k,
            &[
                "(0,0)+(1,0)",
                "(1,0)+(1,0)",
                "(2,0)+(1,0)",
                "(3,0)+(0,1)",
                "(3,1)+(1,0)",
            ],
            "(0,0)",
            "(0,1)",
        ),
        || "second path missing".into(),
    )?;
    let (x, y) =
        relation_antisymmetry_witness(k, &PartialSubcategory::whole(k)).ok_or("factor relation is antisymmetric")?;
    ensure(x != y, || "witness is a single vertex".into())?;
    ensure(validate_category(k).is_valid(), || format!("{}", validate_category(k)))?;
    ensure(r.check().is_valid(), || format!("{}", r.check()))?;
    Ok(format!(
        "{} <-> {} both reachable; category valid",
        k.vertex_name(x),
        k.vertex_name(y)
    ))
}

/// Seeded corpus of chain-bundle and product actions, each with a random
/// transversal. Orbit categories stay within 12 vertices.
fn corpus() -> Result<Vec<(String, CategoryAction, Transversal)>, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut out = Vec::new();
    for _ in 0..120 {
        let k = rng.gen_range(1..=4usize);
        let (name, act) = if rng.gen_bool(0.5) {
            let h = rng.gen_range(0..=11usize);
            (
                format!("chain_bundle(k={k}, h={h})"),
                ok(gen_chain_bundle(k, h), "chain bundle")?,
            )
        } else {
            let h = rng.gen_range(0..=5usize);
            (format!("product(k={k}, h={h})"), ok(gen_product(k, h), "product")?)
        };
        let (vo, _) = act.orbits();
        let c = act.category();
        let names: Vec<String> = vo
            .classes()
            .iter()
            .map(|cls| c.vertex_name(cls[rng.gen_range(0..cls.len())]).to_string())
            .collect();
        let t = ok(choose_transversal(&act, &Strategy::Given(names)), "transversal")?;
        out.push((name, act, t));
    }
    Ok(out)
}

fn criterion_3(corpus: &[(String, CategoryAction, Transversal)]) -> Outcome {
    let mut max_orbit = 0;
    for (name, act, t) in corpus {
        let orbit_size = act.orbits().0.num_classes();
        max_orbit = max_orbit.max(orbit_size);
        ensure(orbit_size <= 12, || format!("{name}: {orbit_size} orbit vertices"))?;
        let rt = ok(verify_roundtrips(act, t, BUDGET), name)?;
        ensure(rt.refold_ok && rt.unfold_ok, || {
            format!("{name}: refold {} unfold {}", rt.refold_ok, rt.unfold_ok)
        })?;
    }
    Ok(format!(
        "{} actions, both round trips hold; largest orbit category {max_orbit}",
        corpus.len()
    ))
}

fn criterion_4(corpus: &[(String, CategoryAction, Transversal)]) -> Outcome {
    for (name, act, t) in corpus {
        let (rep, _) = ok(orbitfold::build_representation(act, t), name)?;
        let u = ok(unfold::unfold(&rep), name)?;
        let pi = projection(&u);
        let induced = ok(induced_action(&u), name)?;
        let (vo, ao) = induced.orbits();
        ensure(kernel(&pi.vertex_map) == class_set(&vo), || {
            format!("{name}: vertex kernel differs")
        })?;
        ensure(kernel(&pi.arrow_map) == class_set(&ao), || {
            format!("{name}: arrow kernel differs")
        })?;
    }
    Ok(format!("kernel equals orbit partition on {} unfoldings", corpus.len()))
}

fn criterion_5(corpus: &[(String, CategoryAction, Transversal)]) -> Outcome {
    let mut compositions = 0usize;
    for (name, act, t) in corpus {
        let (rep, _) = ok(orbitfold::build_representation(act, t), name)?;
        let u = ok(unfold::unfold(&rep), name)?;
        let r = validate_category(&u.category);
        ensure(r.is_valid(), || format!("{name}: {r}"))?;
        let induced = ok(induced_action(&u), name)?;
        let r = check_action(&induced);
        ensure(r.is_valid(), || format!("{name}: {r}"))?;
        compositions += u.category.compositions().len();
    }
    Ok(format!(
        "{} unfoldings, {compositions} composites checked, zero violations",
        corpus.len()
    ))
}

fn criterion_6() -> Outcome {
    for n in [3usize, 4, 5, 12] {
        let r = ok(gen_zn_fold(n, 2 * n), "zn fold")?;
        let k = &r.category;
        let split = ok(r_n_maps(k), "split maps")?;
        let rep = check_split_laws(k, &split);
        ensure(rep.is_valid(), || format!("n={n}: {rep}"))?;
        let b = ok(
            flat_rep_from_representation(&r, RightGroupalCategory::orthant(1), None),
            "flat",
        )?;
        let f = &b.flat.category;
        ensure(!f.is_partial() && f.is_simple(), || {
            format!("n={n}: flat category not simple and total")
        })?;
        ensure(f.num_arrows() == n * n, || {
            format!("n={n}: {} flat arrows", f.num_arrows())
        })?;
        // Concatenation associativity checked directly over all triples.
        for x in f.arrow_ids() {
            for y in f.out_arrows(f.dst(x)).iter().copied() {
                let xy = f.compose(x, y).ok_or("concatenation undefined")?;
                for zz in f.out_arrows(f.dst(y)).iter().copied() {
                    let l = f.compose(xy, zz);
                    let rr = f.compose(y, zz).and_then(|yz| f.compose(x, yz));
                    ensure(l.is_some() && l == rr, || {
                        format!("n={n}: concatenation not associative")
                    })?;
                }
            }
        }
        let rep = validate_category(f);
        ensure(rep.is_valid(), || format!("n={n}: {rep}"))?;
        let rep = check_r_homomorphism(k, &b.flat);
        ensure(rep.is_valid(), || format!("n={n}: {rep}"))?;
        let p = ok(product_decomposition(&b), "product decomposition")?;
        let ext = &p.extension.category;
        let fwd = check_morphism(&p.to_orbit, ext, k);
        let inv = p.to_orbit.inverse().ok_or("product map not bijective")?;
        let back = check_morphism(&inv, k, ext);
        ensure(fwd.valid && back.valid && p.to_orbit.is_bijective(k), || {
            format!("n={n}: product map rejected")
        })?;
    }
    Ok("split laws, concatenation, simplicity and product isomorphism for n = 3, 4, 5, 12".into())
}

fn bundle_of(act: &CategoryAction, t: &Transversal) -> Result<FlatBundle, String> {
    ok(flat_rep_from_action(act, t, t.chosen[0]), "flat representation")
}

fn first(act: &CategoryAction) -> Result<Transversal, String> {
    ok(choose_transversal(act, &Strategy::First), "transversal")
}

fn flat_corpus() -> Result<Vec<(String, FlatCategoryRepresentation)>, String> {
    let mut out = Vec::new();
    for n in [3usize, 4, 5, 12] {
        out.push((format!("tet({n})"), ok(tet_bundle(n), "tet")?.rep));
    }
    for (n, m, d) in [(3usize, 5usize, 5usize), (2, 7, 5), (4, 5, 7)] {
        let act = ok(gen_zn_cover(n, m, d), "cover")?;
        out.push((format!("zn_cover({n},{m},{d})"), bundle_of(&act, &first(&act)?)?.rep));
    }
    Ok(out)
}

fn perturb(g: &AnnotationGroup, e: &GroupElem, rng: &mut ChaCha8Rng) -> GroupElem {
    loop {
        let cand = match e {
            GroupElem::Vector(v) => {
                let mut w = v.clone();
                let i = rng.gen_range(0..w.len());
                w[i] += [-3, -2, -1, 1, 2, 3][rng.gen_range(0..6)];
                g.normalize(GroupElem::Vector(w))
            }
            GroupElem::Finite(i) => {
                let order = g.enumerate().map_or(1, |l| l.len());
                GroupElem::Finite((i + rng.gen_range(1..order.max(2))) % order.max(1))
            }
        };
        if cand != *e {
            return cand;
        }
    }
}

fn criterion_7() -> Outcome {
    let corpus = flat_corpus()?;
    for (name, f) in &corpus {
        let ext = ok(singleton_extension(f, &f.loop_support(), None), name)?;
        let r = validate_category(&ext.category);
        ensure(r.is_valid(), || format!("{name}: {r}"))?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 7);
    let mut detected = 0;
    let trials = 50;
    let mut laws = BTreeSet::new();
    for trial in 0..trials {
        let (name, f) = &corpus[rng.gen_range(0..corpus.len())];
        let mut bad = f.clone();
        let g = f.group().clone();
        let what = if bad.c.is_empty() || rng.gen_bool(0.5) {
            let key = *bad.n.keys().nth(rng.gen_range(0..bad.n.len())).ok_or("empty cocycle")?;
            let v = perturb(&g, &bad.n[&key], &mut rng);
            bad.n.insert(key, v);
            "n"
        } else {
            let key = bad
                .c
                .keys()
                .nth(rng.gen_range(0..bad.c.len()))
                .cloned()
                .ok_or("empty exchange")?;
            let v = perturb(&g, &bad.c[&key], &mut rng);
            bad.c.insert(key, v);
            "C"
        };
        let caught = match singleton_extension(&bad, &bad.loop_support(), None) {
            Err(flat::FlatError::AxiomViolation { law, witness }) if !witness.is_empty() => {
                laws.insert(law);
                true
            }
            Err(_) => false,
            Ok(ext) => {
                let r = validate_category(&ext.category);
                if let Some(v) = r.violations.first() {
                    laws.insert(v.law.clone());
                }
                !r.is_valid()
            }
        };
        ensure(caught, || {
            format!("trial {trial}: {what} perturbation of {name} undetected")
        })?;
        detected += 1;
    }
    Ok(format!(
        "{} derived extensions valid; {detected}/{trials} perturbations detected via {}",
        corpus.len(),
        laws.into_iter().collect::<Vec<_>>().join(", ")
    ))
}

fn criterion_8() -> Outcome {
    for (name, f) in flat_corpus()? {
        let r = f.check();
        ensure(r.is_valid(), || format!("{name}: {r}"))?;
    }
    let mut finite = Vec::new();
    for (n, m, d) in [(3usize, 5usize, 5usize), (2, 7, 5), (4, 5, 7), (12, 3, 23)] {
        finite.push((format!("zn_cover({n},{m},{d})"), ok(gen_zn_cover(n, m, d), "cover")?));
    }
    for (k, h) in [(3usize, 4usize), (2, 2)] {
        finite.push((format!("chain_bundle({k},{h})"), ok(gen_chain_bundle(k, h), "chain")?));
    }
    for (name, act) in &finite {
        let b = bundle_of(act, &first(act)?)?;
        let r = b.rep.check();
        ensure(r.is_valid(), || format!("{name}: {r}"))?;
        let fu = ok(unfold_flat(&b.rep, None), name)?;
        let pu = ok(unfold::unfold(&b.orbit), name)?;
        let map = flat_to_plain(&b, &fu, &pu).ok_or_else(|| format!("{name}: no unfolding map"))?;
        ensure(
            check_morphism(&map, &fu.category, &pu.category).valid && map.is_bijective(&pu.category),
            || format!("{name}: flat and plain unfoldings differ"),
        )?;
        ensure(isomorphic(&pu.category, act.category())?, || {
            format!("{name}: unfolding not isomorphic")
        })?;
    }
    Ok(format!(
        "axioms on the flat corpus; flat = plain = original on {} finite instances",
        finite.len()
    ))
}

/// The 12-TET window annotated through the transversal `{i + 12 o_i}`.
fn shifted_tet(offsets: &[i64]) -> Result<FlatCategoryRepresentation, String> {
    let mut r = ok(gen_zn_fold(12, 24), "zn fold")?;
    let k = r.category.clone();
    for a in k.arrow_ids() {
        let w = r.annotation.labels[a].coords()[0];
        r.annotation.labels[a] = z(w + offsets[k.src(a)] - offsets[k.dst(a)]);
    }
    Ok(ok(
        flat_rep_from_representation(&r, RightGroupalCategory::orthant(1), None),
        "flat",
    )?
    .rep)
}

fn criterion_9() -> Outcome {
    let offsets = [0, 1, -1, 2, 0, -2, 1, 0, 2, -1, 0, 1];
    let f1 = shifted_tet(&[0; 12])?;
    let f2 = shifted_tet(&offsets)?;
    let phi = CatMorphism::identity(&f2.base);
    let iso = find_layer_shift(&f1, &f2, &phi).ok_or("no layer shift between the 12-TET transversals")?;
    ensure(iso.shifts == offsets.iter().map(|&o| z(o)).collect::<Vec<_>>(), || {
        "layer shifts differ from the transversal offsets".into()
    })?;
    let r = check_flat_iso(&iso, &f1, &f2);
    ensure(r.is_valid(), || format!("{r}"))?;
    let u2 = ok(unfold_flat(&f2, Some(&z_range(0, 3))), "unfold")?;
    let u1 = ok(unfold_flat(&f1, Some(&z_range(-3, 6))), "unfold")?;
    let map = unfolding_map(&iso, &f1, &f2, &u1, &u2).ok_or("no unfolding map")?;
    ensure(check_morphism(&map, &u2.category, &u1.category).valid, || {
        "unfolding map not a functor".into()
    })?;
    let images: BTreeSet<usize> = map.arrow_map.iter().copied().collect();
    ensure(images.len() == u2.category.num_arrows(), || {
        "unfolding map not injective".into()
    })?;

    // Finite cover of the 12-TET window: two genuine transversals.
    let act = ok(gen_zn_cover(12, 3, 23), "cover")?;
    let names: Vec<String> = (0..12).map(|i| format!("v{}", i + 12 * (i * 7 % 3))).collect();
    let t2 = ok(choose_transversal(&act, &Strategy::Given(names)), "transversal")?;
    let b1 = bundle_of(&act, &first(&act)?)?;
    let b2 = bundle_of(&act, &t2)?;
    let phi = CatMorphism::identity(&b2.rep.base);
    ensure(check_morphism(&phi, &b2.rep.base, &b1.rep.base).valid, || {
        "flat bases differ".into()
    })?;
    let iso = find_layer_shift(&b1.rep, &b2.rep, &phi).ok_or("no layer shift on the cover")?;
    let r = check_flat_iso(&iso, &b1.rep, &b2.rep);
    ensure(r.is_valid(), || format!("cover: {r}"))?;
    let fu1 = ok(unfold_flat(&b1.rep, None), "unfold")?;
    let fu2 = ok(unfold_flat(&b2.rep, None), "unfold")?;
    let map = unfolding_map(&iso, &b1.rep, &b2.rep, &fu1, &fu2).ok_or("no unfolding map on the cover")?;
    ensure(
        check_morphism(&map, &fu2.category, &fu1.category).valid && map.is_bijective(&fu1.category),
        || "cover unfoldings not isomorphic through the layer shift".into(),
    )?;
    Ok("layer shift accepted on the 12-TET window and on its threefold cover; unfoldings isomorphic".into())
}

fn criterion_10() -> Outcome {
    let f = ok(gen_tet(12), "tet")?;
    let s = ok(tet_rotation(&f.completion.base, 12), "rotation")?;
    let flags = flat_flags(&f, Some(&s), BUDGET);
    let wanted = [
        ("faithful", flags.faithful),
        ("simple", flags.simple),
        ("antisymmetric", flags.antisymmetric),
        ("translatively symmetric", flags.translatively_s_symmetric),
        ("complete", flags.complete),
    ];
    for (name, v) in wanted {
        ensure(v == Tri::True, || format!("12-TET {name}: {v}"))?;
    }
    let sh = ok(gen_shepard(12), "shepard")?;
    let k = &sh.completion.base;
    let s = ok(tet_rotation(k, 12), "rotation")?;
    let flags = flat_flags(&sh, Some(&s), BUDGET);
    ensure(flags.antisymmetric == Tri::True, || {
        format!("Shepard antisymmetric: {}", flags.antisymmetric)
    })?;
    ensure(flags.ordered == Tri::False, || {
        format!("Shepard ordered: {}", flags.ordered)
    })?;
    // Steps d with 0 <= d and 2d < 12.
    let expected = (0..12).filter(|d| 2 * d < 12).count();
    for v in k.vertices() {
        let out = k.out_arrows(v).iter().filter(|a| sh.part.arrows.contains(a)).count();
        ensure(out == expected, || {
            format!("Shepard out-degree {out} at {}", k.vertex_name(v))
        })?;
    }
    Ok(format!(
        "12-TET all five flags true; Shepard antisymmetric, not ordered, out-degree {expected}"
    ))
}

fn criterion_11() -> Outcome {
    let mut dropped = Vec::new();
    let systems = ok(all_tone_systems(), "tone systems")?;
    for (name, t) in &systems {
        let r = check_equivalence(&t.sigma_relation());
        ensure(r.is_valid(), || format!("{name}: {r}"))?;
        let classes = ok(sigma_classes(t), name)?;
        if classes.num_classes() < t.len() {
            dropped.push(format!("{name} {}->{}", t.len(), classes.num_classes()));
        }
    }
    ensure(dropped.iter().any(|d| d.starts_with("glued-tetrachords 8->7")), || {
        format!("no gluing drop: {dropped:?}")
    })?;
    Ok(format!(
        "{} systems are equivalences; drops: {}",
        systems.len(),
        dropped.join(", ")
    ))
}

fn timed(id: usize, limit: Option<Duration>, f: impl FnOnce() -> Outcome) -> bool {
    let start = Instant::now();
    let outcome = f();
    let elapsed = start.elapsed();
    let outcome = match (outcome, limit) {
        (Ok(_), Some(l)) if elapsed > l => Err(format!("took {elapsed:.2?}, bound {l:?}")),
        (o, _) => o,
    };
    match &outcome {
        Ok(detail) => println!("criterion {id:>2}: PASS ({elapsed:.2?}) {detail}"),
        Err(why) => println!("criterion {id:>2}: FAIL ({elapsed:.2?}) {why}"),
    }
    outcome.is_ok()
}

fn main() {
    let secs = Duration::from_secs;
    let mut passed = Vec::new();
    passed.push(timed(1, Some(secs(1)), criterion_1));
    passed.push(timed(2, Some(secs(5)), criterion_2));
    let start = Instant::now();
    let corpus = corpus();
    let build = start.elapsed();
    match corpus {
        Ok(corpus) => {
            passed.push(timed(3, Some(secs(120) - build), || criterion_3(&corpus)));
            passed.push(timed(4, None, || criterion_4(&corpus)));
            passed.push(timed(5, None, || criterion_5(&corpus)));
        }
        Err(e) => {
            for id in 3..=5 {
                println!("criterion {id:>2}: FAIL corpus: {e}");
                passed.push(false);
            }
        }
    }
    passed.push(timed(6, Some(secs(60)), criterion_6));
    passed.push(timed(7, None, criterion_7));
    passed.push(timed(8, None, criterion_8));
    passed.push(timed(9, None, criterion_9));
    passed.push(timed(10, None, criterion_10));
    passed.push(timed(11, None, criterion_11));
    let failed: Vec<usize> = passed
        .iter()
        .enumerate()
        .filter(|(_, &p)| !p)
        .map(|(i, _)| i + 1)
        .collect();
    if failed.is_empty() {
        println!("acceptance: all {} criteria passed", passed.len());
    } else {
        println!("acceptance: failed criteria {failed:?}");
        std::process::exit(1);
    }
}
