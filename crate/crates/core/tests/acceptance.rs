//! Acceptance run: ten criteria, one PASS/FAIL line each on stderr.
//!
//! Expected values come from brute-force oracles in `common`, not from the
//! library routines under test.

mod common;

use std::collections::{BTreeMap, BTreeSet};
use std::io::Write;
use std::panic::AssertUnwindSafe;
use std::process::Command;
use std::time::{Duration, Instant};

use itertools::Itertools;
use keisler_lab::coloring::{brute_best, greedy_coloring, weight_of, WeightedHypergraph};
use keisler_lab::logic::{analyze_phi, to_dnf, Formula, PhiPartition, Term};
use keisler_lab::measures::selfcheck::{
    approximating_points, product_of_approximations, random_formula, random_graph, random_measure,
};
use keisler_lab::measures::FiniteMeasure;
use keisler_lab::rational::{from_int, ratio, Rational};
use keisler_lab::structures::{
    alpha_s, cyclic_graph, random_maximal_free, Feq2Structure, Hypergraph, DEFAULT_ALPHA_BUDGET,
};
use keisler_lab::witnesses::{adversary_witness, fam_witness, order_witness, tp2_witness, FamBudget, PathSelection};
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn run_criterion(id: usize, title: &str, limit: Option<Duration>, f: impl FnOnce() -> Check) -> bool {
    let start = Instant::now();
    let outcome = std::panic::catch_unwind(AssertUnwindSafe(f));
    let elapsed = start.elapsed();
    let (mut pass, mut detail) = match outcome {
        Ok(Ok(d)) => (true, d),
        Ok(Err(e)) => (false, e),
        Err(p) => (
            false,
            p.downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default(),
        ),
    };
    if let Some(limit) = limit {
        if elapsed >= limit {
            pass = false;
            detail = format!("{detail}; over the {limit:?} limit");
        }
    }
    let verdict = if pass { "PASS" } else { "FAIL" };
    // Bypasses the test harness capture so the lines always show.
    let _ = writeln!(
        std::io::stderr(),
        "{verdict} criterion {id:>2} {title}: {detail} [{elapsed:.2?}]"
    );
    pass
}

fn coloring_guarantee() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(101);
    for case in 0..200 {
        let r = 2 + case % 2;
        let n = rng.gen_range(r..=10);
        let h = WeightedHypergraph::random(n, r, 12, rng.gen_range(1..=7), &mut rng);
        let chi = greedy_coloring(&h);
        let total: Rational = h.weights().values().sum();
        let weight: Rational = h
            .weights()
            .iter()
            .filter(|(e, _)| common::splits(e, &chi.0))
            .map(|(_, w)| w)
            .sum();
        ensure(weight == weight_of(&h, &chi).unwrap(), || {
            format!("case {case}: weight_of disagrees")
        })?;
        let bound = common::maxcut_ratio(r) * &total;
        ensure(weight >= bound, || format!("case {case}: w(chi) = {weight} < {bound}"))?;
    }
    Ok("200 instances, r in {2,3}, |V| <= 10".into())
}

fn average_identity() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(202);
    for case in 0..50 {
        let r = 2 + case % 2;
        let n = rng.gen_range(r..=7);
        let h = WeightedHypergraph::random(n, r, 9, rng.gen_range(1..=5), &mut rng);
        let mut sum = Rational::zero();
        let mut count = 0u64;
        for colors in (0..n).map(|_| 0..r).multi_cartesian_product() {
            count += 1;
            sum += h
                .weights()
                .iter()
                .filter(|(e, _)| common::splits(e, &colors))
                .map(|(_, w)| w)
                .sum::<Rational>();
        }
        let mean = sum / from_int(count);
        let expected = common::maxcut_ratio(r) * h.weights().values().sum::<Rational>();
        ensure(mean == expected, || format!("case {case}: mean {mean} != {expected}"))?;
        let brute = brute_best(&h, 12).unwrap();
        ensure(brute.average == mean, || {
            format!("case {case}: brute_best average {} != {mean}", brute.average)
        })?;
    }
    Ok("50 instances, exact mean over all r^|V| colorings".into())
}

fn adversary_bound() -> Check {
    let ambients: Vec<Hypergraph> = (0..5)
        .map(|i| random_maximal_free(60, 3, 4, 500 + i).unwrap())
        .collect();
    for (i, g) in ambients.iter().enumerate() {
        ensure(common::brute_free(g, 4), || format!("ambient {i} contains a K4"))?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(303);
    let mut worst = Rational::one();
    for inst in 0..50 {
        let g = &ambients[inst % 5];
        let n = rng.gen_range(1..=30);
        let tuples: Vec<Vec<usize>> = (0..n)
            .map(|_| {
                let u = rng.gen_range(0..60);
                let v = if rng.gen_bool(0.1) { u } else { rng.gen_range(0..60) };
                vec![u, v]
            })
            .collect();
        let report = adversary_witness(&tuples, g, 4).map_err(|e| format!("instance {inst}: {e}"))?;
        let split: Vec<Vec<usize>> = serde_json::from_value(report.witness["split"].clone()).unwrap();
        let b = report.witness["b"].as_u64().unwrap() as usize;
        ensure(b == 60, || format!("instance {inst}: b = {b}"))?;
        let links: BTreeSet<(usize, usize)> = split.iter().map(|s| (s[0].min(s[1]), s[0].max(s[1]))).collect();
        let linked = |u: usize, v: usize| links.contains(&(u.min(v), u.max(v)));
        let violated = tuples.iter().filter(|t| t[0] == t[1] || linked(t[0], t[1])).count();
        let fraction = ratio(violated as i64, n as i64);
        ensure(fraction >= ratio(1, 2), || {
            format!("instance {inst}: fraction {fraction}")
        })?;
        worst = worst.min(fraction.clone());
        // A K4 through b needs a triangle of links that is also an edge.
        let clique = (0..60)
            .combinations(3)
            .any(|t| linked(t[0], t[1]) && linked(t[0], t[2]) && linked(t[1], t[2]) && g.has_edge(&t));
        ensure(!clique, || format!("instance {inst}: extension has a K4 through b"))?;
        ensure(report.all_hold(), || format!("instance {inst}: a certification failed"))?;
        let reported = &report.certified[2].lhs;
        ensure(*reported == fraction, || {
            format!("instance {inst}: reported fraction {reported} vs {fraction}")
        })?;
    }
    Ok(format!("50 instances, smallest violated fraction {worst}"))
}

fn fam_pipeline() -> Check {
    let g = cyclic_graph(13, &[1, 5]).unwrap();
    for i in 0..13 {
        for j in 0..13 {
            let d = (j + 13 - i) % 13;
            ensure(g.adjacent(i, j) == [1, 5, 8, 12].contains(&d), || {
                format!("circulant edge {i}-{j} wrong")
            })?;
        }
    }
    ensure(common::brute_free(&g, 3), || "G has a triangle".into())?;
    let alpha = common::brute_alpha(&g, 3);
    ensure(alpha == 4, || format!("alpha_3(G) = {alpha}"))?;

    let ambient = random_maximal_free(200, 2, 3, 9).unwrap();
    let phi = PhiPartition::infer("!E(x1,y1) & x1 != y1".parse().unwrap());
    let report = fam_witness(&phi, &ratio(4, 5), &ambient, &g, 3, FamBudget::default()).map_err(|e| e.to_string())?;
    let points: Vec<usize> = serde_json::from_value(report.witness["points"].clone()).unwrap();
    ensure(points.iter().all_unique() && points.len() == 13, || {
        "points are not 13 distinct vertices".into()
    })?;
    for i in 0..13 {
        for j in i + 1..13 {
            ensure(ambient.adjacent(points[i], points[j]) == g.adjacent(i, j), || {
                "embedding is not induced".into()
            })?;
        }
    }
    // p_E gives φ(x; b) value 1 for every b, so the error is |Z|/13.
    let mut max_z = 0;
    for b in 0..200 {
        let z = points.iter().filter(|&&a| a == b || ambient.adjacent(a, b)).count();
        ensure(z <= 1 + alpha, || format!("b = {b}: |Z| = {z} > 5"))?;
        max_z = max_z.max(z);
    }
    let sup = ratio(max_z as i64, 13);
    ensure(sup <= ratio(5, 13), || format!("sup error {sup}"))?;
    let reported = keisler_lab::rational::from_json(&report.witness["approximation"]["sup_error"]).unwrap();
    ensure(reported == sup, || {
        format!("reported sup error {reported} vs oracle {sup}")
    })?;
    ensure(report.all_hold(), || "a certification failed".into())?;
    Ok(format!("sup_error = {sup}, max |Z| = {max_z} <= 5 over 200 parameters"))
}

fn product_oracle(mu: &FiniteMeasure, nu: &FiniteMeasure) -> BTreeMap<Vec<usize>, Rational> {
    let mut out: BTreeMap<Vec<usize>, Rational> = BTreeMap::new();
    for (a, wa) in mu.support() {
        for (b, wb) in nu.support() {
            let key: Vec<usize> = a.iter().chain(b).copied().collect();
            *out.entry(key).or_insert_with(Rational::zero) += wa * wb;
        }
    }
    out
}

fn measure_algebra() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(505);
    let xy = [Term::Obj(1), Term::Obj(2), Term::Param(1)];
    for trial in 0..100 {
        let host = random_graph(rng.gen_range(1..=6), &mut rng);
        let mu = random_measure(&host, rng.gen_range(1..=2), &mut rng);
        let nu = random_measure(&host, 1, &mut rng);
        let la = random_measure(&host, rng.gen_range(1..=2), &mut rng);
        for m in [&mu, &nu, &la] {
            ensure(m.support().values().sum::<Rational>().is_one(), || {
                format!("trial {trial}: mass != 1")
            })?;
        }
        let prod = mu.product(&nu).unwrap();
        ensure(prod.support() == &product_oracle(&mu, &nu), || {
            format!("trial {trial}: product support")
        })?;
        ensure(prod.support().values().sum::<Rational>().is_one(), || {
            format!("trial {trial}: product mass")
        })?;

        let m1 = random_measure(&host, 1, &mut rng);
        let phi = random_formula(&xy, 3, &mut rng);
        let part = PhiPartition::new(phi.clone(), 2, 1).unwrap();
        let grid = m1.product(&nu).unwrap();
        for c in 0..host.vertex_count() {
            let mut expected = Rational::zero();
            for (a, wa) in m1.support() {
                for (b, wb) in nu.support() {
                    if common::eval_graph(&host, &phi, &[a[0], b[0]], &[c]) {
                        expected += wa * wb;
                    }
                }
            }
            let got = grid.eval(&part, &[c]).unwrap();
            ensure(got == expected, || {
                format!("trial {trial}: grid {phi} at {c}: {got} vs {expected}")
            })?;
        }

        let left = mu.product(&nu).unwrap().product(&la).unwrap();
        let right = mu.product(&nu.product(&la).unwrap()).unwrap();
        let triple: BTreeMap<Vec<usize>, Rational> = {
            let mut out: BTreeMap<Vec<usize>, Rational> = BTreeMap::new();
            for (a, wa) in mu.support() {
                for (b, wb) in nu.support() {
                    for (c, wc) in la.support() {
                        let key: Vec<usize> = a.iter().chain(b).chain(c).copied().collect();
                        *out.entry(key).or_insert_with(Rational::zero) += wa * wb * wc;
                    }
                }
            }
            out
        };
        ensure(left.support() == &triple && right.support() == &triple, || {
            format!("trial {trial}: associativity")
        })?;

        let pick = rng.gen_range(0..host.vertex_count());
        let mass: Rational = mu.support().iter().filter(|(t, _)| t[0] <= pick).map(|(_, w)| w).sum();
        match mu.localize(|t| t[0] <= pick) {
            Ok(loc) => {
                let expected: BTreeMap<Vec<usize>, Rational> = mu
                    .support()
                    .iter()
                    .filter(|(t, _)| t[0] <= pick)
                    .map(|(t, w)| (t.clone(), w / &mass))
                    .collect();
                ensure(loc.support() == &expected, || format!("trial {trial}: localization"))?;
            }
            Err(_) => ensure(mass.is_zero(), || {
                format!("trial {trial}: localization refused positive mass")
            })?,
        }
    }
    Ok("100 trials: normalization, grid, associativity, localization exact".into())
}

fn sup_over<F: Fn(&[usize]) -> Rational>(n: usize, arity: usize, f: F) -> Rational {
    (0..arity)
        .map(|_| 0..n)
        .multi_cartesian_product()
        .map(|t| f(&t))
        .max()
        .unwrap_or_else(Rational::zero)
}

fn product_of_approximations_check() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(606);
    let eps = ratio(1, 4);
    let half = ratio(1, 8);
    let xy = [Term::Obj(1), Term::Obj(2), Term::Param(1)];
    let (mut applicable, mut trials) = (0, 0);
    while trials < 300 {
        trials += 1;
        let host = random_graph(rng.gen_range(1..=6), &mut rng);
        let n = host.vertex_count();
        let mu = random_measure(&host, 1, &mut rng);
        let nu = random_measure(&host, 1, &mut rng);
        let phi: Formula = random_formula(&xy, 3, &mut rng);
        let a = approximating_points(&mu, &mut rng);
        let b = approximating_points(&nu, &mut rng);
        let truth = |x: usize, y: usize, z: usize| common::eval_graph(&host, &phi, &[x, y], &[z]);
        let frac = |hits: usize, of: usize| ratio(hits as i64, of as i64);

        let left = sup_over(n, 2, |p| {
            let target: Rational = mu
                .support()
                .iter()
                .filter(|(x, _)| truth(x[0], p[0], p[1]))
                .map(|(_, w)| w)
                .sum();
            let avg = frac(a.iter().filter(|x| truth(x[0], p[0], p[1])).count(), a.len());
            (target - avg).abs()
        });
        let right = sup_over(n, 2, |p| {
            let target: Rational = nu
                .support()
                .iter()
                .filter(|(y, _)| truth(p[0], y[0], p[1]))
                .map(|(_, w)| w)
                .sum();
            let avg = frac(b.iter().filter(|y| truth(p[0], y[0], p[1])).count(), b.len());
            (target - avg).abs()
        });
        let grid = sup_over(n, 1, |p| {
            let mut target = Rational::zero();
            for (x, wx) in mu.support() {
                for (y, wy) in nu.support() {
                    if truth(x[0], y[0], p[0]) {
                        target += wx * wy;
                    }
                }
            }
            let hits = a
                .iter()
                .cartesian_product(&b)
                .filter(|(x, y)| truth(x[0], y[0], p[0]))
                .count();
            (target - frac(hits, a.len() * b.len())).abs()
        });
        let lib = product_of_approximations(&host, &mu, &nu, &a, &b, &phi, 1).map_err(|e| e.to_string())?;
        ensure(
            (lib.left_error.clone(), lib.right_error.clone(), lib.grid_error.clone())
                == (left.clone(), right.clone(), grid.clone()),
            || format!("trial {trials}: library errors differ from the oracle"),
        )?;
        if left < half && right < half {
            applicable += 1;
            ensure(grid < eps, || {
                format!("trial {trials}: {phi}: grid error {grid} with factors {left}, {right}")
            })?;
        }
    }
    ensure(applicable >= 50, || {
        format!("only {applicable} instances met the premises")
    })?;
    Ok(format!(
        "{applicable} of {trials} instances met the premises; all grids within 1/4"
    ))
}

fn tp2_check() -> Check {
    let k = 4;
    let f = Feq2Structure::tp2_grid(k).unwrap();
    let report = tp2_witness(&f, k, &PathSelection::Sample { seed: 77, count: 50 }).map_err(|e| e.to_string())?;
    for z in 0..f.parameters() {
        for i in 0..k {
            let hits = (0..k).filter(|&j| f.mate(z, k * k + i) == Some(i * k + j)).count();
            ensure(hits <= 1, || format!("parameter {z} pairs c_{i} with {hits} cells"))?;
        }
    }
    let paths = report.witness["paths"].as_array().unwrap();
    ensure(paths.len() == 50, || format!("{} paths checked", paths.len()))?;
    let mut indices = BTreeSet::new();
    for p in paths {
        let index = p["index"].as_u64().unwrap() as usize;
        indices.insert(index);
        let sigma: Vec<usize> = (0..k).map(|i| index / k.pow((k - 1 - i) as u32) % k).collect();
        let z = p["parameter"]
            .as_u64()
            .ok_or_else(|| format!("path {index} unrealized"))? as usize;
        for (i, &j) in sigma.iter().enumerate() {
            ensure(f.mate(z, k * k + i) == Some(i * k + j), || {
                format!("parameter {z} misses cell ({i},{j})")
            })?;
        }
    }
    ensure(indices.len() == 50, || "sampled paths repeat".into())?;
    let rows = &report.certified[0];
    ensure(rows.holds && rows.lhs == from_int(24), || {
        format!("row certification {rows}")
    })?;
    ensure(report.all_hold(), || "a certification failed".into())?;
    Ok("24 same-row pairs inconsistent, 50 of 256 paths realized".into())
}

fn order_check() -> Check {
    let g = random_maximal_free(40, 2, 3, 808).unwrap();
    let report = order_witness(&g, 3, 4).map_err(|e| e.to_string())?;
    let seq: Vec<usize> = serde_json::from_value(report.witness["sequence"].clone()).unwrap();
    let links: Vec<usize> = serde_json::from_value(report.witness["links"].clone()).unwrap();
    let b = report.witness["b"].as_u64().unwrap() as usize;
    ensure(seq == (40..48).collect::<Vec<_>>() && b == 48, || {
        "unexpected vertex numbering".into()
    })?;
    let mut edges: Vec<(usize, usize)> = g.sorted_edges().iter().map(|e| (e[0], e[1])).collect();
    edges.extend(links.iter().map(|&a| (a, b)));
    let ext = Hypergraph::graph(49, &edges).unwrap();
    for (i, &a) in seq.iter().enumerate() {
        let even = (i + 1) % 2 == 0;
        ensure(ext.adjacent(a, b) == even, || {
            format!("a_{} breaks the alternation", i + 1)
        })?;
    }
    ensure(
        seq.iter().tuple_combinations().all(|(&u, &v)| !ext.adjacent(u, v)),
        || "sequence has an edge".into(),
    )?;
    ensure(common::brute_free(&ext, 3), || "extension has a triangle".into())?;
    ensure(report.all_hold(), || "a certification failed".into())?;
    Ok("E(a_i,b) iff i even for i = 1..8; extension triangle-free".into())
}

fn oracle_equivalence() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(909);
    for case in 0..100 {
        let n = rng.gen_range(1..=14);
        let p = rng.gen_range(0.1..0.7);
        let edges: Vec<(usize, usize)> = (0..n).tuple_combinations().filter(|_| rng.gen_bool(p)).collect();
        let g = Hypergraph::graph(n, &edges).unwrap();
        let s = rng.gen_range(3..=4);
        let got = alpha_s(&g, s, DEFAULT_ALPHA_BUDGET).unwrap().exact();
        let expected = common::brute_alpha(&g, s);
        ensure(got == Some(expected), || {
            format!("graph {case} (n = {n}, s = {s}): {got:?} vs {expected}")
        })?;
    }

    let vars = [Term::Obj(1), Term::Param(1), Term::Param(2)];
    for case in 0..50 {
        let host = random_graph(rng.gen_range(1..=6), &mut rng);
        let n = host.vertex_count();
        let phi = random_formula(&vars, 4, &mut rng);
        let dnf = to_dnf(&phi).map_err(|e| e.to_string())?;
        let dnf_formula = Formula::disjunction(
            dnf.clauses()
                .iter()
                .map(|c| Formula::conjunction(c.iter().map(|l| l.to_formula())).unwrap_or_else(tautology)),
        )
        .unwrap_or_else(contradiction);
        let analysis = analyze_phi(&PhiPartition::new(phi.clone(), 1, 2).unwrap()).map_err(|e| e.to_string())?;
        let reassembled = analysis.reassemble();
        let re_formula = Formula::disjunction(
            reassembled
                .clauses()
                .iter()
                .map(|c| Formula::conjunction(c.iter().map(|l| l.to_formula())).unwrap_or_else(tautology)),
        )
        .unwrap_or_else(contradiction);
        // p_E at b̄: evaluate φ at a fresh vertex adjacent to nothing.
        let mut with_fresh = host.sorted_edges().iter().map(|e| (e[0], e[1])).collect::<Vec<_>>();
        with_fresh.sort();
        let extended = Hypergraph::graph(n + 1, &with_fresh).unwrap();
        for t in (0..3).map(|_| 0..n).multi_cartesian_product() {
            let truth = common::eval_graph(&host, &phi, &t[..1], &t[1..]);
            ensure(
                common::eval_graph(&host, &dnf_formula, &t[..1], &t[1..]) == truth,
                || format!("formula {case}: {phi} vs DNF at {t:?}"),
            )?;
            ensure(
                common::eval_graph(&host, &re_formula, &t[..1], &t[1..]) == truth,
                || format!("formula {case}: {phi} vs analysis at {t:?}"),
            )?;
        }
        for bs in (0..2).map(|_| 0..n).multi_cartesian_product() {
            let expected = common::eval_graph(&extended, &phi, &[n], &bs);
            let got = analysis.in_p_e(&host, &bs).map_err(|e| e.to_string())?;
            ensure(got == expected, || {
                format!("formula {case}: p_E({phi}; {bs:?}) = {got}, fresh vertex says {expected}")
            })?;
        }
    }
    Ok("100 graphs with n <= 14; 50 formulas on hosts with n <= 6".into())
}

fn tautology() -> Formula {
    Formula::Eq(Term::Param(1), Term::Param(1))
}

fn contradiction() -> Formula {
    tautology().not()
}

fn reproducibility() -> Check {
    let bin = env!("CARGO_BIN_EXE_keisler-lab");
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let wh = dir.path().join("wh.json");
    let h = WeightedHypergraph::random(7, 3, 5, 2, &mut ChaCha8Rng::seed_from_u64(1));
    std::fs::write(&wh, h.to_json().to_string()).map_err(|e| e.to_string())?;
    let wh = wh.to_str().unwrap().to_string();
    let runs: Vec<(&str, Vec<&str>, bool)> = vec![
        ("gen", vec!["gen", "gen:40:2:3:seed=3"], false),
        ("color", vec!["color", "--input", &wh], false),
        ("color-brute", vec!["color", "--input", &wh, "--method", "brute"], false),
        (
            "fam",
            vec![
                "fam",
                "--phi",
                "!E(x1,y1) & x1 != y1",
                "--epsilon",
                "4/5",
                "--graph",
                "circulant:13:1,5",
                "--ambient",
                "gen:200:2:3:seed=9",
            ],
            true,
        ),
        (
            "sweep",
            vec![
                "sweep",
                "--phi",
                "!E(x1,y1) & x1 != y1",
                "--epsilon",
                "4/5",
                "--graph",
                "circulant:13:1,5",
                "--n",
                "60,120",
                "--seed",
                "9",
            ],
            false,
        ),
        (
            "adversary",
            vec![
                "adversary",
                "--r",
                "3",
                "--s",
                "4",
                "--n",
                "30",
                "--ambient",
                "gen:60:3:4:seed=5",
                "--seed",
                "11",
            ],
            true,
        ),
        (
            "satprobe",
            vec![
                "satprobe",
                "--ambient",
                "gen:60:3:4:seed=1",
                "--m",
                "40",
                "--n",
                "4",
                "--trials",
                "10",
                "--seed",
                "2",
            ],
            true,
        ),
        (
            "satprobe-single",
            vec![
                "satprobe",
                "--ambient",
                "gen:30:3:4:seed=1",
                "--m",
                "20",
                "--params",
                "21,25,29",
            ],
            true,
        ),
        ("tp2", vec!["tp2", "--k", "4", "--sample", "50", "--seed", "3"], true),
        (
            "order",
            vec!["order", "--ambient", "gen:50:2:3:seed=4", "--q", "4"],
            true,
        ),
        (
            "check-measures",
            vec!["check-measures", "--seed", "5", "--trials", "50"],
            false,
        ),
    ];
    for (name, args, verifiable) in &runs {
        let mut outputs = Vec::new();
        for round in 0..2 {
            let out = dir.path().join(format!("{name}-{round}.out"));
            let status = Command::new(bin)
                .args(args)
                .arg("--output")
                .arg(&out)
                .status()
                .map_err(|e| e.to_string())?;
            ensure(status.code() == Some(0), || format!("{name}: exit {status}"))?;
            outputs.push(std::fs::read(&out).map_err(|e| e.to_string())?);
        }
        ensure(outputs[0] == outputs[1], || {
            format!("{name}: outputs differ between runs")
        })?;
        if *verifiable {
            let report = dir.path().join(format!("{name}-0.out"));
            let status = Command::new(bin)
                .arg("verify")
                .arg("--report")
                .arg(&report)
                .output()
                .map_err(|e| e.to_string())?;
            ensure(status.status.code() == Some(0), || {
                format!("{name}: verify exited {}", status.status)
            })?;
        }
    }
    Ok(format!(
        "{} subcommands byte-identical across two runs; 7 reports verified",
        runs.len()
    ))
}

#[test]
fn acceptance_criteria() {
    let s = Duration::from_secs;
    let results = [
        run_criterion(1, "coloring guarantee", Some(s(10)), coloring_guarantee),
        run_criterion(2, "average identity", None, average_identity),
        run_criterion(3, "adversary bound", Some(s(30)), adversary_bound),
        run_criterion(4, "fam pipeline", Some(s(60)), fam_pipeline),
        run_criterion(5, "measure algebra", None, measure_algebra),
        run_criterion(6, "product of approximations", None, product_of_approximations_check),
        run_criterion(7, "TP2 witness", None, tp2_check),
        run_criterion(8, "order witness", None, order_check),
        run_criterion(9, "oracle equivalence", None, oracle_equivalence),
        run_criterion(10, "reproducibility", None, reproducibility),
    ];
    let failed: Vec<usize> = results
        .iter()
        .enumerate()
        .filter(|(_, ok)| !**ok)
        .map(|(i, _)| i + 1)
        .collect();
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
