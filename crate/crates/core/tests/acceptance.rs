//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Run with `cargo test -p equicurv-core --test acceptance`.

use std::f64::consts::{FRAC_1_SQRT_2, PI};
use std::process::ExitCode;
use std::time::Instant;

use num_bigint::BigInt;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use equicurv::corpus::{run_corpus, summarize, CorpusConfig, GraphRecord};
use equicurv::graph::{apsp, generate};
use equicurv::theorems::{
    check_bonnet_myers, check_lichnerowicz, check_minimax, check_product_curvature, check_reverse_bonnet_myers,
    minimax_battery, spectral_criterion, spectral_gap,
};
use equicurv::{
    curvature_from_distances, CurvatureResult, CurvatureStatus, DistanceMatrix, FamilySpec, Graph, Rational,
    SpectralInfo, TheoremId,
};

type Outcome = Result<String, String>;

fn q(a: u64, b: u64) -> Rational {
    Rational::new(BigInt::from(a), BigInt::from(b))
}

fn spec(s: &str) -> FamilySpec {
    s.parse().unwrap_or_else(|e| panic!("{s}: {e}"))
}

struct Analysis {
    g: Graph,
    d: DistanceMatrix,
    r: CurvatureResult,
    s: SpectralInfo,
}

fn analyze(f: &FamilySpec) -> Analysis {
    let g = generate(f).unwrap();
    let d = apsp(&g).unwrap();
    let r = curvature_from_distances(&d).unwrap();
    let s = spectral_gap(&g, &d).unwrap();
    Analysis { g, d, r, s }
}

/// Constant-curvature families with every parameter in 2..=8 and the
/// closed-form curvature of each, written out independently of the library.
fn constant_families() -> Vec<(FamilySpec, Rational)> {
    let mut out = Vec::new();
    for n in 2..=8u64 {
        out.push((spec(&format!("complete:{n}")), q(n, n - 1)));
        if n >= 3 {
            out.push((spec(&format!("cycle:{n}")), q(n, n * n / 4)));
        }
        out.push((spec(&format!("hypercube:{n}")), q(2, n)));
        out.push((spec(&format!("cocktail_party:{n}")), q(1, 1)));
        for k in 2..n {
            out.push((spec(&format!("johnson:{n},{k}")), q(n, k * (n - k))));
        }
        out.push((spec(&format!("demicube:{n}")), q(4, n)));
    }
    out
}

fn criterion_1(families: &[(FamilySpec, Analysis, Rational)]) -> Outcome {
    let mut checked = 0;
    for (f, a, k) in families {
        let w = a.r.w.exact().ok_or_else(|| format!("{f}: status {:?}", a.r.status))?;
        if let Some(i) = w.iter().position(|x| x != k) {
            return Err(format!("{f}: w[{i}] = {} but closed form is {k}", w[i]));
        }
        checked += 1;
    }
    for n in 2..=8u64 {
        let a = analyze(&spec(&format!("path:{n}")));
        let w = a.r.w.exact().ok_or("path not exact")?;
        for (i, x) in w.iter().enumerate() {
            let expect = if i == 0 || i as u64 == n - 1 { q(n, n - 1) } else { Rational::zero() };
            if *x != expect {
                return Err(format!("path:{n}: w[{i}] = {x}, expected {expect}"));
            }
        }
        checked += 1;
    }
    Ok(format!("{checked} family instances match exactly"))
}

fn criterion_2(table: &[(FamilySpec, Analysis)]) -> Outcome {
    // (vertices, edges, w range, Dw range) as printed, two decimals.
    let rows = [
        (7, 15, (0.65, 0.99), (5.25, 7.875)),
        (7, 18, (0.85, 1.15), (6.0, 8.0)),
        (49, 120, (-10.93, 2.75), (46.42, 52.22)),
    ];
    let close = |x: f64, y: f64| (x - y).abs() <= 0.01;
    let mut lines = Vec::new();
    for ((f, a), (nv, ne, wr, dr)) in table.iter().zip(rows) {
        if (a.g.n(), a.g.edge_count()) != (nv, ne) {
            return Err(format!("{f}: {} vertices, {} edges", a.g.n(), a.g.edge_count()));
        }
        if a.r.status != CurvatureStatus::Inconsistent {
            return Err(format!("{f}: status {:?}", a.r.status));
        }
        let w = a.r.w.to_f64();
        let (wlo, whi) = (w.iter().copied().fold(f64::INFINITY, f64::min), w.iter().copied().fold(f64::NEG_INFINITY, f64::max));
        let (dlo, dhi) = (a.r.residual_range.0.to_f64(), a.r.residual_range.1.to_f64());
        if !(close(wlo, wr.0) && close(whi, wr.1) && close(dlo, dr.0) && close(dhi, dr.1)) {
            return Err(format!("{f}: w in [{wlo:.4}, {whi:.4}], Dw in [{dlo:.4}, {dhi:.4}]"));
        }
        lines.push(format!("{f} w∈[{wlo:.3},{whi:.3}] Dw∈[{dlo:.3},{dhi:.3}]"));
    }
    Ok(lines.join("; "))
}

fn criterion_3() -> Outcome {
    let mut worst: f64 = 0.0;
    for n in 6..=24usize {
        let a = analyze(&FamilySpec::Cycle(n));
        let exact = 4.0 * (PI / n as f64).sin().powi(2);
        let err = (a.s.lambda1 - exact).abs();
        worst = worst.max(err);
        if err > 1e-8 {
            return Err(format!("C_{n}: lambda1 = {}, expected {exact}", a.s.lambda1));
        }
        let rep = check_lichnerowicz(&a.r, &a.s);
        if !rep.hypothesis_satisfied || !rep.pass {
            return Err(format!("C_{n}: lambda1 chain fails: {:?}", rep.notes));
        }
    }
    Ok(format!("C_6..C_24, max |lambda1 - 4 sin^2(pi/n)| = {worst:.1e}"))
}

fn criterion_4() -> Outcome {
    let mut specs: Vec<FamilySpec> = (1..=6).map(FamilySpec::Hypercube).collect();
    specs.extend((2..=8).map(|n| FamilySpec::Cycle(2 * n)));
    specs.extend((1..=3).map(|n| FamilySpec::Johnson { n: 2 * n, k: n }));
    for f in &specs {
        let a = analyze(f);
        let k = a.r.exact_k().ok_or_else(|| format!("{f}: not exact"))?;
        if Rational::from_integer(a.d.diameter().into()) * k != q(2, 1) {
            return Err(format!("{f}: diam·K = {} · {k}", a.d.diameter()));
        }
        let rep = check_bonnet_myers(&a.d, &a.r);
        if !rep.pass || !rep.notes.iter().any(|n| n.contains("curvature is constant")) {
            return Err(format!("{f}: {:?}", rep.notes));
        }
    }
    Ok(format!("{} graphs with diam·K = 2 and constant curvature", specs.len()))
}

fn criterion_5() -> Outcome {
    for n in 2..=10u64 {
        let a = analyze(&FamilySpec::Complete(n as usize));
        let total = a.r.exact_total().ok_or("not exact")?;
        if *total != q(n * n, n - 1) {
            return Err(format!("K_{n}: |w|_1 = {total}"));
        }
        let rep = check_reverse_bonnet_myers(&a.d, &a.r);
        if !rep.pass || !rep.has_equality() || !rep.notes.iter().any(|s| s.contains("complete graph")) {
            return Err(format!("K_{n}: {:?}", rep.notes));
        }
    }
    Ok("K_2..K_10 attain equality and are detected as complete".into())
}

fn criterion_6(families: &[(FamilySpec, Analysis, Rational)]) -> Outcome {
    let mut measures = 0;
    for (i, (f, a, _)) in families.iter().enumerate() {
        let seed = 6000 + i as u64;
        let battery = minimax_battery(&a.r, seed);
        measures += battery.len();
        let rep = check_minimax(&a.d, &a.r, &battery, Some(seed)).map_err(|e| e.to_string())?;
        if !rep.hypothesis_satisfied || !rep.pass {
            return Err(format!("{f}: {:?}", rep.notes));
        }
        // Uniform measure: every (D·1/n)_a equals n/|w|_1 exactly.
        let n = a.d.n() as u64;
        let alpha = Rational::from_integer(BigInt::from(n)) / a.r.exact_total().unwrap();
        if a.d.row_sums().iter().any(|&r| q(r, n) != alpha) {
            return Err(format!("{f}: uniform measure not sharp"));
        }
    }
    Ok(format!("{} instances, {measures} measures", families.len()))
}

fn criterion_7() -> Outcome {
    let pool: Vec<FamilySpec> = [
        "complete:2", "complete:3", "complete:4", "complete:5", "cycle:3", "cycle:4", "cycle:5", "cycle:6", "cycle:7",
        "hypercube:2", "hypercube:3", "cocktail_party:2", "cocktail_party:3", "johnson:4,2", "johnson:5,2",
        "demicube:3", "demicube:4",
    ]
    .iter()
    .map(|s| spec(s))
    .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..20 {
        let (f, h) = (&pool[rng.random_range(0..pool.len())], &pool[rng.random_range(0..pool.len())]);
        let rep = check_product_curvature(&generate(f).unwrap(), &generate(h).unwrap()).map_err(|e| e.to_string())?;
        if !rep.hypothesis_satisfied || !rep.pass {
            return Err(format!("{f} × {h}: {:?}", rep.notes));
        }
    }
    for (f, k) in [(FamilySpec::Complete(3), q(3, 2)), (FamilySpec::Cycle(4), q(1, 1))] {
        let cube = generate(&f).unwrap().cartesian_power(3);
        let r = curvature_from_distances(&apsp(&cube).unwrap()).unwrap();
        let w = r.w.exact().ok_or("power not exact")?;
        let third = &k / Rational::from_integer(3.into());
        if w.iter().any(|x| *x != third) {
            return Err(format!("{f}^3: K = {}, expected {third}", r.k.to_f64()));
        }
    }
    Ok("20 seeded pairs obey 1/K = 1/K1 + 1/K2; K_3^3 and C_4^3 give K/3".into())
}

fn criterion_8(records: &[GraphRecord]) -> Outcome {
    let summary = summarize(records);
    if summary.count != 500 {
        return Err(format!("{} graphs", summary.count));
    }
    if summary.total_failures > 0 {
        let first = &records[summary.failing_graphs[0]];
        let bad: Vec<_> = first.failures().map(|r| (r.theorem, r.notes.clone())).collect();
        return Err(format!("{} failures, first at {}: {:?}", summary.total_failures, first.spec, bad));
    }
    for rec in records {
        let ones = rec
            .reports
            .iter()
            .find(|r| r.theorem == TheoremId::GeneralizedBounds && r.notes.first().is_some_and(|n| n.contains("all-ones")));
        if !ones.is_some_and(|r| r.hypothesis_satisfied && r.pass) {
            return Err(format!("{}: all-ones bound missing or failed", rec.spec));
        }
    }
    Ok(format!("0 failures; statuses {:?}; {} with K < 0", summary.statuses, summary.negatively_curved))
}

fn criterion_9(records: &[GraphRecord], table: &[(FamilySpec, Analysis)]) -> Outcome {
    let mut applicable = 0;
    let mut predicted = 0;
    let corpus = records.iter().map(|r| (r.spec.clone(), r.reports.iter().find(|t| t.theorem == TheoremId::SpectralCriterion).cloned()));
    let extra = table.iter().map(|(f, a)| (f.to_string(), Some(spectral_criterion(&a.s, Some(a.r.status)))));
    for (name, rep) in corpus.chain(extra) {
        let rep = rep.ok_or_else(|| format!("{name}: no criterion report"))?;
        if rep.hypothesis_satisfied {
            applicable += 1;
            if rep.comparisons[0].holds {
                predicted += 1;
            }
        }
        if rep.failed() {
            return Err(format!("{name}: {:?}", rep.notes));
        }
    }
    Ok(format!("{applicable} applicable, {predicted} predicted solvable, none inconsistent"))
}

fn criterion_10(records: &[GraphRecord], others: &[f64]) -> Outcome {
    let all: Vec<f64> = records.iter().map(|r| r.c_g).chain(others.iter().copied()).collect();
    let min = all.iter().copied().fold(f64::INFINITY, f64::min);
    if min < FRAC_1_SQRT_2 - 1e-9 {
        return Err(format!("min c_G = {min}"));
    }
    let above = all.iter().filter(|&&c| c > 0.95).count();
    Ok(format!(
        "min c_G = {min:.4} over {} graphs; c_G > 0.95 for {above} ({:.1}%)",
        all.len(),
        100.0 * above as f64 / all.len() as f64
    ))
}

fn main() -> ExitCode {
    let start = Instant::now();
    let families: Vec<(FamilySpec, Analysis, Rational)> =
        constant_families().into_iter().map(|(f, k)| { let a = analyze(&f); (f, a, k) }).collect();
    let table: Vec<(FamilySpec, Analysis)> = ["complete_multipartite:1,1,1,4", "complete_multipartite:1,1,1,1,3", "knight_board:7,7"]
        .iter()
        .map(|s| { let f = spec(s); let a = analyze(&f); (f, a) })
        .collect();

    let corpus_start = Instant::now();
    let records = run_corpus(&CorpusConfig::new(500, 5, 40, 7)).expect("corpus run");
    let corpus_time = corpus_start.elapsed();

    let mut others: Vec<f64> = families.iter().map(|(_, a, _)| a.s.c_g).collect();
    others.extend(table.iter().map(|(_, a)| a.s.c_g));
    others.extend((2..=8).map(|n| analyze(&FamilySpec::Path(n)).s.c_g));

    let results = [
        ("closed-form family table", criterion_1(&families)),
        ("pseudo-inverse reproduction", criterion_2(&table)),
        ("cycle spectral-gap sharpness", criterion_3()),
        ("diameter bound sharpness", criterion_4()),
        ("reverse diameter bound equality", criterion_5()),
        ("minimax battery", criterion_6(&families)),
        ("product law", criterion_7()),
        ("random-graph corpus", criterion_8(&records)),
        ("spectral criterion soundness", criterion_9(&records, &table)),
        ("Perron alignment", criterion_10(&records, &others)),
    ];
    let mut failed = 0;
    for (i, (name, outcome)) in results.iter().enumerate() {
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {detail}", i + 1);
            }
        }
    }
    println!("corpus of 500 graphs: {:.1}s; total {:.1}s", corpus_time.as_secs_f64(), start.elapsed().as_secs_f64());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
