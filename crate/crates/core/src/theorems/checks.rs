use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Exp1};

use super::{Comparison, SpectralInfo, TheoremId, TheoremReport, FLOAT_SLACK};
use crate::curvature::{
    curvature_from_distances, nullspace_sum_check, total_curvature_invariance_check, CurvatureResult,
    CurvatureStatus,
};
use crate::graph::{apsp, DistanceMatrix, Graph};
use crate::{Error, Rational, Result};

/// Random simplex measures in the minimax battery.
pub const RANDOM_MEASURES: usize = 100;

fn int(n: impl Into<BigInt>) -> Rational {
    Rational::from_integer(n.into())
}

/// Exact `(n, w, K, ‖w‖₁)` when the status is exact and `K >= 0`.
fn nonnegative_exact(r: &CurvatureResult) -> std::result::Result<(&[Rational], &Rational, &Rational), String> {
    let (Some(w), Some(k), Some(total)) = (r.w.exact(), r.exact_k(), r.exact_total()) else {
        return Err("no exact solution of D w = n·1".into());
    };
    if k.is_negative() {
        return Err(format!("K = {} < 0", k));
    }
    Ok((w, k, total))
}

fn is_constant(w: &[Rational]) -> bool {
    w.windows(2).all(|p| p[0] == p[1])
}

/// Diameter bounds `diam ≤ 2n/‖w‖₁ ≤ 2/K` and the rigidity clause.
pub fn check_bonnet_myers(d: &DistanceMatrix, r: &CurvatureResult) -> TheoremReport {
    let id = TheoremId::BonnetMyers;
    let (w, k, total) = match nonnegative_exact(r) {
        Ok(x) => x,
        Err(why) => return TheoremReport::unmet(id, why),
    };
    let mut report = TheoremReport::new(id);
    let n = int(d.n());
    let diam = int(d.diameter());
    let two = int(2);
    let middle = &two * &n / total;
    report.push(Comparison::exact_le("diam <= 2n/|w|_1", &diam, &middle));
    if k.is_zero() {
        report.note("K = 0: the bound 2/K is infinite");
    } else {
        report.push(Comparison::exact_le("2n/|w|_1 <= 2/K", &middle, &(&two / k)));
        if &diam * k == two {
            if is_constant(w) {
                report.note("diam·K = 2: equality, curvature is constant");
            } else {
                report.fail("diam·K = 2 but curvature is not constant");
            }
        }
    }
    report
}

/// `‖w‖₁ ≥ n²/((n-1)·diam)`, with equality exactly for complete graphs.
pub fn check_reverse_bonnet_myers(d: &DistanceMatrix, r: &CurvatureResult) -> TheoremReport {
    let id = TheoremId::ReverseBonnetMyers;
    let (_, _, total) = match nonnegative_exact(r) {
        Ok(x) => x,
        Err(why) => return TheoremReport::unmet(id, why),
    };
    let mut report = TheoremReport::new(id);
    let n = d.n();
    let bound = Rational::new(BigInt::from(n * n), BigInt::from((n - 1) as u64 * u64::from(d.diameter())));
    let c = Comparison::exact_le("n^2/((n-1)·diam) <= |w|_1", &bound, total);
    let equality = c.equality;
    report.push(c);
    let complete = d.diameter() == 1;
    match (equality, complete) {
        (true, true) => report.note("equality: complete graph"),
        (true, false) => report.fail("equality attained by a graph that is not complete"),
        (false, true) => report.fail("complete graph does not attain equality"),
        (false, false) => {}
    }
    report
}

/// `λ₁ ≥ ‖w‖₁/(2n²) ≥ K/(2n)`; needs `K > 0`.
pub fn check_lichnerowicz(r: &CurvatureResult, s: &SpectralInfo) -> TheoremReport {
    let id = TheoremId::Lichnerowicz;
    let (_, k, total) = match nonnegative_exact(r) {
        Ok(x) => x,
        Err(why) => return TheoremReport::unmet(id, why),
    };
    if !k.is_positive() {
        return TheoremReport::unmet(id, "K = 0, need K > 0");
    }
    let mut report = TheoremReport::new(id);
    let n = r.n();
    let middle = total / int(2 * n * n);
    report.push(Comparison::float_ge("lambda1 >= |w|_1/(2n^2)", s.lambda1, middle.to_f64().unwrap()));
    report.push(Comparison::exact_le("K/(2n) <= |w|_1/(2n^2)", &(k / int(2 * n)), &middle));
    report
}

/// Point masses, the uniform measure, `w/‖w‖₁` (when `w ≥ 0` is exact) and
/// [`RANDOM_MEASURES`] normalized-exponential draws from `seed`.
pub fn minimax_battery(r: &CurvatureResult, seed: u64) -> Vec<Vec<f64>> {
    let n = r.n();
    let mut out = Vec::with_capacity(n + 2 + RANDOM_MEASURES);
    for a in 0..n {
        let mut nu = vec![0.0; n];
        nu[a] = 1.0;
        out.push(nu);
    }
    out.push(vec![1.0 / n as f64; n]);
    if let Ok((w, _, total)) = nonnegative_exact(r) {
        out.push(w.iter().map(|x| (x / total).to_f64().unwrap()).collect());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..RANDOM_MEASURES {
        let draw: Vec<f64> = (0..n).map(|_| Exp1.sample(&mut rng)).collect();
        let sum: f64 = draw.iter().sum();
        out.push(draw.into_iter().map(|x| x / sum).collect());
    }
    out
}

/// Checks `min_a (Dν)_a ≤ n/‖w‖₁ ≤ max_b (Dν)_b` for every supplied `ν`, and
/// that `ν* = w/‖w‖₁` attains both sides exactly.
pub fn check_minimax(
    d: &DistanceMatrix,
    r: &CurvatureResult,
    measures: &[Vec<f64>],
    seed: Option<u64>,
) -> Result<TheoremReport> {
    let id = TheoremId::Minimax;
    let n = d.n();
    for (m, nu) in measures.iter().enumerate() {
        if nu.len() != n {
            return Err(Error::Invalid(format!("measure {} has length {}, expected {}", m, nu.len(), n)));
        }
        if nu.iter().any(|&x| !(x >= 0.0) || !x.is_finite()) {
            return Err(Error::Invalid(format!("measure {} has a negative or non-finite entry", m)));
        }
        let sum: f64 = nu.iter().sum();
        if (sum - 1.0).abs() > 1e-12 {
            return Err(Error::Invalid(format!("measure {} sums to {}", m, sum)));
        }
    }
    let (w, _, total) = match nonnegative_exact(r) {
        Ok(x) => x,
        Err(why) => return Ok(TheoremReport::unmet(id, why)),
    };
    let mut report = TheoremReport::new(id);
    report.seed = seed;
    let alpha = int(n) / total;
    let alpha_f = alpha.to_f64().unwrap();

    let dr = d.to_real();
    let mut worst_low = f64::NEG_INFINITY;
    let mut worst_high = f64::INFINITY;
    for nu in measures {
        let dnu = dr.mul_vec(nu);
        let low = dnu.iter().copied().fold(f64::INFINITY, f64::min);
        let high = dnu.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        worst_low = worst_low.max(low);
        worst_high = worst_high.min(high);
    }
    if !measures.is_empty() {
        report.push(Comparison::float_le("max_nu min_a (D nu)_a <= n/|w|_1", worst_low, alpha_f));
        report.push(Comparison::float_ge("min_nu max_b (D nu)_b >= n/|w|_1", worst_high, alpha_f));
    }

    let nu_star: Vec<Rational> = w.iter().map(|x| x / total).collect();
    let dq = d.to_rational();
    let dnu = dq.mul_vec(&nu_star);
    let low = dnu.iter().min().unwrap();
    let high = dnu.iter().max().unwrap();
    let lower = Comparison::exact_le("min_a (D nu*)_a <= n/|w|_1", low, &alpha);
    let upper = Comparison::exact_le("n/|w|_1 <= max_b (D nu*)_b", &alpha, high);
    if !(lower.equality && upper.equality) {
        report.fail("nu* = w/|w|_1 is not sharp on both sides");
    }
    report.push(lower);
    report.push(upper);
    report.note(format!("{} measures checked, value n/|w|_1 = {}", measures.len(), alpha));
    Ok(report)
}

/// Bounds valid for any positive weight vector:
/// `diam ≤ ‖Dw‖∞/n · 8/K` and `λ₁ ≥ K/(8‖Dw‖∞)`.
pub fn check_generalized_bounds(d: &DistanceMatrix, s: &SpectralInfo, w: &[f64]) -> Result<TheoremReport> {
    let n = d.n();
    if w.len() != n {
        return Err(Error::Invalid(format!("weight vector has length {}, expected {}", w.len(), n)));
    }
    if let Some(i) = w.iter().position(|&x| !(x > 0.0) || !x.is_finite()) {
        return Err(Error::Invalid(format!("weight {} = {} is not positive", i, w[i])));
    }
    let mut report = TheoremReport::new(TheoremId::GeneralizedBounds);
    let k = w.iter().copied().fold(f64::INFINITY, f64::min);
    let dw = d.to_real().mul_vec(w);
    let norm = dw.iter().fold(0.0f64, |m, x| m.max(x.abs()));
    report.push(Comparison::float_le("diam <= |Dw|_inf/n · 8/K", f64::from(d.diameter()), norm / n as f64 * 8.0 / k));
    report.push(Comparison::float_ge("lambda1 >= K/(8 |Dw|_inf)", s.lambda1, k / (8.0 * norm)));
    report.note(format!("K = {}, |Dw|_inf = {}", k, norm));
    Ok(report)
}

/// [`check_generalized_bounds`] on the curvature vector itself, reporting an
/// unmet hypothesis when some entry is not positive.
pub fn check_generalized_for_result(d: &DistanceMatrix, s: &SpectralInfo, r: &CurvatureResult) -> TheoremReport {
    let w = r.w.to_f64();
    if w.iter().any(|&x| !(x > 0.0)) {
        return TheoremReport::unmet(TheoremId::GeneralizedBounds, "curvature vector has a nonpositive entry");
    }
    check_generalized_bounds(d, s, &w).expect("positive weights of matching length")
}

/// Sufficient condition for solvability from the spectrum of `D`, checked
/// for soundness against the exact classification when one is supplied.
pub fn spectral_criterion(s: &SpectralInfo, status: Option<CurvatureStatus>) -> TheoremReport {
    let id = TheoremId::SpectralCriterion;
    let ev = &s.distance_spectrum;
    if ev.len() < 2 || !(ev[0] > FLOAT_SLACK) || ev[1] > FLOAT_SLACK {
        return TheoremReport::unmet(id, "spectrum is not of the form l1 > 0 >= l2 >= ...");
    }
    let mut report = TheoremReport::new(id);
    let (l1, l2) = (ev[0], ev[1]);
    let lhs = 1.0 - s.c_g * s.c_g;
    let rhs = if l2.abs() <= FLOAT_SLACK { 0.0 } else { l2.abs() / (l1 - l2) };
    let criterion = lhs < rhs;
    report.comparisons.push(Comparison {
        relation: "1 - <v,1/sqrt(n)>^2 < |l2|/(l1 - l2)".into(),
        lhs,
        rhs,
        lhs_exact: None,
        rhs_exact: None,
        holds: criterion,
        equality: false,
    });
    match (criterion, status) {
        (true, Some(CurvatureStatus::Inconsistent)) => report.fail("criterion predicts solvable but the system is inconsistent"),
        (true, Some(_)) => report.note("criterion holds: solvable predicted and confirmed"),
        (true, None) => report.note("criterion holds: solvable predicted"),
        (false, _) => report.note("criterion false: no prediction"),
    }
    report
}

/// `1/√2 ≤ c_G ≤ 1`; graphs with `c_G ≤ 0.95` are flagged.
pub fn perron_alignment(s: &SpectralInfo) -> TheoremReport {
    let mut report = TheoremReport::new(TheoremId::PerronAlignment);
    report.push(Comparison::float_ge("c_G >= 1/sqrt(2)", s.c_g, std::f64::consts::FRAC_1_SQRT_2));
    report.push(Comparison::float_le("c_G <= 1", s.c_g, 1.0));
    if s.c_g <= 0.95 {
        report.note(format!("notable: c_G = {} <= 0.95", s.c_g));
    }
    report
}

/// `1/K(G×H) = 1/K(G) + 1/K(H)` for factors with constant distance row sums.
pub fn check_product_curvature(g: &Graph, h: &Graph) -> Result<TheoremReport> {
    let id = TheoremId::ProductCurvature;
    let (dg, dh) = (apsp(g)?, apsp(h)?);
    let constant = |d: &DistanceMatrix| d.constant_row_sum().is_some_and(|r| r > 0);
    if !constant(&dg) || !constant(&dh) {
        return Ok(TheoremReport::unmet(id, "a factor does not have constant curvature"));
    }
    let product = g.cartesian_product(h);
    let dp = apsp(&product)?;
    let (rg, rh, rp) = (curvature_from_distances(&dg)?, curvature_from_distances(&dh)?, curvature_from_distances(&dp)?);
    let mut report = TheoremReport::new(id);
    let exact = |r: &CurvatureResult| r.w.exact().filter(|w| is_constant(w)).map(|w| w[0].clone());
    let (Some(k1), Some(k2), Some(k)) = (exact(&rg), exact(&rh), exact(&rp)) else {
        report.fail("a curvature vector is not exact and constant");
        return Ok(report);
    };
    let lhs = k.recip();
    let rhs = k1.recip() + k2.recip();
    let mut c = Comparison::exact_le("1/K = 1/K1 + 1/K2", &lhs, &rhs);
    c.holds = c.equality;
    report.push(c);
    report.note(format!("K1 = {}, K2 = {}, K = {}", k1, k2, k));
    Ok(report)
}

/// Samples the solution family for nonnegative members and compares their
/// total curvatures.
pub fn check_invariance(r: &CurvatureResult, samples: usize, seed: u64) -> TheoremReport {
    let id = TheoremId::TotalCurvatureInvariance;
    if r.status != CurvatureStatus::ExactCanonical || r.nullspace.is_empty() {
        return TheoremReport::unmet(id, "solution is unique or does not exist");
    }
    let inv = total_curvature_invariance_check(r, samples, seed);
    let mut report = TheoremReport::new(id);
    report.seed = Some(seed);
    report.note(format!("{} samples, {} nonnegative", inv.samples, inv.nonnegative_found));
    if let Some(t) = &inv.reference_total {
        report.note(format!("reference total curvature {}", t));
    }
    if inv.vacuous {
        report.note("vacuous: no two nonnegative solutions compared");
    }
    if !inv.pass {
        report.fail("nonnegative solutions with different total curvature");
    }
    report
}

/// Kernel vectors with nonzero entry sum are incompatible with a nonnegative
/// exact solution.
pub fn check_nullspace_sum(r: &CurvatureResult) -> TheoremReport {
    let mut report = TheoremReport::new(TheoremId::NullspaceSum);
    let sums = nullspace_sum_check(r);
    let listed: Vec<String> = sums.sums.iter().map(ToString::to_string).collect();
    report.note(format!("kernel dimension {}, basis sums [{}]", sums.sums.len(), listed.join(", ")));
    if sums.exceptional {
        report.note("kernel is not orthogonal to the constant vector");
        if r.is_nonnegatively_curved() {
            report.fail("nonnegative exact solution despite a kernel vector with nonzero sum");
        }
    }
    report
}

/// Runs the selected single-graph verifiers in [`TheoremId::ALL`] order.
///
/// The generalized bounds produce two reports: one for the all-ones weight
/// vector and one for the curvature vector itself. The product law needs a
/// second graph and is reported as not applicable here.
pub fn run_battery(
    d: &DistanceMatrix,
    r: &CurvatureResult,
    s: &SpectralInfo,
    seed: u64,
    invariance_samples: usize,
    selection: &[TheoremId],
) -> Result<Vec<TheoremReport>> {
    let mut out = Vec::new();
    for id in TheoremId::ALL {
        if !selection.contains(&id) {
            continue;
        }
        match id {
            TheoremId::BonnetMyers => out.push(check_bonnet_myers(d, r)),
            TheoremId::ReverseBonnetMyers => out.push(check_reverse_bonnet_myers(d, r)),
            TheoremId::Lichnerowicz => out.push(check_lichnerowicz(r, s)),
            TheoremId::Minimax => out.push(check_minimax(d, r, &minimax_battery(r, seed), Some(seed))?),
            TheoremId::GeneralizedBounds => {
                let mut ones = check_generalized_bounds(d, s, &vec![1.0; d.n()])?;
                ones.notes.insert(0, "weights: all-ones".into());
                out.push(ones);
                let mut own = check_generalized_for_result(d, s, r);
                own.notes.insert(0, "weights: curvature vector".into());
                out.push(own);
            }
            TheoremId::SpectralCriterion => out.push(spectral_criterion(s, Some(r.status))),
            TheoremId::PerronAlignment => out.push(perron_alignment(s)),
            TheoremId::ProductCurvature => {
                out.push(TheoremReport::unmet(id, "needs two factor graphs"));
            }
            TheoremId::TotalCurvatureInvariance => out.push(check_invariance(r, invariance_samples, seed)),
            TheoremId::NullspaceSum => out.push(check_nullspace_sum(r)),
        }
    }
    Ok(out)
}
