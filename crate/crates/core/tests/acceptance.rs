//! Acceptance criteria. Each test prints one `PASS`/`FAIL` line; run with
//! `cargo test -p frac-bernoulli --test acceptance -- --nocapture` to see them.

mod common;

use std::time::{Duration, Instant};

use common::{close, random_specs};
use frac_bernoulli::cli::figures;
use frac_bernoulli::oracles::{abm_solve, exact_beta1_bernoulli, highprec_coefficients};
use frac_bernoulli::series::uniform_grid;
use frac_bernoulli::{
    closed_c1, closed_c1_power, closed_c2, closed_c2_power, closed_c3, compute_coefficients,
    gen_binom, radius_sequence, raw_coefficient, solve_c3_zero, CoeffTable, ProblemSpec,
    SeriesSolution,
};
use rayon::prelude::*;

const SWEEP_SEED: u64 = 0x5eed_b3a7;
const SWEEP_SIZE: usize = 200;

fn report(id: &str, what: &str, ok: bool, detail: String) {
    println!("[{}] criterion {id}: {what} ({detail})", if ok { "PASS" } else { "FAIL" });
    assert!(ok, "criterion {id} failed: {what} ({detail})");
}

fn raw(table: &CoeffTable, h: usize, n: usize) -> f64 {
    raw_coefficient(table, h, n).unwrap().to_real()
}

#[test]
fn criterion_01_closed_formulas() {
    let start = Instant::now();
    let specs = random_specs(SWEEP_SIZE, SWEEP_SEED);
    let mut failures = Vec::new();
    let mut checked = 0usize;
    for spec in &specs {
        let table = compute_coefficients(spec, 3).unwrap();
        let mut pairs = vec![
            ("c1", raw(&table, 1, 1), closed_c1(spec)),
            ("c2", raw(&table, 1, 2), closed_c2(spec)),
            ("c3", raw(&table, 1, 3), closed_c3(spec)),
        ];
        for h in 1..=spec.p + 1 {
            pairs.push(("c1^(h)", raw(&table, h, 1), closed_c1_power(spec, h)));
            pairs.push(("c2^(h)", raw(&table, h, 2), closed_c2_power(spec, h)));
        }
        for (name, got, want) in pairs {
            checked += 1;
            if !close(got, want, 1e-10, 1e-12) {
                failures.push(format!("{name} {spec:?}: {got} vs {want}"));
            }
        }
    }
    let elapsed = start.elapsed();
    let ok = failures.is_empty() && elapsed < Duration::from_secs(5);
    report(
        "1",
        "closed-formula agreement over 200 random specs",
        ok,
        format!("{checked} values, {} mismatches, {elapsed:.2?}; first: {:?}", failures.len(), failures.first()),
    );
}

#[test]
fn criterion_02_logistic_half() {
    let mut worst_parity = 0.0f64;
    let mut exact = true;
    for beta in [0.25, 1.0 / 3.0, 0.5, 0.75, 1.0] {
        let spec = ProblemSpec::logistic(beta, 1, 0.5).unwrap();
        let table = compute_coefficients(&spec, 201).unwrap();
        let c0 = raw(&table, 1, 0);
        let c1 = raw(&table, 1, 1);
        // c₁ passes through Γ(β+1) and its reciprocal; allow those two roundings.
        exact &= c0 == 0.5 && (c1 - 0.25).abs() <= 2.0 * f64::EPSILON * 0.25;
        let d = table.d1();
        for n in 1..=100 {
            let scale = d[2 * n - 1].abs().max(d[2 * n + 1].abs());
            worst_parity = worst_parity.max(d[2 * n].abs() / scale);
        }
    }
    report(
        "2",
        "logistic u0=1/2: c0=1/2, c1=1/4, even orders vanish",
        exact && worst_parity <= 1e-12,
        format!("c0/c1 exact: {exact}, worst |d_2n|/neighbors = {worst_parity:.2e}"),
    );
}

#[test]
fn criterion_03_null_coefficients() {
    let mut ok = true;
    let mut notes = Vec::new();

    // (i) c₂ vanishes at u₀ = √(1/3) for p = 2, c₄ does not.
    for beta in common::SWEEP_BETAS {
        let spec = ProblemSpec::logistic(beta, 2, (1.0f64 / 3.0).sqrt()).unwrap();
        let table = compute_coefficients(&spec, 4).unwrap();
        let c2 = raw(&table, 1, 2);
        let c4 = raw(&table, 1, 4);
        ok &= c2.abs() <= 1e-12 && c4.abs() > 1e-6;
        notes.push(format!("beta={beta}: c2={c2:.1e} c4={c4:.3e}"));
    }

    // (ii) c₃ vanishes at the special datum, later orders do not.
    let pi = std::f64::consts::PI;
    let w = (12.0 + 6.0 * pi + (144.0 + 96.0 * pi).sqrt()) / (24.0 + 18.0 * pi);
    let u0 = w.sqrt();
    let spec = ProblemSpec::logistic(0.5, 2, u0).unwrap();
    let table = compute_coefficients(&spec, 30).unwrap();
    let c3 = raw(&table, 1, 3);
    let min_later = (4..=30).map(|n| raw(&table, 1, n).abs()).fold(f64::INFINITY, f64::min);
    let roots = solve_c3_zero(0.5, -1.0, -1.0, 2);
    let found = roots.iter().any(|r| (r - u0).abs() <= 1e-10);
    ok &= c3.abs() <= 1e-10 && min_later > 1e-6 && found;
    notes.push(format!("u0={u0:.10}: c3={c3:.1e}, min|c_n| n=4..30 = {min_later:.2e}, root found: {found}"));

    report("3", "isolated null coefficients", ok, notes.join("; "));
}

#[test]
fn criterion_04_beta1_exact() {
    let start = Instant::now();
    let grid = uniform_grid(0.8, 801);
    let mut worst = 0.0f64;
    for p in 1..=3 {
        for u0 in [0.5, 1.0 / 3.0] {
            let spec = ProblemSpec::logistic(1.0, p, u0).unwrap();
            let sol = SeriesSolution::from_table(&compute_coefficients(&spec, 200).unwrap());
            for &t in &grid {
                let err = (sol.evaluate(t).unwrap() - exact_beta1_bernoulli(&spec, t).unwrap()).abs();
                worst = worst.max(err);
            }
        }
    }
    let elapsed = start.elapsed();
    report(
        "4",
        "beta=1 series vs exact Bernoulli solution on [0, 0.8]",
        worst <= 1e-8 && elapsed < Duration::from_secs(1),
        format!("sup error {worst:.2e}, {elapsed:.2?}"),
    );
}

#[test]
fn criterion_05_abm() {
    let spec = ProblemSpec::logistic(0.5, 1, 0.5).unwrap();
    let sol = SeriesSolution::from_table(&compute_coefficients(&spec, 200).unwrap());
    let path = abm_solve(&spec, 0.5, 8192).unwrap();
    let worst = path
        .iter()
        .map(|&(t, u)| (sol.evaluate(t).unwrap() - u).abs())
        .fold(0.0f64, f64::max);
    report(
        "5",
        "beta=1/2 logistic series vs ABM(8192) on [0, 0.5]",
        worst <= 1e-3,
        format!("sup difference {worst:.2e}"),
    );
}

#[test]
fn criterion_06_residual() {
    let specs = random_specs(SWEEP_SIZE, SWEEP_SEED);
    let mut failures = Vec::new();
    let mut worst = 0.0f64;
    for spec in &specs {
        let sol = SeriesSolution::from_table(&compute_coefficients(spec, 200).unwrap());
        let t_max = sol.safe_t_max(1e-10);
        let t_max = if t_max.is_finite() { t_max } else { 1.0 };
        for t in uniform_grid(t_max, 32) {
            let u = sol.evaluate(t).unwrap();
            let bound = 1e-6 * (1.0 + u.abs().powi(spec.p as i32 + 1));
            let r = sol.residual(t).unwrap().abs();
            worst = worst.max(r / bound);
            if !(r <= bound) {
                failures.push(format!("{spec:?} t={t}: residual {r:.2e} > {bound:.2e}"));
            }
        }
    }
    report(
        "6",
        "residual defect on [0, safe_t_max(1e-10)] over the sweep",
        failures.is_empty(),
        format!("worst residual/bound = {worst:.2e}, {} failures; first: {:?}", failures.len(), failures.first()),
    );
}

fn drift_specs() -> Vec<ProblemSpec> {
    let mut specs = Vec::new();
    for sign in [-1.0, 1.0] {
        for p in 1..=3 {
            for beta in [0.25, 1.0 / 3.0, 0.5, 1.0] {
                for u0 in [0.5, 1.0 / 3.0, 0.25, 0.2] {
                    specs.push(ProblemSpec::new(beta, sign, sign, p, u0).unwrap());
                }
            }
        }
    }
    specs.extend(random_specs(16, SWEEP_SEED ^ 0x7));
    specs
}

#[test]
fn criterion_07_highprec_drift() {
    const N: usize = 200;
    const FLOOR: f64 = 1e-280;
    // (worst relative error, structural zeros seen, failures)
    let results: Vec<(f64, usize, Vec<String>)> = drift_specs()
        .par_iter()
        .map(|spec| {
            let table = compute_coefficients(spec, N).unwrap();
            let hp = highprec_coefficients(spec, N, 30).unwrap();
            let exact: Vec<f64> = hp.d1();
            let mut worst = 0.0f64;
            let mut zeros = 0;
            let mut fails = Vec::new();
            for n in 0..=N.min(table.valid_len().saturating_sub(1)) {
                let want = exact[n];
                if want.abs() <= FLOOR {
                    continue;
                }
                let got = table.d(1, n).unwrap();
                let local = (n.saturating_sub(1)..=(n + 1).min(N))
                    .map(|k| exact[k].abs())
                    .fold(0.0f64, f64::max);
                if want.abs() < 1e-12 * local {
                    // Exact cancellation: the double table sees rounding
                    // noise at the scale of its neighbours.
                    zeros += 1;
                    if (got - want).abs() > 1e-9 * local {
                        fails.push(format!("{spec:?} n={n}: cancelled entry {got:e} vs {want:e}"));
                    }
                    continue;
                }
                let rel = ((got - want) / want).abs();
                worst = worst.max(rel);
                if !(rel <= 1e-9) {
                    fails.push(format!("{spec:?} n={n}: {got:e} vs {want:e} (rel {rel:.1e})"));
                }
            }
            (worst, zeros, fails)
        })
        .collect();
    let worst = results.iter().map(|r| r.0).fold(0.0f64, f64::max);
    let zeros: usize = results.iter().map(|r| r.1).sum();
    let fails: Vec<&String> = results.iter().flat_map(|r| r.2.iter()).collect();
    report(
        "7",
        "double vs 30-digit coefficients, n <= 200",
        fails.is_empty(),
        format!(
            "{} specs, worst rel {worst:.2e}, {zeros} cancelled entries, {} failures; first: {:?}",
            results.len(),
            fails.len(),
            fails.first()
        ),
    );
}

fn sign_pair(beta: f64, p: usize, u0: f64) -> (CoeffTable, CoeffTable) {
    let minus = ProblemSpec::new(beta, -1.0, -1.0, p, u0).unwrap();
    let plus = minus.sign_flipped();
    (compute_coefficients(&minus, 3).unwrap(), compute_coefficients(&plus, 3).unwrap())
}

const SIGN_U0S: [f64; 3] = [0.5, 1.0 / 3.0, 0.2];

#[test]
fn criterion_08a_sign_flip_low_orders() {
    let mut fails = Vec::new();
    for beta in common::SWEEP_BETAS {
        for p in 1..=3 {
            for u0 in SIGN_U0S {
                let (c, cb) = sign_pair(beta, p, u0);
                if raw(&cb, 1, 0) != raw(&c, 1, 0) {
                    fails.push(format!("c0 beta={beta} p={p} u0={u0}"));
                }
                for h in 1..=p {
                    if !close(raw(&cb, h, 1), -raw(&c, h, 1), 1e-11, 0.0) {
                        fails.push(format!("c1^({h}) beta={beta} p={p} u0={u0}"));
                    }
                }
            }
        }
    }
    report(
        "8a",
        "sign flip: cbar_0 = c_0 and cbar_1^(h) = -c_1^(h)",
        fails.is_empty(),
        format!("{} failures; first: {:?}", fails.len(), fails.first()),
    );
}

#[test]
fn criterion_08b_sign_flip_second_order() {
    let mut fails = Vec::new();
    let mut total = 0;
    for beta in common::SWEEP_BETAS {
        for p in 1..=3 {
            for u0 in SIGN_U0S {
                let (c, cb) = sign_pair(beta, p, u0);
                total += 2;
                let (c2, cb2) = (raw(&c, 1, 2), raw(&cb, 1, 2));
                if !close(cb2, -c2, 1e-11, 0.0) {
                    fails.push(format!("cbar_2={cb2:.6e} vs -c_2={:.6e} (beta={beta} p={p} u0={u0:.4})", -c2));
                }
                let lhs = raw(&cb, 2, 2) + raw(&c, 2, 2);
                let rhs = 2.0 * gen_binom(2, 1, beta).unwrap() * raw(&c, 1, 1).powi(2);
                if !close(lhs, rhs, 1e-11, 0.0) {
                    fails.push(format!("cbar_2^(2)+c_2^(2)={lhs:.6e} vs {rhs:.6e} (beta={beta} p={p} u0={u0:.4})"));
                }
            }
        }
    }
    report(
        "8b",
        "sign flip: cbar_2 = -c_2 and cbar_2^(2) + c_2^(2) = 2[2 1]c_1^2",
        fails.is_empty(),
        format!("{} of {total} relations fail; first: {:?}", fails.len(), fails.first()),
    );
}

fn tail(beta: f64, sign: f64, p: usize, u0: f64) -> f64 {
    let spec = ProblemSpec::new(beta, sign, sign, p, u0).unwrap();
    let table = compute_coefficients(&spec, 300).unwrap();
    radius_sequence(&table, 300).unwrap().tail_summary
}

fn non_increasing(values: &[f64]) -> bool {
    values.windows(2).all(|w| w[1] <= 1.05 * w[0])
}

#[test]
fn criterion_09a_radius_trend_in_p() {
    let mut ok = true;
    let mut notes = Vec::new();
    for sign in [-1.0, 1.0] {
        let r: Vec<f64> = (1..=3).map(|p| tail(0.5, sign, p, 1.0 / 3.0)).collect();
        ok &= non_increasing(&r);
        notes.push(format!("a={sign}: {r:.4?}"));
    }
    report("9a", "radius non-increasing in p", ok, notes.join("; "));
}

#[test]
fn criterion_09b_radius_trend_in_beta() {
    let mut ok = true;
    let mut notes = Vec::new();
    for sign in [-1.0, 1.0] {
        let r: Vec<f64> = [0.25, 1.0 / 3.0, 0.5, 1.0]
            .iter()
            .map(|&b| tail(b, sign, 1, 1.0 / 3.0))
            .collect();
        ok &= non_increasing(&r);
        notes.push(format!("a={sign}: {r:.4?}"));
    }
    report("9b", "radius non-increasing in beta (1/4, 1/3, 1/2, 1)", ok, notes.join("; "));
}

#[test]
fn criterion_09c_radius_singularity() {
    let expected = (2f64.ln().powi(2) + std::f64::consts::PI.powi(2)).sqrt();
    let r = tail(1.0, -1.0, 1, 1.0 / 3.0);
    report(
        "9c",
        "beta=1 logistic u0=1/3 radius near the nearest singularity",
        ((r - expected) / expected).abs() <= 0.25,
        format!("tail summary {r:.4}, expected {expected:.4}"),
    );
}

#[test]
fn criterion_10_figure_panels() {
    let grid = uniform_grid(0.8, 100);
    let curve = |beta: f64, u0: f64| {
        let spec = ProblemSpec::logistic(beta, 1, u0).unwrap();
        SeriesSolution::from_table(&compute_coefficients(&spec, 200).unwrap())
            .evaluate_grid(&grid)
            .unwrap()
    };

    // u₀ sweep, descending u₀ must give pointwise descending curves.
    let by_u0: Vec<Vec<f64>> = [0.5, 1.0 / 3.0, 0.25, 0.2].iter().map(|&u0| curve(0.5, u0)).collect();
    let ordered = by_u0
        .windows(2)
        .all(|w| w[0].iter().zip(&w[1]).all(|(a, b)| a > b));

    let by_beta: Vec<Vec<f64>> = [1.0, 0.5, 1.0 / 3.0, 0.25].iter().map(|&b| curve(b, 0.5)).collect();
    let start_ok = by_beta.iter().all(|c| c[0] == 0.5);
    let mut distinct = true;
    for i in 0..by_beta.len() {
        for j in i + 1..by_beta.len() {
            let gap = by_beta[i].iter().zip(&by_beta[j]).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max);
            distinct &= gap > 1e-6;
        }
    }

    let dir = tempfile::tempdir().unwrap();
    let start = Instant::now();
    for name in figures::panel_names() {
        let panel = figures::panel(name).unwrap();
        let (csv, _) = figures::write_panel(&panel, Some(200), 500, None).unwrap();
        frac_bernoulli::format::write_atomic(&dir.path().join(format!("{name}.csv")), &csv.render()).unwrap();
    }
    let elapsed = start.elapsed();

    report(
        "10",
        "figure panels ordered, distinct, regenerated in time",
        ordered && start_ok && distinct && elapsed < Duration::from_secs(30),
        format!("u0 ordering: {ordered}, beta curves start at 1/2: {start_ok}, distinct: {distinct}, regeneration {elapsed:.2?}"),
    );
}
