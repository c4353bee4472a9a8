//! Closed formulas for the first raw coefficients `c_1`, `c_2`, `c_3` and for
//! `c_1^{(h)}`, `c_2^{(h)}`. These are independent of the recursion and serve
//! as oracles for it.

use crate::coeffs::ProblemSpec;
use crate::special::gen_binom;

fn u0p(spec: &ProblemSpec) -> f64 {
    spec.u0.powi(spec.p as i32)
}

/// `a₀ - a₁ u₀^p`
fn lead(spec: &ProblemSpec) -> f64 {
    spec.a0 - spec.a1 * u0p(spec)
}

/// `a₀ - a₁ (p+1) u₀^p`
fn lead_p1(spec: &ProblemSpec) -> f64 {
    spec.a0 - spec.a1 * (spec.p + 1) as f64 * u0p(spec)
}

fn binom21(spec: &ProblemSpec) -> f64 {
    gen_binom(2, 1, spec.beta).expect("spec beta is validated")
}

/// `c_1 = -u₀ (a₀ - a₁ u₀^p)`
pub fn closed_c1(spec: &ProblemSpec) -> f64 {
    -spec.u0 * lead(spec)
}

/// `c_2 = u₀ (a₀ - a₁ u₀^p)(a₀ - a₁ (p+1) u₀^p)`
pub fn closed_c2(spec: &ProblemSpec) -> f64 {
    spec.u0 * lead(spec) * lead_p1(spec)
}

/// `c_3 = -u₀ (a₀ - a₁u₀^p) [ (a₀ - a₁(p+1)u₀^p)² - p(p+1)/2 · [2 1]_β · a₁u₀^p (a₀ - a₁u₀^p) ]`
pub fn closed_c3(spec: &ProblemSpec) -> f64 {
    let p = spec.p as f64;
    let l = lead(spec);
    let lp1 = lead_p1(spec);
    let bracket = lp1 * lp1 - 0.5 * p * (p + 1.0) * binom21(spec) * spec.a1 * u0p(spec) * l;
    -spec.u0 * l * bracket
}

/// `c_1^{(h)} = -h u₀^h (a₀ - a₁ u₀^p)`
pub fn closed_c1_power(spec: &ProblemSpec, h: usize) -> f64 {
    -(h as f64) * spec.u0.powi(h as i32) * lead(spec)
}

/// `c_2^{(h)} = u₀^h (a₀ - a₁u₀^p) [ h (a₀ - a₁(p+1)u₀^p) + h(h-1)/2 · [2 1]_β · (a₀ - a₁u₀^p) ]`
pub fn closed_c2_power(spec: &ProblemSpec, h: usize) -> f64 {
    let hf = h as f64;
    let l = lead(spec);
    spec.u0.powi(h as i32)
        * l
        * (hf * lead_p1(spec) + 0.5 * hf * (hf - 1.0) * binom21(spec) * l)
}

const SCAN_POINTS: usize = 20_000;
const ROOT_TOL: f64 = 1e-12;

/// Real roots of `u₀ ↦ c_3(u₀)` on the open interval `(0, 1)`.
///
/// The interval is scanned on a uniform grid for sign changes (or exact
/// zeros) and each bracket is bisected to width `1e-12`. Roots of even
/// multiplicity are not detected. The result is sorted ascending.
pub fn solve_c3_zero(beta: f64, a0: f64, a1: f64, p: usize) -> Vec<f64> {
    let f = |u0: f64| closed_c3(&ProblemSpec { beta, a0, a1, p, u0 });
    let h = 1.0 / SCAN_POINTS as f64;
    let mut roots = Vec::new();
    let mut x_prev = h;
    let mut f_prev = f(x_prev);
    if f_prev == 0.0 {
        roots.push(x_prev);
    }
    for i in 2..SCAN_POINTS {
        let x = i as f64 * h;
        let fx = f(x);
        if fx == 0.0 {
            roots.push(x);
        } else if f_prev != 0.0 && (fx < 0.0) != (f_prev < 0.0) {
            roots.push(bisect(&f, x_prev, x, f_prev));
        }
        x_prev = x;
        f_prev = fx;
    }
    roots
}

fn bisect(f: &impl Fn(f64) -> f64, mut lo: f64, mut hi: f64, mut f_lo: f64) -> f64 {
    while hi - lo > ROOT_TOL {
        let mid = 0.5 * (lo + hi);
        let fm = f(mid);
        if fm == 0.0 {
            return mid;
        }
        if (fm < 0.0) == (f_lo < 0.0) {
            lo = mid;
            f_lo = fm;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}
