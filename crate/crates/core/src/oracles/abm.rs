use crate::coeffs::ProblemSpec;
use crate::special::ln_gamma_unchecked;
use crate::{Error, Result};

/// Fractional Adams–Bashforth–Moulton predictor-corrector on a uniform grid.
///
/// Integrates the Volterra form
/// `u(t) = u₀ + 1/Γ(β) ∫₀ᵗ (t-s)^{β-1} f(u(s)) ds`, `f(u) = -a₀u + a₁u^{p+1}`,
/// with product-rectangle predictor weights and product-trapezoidal
/// corrector weights, one corrector pass per step. Cost is `O(steps²)`.
///
/// Returns `steps + 1` nodes `(t_j, u_j)` including `(0, u₀)`.
pub fn abm_solve(spec: &ProblemSpec, t_end: f64, steps: usize) -> Result<Vec<(f64, f64)>> {
    spec.validate()?;
    if !(t_end > 0.0 && t_end.is_finite()) {
        return Err(Error::Domain { function: "abm_solve", value: t_end });
    }
    if steps == 0 {
        return Err(Error::InvalidGrid("abm_solve needs at least one step".into()));
    }
    let beta = spec.beta;
    let f = |u: f64| -spec.a0 * u + spec.a1 * u.powi(spec.p as i32 + 1);
    let h = t_end / steps as f64;
    let hb = h.powf(beta);
    let pred_scale = hb / ln_gamma_unchecked(beta + 1.0).exp();
    let corr_scale = hb / ln_gamma_unchecked(beta + 2.0).exp();
    let b1 = beta + 1.0;

    // b_m = (m+1)^β - m^β ; c_m = (m+2)^{β+1} + m^{β+1} - 2(m+1)^{β+1}
    let pw: Vec<f64> = (0..=steps + 1).map(|m| (m as f64).powf(beta)).collect();
    let pw1: Vec<f64> = (0..=steps + 1).map(|m| (m as f64).powf(b1)).collect();
    let b: Vec<f64> = (0..=steps).map(|m| pw[m + 1] - pw[m]).collect();
    let c: Vec<f64> = (0..steps).map(|m| pw1[m + 2] + pw1[m] - 2.0 * pw1[m + 1]).collect();

    let mut u = Vec::with_capacity(steps + 1);
    let mut fu = Vec::with_capacity(steps + 1);
    u.push(spec.u0);
    fu.push(f(spec.u0));
    for n in 0..steps {
        let nf = n as f64;
        let mut pred = 0.0;
        for j in 0..=n {
            pred += b[n - j] * fu[j];
        }
        let up = spec.u0 + pred_scale * pred;

        let a0 = pw1[n] - (nf - beta) * pw[n + 1];
        let mut corr = a0 * fu[0];
        for j in 1..=n {
            corr += c[n - j] * fu[j];
        }
        let next = spec.u0 + corr_scale * (f(up) + corr);
        let fnext = f(next);
        if !(next.is_finite() && fnext.is_finite()) {
            return Err(Error::Divergence { step: n + 1 });
        }
        u.push(next);
        fu.push(fnext);
    }
    Ok(u.into_iter().enumerate().map(|(j, v)| (j as f64 * h, v)).collect())
}
