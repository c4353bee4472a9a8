use crate::coeffs::ProblemSpec;
use crate::{Error, Result};

/// `e^t / (c₀ + e^{pt})^{1/p}` with `c₀ = u₀^{-p} - 1`: the `β = 1` solution
/// of `u' = u - u^{p+1}`.
pub fn exact_beta1_logistic_family(u0: f64, p: usize, t: f64) -> Result<f64> {
    if !(u0 > 0.0 && u0 < 1.0) {
        return Err(Error::Domain { function: "exact_beta1_logistic_family", value: u0 });
    }
    if p == 0 {
        return Err(Error::InvalidSpec("p must be at least 1".into()));
    }
    if !(t >= 0.0) {
        return Err(Error::Domain { function: "exact_beta1_logistic_family", value: t });
    }
    let pf = p as f64;
    let c0 = u0.powi(-(p as i32)) - 1.0;
    // e^t (c₀ + e^{pt})^{-1/p} = (c₀ e^{-pt} + 1)^{-1/p}, finite for large t
    Ok((c0 * (-pf * t).exp() + 1.0).powf(-1.0 / pf))
}

/// Solution of `u' + a₀u = a₁u^{p+1}` through `v = u^{-p}`, which solves the
/// linear problem `v' = p a₀ v - p a₁`.
pub fn exact_beta1_bernoulli(spec: &ProblemSpec, t: f64) -> Result<f64> {
    spec.validate()?;
    if spec.beta != 1.0 {
        return Err(Error::InvalidSpec(format!("closed form needs beta = 1, got {}", spec.beta)));
    }
    if spec.u0 == 0.0 {
        return Err(Error::Domain { function: "exact_beta1_bernoulli", value: spec.u0 });
    }
    if !(t >= 0.0) {
        return Err(Error::Domain { function: "exact_beta1_bernoulli", value: t });
    }
    let p = spec.p;
    let pf = p as f64;
    let v0 = spec.u0.powi(-(p as i32));
    let (v, critical_t) = if spec.a0 == 0.0 {
        let slope = -pf * spec.a1;
        (v0 + slope * t, if slope != 0.0 { -v0 / slope } else { f64::NAN })
    } else {
        let k = spec.a1 / spec.a0;
        let rate = pf * spec.a0;
        let v = (v0 - k) * (rate * t).exp() + k;
        // (v₀ - k) e^{rate t*} = -k
        let ratio = -k / (v0 - k);
        (v, if ratio > 0.0 { ratio.ln() / rate } else { f64::NAN })
    };
    let even = p.is_multiple_of(2);
    if v == 0.0 || (even && v < 0.0) || !v.is_finite() {
        return Err(Error::DomainExit { critical_t });
    }
    let mag = v.abs().powf(-1.0 / pf);
    // odd p: u = v^{-1/p} keeps the sign of v; even p: u keeps the sign of u₀
    let sign = if even { spec.u0.signum() } else { v.signum() };
    Ok(sign * mag)
}
