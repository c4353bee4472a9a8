//! Normalized series coefficients for `u` and its powers.

use crate::special::{ln_gamma_unchecked, step_ratio_unchecked, LogMagnitude};
use crate::{Error, Result};

/// One Cauchy problem `D^β u + a₀ u = a₁ u^{p+1}`, `u(0) = u₀`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProblemSpec {
    pub beta: f64,
    pub a0: f64,
    pub a1: f64,
    pub p: usize,
    pub u0: f64,
}

impl ProblemSpec {
    pub fn new(beta: f64, a0: f64, a1: f64, p: usize, u0: f64) -> Result<Self> {
        let spec = ProblemSpec { beta, a0, a1, p, u0 };
        spec.validate()?;
        Ok(spec)
    }

    /// `D^β u = u - u^{p+1}` (`a₀ = a₁ = -1`).
    pub fn logistic(beta: f64, p: usize, u0: f64) -> Result<Self> {
        Self::new(beta, -1.0, -1.0, p, u0)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.beta.is_finite() && self.beta > 0.0 && self.beta <= 1.0) {
            return Err(Error::InvalidSpec(format!("beta = {} is not in (0, 1]", self.beta)));
        }
        if self.p < 1 {
            return Err(Error::InvalidSpec("p must be at least 1".into()));
        }
        for (name, v) in [("a0", self.a0), ("a1", self.a1), ("u0", self.u0)] {
            if !v.is_finite() {
                return Err(Error::InvalidSpec(format!("{name} = {v} is not finite")));
            }
        }
        Ok(())
    }

    /// The same problem with `a₀` and `a₁` negated.
    pub fn sign_flipped(&self) -> Self {
        ProblemSpec { a0: -self.a0, a1: -self.a1, ..*self }
    }

    /// `a₀ u₀ = a₁ u₀^{p+1}`: the constant function solves the problem.
    pub fn is_equilibrium(&self) -> bool {
        self.a0 * self.u0 == self.a1 * self.u0.powi(self.p as i32 + 1)
    }
}

/// Normalized coefficients `d_n^{(h)} = c_n^{(h)} / Γ(βn+1)` of `u^h`,
/// `h = 1..=p+1`, `n = 0..=n_max`.
#[derive(Debug, Clone, PartialEq)]
pub struct CoeffTable {
    spec: ProblemSpec,
    n_max: usize,
    // d[h - 1][n]
    d: Vec<Vec<f64>>,
    overflow_at: Option<usize>,
}

impl CoeffTable {
    pub fn spec(&self) -> &ProblemSpec {
        &self.spec
    }

    pub fn n_max(&self) -> usize {
        self.n_max
    }

    /// First order at which some `d_n^{(h)}` stopped being finite. Entries
    /// at and after this order are not filled.
    pub fn overflow_at(&self) -> Option<usize> {
        self.overflow_at
    }

    /// Number of orders holding valid values.
    pub fn valid_len(&self) -> usize {
        self.overflow_at.unwrap_or(self.n_max + 1)
    }

    /// `d_n^{(h)}`.
    pub fn d(&self, h: usize, n: usize) -> Result<f64> {
        self.check(h, n)?;
        Ok(self.d[h - 1][n])
    }

    /// The normalized coefficients of `u` that hold valid values.
    pub fn d1(&self) -> &[f64] {
        &self.d[0][..self.valid_len()]
    }

    /// The normalized coefficients of `u^h`.
    pub fn power(&self, h: usize) -> Result<&[f64]> {
        self.check(h, 0)?;
        Ok(&self.d[h - 1][..self.valid_len()])
    }

    fn check(&self, h: usize, n: usize) -> Result<()> {
        let hmax = self.spec.p + 1;
        if h == 0 || h > hmax {
            return Err(Error::Index(format!("power h = {h} not in 1..={hmax}")));
        }
        if n > self.n_max {
            return Err(Error::Index(format!("order n = {n} exceeds n_max = {}", self.n_max)));
        }
        if n >= self.valid_len() {
            return Err(Error::Overflow { h, n });
        }
        Ok(())
    }
}

/// Runs the normalized recursion up to order `n_max`.
///
/// With `d_n = c_n / Γ(βn+1)` the generalized binomials in the power
/// convolution cancel, so
///
/// ```text
/// d_n^{(h)}   = Σ_{k=0}^{n} d_k^{(h-1)} d_{n-k}^{(1)}          h = 2..=p+1
/// d_{n+1}^{(1)} = Γ(βn+1)/Γ(βn+β+1) · (-a₀ d_n^{(1)} + a₁ d_n^{(p+1)})
/// ```
///
/// A non-finite value stops the fill and is recorded in
/// [`CoeffTable::overflow_at`]; earlier entries stay valid.
pub fn compute_coefficients(spec: &ProblemSpec, n_max: usize) -> Result<CoeffTable> {
    spec.validate()?;
    let hmax = spec.p + 1;
    let mut d = vec![vec![0.0; n_max + 1]; hmax];
    let mut overflow_at = None;

    d[0][0] = spec.u0;
    for n in 0..=n_max {
        if n > 0 {
            let prev = n - 1;
            let ratio = step_ratio_unchecked(prev, spec.beta);
            d[0][n] = ratio * (spec.a1 * d[hmax - 1][prev] - spec.a0 * d[0][prev]);
        }
        for h in 1..hmax {
            let (lower, upper) = d.split_at_mut(h);
            let base = &lower[0];
            let below = &lower[h - 1];
            upper[0][n] = (0..=n).map(|k| below[k] * base[n - k]).sum();
        }
        if d.iter().any(|row| !row[n].is_finite()) {
            overflow_at = Some(n);
            for row in d.iter_mut() {
                row[n] = 0.0;
            }
            break;
        }
    }

    Ok(CoeffTable { spec: *spec, n_max, d, overflow_at })
}

/// Raw coefficient `c_n^{(h)} = d_n^{(h)} Γ(βn+1)` in log-magnitude form.
pub fn raw_coefficient(table: &CoeffTable, h: usize, n: usize) -> Result<LogMagnitude> {
    let dn = table.d(h, n)?;
    let lg = ln_gamma_unchecked(n as f64 * table.spec.beta + 1.0);
    Ok(LogMagnitude::from_real(dn).scale_log(lg))
}
