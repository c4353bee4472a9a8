//! Evaluation of the truncated series `u_N(t) = Σ_{n≤N} d_n t^{βn}`, its
//! termwise Caputo derivative and the residual of the equation.

use crate::coeffs::{CoeffTable, ProblemSpec};
use crate::radius::radius_from_coefficients;
use crate::special::step_ratio_unchecked;
use crate::{Error, Result};

/// Margin applied to the radius estimate by [`SeriesSolution::safe_t_max`].
pub const RADIUS_MARGIN: f64 = 0.9;

/// Default last-term tolerance used to pick evaluation ranges.
pub const DEFAULT_TAIL_TOL: f64 = 1e-10;

#[derive(Debug, Clone, PartialEq)]
pub struct SeriesSolution {
    spec: ProblemSpec,
    d: Vec<f64>,
}

impl SeriesSolution {
    /// Takes the valid normalized coefficients of `u` from a table.
    pub fn from_table(table: &CoeffTable) -> Self {
        SeriesSolution { spec: *table.spec(), d: table.d1().to_vec() }
    }

    /// Builds a series from explicit normalized coefficients.
    pub fn from_coefficients(spec: ProblemSpec, d: Vec<f64>) -> Self {
        SeriesSolution { spec, d }
    }

    pub fn spec(&self) -> &ProblemSpec {
        &self.spec
    }

    pub fn beta(&self) -> f64 {
        self.spec.beta
    }

    pub fn coefficients(&self) -> &[f64] {
        &self.d
    }

    /// Truncation order `N` (index of the last coefficient).
    pub fn order(&self) -> usize {
        self.d.len().saturating_sub(1)
    }

    /// `Σ d_n x^n` with `x = t^β`, by Horner's rule in `x`.
    pub fn evaluate(&self, t: f64) -> Result<f64> {
        if !(t >= 0.0) {
            return Err(Error::Domain { function: "evaluate", value: t });
        }
        Ok(self.horner(t.powf(self.spec.beta)))
    }

    fn horner(&self, x: f64) -> f64 {
        self.d.iter().rev().fold(0.0, |acc, &c| acc * x + c)
    }

    pub fn evaluate_grid(&self, t_grid: &[f64]) -> Result<Vec<f64>> {
        check_grid(t_grid)?;
        Ok(t_grid.iter().map(|&t| self.horner(t.powf(self.spec.beta))).collect())
    }

    /// Termwise Caputo derivative.
    ///
    /// `D^β t^{βn}/Γ(βn+1) = t^{β(n-1)}/Γ(β(n-1)+1)` shifts raw coefficients
    /// down by one; in normalized form `e_n = d_{n+1} Γ(βn+β+1)/Γ(βn+1)`.
    pub fn caputo_derivative(&self) -> Result<SeriesSolution> {
        if self.d.len() < 2 {
            return Err(Error::EmptySeries);
        }
        let beta = self.spec.beta;
        let e = self.d[1..]
            .iter()
            .enumerate()
            .map(|(n, &dn1)| dn1 / step_ratio_unchecked(n, beta))
            .collect();
        Ok(SeriesSolution { spec: self.spec, d: e })
    }

    /// `D^β u_N(t) + a₀ u_N(t) - a₁ u_N(t)^{p+1}`.
    pub fn residual(&self, t: f64) -> Result<f64> {
        let deriv = self.caputo_derivative()?;
        self.residual_with(&deriv, t)
    }

    /// Residual on a grid, sharing one derivative series.
    pub fn residual_grid(&self, t_grid: &[f64]) -> Result<Vec<f64>> {
        check_grid(t_grid)?;
        let deriv = self.caputo_derivative()?;
        t_grid.iter().map(|&t| self.residual_with(&deriv, t)).collect()
    }

    fn residual_with(&self, deriv: &SeriesSolution, t: f64) -> Result<f64> {
        let u = self.evaluate(t)?;
        let du = deriv.evaluate(t)?;
        let s = &self.spec;
        Ok(du + s.a0 * u - s.a1 * u.powi(s.p as i32 + 1))
    }

    /// Largest `t` at which the series can be trusted.
    ///
    /// The last retained terms must satisfy `|d_k| t^{βk} ≤ tol` for
    /// `k ∈ {N-1, N}` (two terms, so that series with vanishing even or odd
    /// orders are still bounded), and `t` may not exceed
    /// [`RADIUS_MARGIN`] times the radius estimate when that is finite.
    ///
    /// Returns `f64::INFINITY` when neither bound applies, e.g. for a
    /// constant series. Returns `0` for a non-positive or NaN `tol`.
    pub fn safe_t_max(&self, tol: f64) -> f64 {
        if !(tol > 0.0) {
            return 0.0;
        }
        let beta = self.spec.beta;
        let n = self.order();
        let mut t_max = f64::INFINITY;
        for k in n.saturating_sub(1).max(1)..=n {
            let dk = self.d[k].abs();
            if dk > 0.0 {
                let t = ((tol.ln() - dk.ln()) / (beta * k as f64)).exp();
                t_max = t_max.min(t);
            }
        }
        let radius = radius_from_coefficients(&self.d, beta).tail_summary;
        if radius.is_finite() {
            t_max = t_max.min(RADIUS_MARGIN * radius);
        }
        if t_max > 0.0 {
            t_max
        } else {
            0.0
        }
    }
}

fn check_grid(t_grid: &[f64]) -> Result<()> {
    if let Some(bad) = t_grid.iter().find(|t| !(**t >= 0.0 && t.is_finite())) {
        return Err(Error::InvalidGrid(format!("grid contains {bad}")));
    }
    if t_grid.windows(2).any(|w| w[1] < w[0]) {
        return Err(Error::InvalidGrid("grid is not ascending".into()));
    }
    Ok(())
}

/// `samples` equally spaced points on `[0, t_max]`.
pub fn uniform_grid(t_max: f64, samples: usize) -> Vec<f64> {
    match samples {
        0 => Vec::new(),
        1 => vec![0.0],
        _ => {
            let step = t_max / (samples - 1) as f64;
            (0..samples).map(|i| if i + 1 == samples { t_max } else { i as f64 * step }).collect()
        }
    }
}
