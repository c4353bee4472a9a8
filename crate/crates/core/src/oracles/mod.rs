//! Independent ground truth for the series: closed-form `β = 1` solutions,
//! a fractional Adams–Bashforth–Moulton solver and an extended-precision
//! rerun of the coefficient recursion.

mod abm;
mod exact;
mod highprec;

pub use abm::abm_solve;
pub use exact::{exact_beta1_bernoulli, exact_beta1_logistic_family};
pub use highprec::{highprec_coefficients, HighPrecTable, MIN_DIGITS};

/// Pointwise comparison of the series against an oracle.
#[derive(Debug, Clone, PartialEq)]
pub struct ValidationReport {
    pub oracle_name: String,
    pub t_grid: Vec<f64>,
    pub max_abs_err: f64,
    pub max_rel_err: f64,
    /// `(t, series, oracle)`
    pub per_point: Vec<(f64, f64, f64)>,
}

impl ValidationReport {
    pub fn from_points(oracle_name: impl Into<String>, per_point: Vec<(f64, f64, f64)>) -> Self {
        let mut max_abs_err: f64 = 0.0;
        let mut max_rel_err: f64 = 0.0;
        for &(_, s, o) in &per_point {
            let abs = (s - o).abs();
            max_abs_err = max_abs_err.max(abs);
            if o != 0.0 {
                max_rel_err = max_rel_err.max(abs / o.abs());
            } else if abs != 0.0 {
                max_rel_err = f64::INFINITY;
            }
        }
        ValidationReport {
            oracle_name: oracle_name.into(),
            t_grid: per_point.iter().map(|p| p.0).collect(),
            max_abs_err,
            max_rel_err,
            per_point,
        }
    }
}
