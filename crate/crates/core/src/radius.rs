//! Radius-of-convergence diagnostic `r_n = |d_n|^{-1/(βn)}`.

use crate::coeffs::CoeffTable;
use crate::{Error, Result};

/// Default number of terms for radius runs.
pub const DEFAULT_RADIUS_TERMS: usize = 300;

/// Estimates `r_n` and a summary of their tail.
#[derive(Debug, Clone, PartialEq)]
pub struct RadiusSequence {
    /// `(n, r_n)` for every `n` with `d_n ≠ 0`.
    pub entries: Vec<(usize, f64)>,
    /// Median of the last 20% of `entries`; `+inf` when there are none.
    pub tail_summary: f64,
    /// Orders with `d_n = 0`.
    pub skipped: Vec<usize>,
}

/// Computes `r_n` for `n = 1..=n_limit` from the normalized coefficients.
///
/// Since `d_n = c_n / Γ(βn+1)`, `|d_n|^{-1/(βn)} = (Γ(βn+1)/|c_n|)^{1/(βn)}`.
pub fn radius_sequence(table: &CoeffTable, n_limit: usize) -> Result<RadiusSequence> {
    if n_limit == 0 || n_limit > table.n_max() {
        return Err(Error::Index(format!(
            "n_limit = {n_limit} not in 1..={}",
            table.n_max()
        )));
    }
    if n_limit >= table.valid_len() {
        return Err(Error::Overflow { h: 1, n: table.valid_len() });
    }
    Ok(radius_from_coefficients(&table.d1()[..=n_limit], table.spec().beta))
}

pub(crate) fn radius_from_coefficients(d: &[f64], beta: f64) -> RadiusSequence {
    let mut entries = Vec::with_capacity(d.len());
    let mut skipped = Vec::new();
    for (n, &dn) in d.iter().enumerate().skip(1) {
        if dn == 0.0 {
            skipped.push(n);
            continue;
        }
        let r = (-dn.abs().ln() / (beta * n as f64)).exp();
        if r.is_finite() && r > 0.0 {
            entries.push((n, r));
        } else {
            skipped.push(n);
        }
    }
    let tail_summary = tail_median(&entries);
    RadiusSequence { entries, tail_summary, skipped }
}

fn tail_median(entries: &[(usize, f64)]) -> f64 {
    if entries.is_empty() {
        return f64::INFINITY;
    }
    let take = (entries.len() / 5).max(1);
    let mut tail: Vec<f64> = entries[entries.len() - take..].iter().map(|e| e.1).collect();
    tail.sort_by(f64::total_cmp);
    let m = tail.len() / 2;
    if tail.len() % 2 == 1 {
        tail[m]
    } else {
        0.5 * (tail[m - 1] + tail[m])
    }
}
