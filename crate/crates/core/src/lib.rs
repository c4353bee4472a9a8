//! Local series solutions of the Caputo fractional Bernoulli equation
//!
//! ```text
//! D^β u + a₀ u = a₁ u^{p+1},   u(0) = u₀,   β ∈ (0, 1],  p ≥ 1
//! ```
//!
//! The solution is represented as `u(t) = Σ d_n t^{βn}` where the normalized
//! coefficients `d_n = c_n / Γ(βn + 1)` are produced by a Cauchy-product
//! recursion ([`compute_coefficients`]). On top of the coefficient table the
//! crate provides evaluation and residual checks ([`series`]), the
//! radius-of-convergence diagnostic ([`radius`]), closed formulas for the first
//! coefficients ([`closed`]) and a set of independent oracles ([`oracles`]).
//!
//! ```
//! use frac_bernoulli::{compute_coefficients, ProblemSpec, SeriesSolution};
//!
//! let spec = ProblemSpec::new(1.0, -1.0, -1.0, 1, 0.5).unwrap();
//! let table = compute_coefficients(&spec, 200).unwrap();
//! let sol = SeriesSolution::from_table(&table);
//! let u = sol.evaluate(1.0).unwrap();
//! let e = std::f64::consts::E;
//! assert!((u - e / (1.0 + e)).abs() < 1e-8);
//! ```

pub mod cli;
pub mod closed;
pub mod coeffs;
mod error;
pub mod format;
pub mod oracles;
pub mod radius;
pub mod series;
pub mod special;

pub use closed::{
    closed_c1, closed_c1_power, closed_c2, closed_c2_power, closed_c3, solve_c3_zero,
};
pub use coeffs::{compute_coefficients, raw_coefficient, CoeffTable, ProblemSpec};
pub use error::{Error, Result};
pub use radius::{radius_sequence, RadiusSequence};
pub use series::SeriesSolution;
pub use special::{gamma_step_ratio, gen_binom, ln_gamma, LogMagnitude};
