#![allow(dead_code)]

use frac_bernoulli::ProblemSpec;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const SWEEP_BETAS: [f64; 4] = [0.25, 0.5, 0.75, 1.0];

/// Deterministic random specs: β ∈ {1/4, 1/2, 3/4, 1}, a₀, a₁ ∈ [-2, 2],
/// p ∈ {1, 2, 3}, u₀ ∈ (0, 1).
pub fn random_specs(count: usize, seed: u64) -> Vec<ProblemSpec> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let beta = SWEEP_BETAS[rng.gen_range(0..4)];
            let a0 = rng.gen_range(-2.0..=2.0);
            let a1 = rng.gen_range(-2.0..=2.0);
            let p = rng.gen_range(1..=3);
            let u0 = loop {
                let u: f64 = rng.gen();
                if u > 0.0 {
                    break u;
                }
            };
            ProblemSpec::new(beta, a0, a1, p, u0).unwrap()
        })
        .collect()
}

/// `|got - want| ≤ rel·|want|` or `|got - want| ≤ abs`.
pub fn close(got: f64, want: f64, rel: f64, abs: f64) -> bool {
    let d = (got - want).abs();
    d <= rel * want.abs() || d <= abs
}
