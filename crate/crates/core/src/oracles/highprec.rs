use astro_float::{BigFloat, Consts, RoundingMode, Sign};

use crate::coeffs::ProblemSpec;
use crate::special::ldexp;
use crate::{Error, Result};

/// Smallest accepted working precision, in decimal digits.
pub const MIN_DIGITS: u32 = 30;
const MAX_ORDER: usize = 400;
const GUARD_BITS: usize = 32;
const RM: RoundingMode = RoundingMode::ToEven;

/// `B_{2k}` as exact fractions, `k = 1..=20`.
const BERNOULLI: [(i128, i128); 20] = [
    (1, 6),
    (-1, 30),
    (1, 42),
    (-1, 30),
    (5, 66),
    (-691, 2730),
    (7, 6),
    (-3617, 510),
    (43867, 798),
    (-174611, 330),
    (854513, 138),
    (-236364091, 2730),
    (8553103, 6),
    (-23749461029, 870),
    (8615841276005, 14322),
    (-7709321041217, 510),
    (2577687858367, 6),
    (-26315271553053477373, 1919190),
    (2929993913841559, 6),
    (-261082718496449122051, 13530),
];

struct Ctx {
    p: usize,
    cc: Consts,
    stirling: Vec<BigFloat>,
    half_ln_2pi: BigFloat,
    shift_to: f64,
}

impl Ctx {
    fn new(digits: u32) -> Self {
        let p = (digits as f64 * std::f64::consts::LOG2_10).ceil() as usize + GUARD_BITS;
        let mut cc = Consts::new().expect("astro-float constants");
        let stirling = BERNOULLI
            .iter()
            .enumerate()
            .map(|(i, &(num, den))| {
                let k = (i + 1) as i128;
                let den = den * (2 * k) * (2 * k - 1);
                BigFloat::from_i128(num, p).div(&BigFloat::from_i128(den, p), p, RM)
            })
            .collect();
        let two_pi = cc.pi(p, RM).mul(&BigFloat::from_i32(2, p), p, RM);
        let half_ln_2pi = two_pi.ln(p, RM, &mut cc).div(&BigFloat::from_i32(2, p), p, RM);
        // With 20 Stirling terms the truncation error at x ≥ 40 is below 1e-48;
        // it shrinks like x^{-41}, so larger precisions shift further.
        let extra = (digits as f64 + 5.0 - 47.0).max(0.0) / 41.0;
        let shift_to = 40.0 * 10f64.powf(extra);
        Ctx { p, cc, stirling, half_ln_2pi, shift_to }
    }

    fn num(&self, x: f64) -> BigFloat {
        BigFloat::from_f64(x, self.p)
    }

    fn add(&self, a: &BigFloat, b: &BigFloat) -> BigFloat {
        a.add(b, self.p, RM)
    }

    fn sub(&self, a: &BigFloat, b: &BigFloat) -> BigFloat {
        a.sub(b, self.p, RM)
    }

    fn mul(&self, a: &BigFloat, b: &BigFloat) -> BigFloat {
        a.mul(b, self.p, RM)
    }

    fn ln(&mut self, a: &BigFloat) -> BigFloat {
        a.ln(self.p, RM, &mut self.cc)
    }

    fn exp(&mut self, a: &BigFloat) -> BigFloat {
        a.exp(self.p, RM, &mut self.cc)
    }

    /// `ln Γ(x)` for `x > 0`: upward shift past `shift_to`, then Stirling.
    fn ln_gamma(&mut self, x: &BigFloat) -> BigFloat {
        let one = self.num(1.0);
        let mut y = x.clone();
        let mut prod = one.clone();
        while to_f64(&y) < self.shift_to {
            prod = self.mul(&prod, &y);
            y = self.add(&y, &one);
        }
        let ln_y = self.ln(&y);
        let half = self.num(0.5);
        let mut acc = self.mul(&self.sub(&y, &half), &ln_y);
        acc = self.sub(&acc, &y);
        acc = self.add(&acc, &self.half_ln_2pi);
        let inv = y.reciprocal(self.p, RM);
        let inv2 = self.mul(&inv, &inv);
        let mut series = BigFloat::from_i32(0, self.p);
        for c in self.stirling.iter().rev() {
            series = self.add(&self.mul(&series, &inv2), c);
        }
        acc = self.add(&acc, &self.mul(&series, &inv));
        let ln_prod = self.ln(&prod);
        self.sub(&acc, &ln_prod)
    }
}

/// Rounds an extended-precision value to the nearest-ish `f64`.
fn to_f64(x: &BigFloat) -> f64 {
    if x.is_zero() {
        return 0.0;
    }
    if x.is_nan() {
        return f64::NAN;
    }
    if x.is_inf() {
        return if x.is_positive() { f64::INFINITY } else { f64::NEG_INFINITY };
    }
    let (words, _, sign, exponent, _) = x.as_raw_parts().expect("finite value");
    let n = words.len();
    let hi = words[n - 1] as f64;
    let lo = if n >= 2 { words[n - 2] as f64 } else { 0.0 };
    // value = 0.m · 2^exponent with the most significant word last
    let mant = hi + lo * 2f64.powi(-64);
    let v = ldexp(mant, exponent - 64);
    if sign == Sign::Neg {
        -v
    } else {
        v
    }
}

/// Normalized coefficients `d_n^{(h)}` recomputed with extended precision.
#[derive(Debug)]
pub struct HighPrecTable {
    spec: ProblemSpec,
    digits: u32,
    d: Vec<Vec<BigFloat>>,
}

impl HighPrecTable {
    pub fn spec(&self) -> &ProblemSpec {
        &self.spec
    }

    pub fn digits(&self) -> u32 {
        self.digits
    }

    pub fn n_max(&self) -> usize {
        self.d[0].len() - 1
    }

    /// `d_n^{(h)}` rounded to `f64`.
    pub fn d(&self, h: usize, n: usize) -> Result<f64> {
        let row = self
            .d
            .get(h.wrapping_sub(1))
            .ok_or_else(|| Error::Index(format!("power h = {h} not in 1..={}", self.d.len())))?;
        row.get(n)
            .map(to_f64)
            .ok_or_else(|| Error::Index(format!("order n = {n} exceeds n_max = {}", row.len() - 1)))
    }

    /// All `d_n^{(1)}` rounded to `f64`.
    pub fn d1(&self) -> Vec<f64> {
        self.d[0].iter().map(to_f64).collect()
    }

    /// `log10 |d_n^{(h)}|` taken from the extended value, so it stays finite
    /// below the `f64` range. `-inf` for zero.
    pub fn log10_abs(&self, h: usize, n: usize) -> Result<f64> {
        let v = self
            .d
            .get(h.wrapping_sub(1))
            .and_then(|row| row.get(n))
            .ok_or_else(|| Error::Index(format!("(h, n) = ({h}, {n}) out of range")))?;
        if v.is_zero() {
            return Ok(f64::NEG_INFINITY);
        }
        let (words, _, _, exponent, _) = v.as_raw_parts().expect("finite value");
        let top = words[words.len() - 1] as f64 * 2f64.powi(-64);
        Ok(top.log10() + exponent as f64 * std::f64::consts::LOG10_2)
    }

    /// Evaluates `Σ d_n t^{βn}` in extended precision, then rounds.
    pub fn evaluate(&self, t: f64) -> Result<f64> {
        if !(t >= 0.0) {
            return Err(Error::Domain { function: "evaluate", value: t });
        }
        let mut ctx = Ctx::new(self.digits);
        if t == 0.0 {
            return Ok(to_f64(&self.d[0][0]));
        }
        let ln_t = ctx.ln(&ctx.num(t));
        let x = ctx.exp(&ctx.mul(&ln_t, &ctx.num(self.spec.beta)));
        let mut acc = BigFloat::from_i32(0, ctx.p);
        for c in self.d[0].iter().rev() {
            acc = ctx.add(&ctx.mul(&acc, &x), c);
        }
        Ok(to_f64(&acc))
    }
}

/// Reruns the normalized recursion with at least `digits` decimal digits,
/// including `ln Γ` and `exp`. Inputs are taken as the exact binary values of
/// the `f64` fields, so differences against [`crate::compute_coefficients`]
/// measure floating-point drift only.
pub fn highprec_coefficients(spec: &ProblemSpec, n_max: usize, digits: u32) -> Result<HighPrecTable> {
    spec.validate()?;
    if digits < MIN_DIGITS {
        return Err(Error::InvalidSpec(format!("digits = {digits} is below {MIN_DIGITS}")));
    }
    if n_max > MAX_ORDER {
        return Err(Error::Index(format!("n_max = {n_max} exceeds {MAX_ORDER}")));
    }
    let mut ctx = Ctx::new(digits);
    let hmax = spec.p + 1;
    let beta = ctx.num(spec.beta);
    let a0 = ctx.num(spec.a0);
    let a1 = ctx.num(spec.a1);
    let one = ctx.num(1.0);
    let zero = BigFloat::from_i32(0, ctx.p);

    let mut d: Vec<Vec<BigFloat>> = vec![Vec::with_capacity(n_max + 1); hmax];
    // ln Γ(βn + 1) for the current n
    let mut lg_prev = BigFloat::from_i32(0, ctx.p);
    for n in 0..=n_max {
        let d1n = if n == 0 {
            ctx.num(spec.u0)
        } else {
            let arg = ctx.add(&ctx.mul(&ctx.num(n as f64), &beta), &one);
            let lg = ctx.ln_gamma(&arg);
            let ratio = ctx.exp(&ctx.sub(&lg_prev, &lg));
            lg_prev = lg;
            let lin = ctx.mul(&a0, &d[0][n - 1]);
            let nonlin = ctx.mul(&a1, &d[hmax - 1][n - 1]);
            ctx.mul(&ratio, &ctx.sub(&nonlin, &lin))
        };
        d[0].push(d1n);
        for h in 1..hmax {
            let mut s = zero.clone();
            for k in 0..=n {
                s = ctx.add(&s, &ctx.mul(&d[h - 1][k], &d[0][n - k]));
            }
            d[h].push(s);
        }
    }
    Ok(HighPrecTable { spec: *spec, digits, d })
}
