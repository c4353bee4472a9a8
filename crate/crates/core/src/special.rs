//! Log-domain gamma machinery and generalized β-binomial coefficients.
//!
//! Everything here works with `ln Γ` and exponentiates last, so quantities
//! such as `Γ(301)` are never materialized.

use std::f64::consts::LN_2;

use crate::{Error, Result};

const EULER_GAMMA: f64 = 0.577_215_664_901_532_860_6;
const HALF_LN_2PI: f64 = 0.918_938_533_204_672_741_8;

/// `ζ(k) - 1` for `k = 2..=30`.
const ZETA_MINUS_ONE: [f64; 29] = [
    0.644_934_066_848_226_436_47,
    0.202_056_903_159_594_285_4,
    0.082_323_233_711_138_191_516,
    0.036_927_755_143_369_926_331,
    0.017_343_061_984_449_139_715,
    0.008_349_277_381_922_826_839_8,
    0.004_077_356_197_944_339_378_7,
    0.002_008_392_826_082_214_417_9,
    0.000_994_575_127_818_085_337_15,
    0.000_494_188_604_119_464_558_7,
    0.000_246_086_553_308_048_298_64,
    0.000_122_713_347_578_489_146_75,
    0.000_061_248_135_058_704_829_259,
    0.000_030_588_236_307_020_493_552,
    0.000_015_282_259_408_651_871_733,
    0.000_007_637_197_637_899_762_273_6,
    0.000_003_817_293_264_999_839_856_5,
    0.000_001_908_212_716_553_938_925_7,
    0.000_000_953_962_033_872_796_113_15,
    0.000_000_476_932_986_787_806_463_12,
    0.000_000_238_450_502_727_732_99,
    0.000_000_119_219_925_965_311_073_07,
    0.000_000_059_608_189_051_259_479_612,
    0.000_000_029_803_503_514_652_280_186,
    0.000_000_014_901_554_828_365_041_235,
    0.000_000_007_450_711_789_835_429_492,
    0.000_000_003_725_334_024_788_457_054_8,
    0.000_000_001_862_659_723_513_049_006_4,
    0.000_000_000_931_327_432_419_668_182_87,
];

/// `B_{2k} / (2k (2k - 1))` for `k = 1..=8`.
const STIRLING: [f64; 8] = [
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360_360.0,
    1.0 / 156.0,
    -3617.0 / 122_400.0,
];

/// `ln Γ(2 + z)` for `|z| ≤ 1/2` from the Taylor series around 2.
fn ln_gamma_two_plus(z: f64) -> f64 {
    let mut acc = 0.0;
    // Horner over k = 30..2 of (-1)^k (ζ(k)-1)/k z^k, then the linear term.
    for (i, zm1) in ZETA_MINUS_ONE.iter().enumerate().rev() {
        let k = (i + 2) as f64;
        let sign = if (i + 2) % 2 == 0 { 1.0 } else { -1.0 };
        acc = acc * z + sign * zm1 / k;
    }
    z * ((1.0 - EULER_GAMMA) + z * acc)
}

fn ln_gamma_stirling(x: f64) -> f64 {
    let inv = 1.0 / x;
    let inv2 = inv * inv;
    let mut series = 0.0;
    for c in STIRLING.iter().rev() {
        series = series * inv2 + c;
    }
    (x - 0.5) * x.ln() - x + HALF_LN_2PI + series * inv
}

/// Natural log of the gamma function for `x > 0`.
///
/// Uses the Taylor expansion about 2 on `[0.5, 2.5]` (with one recurrence step
/// below 1.5), upward recurrence below 0.5, downward recurrence on `(2.5, 10)`
/// and the Stirling series from 10 on. `ln_gamma(1)` and `ln_gamma(2)` are
/// exactly zero.
pub fn ln_gamma(x: f64) -> Result<f64> {
    if !(x.is_finite() && x > 0.0) {
        return Err(Error::Domain { function: "ln_gamma", value: x });
    }
    Ok(ln_gamma_unchecked(x))
}

pub(crate) fn ln_gamma_unchecked(x: f64) -> f64 {
    if x >= 10.0 {
        ln_gamma_stirling(x)
    } else if x > 2.5 {
        let mut y = x;
        let mut prod = 1.0;
        while y > 2.5 {
            y -= 1.0;
            prod *= y;
        }
        ln_gamma_two_plus(y - 2.0) + prod.ln()
    } else if x >= 1.5 {
        ln_gamma_two_plus(x - 2.0)
    } else if x >= 0.5 {
        let z = x - 1.0;
        ln_gamma_two_plus(z) - z.ln_1p()
    } else {
        // Γ(x) = Γ(x + 1) / x
        ln_gamma_unchecked(x + 1.0) - x.ln()
    }
}

fn check_beta(beta: f64) -> Result<()> {
    if beta.is_finite() && beta > 0.0 && beta <= 1.0 {
        Ok(())
    } else {
        Err(Error::Domain { function: "beta", value: beta })
    }
}

/// Generalized binomial `Γ(nβ+1) / (Γ(kβ+1) Γ((n-k)β+1))`.
pub fn gen_binom(n: usize, k: usize, beta: f64) -> Result<f64> {
    if k > n {
        return Err(Error::Index(format!("gen_binom: k = {k} exceeds n = {n}")));
    }
    check_beta(beta)?;
    let lg = |m: usize| ln_gamma_unchecked(m as f64 * beta + 1.0);
    Ok((lg(n) - lg(k) - lg(n - k)).exp())
}

/// `Γ(nβ+1) / Γ((n+1)β+1)`, the per-step factor of the normalized recursion.
pub fn gamma_step_ratio(n: usize, beta: f64) -> Result<f64> {
    check_beta(beta)?;
    Ok(step_ratio_unchecked(n, beta))
}

pub(crate) fn step_ratio_unchecked(n: usize, beta: f64) -> f64 {
    let lo = ln_gamma_unchecked(n as f64 * beta + 1.0);
    let hi = ln_gamma_unchecked((n + 1) as f64 * beta + 1.0);
    (lo - hi).exp()
}

/// A real number stored as sign and natural log of its magnitude.
///
/// Houses raw coefficients `c_n = d_n Γ(βn+1)` whose magnitudes leave the
/// `f64` range long before the normalized `d_n` do.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LogMagnitude {
    sign: i8,
    log_abs: f64,
}

impl LogMagnitude {
    pub const ZERO: LogMagnitude = LogMagnitude { sign: 0, log_abs: f64::NEG_INFINITY };

    /// Builds from parts. A zero sign yields the canonical zero regardless of
    /// `log_abs`; a `-inf` magnitude is zero as well.
    pub fn new(sign: i8, log_abs: f64) -> Self {
        if sign == 0 || log_abs == f64::NEG_INFINITY {
            Self::ZERO
        } else {
            LogMagnitude { sign: sign.signum(), log_abs }
        }
    }

    pub fn from_real(x: f64) -> Self {
        if x == 0.0 {
            return Self::ZERO;
        }
        let sign = if x < 0.0 { -1 } else { 1 };
        let a = x.abs();
        // Split off the binary exponent so the log of the mantissa is exact to
        // rounding; this matters for subnormals.
        let (m, e) = frexp(a);
        LogMagnitude { sign, log_abs: m.ln() + e as f64 * LN_2 }
    }

    pub fn sign(&self) -> i8 {
        self.sign
    }

    pub fn log_abs(&self) -> f64 {
        self.log_abs
    }

    pub fn is_zero(&self) -> bool {
        self.sign == 0
    }

    pub fn log10_abs(&self) -> f64 {
        self.log_abs / std::f64::consts::LN_10
    }

    /// Multiplies by `exp(shift)`.
    pub fn scale_log(self, shift: f64) -> Self {
        if self.is_zero() {
            self
        } else {
            LogMagnitude { sign: self.sign, log_abs: self.log_abs + shift }
        }
    }

    /// Converts back to `f64`; saturates to `±inf` or `0` outside the range.
    pub fn to_real(&self) -> f64 {
        if self.sign == 0 {
            return 0.0;
        }
        let e = (self.log_abs / LN_2).round();
        // ln 2 split so that e · LN2_HI is exact for |e| < 2^11
        const LN2_HI: f64 = 6.931_471_803_691_238_164_9e-1;
        const LN2_LO: f64 = 1.908_214_929_270_587_700_0e-10;
        let rem = (self.log_abs - e * LN2_HI) - e * LN2_LO;
        let v = ldexp(rem.exp(), e as i32);
        if self.sign < 0 {
            -v
        } else {
            v
        }
    }
}

/// Decomposes `a > 0` as `m · 2^e` with `m ∈ [0.5, 1)`.
fn frexp(a: f64) -> (f64, i32) {
    let bits = a.to_bits();
    let exp_bits = ((bits >> 52) & 0x7ff) as i32;
    if exp_bits == 0 {
        // subnormal: renormalize
        let (m, e) = frexp(a * 2f64.powi(64));
        return (m, e - 64);
    }
    let m = f64::from_bits((bits & !(0x7ff << 52)) | (1022 << 52));
    (m, exp_bits - 1022)
}

pub(crate) fn ldexp(x: f64, e: i32) -> f64 {
    // Applied in steps so intermediate powers of two stay finite.
    let mut v = x;
    let mut e = e;
    while e > 1000 {
        v *= 2f64.powi(1000);
        e -= 1000;
    }
    while e < -1000 {
        v *= 2f64.powi(-1000);
        e += 1000;
    }
    v * 2f64.powi(e)
}
