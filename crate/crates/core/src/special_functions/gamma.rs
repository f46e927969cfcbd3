//! Log-gamma on the positive half-line.
//!
//! Stirling's series for `x >= 10`, Taylor expansions of `ln Γ(1 + z)` and
//! `ln Γ(2 + z)` around the two zeros of `ln Γ`, and the recurrence to
//! reach one of those windows from anywhere else. The Taylor windows keep the relative error small where
//! the function itself crosses zero.

use crate::error::{Error, Result};

use super::EULER_GAMMA;

const HALF_LN_TWO_PI: f64 = 0.918_938_533_204_672_741_780_329_736_406;

const STIRLING_THRESHOLD: f64 = 10.0;

/// `ζ(k) - 1` for `k = 2..=11`; larger `k` are summed directly.
const ZETA_MINUS_ONE: [f64; 10] = [
    0.644_934_066_848_226_4,
    0.202_056_903_159_594_3,
    0.082_323_233_711_138_19,
    0.036_927_755_143_369_93,
    0.017_343_061_984_449_14,
    0.008_349_277_381_922_827,
    0.004_077_356_197_944_339,
    0.002_008_392_826_082_214,
    0.000_994_575_127_818_085_1,
    0.000_494_188_604_119_464_6,
];

pub(crate) fn zeta_minus_one(k: usize) -> f64 {
    debug_assert!(k >= 2);
    if k <= 11 {
        return ZETA_MINUS_ONE[k - 2];
    }
    // n^{-k} < 1e-20 well before n = 64 for k >= 12
    (2..64u32).map(|n| f64::from(n).powi(-(k as i32))).sum()
}

/// `ln Γ(x)` for `x > 0`.
pub fn log_gamma(x: f64) -> Result<f64> {
    if !x.is_finite() || x <= 0.0 {
        return Err(Error::Domain { function: "log_gamma", value: x, reason: "requires finite x > 0" });
    }
    Ok(ln_gamma(x))
}

/// Unchecked `ln Γ(x)`; callers guarantee `x > 0`.
pub(crate) fn ln_gamma(x: f64) -> f64 {
    debug_assert!(x > 0.0);
    if x >= STIRLING_THRESHOLD {
        return stirling(x);
    }
    if (0.75..1.25).contains(&x) {
        return taylor_at_one(x - 1.0);
    }
    if (1.25..2.5).contains(&x) {
        return taylor_at_two(x - 2.0);
    }
    if x < 0.75 {
        return ln_gamma(x + 1.0) - x.ln();
    }
    // shift down into the window around 2
    let mut y = x;
    let mut prod = 1.0;
    while y >= 2.5 {
        y -= 1.0;
        prod *= y;
    }
    prod.ln() + taylor_at_two(y - 2.0)
}

fn stirling(x: f64) -> f64 {
    // Bernoulli corrections B_{2k} / (2k (2k - 1)) for k = 1..=7
    const C: [f64; 7] =
        [1.0 / 12.0, -1.0 / 360.0, 1.0 / 1260.0, -1.0 / 1680.0, 1.0 / 1188.0, -691.0 / 360_360.0, 1.0 / 156.0];
    let inv = 1.0 / x;
    let inv2 = inv * inv;
    let mut series = 0.0;
    for c in C.iter().rev() {
        series = series * inv2 + c;
    }
    (x - 0.5) * x.ln() - x + HALF_LN_TWO_PI + series * inv
}

// ln Γ(1 + z) = -γ z + Σ_{k>=2} (-1)^k ζ(k) z^k / k
fn taylor_at_one(z: f64) -> f64 {
    let mut sum = 0.0;
    for k in (2..=32).rev() {
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        sum = sum * z + sign * (1.0 + zeta_minus_one(k)) / k as f64;
    }
    z * (-EULER_GAMMA + z * sum)
}

// ln Γ(2 + z) = (1 - γ) z + Σ_{k>=2} (-1)^k (ζ(k) - 1) z^k / k
fn taylor_at_two(z: f64) -> f64 {
    let mut sum = 0.0;
    for k in (2..=44).rev() {
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        sum = sum * z + sign * zeta_minus_one(k) / k as f64;
    }
    z * ((1.0 - EULER_GAMMA) + z * sum)
}

/// `Γ(a) / Γ(b)` evaluated as `exp(ln Γ(a) - ln Γ(b))`.
pub fn gamma_ratio(a: f64, b: f64) -> Result<f64> {
    Ok((log_gamma(a)? - log_gamma(b)?).exp())
}
