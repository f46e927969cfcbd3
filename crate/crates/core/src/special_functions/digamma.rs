use crate::error::{Error, Result};

const ASYMPTOTIC_THRESHOLD: f64 = 10.0;

/// Digamma `ψ(x)` for `x > 0`.
///
/// Shifts `x` above 10 with `ψ(x) = ψ(x + 1) - 1/x`, then applies the
/// asymptotic series in `1/x²` through the `x^{-14}` term.
pub fn digamma(x: f64) -> Result<f64> {
    if !x.is_finite() || x <= 0.0 {
        return Err(Error::Domain { function: "digamma", value: x, reason: "requires finite x > 0" });
    }
    Ok(psi(x))
}

pub(crate) fn psi(x: f64) -> f64 {
    debug_assert!(x > 0.0);
    let mut y = x;
    let mut shift = 0.0;
    while y < ASYMPTOTIC_THRESHOLD {
        shift += 1.0 / y;
        y += 1.0;
    }
    asymptotic(y) - shift
}

fn asymptotic(x: f64) -> f64 {
    // B_{2k} / (2k) for k = 1..=7
    const C: [f64; 7] =
        [1.0 / 12.0, -1.0 / 120.0, 1.0 / 252.0, -1.0 / 240.0, 1.0 / 132.0, -691.0 / 32760.0, 1.0 / 12.0];
    let inv2 = 1.0 / (x * x);
    let mut series = 0.0;
    for c in C.iter().rev() {
        series = series * inv2 + c;
    }
    x.ln() - 0.5 / x - series * inv2
}
