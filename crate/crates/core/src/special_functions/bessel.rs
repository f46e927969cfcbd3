//! Macdonald function `K_α(x)` for real order and positive argument.
//!
//! The order is reduced to `|α| = n + ν` with `ν ∈ [-1/2, 1/2]`. `K_ν` and
//! `K_{ν+1}` come from Temme's series for `x < 2` (the reflection formula
//! `π (I_{-ν} - I_ν) / (2 sin νπ)` expanded so the `ν → 0` limit is taken
//! analytically) and from Steed's continued fraction for `x >= 2`. Upward
//! recurrence in the order then reaches `|α|`, which is stable for `K`.

use crate::error::{Error, Result};

use super::{RealOrder, EULER_GAMMA};

pub const MAX_ORDER: f64 = 50.0;

const SERIES_LIMIT: f64 = 2.0;
const EPS: f64 = 1e-16;
const MAX_ITER: usize = 10_000;

/// `K_α(x)` together with an underflow marker.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BesselK {
    pub value: f64,
    /// Set when `x` is past the point where `K_α(x)` is representable; the
    /// value is then 0 and [`bessel_k_scaled`] should be used instead.
    pub underflow: bool,
}

/// `K_α(x)`. Returns 0 past the underflow horizon; see [`bessel_k_flagged`].
pub fn bessel_k(order: RealOrder, x: f64) -> Result<f64> {
    bessel_k_flagged(order, x).map(|k| k.value)
}

pub fn bessel_k_flagged(order: RealOrder, x: f64) -> Result<BesselK> {
    let (k, scaled) = evaluate(order, x)?;
    if x < SERIES_LIMIT {
        return Ok(BesselK { value: k, underflow: false });
    }
    let value = scaled * (-x).exp();
    Ok(BesselK { value, underflow: value == 0.0 || value < f64::MIN_POSITIVE })
}

/// `e^x K_α(x)`, finite far beyond the underflow horizon of `K_α`.
pub fn bessel_k_scaled(order: RealOrder, x: f64) -> Result<f64> {
    let (k, scaled) = evaluate(order, x)?;
    if x < SERIES_LIMIT {
        Ok(k * x.exp())
    } else {
        Ok(scaled)
    }
}

// For x < 2 returns (K, NaN); otherwise (NaN, e^x K).
fn evaluate(order: RealOrder, x: f64) -> Result<(f64, f64)> {
    if !x.is_finite() || x <= 0.0 {
        return Err(Error::Domain { function: "bessel_k", value: x, reason: "requires finite x > 0" });
    }
    let alpha = order.value().abs();
    if alpha > MAX_ORDER {
        return Err(Error::Range { function: "bessel_k", value: order.value() });
    }
    let n = (alpha + 0.5).floor();
    let nu = alpha - n;
    let (mut k_nu, mut k_nu1) = if x < SERIES_LIMIT { temme_series(nu, x) } else { steed_scaled(nu, x) };
    let two_over_x = 2.0 / x;
    for i in 1..=(n as usize) {
        let next = (nu + i as f64) * two_over_x * k_nu1 + k_nu;
        k_nu = k_nu1;
        k_nu1 = next;
    }
    if !k_nu.is_finite() {
        return Err(Error::Overflow { function: "bessel_k", value: x });
    }
    if x < SERIES_LIMIT {
        Ok((k_nu, f64::NAN))
    } else {
        Ok((f64::NAN, k_nu))
    }
}

// Taylor coefficients c_k of 1/Γ(z) = Σ c_k z^k (k = 1..=28).
const RECIP_GAMMA: [f64; 28] = [
    1.0,
    0.5772156649015328606,
    -0.6558780715202538811,
    -0.04200263503409523553,
    0.1665386113822914895,
    -0.04219773455554433675,
    -0.009621971527876973562,
    0.007218943246663099542,
    -0.001165167591859065112,
    -0.0002152416741149509728,
    0.0001280502823881161862,
    -0.00002013485478078823866,
    -1.250493482142670657e-6,
    1.133027231981695882e-6,
    -2.056338416977607103e-7,
    6.116095104481415818e-9,
    5.00200764446922293e-9,
    -1.181274570487020145e-9,
    1.04342671169110051e-10,
    7.782263439905071254e-12,
    -3.696805618642205708e-12,
    5.100370287454475979e-13,
    -2.058326053566506783e-14,
    -5.348122539423017982e-15,
    1.22677862823826079e-15,
    -1.18125930169745877e-16,
    1.186692254751600333e-18,
    1.412380655318031782e-18,
];

/// Returns `(gam1, gam2, 1/Γ(1+ν), 1/Γ(1-ν))` for `|ν| <= 1/2`, where
/// `gam1 = (1/Γ(1-ν) - 1/Γ(1+ν)) / (2ν)` and `gam2` is the matching mean.
pub(crate) fn temme_gammas(nu: f64) -> (f64, f64, f64, f64) {
    // 1/Γ(1+x) = Σ_k c_{k+1} x^k; split into even and odd powers
    let x2 = nu * nu;
    let mut even = 0.0;
    let mut odd = 0.0;
    for k in (0..14).rev() {
        even = even * x2 + RECIP_GAMMA[2 * k];
        odd = odd * x2 + RECIP_GAMMA[2 * k + 1];
    }
    let gampl = even + nu * odd;
    let gammi = even - nu * odd;
    (-odd, even, gampl, gammi)
}

fn temme_series(nu: f64, x: f64) -> (f64, f64) {
    let half_x = 0.5 * x;
    let pimu = std::f64::consts::PI * nu;
    let fact = if pimu.abs() < EPS { 1.0 } else { pimu / pimu.sin() };
    let d = -half_x.ln();
    let e = nu * d;
    let fact2 = if e.abs() < EPS { 1.0 } else { e.sinh() / e };
    let (gam1, gam2, gampl, gammi) = temme_gammas(nu);
    let mut ff = fact * (gam1 * e.cosh() + gam2 * fact2 * d);
    let mut sum = ff;
    let ee = e.exp();
    let mut p = 0.5 * ee / gampl;
    let mut q = 0.5 / (ee * gammi);
    let mut c = 1.0;
    let dd = half_x * half_x;
    let mut sum1 = p;
    let nu2 = nu * nu;
    for i in 1..MAX_ITER {
        let fi = i as f64;
        ff = (fi * ff + p + q) / (fi * fi - nu2);
        c *= dd / fi;
        p /= fi - nu;
        q /= fi + nu;
        let del = c * ff;
        sum += del;
        sum1 += c * (p - fi * ff);
        if del.abs() < sum.abs() * EPS {
            break;
        }
    }
    (sum, sum1 * 2.0 / x)
}

// Steed's method for CF2; returns e^x K_ν and e^x K_{ν+1}.
fn steed_scaled(nu: f64, x: f64) -> (f64, f64) {
    let nu2 = nu * nu;
    let mut b = 2.0 * (1.0 + x);
    let mut d = 1.0 / b;
    let mut delh = d;
    let mut h = d;
    let mut q1 = 0.0;
    let mut q2 = 1.0;
    let a1 = 0.25 - nu2;
    let mut q = a1;
    let mut c = a1;
    let mut a = -a1;
    let mut s = 1.0 + q * delh;
    for i in 2..MAX_ITER {
        let fi = i as f64;
        a -= 2.0 * (fi - 1.0);
        c = -a * c / fi;
        let qnew = (q1 - b * q2) / a;
        q1 = q2;
        q2 = qnew;
        q += c * qnew;
        b += 2.0;
        d = 1.0 / (b + a * d);
        delh *= b * d - 1.0;
        h += delh;
        let dels = q * delh;
        s += dels;
        if (dels / s).abs() < EPS {
            break;
        }
    }
    h *= a1;
    let k_nu = (std::f64::consts::PI / (2.0 * x)).sqrt() / s;
    let k_nu1 = k_nu * (nu + x + 0.5 - h) / x;
    (k_nu, k_nu1)
}

/// Leading small-argument behaviour `ln K_α(x)` as `x → 0⁺`.
///
/// `Γ(|α|) 2^{|α|-1} x^{-|α|}` for `α ≠ 0`, `-ln(x/2) - γ` for `α = 0`.
pub(crate) fn ln_bessel_k_small(alpha: f64, x: f64) -> f64 {
    let a = alpha.abs();
    if a == 0.0 {
        (-(0.5 * x).ln() - EULER_GAMMA).ln()
    } else {
        super::gamma::ln_gamma(a) + (a - 1.0) * std::f64::consts::LN_2 - a * x.ln()
    }
}
