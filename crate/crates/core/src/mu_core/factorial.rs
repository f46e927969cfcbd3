//! Deformed factorial `γ_μ(n)` and deformed exponential `e_μ(z)`.

use num_complex::Complex64;

use super::MuParameter;
use crate::special_functions::ln_gamma;

/// Indicator of the odd positive integers. `θ(0)` is taken as 0.
pub fn theta_odd(n: u64) -> u8 {
    (n & 1) as u8
}

/// One step of the recursion: `γ_μ(n) / γ_μ(n - 1) = n + 2μ θ(n)`.
#[inline]
pub(crate) fn step(n: u64, mu: MuParameter) -> f64 {
    n as f64 + 2.0 * mu.value() * f64::from(theta_odd(n))
}

/// `γ_μ(n)` by the defining recursion `γ_μ(n) = (n + 2μ θ(n)) γ_μ(n - 1)`.
///
/// Overflows to `+∞` past `n ≈ 170`; use [`log_gamma_mu`] there.
pub fn gamma_mu(n: u64, mu: MuParameter) -> f64 {
    (1..=n).fold(1.0, |acc, k| acc * step(k, mu))
}

/// `ln γ_μ(n)` from the gamma-function closed forms
///
/// `γ_μ(2m) = 2^{2m} Γ(m+1) Γ(μ+m+1/2) / Γ(μ+1/2)` and
/// `γ_μ(2m+1) = 2^{2m+1} Γ(m+1) Γ(μ+m+3/2) / Γ(μ+1/2)`.
pub fn log_gamma_mu(n: u64, mu: MuParameter) -> f64 {
    let m = (n / 2) as f64;
    let shift = if n.is_multiple_of(2) { 0.5 } else { 1.5 };
    n as f64 * std::f64::consts::LN_2 + ln_gamma(m + 1.0) + ln_gamma(mu.value() + m + shift)
        - ln_gamma(mu.half_shifted())
}

/// `(γ_μ(n))^{1/n} / n`, evaluated in log-space. Tends to `1/e`.
pub fn gamma_mu_root_ratio(n: u64, mu: MuParameter) -> f64 {
    assert!(n >= 1, "root ratio needs n >= 1");
    let nf = n as f64;
    (log_gamma_mu(n, mu) / nf - nf.ln()).exp()
}

/// Partial sum of `Σ z^n / γ_μ(n)`.
///
/// Stops once the current and the next term are both below
/// `tol · (1 + |partial sum|)`.
pub fn e_mu(z: Complex64, mu: MuParameter, tol: f64) -> Complex64 {
    assert!(tol > 0.0, "tolerance must be positive");
    let mut sum = Complex64::new(1.0, 0.0);
    let mut term = Complex64::new(1.0, 0.0);
    let mut n = 0u64;
    loop {
        n += 1;
        term *= z / step(n, mu);
        sum += term;
        let bound = tol * (1.0 + sum.norm());
        if term.norm() < bound {
            let next = term.norm() * z.norm() / step(n + 1, mu);
            if next < bound {
                return sum;
            }
        }
    }
}
