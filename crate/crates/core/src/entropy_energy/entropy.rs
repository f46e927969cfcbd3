//! Closed-form entropies of the monomial basis and of monomials on the line.

use std::f64::consts::LN_2;

use super::EntropyValue;
use crate::error::{Error, Result};
use crate::mu_core::{log_gamma_mu, theta_odd, MuParameter};
use crate::special_functions::{ln_gamma, psi, EULER_GAMMA};

/// `S_{2n}^μ = n (ψ(μ+n+1/2) + ψ(n+1)) - ln(γ_μ(2n) / 2^{2n})`.
pub fn entropy_xi_even(n: u64, mu: MuParameter) -> EntropyValue {
    let nf = n as f64;
    let value = if n == 0 {
        0.0
    } else {
        nf * (psi(mu.value() + nf + 0.5) + psi(nf + 1.0)) - (log_gamma_mu(2 * n, mu) - 2.0 * nf * LN_2)
    };
    EntropyValue { n: 2 * n, mu, value }
}

/// `S_{2n+1}^μ = (n+1/2)(ψ(μ+n+3/2) + ψ(n+1)) - ln(γ_μ(2n+1) / 2^{2n+1})`.
///
/// Negative for large `μ`.
pub fn entropy_xi_odd(n: u64, mu: MuParameter) -> EntropyValue {
    let nf = n as f64;
    let value = (nf + 0.5) * (psi(mu.value() + nf + 1.5) + psi(nf + 1.0))
        - (log_gamma_mu(2 * n + 1, mu) - (2.0 * nf + 1.0) * LN_2);
    EntropyValue { n: 2 * n + 1, mu, value }
}

/// `S_n^μ` for either parity through the single formula
///
/// `S_n^μ = (n/2)(ψ(μ + (n+θ(n)+1)/2) + ψ((n+θ(n+1)+1)/2)) - ln(γ_μ(n) / 2^n)`.
pub fn entropy_xi(n: u64, mu: MuParameter) -> EntropyValue {
    let nf = n as f64;
    let value = if n == 0 {
        0.0
    } else {
        let a = mu.value() + (nf + f64::from(theta_odd(n)) + 1.0) / 2.0;
        let b = (nf + f64::from(theta_odd(n + 1)) + 1.0) / 2.0;
        0.5 * nf * (psi(a) + psi(b)) - (log_gamma_mu(n, mu) - nf * LN_2)
    };
    EntropyValue { n, mu, value }
}

/// Undeformed entropy `S_n = n ψ(n+1) - ln n!`.
pub fn entropy_classical(n: u64) -> EntropyValue {
    let nf = n as f64;
    let value = if n == 0 { 0.0 } else { nf * psi(nf + 1.0) - ln_gamma(nf + 1.0) };
    EntropyValue { n, mu: MuParameter::ZERO, value }
}

/// `ln s_n^μ` for `n ≥ 1`, where `s_n^μ` is the entropy of `t^n` under the
/// ground-state measure. Finite for every `n`, unlike `s_n^μ` itself.
pub fn entropy_monomial_ground_log(n: u64, mu: MuParameter) -> f64 {
    assert!(n >= 1, "s_0 = 0 has no logarithm");
    let nf = n as f64;
    let x = nf + mu.half_shifted();
    let ln_ratio = ln_gamma(x) - ln_gamma(mu.half_shifted());
    ln_ratio + (nf * psi(x) - ln_ratio).ln()
}

/// `s_n^μ = (Γ(n+μ+1/2)/Γ(μ+1/2)) (n ψ(n+μ+1/2) - ln(Γ(n+μ+1/2)/Γ(μ+1/2)))`.
///
/// Fails with [`Error::Overflow`] once the value leaves the `f64` range
/// (around `n = 170`); [`entropy_monomial_ground_log`] covers that range.
pub fn entropy_monomial_ground(n: u64, mu: MuParameter) -> Result<EntropyValue> {
    if n == 0 {
        return Ok(EntropyValue { n, mu, value: 0.0 });
    }
    let nf = n as f64;
    let x = nf + mu.half_shifted();
    let ln_ratio = ln_gamma(x) - ln_gamma(mu.half_shifted());
    let value = ln_ratio.exp() * (nf * psi(x) - ln_ratio);
    if value.is_finite() {
        Ok(EntropyValue { n, mu, value })
    } else {
        Err(Error::Overflow { function: "entropy_monomial_ground", value: nf })
    }
}

/// `S(ζ_1^μ) = ψ(μ+3/2) - ln(μ+1/2)`.
pub fn entropy_zeta1(mu: MuParameter) -> EntropyValue {
    EntropyValue { n: 1, mu, value: psi(mu.value() + 1.5) - mu.half_shifted().ln() }
}

/// `S(B_μ ζ_1^μ) - S(ζ_1^μ) = -(ψ(μ+3/2) + γ) / 2`, always negative.
pub fn entropy_gap_zeta1(mu: MuParameter) -> f64 {
    -0.5 * (psi(mu.value() + 1.5) + EULER_GAMMA)
}

/// Both sides of `S_{n+m} + S_n - S_m = S_{2n}^{1/2+m} + Σ_{k<n} m/(m+k+1)`.
pub fn entropy_relation_half_plus_m(n: u64, m: u64) -> (f64, f64) {
    let lhs = entropy_classical(n + m).value + entropy_classical(n).value - entropy_classical(m).value;
    let mu = MuParameter::new(0.5 + m as f64).expect("positive parameter");
    let mf = m as f64;
    let sum: f64 = (0..n).map(|k| mf / (mf + k as f64 + 1.0)).sum();
    (lhs, entropy_xi_even(n, mu).value + sum)
}

/// Both sides of `s_n^μ = (Γ(n+μ+1/2)/Γ(μ+1/2)) (S_{2n}^μ - S_n)`.
///
/// Each side is `+∞` once `s_n^μ` overflows.
pub fn s_vs_s_relation(n: u64, mu: MuParameter) -> (f64, f64) {
    let lhs = entropy_monomial_ground(n, mu).map_or(f64::INFINITY, |v| v.value);
    let ratio = (ln_gamma(n as f64 + mu.half_shifted()) - ln_gamma(mu.half_shifted())).exp();
    let rhs = ratio * (entropy_xi_even(n, mu).value - entropy_classical(n).value);
    (lhs, rhs)
}
