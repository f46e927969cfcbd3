//! Deformed Hermite polynomials and the two orthonormal bases.

use super::factorial::{gamma_mu, log_gamma_mu};
use super::{DensePolynomial, MuParameter};
use crate::special_functions::ln_gamma;

/// `H_n^μ`, read off the generating function `exp(-z²) e_μ(2tz)`.
///
/// The coefficient of `t^{n-2k}` is `n! (-1)^k 2^{n-2k} / (k! γ_μ(n-2k))`,
/// formed in log-space so large `n` stays finite.
pub fn hermite_mu(n: u64, mu: MuParameter) -> DensePolynomial {
    let ln_n_fact = ln_gamma(n as f64 + 1.0);
    let mut coeffs = vec![0.0; n as usize + 1];
    for k in 0..=n / 2 {
        let j = n - 2 * k;
        let ln_mag = ln_n_fact - ln_gamma(k as f64 + 1.0) + j as f64 * std::f64::consts::LN_2 - log_gamma_mu(j, mu);
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        coeffs[j as usize] = sign * exact_when_small(n, k, j, mu, ln_mag);
    }
    DensePolynomial::new(coeffs)
}

/// For small indices the product form is representable and avoids the
/// rounding of `exp(ln ...)`.
fn exact_when_small(n: u64, k: u64, j: u64, mu: MuParameter, ln_mag: f64) -> f64 {
    if n <= 100 {
        let n_fact: f64 = (1..=n).map(|i| i as f64).product();
        let k_fact: f64 = (1..=k).map(|i| i as f64).product();
        n_fact / gamma_mu(j, mu) / k_fact * 2f64.powi(j as i32)
    } else {
        ln_mag.exp()
    }
}

/// `ln` of the factor `2^{-n/2} γ_μ(n)^{1/2} / n!` that normalises `H_n^μ`.
fn ln_zeta_scale(n: u64, mu: MuParameter) -> f64 {
    -0.5 * n as f64 * std::f64::consts::LN_2 + 0.5 * log_gamma_mu(n, mu) - ln_gamma(n as f64 + 1.0)
}

/// Normalised Hermite polynomial `ζ_n^μ`, of unit norm under `dg_μ`.
pub fn zeta_mu(n: u64, mu: MuParameter) -> DensePolynomial {
    hermite_mu(n, mu).scale(ln_zeta_scale(n, mu).exp())
}

/// Normalising constant `γ_μ(n)^{-1/2}` of the monomial `ξ_n^μ`.
pub fn xi_mu_norm_const(n: u64, mu: MuParameter) -> f64 {
    (-0.5 * log_gamma_mu(n, mu)).exp()
}

/// `ξ_n^μ(z) = γ_μ(n)^{-1/2} z^n` as a polynomial.
pub fn xi_mu(n: u64, mu: MuParameter) -> DensePolynomial {
    DensePolynomial::monomial(n as usize, xi_mu_norm_const(n, mu))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mu_core::Parity;

    fn mu(v: f64) -> MuParameter {
        MuParameter::new(v).unwrap()
    }

    fn close(a: &[f64], b: &[f64], tol: f64) -> bool {
        a.len() == b.len() && a.iter().zip(b).all(|(x, y)| (x - y).abs() <= tol * (1.0 + y.abs()))
    }

    #[test]
    fn low_degree_examples() {
        for &m in &[0.0, 0.3, 1.0, -0.25] {
            let mu = mu(m);
            assert_eq!(hermite_mu(0, mu).coeffs(), &[1.0]);
            assert!(close(hermite_mu(1, mu).coeffs(), &[0.0, 2.0 / (1.0 + 2.0 * m)], 1e-15));
            assert!(close(hermite_mu(2, mu).coeffs(), &[-2.0, 0.0, 4.0 / (1.0 + 2.0 * m)], 1e-15));
        }
    }

    #[test]
    fn classical_hermite_at_mu_zero() {
        // physicists' H_5 = 32t^5 - 160t^3 + 120t
        let h5 = hermite_mu(5, MuParameter::ZERO);
        assert!(close(h5.coeffs(), &[0.0, 120.0, 0.0, -160.0, 0.0, 32.0], 1e-14));
    }

    #[test]
    fn zeta_examples() {
        assert_eq!(zeta_mu(0, mu(0.9)).coeffs(), &[1.0]);
        let m = 0.7;
        let z1 = zeta_mu(1, mu(m));
        assert!(close(z1.coeffs(), &[0.0, (2.0 / (1.0 + 2.0 * m)).sqrt()], 1e-15));
        let s = std::f64::consts::SQRT_2;
        assert!(close(zeta_mu(2, MuParameter::ZERO).coeffs(), &[-1.0 / s, 0.0, s], 1e-15));
    }

    #[test]
    fn degree_and_parity() {
        for n in 0..40u64 {
            let h = hermite_mu(n, mu(0.45));
            assert_eq!(h.degree(), Some(n as usize));
            assert_eq!(h.parity(), Some(Parity::of(n)));
        }
    }

    #[test]
    fn log_path_agrees_with_product_path() {
        let mu = mu(1.3);
        for n in [10u64, 40, 70, 100] {
            let ln_n_fact = ln_gamma(n as f64 + 1.0);
            for k in 0..=n / 2 {
                let j = n - 2 * k;
                let ln_mag =
                    ln_n_fact - ln_gamma(k as f64 + 1.0) + j as f64 * std::f64::consts::LN_2 - log_gamma_mu(j, mu);
                let a = exact_when_small(n, k, j, mu, ln_mag);
                assert!((a / ln_mag.exp() - 1.0).abs() < 1e-11, "n={n} k={k}");
            }
        }
    }

    #[test]
    fn xi_constants() {
        assert_eq!(xi_mu_norm_const(0, mu(2.0)), 1.0);
        assert!((xi_mu_norm_const(1, mu(0.3)) - 1.6f64.powf(-0.5)).abs() < 1e-15);
        assert!((xi_mu_norm_const(3, MuParameter::ZERO) - 0.4082482904638630).abs() < 1e-15);
    }
}
