//! The deformed Segal-Bargmann transform
//! `(B_μ f)(z) = exp(-z²/2) ∫ e_μ(√2 t z) f(t) dg_μ(t)`.
//!
//! Two routes are provided. The integral route evaluates the kernel
//! integral by quadrature. The exact route expands a polynomial in the
//! `ζ_n^μ` basis and maps each `ζ_n^μ` to `ξ_n^μ`.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, SQRT_2};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::mu_core::{e_mu, xi_mu, zeta_mu, DensePolynomial, MeasureDensity, MuParameter};
use crate::quadrature::{integrate_half_line, QuadratureConfig};

/// Largest basis index accepted by [`verify_basis_transform`].
pub const MAX_VERIFY_INDEX: u64 = 12;

/// Finite, nonempty set of evaluation points.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexGrid {
    points: Vec<Complex64>,
}

impl ComplexGrid {
    pub fn new(points: Vec<Complex64>) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::InvalidConfig("grid must contain at least one point"));
        }
        if points.iter().any(|z| !z.is_finite()) {
            return Err(Error::InvalidConfig("grid points must be finite"));
        }
        Ok(Self { points })
    }

    pub fn points(&self) -> &[Complex64] {
        &self.points
    }
}

impl Default for ComplexGrid {
    /// `{r e^{iθ} : r ∈ {1/4, 1/2, 1, 2}, θ ∈ {0, π/4, π/2, 3π/4}} ∪ {0}`.
    fn default() -> Self {
        let mut points = vec![Complex64::new(0.0, 0.0)];
        for r in [0.25, 0.5, 1.0, 2.0] {
            for theta in [0.0, FRAC_PI_4, FRAC_PI_2, 3.0 * FRAC_PI_4] {
                points.push(Complex64::from_polar(r, theta));
            }
        }
        Self { points }
    }
}

/// `B_μ f` at one point, by quadrature of the kernel integral.
///
/// The line integral is folded onto `t > 0` and its real and imaginary
/// parts are integrated separately. The exponential series is truncated at
/// `cfg.abs_tol`.
pub fn bargmann_transform(
    f: &DensePolynomial,
    mu: MuParameter,
    z: Complex64,
    cfg: &QuadratureConfig,
) -> Result<Complex64> {
    cfg.validate()?;
    let ground = MeasureDensity::ground(mu);
    let w = SQRT_2 * z;
    let tol = cfg.abs_tol;
    let kernel = |t: f64| -> Complex64 {
        let rho = ground.reduced_weight(t);
        if rho == 0.0 {
            return Complex64::new(0.0, 0.0);
        }
        (e_mu(w * t, mu, tol) * f.eval(t) + e_mu(-w * t, mu, tol) * f.eval(-t)) * rho
    };
    let re = integrate_half_line(|t| kernel(t).re, &[], cfg)?;
    let im = if z.im == 0.0 { 0.0 } else { integrate_half_line(|t| kernel(t).im, &[], cfg)?.value };
    Ok((-0.5 * z * z).exp() * Complex64::new(re.value, im))
}

/// Coefficients `a_n` with `f = Σ a_n ζ_n^μ`.
///
/// The change of basis is triangular: the top coefficient of `f` fixes the
/// top `a_n`, which is then subtracted off.
pub fn zeta_coefficients(f: &DensePolynomial, mu: MuParameter) -> Vec<f64> {
    let Some(deg) = f.degree() else {
        return Vec::new();
    };
    let mut rest = f.clone();
    let mut a = vec![0.0; deg + 1];
    for n in (0..=deg).rev() {
        let zn = zeta_mu(n as u64, mu);
        let c = rest.coeff(n) / zn.coeff(n);
        a[n] = c;
        let mut next: Vec<f64> = rest.coeffs().to_vec();
        next.resize(deg + 1, 0.0);
        for (k, z) in zn.coeffs().iter().enumerate() {
            next[k] -= c * z;
        }
        next.truncate(n);
        rest = DensePolynomial::new(next);
    }
    a
}

/// Exact `B_μ f` for polynomial `f`, as a polynomial in `z`.
pub fn bargmann_transform_exact(f: &DensePolynomial, mu: MuParameter) -> DensePolynomial {
    zeta_coefficients(f, mu)
        .iter()
        .enumerate()
        .fold(DensePolynomial::zero(), |acc, (n, &a)| &acc + &xi_mu(n as u64, mu).scale(a))
}

/// Largest `|B_μ(ζ_n^μ)(z) - ξ_n^μ(z)|` over `n ≤ n_max` and the grid, with
/// the transform taken along the integral route.
pub fn verify_basis_transform(n_max: u64, mu: MuParameter, grid: &ComplexGrid, cfg: &QuadratureConfig) -> Result<f64> {
    if n_max > MAX_VERIFY_INDEX {
        return Err(Error::InvalidConfig("basis transform checks stop at n = 12"));
    }
    let mut worst: f64 = 0.0;
    for n in 0..=n_max {
        let zeta = zeta_mu(n, mu);
        let xi = xi_mu(n, mu);
        for &z in grid.points() {
            let got = bargmann_transform(&zeta, mu, z, cfg)?;
            worst = worst.max((got - xi.eval_complex(z)).norm());
        }
    }
    Ok(worst)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mu(v: f64) -> MuParameter {
        MuParameter::new(v).unwrap()
    }

    #[test]
    fn default_grid_shape() {
        let g = ComplexGrid::default();
        assert_eq!(g.points().len(), 17);
        assert!(ComplexGrid::new(vec![]).is_err());
        assert!(ComplexGrid::new(vec![Complex64::new(f64::NAN, 0.0)]).is_err());
    }

    #[test]
    fn coefficients_reconstruct_the_polynomial() {
        let m = mu(0.7);
        let f = DensePolynomial::new(vec![0.3, -1.0, 2.0, 0.0, 0.5]);
        let a = zeta_coefficients(&f, m);
        let back =
            a.iter().enumerate().fold(DensePolynomial::zero(), |acc, (n, &c)| &acc + &zeta_mu(n as u64, m).scale(c));
        for (x, y) in back.coeffs().iter().zip(f.coeffs()) {
            assert!((x - y).abs() < 1e-13);
        }
    }

    #[test]
    fn exact_route_maps_zeta_to_xi() {
        let m = mu(1.2);
        for n in 0..8u64 {
            let b = bargmann_transform_exact(&zeta_mu(n, m), m);
            let xi = xi_mu(n, m);
            assert_eq!(b.degree(), xi.degree());
            for k in 0..=n as usize {
                assert!((b.coeff(k) - xi.coeff(k)).abs() < 1e-12, "n={n} k={k}");
            }
        }
    }

    #[test]
    fn integral_route_examples() {
        let cfg = QuadratureConfig::default();
        let one = DensePolynomial::constant(1.0);
        for &m in &[-0.25, 0.0, 1.0] {
            for &z in ComplexGrid::default().points() {
                let b = bargmann_transform(&one, mu(m), z, &cfg).unwrap();
                assert!((b - 1.0).norm() < 1e-8, "mu={m} z={z}");
            }
        }
        let b = bargmann_transform(&zeta_mu(1, mu(0.5)), mu(0.5), Complex64::new(1.0, 0.0), &cfg).unwrap();
        assert!((b - Complex64::new(0.5f64.sqrt(), 0.0)).norm() < 1e-8);
        let i = Complex64::new(0.0, 1.0);
        let b = bargmann_transform(&zeta_mu(3, MuParameter::ZERO), MuParameter::ZERO, i, &cfg).unwrap();
        assert!((b - Complex64::new(0.0, -1.0 / 6f64.sqrt())).norm() < 1e-8);
    }

    #[test]
    fn verify_rejects_large_indices() {
        let r = verify_basis_transform(13, MuParameter::ZERO, &ComplexGrid::default(), &QuadratureConfig::default());
        assert!(r.is_err());
        let d = verify_basis_transform(0, mu(0.3), &ComplexGrid::default(), &QuadratureConfig::default()).unwrap();
        assert!(d < 1e-10);
    }
}
