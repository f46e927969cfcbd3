//! Quadrature evaluations of norms, entropies and energies straight from
//! their defining integrals.
//!
//! Phase space is `ℂ × ℤ₂`: the even part of a function lives on the sheet
//! carrying the even measure and the odd part on the sheet carrying the
//! odd measure.

use super::integrand::{angular_mean, xlogx_rel};
use super::{integrate_half_line, integrate_semi_infinite, Estimate, IntegrandSpec, Payload, QuadratureConfig};
use crate::error::{Error, Result};
use crate::mu_core::{DensePolynomial, MeasureDensity, MuParameter, Parity};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Space {
    /// `L²(ℝ, dg_μ)`.
    Ground,
    /// The deformed Segal-Bargmann space.
    Phase,
}

/// Total mass of the measure space.
pub fn space_mass(space: Space, mu: MuParameter) -> f64 {
    match space {
        Space::Ground => 1.0,
        Space::Phase => MeasureDensity::phase(Parity::Even, mu).mass() + MeasureDensity::phase(Parity::Odd, mu).mass(),
    }
}

fn add(a: Estimate, b: Estimate) -> Estimate {
    Estimate::new(a.value + b.value, a.err_est + b.err_est)
}

fn parity_parts(f: &DensePolynomial) -> [(Parity, DensePolynomial); 2] {
    [(Parity::Even, f.even_part()), (Parity::Odd, f.odd_part())]
}

fn integrate(
    measure: MeasureDensity,
    payload: Payload,
    f: &DensePolynomial,
    cfg: &QuadratureConfig,
) -> Result<Estimate> {
    integrate_semi_infinite(&IntegrandSpec::new(measure, payload, f.clone())?, cfg)
}

/// Total mass of one measure by quadrature.
pub fn mass_oracle(measure: MeasureDensity, cfg: &QuadratureConfig) -> Result<Estimate> {
    integrate(measure, Payload::NormSq, &DensePolynomial::constant(1.0), cfg)
}

/// `‖f‖²` in the chosen space.
pub fn norm_sq_oracle(f: &DensePolynomial, space: Space, mu: MuParameter, cfg: &QuadratureConfig) -> Result<Estimate> {
    inner_product_oracle(f, f, space, mu, cfg)
}

/// `⟨f, g⟩` for real polynomials in the chosen space.
pub fn inner_product_oracle(
    f: &DensePolynomial,
    g: &DensePolynomial,
    space: Space,
    mu: MuParameter,
    cfg: &QuadratureConfig,
) -> Result<Estimate> {
    let payload = |g: &DensePolynomial| {
        if std::ptr::eq(f, g) {
            Payload::NormSq
        } else {
            Payload::Product(g.clone())
        }
    };
    match space {
        Space::Ground => integrate(MeasureDensity::ground(mu), payload(g), f, cfg),
        Space::Phase => {
            let mut total = Estimate::new(0.0, 0.0);
            for ((parity, fp), (_, gp)) in parity_parts(f).into_iter().zip(parity_parts(g)) {
                if fp.is_zero() || gp.is_zero() {
                    continue;
                }
                let p = if std::ptr::eq(f, g) { Payload::NormSq } else { Payload::Product(gp) };
                total = add(total, integrate(MeasureDensity::phase(parity, mu), p, &fp, cfg)?);
            }
            Ok(total)
        }
    }
}

/// Entropy of `f` under a single measure, with its norm.
fn single_entropy(
    f: &DensePolynomial,
    measure: MeasureDensity,
    cfg: &QuadratureConfig,
) -> Result<(Estimate, Estimate)> {
    let norm = integrate(measure, Payload::NormSq, f, cfg)?;
    let s = integrate(measure, Payload::Entropy { norm_sq: norm.value }, f, cfg)?;
    // ∂S/∂N = -1 at fixed integrand
    Ok((Estimate::new(s.value, s.err_est + norm.err_est), norm))
}

/// Shannon entropy `∫|f|² ln|f|² dν - ‖f‖² ln‖f‖²`.
///
/// The integral is formed as `∫|f|² ln(|f|²/‖f‖²) dν`, which is the same
/// quantity and scales cleanly under `f ↦ λf`. In phase space a function
/// with both parities is split as
/// `S(f) = S(f_e) + S(f_o) + ‖f_e‖² ln(‖f_e‖²/‖f‖²) + ‖f_o‖² ln(‖f_o‖²/‖f‖²)`.
pub fn entropy_oracle(f: &DensePolynomial, space: Space, mu: MuParameter, cfg: &QuadratureConfig) -> Result<Estimate> {
    if f.is_zero() {
        return Err(Error::ZeroFunction);
    }
    match space {
        Space::Ground => Ok(single_entropy(f, MeasureDensity::ground(mu), cfg)?.0),
        Space::Phase => {
            if let Some(parity) = f.parity() {
                return Ok(single_entropy(f, MeasureDensity::phase(parity, mu), cfg)?.0);
            }
            let mut parts = Vec::with_capacity(2);
            for (parity, fp) in parity_parts(f) {
                parts.push(single_entropy(&fp, MeasureDensity::phase(parity, mu), cfg)?);
            }
            let total: f64 = parts.iter().map(|(_, n)| n.value).sum();
            let mut out = Estimate::new(0.0, 0.0);
            for (s, n) in parts {
                let cross = n.value * (n.value / total).ln();
                out = add(out, Estimate::new(s.value + cross, s.err_est + 2.0 * n.err_est));
            }
            Ok(out)
        }
    }
}

/// Phase-space entropy of a mixed-parity `f` by one two-dimensional
/// integral over both sheets, without splitting into parity terms.
///
/// The sheet functions are taken as `(f(z) ± f(-z)) / 2` and every circle
/// is averaged with the trapezoid rule.
pub fn entropy_oracle_direct(f: &DensePolynomial, mu: MuParameter, cfg: &QuadratureConfig) -> Result<Estimate> {
    if f.is_zero() {
        return Err(Error::ZeroFunction);
    }
    let norm = norm_sq_oracle(f, Space::Phase, mu, cfg)?;
    let n = norm.value;
    let even = MeasureDensity::phase(Parity::Even, mu);
    let odd = MeasureDensity::phase(Parity::Odd, mu);
    let integrand = |s: f64| {
        let r = s.sqrt();
        let e = angular_mean(
            |z| {
                let v = 0.5 * (f.eval_complex(z) + f.eval_complex(-z));
                xlogx_rel(v.norm_sqr(), n)
            },
            r,
        );
        let o = angular_mean(
            |z| {
                let v = 0.5 * (f.eval_complex(z) - f.eval_complex(-z));
                xlogx_rel(v.norm_sqr(), n)
            },
            r,
        );
        e * even.reduced_weight(s) + o * odd.reduced_weight(s)
    };
    let s = integrate_half_line(integrand, &[], cfg)?;
    Ok(Estimate::new(s.value, s.err_est + norm.err_est))
}

/// Energy `∫|f_e|²|z|² dν_e + ∫|f_o|²|z|² dν_o`.
pub fn energy_oracle(f: &DensePolynomial, mu: MuParameter, cfg: &QuadratureConfig) -> Result<Estimate> {
    if f.is_zero() {
        return Err(Error::ZeroFunction);
    }
    let mut total = Estimate::new(0.0, 0.0);
    for (parity, fp) in parity_parts(f) {
        if !fp.is_zero() {
            total = add(total, integrate(MeasureDensity::phase(parity, mu), Payload::Energy, &fp, cfg)?);
        }
    }
    Ok(total)
}
