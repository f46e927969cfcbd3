//! Integrands of the norm, inner-product, entropy and energy functionals,
//! reduced to one variable on `(0, ∞)`.

use std::f64::consts::PI;

use num_complex::Complex64;

use super::{integrate_half_line, real_zeros, Estimate, QuadratureConfig};
use crate::error::{Error, Result};
use crate::mu_core::{DensePolynomial, MeasureDensity};

/// Angular nodes of the trapezoid rule on phase-space circles.
pub const ANGULAR_NODES: usize = 256;

/// Search radius for real zeros on the line; the Gaussian weight is below
/// `e^{-1600}` beyond it.
const ZERO_SEARCH_RADIUS: f64 = 40.0;

#[derive(Debug, Clone, PartialEq)]
pub enum Payload {
    /// `|f|²`.
    NormSq,
    /// `|f|² ln(|f|² / norm_sq)`.
    Entropy { norm_sq: f64 },
    /// `|f|² |z|²`, phase space only.
    Energy,
    /// `f · g` for a second real polynomial `g`.
    Product(DensePolynomial),
}

/// A functional of one polynomial against one measure.
///
/// On the line the integrand is folded onto `t > 0`. In phase space it is
/// averaged over circles and written in `s = |z|²`; the average is exact
/// except for entropies of non-monomials, which use a trapezoid rule with
/// [`ANGULAR_NODES`] nodes.
#[derive(Debug, Clone, PartialEq)]
pub struct IntegrandSpec {
    pub measure: MeasureDensity,
    pub payload: Payload,
    pub function: DensePolynomial,
}

impl IntegrandSpec {
    pub fn new(measure: MeasureDensity, payload: Payload, function: DensePolynomial) -> Result<Self> {
        if matches!(payload, Payload::Energy) && !measure.is_phase() {
            return Err(Error::InvalidConfig("energy is defined on phase space only"));
        }
        if let Payload::Entropy { norm_sq } = payload {
            if !(norm_sq > 0.0 && norm_sq.is_finite()) {
                return Err(Error::InvalidConfig("entropy needs a positive finite norm"));
            }
        }
        Ok(Self { measure, payload, function })
    }

    /// Integrand in the reduced variable (`t` on the line, `s` in phase space).
    pub fn evaluate(&self, x: f64) -> f64 {
        if self.measure.is_phase() {
            self.evaluate_phase(x)
        } else {
            self.evaluate_line(x)
        }
    }

    fn evaluate_line(&self, t: f64) -> f64 {
        let w = self.measure.reduced_weight(t);
        if w == 0.0 {
            return 0.0;
        }
        let p = &self.function;
        let at = |u: f64| -> f64 {
            let v = p.eval(u);
            match &self.payload {
                Payload::NormSq => v * v,
                Payload::Entropy { norm_sq } => xlogx_rel(v * v, *norm_sq),
                Payload::Product(g) => v * g.eval(u),
                Payload::Energy => unreachable!("rejected in IntegrandSpec::new"),
            }
        };
        (at(t) + at(-t)) * w
    }

    fn evaluate_phase(&self, s: f64) -> f64 {
        let ln_w = self.measure.ln_reduced_weight(s);
        let ln_s = s.ln();
        let p = &self.function;
        // ⟨|Σ a_k z^k|²⟩ over a circle of radius √s is Σ a_k² s^k
        let diagonal = |a: &dyn Fn(usize) -> f64| -> f64 {
            p.coeffs()
                .iter()
                .enumerate()
                .filter(|(_, c)| **c != 0.0)
                .map(|(k, _)| {
                    let c = a(k);
                    if c == 0.0 {
                        0.0
                    } else {
                        c.signum() * (c.abs().ln() + k as f64 * ln_s + ln_w).exp()
                    }
                })
                .sum()
        };
        match &self.payload {
            Payload::NormSq => diagonal(&|k| p.coeff(k) * p.coeff(k)),
            Payload::Energy => s * diagonal(&|k| p.coeff(k) * p.coeff(k)),
            Payload::Product(g) => diagonal(&|k| p.coeff(k) * g.coeff(k)),
            Payload::Entropy { norm_sq } => match p.as_monomial() {
                Some((k, c)) => {
                    let ln_f2 = 2.0 * c.abs().ln() + k as f64 * ln_s;
                    (ln_f2 + ln_w).exp() * (ln_f2 - norm_sq.ln())
                }
                None => {
                    let r = s.sqrt();
                    let avg = angular_mean(
                        |z| {
                            let v = p.eval_complex(z).norm_sqr();
                            xlogx_rel(v, *norm_sq)
                        },
                        r,
                    );
                    avg * ln_w.exp()
                }
            },
        }
    }

    /// Points on `(0, ∞)` where the reduced integrand has kinks.
    pub fn breakpoints(&self) -> Vec<f64> {
        if self.measure.is_phase() || !matches!(self.payload, Payload::Entropy { .. }) {
            return Vec::new();
        }
        let mut b: Vec<f64> =
            real_zeros(&self.function, ZERO_SEARCH_RADIUS).into_iter().map(f64::abs).filter(|&t| t > 1e-12).collect();
        b.sort_by(f64::total_cmp);
        b.dedup_by(|x, y| (*x - *y).abs() <= 1e-13 * y.abs());
        b
    }
}

/// `v ln(v / n)` with the continuous extension `0` at `v = 0`.
pub(crate) fn xlogx_rel(v: f64, n: f64) -> f64 {
    if v == 0.0 {
        0.0
    } else {
        v * (v / n).ln()
    }
}

/// Trapezoid mean of `g` over the circle of radius `r`.
pub(crate) fn angular_mean<G: Fn(Complex64) -> f64>(g: G, r: f64) -> f64 {
    let h = 2.0 * PI / ANGULAR_NODES as f64;
    let sum: f64 = (0..ANGULAR_NODES).map(|j| g(Complex64::from_polar(r, h * j as f64))).sum();
    sum / ANGULAR_NODES as f64
}

/// Integrates the reduced integrand over `(0, ∞)`.
pub fn integrate_semi_infinite(spec: &IntegrandSpec, cfg: &QuadratureConfig) -> Result<Estimate> {
    integrate_half_line(|x| spec.evaluate(x), &spec.breakpoints(), cfg)
}
