//! The Gaussian ground-state measure on the line and the two
//! Macdonald-weighted measures on the plane.

use std::f64::consts::{LN_2, PI};

use super::{MuParameter, Parity};
use crate::error::{Error, Result};
use crate::special_functions::{bessel_k_scaled, ln_bessel_k_small, ln_gamma, RealOrder};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MeasureKind {
    /// `Γ(μ+1/2)^{-1} e^{-t²} |t|^{2μ} dt` on the real line.
    GroundState,
    /// `2^{1/2-μ} (π Γ(μ+1/2))^{-1} K_{μ-1/2}(|z|²) |z|^{2μ+1} dx dy`.
    EvenPhase,
    /// Same as [`MeasureKind::EvenPhase`] with `K_{μ+1/2}`.
    OddPhase,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MeasureDensity {
    pub kind: MeasureKind,
    pub mu: MuParameter,
}

impl MeasureDensity {
    pub fn new(kind: MeasureKind, mu: MuParameter) -> Self {
        Self { kind, mu }
    }

    pub fn ground(mu: MuParameter) -> Self {
        Self::new(MeasureKind::GroundState, mu)
    }

    /// The phase-space measure that pairs with functions of the given parity.
    pub fn phase(parity: Parity, mu: MuParameter) -> Self {
        match parity {
            Parity::Even => Self::new(MeasureKind::EvenPhase, mu),
            Parity::Odd => Self::new(MeasureKind::OddPhase, mu),
        }
    }

    pub fn is_phase(&self) -> bool {
        self.kind != MeasureKind::GroundState
    }

    /// Order of the Macdonald factor, `None` for the ground state.
    pub fn bessel_order(&self) -> Option<f64> {
        let m = self.mu.value();
        match self.kind {
            MeasureKind::GroundState => None,
            MeasureKind::EvenPhase => Some(m - 0.5),
            MeasureKind::OddPhase => Some(m + 0.5),
        }
    }

    fn ln_prefactor(&self) -> f64 {
        let m = self.mu.value();
        let ln_g = ln_gamma(self.mu.half_shifted());
        match self.kind {
            MeasureKind::GroundState => -ln_g,
            _ => (0.5 - m) * LN_2 - ln_g - PI.ln(),
        }
    }

    /// Density at a real point `t` (ground state) or at radius `r = |z|`
    /// (phase kinds, `r ≥ 0`).
    ///
    /// At the origin the limit is returned when finite; otherwise
    /// [`Error::SingularOrigin`] is raised (the density stays integrable).
    pub fn density(&self, point: f64) -> Result<f64> {
        if !point.is_finite() || (self.is_phase() && point < 0.0) {
            return Err(Error::Domain {
                function: "density",
                value: point,
                reason: "phase densities take a radius r >= 0",
            });
        }
        if point == 0.0 {
            return self.origin_limit();
        }
        Ok(match self.kind {
            MeasureKind::GroundState => self.ln_line_density(point.abs()).exp(),
            _ => self.ln_radial_weight(point * point).exp() / PI,
        })
    }

    fn origin_limit(&self) -> Result<f64> {
        let m = self.mu.value();
        match self.kind {
            MeasureKind::GroundState => match m.partial_cmp(&0.0) {
                Some(std::cmp::Ordering::Greater) => Ok(0.0),
                Some(std::cmp::Ordering::Equal) => Ok(self.ln_prefactor().exp()),
                _ => Err(Error::SingularOrigin),
            },
            // K_α(r²) r^{2μ+1} ~ Γ(|α|) 2^{|α|-1} r^{2μ+1-2|α|}
            _ => {
                let a = self.bessel_order().unwrap_or(0.0).abs();
                let exponent = 2.0 * m + 1.0 - 2.0 * a;
                if a == 0.0 || exponent > 0.0 {
                    Ok(0.0)
                } else if exponent == 0.0 {
                    Ok((self.ln_prefactor() + ln_gamma(a) + (a - 1.0) * LN_2).exp())
                } else {
                    Err(Error::SingularOrigin)
                }
            }
        }
    }

    /// `ln` of the ground density at `t > 0`.
    fn ln_line_density(&self, t: f64) -> f64 {
        self.ln_prefactor() - t * t + 2.0 * self.mu.value() * t.ln()
    }

    /// `ln w(s)` where `∫_ℂ g(|z|²) dν = ∫_0^∞ g(s) w(s) ds` for radial `g`.
    ///
    /// `w(s) = 2^{1/2-μ} Γ(μ+1/2)^{-1} K_α(s) s^{μ+1/2}`.
    fn ln_radial_weight(&self, s: f64) -> f64 {
        let alpha = self.bessel_order().unwrap_or(0.0);
        let order = RealOrder::new(alpha).expect("finite order");
        let ln_k = match bessel_k_scaled(order, s) {
            Ok(v) if v > 0.0 && v.is_finite() => v.ln() - s,
            _ => ln_bessel_k_small(alpha, s),
        };
        self.ln_prefactor() + PI.ln() + ln_k + self.mu.half_shifted() * s.ln()
    }

    /// Weight of the one-dimensional reduction on `(0, ∞)`.
    ///
    /// Ground state: the density itself at `x = t > 0`. Phase kinds: the
    /// radial weight `w(s)` at `x = s = r²`, so that
    /// `∫_ℂ g(|z|²) dν = ∫_0^∞ g(s) w(s) ds`.
    pub fn reduced_weight(&self, x: f64) -> f64 {
        self.ln_reduced_weight(x).exp()
    }

    /// `ln` of [`MeasureDensity::reduced_weight`], finite for all `x > 0`.
    pub fn ln_reduced_weight(&self, x: f64) -> f64 {
        debug_assert!(x > 0.0);
        match self.kind {
            MeasureKind::GroundState => self.ln_line_density(x),
            _ => self.ln_radial_weight(x),
        }
    }

    /// Total mass of the measure.
    ///
    /// 1 for the ground state and even phase, `√π Γ(μ+1) / Γ(μ+1/2)` for
    /// the odd phase.
    pub fn mass(&self) -> f64 {
        match self.kind {
            MeasureKind::OddPhase => {
                (0.5 * PI.ln() + ln_gamma(self.mu.value() + 1.0) - ln_gamma(self.mu.half_shifted())).exp()
            }
            _ => 1.0,
        }
    }
}
