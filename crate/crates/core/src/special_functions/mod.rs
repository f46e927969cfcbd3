//! Real-argument special functions: log-gamma, digamma and the Macdonald
//! function `K_α`, plus the Mellin moment of `K_α`.

mod bessel;
mod digamma;
mod gamma;

pub use bessel::{bessel_k, bessel_k_flagged, bessel_k_scaled, BesselK, MAX_ORDER};
pub use digamma::digamma;
pub use gamma::{gamma_ratio, log_gamma};

pub(crate) use bessel::ln_bessel_k_small;
pub(crate) use digamma::psi;
pub(crate) use gamma::ln_gamma;

use crate::error::{Error, Result};

/// Euler's constant.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_860_6;

/// Order of a Macdonald function.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct RealOrder(f64);

impl RealOrder {
    pub fn new(value: f64) -> Result<Self> {
        if !value.is_finite() {
            return Err(Error::Domain { function: "RealOrder::new", value, reason: "order must be finite" });
        }
        Ok(Self(value))
    }

    pub fn value(self) -> f64 {
        self.0
    }
}

/// `∫₀^∞ K_α(s) s^{β-1} ds = 2^{β-2} Γ((β-α)/2) Γ((β+α)/2)` for `β > |α|`.
pub fn k_moment(order: RealOrder, beta: f64) -> Result<f64> {
    let alpha = order.value();
    if beta.partial_cmp(&alpha.abs()) != Some(std::cmp::Ordering::Greater) {
        return Err(Error::Domain { function: "k_moment", value: beta, reason: "requires beta > |alpha|" });
    }
    let log = (beta - 2.0) * std::f64::consts::LN_2 + ln_gamma(0.5 * (beta - alpha)) + ln_gamma(0.5 * (beta + alpha));
    Ok(log.exp())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k_moment_examples() {
        let half = RealOrder::new(0.5).unwrap();
        let v = k_moment(half, 1.5).unwrap();
        assert!((v - (std::f64::consts::PI / 2.0).sqrt()).abs() < 1e-14);
        assert!((v - 1.253_314_137_3).abs() < 1e-10);

        let zero = RealOrder::new(0.0).unwrap();
        assert!((k_moment(zero, 2.0).unwrap() - 1.0).abs() < 1e-15);

        // odd-measure mass integrand at mu = 0.5: alpha = 1, beta = 2
        let one = RealOrder::new(1.0).unwrap();
        let v = k_moment(one, 2.0).unwrap();
        assert!((v - std::f64::consts::FRAC_PI_2).abs() < 1e-14);
    }

    #[test]
    fn k_moment_domain() {
        let o = RealOrder::new(-1.2).unwrap();
        assert!(k_moment(o, 1.2).is_err());
        assert!(k_moment(o, 1.0).is_err());
        assert!(k_moment(o, 1.3).is_ok());
    }
}
