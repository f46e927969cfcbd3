use crate::error::{Error, Result};

/// Tolerances and limits for the adaptive integrator.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureConfig {
    pub rel_tol: f64,
    pub abs_tol: f64,
    pub max_subdivisions: usize,
    /// Upper truncation point in the integration variable. `None` searches
    /// by doubling from 8 up to 700.
    pub tail_cut: Option<f64>,
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        Self { rel_tol: 1e-10, abs_tol: 1e-14, max_subdivisions: 2000, tail_cut: None }
    }
}

impl QuadratureConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.rel_tol > 0.0 && self.rel_tol.is_finite()) {
            return Err(Error::InvalidConfig("rel_tol must be positive"));
        }
        if !(self.abs_tol > 0.0 && self.abs_tol.is_finite()) {
            return Err(Error::InvalidConfig("abs_tol must be positive"));
        }
        if self.max_subdivisions == 0 {
            return Err(Error::InvalidConfig("max_subdivisions must be at least 1"));
        }
        if let Some(t) = self.tail_cut {
            if !(t > 0.0 && t.is_finite()) {
                return Err(Error::InvalidConfig("tail_cut must be positive"));
            }
        }
        Ok(())
    }

    /// Target for the total error estimate given the current value.
    pub(crate) fn target(&self, value: f64) -> f64 {
        self.rel_tol * value.abs() + self.abs_tol
    }
}

/// Integral value with its error estimate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Estimate {
    pub value: f64,
    pub err_est: f64,
}

impl Estimate {
    pub fn new(value: f64, err_est: f64) -> Self {
        Self { value, err_est }
    }
}
