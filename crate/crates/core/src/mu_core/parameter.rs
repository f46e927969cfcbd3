use std::fmt;

use crate::error::{Error, Result};

/// Deformation parameter `μ`, always strictly greater than `-1/2`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct MuParameter(f64);

impl MuParameter {
    pub fn new(mu: f64) -> Result<Self> {
        if mu.is_finite() && mu > -0.5 {
            Ok(Self(mu))
        } else {
            Err(Error::InvalidMu(mu))
        }
    }

    /// The undeformed case `μ = 0`.
    pub const ZERO: Self = Self(0.0);

    pub fn value(self) -> f64 {
        self.0
    }

    /// `μ + 1/2`, positive by construction.
    pub fn half_shifted(self) -> f64 {
        self.0 + 0.5
    }
}

impl TryFrom<f64> for MuParameter {
    type Error = Error;

    fn try_from(mu: f64) -> Result<Self> {
        Self::new(mu)
    }
}

impl fmt::Display for MuParameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}
