//! Numerics for the μ-deformed Segal-Bargmann space.
//!
//! Closed-form entropies and energies of the canonical bases
//! ([`entropy_energy`]), the deformed factorials, polynomials and measures
//! they are built from ([`mu_core`], [`special_functions`]), an adaptive
//! quadrature that checks them independently ([`quadrature`]), and the
//! transform from the line to phase space ([`transform`]).
//!
//! ```
//! use mu_bargmann::entropy_energy::entropy_xi;
//! use mu_bargmann::mu_core::{xi_mu, MuParameter};
//! use mu_bargmann::quadrature::{entropy_oracle, QuadratureConfig, Space};
//!
//! let mu = MuParameter::new(1.0)?;
//! let closed = entropy_xi(5, mu).value;
//! let oracle = entropy_oracle(&xi_mu(5, mu), Space::Phase, mu, &QuadratureConfig::default())?;
//! assert!((closed - oracle.value).abs() < 1e-9);
//! # Ok::<(), mu_bargmann::Error>(())
//! ```

pub mod entropy_energy;
pub mod error;
pub mod mu_core;
pub mod quadrature;
pub mod special_functions;
pub mod transform;

pub use error::{Error, Result};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../README.md")]
    mod readme {}
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/factorials.md")]
    mod factorials {}
    #[doc = include_str!("../../../book/src/hermite.md")]
    mod hermite {}
    #[doc = include_str!("../../../book/src/measures.md")]
    mod measures {}
    #[doc = include_str!("../../../book/src/entropy.md")]
    mod entropy {}
    #[doc = include_str!("../../../book/src/sharpness.md")]
    mod sharpness {}
    #[doc = include_str!("../../../book/src/limits.md")]
    mod limits {}
    #[doc = include_str!("../../../book/src/quadrature.md")]
    mod quadrature {}
    #[doc = include_str!("../../../book/src/transform.md")]
    mod transform {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
