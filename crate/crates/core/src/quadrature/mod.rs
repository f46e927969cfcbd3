//! Adaptive quadrature and the integral oracles built on it.

mod config;
mod engine;
mod integrand;
mod kronrod;
mod oracle;
mod roots;

pub use config::{Estimate, QuadratureConfig};
pub use engine::{integrate_half_line, integrate_interval};
pub use integrand::{integrate_semi_infinite, IntegrandSpec, Payload, ANGULAR_NODES};
pub use oracle::{
    energy_oracle, entropy_oracle, entropy_oracle_direct, inner_product_oracle, mass_oracle, norm_sq_oracle,
    space_mass, Space,
};
pub use roots::real_zeros;
