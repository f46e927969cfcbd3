//! Deformed factorials, exponentials, Hermite polynomials and measures.

mod factorial;
mod hermite;
mod measure;
mod parameter;
mod polynomial;

pub use factorial::{e_mu, gamma_mu, gamma_mu_root_ratio, log_gamma_mu, theta_odd};
pub use hermite::{hermite_mu, xi_mu, xi_mu_norm_const, zeta_mu};
pub use measure::{MeasureDensity, MeasureKind};
pub use parameter::MuParameter;
pub use polynomial::{DensePolynomial, Parity};
