//! Closed-form entropies and energies, their identities, limits and the
//! `E - cS` gap sequences.

mod energy;
mod entropy;
mod limits;
mod sharpness;

use crate::mu_core::MuParameter;

pub use energy::energy_xi;
pub use entropy::{
    entropy_classical, entropy_gap_zeta1, entropy_monomial_ground, entropy_monomial_ground_log,
    entropy_relation_half_plus_m, entropy_xi, entropy_xi_even, entropy_xi_odd, entropy_zeta1, s_vs_s_relation,
};
pub use limits::{
    cesaro_mean, consecutive_difference, entropy_limit_mu_infinity, even_step_difference, factorial_root,
    mu_infinity_table, LimitRow, LimitTable,
};
pub use sharpness::{sharpness_point, sharpness_sequence, summarize, SharpnessPoint, SharpnessSummary, Verdict};

/// Entropy in nats of the basis element or monomial with index `n`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EntropyValue {
    pub n: u64,
    pub mu: MuParameter,
    pub value: f64,
}

/// Energy of the basis element with index `n`; always positive.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EnergyValue {
    pub n: u64,
    pub mu: MuParameter,
    pub value: f64,
}
