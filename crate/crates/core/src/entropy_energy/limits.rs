//! Finite-range views of the limits of the entropy sequences.

use std::f64::consts::E;

use super::{entropy_classical, entropy_xi, entropy_xi_even, entropy_xi_odd};
use crate::error::{Error, Result};
use crate::mu_core::{gamma_mu_root_ratio, MuParameter};

/// One row of a convergence table.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LimitRow {
    /// Index `n` or parameter `μ` driving the limit.
    pub at: f64,
    pub value: f64,
    /// Distance to the limit; for a limit of `-∞` this is `e^{value}`.
    pub error: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct LimitTable {
    pub limit: f64,
    pub rows: Vec<LimitRow>,
}

impl LimitTable {
    fn build(limit: f64, points: impl IntoIterator<Item = (f64, f64)>) -> Self {
        let rows = points
            .into_iter()
            .map(|(at, value)| {
                let error = if limit == f64::NEG_INFINITY { value.exp() } else { (value - limit).abs() };
                LimitRow { at, value, error }
            })
            .collect();
        Self { limit, rows }
    }

    /// `true` when the error column strictly decreases.
    pub fn errors_decreasing(&self) -> bool {
        self.rows.windows(2).all(|w| w[1].error < w[0].error)
    }

    pub fn final_error(&self) -> Option<f64> {
        self.rows.last().map(|r| r.error)
    }

    /// Decreasing errors and a final error within `band`.
    pub fn passes(&self, band: f64) -> bool {
        self.errors_decreasing() && self.final_error().is_some_and(|e| e <= band)
    }
}

/// `S_{n+1}^μ - S_n^μ → 1`.
pub fn consecutive_difference(mu: MuParameter, ns: &[u64]) -> LimitTable {
    LimitTable::build(1.0, ns.iter().map(|&n| (n as f64, entropy_xi(n + 1, mu).value - entropy_xi(n, mu).value)))
}

/// `S_{2n+2}^μ - S_{2n}^μ → 2`, indexed by `n`.
pub fn even_step_difference(mu: MuParameter, ns: &[u64]) -> LimitTable {
    LimitTable::build(
        2.0,
        ns.iter().map(|&n| (n as f64, entropy_xi_even(n + 1, mu).value - entropy_xi_even(n, mu).value)),
    )
}

/// `S_n^μ / n → 1`.
pub fn cesaro_mean(mu: MuParameter, ns: &[u64]) -> Result<LimitTable> {
    if ns.contains(&0) {
        return Err(Error::InvalidConfig("Cesàro means need n >= 1"));
    }
    Ok(LimitTable::build(1.0, ns.iter().map(|&n| (n as f64, entropy_xi(n, mu).value / n as f64))))
}

/// `γ_μ(n)^{1/n} / n → 1/e`.
pub fn factorial_root(mu: MuParameter, ns: &[u64]) -> Result<LimitTable> {
    if ns.contains(&0) {
        return Err(Error::InvalidConfig("root ratios need n >= 1"));
    }
    Ok(LimitTable::build(1.0 / E, ns.iter().map(|&n| (n as f64, gamma_mu_root_ratio(n, mu)))))
}

/// The `μ → ∞` behaviour at a fixed basis index.
///
/// Even index `2n`: `S_{2n}^μ - S_n`, tending to 0. Odd index `2n+1`:
/// `S_{2n+1}^μ` itself, tending to `-∞`.
pub fn entropy_limit_mu_infinity(index: u64, mu_grid: &[MuParameter]) -> Result<Vec<f64>> {
    if mu_grid.windows(2).any(|w| w[1].value() <= w[0].value()) {
        return Err(Error::InvalidConfig("mu grid must be strictly increasing"));
    }
    let n = index / 2;
    Ok(mu_grid
        .iter()
        .map(|&mu| {
            if index.is_multiple_of(2) {
                entropy_xi_even(n, mu).value - entropy_classical(n).value
            } else {
                entropy_xi_odd(n, mu).value
            }
        })
        .collect())
}

/// [`entropy_limit_mu_infinity`] as a convergence table.
pub fn mu_infinity_table(index: u64, mu_grid: &[MuParameter]) -> Result<LimitTable> {
    let values = entropy_limit_mu_infinity(index, mu_grid)?;
    let limit = if index.is_multiple_of(2) { 0.0 } else { f64::NEG_INFINITY };
    Ok(LimitTable::build(limit, mu_grid.iter().map(|m| m.value()).zip(values)))
}
