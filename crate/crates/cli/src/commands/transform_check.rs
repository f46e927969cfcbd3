use mu_bargmann::entropy_energy::entropy_gap_zeta1;
use mu_bargmann::mu_core::{zeta_mu, MuParameter};
use mu_bargmann::quadrature::{entropy_oracle, QuadratureConfig, Space};
use mu_bargmann::transform::{bargmann_transform_exact, verify_basis_transform, ComplexGrid};
use rayon::prelude::*;

use super::{verdict, Failure};
use crate::args::TransformCheckArgs;
use crate::output::{emit, Field, Record};

#[derive(Debug, Clone, PartialEq)]
pub struct CheckRow {
    pub kind: &'static str,
    pub mu: f64,
    pub n_max: u64,
    pub value: f64,
    pub expected: f64,
    pub abs_err: f64,
    pub band: f64,
    pub pass: bool,
}

impl Record for CheckRow {
    fn columns() -> &'static [&'static str] {
        &["kind", "mu", "n_max", "value", "expected", "abs_err", "band", "pass"]
    }

    fn fields(&self) -> Vec<Field> {
        vec![
            self.kind.into(),
            self.mu.into(),
            self.n_max.into(),
            self.value.into(),
            self.expected.into(),
            self.abs_err.into(),
            self.band.into(),
            self.pass.into(),
        ]
    }
}

/// Basis deviation and entropy gap rows for one μ.
pub fn check(mu: MuParameter, n_max: u64, bands: (f64, f64), cfg: &QuadratureConfig) -> Result<[CheckRow; 2], Failure> {
    let deviation = verify_basis_transform(n_max, mu, &ComplexGrid::default(), cfg)?;
    let basis = CheckRow {
        kind: "basis_deviation",
        mu: mu.value(),
        n_max,
        value: deviation,
        expected: 0.0,
        abs_err: deviation,
        band: bands.0,
        pass: deviation <= bands.0,
    };

    let zeta1 = zeta_mu(1, mu);
    let image = bargmann_transform_exact(&zeta1, mu);
    let after = entropy_oracle(&image, Space::Phase, mu, cfg)?.value;
    let before = entropy_oracle(&zeta1, Space::Ground, mu, cfg)?.value;
    let gap = after - before;
    let expected = entropy_gap_zeta1(mu);
    let abs_err = (gap - expected).abs();
    let entropy = CheckRow {
        kind: "entropy_gap",
        mu: mu.value(),
        n_max,
        value: gap,
        expected,
        abs_err,
        band: bands.1,
        pass: abs_err <= bands.1 && gap < 0.0,
    };
    Ok([basis, entropy])
}

pub fn run(args: &TransformCheckArgs) -> Result<(), Failure> {
    let cfg = args.quadrature.config();
    cfg.validate()?;
    let bands = (args.band, args.gap_band);
    let rows: Vec<CheckRow> = args
        .mu
        .par_iter()
        .map(|&mu| check(mu, args.n_max, bands, &cfg))
        .collect::<Result<Vec<_>, _>>()?
        .into_iter()
        .flatten()
        .collect();
    emit(&rows, &args.output)?;
    verdict(rows.iter().filter(|r| !r.pass).count(), rows.len(), "checks")
}
