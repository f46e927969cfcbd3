use mu_bargmann::entropy_energy::{energy_xi, entropy_monomial_ground, entropy_xi};
use mu_bargmann::mu_core::{xi_mu, DensePolynomial, MuParameter, Parity};
use mu_bargmann::quadrature::{energy_oracle, entropy_oracle, Estimate, QuadratureConfig, Space};
use rayon::prelude::*;

use super::{verdict, Failure};
use crate::args::VerifyArgs;
use crate::output::{emit, Field, Record};

/// One closed form against its quadrature oracle.
#[derive(Debug, Clone, PartialEq)]
pub struct ReportRow {
    pub kind: &'static str,
    pub n: u64,
    pub mu: f64,
    pub closed_form: f64,
    pub oracle: f64,
    pub abs_err: f64,
    /// `abs_err / max(|closed_form|, 1)`.
    pub rel_err: f64,
    pub quadrature_err_est: f64,
    pub pass: bool,
}

impl ReportRow {
    pub fn new(
        kind: &'static str,
        n: u64,
        mu: MuParameter,
        closed_form: f64,
        oracle: Estimate,
        bands: (f64, f64),
    ) -> Self {
        let abs_err = (closed_form - oracle.value).abs();
        let (abs_band, rel_band) = bands;
        Self {
            kind,
            n,
            mu: mu.value(),
            closed_form,
            oracle: oracle.value,
            abs_err,
            rel_err: abs_err / closed_form.abs().max(1.0),
            quadrature_err_est: oracle.err_est,
            pass: abs_err <= abs_band.max(rel_band * closed_form.abs()),
        }
    }
}

impl Record for ReportRow {
    fn columns() -> &'static [&'static str] {
        &["kind", "n", "mu", "closed_form", "oracle", "abs_err", "rel_err", "quadrature_err_est", "pass"]
    }

    fn fields(&self) -> Vec<Field> {
        vec![
            self.kind.into(),
            self.n.into(),
            self.mu.into(),
            self.closed_form.into(),
            self.oracle.into(),
            self.abs_err.into(),
            self.rel_err.into(),
            self.quadrature_err_est.into(),
            self.pass.into(),
        ]
    }
}

/// The entropy, energy and monomial-entropy rows for one `(n, μ)`.
pub fn rows_for(n: u64, mu: MuParameter, bands: (f64, f64), cfg: &QuadratureConfig) -> Result<[ReportRow; 3], Failure> {
    let (entropy_kind, energy_kind) = match Parity::of(n) {
        Parity::Even => ("entropy_even", "energy_even"),
        Parity::Odd => ("entropy_odd", "energy_odd"),
    };
    let xi = xi_mu(n, mu);
    let s = ReportRow::new(
        entropy_kind,
        n,
        mu,
        entropy_xi(n, mu).value,
        entropy_oracle(&xi, Space::Phase, mu, cfg)?,
        bands,
    );
    let e = ReportRow::new(energy_kind, n, mu, energy_xi(n, mu).value, energy_oracle(&xi, mu, cfg)?, bands);
    let monomial = DensePolynomial::monomial(n as usize, 1.0);
    let m = ReportRow::new(
        "monomial_entropy",
        n,
        mu,
        entropy_monomial_ground(n, mu)?.value,
        entropy_oracle(&monomial, Space::Ground, mu, cfg)?,
        bands,
    );
    Ok([s, e, m])
}

pub fn run(args: &VerifyArgs) -> Result<(), Failure> {
    let cfg = args.quadrature.config();
    cfg.validate()?;
    let bands = (args.abs_band, args.rel_band);
    let jobs: Vec<(MuParameter, u64)> = args.mu.iter().flat_map(|&m| (0..=args.n_max).map(move |n| (m, n))).collect();
    let rows: Vec<ReportRow> = jobs
        .par_iter()
        .map(|&(mu, n)| rows_for(n, mu, bands, &cfg))
        .collect::<Result<Vec<_>, _>>()?
        .into_iter()
        .flatten()
        .collect();
    emit(&rows, &args.output)?;
    for r in rows.iter().filter(|r| !r.pass) {
        eprintln!("fail: {} n={} mu={} abs_err={:e}", r.kind, r.n, r.mu, r.abs_err);
    }
    verdict(rows.iter().filter(|r| !r.pass).count(), rows.len(), "rows")
}
