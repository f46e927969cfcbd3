use mu_bargmann::entropy_energy::{
    cesaro_mean, consecutive_difference, even_step_difference, factorial_root, mu_infinity_table, LimitTable,
};
use mu_bargmann::mu_core::MuParameter;

use super::{verdict, Failure};
use crate::args::{LimitKind, LimitsArgs};
use crate::output::{emit, Field, Record};

#[derive(Debug, Clone, PartialEq)]
pub struct LimitOutRow {
    pub kind: &'static str,
    pub mu: f64,
    pub n: u64,
    pub value: f64,
    pub limit: f64,
    pub error: f64,
}

impl Record for LimitOutRow {
    fn columns() -> &'static [&'static str] {
        &["kind", "mu", "n", "value", "limit", "error"]
    }

    fn fields(&self) -> Vec<Field> {
        vec![self.kind.into(), self.mu.into(), self.n.into(), self.value.into(), self.limit.into(), self.error.into()]
    }
}

pub fn name(kind: LimitKind) -> &'static str {
    match kind {
        LimitKind::Diff1 => "diff1",
        LimitKind::Diff2 => "diff2",
        LimitKind::Cesaro => "cesaro",
        LimitKind::FactorialRoot => "lemma32",
        LimitKind::MuInfinity => "mu-infinity",
    }
}

pub fn default_ns(kind: LimitKind) -> Vec<u64> {
    match kind {
        LimitKind::Diff1 => vec![20, 200, 2000],
        LimitKind::Diff2 => vec![10, 100, 1000],
        LimitKind::Cesaro | LimitKind::FactorialRoot => vec![100, 1000, 10_000],
        LimitKind::MuInfinity => Vec::new(),
    }
}

/// Default band on the final error. The odd `μ → ∞` limit is `-∞`, where the
/// error column is `e^{S}`.
pub fn default_band(kind: LimitKind, index: u64) -> f64 {
    match kind {
        LimitKind::Diff1 | LimitKind::Diff2 => 0.01,
        LimitKind::Cesaro => 0.02,
        LimitKind::FactorialRoot => 3e-3,
        LimitKind::MuInfinity if index.is_multiple_of(2) => 1e-3,
        LimitKind::MuInfinity => 1.0,
    }
}

/// One convergence table per μ, or the single μ-grid table.
pub fn tables(kind: LimitKind, mus: &[MuParameter], ns: &[u64], index: u64) -> Result<Vec<(f64, LimitTable)>, Failure> {
    if kind == LimitKind::MuInfinity {
        return Ok(vec![(f64::NAN, mu_infinity_table(index, mus)?)]);
    }
    if ns.is_empty() {
        return Err(Failure::Usage("--n needs at least one index".into()));
    }
    mus.iter()
        .map(|&mu| {
            let t = match kind {
                LimitKind::Diff1 => consecutive_difference(mu, ns),
                LimitKind::Diff2 => even_step_difference(mu, ns),
                LimitKind::Cesaro => cesaro_mean(mu, ns)?,
                LimitKind::FactorialRoot => factorial_root(mu, ns)?,
                LimitKind::MuInfinity => unreachable!(),
            };
            Ok((mu.value(), t))
        })
        .collect()
}

pub fn run(args: &LimitsArgs) -> Result<(), Failure> {
    let kind = args.which;
    let mus = match (&args.mu, kind) {
        (Some(m), _) => m.clone(),
        (None, LimitKind::MuInfinity) => {
            [1.0, 10.0, 100.0, 1000.0].iter().map(|&v| MuParameter::new(v)).collect::<Result<_, _>>()?
        }
        (None, _) => vec![MuParameter::ZERO],
    };
    if mus.is_empty() {
        return Err(Failure::Usage("--mu needs at least one value".into()));
    }
    let ns = args.n.clone().unwrap_or_else(|| default_ns(kind));
    let band = args.band.unwrap_or_else(|| default_band(kind, args.index));
    let tables = tables(kind, &mus, &ns, args.index)?;

    let mut rows = Vec::new();
    for (mu, t) in &tables {
        for r in &t.rows {
            let (mu, n) = if kind == LimitKind::MuInfinity { (r.at, args.index) } else { (*mu, r.at as u64) };
            rows.push(LimitOutRow { kind: name(kind), mu, n, value: r.value, limit: t.limit, error: r.error });
        }
    }
    emit(&rows, &args.output)?;
    let failed = tables.iter().filter(|(_, t)| !t.passes(band)).count();
    for (mu, t) in tables.iter().filter(|(_, t)| !t.passes(band)) {
        eprintln!(
            "fail: {} mu={mu} decreasing={} final_error={:e} band={band:e}",
            name(kind),
            t.errors_decreasing(),
            t.final_error().unwrap_or(f64::NAN)
        );
    }
    verdict(failed, tables.len(), "tables")
}
