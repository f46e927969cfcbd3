use mu_bargmann::entropy_energy::{sharpness_sequence, summarize, SharpnessPoint, Verdict};
use mu_bargmann::mu_core::{MuParameter, Parity};
use rayon::prelude::*;

use super::{verdict, Failure};
use crate::args::{ParityArg, SharpnessArgs};
use crate::output::{emit, Field, Record};

fn parity_name(p: Parity) -> &'static str {
    match p {
        Parity::Even => "even",
        Parity::Odd => "odd",
    }
}

/// Verdict required by the dichotomy: bounded exactly when `c > 1`.
pub fn expected(c: f64) -> Verdict {
    if c > 1.0 {
        Verdict::Bounded
    } else {
        Verdict::Unbounded
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SummaryRow {
    pub parity: Parity,
    pub c: f64,
    pub mu: f64,
    pub n_max: u64,
    pub argmax: u64,
    pub max: f64,
    pub growth: f64,
    pub predicted_growth: f64,
    pub verdict: Verdict,
}

impl SummaryRow {
    pub fn pass(&self) -> bool {
        self.verdict == expected(self.c)
    }
}

impl Record for SummaryRow {
    fn columns() -> &'static [&'static str] {
        &[
            "parity",
            "c",
            "mu",
            "n_max",
            "argmax",
            "max_gap",
            "growth",
            "predicted_growth",
            "verdict",
            "expected",
            "pass",
        ]
    }

    fn fields(&self) -> Vec<Field> {
        vec![
            parity_name(self.parity).into(),
            self.c.into(),
            self.mu.into(),
            self.n_max.into(),
            self.argmax.into(),
            self.max.into(),
            self.growth.into(),
            self.predicted_growth.into(),
            self.verdict.as_str().into(),
            expected(self.c).as_str().into(),
            self.pass().into(),
        ]
    }
}

struct SequenceRow(Parity, SharpnessPoint);

impl Record for SequenceRow {
    fn columns() -> &'static [&'static str] {
        &["parity", "c", "mu", "k", "basis_index", "gap", "predictor"]
    }

    fn fields(&self) -> Vec<Field> {
        let p = &self.1;
        vec![
            parity_name(self.0).into(),
            p.c.into(),
            p.mu.value().into(),
            p.index.into(),
            p.basis_index.into(),
            p.gap.into(),
            p.predictor.into(),
        ]
    }
}

fn parities(arg: ParityArg) -> Vec<Parity> {
    match arg {
        ParityArg::Even => vec![Parity::Even],
        ParityArg::Odd => vec![Parity::Odd],
        ParityArg::Both => vec![Parity::Even, Parity::Odd],
    }
}

fn jobs(parity: ParityArg, c: &[f64], mu: &[MuParameter]) -> Vec<(Parity, f64, MuParameter)> {
    let mut out = Vec::new();
    for p in parities(parity) {
        for &mu in mu {
            for &c in c {
                out.push((p, c, mu));
            }
        }
    }
    out
}

/// Summary rows for every `(parity, μ, c)`, in that nesting order.
pub fn summaries(parity: ParityArg, c: &[f64], mu: &[MuParameter], n_max: u64) -> Vec<SummaryRow> {
    jobs(parity, c, mu)
        .par_iter()
        .map(|&(p, c, mu)| {
            let s = summarize(&sharpness_sequence(p, c, mu, n_max));
            SummaryRow {
                parity: p,
                c,
                mu: mu.value(),
                n_max,
                argmax: s.argmax,
                max: s.max,
                growth: s.growth,
                predicted_growth: s.predicted_growth,
                verdict: s.verdict,
            }
        })
        .collect()
}

pub fn run(args: &SharpnessArgs) -> Result<(), Failure> {
    if args.n_max < 10 {
        return Err(Failure::Usage("--n-max must be at least 10".into()));
    }
    if let Some(c) = args.c.iter().find(|c| !c.is_finite()) {
        return Err(Failure::Usage(format!("c must be finite (got {c})")));
    }
    let rows = summaries(args.parity, &args.c, &args.mu, args.n_max);
    if args.sequence {
        let seq: Vec<SequenceRow> = jobs(args.parity, &args.c, &args.mu)
            .into_iter()
            .flat_map(|(p, c, mu)| {
                sharpness_sequence(p, c, mu, args.n_max).into_iter().map(move |pt| SequenceRow(p, pt))
            })
            .collect();
        emit(&seq, &args.output)?;
    } else {
        emit(&rows, &args.output)?;
    }
    for r in rows.iter().filter(|r| !r.pass()) {
        eprintln!(
            "fail: {} c={} mu={} verdict {} (expected {})",
            parity_name(r.parity),
            r.c,
            r.mu,
            r.verdict.as_str(),
            expected(r.c).as_str()
        );
    }
    verdict(rows.iter().filter(|r| !r.pass()).count(), rows.len(), "verdicts")
}
