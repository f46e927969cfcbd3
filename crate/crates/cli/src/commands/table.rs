use mu_bargmann::entropy_energy::{energy_xi, entropy_monomial_ground, entropy_xi};
use mu_bargmann::mu_core::MuParameter;

use super::Failure;
use crate::args::{TableArgs, TableKind};
use crate::output::{emit, Field, Record};

#[derive(Debug, Clone, PartialEq)]
pub struct TableRow {
    pub kind: &'static str,
    pub n: u64,
    pub mu: f64,
    pub value: f64,
    /// `value(n+1) - value(n)`.
    pub difference: f64,
}

impl Record for TableRow {
    fn columns() -> &'static [&'static str] {
        &["kind", "n", "mu", "value", "difference"]
    }

    fn fields(&self) -> Vec<Field> {
        vec![self.kind.into(), self.n.into(), self.mu.into(), self.value.into(), self.difference.into()]
    }
}

fn value(kind: TableKind, n: u64, mu: MuParameter) -> Result<f64, Failure> {
    Ok(match kind {
        TableKind::Entropy => entropy_xi(n, mu).value,
        TableKind::Energy => energy_xi(n, mu).value,
        TableKind::MonomialEntropy => entropy_monomial_ground(n, mu)?.value,
    })
}

pub fn rows(kind: TableKind, mus: &[MuParameter], n_max: u64) -> Result<Vec<TableRow>, Failure> {
    let name = match kind {
        TableKind::Entropy => "entropy",
        TableKind::Energy => "energy",
        TableKind::MonomialEntropy => "monomial_entropy",
    };
    let mut out = Vec::new();
    for &mu in mus {
        let mut current = value(kind, 0, mu)?;
        for n in 0..=n_max {
            // the last difference may overflow where the value itself does not
            let next = value(kind, n + 1, mu).unwrap_or(f64::INFINITY);
            out.push(TableRow { kind: name, n, mu: mu.value(), value: current, difference: next - current });
            current = next;
        }
    }
    Ok(out)
}

pub fn run(args: &TableArgs) -> Result<(), Failure> {
    let rows = rows(args.kind, &args.mu, args.n_max)?;
    if let Some(r) = rows.iter().find(|r| !r.value.is_finite()) {
        return Err(Failure::Numeric(format!("value at n={} leaves the f64 range", r.n)));
    }
    emit(&rows, &args.output)?;
    Ok(())
}
