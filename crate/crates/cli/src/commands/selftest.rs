//! Smoke suite over the documented example values.

use std::f64::consts::{E, FRAC_1_SQRT_2, LN_2, PI};

use mu_bargmann::entropy_energy::{
    energy_xi, entropy_classical, entropy_monomial_ground, entropy_xi, entropy_zeta1, Verdict,
};
use mu_bargmann::mu_core::{e_mu, gamma_mu, hermite_mu, zeta_mu, DensePolynomial, MeasureDensity, MuParameter, Parity};
use mu_bargmann::quadrature::{
    energy_oracle, entropy_oracle, mass_oracle, norm_sq_oracle, space_mass, QuadratureConfig, Space,
};
use mu_bargmann::special_functions::{bessel_k, digamma, log_gamma, RealOrder, EULER_GAMMA};
use mu_bargmann::transform::bargmann_transform;
use num_complex::Complex64;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;

use super::{limits, sharpness, table, transform_check, verdict, verify, Failure};
use crate::args::{LimitKind, ParityArg, SelftestArgs, TableKind};
use crate::output::{emit, Field, Record};

#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub name: String,
    pub value: f64,
    pub expected: f64,
    pub abs_err: f64,
    pub band: f64,
    pub pass: bool,
}

impl Check {
    fn close(name: impl Into<String>, value: f64, expected: f64, band: f64) -> Self {
        let abs_err = (value - expected).abs();
        Self { name: name.into(), value, expected, abs_err, band, pass: abs_err <= band }
    }

    /// A yes/no check reporting a single diagnostic value.
    fn holds(name: impl Into<String>, value: f64, pass: bool) -> Self {
        Self { name: name.into(), value, expected: f64::NAN, abs_err: f64::NAN, band: f64::NAN, pass }
    }
}

impl Record for Check {
    fn columns() -> &'static [&'static str] {
        &["check", "value", "expected", "abs_err", "band", "pass"]
    }

    fn fields(&self) -> Vec<Field> {
        vec![
            Field::Str(self.name.clone()),
            self.value.into(),
            self.expected.into(),
            self.abs_err.into(),
            self.band.into(),
            self.pass.into(),
        ]
    }
}

type Group = Box<dyn Fn() -> Result<Vec<Check>, Failure> + Send + Sync>;

fn mu(v: f64) -> MuParameter {
    MuParameter::new(v).expect("literal parameter")
}

fn max_coeff_diff(a: &DensePolynomial, b: &DensePolynomial) -> f64 {
    (a - b).coeffs().iter().fold(0.0, |m, c| m.max(c.abs()))
}

fn special_functions() -> Result<Vec<Check>, Failure> {
    let g = EULER_GAMMA;
    Ok(vec![
        Check::close("digamma(1)", digamma(1.0)?, -g, 1e-14),
        Check::close("digamma(1/2)", digamma(0.5)?, -g - 2.0 * LN_2, 1e-14),
        Check::close("digamma(4)", digamma(4.0)?, -g + 1.0 + 0.5 + 1.0 / 3.0, 1e-14),
        Check::close("K_{1/2}(1)", bessel_k(RealOrder::new(0.5)?, 1.0)?, (PI / 2.0).sqrt() / E, 1e-14),
        Check::close("K_{-1/2}(2)", bessel_k(RealOrder::new(-0.5)?, 2.0)?, (PI / 4.0).sqrt() * (-2.0f64).exp(), 1e-14),
    ])
}

fn mu_core() -> Result<Vec<Check>, Failure> {
    let m = mu(0.7);
    let h1 = DensePolynomial::new(vec![0.0, 2.0 / (1.0 + 2.0 * m.value())]);
    let h2 = DensePolynomial::new(vec![-2.0, 0.0, 4.0 / (1.0 + 2.0 * m.value())]);
    let z1 = DensePolynomial::new(vec![0.0, (2.0 / (1.0 + 2.0 * m.value())).sqrt()]);
    let ground = MeasureDensity::ground(MuParameter::ZERO).density(0.0)?;
    let even = MeasureDensity::phase(Parity::Even, MuParameter::ZERO).density(1.0)?;
    Ok(vec![
        Check::close("gamma_mu(0, 0.7)", gamma_mu(0, m), 1.0, 0.0),
        Check::close("gamma_mu(4, 0)", gamma_mu(4, MuParameter::ZERO), 24.0, 1e-12),
        Check::close("e_mu(1, 0)", e_mu(Complex64::new(1.0, 0.0), MuParameter::ZERO, 1e-16).re, E, 1e-14),
        Check::close("H_0 at mu=0.7", max_coeff_diff(&hermite_mu(0, m), &DensePolynomial::constant(1.0)), 0.0, 1e-14),
        Check::close("H_1 at mu=0.7", max_coeff_diff(&hermite_mu(1, m), &h1), 0.0, 1e-14),
        Check::close("H_2 at mu=0.7", max_coeff_diff(&hermite_mu(2, m), &h2), 0.0, 1e-13),
        Check::close("zeta_1 at mu=0.7", max_coeff_diff(&zeta_mu(1, m), &z1), 0.0, 1e-14),
        Check::close("ground density at 0, mu=0", ground, PI.sqrt().recip(), 1e-14),
        Check::close("even phase density at r=1, mu=0", even, (PI * E).recip(), 1e-14),
    ])
}

fn closed_forms() -> Result<Vec<Check>, Failure> {
    let m = mu(0.7);
    let x = m.value() + 0.5;
    let s1 = x * (digamma(x + 1.0)? - x.ln());
    let mut out = vec![
        Check::close("S_0 at mu=1.3", entropy_xi(0, mu(1.3)).value, 0.0, 0.0),
        Check::close("classical S(1)", entropy_classical(0).value, 0.0, 0.0),
        Check::close("monomial S(1) at mu=0.7", entropy_monomial_ground(0, m)?.value, 0.0, 0.0),
        Check::close("monomial S(t) at mu=0.7", entropy_monomial_ground(1, m)?.value, s1, 1e-13),
        Check::close("S(zeta_1) at mu=0", entropy_zeta1(MuParameter::ZERO).value, 2.0 - LN_2 - EULER_GAMMA, 1e-10),
        Check::close("E_4 at mu=0", energy_xi(4, MuParameter::ZERO).value, 5.0, 1e-12),
        Check::close("E_3 at mu=0", energy_xi(3, MuParameter::ZERO).value, 4.0, 1e-12),
    ];
    for r in table::rows(TableKind::Energy, &[MuParameter::ZERO], 4)? {
        out.push(Check::close(format!("table energy n={}", r.n), r.value, r.n as f64 + 1.0, 1e-12));
    }
    Ok(out)
}

fn oracles() -> Result<Vec<Check>, Failure> {
    let cfg = QuadratureConfig::default();
    let m = mu(0.7);
    let t = DensePolynomial::monomial(1, 1.0);
    let one = DensePolynomial::constant(1.0);
    let zeta1 = zeta_mu(1, MuParameter::ZERO);
    let mut out = vec![
        Check::close("||t||^2 ground mu=0.7", norm_sq_oracle(&t, Space::Ground, m, &cfg)?.value, m.value() + 0.5, 1e-9),
        Check::close("S(1) ground mu=0.7", entropy_oracle(&one, Space::Ground, m, &cfg)?.value, 0.0, 1e-9),
        Check::close("S(1) phase mu=0.7", entropy_oracle(&one, Space::Phase, m, &cfg)?.value, 0.0, 1e-9),
        Check::close("E(xi_0) mu=0", energy_oracle(&one, MuParameter::ZERO, &cfg)?.value, 1.0, 1e-9),
        Check::close(
            "S(zeta_1) ground oracle mu=0",
            entropy_oracle(&zeta1, Space::Ground, MuParameter::ZERO, &cfg)?.value,
            2.0 - LN_2 - EULER_GAMMA,
            1e-7,
        ),
    ];
    for v in [-0.25, 0.0, 1.0] {
        for p in [Parity::Even, Parity::Odd] {
            let measure = MeasureDensity::phase(p, mu(v));
            let want = match p {
                Parity::Even => 1.0,
                Parity::Odd => PI.sqrt() * (log_gamma(v + 1.0)? - log_gamma(v + 0.5)?).exp(),
            };
            out.push(Check::close(format!("mass {p:?} mu={v}"), mass_oracle(measure, &cfg)?.value, want, 1e-8));
        }
    }
    Ok(out)
}

fn transform_points() -> Result<Vec<Check>, Failure> {
    let cfg = QuadratureConfig::default();
    let mut out = Vec::new();
    for &z in mu_bargmann::transform::ComplexGrid::default().points() {
        let b = bargmann_transform(&DensePolynomial::constant(1.0), mu(0.3), z, &cfg)?;
        out.push(Check::close(format!("B(zeta_0)({z}) mu=0.3"), (b - 1.0).norm(), 0.0, 1e-8));
    }
    let b = bargmann_transform(&zeta_mu(1, mu(0.5)), mu(0.5), Complex64::new(1.0, 0.0), &cfg)?;
    out.push(Check::close("B(zeta_1)(1) mu=0.5", b.re, FRAC_1_SQRT_2, 1e-8));
    out.push(Check::close("B(zeta_1)(1) mu=0.5 imaginary part", b.im, 0.0, 1e-8));
    Ok(out)
}

fn verify_run() -> Result<Vec<Check>, Failure> {
    let cfg = QuadratureConfig::default();
    let mut out = Vec::new();
    for n in 0..=5 {
        for r in verify::rows_for(n, MuParameter::ZERO, (1e-7, 1e-7), &cfg)? {
            out.push(Check {
                name: format!("verify {} n={} mu=0", r.kind, r.n),
                value: r.oracle,
                expected: r.closed_form,
                abs_err: r.abs_err,
                band: 1e-7,
                pass: r.pass,
            });
        }
    }
    Ok(out)
}

fn sharpness_examples() -> Result<Vec<Check>, Failure> {
    let cases = [
        (ParityArg::Even, 1.2, 0.0, Verdict::Bounded),
        (ParityArg::Even, 1.0, 0.0, Verdict::Unbounded),
        (ParityArg::Odd, 0.5, 2.5, Verdict::Unbounded),
    ];
    Ok(cases
        .iter()
        .map(|&(p, c, m, want)| {
            let row = &sharpness::summaries(p, &[c], &[mu(m)], 10_000)[0];
            Check::holds(format!("sharpness {p:?} c={c} mu={m} is {}", want.as_str()), row.growth, row.verdict == want)
        })
        .collect())
}

fn limit_case(kind: LimitKind, ms: &[f64], ns: &[u64], index: u64, band: f64) -> Result<Vec<Check>, Failure> {
    let grid: Vec<MuParameter> = ms.iter().map(|&v| mu(v)).collect();
    Ok(limits::tables(kind, &grid, ns, index)?
        .into_iter()
        .map(|(_, t)| {
            let last = t.final_error().unwrap_or(f64::NAN);
            Check::holds(format!("limits {} final error within {band:e}", limits::name(kind)), last, t.passes(band))
        })
        .collect())
}

fn limit_examples() -> Result<Vec<Check>, Failure> {
    let mut out = limit_case(LimitKind::FactorialRoot, &[1.0], &[100, 1000, 10_000], 0, 3e-3)?;
    out.extend(limit_case(LimitKind::Cesaro, &[0.0], &[10_000], 0, 0.02)?);
    out.extend(limit_case(LimitKind::MuInfinity, &[1.0, 10.0, 100.0, 1000.0], &[], 2, 1e-3)?);
    Ok(out)
}

fn transform_check() -> Result<Vec<Check>, Failure> {
    let cfg = QuadratureConfig::default();
    let mut out = Vec::new();
    for m in [0.0, -0.4] {
        let n_max = if m < 0.0 { 4 } else { 6 };
        for r in transform_check::check(mu(m), n_max, (1e-7, 1e-6), &cfg)? {
            out.push(Check {
                name: format!("transform-check {} mu={m}", r.kind),
                value: r.value,
                expected: r.expected,
                abs_err: r.abs_err,
                band: r.band,
                pass: r.pass,
            });
        }
    }
    Ok(out)
}

/// Entropy never drops below `-ln(mass)·‖f‖²` for random polynomials.
fn jensen(seed: u64) -> Result<Vec<Check>, Failure> {
    let cfg = QuadratureConfig::default();
    let mut rng = StdRng::seed_from_u64(seed);
    let mut out = Vec::new();
    for (i, space) in [Space::Ground, Space::Phase].into_iter().cycle().take(16).enumerate() {
        let m = mu([-0.25, 0.0, 0.5, 1.0][i % 4]);
        let degree = rng.gen_range(0..=5usize);
        let f = DensePolynomial::new((0..=degree).map(|_| rng.gen_range(-1.0..1.0)).collect());
        if f.is_zero() {
            continue;
        }
        let s = entropy_oracle(&f, space, m, &cfg)?.value;
        let n = norm_sq_oracle(&f, space, m, &cfg)?.value;
        let bound = -space_mass(space, m).ln() * n;
        out.push(Check::holds(format!("jensen {space:?} mu={} sample {i}", m.value()), s - bound, s >= bound - 1e-7));
    }
    Ok(out)
}

pub fn run(args: &SelftestArgs) -> Result<(), Failure> {
    let seed = args.seed;
    let groups: Vec<Group> = vec![
        Box::new(special_functions),
        Box::new(mu_core),
        Box::new(closed_forms),
        Box::new(oracles),
        Box::new(transform_points),
        Box::new(verify_run),
        Box::new(sharpness_examples),
        Box::new(limit_examples),
        Box::new(transform_check),
        Box::new(move || jensen(seed)),
    ];
    let checks: Vec<Check> =
        groups.par_iter().map(|g| g()).collect::<Result<Vec<_>, _>>()?.into_iter().flatten().collect();
    emit(&checks, &args.output)?;
    for c in checks.iter().filter(|c| !c.pass) {
        eprintln!("fail: {} value={:e} expected={:e}", c.name, c.value, c.expected);
    }
    verdict(checks.iter().filter(|c| !c.pass).count(), checks.len(), "checks")
}
