use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use mu_bargmann::mu_core::MuParameter;
use mu_bargmann::quadrature::QuadratureConfig;

#[derive(Debug, Parser)]
#[command(
    name = "mu-bargmann",
    version,
    about = "Entropies, energies and transform checks for the deformed Segal-Bargmann space"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compare closed-form entropies and energies with quadrature.
    Verify(VerifyArgs),
    /// Tabulate a closed-form sequence with its first differences.
    Table(TableArgs),
    /// Classify the E - cS gap sequences as bounded or unbounded.
    Sharpness(SharpnessArgs),
    /// Convergence tables for the limits of the entropy sequences.
    Limits(LimitsArgs),
    /// Check the transform on the normalised Hermite basis.
    TransformCheck(TransformCheckArgs),
    /// Run the built-in smoke suite.
    Selftest(SelftestArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Args)]
pub struct OutputArgs {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    /// Write to this file instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct QuadratureArgs {
    #[arg(long, default_value_t = 1e-10)]
    pub rel_tol: f64,
    #[arg(long, default_value_t = 1e-14)]
    pub abs_tol: f64,
}

impl QuadratureArgs {
    pub fn config(&self) -> QuadratureConfig {
        QuadratureConfig { rel_tol: self.rel_tol, abs_tol: self.abs_tol, ..QuadratureConfig::default() }
    }
}

pub fn parse_mu(s: &str) -> Result<MuParameter, String> {
    let v: f64 = s.trim().parse().map_err(|_| format!("'{s}' is not a number"))?;
    MuParameter::new(v).map_err(|e| e.to_string())
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    /// Comma-separated deformation parameters.
    #[arg(long, value_delimiter = ',', value_parser = parse_mu, allow_hyphen_values = true, default_value = "0")]
    pub mu: Vec<MuParameter>,
    #[arg(long, default_value_t = 20)]
    pub n_max: u64,
    /// Absolute band of the pass test.
    #[arg(long, default_value_t = 1e-7)]
    pub abs_band: f64,
    /// Relative band of the pass test.
    #[arg(long, default_value_t = 1e-7)]
    pub rel_band: f64,
    #[command(flatten)]
    pub quadrature: QuadratureArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableKind {
    Entropy,
    Energy,
    MonomialEntropy,
}

#[derive(Debug, Clone, Args)]
pub struct TableArgs {
    #[arg(value_enum)]
    pub kind: TableKind,
    #[arg(long, value_delimiter = ',', value_parser = parse_mu, allow_hyphen_values = true, default_value = "0")]
    pub mu: Vec<MuParameter>,
    #[arg(long, default_value_t = 10)]
    pub n_max: u64,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ParityArg {
    Even,
    Odd,
    Both,
}

#[derive(Debug, Clone, Args)]
pub struct SharpnessArgs {
    #[arg(long, value_enum, default_value_t = ParityArg::Both)]
    pub parity: ParityArg,
    /// Comma-separated entropy coefficients.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, default_value = "0.5,0.95,1,1.05,1.2,2")]
    pub c: Vec<f64>,
    #[arg(long, value_delimiter = ',', value_parser = parse_mu, allow_hyphen_values = true, default_value = "0")]
    pub mu: Vec<MuParameter>,
    /// Last half-index `k` of the elements ξ_{2k} or ξ_{2k+1}.
    #[arg(long, default_value_t = 10_000)]
    pub n_max: u64,
    /// Emit every term of each sequence instead of the summaries.
    #[arg(long)]
    pub sequence: bool,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum LimitKind {
    /// S_{n+1} - S_n → 1.
    Diff1,
    /// S_{2n+2} - S_{2n} → 2.
    Diff2,
    /// S_n / n → 1.
    Cesaro,
    /// γ_μ(n)^{1/n} / n → 1/e.
    #[value(name = "lemma32")]
    FactorialRoot,
    /// μ → ∞ at a fixed basis index.
    MuInfinity,
}

#[derive(Debug, Clone, Args)]
pub struct LimitsArgs {
    #[arg(value_enum)]
    pub which: LimitKind,
    /// Parameters; for `mu-infinity` the increasing grid.
    #[arg(long, value_delimiter = ',', value_parser = parse_mu, allow_hyphen_values = true)]
    pub mu: Option<Vec<MuParameter>>,
    /// Comma-separated indices.
    #[arg(long, value_delimiter = ',')]
    pub n: Option<Vec<u64>>,
    /// Basis index for `mu-infinity`.
    #[arg(long, default_value_t = 2)]
    pub index: u64,
    /// Band for the final error; defaults depend on the limit.
    #[arg(long)]
    pub band: Option<f64>,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct TransformCheckArgs {
    #[arg(long, value_delimiter = ',', value_parser = parse_mu, allow_hyphen_values = true, default_value = "0")]
    pub mu: Vec<MuParameter>,
    #[arg(long, default_value_t = 6)]
    pub n_max: u64,
    /// Band for the largest basis deviation.
    #[arg(long, default_value_t = 1e-7)]
    pub band: f64,
    /// Band for the entropy gap of the first basis element.
    #[arg(long, default_value_t = 1e-6)]
    pub gap_band: f64,
    #[command(flatten)]
    pub quadrature: QuadratureArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct SelftestArgs {
    /// Seed for the randomized checks.
    #[arg(long, default_value_t = 2024)]
    pub seed: u64,
    #[command(flatten)]
    pub output: OutputArgs,
}
