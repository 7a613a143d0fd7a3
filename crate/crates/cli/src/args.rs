use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use giantval_core::Natural;

#[derive(Debug, Parser)]
#[command(
    name = "giantval",
    version,
    about = "Exact p-adic valuations of factorial-family numbers"
)]
pub struct Cli {
    /// Worker threads for audit and oracle scans [default: all cores]
    #[arg(long, global = true, env = "GIANTVAL_THREADS")]
    pub threads: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the exact valuation ν_p of one number
    Val(ValArgs),
    /// Print the lower and upper bounds on a valuation next to its exact value
    Bounds(BoundsArgs),
    /// Evaluate registered inequalities on a grid and report violations
    Audit(AuditArgs),
    /// Last digits of the Berezin number n$ = n! ↑↑ n!
    BerezinDigits(BerezinArgs),
    /// Compare the valuations against brute-force big-integer construction
    Oracle(OracleArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Factorial,
    DoubleFactorial,
    Hyperfactorial,
    DoubleHyperfactorial,
    Superfactorial,
    F1,
    F2,
    F3,
    Ultrafactorial,
    Catalan,
    Stirling,
    Subfactorial,
    Narayana,
    Berezin,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Plain,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum ReportFormat {
    #[default]
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Variant {
    #[default]
    Composed,
    Printed,
}

fn natural(s: &str) -> Result<Natural, String> {
    s.parse::<Natural>()
        .map_err(|_| format!("`{s}` is not a nonnegative integer"))
}

#[derive(Debug, Args)]
pub struct ValArgs {
    #[arg(long, value_enum)]
    pub family: Family,
    #[arg(short, value_parser = natural)]
    pub n: Natural,
    /// Second index (Stirling numbers)
    #[arg(short)]
    pub k: Option<u64>,
    #[arg(short)]
    pub p: u64,
    /// Also print the valuation reduced mod M
    #[arg(long = "mod", value_name = "M")]
    pub modulus: Option<u64>,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct BoundsArgs {
    #[arg(long, value_enum)]
    pub family: Family,
    #[arg(short, value_parser = natural)]
    pub n: Natural,
    #[arg(short)]
    pub p: u64,
    #[arg(long, value_enum, default_value_t)]
    pub variant: Variant,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct AuditArgs {
    /// `all`, or a comma-separated list of case ids and groups
    #[arg(long, default_value = "all")]
    pub cases: String,
    #[arg(long, default_value_t = 100)]
    pub n_max: u64,
    #[arg(long, default_value = "2,3,5,7,11,13,17,19,23,29")]
    pub primes: String,
    /// Write the report here instead of stdout
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t)]
    pub format: ReportFormat,
}

#[derive(Debug, Args)]
pub struct BerezinArgs {
    #[arg(short)]
    pub n: u64,
    #[arg(long, default_value_t = 10)]
    pub base: u64,
    #[arg(long, default_value_t = 1)]
    pub digits: u32,
}

#[derive(Debug, Args)]
pub struct OracleArgs {
    /// `all`, or a comma-separated list of oracle families
    #[arg(long, default_value = "all")]
    pub families: String,
    #[arg(long, default_value_t = 0)]
    pub n_min: u64,
    /// Upper end of the grid [default: each family's cap]
    #[arg(long)]
    pub n_max: Option<u64>,
    #[arg(long, default_value = "2,3,5,7,11,13")]
    pub primes: String,
}
