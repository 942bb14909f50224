use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(
    name = "amoeba",
    version,
    about = "Amoeba dimension via the derived matroid rank r'"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// r'(E): the amoeba dimension, its coarsest optimal partition and a basis.
    Dim(InstanceArgs),
    /// r'(S) for a subset S of the ground set.
    Rank(RankArgs),
    /// Cross-check the algorithm against independent oracles.
    Verify(VerifyArgs),
    /// Run the built-in regression corpus.
    Selftest(SelftestArgs),
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum MatrixFormat {
    Text,
    Json,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Brute,
    Numeric,
    Axioms,
    All,
}

#[derive(Args, Debug)]
#[group(id = "source", required = true, multiple = false)]
pub struct Source {
    /// Built-in instance: nisse | trunc-sum C K | uniform D N | identity N | ones N.
    #[arg(long = "gen", value_name = "NAME ARGS", num_args = 1..=3, allow_negative_numbers = true)]
    pub generator: Option<Vec<String>>,
    /// Matrix file; one row per line, or {"rows": [...]} with --format json.
    #[arg(long, value_name = "FILE")]
    pub matrix: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct InstanceArgs {
    #[command(flatten)]
    pub source: Source,
    /// Input format of --matrix.
    #[arg(long, value_enum, default_value_t = MatrixFormat::Text)]
    pub format: MatrixFormat,
    /// Seed for generated stars and numeric sampling.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Args, Debug)]
pub struct RankArgs {
    #[command(flatten)]
    pub instance: InstanceArgs,
    /// Comma-separated 1-based elements, e.g. "1,3,5"; empty for the empty set.
    #[arg(long, value_name = "LIST")]
    pub subset: String,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub instance: InstanceArgs,
    #[arg(long, value_enum, default_value_t = Mode::All)]
    pub mode: Mode,
    /// Random points for the numeric Jacobian rank.
    #[arg(long, default_value_t = 5)]
    pub samples: usize,
}

#[derive(Args, Debug)]
pub struct SelftestArgs {
    /// Number of seeded random instances added to the named ones.
    #[arg(long, default_value_t = 50)]
    pub random: usize,
}
