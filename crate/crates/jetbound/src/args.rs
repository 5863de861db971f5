use clap::{Args, Parser, Subcommand, ValueEnum};
use jetbound_core::GeometryKind;

#[derive(Debug, Parser)]
#[command(
    name = "jetbound",
    version,
    about = "Intersection numbers on jet towers and effective degree bounds"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Degree threshold for one (dim, order, weights).
    Bound(RunArgs),
    /// The Morse polynomial P(d) and the integrated class behind it.
    Poly(RunArgs),
    /// Thresholds for every 2 <= dim <= order <= max-order with default weights.
    Table(TableArgs),
    /// Search admissible weights for the smallest threshold.
    Sweep(SweepArgs),
    /// Run the built-in identity checks.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GeometryArg {
    Log,
    Compact,
}

impl From<GeometryArg> for GeometryKind {
    fn from(g: GeometryArg) -> Self {
        match g {
            GeometryArg::Log => GeometryKind::LogarithmicPair,
            GeometryArg::Compact => GeometryKind::CompactHypersurface,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, Args)]
pub struct Common {
    #[arg(long, value_enum, default_value = "log")]
    pub geometry: GeometryArg,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
    /// Worker threads (default: all cores).
    #[arg(long)]
    pub threads: Option<usize>,
    /// Neither read nor write the result cache.
    #[arg(long)]
    pub no_cache: bool,
}

#[derive(Debug, Clone, Args)]
pub struct RunArgs {
    #[arg(long)]
    pub dim: u32,
    #[arg(long)]
    pub order: u32,
    /// Comma-separated a_1,..,a_k; default (2*3^(k-2), .., 6, 2, 1).
    #[arg(long, value_delimiter = ',')]
    pub weights: Option<Vec<u64>>,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Clone, Args)]
pub struct TableArgs {
    #[arg(long, default_value_t = 5)]
    pub max_dim: u32,
    #[arg(long, default_value_t = 5)]
    pub max_order: u32,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Clone, Args)]
pub struct SweepArgs {
    #[arg(long)]
    pub dim: u32,
    #[arg(long)]
    pub order: u32,
    /// Number of candidate weight vectors, taken in order of |a| then lexicographically.
    #[arg(long, default_value_t = 64)]
    pub budget: usize,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
    #[arg(long)]
    pub threads: Option<usize>,
}
