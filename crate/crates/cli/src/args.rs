use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use mullineux::engine::DEFAULT_DEPTH_LIMIT;
use mullineux::level2::{Bicharge, Bipartition};
use mullineux::{Modulus, Partition};

use crate::wire;

#[derive(Debug, Parser)]
#[command(
    name = "mullineux",
    version,
    about = "Mullineux involution, crystal isomorphisms and conjecture sweeps"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute m_e(λ).
    Mull(MullArgs),
    /// Check the inclusion conjecture on Ψ towers for all partitions up to a rank.
    VerifyConjecture(ConjectureArgs),
    /// Compare the recursive algorithm with Kleshchev's on all e-regular partitions.
    CrossValidate(CrossArgs),
    /// Apply ψ (or ψ̃ with --to-dominant) to a bipartition and show the β-set symbols.
    Psi(PsiArgs),
    /// Export the level-1 crystal graph on e-regular partitions.
    CrystalExport(ExportArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Kleshchev,
    Recursive,
    Both,
}

#[derive(Debug, Args)]
pub struct MullArgs {
    #[arg(long, value_enum, default_value_t = Method::Recursive)]
    pub method: Method,
    #[arg(long, value_parser = wire::parse_modulus)]
    pub e: Modulus,
    /// Parts separated by commas; "", "-" or "∅" for the empty partition.
    #[arg(long, value_parser = wire::parse_partition, allow_hyphen_values = true)]
    pub lambda: Partition,
    /// Include the full recursion trace.
    #[arg(long)]
    pub trace: bool,
    #[arg(long, default_value_t = DEFAULT_DEPTH_LIMIT)]
    pub depth_limit: usize,
    /// Use Kleshchev's algorithm when the depth limit is reached.
    #[arg(long)]
    pub fallback: bool,
}

#[derive(Debug, Args)]
pub struct SweepOptions {
    /// Moduli to sweep, comma separated.
    #[arg(long, value_parser = wire::parse_modulus, value_delimiter = ',', default_value = "2")]
    pub e: Vec<Modulus>,
    #[arg(long, default_value_t = 12)]
    pub max_n: usize,
    /// Worker threads; 0 uses every core.
    #[arg(long, env = "MULLINEUX_JOBS", default_value_t = 0)]
    pub jobs: usize,
    /// Add wall-clock timings to the report (makes it non-deterministic).
    #[arg(long)]
    pub timings: bool,
    /// Also write the per-bucket summary as CSV to this file.
    #[arg(long, value_name = "PATH")]
    pub csv: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ConjectureArgs {
    #[command(flatten)]
    pub sweep: SweepOptions,
    #[arg(long, default_value_t = 9)]
    pub max_k: usize,
    /// Only β-sets of e-regular partitions.
    #[arg(long)]
    pub regular_only: bool,
}

#[derive(Debug, Args)]
pub struct CrossArgs {
    #[command(flatten)]
    pub sweep: SweepOptions,
    #[arg(long, default_value_t = DEFAULT_DEPTH_LIMIT)]
    pub depth_limit: usize,
    #[arg(long)]
    pub fallback: bool,
}

#[derive(Debug, Args)]
pub struct PsiArgs {
    #[arg(long, value_parser = wire::parse_modulus)]
    pub e: Modulus,
    /// Bicharge "s1,s2" with s1 ≤ s2. With --inverse this is the charge of
    /// the preimage; the input lives at (s1, s2 + e).
    #[arg(long, value_parser = wire::parse_charges, allow_hyphen_values = true)]
    pub charges: Bicharge,
    /// Two partitions joined by "|", e.g. "3,1|2".
    #[arg(long, value_parser = wire::parse_bipartition, allow_hyphen_values = true)]
    pub bipartition: Bipartition,
    #[arg(long)]
    pub inverse: bool,
    /// Compose ψ steps until the bicharge is stable (ψ̃ and its inverse).
    #[arg(long)]
    pub to_dominant: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GraphFormat {
    Dot,
    Json,
}

#[derive(Debug, Args)]
pub struct ExportArgs {
    #[arg(long, value_parser = wire::parse_modulus)]
    pub e: Modulus,
    #[arg(long)]
    pub max_n: usize,
    #[arg(long, value_enum, default_value_t = GraphFormat::Json)]
    pub format: GraphFormat,
}
