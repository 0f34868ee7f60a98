use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(
    name = "kh",
    version,
    about = "Exact Gröbner bases, Milnor algebras and Hochschild cohomology of hypersurfaces"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Args, Debug, Clone)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Write the report here (atomically) instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    #[arg(long, short, global = true)]
    pub verbose: bool,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Args, Debug, Clone)]
pub struct RingArgs {
    /// Comma-separated variable names.
    #[arg(long)]
    pub vars: String,
    /// `lex`, `wlex`, optionally with a precedence such as `lex:z3>z1>z2`.
    #[arg(long, default_value = "lex")]
    pub order: String,
    /// Comma-separated positive weights, e.g. `4,3,2`.
    #[arg(long)]
    pub weights: Option<String>,
}

#[derive(Args, Debug, Clone)]
pub struct GensArgs {
    #[command(flatten)]
    pub ring: RingArgs,
    /// Generators separated by `;`.
    #[arg(long)]
    pub gens: String,
}

#[derive(Args, Debug, Clone)]
pub struct PolyArgs {
    #[command(flatten)]
    pub ring: RingArgs,
    #[arg(long)]
    pub poly: String,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Reduced Gröbner basis of an ideal.
    Gb(GensArgs),
    /// Normal form of a polynomial modulo the Gröbner basis of an ideal.
    Nf {
        #[command(flatten)]
        gens: GensArgs,
        #[arg(long)]
        poly: String,
    },
    /// Ideal membership.
    Member {
        #[command(flatten)]
        gens: GensArgs,
        #[arg(long)]
        poly: String,
    },
    /// Standard monomials of `k[z]/I`; infinite quotients need `--bound`.
    Quotient {
        #[command(flatten)]
        gens: GensArgs,
        /// Largest weighted degree listed.
        #[arg(long)]
        bound: Option<u64>,
    },
    /// Monomial basis of the Milnor algebra of `f`.
    Basis(PolyArgs),
    /// Milnor number of `f`.
    Milnor(PolyArgs),
    /// Weighted Hilbert function of `k[z]/I`.
    Hilbert {
        #[command(flatten)]
        gens: GensArgs,
        #[arg(long, default_value_t = 20)]
        bound: u64,
    },
    /// Hochschild cohomology of `k[z]/⟨f⟩` by weight.
    Cohomology {
        #[command(flatten)]
        poly: PolyArgs,
        #[arg(long, default_value_t = 5)]
        pmax: usize,
        /// Relative weight window: `auto` or an integer.
        #[arg(long, default_value = "auto")]
        bound: String,
        /// Label recorded in the report.
        #[arg(long)]
        case: Option<String>,
    },
    /// Recompute the encoded ADE catalog.
    VerifyCatalog {
        #[arg(long)]
        family: Option<String>,
        /// Family parameter; repeatable.
        #[arg(long)]
        param: Vec<u32>,
        /// Every family at its default parameters.
        #[arg(long, conflicts_with = "family")]
        all: bool,
        #[arg(long, default_value_t = 5)]
        pmax: usize,
        #[arg(long, default_value = "auto")]
        bound: String,
    },
}
