use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Csv,
    Text,
}

#[derive(Debug, Parser)]
#[command(name = "szeged", version, about = "Exact Szeged-type indices of trees and unicyclic graphs")]
pub struct Cli {
    /// Report format
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,

    /// Write the report here instead of standard output
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,

    /// Worker threads for search and verification (default: all cores)
    #[arg(long, env = "SZEGED_WORKERS", global = true)]
    pub workers: Option<usize>,

    /// Seed for randomized checks
    #[arg(long, default_value_t = 1, global = true)]
    pub seed: u64,

    #[command(subcommand)]
    pub command: Command,
}

/// Exactly one graph source.
#[derive(Debug, Clone, Args)]
#[group(multiple = false)]
pub struct Input {
    /// Graph in graph6 format
    #[arg(long)]
    pub graph6: Option<String>,

    /// Edge-list file: "n m" then m lines "u v" ("-" reads standard input)
    #[arg(long)]
    pub edges: Option<PathBuf>,

    /// Family description, e.g. "broom k1=2 k2=3 i=1"
    #[arg(long)]
    pub family: Option<String>,
}

impl Input {
    pub fn is_given(&self) -> bool {
        self.graph6.is_some() || self.edges.is_some() || self.family.is_some()
    }
}

/// Refuses exhaustive enumeration above this order unless raised.
#[derive(Debug, Clone, Copy, Args)]
pub struct Limit {
    /// Largest order enumerated exhaustively
    #[arg(long, default_value_t = 20)]
    pub limit_n: usize,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// All seven indices of one graph
    Index {
        #[command(flatten)]
        input: Input,
    },
    /// Build a named family member
    Family {
        /// e.g. "extremal n=16 d=14" or "g4 variant=32 l1=0 l2=4 a=0 b=2 i=4"
        spec: String,
    },
    /// Apply a rewrite to a unicyclic graph, or compare a named pair, and
    /// check the predicted change
    Transform {
        #[command(flatten)]
        input: Input,
        /// Rewrite description, e.g. "shift_pendants at=1 k=1"
        #[arg(long, conflicts_with = "pair")]
        rewrite: Option<String>,
        /// Pair check description, e.g. "second_diameter n=17"
        #[arg(long)]
        pair: Option<String>,
        /// Index to recompute (W, W_e_min, W_e_line, Sz, Sz_star, Sz_e, Sz_e_star)
        #[arg(long, default_value = "Sz_e_star")]
        index: String,
    },
    /// Exhaustive minimisation over unicyclic graphs of order n and diameter d
    Search {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
        #[arg(long, default_value = "Sz_e_star")]
        index: String,
        /// Only graphs with this girth
        #[arg(long)]
        girth: Option<usize>,
        /// JSON-lines file of finished blocks, reused on restart
        #[arg(long)]
        checkpoint: Option<PathBuf>,
        #[command(flatten)]
        limit: Limit,
    },
    /// Exhaustive and randomized verification runs
    Verify {
        #[command(flatten)]
        mode: VerifyMode,
        /// Order for --theorem1
        #[arg(long, required_if_eq("theorem1", "true"))]
        n: Option<usize>,
        /// Allow --theorem1 below n = 16, reporting rows as findings
        #[arg(long)]
        below_threshold: bool,
        /// Smallest order for --identities
        #[arg(long, default_value_t = 1)]
        min_n: usize,
        /// Largest order for --identities
        #[arg(long, default_value_t = 10)]
        max_n: usize,
        /// Identity suites to run (default: all)
        #[arg(long = "suite")]
        suites: Vec<String>,
        /// Random draws per check for --formulas
        #[arg(long, default_value_t = 500)]
        draws: usize,
        /// Checks to run for --formulas (default: all)
        #[arg(long = "check")]
        checks: Vec<String>,
        /// JSON-lines file of finished blocks for --theorem1, reused on restart
        #[arg(long)]
        checkpoint: Option<PathBuf>,
        #[command(flatten)]
        limit: Limit,
    },
    /// Every decomposition route of the edge Szeged index, for one graph or
    /// every unicyclic graph of order n
    Identities {
        #[command(flatten)]
        input: Input,
        #[arg(long, conflicts_with_all = ["graph6", "edges", "family"])]
        n: Option<usize>,
        #[command(flatten)]
        limit: Limit,
    },
}

#[derive(Debug, Clone, Copy, Args)]
#[group(required = true, multiple = false)]
pub struct VerifyMode {
    /// Exhaustive search against the predicted extremal graphs
    #[arg(long)]
    pub theorem1: bool,
    /// Exhaustive identity suites over trees and unicyclic graphs
    #[arg(long)]
    pub identities: bool,
    /// Seeded random draws of every rewrite and pair check
    #[arg(long)]
    pub formulas: bool,
}
