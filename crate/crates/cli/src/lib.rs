//! The `sqfree` command line.

mod commands;
pub mod input;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

pub use commands::{run, Outcome};

/// Exit code for input, parse and domain errors.
pub const EXIT_ERROR: i32 = 3;
/// Exit code when a resource budget refuses the computation.
pub const EXIT_BUDGET: i32 = 4;
/// Exit code when a cross-check contradicts a proved statement.
pub const EXIT_DEFECT: i32 = 5;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(name = "sqfree", version, about = "Symbolic powers, packing and homology of square-free monomial ideals")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalArgs {
    /// Field characteristics for homology, comma separated (0 or primes).
    #[arg(long, global = true, env = "SQFREE_CHARS", value_delimiter = ',', default_value = "0")]
    pub chars: Vec<u64>,
    /// Resource budget: weight vectors for MFMC sweeps, minors for packing
    /// checks, generators per symbolic power for limits.
    #[arg(long, global = true, env = "SQFREE_BUDGET")]
    pub budget: Option<u128>,
    /// Worker threads (default: available parallelism).
    #[arg(long, global = true, env = "SQFREE_WORKERS")]
    pub workers: Option<usize>,
    #[arg(long, global = true, env = "SQFREE_FORMAT", value_enum, default_value = "table")]
    pub format: Format,
    /// Seed for corpus generation.
    #[arg(long, global = true, env = "SQFREE_SEED", default_value_t = 0)]
    pub seed: u64,
    /// Also check I^n = I^(n) directly up to this n.
    #[arg(long, global = true, env = "SQFREE_EXTENDED")]
    pub extended: Option<u32>,
    /// Write the full report as JSON to this path.
    #[arg(long, global = true, env = "SQFREE_DUMP")]
    pub dump: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct InputArgs {
    /// Built-in ideal: c3, c4, c5, c7, path3, path4, k23.
    #[arg(long)]
    pub fixture: Option<String>,
    /// Ideal or clutter file (JSON or a list like `x1*x2, x2*x3`).
    pub file: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Minimal generators of the symbolic power I^(n).
    Symbolic {
        #[command(flatten)]
        input: InputArgs,
        #[arg(short, long, default_value_t = 1)]
        n: u32,
    },
    /// Decide I^n = I^(n) for all n.
    Equality {
        #[command(flatten)]
        input: InputArgs,
    },
    /// König and packed properties with cover and matching numbers.
    Packed {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Max-flow-min-cut sweep, cross-checked against equality of powers.
    Mfmc {
        #[command(flatten)]
        input: InputArgs,
        /// Skip weight vectors that are not orbit minima under automorphisms.
        #[arg(long)]
        symmetry: bool,
    },
    /// Regularity, depth and a-invariants of R/I^(n) for n <= n_max.
    Limits {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, default_value_t = 4)]
        n_max: u32,
    },
    /// Betti table and homological summary of R/I.
    Homology {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Random square-free ideals through every cross-check.
    Corpus {
        #[arg(long, default_value_t = 4)]
        vars: usize,
        #[arg(long, default_value_t = 4)]
        max_gens: usize,
        #[arg(long, default_value_t = 100)]
        count: usize,
        /// Named fixtures to put in front of the random ideals.
        #[arg(long)]
        plant: Vec<String>,
    },
}
