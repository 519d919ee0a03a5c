//! `typeb-cells`: command-line front end.
//!
//! Exit status is 0 when every requested check passes, 1 on a verification
//! mismatch and 2 on usage or resource errors.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "typeb-cells", version, about = "Domino tableaux and Kazhdan-Lusztig cells in type B")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Global {
    /// Directory for cached KL tables.
    #[arg(long, global = true, default_value = "./cache")]
    pub cache_dir: PathBuf,
    /// Neither read nor write the KL cache.
    #[arg(long, global = true)]
    pub no_cache: bool,
    /// Largest n for which a KL table is computed (at most 5).
    #[arg(long, global = true, default_value_t = 4)]
    pub max_n_kl: usize,
    /// Largest n for the asymptotic property checks.
    #[arg(long, global = true, default_value_t = 3)]
    pub max_n_asymptotic: usize,
    /// Include wall-clock times and cache status in reports.
    #[arg(long, global = true)]
    pub timings: bool,
    /// Write output here instead of stdout.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,
    #[arg(long, short, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Which {
    Left,
    Right,
}

/// Weights `a` (on t) and `b` (on the s_i), giving `s = b / a`.
#[derive(Args, Debug, Clone, Copy)]
pub struct Weights {
    #[arg(long, default_value_t = 1)]
    pub a: u32,
    #[arg(long, default_value_t = 1)]
    pub b: u32,
}

/// A tableau given as a JSON file, or as one side of `G_r(w)`.
#[derive(Args, Debug, Clone)]
pub struct TableauInput {
    /// Tableau JSON file (`-` for stdin).
    #[arg(long, conflicts_with = "word")]
    pub tableau: Option<PathBuf>,
    /// Signed permutation window, e.g. "-3 1 -2".
    #[arg(long, allow_hyphen_values = true)]
    pub word: Option<String>,
    #[arg(long, default_value_t = 0)]
    pub rank: usize,
    /// Which tableau of the pair to use.
    #[arg(long, value_enum, default_value_t = Which::Right)]
    pub side: Which,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Rank and 2-core of a partition.
    Rank {
        /// Parts, e.g. `4 3 3 1` or `4,3,3,1`.
        #[arg(required = true, num_args = 1..)]
        parts: Vec<String>,
    },
    /// The generalized Robinson-Schensted map G_r.
    Rs {
        #[arg(long, default_value_t = 0)]
        rank: usize,
        #[arg(long, allow_hyphen_values = true)]
        word: String,
        /// Dump every insertion step as JSON.
        #[arg(long)]
        trace: bool,
    },
    /// Enumerate domino tableaux of rank r with n dominoes, or of one shape.
    Tableaux {
        #[arg(long, default_value_t = 0)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        rank: usize,
        #[arg(long)]
        shape: Option<String>,
        /// Only print the count.
        #[arg(long)]
        count: bool,
    },
    /// Cycles of a tableau.
    Cycles {
        #[command(flatten)]
        input: TableauInput,
    },
    /// Move a tableau through cycles.
    Mt {
        #[command(flatten)]
        input: TableauInput,
        /// Move through the cycle containing each label.
        #[arg(long, value_delimiter = ',')]
        labels: Vec<u32>,
        /// Print every tableau reachable by moving through open cycles.
        #[arg(long, conflicts_with = "labels")]
        orbit: bool,
    },
    /// Symbol, bipartition and sign partner of a partition.
    Symbols {
        #[arg(required = true, num_args = 1..)]
        parts: Vec<String>,
        #[command(flatten)]
        weights: Weights,
    },
    /// Combinatorial cells of W_n.
    CellsComb {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        weights: Weights,
        /// Use this rank instead of the one given by the weights.
        #[arg(long)]
        rank: Option<usize>,
        /// Force the cell kind instead of the one given by the weights.
        #[arg(long, value_enum)]
        kind: Option<Kind>,
    },
    /// Kazhdan-Lusztig cells of W_n.
    #[command(alias = "cells")]
    CellsKl {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        weights: Weights,
        #[arg(long, default_value = "left")]
        side: String,
    },
    /// Character table of W_n.
    Characters {
        #[arg(long)]
        n: usize,
    },
    /// Compare Hecke algebra data with the combinatorial predictions.
    Verify {
        #[arg(value_enum)]
        check: VerifyWhat,
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        weights: Weights,
    },
    /// Sweep the standard weights for each n and print the worked examples.
    Report {
        /// Values of n, e.g. `1,2,3`.
        #[arg(long, value_delimiter = ',', default_value = "1,2,3")]
        n: Vec<usize>,
        /// Weights as `a:b` pairs; defaults to the standard sweep.
        #[arg(long, value_delimiter = ',')]
        weights: Vec<String>,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    Irreducible,
    Reducible,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum VerifyWhat {
    Conjecture,
    Modules,
    Hom,
    Properties,
    All,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {:#}", e);
            ExitCode::from(2)
        }
    }
}
