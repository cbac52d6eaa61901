//! Command-line front end.

mod commands;
pub mod exit_codes;
mod play;

use std::io::{BufRead, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::engine::RulesetConfig;
use crate::solver::DEFAULT_NODE_BUDGET;

pub use commands::CliError;

#[derive(Debug, Parser)]
#[command(
    name = "qbf-games",
    version,
    about = "Solve, replay and reduce QBF-variant games"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ReduceKind {
    /// Snort graph to by-player-anywhere-same
    Snort,
    /// Proper 2-Coloring graph to either-anywhere-same
    P2c,
    /// CNF formula file to either-local-same
    Qbf,
    /// Positive CNF formula file to by-player-anywhere-different
    Poscnf,
    /// Positive CNF formula file to either-anywhere-different
    ToyPoscnf,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GenKind {
    /// Random CNF formula file
    Formula,
    /// Random negation-free CNF formula file
    Positive,
    /// Random graph file
    Graph,
    /// Initial position of a random CNF under --ruleset
    Position,
}

#[derive(Debug, Clone, clap::Args)]
pub struct SolverArgs {
    /// Node budget before giving up (exit 3)
    #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
    pub budget: u64,
    /// Solver worker threads
    #[arg(long, default_value_t = 1)]
    pub threads: usize,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Determine the optimal-play winner of a position
    Solve {
        /// Position file, or formula file together with --ruleset
        file: PathBuf,
        /// Ruleset such as either-local-same; overrides the file's
        #[arg(long)]
        ruleset: Option<RulesetConfig>,
        /// First mover (1 or 2) of the loaded position
        #[arg(long)]
        mover: Option<u8>,
        /// Use the unmemoized recursive solver
        #[arg(long, conflicts_with = "simulate")]
        naive: bool,
        /// Play out a by-player-local position move by move
        #[arg(long)]
        simulate: bool,
        /// Print the principal variation
        #[arg(long)]
        pv: bool,
        #[arg(long)]
        json: bool,
        #[command(flatten)]
        solver: SolverArgs,
    },
    /// Replay a trace file move by move
    Replay {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Build a position file from a source-game instance
    Reduce {
        #[arg(value_enum)]
        kind: ReduceKind,
        input: PathBuf,
        /// Output path (stdout when omitted)
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// First mover (1 or 2); for Snort, 1 is Blue
        #[arg(long)]
        mover: Option<u8>,
    },
    /// Dual-solve source games and their reductions; exit 5 on any disagreement
    Verify {
        #[arg(value_enum)]
        kind: ReduceKind,
        /// Graphs: enumerate every edge subset up to this many vertices
        #[arg(long, default_value_t = 4)]
        max_vertices: usize,
        /// Graphs: number of extra random graphs
        #[arg(long, default_value_t = 0)]
        random: usize,
        /// Graphs: vertex count of the random graphs
        #[arg(long, default_value_t = 5)]
        random_vertices: usize,
        /// Graphs: edge probability of the random graphs
        #[arg(long, default_value_t = 0.5)]
        edge_prob: f64,
        /// CNF kinds: number of random instances
        #[arg(long, default_value_t = 200)]
        count: usize,
        /// CNF kinds: largest variable count
        #[arg(long, default_value_t = 6)]
        max_vars: usize,
        /// CNF kinds: largest clause count
        #[arg(long, default_value_t = 8)]
        max_clauses: usize,
        /// CNF kinds: literals per clause
        #[arg(long, default_value_t = 3)]
        width: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        json: bool,
        #[command(flatten)]
        solver: SolverArgs,
    },
    /// Generate a random instance file
    Gen {
        #[arg(value_enum)]
        kind: GenKind,
        /// Variables (or vertices for graphs)
        #[arg(short = 'n', long, default_value_t = 7)]
        vars: usize,
        /// Clauses
        #[arg(short = 'c', long, default_value_t = 4)]
        clauses: usize,
        /// Literals per clause
        #[arg(short = 'w', long, default_value_t = 3)]
        width: usize,
        /// Edge probability for graphs
        #[arg(short = 'p', long, default_value_t = 0.5)]
        edge_prob: f64,
        /// Ruleset for generated positions
        #[arg(long, default_value = "either-local-different")]
        ruleset: RulesetConfig,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Play against the solver in the terminal
    Play {
        file: PathBuf,
        #[arg(long)]
        ruleset: Option<RulesetConfig>,
        /// Which player the human controls (1 or 2)
        #[arg(long, default_value_t = 1)]
        human: u8,
        #[command(flatten)]
        solver: SolverArgs,
    },
}

/// Runs a parsed command, writing normal output to `out` and reading
/// interactive input from `input`. Returns the process exit code.
pub fn run(cli: Cli, input: &mut dyn BufRead, out: &mut dyn Write) -> i32 {
    match commands::execute(cli.command, input, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = out.flush();
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_subcommands() {
        let cli = Cli::try_parse_from([
            "qbf-games",
            "solve",
            "f.pos",
            "--ruleset",
            "by-player-local-same",
            "--naive",
        ])
        .unwrap();
        match cli.command {
            Command::Solve { ruleset, naive, .. } => {
                assert_eq!(ruleset.unwrap().to_string(), "by-player-local-same");
                assert!(naive);
            }
            other => panic!("{other:?}"),
        }
        assert!(Cli::try_parse_from(["qbf-games", "verify", "toy-poscnf"]).is_ok());
        assert!(Cli::try_parse_from(["qbf-games", "solve", "f", "--naive", "--simulate"]).is_err());
        assert!(Cli::try_parse_from(["qbf-games", "gen", "graph", "--ruleset", "nope"]).is_err());
    }
}
