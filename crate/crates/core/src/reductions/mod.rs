//! Source games and their reductions into the toggle rulesets.
//!
//! | source              | target                      | construction            |
//! |---------------------|-----------------------------|-------------------------|
//! | Snort               | by-player-anywhere-same     | two 2-clauses per edge  |
//! | Proper 2-Coloring   | either-anywhere-same        | xor gadget per edge     |
//! | QBF in CNF          | either-local-same           | gamma clauses, odd `m`  |
//! | Positive CNF        | by-player-anywhere-different| identity                |
//! | Toy Positive CNF    | either-anywhere-different   | identity                |
//!
//! Each source game also has a direct [`AbstractGame`](crate::solver::AbstractGame)
//! implementation so the [`verify`] module can solve both sides.

mod coloring;
mod graph;
mod positive;
mod qbf;
mod snort;
pub mod verify;

use thiserror::Error;

use crate::engine::PositionError;
use crate::formula::Formula;

pub use coloring::{p2c_game, p2c_to_position, ColoringGame, ColoringState};
pub use graph::{Color, Graph, GraphError};
pub use positive::{
    positive_cnf_game, positive_cnf_to_bpad, toy_positive_equivalence_check, toy_positive_position,
    PositiveCnfGame, PositiveCnfInstance, PositiveCnfState, ToyEquivalenceReport, MAX_CLAUSE_WIDTH,
};
pub use qbf::{gamma_clause, qbfcnf_to_either_local_same, reduced_var_count, Cnf, Literal};
pub use snort::{player_color, snort_game, snort_to_position, SnortGame, SnortState};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ReductionError {
    #[error("invalid Snort input: vertices {u} and {v} are adjacent with opposite colors")]
    InvalidSnort { u: usize, v: usize },
    #[error("Proper 2-Coloring starts uncolored; vertex {vertex} is painted")]
    PreColored { vertex: usize },
    #[error("not in CNF: {0}")]
    NotCnf(String),
    #[error("positive CNF may not contain negations")]
    NegationFound,
    #[error("clause {clause} has {width} literals; expected 1 to 3")]
    ClauseWidth { clause: usize, width: usize },
    #[error("variable x{var} out of range for {n} variables")]
    VariableOutOfRange { var: usize, n: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Position(#[from] PositionError),
}

/// Conjunction that leaves a single conjunct unwrapped and turns an empty
/// one into `true`.
pub(crate) fn conjoin(mut parts: Vec<Formula>) -> Formula {
    match parts.len() {
        0 => Formula::Const(true),
        1 => parts.pop().unwrap(),
        _ => Formula::And(parts),
    }
}
