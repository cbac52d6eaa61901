//! Exact winner determination.
//!
//! [`solve`] runs memoized backward induction over any ruleset,
//! [`solve_naive`] is the same recursion without a memo table and serves as
//! an independent cross-check, and [`simulate_local_by_player`] plays out
//! the two rulesets where every position has at most one legal move.

mod compact;
mod naive;
mod search;
mod simulate;

use serde::Serialize;
use thiserror::Error;

use crate::engine::{Move, Player, Position, RulesetConfig};

pub use naive::{solve_naive, DEFAULT_NAIVE_BOUND};
pub use search::{solve_abstract, solve_abstract_parallel, AbstractGame};
pub use simulate::simulate_local_by_player;

pub const DEFAULT_NODE_BUDGET: u64 = 100_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("node budget of {budget} exceeded")]
    BudgetExceeded { budget: u64 },
    #[error("{n} variables exceed the naive solver bound of {bound}")]
    BoundExceeded { n: usize, bound: usize },
    #[error("simulation needs a by-player-local ruleset, not {0}")]
    WrongConfig(RulesetConfig),
    #[error("thread pool: {0}")]
    ThreadPool(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolverOptions {
    /// Positions expanded before giving up.
    pub node_budget: u64,
    /// Worker threads; 1 keeps the search on the calling thread.
    pub threads: usize,
}

impl Default for SolverOptions {
    fn default() -> Self {
        SolverOptions {
            node_budget: DEFAULT_NODE_BUDGET,
            threads: 1,
        }
    }
}

/// Optimal-play result.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Outcome<M = Move> {
    pub winner: Player,
    /// A legal line ending in a terminal position won by `winner`.
    pub principal_variation: Option<Vec<M>>,
    /// Positions expanded (memo hits excluded).
    pub nodes: u64,
}

/// Memo key for formula positions: the packed assignment. Formula, ruleset
/// and first mover are fixed for a solve session and the mover follows from
/// parity, so nothing else is needed.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MemoKey(Box<[u64]>);

/// A [`Position`] viewed as an [`AbstractGame`] rooted at that position.
#[derive(Clone, Debug)]
pub struct PositionGame {
    root: Position,
}

impl PositionGame {
    pub fn new(root: Position) -> Self {
        PositionGame { root }
    }
}

impl AbstractGame for PositionGame {
    type State = Position;
    type Move = Move;
    type Key = MemoKey;

    fn initial(&self) -> Position {
        self.root.clone()
    }

    fn mover(&self, state: &Position) -> Player {
        state.mover()
    }

    fn legal_moves(&self, state: &Position) -> Vec<Move> {
        state.legal_moves()
    }

    fn apply(&self, state: &Position, mv: &Move) -> Position {
        state.play_unchecked(*mv)
    }

    fn winner(&self, state: &Position) -> Player {
        state.terminal_winner()
    }

    fn key(&self, state: &Position) -> MemoKey {
        MemoKey(state.assignment().packed())
    }
}

/// Solves `p` with default options.
pub fn solve(p: &Position) -> Result<Outcome, SolveError> {
    solve_with(p, &SolverOptions::default())
}

/// Positions with at most 64 variables are searched over bit-packed
/// assignments; larger ones over [`PositionGame`].
pub fn solve_with(p: &Position, options: &SolverOptions) -> Result<Outcome, SolveError> {
    match compact::CompactGame::new(p) {
        Some(game) => run(&game, options),
        None => run(&PositionGame::new(p.clone()), options),
    }
}

fn run<G>(game: &G, options: &SolverOptions) -> Result<Outcome, SolveError>
where
    G: AbstractGame<Move = Move> + Sync,
    G::State: Send + Sync,
    G::Key: Send + Sync,
{
    if options.threads > 1 {
        solve_abstract_parallel(game, options)
    } else {
        solve_abstract(game, options)
    }
}
