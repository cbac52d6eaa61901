use std::cell::RefCell;
use std::hash::Hash;
use std::sync::atomic::{AtomicU64, Ordering};

use dashmap::DashMap;
use rayon::prelude::*;
use rustc_hash::{FxBuildHasher, FxHashMap};

use super::{Outcome, SolveError, SolverOptions};
use crate::engine::Player;

/// A finite two-player game ending with a winner, with enough structure for
/// backward induction.
///
/// Implementations exist for formula positions and for the graph and CNF
/// source games in [`crate::reductions`].
pub trait AbstractGame {
    type State: Clone;
    type Move: Clone;
    /// Memo key; states with equal keys must have equal values.
    type Key: Eq + Hash;

    fn initial(&self) -> Self::State;
    fn mover(&self, state: &Self::State) -> Player;
    /// Moves in the order the search tries them.
    fn legal_moves(&self, state: &Self::State) -> Vec<Self::Move>;
    fn apply(&self, state: &Self::State, mv: &Self::Move) -> Self::State;
    /// Winner of a state with no legal moves.
    fn winner(&self, state: &Self::State) -> Player;
    fn key(&self, state: &Self::State) -> Self::Key;
}

trait Memo<K> {
    fn get(&self, key: &K) -> Option<Player>;
    fn insert(&self, key: K, value: Player);
}

struct LocalMemo<K>(RefCell<FxHashMap<K, Player>>);

impl<K: Eq + Hash> Memo<K> for LocalMemo<K> {
    fn get(&self, key: &K) -> Option<Player> {
        self.0.borrow().get(key).copied()
    }

    fn insert(&self, key: K, value: Player) {
        self.0.borrow_mut().insert(key, value);
    }
}

// Entries are published whole; a concurrent reader sees either nothing or
// the final value, and duplicate inserts agree.
struct SharedMemo<K: Eq + Hash>(DashMap<K, Player, FxBuildHasher>);

impl<K: Eq + Hash> Memo<K> for SharedMemo<K> {
    fn get(&self, key: &K) -> Option<Player> {
        self.0.get(key).map(|v| *v)
    }

    fn insert(&self, key: K, value: Player) {
        self.0.entry(key).or_insert(value);
    }
}

struct Search<'g, G: AbstractGame, M> {
    game: &'g G,
    memo: M,
    nodes: AtomicU64,
    budget: u64,
}

impl<G: AbstractGame, M: Memo<G::Key>> Search<'_, G, M> {
    fn value(&self, state: &G::State) -> Result<Player, SolveError> {
        let key = self.game.key(state);
        if let Some(w) = self.memo.get(&key) {
            return Ok(w);
        }
        let nodes = self.nodes.fetch_add(1, Ordering::Relaxed) + 1;
        if nodes > self.budget {
            return Err(SolveError::BudgetExceeded {
                budget: self.budget,
            });
        }
        let moves = self.game.legal_moves(state);
        let winner = if moves.is_empty() {
            self.game.winner(state)
        } else {
            let mover = self.game.mover(state);
            let mut result = mover.opponent();
            for mv in &moves {
                if self.value(&self.game.apply(state, mv))? == mover {
                    result = mover;
                    break;
                }
            }
            result
        };
        self.memo.insert(key, winner);
        Ok(winner)
    }

    /// Follows first winning moves for the winner and first legal moves for
    /// the loser until the game ends.
    fn principal_variation(&self, winner: Player) -> Result<Vec<G::Move>, SolveError> {
        let mut state = self.game.initial();
        let mut line = Vec::new();
        loop {
            let moves = self.game.legal_moves(&state);
            let Some(first) = moves.first() else {
                return Ok(line);
            };
            let mut chosen = first.clone();
            if self.game.mover(&state) == winner {
                for mv in &moves {
                    if self.value(&self.game.apply(&state, mv))? == winner {
                        chosen = mv.clone();
                        break;
                    }
                }
            }
            state = self.game.apply(&state, &chosen);
            line.push(chosen);
        }
    }

    fn finish(&self, winner: Player) -> Result<Outcome<G::Move>, SolveError> {
        let principal_variation = self.principal_variation(winner)?;
        Ok(Outcome {
            winner,
            principal_variation: Some(principal_variation),
            nodes: self.nodes.load(Ordering::Relaxed),
        })
    }
}

/// Optimal-play winner of `game` from its initial state, by memoized
/// backward induction, with a principal variation.
pub fn solve_abstract<G: AbstractGame>(
    game: &G,
    options: &SolverOptions,
) -> Result<Outcome<G::Move>, SolveError> {
    let search = Search {
        game,
        memo: LocalMemo(RefCell::new(FxHashMap::default())),
        nodes: AtomicU64::new(0),
        budget: options.node_budget,
    };
    let winner = search.value(&game.initial())?;
    search.finish(winner)
}

/// As [`solve_abstract`], splitting the root's subtrees across `threads`
/// workers that share one memo table. The winner and principal variation
/// match the single-threaded result; the node count may not.
pub fn solve_abstract_parallel<G>(
    game: &G,
    options: &SolverOptions,
) -> Result<Outcome<G::Move>, SolveError>
where
    G: AbstractGame + Sync,
    G::State: Send + Sync,
    G::Move: Send + Sync,
    G::Key: Send + Sync,
{
    if options.threads <= 1 {
        return solve_abstract(game, options);
    }
    let search = Search {
        game,
        memo: SharedMemo(DashMap::with_hasher(FxBuildHasher)),
        nodes: AtomicU64::new(0),
        budget: options.node_budget,
    };
    let root = game.initial();
    let moves = game.legal_moves(&root);
    let winner = if moves.is_empty() {
        game.winner(&root)
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(options.threads)
            .build()
            .map_err(|e| SolveError::ThreadPool(e.to_string()))?;
        let mover = game.mover(&root);
        let children: Vec<Player> = pool.install(|| {
            moves
                .par_iter()
                .map(|mv| search.value(&game.apply(&root, mv)))
                .collect::<Result<_, _>>()
        })?;
        if children.contains(&mover) {
            mover
        } else {
            mover.opponent()
        }
    };
    search.memo.insert(game.key(&root), winner);
    search.finish(winner)
}
