use super::{Outcome, SolveError};
use crate::engine::{GameTrace, Position};

/// Plays out a by-player-local position. Each position has at most one
/// legal move (the lowest unassigned variable, set to the mover's value),
/// so the game is a single line and costs `O(n * |f|)`.
///
/// `nodes` in the outcome counts the moves played.
pub fn simulate_local_by_player(p: &Position) -> Result<(Outcome, GameTrace), SolveError> {
    if !p.config().is_by_player_local() {
        return Err(SolveError::WrongConfig(p.config()));
    }
    let mut position = p.clone();
    let mut moves = Vec::new();
    loop {
        let legal = position.legal_moves();
        debug_assert!(legal.len() <= 1);
        let Some(&m) = legal.first() else { break };
        position = position.play_unchecked(m);
        moves.push(m);
    }
    let outcome = Outcome {
        winner: position.terminal_winner(),
        nodes: moves.len() as u64,
        principal_variation: Some(moves.clone()),
    };
    Ok((outcome, GameTrace::new(p.clone(), moves)))
}
