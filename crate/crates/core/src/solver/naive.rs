use super::{Outcome, SolveError};
use crate::engine::{Player, Position};

pub const DEFAULT_NAIVE_BOUND: usize = 12;

/// Plain recursion over every line of play: no memo table, no shared
/// state. Exponential; refuses positions with more than `bound` variables.
/// Returns no principal variation.
pub fn solve_naive(p: &Position, bound: usize) -> Result<Outcome, SolveError> {
    if p.n() > bound {
        return Err(SolveError::BoundExceeded { n: p.n(), bound });
    }
    let mut nodes = 0;
    let winner = naive_winner(p, &mut nodes);
    Ok(Outcome {
        winner,
        principal_variation: None,
        nodes,
    })
}

fn naive_winner(p: &Position, nodes: &mut u64) -> Player {
    *nodes += 1;
    let moves = p.legal_moves();
    if moves.is_empty() {
        return p.winner().expect("no legal moves means terminal");
    }
    let mover = p.mover();
    for m in moves {
        let next = p.apply_move(m).expect("generated move is legal");
        if naive_winner(&next, nodes) == mover {
            return mover;
        }
    }
    mover.opponent()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::{Move, RulesetConfig};
    use crate::formula::{parse_formula, Formula};

    #[test]
    fn terminal_passthrough() {
        let p = Position::new(Formula::Const(false), 0, RulesetConfig::QBF).unwrap();
        let o = solve_naive(&p, 4).unwrap();
        assert_eq!(o.winner, p.winner().unwrap());
        assert_eq!(o.nodes, 1);
    }

    #[test]
    fn by_player_local_different_sample() {
        let f = parse_formula(
            "(and (or (not x0) x3 (not x1)) (or x2 x1 (not x6)) (or x4 (not x6) x0) (or (not x2) (not x4) x3))",
            7,
        )
        .unwrap();
        let p = Position::new(f, 7, "by-player-local-different".parse().unwrap()).unwrap();
        assert_eq!(solve_naive(&p, 12).unwrap().winner, Player::P2);
    }

    #[test]
    fn bound_enforced() {
        let p = Position::new(Formula::Const(true), 13, RulesetConfig::QBF).unwrap();
        assert_eq!(
            solve_naive(&p, DEFAULT_NAIVE_BOUND),
            Err(SolveError::BoundExceeded { n: 13, bound: 12 })
        );
        let q = p.apply_move(Move::new(0, true)).unwrap();
        assert!(solve_naive(&q, 13).is_ok());
    }
}
