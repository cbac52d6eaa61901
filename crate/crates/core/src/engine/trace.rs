use serde::Serialize;

use super::position::{Move, MoveError, Position};
use super::ruleset::Player;
use crate::formula::Formula;

/// An initial position and a sequence of moves played from it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GameTrace {
    pub initial: Position,
    pub moves: Vec<Move>,
}

/// One successfully applied move.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReplayStep {
    pub mover: Player,
    pub mv: Move,
    /// Simplified formula after the move.
    pub simplified: Formula,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IllegalStep {
    /// Zero-based index into the trace's moves.
    pub index: usize,
    pub mover: Player,
    pub mv: Move,
    pub error: MoveError,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReplayReport {
    pub steps: Vec<ReplayStep>,
    /// Last position reached; the position before the illegal move if any.
    pub final_position: Position,
    pub illegal: Option<IllegalStep>,
    /// Set when every move was legal and the final position is terminal.
    pub winner: Option<Player>,
}

impl ReplayReport {
    pub fn is_legal(&self) -> bool {
        self.illegal.is_none()
    }
}

#[derive(Serialize)]
struct StepJson {
    mover: Player,
    var: usize,
    value: bool,
    formula: String,
}

impl GameTrace {
    pub fn new(initial: Position, moves: Vec<Move>) -> GameTrace {
        GameTrace { initial, moves }
    }

    /// Applies the moves in order, stopping at the first illegal one.
    pub fn replay(&self) -> ReplayReport {
        let mut position = self.initial.clone();
        let mut steps = Vec::with_capacity(self.moves.len());
        for (index, &mv) in self.moves.iter().enumerate() {
            let mover = position.mover();
            match position.apply_move(mv) {
                Ok(next) => {
                    steps.push(ReplayStep {
                        mover,
                        mv,
                        simplified: next.simplified(),
                    });
                    position = next;
                }
                Err(error) => {
                    return ReplayReport {
                        steps,
                        final_position: position,
                        illegal: Some(IllegalStep {
                            index,
                            mover,
                            mv,
                            error,
                        }),
                        winner: None,
                    };
                }
            }
        }
        let winner = position.winner().ok();
        ReplayReport {
            steps,
            final_position: position,
            illegal: None,
            winner,
        }
    }
}

impl ReplayReport {
    pub fn to_json(&self) -> serde_json::Value {
        let steps: Vec<StepJson> = self
            .steps
            .iter()
            .map(|s| StepJson {
                mover: s.mover,
                var: s.mv.var,
                value: s.mv.value,
                formula: s.simplified.to_text(),
            })
            .collect();
        serde_json::json!({
            "steps": steps,
            "illegal": self.illegal.as_ref().map(|i| serde_json::json!({
                "index": i.index,
                "mover": i.mover,
                "var": i.mv.var,
                "value": i.mv.value,
                "reason": i.error.to_string(),
            })),
            "winner": self.winner,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::RulesetConfig;

    #[test]
    fn empty_trace_reports_initial() {
        let p = Position::new(Formula::var(0), 1, RulesetConfig::QBF).unwrap();
        let r = GameTrace::new(p.clone(), vec![]).replay();
        assert!(r.is_legal());
        assert!(r.steps.is_empty());
        assert_eq!(r.final_position, p);
        assert_eq!(r.winner, None);
    }

    #[test]
    fn stops_at_first_illegal() {
        let p = Position::new(Formula::var(0), 2, RulesetConfig::QBF).unwrap();
        let t = GameTrace::new(
            p,
            vec![Move::new(0, true), Move::new(0, false), Move::new(1, true)],
        );
        let r = t.replay();
        assert_eq!(r.steps.len(), 1);
        let ill = r.illegal.unwrap();
        assert_eq!(ill.index, 1);
        assert_eq!(ill.mover, Player::P2);
        assert_eq!(ill.error, MoveError::Occupied { var: 0 });
        assert_eq!(r.final_position.assignment().assigned_count(), 1);
    }
}
