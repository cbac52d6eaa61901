use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::ruleset::{BooleanChoice, Goal, Locality, Player, RulesetConfig};
use crate::assignment::Assignment;
use crate::formula::Formula;

/// Assign `value` to variable `var`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Move {
    pub var: usize,
    pub value: bool,
}

impl Move {
    pub fn new(var: usize, value: bool) -> Move {
        Move { var, value }
    }
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x{}:={}", self.var, if self.value { 'T' } else { 'F' })
    }
}

/// Why a move was rejected.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum MoveError {
    #[error("x{var} does not exist ({n} variables)")]
    VariableOutOfRange { var: usize, n: usize },
    #[error("x{var} is already assigned")]
    Occupied { var: usize },
    #[error("x{var} is not playable here; local play requires x{expected}")]
    WrongLocation { var: usize, expected: usize },
    #[error("{player} may only assign {allowed}")]
    WrongValue { player: Player, allowed: char },
    #[error("x{}:={} leaves the formula blatantly false", .var, if *.value { 'T' } else { 'F' })]
    BlatantlyFalse { var: usize, value: bool },
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum PositionError {
    #[error("formula mentions x{var} but only {n} variables are declared")]
    VariableOutOfRange { var: usize, n: usize },
    #[error("local rulesets require the assigned variables to be a prefix x0..x(k-1)")]
    NotPrefix,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("position is not terminal")]
pub struct NotTerminal;

/// A full game state.
///
/// The mover is derived from the number of assigned variables: P1 moves
/// when that count is even. An explicit first mover can be fixed at
/// construction, in which case parity is measured from there.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Position {
    formula: Arc<Formula>,
    assignment: Assignment,
    config: RulesetConfig,
    // P2 moves at even parity
    flipped: bool,
}

impl Position {
    /// Initial position: nothing assigned, P1 to move.
    pub fn new(
        formula: Formula,
        n: usize,
        config: RulesetConfig,
    ) -> Result<Position, PositionError> {
        Position::with_assignment(formula, Assignment::new(n), config, None)
    }

    /// Position with pre-assigned variables. `mover` overrides the parity
    /// rule for this position and everything reached from it.
    pub fn with_assignment(
        formula: Formula,
        assignment: Assignment,
        config: RulesetConfig,
        mover: Option<Player>,
    ) -> Result<Position, PositionError> {
        Position::from_shared(Arc::new(formula), assignment, config, mover)
    }

    pub fn from_shared(
        formula: Arc<Formula>,
        assignment: Assignment,
        config: RulesetConfig,
        mover: Option<Player>,
    ) -> Result<Position, PositionError> {
        let n = assignment.len();
        formula
            .check_vars(n)
            .map_err(|var| PositionError::VariableOutOfRange { var, n })?;
        if config.locality == Locality::Local && !assignment.is_prefix() {
            return Err(PositionError::NotPrefix);
        }
        let parity_mover = if assignment.assigned_count().is_multiple_of(2) {
            Player::P1
        } else {
            Player::P2
        };
        let flipped = mover.is_some_and(|m| m != parity_mover);
        Ok(Position {
            formula,
            assignment,
            config,
            flipped,
        })
    }

    pub fn formula(&self) -> &Formula {
        &self.formula
    }

    pub fn shared_formula(&self) -> &Arc<Formula> {
        &self.formula
    }

    pub fn assignment(&self) -> &Assignment {
        &self.assignment
    }

    pub fn config(&self) -> RulesetConfig {
        self.config
    }

    /// Number of variables.
    pub fn n(&self) -> usize {
        self.assignment.len()
    }

    /// Whether the parity rule was overridden.
    pub fn has_mover_override(&self) -> bool {
        self.flipped
    }

    pub fn mover(&self) -> Player {
        let even = self.assignment.assigned_count().is_multiple_of(2);
        if even != self.flipped {
            Player::P1
        } else {
            Player::P2
        }
    }

    /// Same formula and assignment under a different ruleset. Fails only
    /// when switching to a local ruleset from a non-prefix assignment.
    pub fn with_config(&self, config: RulesetConfig) -> Result<Position, PositionError> {
        if config.locality == Locality::Local && !self.assignment.is_prefix() {
            return Err(PositionError::NotPrefix);
        }
        Ok(Position {
            config,
            ..self.clone()
        })
    }

    /// Partially evaluated view of the formula.
    pub fn simplified(&self) -> Formula {
        self.formula.simplify(&self.assignment)
    }

    fn candidate_values(&self) -> &'static [bool] {
        match self.config.choice {
            BooleanChoice::Either => &[false, true],
            BooleanChoice::ByPlayer => match self.mover() {
                Player::P1 => &[true],
                Player::P2 => &[false],
            },
        }
    }

    fn for_each_candidate(&self, mut visit: impl FnMut(Move) -> bool) {
        let values = self.candidate_values();
        let mut scratch = self.assignment.clone();
        let mut consider = |var: usize| -> bool {
            for &value in values {
                if self.config.goal == Goal::Same {
                    scratch.assign(var, value);
                    let bad = self.formula.blatantly_false(&scratch);
                    scratch.unassign(var);
                    if bad {
                        continue;
                    }
                }
                if !visit(Move::new(var, value)) {
                    return false;
                }
            }
            true
        };
        match self.config.locality {
            Locality::Local => {
                if let Some(var) = self.assignment.lowest_unassigned() {
                    consider(var);
                }
            }
            Locality::Anywhere => {
                for var in self.assignment.unassigned() {
                    if !consider(var) {
                        break;
                    }
                }
            }
        }
    }

    /// Legal moves in ascending variable order, false before true.
    pub fn legal_moves(&self) -> Vec<Move> {
        let mut out = Vec::new();
        self.for_each_candidate(|m| {
            out.push(m);
            true
        });
        out
    }

    pub fn has_legal_move(&self) -> bool {
        let mut found = false;
        self.for_each_candidate(|_| {
            found = true;
            false
        });
        found
    }

    /// Checks `m` against each rule in turn and reports the first violated.
    pub fn check_move(&self, m: Move) -> Result<(), MoveError> {
        let n = self.n();
        if m.var >= n {
            return Err(MoveError::VariableOutOfRange { var: m.var, n });
        }
        if self.assignment.is_assigned(m.var) {
            return Err(MoveError::Occupied { var: m.var });
        }
        if self.config.locality == Locality::Local {
            let expected = self.assignment.lowest_unassigned().unwrap_or(m.var);
            if expected != m.var {
                return Err(MoveError::WrongLocation {
                    var: m.var,
                    expected,
                });
            }
        }
        if self.config.choice == BooleanChoice::ByPlayer {
            let player = self.mover();
            if m.value != player.identity_value() {
                return Err(MoveError::WrongValue {
                    player,
                    allowed: if player.identity_value() { 'T' } else { 'F' },
                });
            }
        }
        if self.config.goal == Goal::Same
            && self
                .formula
                .blatantly_false(&self.assignment.with(m.var, m.value))
        {
            return Err(MoveError::BlatantlyFalse {
                var: m.var,
                value: m.value,
            });
        }
        Ok(())
    }

    pub fn apply_move(&self, m: Move) -> Result<Position, MoveError> {
        self.check_move(m)?;
        Ok(self.play_unchecked(m))
    }

    /// Applies a move already known to be legal, e.g. one taken from
    /// [`Position::legal_moves`].
    pub fn play_unchecked(&self, m: Move) -> Position {
        let mut assignment = self.assignment.clone();
        let fresh = assignment.assign(m.var, m.value);
        debug_assert!(fresh, "x{} already assigned", m.var);
        Position {
            formula: Arc::clone(&self.formula),
            assignment,
            config: self.config,
            flipped: self.flipped,
        }
    }

    /// Different goal: every variable assigned. Same goal: no legal move.
    pub fn is_terminal(&self) -> bool {
        match self.config.goal {
            Goal::Different => self.assignment.is_complete(),
            Goal::Same => !self.has_legal_move(),
        }
    }

    pub fn winner(&self) -> Result<Player, NotTerminal> {
        if !self.is_terminal() {
            return Err(NotTerminal);
        }
        Ok(self.terminal_winner())
    }

    /// Winner of a position already known to be terminal.
    pub(crate) fn terminal_winner(&self) -> Player {
        match self.config.goal {
            Goal::Different => {
                // complete assignment, so every node is blatantly true or false
                if self.formula.blatantly_true(&self.assignment) {
                    Player::P1
                } else {
                    Player::P2
                }
            }
            Goal::Same => self.mover().opponent(),
        }
    }
}
