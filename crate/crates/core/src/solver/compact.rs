//! Fast path for positions with at most 64 variables.
//!
//! The assignment is two bit masks and legality of every candidate move is
//! decided in a single traversal of the formula: each subformula yields a
//! pair of 128-bit masks whose bit `2v + b` says whether the subformula is
//! blatantly false (or true) once `x_v := b` is added to the assignment.

use super::search::AbstractGame;
use crate::engine::{BooleanChoice, Goal, Locality, Move, Player, Position, RulesetConfig};
use crate::formula::Formula;

pub(crate) const MAX_VARS: usize = 64;

const ALL: u128 = u128::MAX;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub(crate) struct Packed {
    assigned: u64,
    values: u64,
}

#[derive(Clone, Debug)]
pub(crate) struct CompactGame<'a> {
    formula: &'a Formula,
    n: usize,
    config: RulesetConfig,
    root: Packed,
    flipped: bool,
}

fn candidate_bit(var: usize, value: bool) -> u128 {
    1u128 << (2 * var + value as usize)
}

/// `(blatantly_false, blatantly_true)` masks over all candidate moves.
fn blatancy(f: &Formula, s: Packed) -> (u128, u128) {
    match f {
        Formula::Const(true) => (0, ALL),
        Formula::Const(false) => (ALL, 0),
        Formula::Lit { var, negated } => {
            if s.assigned >> var & 1 == 1 {
                let value = s.values >> var & 1 == 1;
                if value != *negated {
                    (0, ALL)
                } else {
                    (ALL, 0)
                }
            } else {
                (
                    candidate_bit(*var, *negated),
                    candidate_bit(*var, !*negated),
                )
            }
        }
        Formula::Not(c) => {
            let (bf, bt) = blatancy(c, s);
            (bt, bf)
        }
        Formula::And(cs) => cs.iter().fold((0, ALL), |(bf, bt), c| {
            let (cf, ct) = blatancy(c, s);
            (bf | cf, bt & ct)
        }),
        Formula::Or(cs) => cs.iter().fold((ALL, 0), |(bf, bt), c| {
            let (cf, ct) = blatancy(c, s);
            (bf & cf, bt | ct)
        }),
    }
}

impl<'a> CompactGame<'a> {
    /// `None` when the position has more than [`MAX_VARS`] variables.
    pub(crate) fn new(p: &'a Position) -> Option<Self> {
        let n = p.n();
        if n > MAX_VARS {
            return None;
        }
        let mut root = Packed {
            assigned: 0,
            values: 0,
        };
        for (var, value) in p.assignment().assigned_pairs() {
            root.assigned |= 1 << var;
            root.values |= (value as u64) << var;
        }
        let parity = if p.assignment().assigned_count().is_multiple_of(2) {
            Player::P1
        } else {
            Player::P2
        };
        Some(CompactGame {
            formula: p.formula(),
            n,
            config: p.config(),
            root,
            flipped: p.mover() != parity,
        })
    }

    fn full(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }
}

impl AbstractGame for CompactGame<'_> {
    type State = Packed;
    type Move = Move;
    type Key = Packed;

    fn initial(&self) -> Packed {
        self.root
    }

    fn mover(&self, s: &Packed) -> Player {
        let even = s.assigned.count_ones().is_multiple_of(2);
        if even != self.flipped {
            Player::P1
        } else {
            Player::P2
        }
    }

    fn legal_moves(&self, s: &Packed) -> Vec<Move> {
        let free = !s.assigned & self.full();
        let vars = match self.config.locality {
            Locality::Local if free != 0 => free & free.wrapping_neg(),
            _ => free,
        };
        let (allow_false, allow_true) = match self.config.choice {
            BooleanChoice::Either => (true, true),
            BooleanChoice::ByPlayer => {
                let t = self.mover(s).identity_value();
                (!t, t)
            }
        };
        let mut candidates = 0u128;
        let mut rest = vars;
        while rest != 0 {
            let var = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if allow_false {
                candidates |= candidate_bit(var, false);
            }
            if allow_true {
                candidates |= candidate_bit(var, true);
            }
        }
        if self.config.goal == Goal::Same && candidates != 0 {
            candidates &= !blatancy(self.formula, *s).0;
        }
        let mut moves = Vec::with_capacity(candidates.count_ones() as usize);
        while candidates != 0 {
            let bit = candidates.trailing_zeros() as usize;
            candidates &= candidates - 1;
            moves.push(Move::new(bit / 2, bit % 2 == 1));
        }
        moves
    }

    fn apply(&self, s: &Packed, mv: &Move) -> Packed {
        Packed {
            assigned: s.assigned | 1 << mv.var,
            values: s.values | (mv.value as u64) << mv.var,
        }
    }

    fn winner(&self, s: &Packed) -> Player {
        match self.config.goal {
            Goal::Same => self.mover(s).opponent(),
            Goal::Different => {
                if blatancy(self.formula, *s).1 == ALL {
                    Player::P1
                } else {
                    Player::P2
                }
            }
        }
    }

    fn key(&self, s: &Packed) -> Packed {
        *s
    }
}
