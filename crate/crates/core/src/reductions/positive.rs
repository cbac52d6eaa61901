//! Positive CNF (negation-free 3-CNF; True assigns true, False assigns
//! false, anywhere) and its two embeddings: by-player-anywhere-different
//! and, with value choice lifted, either-anywhere-different ("Toy Positive
//! CNF").

use serde::Serialize;

use super::{conjoin, ReductionError};
use crate::assignment::Assignment;
use crate::engine::{BooleanChoice, Goal, Locality, Move, Player, Position, RulesetConfig};
use crate::formula::Formula;
use crate::solver::{solve, solve_abstract, AbstractGame, SolveError, SolverOptions};

pub const MAX_CLAUSE_WIDTH: usize = 3;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PositiveCnfInstance {
    pub n: usize,
    /// Variable indices per clause; 1 to 3 each.
    pub clauses: Vec<Vec<usize>>,
}

impl PositiveCnfInstance {
    pub fn new(n: usize, clauses: Vec<Vec<usize>>) -> Result<Self, ReductionError> {
        for (i, c) in clauses.iter().enumerate() {
            if c.is_empty() || c.len() > MAX_CLAUSE_WIDTH {
                return Err(ReductionError::ClauseWidth {
                    clause: i,
                    width: c.len(),
                });
            }
            if let Some(&var) = c.iter().find(|&&v| v >= n) {
                return Err(ReductionError::VariableOutOfRange { var, n });
            }
        }
        Ok(PositiveCnfInstance { n, clauses })
    }

    /// Reads a conjunction of disjunctions of positive literals.
    pub fn from_formula(f: &Formula, n: usize) -> Result<Self, ReductionError> {
        fn clause(f: &Formula) -> Result<Vec<usize>, ReductionError> {
            match f {
                Formula::Lit {
                    var,
                    negated: false,
                } => Ok(vec![*var]),
                Formula::Lit { negated: true, .. } | Formula::Not(_) => {
                    Err(ReductionError::NegationFound)
                }
                Formula::Or(ls) => ls
                    .iter()
                    .map(|l| match l {
                        Formula::Lit {
                            var,
                            negated: false,
                        } => Ok(*var),
                        Formula::Lit { negated: true, .. } | Formula::Not(_) => {
                            Err(ReductionError::NegationFound)
                        }
                        other => Err(ReductionError::NotCnf(format!(
                            "`{other}` is not a literal"
                        ))),
                    })
                    .collect(),
                other => Err(ReductionError::NotCnf(format!("`{other}` is not a clause"))),
            }
        }
        let clauses = match f {
            Formula::Const(true) => Vec::new(),
            Formula::And(cs) => cs.iter().map(clause).collect::<Result<_, _>>()?,
            other => vec![clause(other)?],
        };
        PositiveCnfInstance::new(n, clauses)
    }

    pub fn to_formula(&self) -> Formula {
        conjoin(
            self.clauses
                .iter()
                .map(|c| Formula::Or(c.iter().map(|&v| Formula::var(v)).collect()))
                .collect(),
        )
    }

    /// Every clause has a true variable. `values` must be complete.
    pub fn satisfied_by(&self, values: &Assignment) -> bool {
        self.clauses
            .iter()
            .all(|c| c.iter().any(|&v| values.value(v) == Some(true)))
    }

    fn position(&self, choice: BooleanChoice, first: Player) -> Position {
        Position::with_assignment(
            self.to_formula(),
            Assignment::new(self.n),
            RulesetConfig::new(choice, Locality::Anywhere, Goal::Different),
            Some(first),
        )
        .expect("clause variables checked at construction")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PositiveCnfState {
    pub values: Assignment,
    pub mover: Player,
}

/// Positive CNF played directly on the clause list. P1 is True.
#[derive(Clone, Debug)]
pub struct PositiveCnfGame {
    instance: PositiveCnfInstance,
    first: Player,
}

pub fn positive_cnf_game(inst: &PositiveCnfInstance, first: Player) -> PositiveCnfGame {
    PositiveCnfGame {
        instance: inst.clone(),
        first,
    }
}

impl AbstractGame for PositiveCnfGame {
    type State = PositiveCnfState;
    type Move = Move;
    type Key = PositiveCnfState;

    fn initial(&self) -> PositiveCnfState {
        PositiveCnfState {
            values: Assignment::new(self.instance.n),
            mover: self.first,
        }
    }

    fn mover(&self, s: &PositiveCnfState) -> Player {
        s.mover
    }

    fn legal_moves(&self, s: &PositiveCnfState) -> Vec<Move> {
        let value = s.mover == Player::P1;
        s.values.unassigned().map(|v| Move::new(v, value)).collect()
    }

    fn apply(&self, s: &PositiveCnfState, m: &Move) -> PositiveCnfState {
        PositiveCnfState {
            values: s.values.with(m.var, m.value),
            mover: s.mover.opponent(),
        }
    }

    fn winner(&self, s: &PositiveCnfState) -> Player {
        if self.instance.satisfied_by(&s.values) {
            Player::P1
        } else {
            Player::P2
        }
    }

    fn key(&self, s: &PositiveCnfState) -> PositiveCnfState {
        s.clone()
    }
}

/// The same instance as a by-player-anywhere-different position, `first`
/// to move (P1 = True).
pub fn positive_cnf_to_bpad(inst: &PositiveCnfInstance, first: Player) -> Position {
    inst.position(BooleanChoice::ByPlayer, first)
}

/// The same instance with either player free to assign either value, as an
/// either-anywhere-different position.
pub fn toy_positive_position(inst: &PositiveCnfInstance, first: Player) -> Position {
    inst.position(BooleanChoice::Either, first)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ToyEquivalenceReport {
    /// Winner of Positive CNF on the clause list.
    pub positive: Player,
    /// Winner of the by-player-anywhere-different embedding.
    pub embedded: Player,
    /// Winner of the either-anywhere-different (Toy) game.
    pub toy: Player,
}

impl ToyEquivalenceReport {
    pub fn agree(&self) -> bool {
        self.positive == self.toy && self.positive == self.embedded
    }
}

/// Solves the instance as Positive CNF, as its by-player embedding and as
/// Toy Positive CNF. Allowing off-identity values is expected never to
/// change the winner.
pub fn toy_positive_equivalence_check(
    inst: &PositiveCnfInstance,
    first: Player,
    options: &SolverOptions,
) -> Result<ToyEquivalenceReport, SolveError> {
    let positive = solve_abstract(&positive_cnf_game(inst, first), options)?.winner;
    let embedded = solve(&positive_cnf_to_bpad(inst, first))?.winner;
    let toy = solve(&toy_positive_position(inst, first))?.winner;
    Ok(ToyEquivalenceReport {
        positive,
        embedded,
        toy,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::parse_formula;

    fn inst(n: usize, clauses: &[&[usize]]) -> PositiveCnfInstance {
        PositiveCnfInstance::new(n, clauses.iter().map(|c| c.to_vec()).collect()).unwrap()
    }

    fn check(i: &PositiveCnfInstance) -> ToyEquivalenceReport {
        toy_positive_equivalence_check(i, Player::P1, &SolverOptions::default()).unwrap()
    }

    #[test]
    fn single_variable() {
        let r = check(&inst(1, &[&[0]]));
        assert!(r.agree());
        assert_eq!(r.positive, Player::P1);
    }

    #[test]
    fn two_unit_clauses_false_wins() {
        let r = check(&inst(2, &[&[0], &[1]]));
        assert_eq!(r.positive, Player::P2);
        assert!(r.agree());
    }

    #[test]
    fn single_binary_clause_true_wins() {
        let g = positive_cnf_game(&inst(2, &[&[0, 1]]), Player::P1);
        let o = solve_abstract(&g, &SolverOptions::default()).unwrap();
        assert_eq!(o.winner, Player::P1);
    }

    #[test]
    fn triangle_clauses_agree() {
        let r = check(&inst(3, &[&[0, 1], &[0, 2], &[1, 2]]));
        assert!(r.agree());
    }

    #[test]
    fn embedding_is_identity() {
        let i = inst(3, &[&[0, 1], &[2]]);
        let p = positive_cnf_to_bpad(&i, Player::P1);
        assert_eq!(p.config().to_string(), "by-player-anywhere-different");
        assert_eq!(p.formula().to_text(), "(and (or x0 x1) (or x2))");
        assert_eq!(p.mover(), Player::P1);
        let q = positive_cnf_to_bpad(&i, Player::P2);
        assert_eq!(q.mover(), Player::P2);
        assert_eq!(q.legal_moves()[0], Move::new(0, false));
    }

    #[test]
    fn validation() {
        let f = parse_formula("(and (or x0 (not x1)))", 2).unwrap();
        assert_eq!(
            PositiveCnfInstance::from_formula(&f, 2),
            Err(ReductionError::NegationFound)
        );
        assert!(matches!(
            PositiveCnfInstance::new(4, vec![vec![0, 1, 2, 3]]),
            Err(ReductionError::ClauseWidth {
                clause: 0,
                width: 4
            })
        ));
        let ok = parse_formula("(and (or x0 x1) x2)", 3).unwrap();
        assert_eq!(
            PositiveCnfInstance::from_formula(&ok, 3).unwrap().clauses,
            vec![vec![0, 1], vec![2]]
        );
    }
}
