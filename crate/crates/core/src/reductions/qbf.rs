//! QBF in conjunctive normal form, and its embedding into
//! either-local-same.

use std::fmt::Write as _;

use super::{conjoin, ReductionError};
use crate::engine::{BooleanChoice, Goal, Locality, Position, RulesetConfig};
use crate::formula::Formula;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Literal {
    pub var: usize,
    pub negated: bool,
}

impl Literal {
    pub fn to_formula(self) -> Formula {
        Formula::lit(self.var, self.negated)
    }
}

/// CNF over `n` variables. Clauses are non-empty.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cnf {
    pub n: usize,
    pub clauses: Vec<Vec<Literal>>,
}

impl Cnf {
    pub fn new(n: usize, clauses: Vec<Vec<Literal>>) -> Result<Cnf, ReductionError> {
        for (i, c) in clauses.iter().enumerate() {
            if c.is_empty() {
                return Err(ReductionError::NotCnf(format!("clause {i} is empty")));
            }
            if let Some(l) = c.iter().find(|l| l.var >= n) {
                return Err(ReductionError::VariableOutOfRange { var: l.var, n });
            }
        }
        Ok(Cnf { n, clauses })
    }

    /// Reads a formula shaped as a conjunction of disjunctions of literals.
    /// A bare clause or literal counts as one clause and `true` as none.
    pub fn from_formula(f: &Formula, n: usize) -> Result<Cnf, ReductionError> {
        fn literal(f: &Formula) -> Option<Literal> {
            match *f {
                Formula::Lit { var, negated } => Some(Literal { var, negated }),
                _ => None,
            }
        }
        fn clause(f: &Formula) -> Result<Vec<Literal>, ReductionError> {
            match f {
                Formula::Or(ls) => ls
                    .iter()
                    .map(|l| {
                        literal(l).ok_or_else(|| {
                            ReductionError::NotCnf(format!("`{l}` is not a literal"))
                        })
                    })
                    .collect(),
                other => literal(other)
                    .map(|l| vec![l])
                    .ok_or_else(|| ReductionError::NotCnf(format!("`{other}` is not a clause"))),
            }
        }
        let clauses = match f {
            Formula::Const(true) => Vec::new(),
            Formula::And(cs) => cs.iter().map(clause).collect::<Result<_, _>>()?,
            other => vec![clause(other)?],
        };
        Cnf::new(n, clauses)
    }

    pub fn to_formula(&self) -> Formula {
        conjoin(self.clauses.iter().map(|c| clause_formula(c)).collect())
    }

    /// Formula file text (`vars` line and formula).
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = write!(out, "vars {}\n{}\n", self.n, self.to_formula());
        out
    }

    /// QBF with the strict alternation `E x0 A x1 E x2 ...` as an
    /// either-local-different game.
    pub fn qbf_position(&self) -> Position {
        Position::new(self.to_formula(), self.n, RulesetConfig::QBF)
            .expect("clause variables checked at construction")
    }
}

fn clause_formula(c: &[Literal]) -> Formula {
    Formula::Or(c.iter().map(|l| l.to_formula()).collect())
}

/// Variable count of the reduced game: `n + 1` for even `n`, `n + 2` for
/// odd `n`. Always odd.
pub fn reduced_var_count(n: usize) -> usize {
    if n.is_multiple_of(2) {
        n + 1
    } else {
        n + 2
    }
}

/// The clause itself when its largest variable index `l` is even,
/// otherwise the clause extended by the unsatisfiable term
/// `x(l+1) & !x(l+1)`, so that the last variable touching it is even.
pub fn gamma_clause(c: &[Literal]) -> Formula {
    let l = c
        .iter()
        .map(|l| l.var)
        .max()
        .expect("clauses are non-empty");
    let mut disjuncts: Vec<Formula> = c.iter().map(|l| l.to_formula()).collect();
    if l % 2 == 1 {
        disjuncts.push(Formula::And(vec![Formula::var(l + 1), Formula::neg(l + 1)]));
    }
    Formula::Or(disjuncts)
}

/// Either-local-same position whose first player wins exactly when the
/// alternating QBF over `cnf` is true.
///
/// Clause `i` becomes [`gamma_clause`]; the game has
/// [`reduced_var_count`] variables, so the last variable is even and may
/// not occur in the formula. The padding variable `x(l+1)` reuses an
/// existing variable whenever `l + 1 < n`.
pub fn qbfcnf_to_either_local_same(cnf: &Cnf) -> Position {
    let formula = conjoin(cnf.clauses.iter().map(|c| gamma_clause(c)).collect());
    Position::new(
        formula,
        reduced_var_count(cnf.n),
        RulesetConfig::new(BooleanChoice::Either, Locality::Local, Goal::Same),
    )
    .expect("gamma clauses stay below the reduced variable count")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::parse_formula;

    fn lit(var: usize, negated: bool) -> Literal {
        Literal { var, negated }
    }

    #[test]
    fn even_clause_unchanged() {
        let c = [lit(0, false), lit(1, true), lit(2, false)];
        assert_eq!(gamma_clause(&c).to_text(), "(or x0 (not x1) x2)");
    }

    #[test]
    fn odd_clause_padded() {
        let c = [lit(0, false), lit(1, false)];
        assert_eq!(gamma_clause(&c).to_text(), "(or x0 x1 (and x2 (not x2)))");
    }

    #[test]
    fn var_counts() {
        assert_eq!(reduced_var_count(3), 5);
        assert_eq!(reduced_var_count(4), 5);
        assert_eq!(reduced_var_count(0), 1);
    }

    #[test]
    fn reduction_shape() {
        let cnf = Cnf::new(
            3,
            vec![vec![lit(0, false), lit(1, false)], vec![lit(2, true)]],
        )
        .unwrap();
        let p = qbfcnf_to_either_local_same(&cnf);
        assert_eq!(p.n(), 5);
        assert_eq!(p.config().to_string(), "either-local-same");
        assert_eq!(
            p.formula().to_text(),
            "(and (or x0 x1 (and x2 (not x2))) (or (not x2)))"
        );
    }

    #[test]
    fn cnf_from_formula() {
        let f = parse_formula("(and (or x0 (not x1)) x2)", 3).unwrap();
        let cnf = Cnf::from_formula(&f, 3).unwrap();
        assert_eq!(
            cnf.clauses,
            vec![vec![lit(0, false), lit(1, true)], vec![lit(2, false)]]
        );
        assert_eq!(
            Cnf::from_formula(&Formula::Const(true), 2)
                .unwrap()
                .clauses
                .len(),
            0
        );
        let bad = parse_formula("(and (or x0 (and x1 x2)))", 3).unwrap();
        assert!(matches!(
            Cnf::from_formula(&bad, 3),
            Err(ReductionError::NotCnf(_))
        ));
        assert!(matches!(
            Cnf::from_formula(&Formula::Const(false), 3),
            Err(ReductionError::NotCnf(_))
        ));
        assert!(matches!(
            Cnf::new(2, vec![vec![lit(2, false)]]),
            Err(ReductionError::VariableOutOfRange { var: 2, n: 2 })
        ));
    }
}
