//! Boolean formulas over indexed variables.
//!
//! Formulas are trees of n-ary `and`/`or`, `not`, literals and Boolean
//! constants. Besides ordinary evaluation this module provides the two
//! syntactic predicates the same-goal rulesets are built on,
//! [`Formula::blatantly_false`] and [`Formula::blatantly_true`], and a
//! linear-time partial evaluator, [`Formula::simplify`].

mod parse;

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::assignment::Assignment;

pub use parse::{parse_formula, ParseError, ParseErrorKind};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Formula {
    Const(bool),
    Lit {
        var: usize,
        negated: bool,
    },
    Not(Box<Formula>),
    /// Non-empty; an empty conjunction is `Const(true)`.
    And(Vec<Formula>),
    /// Non-empty; an empty disjunction is `Const(false)`.
    Or(Vec<Formula>),
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error("variable x{0} is unassigned")]
    Unassigned(usize),
}

impl Formula {
    pub fn var(var: usize) -> Formula {
        Formula::Lit {
            var,
            negated: false,
        }
    }

    pub fn neg(var: usize) -> Formula {
        Formula::Lit { var, negated: true }
    }

    pub fn lit(var: usize, negated: bool) -> Formula {
        Formula::Lit { var, negated }
    }

    /// Negation. A positive literal becomes a negated literal, which is the
    /// only form `(not xN)` has in the text syntax.
    #[allow(clippy::should_implement_trait)]
    pub fn not(f: Formula) -> Formula {
        match f {
            Formula::Lit {
                var,
                negated: false,
            } => Formula::neg(var),
            other => Formula::Not(Box::new(other)),
        }
    }

    /// Conjunction; empty input gives `Const(true)`.
    pub fn and(children: Vec<Formula>) -> Formula {
        if children.is_empty() {
            Formula::Const(true)
        } else {
            Formula::And(children)
        }
    }

    /// Disjunction; empty input gives `Const(false)`.
    pub fn or(children: Vec<Formula>) -> Formula {
        if children.is_empty() {
            Formula::Const(false)
        } else {
            Formula::Or(children)
        }
    }

    pub fn free_variables(&self) -> BTreeSet<usize> {
        let mut vars = BTreeSet::new();
        self.collect_vars(&mut vars);
        vars
    }

    fn collect_vars(&self, out: &mut BTreeSet<usize>) {
        match self {
            Formula::Const(_) => {}
            Formula::Lit { var, .. } => {
                out.insert(*var);
            }
            Formula::Not(c) => c.collect_vars(out),
            Formula::And(cs) | Formula::Or(cs) => cs.iter().for_each(|c| c.collect_vars(out)),
        }
    }

    /// Largest variable index occurring in the formula.
    pub fn max_var(&self) -> Option<usize> {
        match self {
            Formula::Const(_) => None,
            Formula::Lit { var, .. } => Some(*var),
            Formula::Not(c) => c.max_var(),
            Formula::And(cs) | Formula::Or(cs) => cs.iter().filter_map(Formula::max_var).max(),
        }
    }

    /// Number of nodes in the tree.
    pub fn size(&self) -> usize {
        match self {
            Formula::Const(_) | Formula::Lit { .. } => 1,
            Formula::Not(c) => 1 + c.size(),
            Formula::And(cs) | Formula::Or(cs) => 1 + cs.iter().map(Formula::size).sum::<usize>(),
        }
    }

    /// Number of `not`/`and`/`or` nodes, counting negated literals as one
    /// `not` each.
    pub fn connective_count(&self) -> usize {
        match self {
            Formula::Const(_) => 0,
            Formula::Lit { negated, .. } => usize::from(*negated),
            Formula::Not(c) => 1 + c.connective_count(),
            Formula::And(cs) | Formula::Or(cs) => {
                1 + cs.iter().map(Formula::connective_count).sum::<usize>()
            }
        }
    }

    /// Standard Boolean semantics. Every occurring variable must be assigned.
    pub fn evaluate(&self, a: &Assignment) -> Result<bool, EvalError> {
        Ok(match self {
            Formula::Const(b) => *b,
            Formula::Lit { var, negated } => match a.value(*var) {
                Some(b) => b != *negated,
                None => return Err(EvalError::Unassigned(*var)),
            },
            Formula::Not(c) => !c.evaluate(a)?,
            Formula::And(cs) => {
                let mut acc = true;
                for c in cs {
                    acc &= c.evaluate(a)?;
                }
                acc
            }
            Formula::Or(cs) => {
                let mut acc = false;
                for c in cs {
                    acc |= c.evaluate(a)?;
                }
                acc
            }
        })
    }

    /// Syntactic falsity relative to `a`: a false-assigned literal, `false`,
    /// the negation of a blatantly true formula, a disjunction whose children
    /// are all blatantly false, or a conjunction with a blatantly false
    /// child. Literals on unassigned variables are neither blatantly false
    /// nor blatantly true.
    pub fn blatantly_false(&self, a: &Assignment) -> bool {
        match self {
            Formula::Const(b) => !*b,
            Formula::Lit { var, negated } => a.value(*var) == Some(*negated),
            Formula::Not(c) => c.blatantly_true(a),
            Formula::And(cs) => cs.iter().any(|c| c.blatantly_false(a)),
            Formula::Or(cs) => cs.iter().all(|c| c.blatantly_false(a)),
        }
    }

    /// Dual of [`Formula::blatantly_false`].
    pub fn blatantly_true(&self, a: &Assignment) -> bool {
        match self {
            Formula::Const(b) => *b,
            Formula::Lit { var, negated } => a.value(*var) == Some(!*negated),
            Formula::Not(c) => c.blatantly_false(a),
            Formula::And(cs) => cs.iter().all(|c| c.blatantly_true(a)),
            Formula::Or(cs) => cs.iter().any(|c| c.blatantly_true(a)),
        }
    }

    /// Partial evaluation under `a`.
    ///
    /// Assigned literals become constants, constants short-circuit their
    /// parents and are otherwise dropped, single-child connectives are
    /// unwrapped, nested connectives of the same kind are flattened and
    /// double negations removed. Nothing else is rewritten.
    pub fn simplify(&self, a: &Assignment) -> Formula {
        match self {
            Formula::Const(b) => Formula::Const(*b),
            Formula::Lit { var, negated } => match a.value(*var) {
                Some(b) => Formula::Const(b != *negated),
                None => Formula::lit(*var, *negated),
            },
            Formula::Not(c) => match c.simplify(a) {
                Formula::Const(b) => Formula::Const(!b),
                Formula::Lit { var, negated } => Formula::lit(var, !negated),
                Formula::Not(inner) => *inner,
                other => Formula::Not(Box::new(other)),
            },
            Formula::And(cs) => simplify_nary(cs, a, true),
            Formula::Or(cs) => simplify_nary(cs, a, false),
        }
    }

    /// Checks every variable index is below `n`.
    pub fn check_vars(&self, n: usize) -> Result<(), usize> {
        match self.max_var() {
            Some(v) if v >= n => Err(v),
            _ => Ok(()),
        }
    }

    /// Text form in the parenthesized prefix grammar accepted by
    /// [`parse_formula`].
    pub fn to_text(&self) -> String {
        self.to_string()
    }

    /// Copy with the children of every connective sorted by their text, for
    /// comparisons that ignore operand order.
    pub fn canonical_order(&self) -> Formula {
        match self {
            Formula::Not(c) => Formula::Not(Box::new(c.canonical_order())),
            Formula::And(cs) => Formula::And(sorted_children(cs)),
            Formula::Or(cs) => Formula::Or(sorted_children(cs)),
            other => other.clone(),
        }
    }
}

fn sorted_children(cs: &[Formula]) -> Vec<Formula> {
    let mut out: Vec<Formula> = cs.iter().map(Formula::canonical_order).collect();
    out.sort_by_cached_key(Formula::to_text);
    out
}

// `is_and` selects the conjunction rules; the disjunction is the dual.
fn simplify_nary(children: &[Formula], a: &Assignment, is_and: bool) -> Formula {
    let absorbing = !is_and;
    let mut out = Vec::with_capacity(children.len());
    for child in children {
        match child.simplify(a) {
            Formula::Const(b) if b == absorbing => return Formula::Const(absorbing),
            Formula::Const(_) => {}
            Formula::And(gs) if is_and => out.extend(gs),
            Formula::Or(gs) if !is_and => out.extend(gs),
            other => out.push(other),
        }
    }
    match out.len() {
        0 => Formula::Const(is_and),
        1 => out.pop().unwrap(),
        _ if is_and => Formula::And(out),
        _ => Formula::Or(out),
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Formula::Const(true) => f.write_str("true"),
            Formula::Const(false) => f.write_str("false"),
            Formula::Lit {
                var,
                negated: false,
            } => write!(f, "x{var}"),
            Formula::Lit { var, negated: true } => write!(f, "(not x{var})"),
            Formula::Not(c) => write!(f, "(not {c})"),
            Formula::And(cs) | Formula::Or(cs) => {
                f.write_str(if matches!(self, Formula::And(_)) {
                    "(and"
                } else {
                    "(or"
                })?;
                for c in cs {
                    write!(f, " {c}")?;
                }
                f.write_str(")")
            }
        }
    }
}
