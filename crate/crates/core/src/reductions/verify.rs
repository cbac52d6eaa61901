//! Winner-preservation checks: solve the source game and the reduced
//! position independently and compare winners.

use rand::Rng;
use serde::Serialize;

use super::{
    p2c_game, p2c_to_position, positive_cnf_game, positive_cnf_to_bpad,
    qbfcnf_to_either_local_same, snort_game, snort_to_position, toy_positive_equivalence_check,
    Cnf, Graph, PositiveCnfInstance,
};
use crate::engine::{files, Player};
use crate::formula::Formula;
use crate::gen;
use crate::solver::{solve_abstract, solve_with, SolveError, SolverOptions};

/// Agreement counts for one suite.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifySummary {
    pub kind: String,
    pub checked: usize,
    pub agreed: usize,
    /// First disagreeing instance, in its file format.
    pub counterexample: Option<String>,
}

impl VerifySummary {
    fn new(kind: &str) -> Self {
        VerifySummary {
            kind: kind.into(),
            checked: 0,
            agreed: 0,
            counterexample: None,
        }
    }

    fn record(&mut self, agree: bool, instance: impl FnOnce() -> String) {
        self.checked += 1;
        if agree {
            self.agreed += 1;
        } else if self.counterexample.is_none() {
            self.counterexample = Some(instance());
        }
    }

    pub fn passed(&self) -> bool {
        self.checked == self.agreed
    }
}

/// Winners of the source game and of the reduced position.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct WinnerPair {
    pub source: Player,
    pub reduced: Player,
}

impl WinnerPair {
    pub fn agree(&self) -> bool {
        self.source == self.reduced
    }
}

/// Snort with `first` to move (P1 = Blue) against the by-player-anywhere-same
/// reduction.
pub fn snort_pair(
    g: &Graph,
    first: Player,
    options: &SolverOptions,
) -> Result<WinnerPair, SolveError> {
    let game = snort_game(g, first).expect("caller passes valid Snort graphs");
    let source = solve_abstract(&game, options)?.winner;
    let position = snort_to_position(g, first).expect("caller passes valid Snort graphs");
    let reduced = solve_with(&position, options)?.winner;
    Ok(WinnerPair { source, reduced })
}

pub fn p2c_pair(g: &Graph, options: &SolverOptions) -> Result<WinnerPair, SolveError> {
    let game = p2c_game(g).expect("caller passes uncolored graphs");
    let source = solve_abstract(&game, options)?.winner;
    let reduced = solve_with(&p2c_to_position(g).expect("uncolored"), options)?.winner;
    Ok(WinnerPair { source, reduced })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct QbfCheck {
    /// Truth of the alternating QBF, i.e. P1 wins either-local-different.
    pub qbf_true: bool,
    pub reduced_winner: Player,
    /// Largest variable of every reduced clause is even.
    pub gamma_even: bool,
    /// Reduced variable count is odd.
    pub m_odd: bool,
}

impl QbfCheck {
    pub fn agree(&self) -> bool {
        self.qbf_true == (self.reduced_winner == Player::P1) && self.gamma_even && self.m_odd
    }
}

pub fn qbf_check(cnf: &Cnf, options: &SolverOptions) -> Result<QbfCheck, SolveError> {
    let qbf_true = solve_with(&cnf.qbf_position(), options)?.winner == Player::P1;
    let reduced = qbfcnf_to_either_local_same(cnf);
    let reduced_winner = solve_with(&reduced, options)?.winner;
    let gammas: Vec<&Formula> = match reduced.formula() {
        Formula::And(cs) => cs.iter().collect(),
        Formula::Const(true) => Vec::new(),
        single => vec![single],
    };
    let gamma_even = gammas
        .iter()
        .all(|g| g.max_var().is_some_and(|l| l % 2 == 0));
    Ok(QbfCheck {
        qbf_true,
        reduced_winner,
        gamma_even,
        m_odd: reduced.n() % 2 == 1,
    })
}

/// Positive CNF on the clause list against its by-player embedding.
pub fn positive_pair(
    inst: &PositiveCnfInstance,
    first: Player,
    options: &SolverOptions,
) -> Result<WinnerPair, SolveError> {
    let source = solve_abstract(&positive_cnf_game(inst, first), options)?.winner;
    let reduced = solve_with(&positive_cnf_to_bpad(inst, first), options)?.winner;
    Ok(WinnerPair { source, reduced })
}

/// Graph suite: every edge subset on `0..=max_vertices` vertices, then
/// `random_count` random graphs on `random_vertices` vertices.
#[derive(Clone, Debug)]
pub struct GraphSuite {
    pub max_vertices: usize,
    pub random_count: usize,
    pub random_vertices: usize,
    pub edge_probability: f64,
    pub seed: u64,
}

impl GraphSuite {
    pub fn graphs(&self) -> impl Iterator<Item = Graph> + '_ {
        let mut rng = gen::rng(self.seed);
        let random: Vec<Graph> = (0..self.random_count)
            .map(|_| gen::random_graph(&mut rng, self.random_vertices, self.edge_probability))
            .collect();
        (0..=self.max_vertices)
            .flat_map(Graph::all_on)
            .chain(random)
    }
}

pub fn verify_snort(
    suite: &GraphSuite,
    options: &SolverOptions,
) -> Result<VerifySummary, SolveError> {
    let mut summary = VerifySummary::new("snort");
    for g in suite.graphs() {
        for first in [Player::P1, Player::P2] {
            let pair = snort_pair(&g, first, options)?;
            summary.record(pair.agree(), || {
                format!("# first mover {first}\n{}", g.to_text())
            });
        }
    }
    Ok(summary)
}

pub fn verify_p2c(
    suite: &GraphSuite,
    options: &SolverOptions,
) -> Result<VerifySummary, SolveError> {
    let mut summary = VerifySummary::new("p2c");
    for g in suite.graphs() {
        let pair = p2c_pair(&g, options)?;
        summary.record(pair.agree(), || g.to_text());
    }
    Ok(summary)
}

/// Random CNF suite parameters: `count` instances with `n` drawn from
/// `min(width, max_vars)..=max_vars` and clause count from `1..=max_clauses`.
#[derive(Clone, Debug)]
pub struct CnfSuite {
    pub count: usize,
    pub max_vars: usize,
    pub max_clauses: usize,
    pub width: usize,
    pub seed: u64,
}

impl CnfSuite {
    fn shape(&self, rng: &mut impl Rng) -> (usize, usize) {
        (
            rng.gen_range(self.width.clamp(1, self.max_vars.max(1))..=self.max_vars.max(1)),
            rng.gen_range(1..=self.max_clauses.max(1)),
        )
    }

    pub fn cnfs(&self) -> Vec<Cnf> {
        let mut rng = gen::rng(self.seed);
        (0..self.count)
            .map(|_| {
                let (n, c) = self.shape(&mut rng);
                gen::random_cnf(&mut rng, n, c, self.width)
            })
            .collect()
    }

    pub fn positives(&self) -> Vec<PositiveCnfInstance> {
        let mut rng = gen::rng(self.seed);
        (0..self.count)
            .map(|_| {
                let (n, c) = self.shape(&mut rng);
                gen::random_positive(&mut rng, n, c, self.width)
            })
            .collect()
    }
}

pub fn verify_qbf(suite: &CnfSuite, options: &SolverOptions) -> Result<VerifySummary, SolveError> {
    let mut summary = VerifySummary::new("qbf");
    for cnf in suite.cnfs() {
        let check = qbf_check(&cnf, options)?;
        summary.record(check.agree(), || cnf.to_text());
    }
    Ok(summary)
}

pub fn verify_poscnf(
    suite: &CnfSuite,
    options: &SolverOptions,
) -> Result<VerifySummary, SolveError> {
    let mut summary = VerifySummary::new("poscnf");
    for inst in suite.positives() {
        let pair = positive_pair(&inst, Player::P1, options)?;
        summary.record(pair.agree(), || {
            files::write_formula_file(inst.n, &inst.to_formula())
        });
    }
    Ok(summary)
}

pub fn verify_toy_poscnf(
    suite: &CnfSuite,
    options: &SolverOptions,
) -> Result<VerifySummary, SolveError> {
    let mut summary = VerifySummary::new("toy-poscnf");
    for inst in suite.positives() {
        let report = toy_positive_equivalence_check(&inst, Player::P1, options)?;
        summary.record(report.agree(), || {
            files::write_formula_file(inst.n, &inst.to_formula())
        });
    }
    Ok(summary)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_graph_suites_agree() {
        let suite = GraphSuite {
            max_vertices: 3,
            random_count: 5,
            random_vertices: 4,
            edge_probability: 0.5,
            seed: 1,
        };
        assert_eq!(suite.graphs().count(), 1 + 1 + 2 + 8 + 5);
        let opts = SolverOptions::default();
        assert!(verify_snort(&suite, &opts).unwrap().passed());
        assert!(verify_p2c(&suite, &opts).unwrap().passed());
    }

    #[test]
    fn small_cnf_suites_agree() {
        let suite = CnfSuite {
            count: 20,
            max_vars: 5,
            max_clauses: 6,
            width: 3,
            seed: 2,
        };
        let opts = SolverOptions::default();
        let q = verify_qbf(&suite, &opts).unwrap();
        assert_eq!(q.checked, 20);
        assert!(q.passed(), "{:?}", q.counterexample);
        assert!(verify_poscnf(&suite, &opts).unwrap().passed());
        assert!(verify_toy_poscnf(&suite, &opts).unwrap().passed());
    }

    #[test]
    fn summary_keeps_first_counterexample() {
        let mut s = VerifySummary::new("x");
        s.record(true, || unreachable!());
        s.record(false, || "first".into());
        s.record(false, || "second".into());
        assert_eq!((s.checked, s.agreed), (3, 1));
        assert_eq!(s.counterexample.as_deref(), Some("first"));
        assert!(!s.passed());
    }
}
