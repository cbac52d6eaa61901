//! Acceptance suite. Prints one `criterion N: PASS|FAIL` line per criterion
//! and exits non-zero if any fails. Pass criterion numbers as arguments to
//! run a subset, for example `cargo test --test acceptance -- 3 6`.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use qbf_games::engine::files;
use qbf_games::gen;
use qbf_games::reductions::verify::{self, CnfSuite, GraphSuite};
use qbf_games::reductions::{gamma_clause, qbfcnf_to_either_local_same, reduced_var_count};
use qbf_games::solver::{self, SolverOptions};
use qbf_games::{parse_formula, Player, RulesetConfig};
use rand::Rng;

use common::{completions_mask, fixture, formulas_up_to, partial_assignments, truth_table};

struct Verdict {
    passed: bool,
    detail: String,
}

fn verdict(passed: bool, detail: impl Into<String>) -> Verdict {
    Verdict {
        passed,
        detail: detail.into(),
    }
}

struct WorkedGame {
    fixture: &'static str,
    winner: Player,
    /// Expected simplified formula after each move; `None` where unchecked.
    displays: &'static [Option<&'static str>],
}

const CLAUSES_AFTER_X0_TRUE: &str =
    "(and (or x3 (not x1)) (or x2 x1 (not x6)) (or (not x2) (not x4) x3))";
const CLAUSES_AFTER_X3_TRUE: &str = "(and (or x2 x1 (not x6)) (or x4 (not x6) x0))";

const WORKED_GAMES: &[WorkedGame] = &[
    WorkedGame {
        fixture: "either-local-different.trace",
        winner: Player::P2,
        displays: &[
            Some(CLAUSES_AFTER_X0_TRUE),
            Some("(and x3 (or (not x2) (not x4) x3))"),
            Some("x3"),
            Some("false"),
            None,
            None,
            None,
        ],
    },
    WorkedGame {
        fixture: "by-player-local-same.trace",
        winner: Player::P2,
        displays: &[
            Some(CLAUSES_AFTER_X0_TRUE),
            Some("(and (or x2 (not x6)) (or (not x2) (not x4) x3))"),
            Some("(or (not x4) x3)"),
            Some("(not x4)"),
        ],
    },
    WorkedGame {
        fixture: "by-player-anywhere-same.trace",
        winner: Player::P1,
        displays: &[
            Some(CLAUSES_AFTER_X3_TRUE),
            Some("(and (or x2 (not x6)) (or x4 (not x6) x0))"),
            Some("(or x4 (not x6) x0)"),
            Some("(or (not x6) x0)"),
            Some("true"),
            None,
            None,
        ],
    },
    WorkedGame {
        fixture: "by-player-anywhere-different.trace",
        winner: Player::P1,
        displays: &[
            Some(CLAUSES_AFTER_X3_TRUE),
            Some("(and (or x1 (not x6)) (or x4 (not x6) x0))"),
            Some("(or x4 (not x6) x0)"),
            Some("(or (not x6) x0)"),
            Some("true"),
            None,
            None,
        ],
    },
    WorkedGame {
        fixture: "either-local-same.trace",
        winner: Player::P1,
        displays: &[
            Some("(and (or x2 x1 (not x6)) (or x4 (not x6)) (or (not x2) (not x4) x3))"),
            Some("(and (or x2 (not x6)) (or x4 (not x6)) (or (not x2) (not x4) x3))"),
            Some("(and (or x4 (not x6)) (or (not x4) x3))"),
            Some("(and (or x4 (not x6)) (not x4))"),
            Some("(not x6)"),
            Some("(not x6)"),
            Some("true"),
        ],
    },
    WorkedGame {
        fixture: "either-anywhere-same.trace",
        winner: Player::P1,
        displays: &[
            Some("(and (or (not x0) x3 (not x1)) (or (not x2) (not x4) x3))"),
            Some("(and (or (not x0) x3 (not x1)) (or (not x4) x3))"),
            Some("true"),
            None,
            None,
            None,
            None,
        ],
    },
    WorkedGame {
        fixture: "either-anywhere-different.trace",
        winner: Player::P1,
        displays: &[
            Some(CLAUSES_AFTER_X3_TRUE),
            Some("(and (or x2 x1) (or x4 x0))"),
            Some("(or x2 x1)"),
            Some("x2"),
            Some("true"),
            None,
            None,
        ],
    },
];

fn worked_game_traces() -> Verdict {
    let mut failures = Vec::new();
    let mut displays_checked = 0;
    for game in WORKED_GAMES {
        let text = std::fs::read_to_string(fixture(game.fixture)).expect("fixture present");
        let trace = files::parse_trace(&text).expect("fixture parses");
        let report = trace.replay();
        if let Some(ill) = &report.illegal {
            failures.push(format!(
                "{}: move {} illegal: {}",
                game.fixture,
                ill.index + 1,
                ill.error
            ));
            continue;
        }
        if report.winner != Some(game.winner) {
            failures.push(format!("{}: winner {:?}", game.fixture, report.winner));
        }
        if report.steps.len() != game.displays.len() {
            failures.push(format!(
                "{}: {} moves replayed",
                game.fixture,
                report.steps.len()
            ));
            continue;
        }
        for (i, (step, expected)) in report.steps.iter().zip(game.displays).enumerate() {
            let Some(expected) = expected else { continue };
            let expected = parse_formula(expected, 7).expect("display parses");
            displays_checked += 1;
            if step.simplified.canonical_order() != expected.canonical_order() {
                failures.push(format!(
                    "{} move {}: got {}, expected {}",
                    game.fixture,
                    i + 1,
                    step.simplified,
                    expected
                ));
            }
        }
    }
    let detail = if failures.is_empty() {
        format!(
            "{} games, {displays_checked} formula displays matched",
            WORKED_GAMES.len()
        )
    } else {
        failures.join("; ")
    };
    verdict(failures.is_empty(), detail)
}

fn by_player_local_simulation() -> Verdict {
    let mut rng = gen::rng(2);
    let mut over_budget = 0;
    let mut compared = 0;
    let mut disagreements = 0;
    for i in 0..1000 {
        let config = if i % 2 == 0 {
            "by-player-local-same"
        } else {
            "by-player-local-different"
        };
        let n = rng.gen_range(1..=64);
        let c = rng.gen_range(1..=128);
        let p = gen::random_position(&mut rng, n, c, config.parse().unwrap());
        let (outcome, _) = solver::simulate_local_by_player(&p).expect("by-player-local");
        if outcome.nodes > n as u64 {
            over_budget += 1;
        }
        if n <= 10 {
            compared += 1;
            let naive = solver::solve_naive(&p, solver::DEFAULT_NAIVE_BOUND).expect("small");
            if naive.winner != outcome.winner {
                disagreements += 1;
            }
        }
    }
    verdict(
        over_budget == 0 && disagreements == 0 && compared > 0,
        format!(
            "1000 positions, {over_budget} touched more than n positions, \
             {compared} compared with the naive solver, {disagreements} disagreements"
        ),
    )
}

fn oracle_equivalence() -> Verdict {
    let mut rng = gen::rng(3);
    let configs = RulesetConfig::all();
    let total = 10_000;
    let mut disagreements = 0;
    let mut first_bad = None;
    for i in 0..total {
        let config = configs[i % configs.len()];
        let n = rng.gen_range(1..=8);
        let c = rng.gen_range(1..=2 * n);
        let p = gen::random_position(&mut rng, n, c, config);
        let memo = solver::solve(&p).expect("within budget");
        let naive = solver::solve_naive(&p, solver::DEFAULT_NAIVE_BOUND).expect("within bound");
        if memo.winner != naive.winner {
            disagreements += 1;
            first_bad.get_or_insert_with(|| files::write_position(&p));
        }
    }
    let mut detail = format!("{total} positions over 8 rulesets, {disagreements} disagreements");
    if let Some(p) = first_bad {
        detail.push_str(&format!("; first: {}", p.replace('\n', " | ")));
    }
    verdict(disagreements == 0, detail)
}

fn graph_suite(seed: u64) -> GraphSuite {
    GraphSuite {
        max_vertices: 4,
        random_count: 500,
        random_vertices: 5,
        edge_probability: 0.5,
        seed,
    }
}

fn summary_verdict(s: verify::VerifySummary) -> Verdict {
    let mut detail = format!("{}: {}/{} agree", s.kind, s.agreed, s.checked);
    if let Some(c) = &s.counterexample {
        detail.push_str(&format!("; counterexample: {}", c.replace('\n', " | ")));
    }
    verdict(s.passed(), detail)
}

fn snort_reduction_agreement() -> Verdict {
    summary_verdict(
        verify::verify_snort(&graph_suite(4), &SolverOptions::default()).expect("budget"),
    )
}

fn coloring_reduction_agreement() -> Verdict {
    summary_verdict(verify::verify_p2c(&graph_suite(5), &SolverOptions::default()).expect("budget"))
}

fn qbf_reduction_agreement() -> Verdict {
    let suite = CnfSuite {
        count: 200,
        max_vars: 6,
        max_clauses: 8,
        width: 3,
        seed: 6,
    };
    let opts = SolverOptions::default();
    let mut agreed = 0;
    let mut structural = 0;
    let cnfs = suite.cnfs();
    for cnf in &cnfs {
        let check = verify::qbf_check(cnf, &opts).expect("budget");
        if check.qbf_true == (check.reduced_winner == Player::P1) {
            agreed += 1;
        }
        let m = reduced_var_count(cnf.n);
        let reduced = qbfcnf_to_either_local_same(cnf);
        let gammas_even = cnf
            .clauses
            .iter()
            .all(|c| gamma_clause(c).max_var().is_some_and(|v| v % 2 == 0));
        if gammas_even && m % 2 == 1 && reduced.n() == m && check.gamma_even && check.m_odd {
            structural += 1;
        }
    }
    let total = cnfs.len();
    verdict(
        agreed == total && structural == total,
        format!(
            "{agreed}/{total} winners agree, {structural}/{total} with even gamma maxima and odd m"
        ),
    )
}

fn toy_positive_agreement() -> Verdict {
    let suite = CnfSuite {
        count: 1000,
        max_vars: 7,
        max_clauses: 8,
        width: 3,
        seed: 7,
    };
    summary_verdict(verify::verify_toy_poscnf(&suite, &SolverOptions::default()).expect("budget"))
}

fn blatancy_suite() -> Verdict {
    let vars = 4;
    let formulas = formulas_up_to(vars, 3);
    let assignments = partial_assignments(vars);
    let masks: Vec<u64> = assignments.iter().map(completions_mask).collect();
    let (mut unsound, mut overlapping, mut non_dual) = (0u64, 0u64, 0u64);
    for f in &formulas {
        let table = truth_table(f, vars);
        let negated = qbf_games::Formula::Not(Box::new(f.clone()));
        for (a, &mask) in assignments.iter().zip(&masks) {
            let bf = f.blatantly_false(a);
            let bt = f.blatantly_true(a);
            if (bf && table & mask != 0) || (bt && table & mask != mask) {
                unsound += 1;
            }
            if bf && bt {
                overlapping += 1;
            }
            if negated.blatantly_false(a) != bt || negated.blatantly_true(a) != bf {
                non_dual += 1;
            }
        }
    }
    let checks = formulas.len() * assignments.len();
    verdict(
        unsound + overlapping + non_dual == 0,
        format!(
            "{} formulas x {} assignments = {checks} cases; {unsound} unsound, \
             {overlapping} both true and false, {non_dual} duality failures",
            formulas.len(),
            assignments.len()
        ),
    )
}

type Criterion = (u32, fn() -> Verdict, Duration);

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        (1, worked_game_traces, Duration::from_secs(1)),
        (2, by_player_local_simulation, Duration::from_secs(10)),
        (3, oracle_equivalence, Duration::from_secs(300)),
        (4, snort_reduction_agreement, Duration::from_secs(120)),
        (5, coloring_reduction_agreement, Duration::from_secs(120)),
        (6, qbf_reduction_agreement, Duration::from_secs(300)),
        (7, toy_positive_agreement, Duration::from_secs(300)),
        (8, blatancy_suite, Duration::from_secs(60)),
    ];
    let selected: Vec<u32> = std::env::args()
        .skip(1)
        .filter_map(|a| a.parse().ok())
        .collect();
    let wanted = |n: u32| selected.is_empty() || selected.contains(&n);
    let mut all_passed = true;
    let mut substitutes_passed = true;
    for (number, check, limit) in criteria {
        if !wanted(number) {
            continue;
        }
        let start = Instant::now();
        let v = check();
        let elapsed = start.elapsed();
        let passed = v.passed && elapsed <= limit;
        all_passed &= passed;
        if (3..=7).contains(&number) {
            substitutes_passed &= passed;
        }
        println!(
            "criterion {number}: {} ({}; {:.2}s, limit {}s)",
            if passed { "PASS" } else { "FAIL" },
            v.detail,
            elapsed.as_secs_f64(),
            limit.as_secs()
        );
    }
    if wanted(9) {
        let ran_all = (3..=7).all(wanted);
        let passed = ran_all && substitutes_passed;
        all_passed &= passed;
        println!(
            "criterion 9: {} (asymptotic complexity claims are not reproduced; \
             {} as their small-scale substitutes)",
            if passed { "PASS" } else { "FAIL" },
            if !ran_all {
                "criteria 3-7 must run"
            } else if substitutes_passed {
                "criteria 3-7 passed"
            } else {
                "criteria 3-7 did not all pass"
            }
        );
    }
    if all_passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
