use std::fs;
use std::io::{BufRead, Write};
use std::path::{Path, PathBuf};

use thiserror::Error;

use super::exit_codes;
use super::{Command, GenKind, ReduceKind, SolverArgs};
use crate::engine::files::{self, FormatError};
use crate::engine::{Player, Position, RulesetConfig};
use crate::gen;
use crate::reductions::verify::{self, CnfSuite, GraphSuite, VerifySummary};
use crate::reductions::{
    p2c_to_position, positive_cnf_to_bpad, qbfcnf_to_either_local_same, snort_to_position,
    toy_positive_position, Cnf, Graph, PositiveCnfInstance,
};
use crate::solver::{self, Outcome, SolveError, SolverOptions};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{0}")]
    Invalid(String),
    #[error("{0}")]
    Budget(SolveError),
    #[error("{0}")]
    IllegalMove(String),
    #[error("{0}")]
    Disagreement(String),
    #[error("input closed")]
    InputClosed,
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Io { .. } | CliError::InputClosed => exit_codes::IO,
            CliError::Invalid(_) => exit_codes::INVALID_INPUT,
            CliError::Budget(_) => exit_codes::BUDGET_EXCEEDED,
            CliError::IllegalMove(_) => exit_codes::ILLEGAL_MOVE,
            CliError::Disagreement(_) => exit_codes::DISAGREEMENT,
        }
    }
}

impl From<SolveError> for CliError {
    fn from(e: SolveError) -> Self {
        match e {
            SolveError::BudgetExceeded { .. } => CliError::Budget(e),
            other => CliError::Invalid(other.to_string()),
        }
    }
}

fn stdout_err(e: std::io::Error) -> CliError {
    CliError::Io {
        path: PathBuf::from("<stdout>"),
        source: e,
    }
}

pub(super) fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn invalid(path: &Path, e: impl std::fmt::Display) -> CliError {
    CliError::Invalid(format!("{}: {e}", path.display()))
}

fn parse_mover(m: Option<u8>) -> Result<Option<Player>, CliError> {
    m.map(|n| {
        Player::from_number(n)
            .ok_or_else(|| CliError::Invalid(format!("mover must be 1 or 2, not {n}")))
    })
    .transpose()
}

pub(super) fn load_position(
    path: &Path,
    ruleset: Option<RulesetConfig>,
    mover: Option<Player>,
) -> Result<Position, CliError> {
    let text = read(path)?;
    let p = files::parse_instance(&text, ruleset).map_err(|e: FormatError| invalid(path, e))?;
    match mover {
        None => Ok(p),
        Some(m) => Position::from_shared(
            p.shared_formula().clone(),
            p.assignment().clone(),
            p.config(),
            Some(m),
        )
        .map_err(|e| invalid(path, e)),
    }
}

pub(super) fn options(args: &SolverArgs) -> SolverOptions {
    SolverOptions {
        node_budget: args.budget,
        threads: args.threads.max(1),
    }
}

fn write_output(output: Option<&Path>, text: &str, out: &mut dyn Write) -> Result<(), CliError> {
    match output {
        Some(path) => fs::write(path, text).map_err(|source| CliError::Io {
            path: path.to_path_buf(),
            source,
        }),
        None => out.write_all(text.as_bytes()).map_err(stdout_err),
    }
}

fn moves_text(moves: &[crate::engine::Move]) -> String {
    moves
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

pub(super) fn execute(
    cmd: Command,
    input: &mut dyn BufRead,
    out: &mut dyn Write,
) -> Result<i32, CliError> {
    match cmd {
        Command::Solve {
            file,
            ruleset,
            mover,
            naive,
            simulate,
            pv,
            json,
            solver,
        } => {
            let p = load_position(&file, ruleset, parse_mover(mover)?)?;
            run_solve(&p, naive, simulate, pv, json, &options(&solver), out)
        }
        Command::Replay { file, json } => run_replay(&file, json, out),
        Command::Reduce {
            kind,
            input: path,
            output,
            mover,
        } => {
            let p = run_reduce(kind, &path, parse_mover(mover)?.unwrap_or(Player::P1))?;
            write_output(output.as_deref(), &files::write_position(&p), out)?;
            Ok(exit_codes::OK)
        }
        Command::Verify {
            kind,
            max_vertices,
            random,
            random_vertices,
            edge_prob,
            count,
            max_vars,
            max_clauses,
            width,
            seed,
            json,
            solver,
        } => {
            if !(0.0..=1.0).contains(&edge_prob) {
                return Err(CliError::Invalid(format!(
                    "edge probability {edge_prob} outside [0, 1]"
                )));
            }
            let opts = options(&solver);
            let summary = match kind {
                ReduceKind::Snort | ReduceKind::P2c => {
                    let suite = GraphSuite {
                        max_vertices,
                        random_count: random,
                        random_vertices,
                        edge_probability: edge_prob,
                        seed,
                    };
                    if kind == ReduceKind::Snort {
                        verify::verify_snort(&suite, &opts)?
                    } else {
                        verify::verify_p2c(&suite, &opts)?
                    }
                }
                _ => {
                    if width == 0 || max_vars == 0 || max_clauses == 0 {
                        return Err(CliError::Invalid(
                            "suite parameters must be positive".into(),
                        ));
                    }
                    let suite = CnfSuite {
                        count,
                        max_vars,
                        max_clauses,
                        width,
                        seed,
                    };
                    match kind {
                        ReduceKind::Qbf => verify::verify_qbf(&suite, &opts)?,
                        ReduceKind::Poscnf => verify::verify_poscnf(&suite, &opts)?,
                        _ => verify::verify_toy_poscnf(&suite, &opts)?,
                    }
                }
            };
            report_verify(&summary, json, out)
        }
        Command::Gen {
            kind,
            vars,
            clauses,
            width,
            edge_prob,
            ruleset,
            seed,
            output,
        } => {
            let text = run_gen(kind, vars, clauses, width, edge_prob, ruleset, seed)?;
            write_output(output.as_deref(), &text, out)?;
            Ok(exit_codes::OK)
        }
        Command::Play {
            file,
            ruleset,
            human,
            solver,
        } => {
            let human = Player::from_number(human)
                .ok_or_else(|| CliError::Invalid(format!("human must be 1 or 2, not {human}")))?;
            let p = load_position(&file, ruleset, None)?;
            super::play::run_play(&p, human, &options(&solver), input, out)
        }
    }
}

fn run_solve(
    p: &Position,
    naive: bool,
    simulate: bool,
    pv: bool,
    json: bool,
    opts: &SolverOptions,
    out: &mut dyn Write,
) -> Result<i32, CliError> {
    let (method, outcome): (&str, Outcome) = if simulate {
        ("simulate", solver::simulate_local_by_player(p)?.0)
    } else if naive {
        (
            "naive",
            solver::solve_naive(p, solver::DEFAULT_NAIVE_BOUND)?,
        )
    } else {
        ("memo", solver::solve_with(p, opts)?)
    };
    if json {
        let value = serde_json::json!({
            "ruleset": p.config().to_string(),
            "vars": p.n(),
            "solver": method,
            "winner": outcome.winner,
            "winner_name": outcome.winner.long_name(),
            "nodes": outcome.nodes,
            "principal_variation": outcome.principal_variation,
        });
        writeln!(out, "{value}").map_err(stdout_err)?;
    } else {
        let mut text = format!(
            "ruleset: {}\nwinner: {}\nsolver: {method}\nnodes: {}\n",
            p.config(),
            outcome.winner.long_name(),
            outcome.nodes
        );
        if pv {
            match &outcome.principal_variation {
                Some(line) if line.is_empty() => text.push_str("pv: (no moves)\n"),
                Some(line) => text.push_str(&format!("pv: {}\n", moves_text(line))),
                None => text.push_str("pv: unavailable from the naive solver\n"),
            }
        }
        out.write_all(text.as_bytes()).map_err(stdout_err)?;
    }
    Ok(exit_codes::OK)
}

fn run_replay(path: &Path, json: bool, out: &mut dyn Write) -> Result<i32, CliError> {
    let text = read(path)?;
    let trace = files::parse_trace(&text).map_err(|e| invalid(path, e))?;
    let report = trace.replay();
    let config = trace.initial.config();
    if json {
        writeln!(out, "{}", report.to_json()).map_err(stdout_err)?;
    } else {
        let mut s = format!(
            "ruleset: {config}\nvars: {}\nstart: {}\n",
            trace.initial.n(),
            trace.initial.simplified()
        );
        for (i, step) in report.steps.iter().enumerate() {
            s.push_str(&format!(
                "{:>3}. {} ({}) {}  => {}\n",
                i + 1,
                step.mover,
                step.mover.role(&config),
                step.mv,
                step.simplified
            ));
        }
        if report.illegal.is_none() {
            match report.winner {
                Some(w) => s.push_str(&format!("winner: {}\n", w.long_name())),
                None => s.push_str("winner: none (game not finished)\n"),
            }
        }
        out.write_all(s.as_bytes()).map_err(stdout_err)?;
    }
    match &report.illegal {
        Some(ill) => Err(CliError::IllegalMove(format!(
            "move {} ({} by {}) is illegal: {}",
            ill.index + 1,
            ill.mv,
            ill.mover,
            ill.error
        ))),
        None => Ok(exit_codes::OK),
    }
}

pub(super) fn run_reduce(
    kind: ReduceKind,
    path: &Path,
    first: Player,
) -> Result<Position, CliError> {
    let text = read(path)?;
    match kind {
        ReduceKind::Snort | ReduceKind::P2c => {
            let g = Graph::parse(&text).map_err(|e| invalid(path, e))?;
            if kind == ReduceKind::Snort {
                snort_to_position(&g, first).map_err(|e| invalid(path, e))
            } else {
                if first != Player::P1 {
                    return Err(CliError::Invalid(
                        "Proper 2-Coloring always starts with P1".into(),
                    ));
                }
                p2c_to_position(&g).map_err(|e| invalid(path, e))
            }
        }
        ReduceKind::Qbf => {
            let (n, f) = files::parse_formula_file(&text).map_err(|e| invalid(path, e))?;
            let cnf = Cnf::from_formula(&f, n).map_err(|e| invalid(path, e))?;
            Ok(qbfcnf_to_either_local_same(&cnf))
        }
        ReduceKind::Poscnf | ReduceKind::ToyPoscnf => {
            let (n, f) = files::parse_formula_file(&text).map_err(|e| invalid(path, e))?;
            let inst = PositiveCnfInstance::from_formula(&f, n).map_err(|e| invalid(path, e))?;
            Ok(if kind == ReduceKind::Poscnf {
                positive_cnf_to_bpad(&inst, first)
            } else {
                toy_positive_position(&inst, first)
            })
        }
    }
}

fn report_verify(
    summary: &VerifySummary,
    json: bool,
    out: &mut dyn Write,
) -> Result<i32, CliError> {
    if json {
        writeln!(
            out,
            "{}",
            serde_json::to_string(summary).expect("plain data")
        )
        .map_err(stdout_err)?;
    } else {
        let mut s = format!(
            "kind: {}\nchecked: {}\nagreed: {}\nresult: {}\n",
            summary.kind,
            summary.checked,
            summary.agreed,
            if summary.passed() { "pass" } else { "FAIL" }
        );
        if let Some(c) = &summary.counterexample {
            s.push_str("counterexample:\n");
            s.push_str(c);
        }
        out.write_all(s.as_bytes()).map_err(stdout_err)?;
    }
    if summary.passed() {
        Ok(exit_codes::OK)
    } else {
        Err(CliError::Disagreement(format!(
            "{} of {} {} instances disagree",
            summary.checked - summary.agreed,
            summary.checked,
            summary.kind
        )))
    }
}

pub(super) fn run_gen(
    kind: GenKind,
    vars: usize,
    clauses: usize,
    width: usize,
    edge_prob: f64,
    ruleset: RulesetConfig,
    seed: u64,
) -> Result<String, CliError> {
    if vars == 0 {
        return Err(CliError::Invalid("variable count must be positive".into()));
    }
    let mut rng = gen::rng(seed);
    match kind {
        GenKind::Graph => {
            if !(0.0..=1.0).contains(&edge_prob) {
                return Err(CliError::Invalid(format!(
                    "edge probability {edge_prob} outside [0, 1]"
                )));
            }
            Ok(gen::random_graph(&mut rng, vars, edge_prob).to_text())
        }
        _ if clauses == 0 || width == 0 => Err(CliError::Invalid(
            "clause count and width must be positive".into(),
        )),
        _ if width > vars => Err(CliError::Invalid(format!(
            "clause width {width} exceeds {vars} variables"
        ))),
        GenKind::Formula => Ok(gen::random_cnf(&mut rng, vars, clauses, width).to_text()),
        GenKind::Positive => {
            if width > 3 {
                return Err(CliError::Invalid(
                    "positive clauses have at most 3 literals".into(),
                ));
            }
            let inst = gen::random_positive(&mut rng, vars, clauses, width);
            Ok(files::write_formula_file(inst.n, &inst.to_formula()))
        }
        GenKind::Position => {
            let cnf = gen::random_cnf(&mut rng, vars, clauses, width);
            let p = Position::new(cnf.to_formula(), vars, ruleset).expect("in range");
            Ok(files::write_position(&p))
        }
    }
}
