use std::io::{BufRead, Write};

use super::commands::CliError;
use super::exit_codes;
use crate::engine::{Goal, Move, Player, Position};
use crate::solver::{self, SolverOptions};

fn out_err(e: std::io::Error) -> CliError {
    CliError::Io {
        path: "<stdout>".into(),
        source: e,
    }
}

/// Parses `x3 T`, `3 t`, `x3 false` and similar.
pub(super) fn parse_move_input(line: &str) -> Result<Move, String> {
    let words: Vec<&str> = line.split_whitespace().collect();
    let [var, value] = words.as_slice() else {
        return Err("expected `x<index> T|F`".into());
    };
    let digits = var.strip_prefix('x').unwrap_or(var);
    let var = digits
        .parse::<usize>()
        .map_err(|_| format!("bad variable `{var}`"))?;
    let value = match value.to_ascii_lowercase().as_str() {
        "t" | "true" | "1" => true,
        "f" | "false" | "0" => false,
        other => return Err(format!("bad value `{other}`; use T or F")),
    };
    Ok(Move::new(var, value))
}

pub(super) fn run_play(
    start: &Position,
    human: Player,
    opts: &SolverOptions,
    input: &mut dyn BufRead,
    out: &mut dyn Write,
) -> Result<i32, CliError> {
    let config = start.config();
    let mut p = start.clone();
    writeln!(
        out,
        "ruleset: {config}\nyou are {} ({})",
        human.long_name(),
        human.role(&config)
    )
    .map_err(out_err)?;
    loop {
        if p.is_terminal() {
            let winner = p.terminal_winner();
            if config.goal == Goal::Same && p.mover() == human {
                writeln!(out, "you have no legal moves; you lose").map_err(out_err)?;
            }
            let verdict = if winner == human {
                "you win"
            } else {
                "you lose"
            };
            writeln!(
                out,
                "formula: {}\nwinner: {} ({verdict})",
                p.simplified(),
                winner.long_name()
            )
            .map_err(out_err)?;
            return Ok(exit_codes::OK);
        }
        writeln!(
            out,
            "formula: {}\nassigned: {}",
            p.simplified(),
            p.assignment()
        )
        .map_err(out_err)?;
        if p.mover() == human {
            let moves = p.legal_moves();
            let listing: Vec<String> = moves.iter().map(ToString::to_string).collect();
            writeln!(out, "legal: {}", listing.join(" ")).map_err(out_err)?;
            write!(out, "your move> ").map_err(out_err)?;
            out.flush().map_err(out_err)?;
            let mut line = String::new();
            let read = input.read_line(&mut line).map_err(|source| CliError::Io {
                path: "<stdin>".into(),
                source,
            })?;
            if read == 0 {
                writeln!(out).map_err(out_err)?;
                return Err(CliError::InputClosed);
            }
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            if line == "quit" || line == "q" {
                writeln!(out, "bye").map_err(out_err)?;
                return Ok(exit_codes::OK);
            }
            match parse_move_input(line).and_then(|m| p.apply_move(m).map_err(|e| e.to_string())) {
                Ok(next) => p = next,
                Err(reason) => writeln!(out, "illegal: {reason}").map_err(out_err)?,
            }
        } else {
            let outcome = solver::solve_with(&p, opts)?;
            let m = outcome
                .principal_variation
                .and_then(|line| line.first().copied())
                .expect("non-terminal position has a principal move");
            writeln!(out, "solver plays {m}").map_err(out_err)?;
            p = p.play_unchecked(m);
        }
    }
}
