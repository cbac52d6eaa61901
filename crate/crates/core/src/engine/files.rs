//! Line-oriented position, trace and formula files.
//!
//! ```text
//! ruleset <either|by-player> <local|anywhere> <same|different>
//! vars <n>
//! assigned <index=T|F ...>
//! mover <1|2>            (optional)
//! <formula, may span lines>
//! move x<i> <T|F>        (trace files only, repeated)
//! ```
//!
//! A formula file is just `vars <n>` followed by the formula. Blank lines
//! and lines starting with `#` are ignored in both.

use std::fmt::Write as _;

use thiserror::Error;

use super::position::{Move, Position, PositionError};
use super::ruleset::{Player, RulesetConfig};
use super::trace::GameTrace;
use crate::assignment::Assignment;
use crate::formula::{parse_formula, Formula, ParseError};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("formula: {0}")]
    Formula(ParseError),
    #[error(transparent)]
    Position(#[from] PositionError),
}

fn syntax(line: usize, message: impl Into<String>) -> FormatError {
    FormatError::Syntax {
        line,
        message: message.into(),
    }
}

struct Lines<'a> {
    lines: Vec<(usize, &'a str)>,
    pos: usize,
    last_line: usize,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        let all: Vec<(usize, &str)> = text.lines().enumerate().map(|(i, l)| (i + 1, l)).collect();
        let last_line = all.len().max(1);
        Lines {
            lines: all
                .into_iter()
                .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'))
                .collect(),
            pos: 0,
            last_line,
        }
    }

    fn peek(&self) -> Option<(usize, &'a str)> {
        self.lines.get(self.pos).map(|&(n, l)| (n, l.trim()))
    }

    fn next(&mut self) -> Option<(usize, &'a str)> {
        let item = self.peek();
        self.pos += usize::from(item.is_some());
        item
    }

    /// Next line, which must start with `keyword`; returns the remainder.
    fn expect(&mut self, keyword: &str) -> Result<(usize, &'a str), FormatError> {
        match self.next() {
            Some((n, l)) => match l.strip_prefix(keyword) {
                Some(rest) if rest.is_empty() || rest.starts_with(char::is_whitespace) => {
                    Ok((n, rest.trim()))
                }
                _ => Err(syntax(n, format!("expected `{keyword}`, found `{l}`"))),
            },
            None => Err(syntax(self.last_line, format!("missing `{keyword}` line"))),
        }
    }
}

fn parse_vars(lines: &mut Lines<'_>) -> Result<usize, FormatError> {
    let (n_line, rest) = lines.expect("vars")?;
    rest.parse()
        .map_err(|_| syntax(n_line, format!("bad variable count `{rest}`")))
}

/// Reads formula lines up to the first `move` line or end of input.
fn parse_formula_block(lines: &mut Lines<'_>, n: usize) -> Result<Formula, FormatError> {
    let Some((start, _)) = lines.peek() else {
        return Err(syntax(lines.last_line, "missing formula"));
    };
    let mut text = String::new();
    let mut prev = start;
    while let Some((line, l)) = lines.peek() {
        if l.starts_with("move ") || l == "move" {
            break;
        }
        // keep blank lines so error positions stay right
        for _ in prev..line {
            text.push('\n');
        }
        text.push_str(lines.lines[lines.pos].1);
        prev = line;
        lines.pos += 1;
    }
    if text.trim().is_empty() {
        return Err(syntax(start, "missing formula"));
    }
    parse_formula(&text, n).map_err(|mut e| {
        e.line += start - 1;
        FormatError::Formula(e)
    })
}

fn parse_value(token: &str) -> Option<bool> {
    match token {
        "T" => Some(true),
        "F" => Some(false),
        _ => None,
    }
}

fn parse_position_header(lines: &mut Lines<'_>) -> Result<Position, FormatError> {
    let (r_line, rest) = lines.expect("ruleset")?;
    let words: Vec<&str> = rest.split_whitespace().collect();
    let config = match words.as_slice() {
        [c, l, g] => {
            RulesetConfig::from_words(c, l, g).map_err(|e| syntax(r_line, e.to_string()))?
        }
        _ => return Err(syntax(r_line, "ruleset takes three words")),
    };
    let n = parse_vars(lines)?;
    let (a_line, rest) = lines.expect("assigned")?;
    let mut assignment = Assignment::new(n);
    for pair in rest.split_whitespace() {
        let bad = || syntax(a_line, format!("bad assignment `{pair}`"));
        let (idx, val) = pair.split_once('=').ok_or_else(bad)?;
        let idx: usize = idx.parse().map_err(|_| bad())?;
        let val = parse_value(val).ok_or_else(bad)?;
        if idx >= n {
            return Err(syntax(
                a_line,
                format!("x{idx} out of range for {n} variables"),
            ));
        }
        if !assignment.assign(idx, val) {
            return Err(syntax(a_line, format!("x{idx} assigned twice")));
        }
    }
    let mut mover = None;
    if let Some((m_line, l)) = lines.peek() {
        if let Some(rest) = l.strip_prefix("mover") {
            lines.next();
            let rest = rest.trim();
            mover = Some(
                rest.parse::<u8>()
                    .ok()
                    .and_then(Player::from_number)
                    .ok_or_else(|| syntax(m_line, format!("bad mover `{rest}`")))?,
            );
        }
    }
    let formula = parse_formula_block(lines, n)?;
    Ok(Position::with_assignment(
        formula, assignment, config, mover,
    )?)
}

fn parse_move_line(line: usize, l: &str) -> Result<Move, FormatError> {
    let bad = || syntax(line, format!("bad move line `{l}`"));
    let words: Vec<&str> = l.split_whitespace().collect();
    match words.as_slice() {
        ["move", var, value] => {
            let var: usize = var
                .strip_prefix('x')
                .and_then(|d| d.parse().ok())
                .ok_or_else(bad)?;
            Ok(Move::new(var, parse_value(value).ok_or_else(bad)?))
        }
        _ => Err(bad()),
    }
}

pub fn parse_position(text: &str) -> Result<Position, FormatError> {
    let mut lines = Lines::new(text);
    let p = parse_position_header(&mut lines)?;
    if let Some((n, l)) = lines.next() {
        return Err(syntax(n, format!("unexpected `{l}` after formula")));
    }
    Ok(p)
}

/// Move legality is not checked here; see [`GameTrace::replay`].
pub fn parse_trace(text: &str) -> Result<GameTrace, FormatError> {
    let mut lines = Lines::new(text);
    let initial = parse_position_header(&mut lines)?;
    let mut moves = Vec::new();
    while let Some((n, l)) = lines.next() {
        moves.push(parse_move_line(n, l)?);
    }
    Ok(GameTrace::new(initial, moves))
}

/// `(n, formula)` from a `vars` line followed by a formula.
pub fn parse_formula_file(text: &str) -> Result<(usize, Formula), FormatError> {
    let mut lines = Lines::new(text);
    let n = parse_vars(&mut lines)?;
    let f = parse_formula_block(&mut lines, n)?;
    if let Some((line, l)) = lines.next() {
        return Err(syntax(line, format!("unexpected `{l}` after formula")));
    }
    Ok((n, f))
}

/// True when `text` looks like a formula file rather than a position file.
pub fn is_formula_file(text: &str) -> bool {
    text.lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'))
        .is_some_and(|l| l.starts_with("vars"))
}

/// Reads either file kind. A formula file needs `ruleset`; for a position
/// file `ruleset` replaces the recorded one.
pub fn parse_instance(text: &str, ruleset: Option<RulesetConfig>) -> Result<Position, FormatError> {
    if is_formula_file(text) {
        let (n, f) = parse_formula_file(text)?;
        let config = ruleset.ok_or_else(|| syntax(1, "formula file needs a ruleset"))?;
        return Ok(Position::new(f, n, config)?);
    }
    let p = parse_position(text)?;
    match ruleset {
        Some(c) => Ok(p.with_config(c)?),
        None => Ok(p),
    }
}

pub fn write_position(p: &Position) -> String {
    let [c, l, g] = p.config().words();
    let mut out = format!("ruleset {c} {l} {g}\nvars {}\n", p.n());
    let assigned = p.assignment().to_string();
    if assigned.is_empty() {
        out.push_str("assigned\n");
    } else {
        let _ = writeln!(out, "assigned {assigned}");
    }
    if p.has_mover_override() {
        let _ = writeln!(out, "mover {}", p.mover().number());
    }
    let _ = writeln!(out, "{}", p.formula());
    out
}

pub fn write_trace(t: &GameTrace) -> String {
    let mut out = write_position(&t.initial);
    for m in &t.moves {
        let _ = writeln!(out, "move x{} {}", m.var, if m.value { 'T' } else { 'F' });
    }
    out
}

pub fn write_formula_file(n: usize, f: &Formula) -> String {
    format!("vars {n}\n{f}\n")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::ParseErrorKind;

    const FILE: &str = "ruleset by-player anywhere same\nvars 3\nassigned 1=F\nmover 1\n(and\n  (or x0 (not x1))\n  x2)\n";

    #[test]
    fn position_round_trip() {
        let p = parse_position(FILE).unwrap();
        assert_eq!(p.n(), 3);
        assert_eq!(p.assignment().value(1), Some(false));
        assert_eq!(p.mover(), Player::P1);
        assert!(p.has_mover_override());
        let text = write_position(&p);
        assert_eq!(parse_position(&text).unwrap(), p);
        assert_eq!(write_position(&parse_position(&text).unwrap()), text);
    }

    #[test]
    fn default_mover_not_written() {
        let p = parse_position("ruleset either local different\nvars 1\nassigned\nx0\n").unwrap();
        assert_eq!(
            write_position(&p),
            "ruleset either local different\nvars 1\nassigned\nx0\n"
        );
    }

    #[test]
    fn trace_lines() {
        let text = format!("{FILE}move x0 T\nmove x2 F\n");
        let t = parse_trace(&text).unwrap();
        assert_eq!(t.moves, vec![Move::new(0, true), Move::new(2, false)]);
        assert_eq!(
            write_trace(&t),
            parse_trace(&write_trace(&t))
                .map(|t| write_trace(&t))
                .unwrap()
        );
        assert!(matches!(
            parse_trace(&format!("{FILE}move 0 T\n")),
            Err(FormatError::Syntax { line: 8, .. })
        ));
    }

    #[test]
    fn formula_errors_carry_file_lines() {
        let e = parse_position("ruleset either local same\nvars 2\nassigned\n(and x0\n (or x5))\n")
            .unwrap_err();
        match e {
            FormatError::Formula(pe) => {
                assert_eq!(pe.line, 5);
                assert_eq!(pe.kind, ParseErrorKind::VariableOutOfRange { var: 5, n: 2 });
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn header_errors() {
        assert!(matches!(
            parse_position("ruleset either local\nvars 1\nassigned\nx0\n"),
            Err(FormatError::Syntax { line: 1, .. })
        ));
        assert!(matches!(
            parse_position("ruleset either local same\nvars 1\nassigned 0=T 0=F\nx0\n"),
            Err(FormatError::Syntax { line: 3, .. })
        ));
        assert!(matches!(
            parse_position("ruleset either local same\nvars 2\nassigned 1=T\nx0\n"),
            Err(FormatError::Position(PositionError::NotPrefix))
        ));
        assert!(matches!(
            parse_position("ruleset either local same\nvars 1\nassigned\n"),
            Err(FormatError::Syntax { .. })
        ));
    }

    #[test]
    fn instance_kinds() {
        let f = "vars 2\n(or x0 x1)\n";
        assert!(parse_instance(f, None).is_err());
        let p = parse_instance(f, Some(RulesetConfig::QBF)).unwrap();
        assert_eq!(p.config(), RulesetConfig::QBF);
        let (n, g) = parse_formula_file(&write_formula_file(2, p.formula())).unwrap();
        assert_eq!((n, &g), (2, p.formula()));
        let q = parse_instance(FILE, Some("either-anywhere-different".parse().unwrap())).unwrap();
        assert_eq!(q.config().to_string(), "either-anywhere-different");
    }
}
