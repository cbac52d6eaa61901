use thiserror::Error;

use super::Formula;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub kind: ParseErrorKind,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("unexpected end of input")]
    UnexpectedEof,
    #[error("unexpected `{0}`")]
    Unexpected(String),
    #[error("unknown operator `{0}`")]
    UnknownOperator(String),
    #[error("`{0}` needs at least one operand")]
    MissingOperand(&'static str),
    #[error("`not` takes exactly one operand")]
    NotArity,
    #[error("malformed variable `{0}`")]
    BadVariable(String),
    #[error("variable x{var} out of range for {n} variables")]
    VariableOutOfRange { var: usize, n: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Open,
    Close,
    Atom(String),
}

#[derive(Clone, Debug)]
struct Token {
    tok: Tok,
    line: usize,
    column: usize,
}

fn tokenize(text: &str) -> Vec<Token> {
    let mut out = Vec::new();
    let mut line = 1;
    let mut column = 1;
    let mut atom = String::new();
    let mut atom_pos = (1, 1);
    let flush = |atom: &mut String, pos: (usize, usize), out: &mut Vec<Token>| {
        if !atom.is_empty() {
            out.push(Token {
                tok: Tok::Atom(std::mem::take(atom)),
                line: pos.0,
                column: pos.1,
            });
        }
    };
    for ch in text.chars() {
        match ch {
            '(' | ')' => {
                flush(&mut atom, atom_pos, &mut out);
                out.push(Token {
                    tok: if ch == '(' { Tok::Open } else { Tok::Close },
                    line,
                    column,
                });
            }
            c if c.is_whitespace() => flush(&mut atom, atom_pos, &mut out),
            c => {
                if atom.is_empty() {
                    atom_pos = (line, column);
                }
                atom.push(c);
            }
        }
        if ch == '\n' {
            line += 1;
            column = 1;
        } else {
            column += 1;
        }
    }
    flush(&mut atom, atom_pos, &mut out);
    out
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
    n: usize,
    end: (usize, usize),
}

impl Parser {
    fn err_at(&self, idx: usize, kind: ParseErrorKind) -> ParseError {
        let (line, column) = self
            .tokens
            .get(idx)
            .map(|t| (t.line, t.column))
            .unwrap_or(self.end);
        ParseError { line, column, kind }
    }

    fn next(&mut self) -> Result<(usize, Tok), ParseError> {
        let idx = self.pos;
        match self.tokens.get(idx) {
            Some(t) => {
                self.pos += 1;
                Ok((idx, t.tok.clone()))
            }
            None => Err(self.err_at(idx, ParseErrorKind::UnexpectedEof)),
        }
    }

    fn peek_close(&self) -> bool {
        matches!(
            self.tokens.get(self.pos),
            Some(Token {
                tok: Tok::Close,
                ..
            })
        )
    }

    fn formula(&mut self) -> Result<Formula, ParseError> {
        let (idx, tok) = self.next()?;
        match tok {
            Tok::Close => Err(self.err_at(idx, ParseErrorKind::Unexpected(")".into()))),
            Tok::Atom(a) => self.atom(idx, &a),
            Tok::Open => {
                let (op_idx, op) = self.next()?;
                let op = match op {
                    Tok::Atom(op) => op,
                    Tok::Open => {
                        return Err(self.err_at(op_idx, ParseErrorKind::Unexpected("(".into())))
                    }
                    Tok::Close => {
                        return Err(self.err_at(op_idx, ParseErrorKind::Unexpected(")".into())))
                    }
                };
                match op.as_str() {
                    "not" => {
                        if self.peek_close() {
                            return Err(self.err_at(self.pos, ParseErrorKind::NotArity));
                        }
                        let child = self.formula()?;
                        let (close_idx, close) = self.next()?;
                        if close != Tok::Close {
                            return Err(self.err_at(close_idx, ParseErrorKind::NotArity));
                        }
                        Ok(match child {
                            Formula::Lit {
                                var,
                                negated: false,
                            } => Formula::neg(var),
                            other => Formula::Not(Box::new(other)),
                        })
                    }
                    "and" | "or" => {
                        let name = if op == "and" { "and" } else { "or" };
                        let mut children = Vec::new();
                        loop {
                            if self.peek_close() {
                                self.pos += 1;
                                break;
                            }
                            children.push(self.formula()?);
                        }
                        if children.is_empty() {
                            return Err(self.err_at(op_idx, ParseErrorKind::MissingOperand(name)));
                        }
                        Ok(if name == "and" {
                            Formula::And(children)
                        } else {
                            Formula::Or(children)
                        })
                    }
                    _ => Err(self.err_at(op_idx, ParseErrorKind::UnknownOperator(op))),
                }
            }
        }
    }

    fn atom(&self, idx: usize, a: &str) -> Result<Formula, ParseError> {
        match a {
            "true" => Ok(Formula::Const(true)),
            "false" => Ok(Formula::Const(false)),
            _ => {
                let digits = a
                    .strip_prefix('x')
                    .filter(|d| !d.is_empty() && d.bytes().all(|b| b.is_ascii_digit()))
                    .ok_or_else(|| self.err_at(idx, ParseErrorKind::BadVariable(a.into())))?;
                let var: usize = digits
                    .parse()
                    .map_err(|_| self.err_at(idx, ParseErrorKind::BadVariable(a.into())))?;
                if var >= self.n {
                    return Err(
                        self.err_at(idx, ParseErrorKind::VariableOutOfRange { var, n: self.n })
                    );
                }
                Ok(Formula::var(var))
            }
        }
    }
}

/// Parses the prefix syntax:
///
/// ```text
/// formula := "x" digits | "(not " formula ")" | "(and " formula+ ")"
///          | "(or " formula+ ")" | "true" | "false"
/// ```
///
/// `(not xN)` yields a negated literal. Every variable index must be `< n`.
pub fn parse_formula(text: &str, n: usize) -> Result<Formula, ParseError> {
    let tokens = tokenize(text);
    let end = text.lines().count().max(1);
    let end_col = text.lines().last().map_or(1, |l| l.chars().count() + 1);
    let mut p = Parser {
        tokens,
        pos: 0,
        n,
        end: (end, end_col),
    };
    let f = p.formula()?;
    if p.pos < p.tokens.len() {
        let t = &p.tokens[p.pos];
        let shown = match &t.tok {
            Tok::Open => "(".to_string(),
            Tok::Close => ")".to_string(),
            Tok::Atom(a) => a.clone(),
        };
        return Err(p.err_at(p.pos, ParseErrorKind::Unexpected(shown)));
    }
    Ok(f)
}
