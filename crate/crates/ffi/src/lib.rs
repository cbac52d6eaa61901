//! C ABI over the `qbf-games` library.
//!
//! Positions are opaque [`QbfPosition`] handles created by one of the
//! constructor functions and released with [`qbf_position_free`]. Every
//! fallible function returns a [`QbfStatus`]; on failure a description is
//! available from [`qbf_last_error`] until the next call on the same thread.
//! Strings returned to the caller are released with [`qbf_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use qbf_games::engine::files;
use qbf_games::engine::{Move, Player, Position, RulesetConfig};
use qbf_games::formula::parse_formula;
use qbf_games::reductions::{
    p2c_to_position, positive_cnf_to_bpad, qbfcnf_to_either_local_same, snort_to_position,
    toy_positive_position, Cnf, Graph, PositiveCnfInstance,
};
use qbf_games::solver::{self, SolveError, SolverOptions};

/// Opaque game position.
pub struct QbfPosition {
    inner: Position,
}

/// Result codes.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QbfStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    IllegalMove = 4,
    NotTerminal = 5,
    BudgetExceeded = 6,
    BufferTooSmall = 7,
    InvalidArgument = 8,
    Panic = 9,
}

/// Source games accepted by [`qbf_reduce`].
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QbfReduction {
    /// Graph text to by-player-anywhere-same.
    Snort = 0,
    /// Graph text to either-anywhere-same.
    ProperTwoColoring = 1,
    /// CNF formula file text to either-local-same.
    QbfCnf = 2,
    /// Positive CNF formula file text to by-player-anywhere-different.
    PositiveCnf = 3,
    /// Positive CNF formula file text to either-anywhere-different.
    ToyPositiveCnf = 4,
}

/// Assignment of `value` to variable `var`.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct QbfMove {
    pub var: usize,
    pub value: bool,
}

/// Solver summary. `winner` is 1 or 2.
#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct QbfSolveResult {
    pub winner: u8,
    pub nodes: u64,
    /// Length of the principal variation, whether or not it fit the buffer.
    pub pv_len: usize,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: impl ToString) {
    let text = message.to_string().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(CString::new(text).expect("nul removed")));
}

fn fail(status: QbfStatus, message: impl ToString) -> QbfStatus {
    set_error(message);
    status
}

fn guard(f: impl FnOnce() -> QbfStatus) -> QbfStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(status) => status,
        Err(_) => fail(QbfStatus::Panic, "internal panic"),
    }
}

unsafe fn text_arg<'a>(s: *const c_char) -> Result<&'a str, QbfStatus> {
    if s.is_null() {
        return Err(fail(QbfStatus::NullPointer, "null string argument"));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| fail(QbfStatus::InvalidUtf8, "string argument is not UTF-8"))
}

unsafe fn position_arg<'a>(p: *const QbfPosition) -> Result<&'a Position, QbfStatus> {
    p.as_ref()
        .map(|h| &h.inner)
        .ok_or_else(|| fail(QbfStatus::NullPointer, "null position handle"))
}

unsafe fn store(out: *mut *mut QbfPosition, p: Position) -> QbfStatus {
    if out.is_null() {
        return fail(QbfStatus::NullPointer, "null output pointer");
    }
    *out = Box::into_raw(Box::new(QbfPosition { inner: p }));
    QbfStatus::Ok
}

fn ruleset_arg(text: Option<&str>) -> Result<Option<RulesetConfig>, QbfStatus> {
    text.map(|t| {
        t.parse::<RulesetConfig>()
            .map_err(|e| fail(QbfStatus::InvalidArgument, e))
    })
    .transpose()
}

fn player_arg(n: u8) -> Result<Player, QbfStatus> {
    Player::from_number(n).ok_or_else(|| {
        fail(
            QbfStatus::InvalidArgument,
            format!("player must be 1 or 2, not {n}"),
        )
    })
}

macro_rules! tri {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(status) => return status,
        }
    };
}

/// Parses a position file, or a formula file when `ruleset` is non-null.
/// A non-null `ruleset` also overrides the ruleset line of a position file.
///
/// # Safety
/// `text` must be a NUL-terminated string, `ruleset` null or NUL-terminated,
/// and `out` a valid pointer to write the new handle to.
#[no_mangle]
pub unsafe extern "C" fn qbf_position_parse(
    text: *const c_char,
    ruleset: *const c_char,
    out: *mut *mut QbfPosition,
) -> QbfStatus {
    guard(|| {
        let text = tri!(text_arg(text));
        let ruleset = if ruleset.is_null() {
            None
        } else {
            tri!(ruleset_arg(Some(tri!(text_arg(ruleset)))))
        };
        match files::parse_instance(text, ruleset) {
            Ok(p) => store(out, p),
            Err(e) => fail(QbfStatus::ParseError, e),
        }
    })
}

/// Builds the initial position of `formula` over `n` variables.
///
/// # Safety
/// `formula` and `ruleset` must be NUL-terminated strings and `out` a valid
/// pointer to write the new handle to.
#[no_mangle]
pub unsafe extern "C" fn qbf_position_new(
    formula: *const c_char,
    n: usize,
    ruleset: *const c_char,
    out: *mut *mut QbfPosition,
) -> QbfStatus {
    guard(|| {
        let text = tri!(text_arg(formula));
        let config = tri!(ruleset_arg(Some(tri!(text_arg(ruleset))))).expect("some");
        let f = match parse_formula(text, n) {
            Ok(f) => f,
            Err(e) => return fail(QbfStatus::ParseError, e),
        };
        match Position::new(f, n, config) {
            Ok(p) => store(out, p),
            Err(e) => fail(QbfStatus::InvalidArgument, e),
        }
    })
}

/// Copies a position.
///
/// # Safety
/// `p` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn qbf_position_clone(
    p: *const QbfPosition,
    out: *mut *mut QbfPosition,
) -> QbfStatus {
    guard(|| {
        let p = tri!(position_arg(p));
        store(out, p.clone())
    })
}

/// Releases a handle. Null is ignored.
///
/// # Safety
/// `p` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn qbf_position_free(p: *mut QbfPosition) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Serializes a position in the position file format. Returns null on
/// failure; free the result with [`qbf_string_free`].
///
/// # Safety
/// `p` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn qbf_position_to_text(p: *const QbfPosition) -> *mut c_char {
    let mut result = ptr::null_mut();
    guard(|| {
        let p = tri!(position_arg(p));
        let text = files::write_position(p);
        result = CString::new(text).expect("no interior nul").into_raw();
        QbfStatus::Ok
    });
    result
}

/// Writes the simplified formula. Returns null on failure; free the result
/// with [`qbf_string_free`].
///
/// # Safety
/// `p` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn qbf_position_simplified(p: *const QbfPosition) -> *mut c_char {
    let mut result = ptr::null_mut();
    guard(|| {
        let p = tri!(position_arg(p));
        result = CString::new(p.simplified().to_string())
            .expect("no interior nul")
            .into_raw();
        QbfStatus::Ok
    });
    result
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must be null or a string from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn qbf_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Number of variables, or 0 for a null handle.
///
/// # Safety
/// `p` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn qbf_position_num_vars(p: *const QbfPosition) -> usize {
    p.as_ref().map_or(0, |h| h.inner.n())
}

/// Player to move (1 or 2), or 0 for a null handle.
///
/// # Safety
/// `p` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn qbf_position_mover(p: *const QbfPosition) -> u8 {
    p.as_ref().map_or(0, |h| h.inner.mover().number())
}

/// Writes the legal moves to `buf` in ascending variable order, false
/// before true. `*count` always receives the number of legal moves; when it
/// exceeds `capacity` nothing is written and `BufferTooSmall` is returned.
///
/// # Safety
/// `p` must be a live handle, `count` valid, and `buf` valid for `capacity`
/// elements (it may be null when `capacity` is 0).
#[no_mangle]
pub unsafe extern "C" fn qbf_position_legal_moves(
    p: *const QbfPosition,
    buf: *mut QbfMove,
    capacity: usize,
    count: *mut usize,
) -> QbfStatus {
    guard(|| {
        let p = tri!(position_arg(p));
        if count.is_null() {
            return fail(QbfStatus::NullPointer, "null count pointer");
        }
        let moves = p.legal_moves();
        *count = moves.len();
        write_moves(&moves, buf, capacity)
    })
}

unsafe fn write_moves(moves: &[Move], buf: *mut QbfMove, capacity: usize) -> QbfStatus {
    if moves.len() > capacity {
        return fail(
            QbfStatus::BufferTooSmall,
            format!("need room for {} moves, have {capacity}", moves.len()),
        );
    }
    if moves.is_empty() {
        return QbfStatus::Ok;
    }
    if buf.is_null() {
        return fail(QbfStatus::NullPointer, "null move buffer");
    }
    for (i, m) in moves.iter().enumerate() {
        *buf.add(i) = QbfMove {
            var: m.var,
            value: m.value,
        };
    }
    QbfStatus::Ok
}

/// Plays a move in place. On `IllegalMove` the position is unchanged.
///
/// # Safety
/// `p` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn qbf_position_apply(
    p: *mut QbfPosition,
    var: usize,
    value: bool,
) -> QbfStatus {
    guard(|| {
        let Some(handle) = p.as_mut() else {
            return fail(QbfStatus::NullPointer, "null position handle");
        };
        match handle.inner.apply_move(Move::new(var, value)) {
            Ok(next) => {
                handle.inner = next;
                QbfStatus::Ok
            }
            Err(e) => fail(QbfStatus::IllegalMove, e),
        }
    })
}

/// Writes whether the game is over.
///
/// # Safety
/// `p` must be a live handle and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn qbf_position_is_terminal(
    p: *const QbfPosition,
    out: *mut bool,
) -> QbfStatus {
    guard(|| {
        let p = tri!(position_arg(p));
        if out.is_null() {
            return fail(QbfStatus::NullPointer, "null output pointer");
        }
        *out = p.is_terminal();
        QbfStatus::Ok
    })
}

/// Writes the winner (1 or 2) of a finished game.
///
/// # Safety
/// `p` must be a live handle and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn qbf_position_winner(p: *const QbfPosition, out: *mut u8) -> QbfStatus {
    guard(|| {
        let p = tri!(position_arg(p));
        if out.is_null() {
            return fail(QbfStatus::NullPointer, "null output pointer");
        }
        match p.winner() {
            Ok(w) => {
                *out = w.number();
                QbfStatus::Ok
            }
            Err(e) => fail(QbfStatus::NotTerminal, e),
        }
    })
}

/// Solves a position under optimal play. A `node_budget` of 0 selects the
/// default. When `pv_buf` is non-null and large enough the principal
/// variation is copied into it; `result.pv_len` always holds its length.
///
/// # Safety
/// `p` must be a live handle, `result` valid, and `pv_buf` null or valid for
/// `pv_capacity` elements.
#[no_mangle]
pub unsafe extern "C" fn qbf_solve(
    p: *const QbfPosition,
    node_budget: u64,
    result: *mut QbfSolveResult,
    pv_buf: *mut QbfMove,
    pv_capacity: usize,
) -> QbfStatus {
    guard(|| {
        let p = tri!(position_arg(p));
        if result.is_null() {
            return fail(QbfStatus::NullPointer, "null result pointer");
        }
        let mut opts = SolverOptions::default();
        if node_budget > 0 {
            opts.node_budget = node_budget;
        }
        let outcome = match solver::solve_with(p, &opts) {
            Ok(o) => o,
            Err(e @ SolveError::BudgetExceeded { .. }) => {
                return fail(QbfStatus::BudgetExceeded, e)
            }
            Err(e) => return fail(QbfStatus::InvalidArgument, e),
        };
        let pv = outcome.principal_variation.unwrap_or_default();
        *result = QbfSolveResult {
            winner: outcome.winner.number(),
            nodes: outcome.nodes,
            pv_len: pv.len(),
        };
        if pv_buf.is_null() {
            QbfStatus::Ok
        } else {
            write_moves(&pv, pv_buf, pv_capacity)
        }
    })
}

/// Reduces a source-game instance to a position. `first_mover` (1 or 2)
/// picks who starts Snort and the Positive CNF games; Proper 2-Coloring
/// and QBF ignore it.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn qbf_reduce(
    kind: QbfReduction,
    text: *const c_char,
    first_mover: u8,
    out: *mut *mut QbfPosition,
) -> QbfStatus {
    guard(|| {
        let text = tri!(text_arg(text));
        let first = tri!(player_arg(first_mover));
        let parse = |e: &dyn std::fmt::Display| fail(QbfStatus::ParseError, e);
        let position = match kind {
            QbfReduction::Snort | QbfReduction::ProperTwoColoring => {
                let g = match Graph::parse(text) {
                    Ok(g) => g,
                    Err(e) => return parse(&e),
                };
                let reduced = if kind == QbfReduction::Snort {
                    snort_to_position(&g, first)
                } else {
                    p2c_to_position(&g)
                };
                match reduced {
                    Ok(p) => p,
                    Err(e) => return fail(QbfStatus::InvalidArgument, e),
                }
            }
            _ => {
                let (n, f) = match files::parse_formula_file(text) {
                    Ok(v) => v,
                    Err(e) => return parse(&e),
                };
                if kind == QbfReduction::QbfCnf {
                    match Cnf::from_formula(&f, n) {
                        Ok(cnf) => qbfcnf_to_either_local_same(&cnf),
                        Err(e) => return fail(QbfStatus::InvalidArgument, e),
                    }
                } else {
                    let inst = match PositiveCnfInstance::from_formula(&f, n) {
                        Ok(i) => i,
                        Err(e) => return fail(QbfStatus::InvalidArgument, e),
                    };
                    if kind == QbfReduction::PositiveCnf {
                        positive_cnf_to_bpad(&inst, first)
                    } else {
                        toy_positive_position(&inst, first)
                    }
                }
            }
        };
        store(out, position)
    })
}

/// Description of the last failure on this thread, or null. The pointer
/// stays valid until the next library call on the same thread.
#[no_mangle]
pub extern "C" fn qbf_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}
