use std::ffi::{CStr, CString};
use std::process::Command;
use std::ptr;

use qbf_games_ffi::*;

const SAMPLE: &str = "(and (or (not x0) x3 (not x1)) (or x2 x1 (not x6)) (or x4 (not x6) x0) (or (not x2) (not x4) x3))";

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

fn last_error() -> String {
    let p = qbf_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_owned()
}

fn new_position(formula: &str, n: usize, ruleset: &str) -> *mut QbfPosition {
    let mut p = ptr::null_mut();
    let status = unsafe { qbf_position_new(c(formula).as_ptr(), n, c(ruleset).as_ptr(), &mut p) };
    assert_eq!(status, QbfStatus::Ok);
    p
}

#[test]
fn build_play_and_inspect() {
    let p = new_position(SAMPLE, 7, "by-player-local-same");
    unsafe {
        assert_eq!(qbf_position_num_vars(p), 7);
        assert_eq!(qbf_position_mover(p), 1);
        let mut buf = [QbfMove {
            var: 0,
            value: false,
        }; 16];
        let mut count = 0;
        assert_eq!(
            qbf_position_legal_moves(p, buf.as_mut_ptr(), buf.len(), &mut count),
            QbfStatus::Ok
        );
        assert_eq!(count, 1);
        assert_eq!(
            buf[0],
            QbfMove {
                var: 0,
                value: true
            }
        );

        assert_eq!(qbf_position_apply(p, 1, false), QbfStatus::IllegalMove);
        assert!(last_error().contains("x1"));
        for (var, value) in [(0, true), (1, false), (2, true), (3, false)] {
            assert_eq!(qbf_position_apply(p, var, value), QbfStatus::Ok);
        }
        let mut done = false;
        assert_eq!(qbf_position_is_terminal(p, &mut done), QbfStatus::Ok);
        assert!(done);
        let mut winner = 0;
        assert_eq!(qbf_position_winner(p, &mut winner), QbfStatus::Ok);
        assert_eq!(winner, 2);

        let s = qbf_position_simplified(p);
        assert_eq!(CStr::from_ptr(s).to_str().unwrap(), "(not x4)");
        qbf_string_free(s);
        qbf_position_free(p);
    }
}

#[test]
fn legal_moves_reports_small_buffer() {
    let p = new_position("(or x0 x1)", 2, "either-anywhere-different");
    unsafe {
        let mut count = 0;
        assert_eq!(
            qbf_position_legal_moves(p, ptr::null_mut(), 0, &mut count),
            QbfStatus::BufferTooSmall
        );
        assert_eq!(count, 4);
        let mut buf = vec![
            QbfMove {
                var: 0,
                value: false
            };
            count
        ];
        assert_eq!(
            qbf_position_legal_moves(p, buf.as_mut_ptr(), count, &mut count),
            QbfStatus::Ok
        );
        assert_eq!(
            buf[1],
            QbfMove {
                var: 0,
                value: true
            }
        );
        let mut winner = 0;
        assert_eq!(qbf_position_winner(p, &mut winner), QbfStatus::NotTerminal);
        qbf_position_free(p);
    }
}

#[test]
fn solve_with_principal_variation() {
    let p = new_position(SAMPLE, 7, "either-local-different");
    unsafe {
        let mut result = QbfSolveResult::default();
        let mut pv = [QbfMove {
            var: 0,
            value: false,
        }; 7];
        assert_eq!(
            qbf_solve(p, 0, &mut result, pv.as_mut_ptr(), pv.len()),
            QbfStatus::Ok
        );
        assert!(result.winner == 1 || result.winner == 2);
        assert_eq!(result.pv_len, 7);
        assert!(result.nodes > 0);
        let mut q = ptr::null_mut();
        assert_eq!(qbf_position_clone(p, &mut q), QbfStatus::Ok);
        for m in &pv {
            assert_eq!(qbf_position_apply(q, m.var, m.value), QbfStatus::Ok);
        }
        let mut winner = 0;
        assert_eq!(qbf_position_winner(q, &mut winner), QbfStatus::Ok);
        assert_eq!(winner, result.winner);
        assert_eq!(
            qbf_solve(p, 3, &mut result, ptr::null_mut(), 0),
            QbfStatus::BudgetExceeded
        );
        qbf_position_free(q);
        qbf_position_free(p);
    }
}

#[test]
fn parse_text_round_trip() {
    let text = c("ruleset either anywhere same\nvars 2\nassigned 1=F\n(or x0 x1)\n");
    unsafe {
        let mut p = ptr::null_mut();
        assert_eq!(
            qbf_position_parse(text.as_ptr(), ptr::null(), &mut p),
            QbfStatus::Ok
        );
        let s = qbf_position_to_text(p);
        assert_eq!(CStr::from_ptr(s), text.as_c_str());
        qbf_string_free(s);
        qbf_position_free(p);

        let mut q = ptr::null_mut();
        let formula_file = c("vars 2\n(or x0 x1)\n");
        assert_eq!(
            qbf_position_parse(formula_file.as_ptr(), ptr::null(), &mut q),
            QbfStatus::ParseError
        );
        assert_eq!(
            qbf_position_parse(
                formula_file.as_ptr(),
                c("by-player-local-different").as_ptr(),
                &mut q
            ),
            QbfStatus::Ok
        );
        qbf_position_free(q);
        assert_eq!(
            qbf_position_parse(
                c("vars 2\n(or x0 x9)\n").as_ptr(),
                c("either-local-same").as_ptr(),
                &mut q
            ),
            QbfStatus::ParseError
        );
        assert!(last_error().contains("x9"));
    }
}

#[test]
fn reductions() {
    unsafe {
        let mut p = ptr::null_mut();
        assert_eq!(
            qbf_reduce(
                QbfReduction::Snort,
                c("graph 2\ne 0 1\n").as_ptr(),
                1,
                &mut p
            ),
            QbfStatus::Ok
        );
        let s = qbf_position_simplified(p);
        assert_eq!(
            CStr::from_ptr(s).to_str().unwrap(),
            "(and (or x0 (not x1)) (or (not x0) x1))"
        );
        qbf_string_free(s);
        qbf_position_free(p);

        assert_eq!(
            qbf_reduce(
                QbfReduction::QbfCnf,
                c("vars 2\n(or x0 x1)\n").as_ptr(),
                1,
                &mut p
            ),
            QbfStatus::Ok
        );
        assert_eq!(qbf_position_num_vars(p), 3);
        qbf_position_free(p);

        assert_eq!(
            qbf_reduce(
                QbfReduction::PositiveCnf,
                c("vars 2\n(or x0 (not x1))\n").as_ptr(),
                1,
                &mut p
            ),
            QbfStatus::InvalidArgument
        );
        assert_eq!(
            qbf_reduce(
                QbfReduction::ProperTwoColoring,
                c("graph 2\n").as_ptr(),
                3,
                &mut p
            ),
            QbfStatus::InvalidArgument
        );
    }
}

#[test]
fn null_arguments_are_rejected() {
    unsafe {
        let mut p = ptr::null_mut();
        assert_eq!(
            qbf_position_parse(ptr::null(), ptr::null(), &mut p),
            QbfStatus::NullPointer
        );
        assert_eq!(
            qbf_position_apply(ptr::null_mut(), 0, true),
            QbfStatus::NullPointer
        );
        assert_eq!(qbf_position_num_vars(ptr::null()), 0);
        assert!(qbf_position_to_text(ptr::null()).is_null());
        qbf_position_free(ptr::null_mut());
        qbf_string_free(ptr::null_mut());
        let bad = [0xffu8, 0];
        assert_eq!(
            qbf_position_parse(bad.as_ptr().cast(), ptr::null(), &mut p),
            QbfStatus::InvalidUtf8
        );
    }
}

#[test]
fn header_compiles_as_c() {
    let header = concat!(env!("CARGO_MANIFEST_DIR"), "/include/qbf_games.h");
    let source = format!("#include \"{header}\"\nint main(void) {{ return QBF_STATUS_OK; }}\n");
    let dir = std::env::temp_dir().join(format!("qbf_games_header_{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let file = dir.join("check.c");
    std::fs::write(&file, source).unwrap();
    match Command::new("cc")
        .args(["-std=c99", "-Wall", "-Werror", "-fsyntax-only"])
        .arg(&file)
        .output()
    {
        Ok(out) => assert!(
            out.status.success(),
            "{}",
            String::from_utf8_lossy(&out.stderr)
        ),
        Err(_) => eprintln!("no C compiler found; header check skipped"),
    }
}
