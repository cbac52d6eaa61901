#![allow(dead_code)]

use std::path::PathBuf;

use qbf_games::{Assignment, Formula, TernaryValue};

pub const SAMPLE: &str = "(and (or (not x0) x3 (not x1)) (or x2 x1 (not x6)) (or x4 (not x6) x0) (or (not x2) (not x4) x3))";

pub fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(name)
}

/// Every formula over `vars` variables built from exactly `k` connectives,
/// where a connective is `Not` or a binary `And`/`Or`. Leaves are the two
/// constants and the positive literals; negated literals appear both as
/// `Not(Lit)` and as a negated `Lit` leaf (which counts as one connective).
pub fn formulas_with(vars: usize, k: usize) -> Vec<Formula> {
    let mut by_size: Vec<Vec<Formula>> = Vec::new();
    for size in 0..=k {
        let mut level = Vec::new();
        if size == 0 {
            level.push(Formula::Const(false));
            level.push(Formula::Const(true));
            level.extend((0..vars).map(Formula::var));
        } else {
            if size == 1 {
                level.extend((0..vars).map(Formula::neg));
            }
            for f in &by_size[size - 1] {
                level.push(Formula::Not(Box::new(f.clone())));
            }
            for left in 0..size {
                let right = size - 1 - left;
                for a in &by_size[left] {
                    for b in &by_size[right] {
                        level.push(Formula::And(vec![a.clone(), b.clone()]));
                        level.push(Formula::Or(vec![a.clone(), b.clone()]));
                    }
                }
            }
        }
        by_size.push(level);
    }
    by_size.swap_remove(k)
}

/// Every formula with at most `max_k` connectives.
pub fn formulas_up_to(vars: usize, max_k: usize) -> Vec<Formula> {
    (0..=max_k).flat_map(|k| formulas_with(vars, k)).collect()
}

/// All `3^vars` partial assignments.
pub fn partial_assignments(vars: usize) -> Vec<Assignment> {
    let total = 3usize.pow(vars as u32);
    (0..total)
        .map(|mut code| {
            let values = (0..vars)
                .map(|_| {
                    let v = match code % 3 {
                        0 => TernaryValue::Unassigned,
                        1 => TernaryValue::False,
                        _ => TernaryValue::True,
                    };
                    code /= 3;
                    v
                })
                .collect();
            Assignment::from_values(values)
        })
        .collect()
}

/// Truth table over all `2^vars` complete assignments (`vars <= 6`), bit `i` set when the
/// assignment with `x_j = (i >> j) & 1` satisfies `f`.
pub fn truth_table(f: &Formula, vars: usize) -> u64 {
    (0..1u64 << vars).fold(0, |acc, i| {
        let a = Assignment::from_bools(&(0..vars).map(|j| i >> j & 1 == 1).collect::<Vec<_>>());
        if f.evaluate(&a).expect("complete") {
            acc | 1 << i
        } else {
            acc
        }
    })
}

/// Bit mask of the complete assignments extending `a`.
pub fn completions_mask(a: &Assignment) -> u64 {
    let vars = a.len();
    (0..1u64 << vars).fold(0, |acc, i| {
        let consistent = (0..vars).all(|j| match a.get(j) {
            TernaryValue::Unassigned => true,
            TernaryValue::True => i >> j & 1 == 1,
            TernaryValue::False => i >> j & 1 == 0,
        });
        if consistent {
            acc | 1 << i
        } else {
            acc
        }
    })
}
