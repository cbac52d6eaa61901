//! Seeded random instances. Every generator draws from a caller-supplied
//! RNG; [`rng`] builds the standard one from a 64-bit seed.

use rand::seq::index::sample;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::engine::{Position, RulesetConfig};
use crate::formula::Formula;
use crate::reductions::{Cnf, Graph, Literal, PositiveCnfInstance};

pub type GenRng = ChaCha8Rng;

pub fn rng(seed: u64) -> GenRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `c` clauses of `min(w, n)` distinct variables each, randomly negated.
pub fn random_cnf(rng: &mut impl Rng, n: usize, c: usize, w: usize) -> Cnf {
    let w = w.min(n);
    let clauses = if w == 0 {
        Vec::new()
    } else {
        (0..c)
            .map(|_| {
                let mut vars = sample(rng, n, w).into_vec();
                vars.sort_unstable();
                vars.into_iter()
                    .map(|var| Literal {
                        var,
                        negated: rng.gen(),
                    })
                    .collect()
            })
            .collect()
    };
    Cnf::new(n, clauses).expect("generated clauses are in range")
}

/// `c` negation-free clauses of `min(w, n, 3)` distinct variables.
pub fn random_positive(rng: &mut impl Rng, n: usize, c: usize, w: usize) -> PositiveCnfInstance {
    let w = w.min(n).min(3);
    let clauses = if w == 0 {
        Vec::new()
    } else {
        (0..c)
            .map(|_| {
                let mut vars = sample(rng, n, w).into_vec();
                vars.sort_unstable();
                vars
            })
            .collect()
    };
    PositiveCnfInstance::new(n, clauses).expect("generated clauses are valid")
}

/// Erdős–Rényi graph: each of the `n(n-1)/2` edges present with
/// probability `p`.
pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut g = Graph::new(n);
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(i, j).expect("in range");
            }
        }
    }
    g
}

/// Random formula tree over `n` variables with at most `depth` levels of
/// connectives. Leaves are mostly literals, occasionally constants.
pub fn random_formula(rng: &mut impl Rng, n: usize, depth: usize) -> Formula {
    let leaf = |rng: &mut dyn rand::RngCore| {
        if n == 0 || rng.gen_ratio(1, 10) {
            Formula::Const(rng.gen())
        } else {
            Formula::lit(rng.gen_range(0..n), rng.gen())
        }
    };
    if depth == 0 || rng.gen_ratio(1, 4) {
        return leaf(rng);
    }
    match rng.gen_range(0..5) {
        0 => Formula::not(random_formula(rng, n, depth - 1)),
        k => {
            let count = rng.gen_range(1..=3);
            let children = (0..count)
                .map(|_| random_formula(rng, n, depth - 1))
                .collect();
            if k % 2 == 0 {
                Formula::And(children)
            } else {
                Formula::Or(children)
            }
        }
    }
}

/// A position reached by random legal play from the initial position of a
/// random 3-CNF over `n` variables with `c` clauses.
pub fn random_position(rng: &mut impl Rng, n: usize, c: usize, config: RulesetConfig) -> Position {
    let cnf = random_cnf(rng, n, c, 3);
    let mut p = Position::new(cnf.to_formula(), n, config).expect("in range");
    let steps = rng.gen_range(0..=n);
    for _ in 0..steps {
        let moves = p.legal_moves();
        let Some(&m) = moves.choose(rng) else { break };
        p = p.play_unchecked(m);
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cnf_shape() {
        let cnf = random_cnf(&mut rng(1), 7, 4, 3);
        assert_eq!(cnf.n, 7);
        assert_eq!(cnf.clauses.len(), 4);
        for c in &cnf.clauses {
            assert_eq!(c.len(), 3);
            assert!(c.windows(2).all(|w| w[0].var < w[1].var));
        }
    }

    #[test]
    fn deterministic() {
        assert_eq!(
            random_cnf(&mut rng(9), 6, 5, 3),
            random_cnf(&mut rng(9), 6, 5, 3)
        );
        assert_eq!(
            random_graph(&mut rng(7), 5, 0.5),
            random_graph(&mut rng(7), 5, 0.5)
        );
    }

    #[test]
    fn narrow_inputs() {
        assert!(random_cnf(&mut rng(0), 0, 3, 3).clauses.is_empty());
        let p = random_positive(&mut rng(0), 2, 3, 5);
        assert!(p.clauses.iter().all(|c| c.len() == 2));
    }

    #[test]
    fn random_positions_are_valid() {
        let mut r = rng(3);
        for c in RulesetConfig::all() {
            let p = random_position(&mut r, 6, 4, c);
            assert!(p.assignment().assigned_count() <= 6);
        }
    }
}
