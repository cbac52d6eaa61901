//! Combinatorial games played by assigning Boolean variables.
//!
//! Three toggles (play location, Boolean choice, goal) span eight rulesets,
//! classic QBF among them. The crate parses and partially evaluates
//! formulas, plays and replays games under any ruleset, solves positions
//! exactly, and builds positions from Snort, Proper 2-Coloring, QBF-CNF and
//! Positive CNF instances so that winners can be compared by solving both
//! sides.

pub mod assignment;
pub mod cli;
pub mod engine;
pub mod formula;
pub mod gen;
pub mod reductions;
pub mod solver;

pub use assignment::{Assignment, TernaryValue};
pub use engine::{GameTrace, Move, Player, Position, RulesetConfig};
pub use formula::{parse_formula, Formula};
