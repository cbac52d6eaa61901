//! Process exit codes.

/// Success; for `verify`, every instance agreed.
pub const OK: i32 = 0;
/// File could not be read or written, or interactive input ended.
pub const IO: i32 = 1;
/// Malformed file, invalid instance, or bad parameters.
pub const INVALID_INPUT: i32 = 2;
/// Solver node budget exceeded.
pub const BUDGET_EXCEEDED: i32 = 3;
/// A replayed trace contains an illegal move.
pub const ILLEGAL_MOVE: i32 = 4;
/// `verify` found a disagreement.
pub const DISAGREEMENT: i32 = 5;
