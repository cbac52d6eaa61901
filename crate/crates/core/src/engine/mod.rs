//! Game positions under the eight toggle rulesets.

pub mod files;
mod position;
mod ruleset;
mod trace;

pub use position::{Move, MoveError, NotTerminal, Position, PositionError};
pub use ruleset::{BooleanChoice, Goal, Locality, Player, RulesetConfig, RulesetParseError};
pub use trace::{GameTrace, IllegalStep, ReplayReport, ReplayStep};
