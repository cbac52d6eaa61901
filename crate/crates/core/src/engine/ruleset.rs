use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Where the mover may play.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Locality {
    /// Only the lowest-indexed unassigned variable.
    Local,
    /// Any unassigned variable.
    Anywhere,
}

/// Which values the mover may assign.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BooleanChoice {
    /// Either value.
    Either,
    /// P1 assigns only true, P2 only false.
    ByPlayer,
}

/// How the game ends.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Goal {
    /// All variables get assigned; P1 wins iff the formula is true.
    Different,
    /// Moves leaving the formula blatantly false are illegal; a player
    /// without a legal move loses.
    Same,
}

/// One of the eight rulesets spanned by the three toggles.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RulesetConfig {
    pub locality: Locality,
    pub choice: BooleanChoice,
    pub goal: Goal,
}

impl RulesetConfig {
    pub const fn new(choice: BooleanChoice, locality: Locality, goal: Goal) -> Self {
        RulesetConfig {
            locality,
            choice,
            goal,
        }
    }

    /// Classic QBF: either-local-different.
    pub const QBF: RulesetConfig =
        RulesetConfig::new(BooleanChoice::Either, Locality::Local, Goal::Different);

    /// All eight rulesets, by-player rows first.
    pub fn all() -> [RulesetConfig; 8] {
        use BooleanChoice::*;
        use Goal::*;
        use Locality::*;
        [
            RulesetConfig::new(ByPlayer, Local, Same),
            RulesetConfig::new(ByPlayer, Local, Different),
            RulesetConfig::new(ByPlayer, Anywhere, Same),
            RulesetConfig::new(ByPlayer, Anywhere, Different),
            RulesetConfig::new(Either, Local, Same),
            RulesetConfig::new(Either, Local, Different),
            RulesetConfig::new(Either, Anywhere, Same),
            RulesetConfig::new(Either, Anywhere, Different),
        ]
    }

    /// The two rulesets where neither location nor value is a choice.
    pub fn is_by_player_local(&self) -> bool {
        self.choice == BooleanChoice::ByPlayer && self.locality == Locality::Local
    }

    /// Parses the three words of a position file's `ruleset` line.
    pub fn from_words(choice: &str, locality: &str, goal: &str) -> Result<Self, RulesetParseError> {
        let bad = || RulesetParseError(format!("{choice} {locality} {goal}"));
        let choice = match choice {
            "either" => BooleanChoice::Either,
            "by-player" => BooleanChoice::ByPlayer,
            _ => return Err(bad()),
        };
        let locality = match locality {
            "local" => Locality::Local,
            "anywhere" => Locality::Anywhere,
            _ => return Err(bad()),
        };
        let goal = match goal {
            "same" => Goal::Same,
            "different" => Goal::Different,
            _ => return Err(bad()),
        };
        Ok(RulesetConfig::new(choice, locality, goal))
    }

    pub fn words(&self) -> [&'static str; 3] {
        [
            match self.choice {
                BooleanChoice::Either => "either",
                BooleanChoice::ByPlayer => "by-player",
            },
            match self.locality {
                Locality::Local => "local",
                Locality::Anywhere => "anywhere",
            },
            match self.goal {
                Goal::Same => "same",
                Goal::Different => "different",
            },
        ]
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("unknown ruleset `{0}`")]
pub struct RulesetParseError(pub String);

impl fmt::Display for RulesetConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [c, l, g] = self.words();
        write!(f, "{c}-{l}-{g}")
    }
}

impl FromStr for RulesetConfig {
    type Err = RulesetParseError;

    /// Accepts `either-local-same` style names.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (choice, rest) = if let Some(rest) = s.strip_prefix("by-player-") {
            ("by-player", rest)
        } else if let Some(rest) = s.strip_prefix("either-") {
            ("either", rest)
        } else {
            return Err(RulesetParseError(s.into()));
        };
        let (locality, goal) = rest
            .split_once('-')
            .ok_or_else(|| RulesetParseError(s.into()))?;
        RulesetConfig::from_words(choice, locality, goal).map_err(|_| RulesetParseError(s.into()))
    }
}

/// P1 (Even/True) always moves first from an initial position.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Player {
    P1,
    P2,
}

impl Player {
    pub fn opponent(self) -> Player {
        match self {
            Player::P1 => Player::P2,
            Player::P2 => Player::P1,
        }
    }

    /// Value this player assigns under by-player choice.
    pub fn identity_value(self) -> bool {
        self == Player::P1
    }

    pub fn number(self) -> u8 {
        match self {
            Player::P1 => 1,
            Player::P2 => 2,
        }
    }

    pub fn from_number(n: u8) -> Option<Player> {
        match n {
            1 => Some(Player::P1),
            2 => Some(Player::P2),
            _ => None,
        }
    }

    /// Role name under `config`: True/False for by-player choice,
    /// Even/Odd otherwise.
    pub fn role(self, config: &RulesetConfig) -> &'static str {
        match (config.choice, self) {
            (BooleanChoice::ByPlayer, Player::P1) => "True",
            (BooleanChoice::ByPlayer, Player::P2) => "False",
            (BooleanChoice::Either, Player::P1) => "Even",
            (BooleanChoice::Either, Player::P2) => "Odd",
        }
    }

    /// `P1/Even/True` or `P2/Odd/False`.
    pub fn long_name(self) -> &'static str {
        match self {
            Player::P1 => "P1/Even/True",
            Player::P2 => "P2/Odd/False",
        }
    }
}

impl fmt::Display for Player {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "P{}", self.number())
    }
}
