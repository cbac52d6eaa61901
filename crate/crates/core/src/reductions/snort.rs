//! Snort: players paint uncolored vertices their own color (Blue for P1,
//! Red for P2) but never next to the opponent's color. A player who cannot
//! paint loses.

use super::graph::{Color, Graph};
use super::{conjoin, ReductionError};
use crate::assignment::Assignment;
use crate::engine::{BooleanChoice, Goal, Locality, Player, Position, RulesetConfig};
use crate::formula::Formula;
use crate::solver::AbstractGame;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SnortState {
    pub colors: Vec<Color>,
    pub mover: Player,
}

/// Snort on a graph. P1 is Blue, P2 is Red.
#[derive(Clone, Debug)]
pub struct SnortGame {
    graph: Graph,
    first: Player,
}

pub fn player_color(p: Player) -> Color {
    match p {
        Player::P1 => Color::Blue,
        Player::P2 => Color::Red,
    }
}

/// Snort game on `g`, `first` to move. Rejects inputs where a Blue vertex
/// touches a Red one.
pub fn snort_game(g: &Graph, first: Player) -> Result<SnortGame, ReductionError> {
    if let Some((u, v)) = g.opposite_colored_edge() {
        return Err(ReductionError::InvalidSnort { u, v });
    }
    Ok(SnortGame {
        graph: g.clone(),
        first,
    })
}

impl AbstractGame for SnortGame {
    type State = SnortState;
    /// Vertex to paint in the mover's color.
    type Move = usize;
    type Key = SnortState;

    fn initial(&self) -> SnortState {
        SnortState {
            colors: self.graph.colors().to_vec(),
            mover: self.first,
        }
    }

    fn mover(&self, s: &SnortState) -> Player {
        s.mover
    }

    fn legal_moves(&self, s: &SnortState) -> Vec<usize> {
        let forbidden = player_color(s.mover).opposite();
        (0..self.graph.vertex_count())
            .filter(|&v| {
                s.colors[v] == Color::Uncolored
                    && self
                        .graph
                        .neighbors(v)
                        .iter()
                        .all(|&u| s.colors[u] != forbidden)
            })
            .collect()
    }

    fn apply(&self, s: &SnortState, v: &usize) -> SnortState {
        let mut colors = s.colors.clone();
        colors[*v] = player_color(s.mover);
        SnortState {
            colors,
            mover: s.mover.opponent(),
        }
    }

    fn winner(&self, s: &SnortState) -> Player {
        s.mover.opponent()
    }

    fn key(&self, s: &SnortState) -> SnortState {
        s.clone()
    }
}

/// By-player-anywhere-same position equivalent to Snort on `g`.
///
/// Each edge `{i, j}` contributes `(xi | !xj) & (!xi | xj)`; vertex `v`
/// becomes `xv`, Blue paint is true and Red paint false. The result is
/// blatantly false exactly when some edge joins opposite colors. `first`
/// sets the mover of the initial position (P1 = Blue = True).
pub fn snort_to_position(g: &Graph, first: Player) -> Result<Position, ReductionError> {
    if let Some((u, v)) = g.opposite_colored_edge() {
        return Err(ReductionError::InvalidSnort { u, v });
    }
    let clauses = g
        .edges()
        .flat_map(|(i, j)| {
            [
                Formula::Or(vec![Formula::var(i), Formula::neg(j)]),
                Formula::Or(vec![Formula::neg(i), Formula::var(j)]),
            ]
        })
        .collect();
    let mut assignment = Assignment::new(g.vertex_count());
    for (v, c) in g.colors().iter().enumerate() {
        if let Some(b) = c.as_bool() {
            assignment.assign(v, b);
        }
    }
    Ok(Position::with_assignment(
        conjoin(clauses),
        assignment,
        RulesetConfig::new(BooleanChoice::ByPlayer, Locality::Anywhere, Goal::Same),
        Some(first),
    )?)
}
