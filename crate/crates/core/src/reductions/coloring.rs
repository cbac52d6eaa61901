//! Proper 2-Coloring: an impartial game where either player paints any
//! uncolored vertex either color, as long as no neighbor already has that
//! color. The last player to paint wins.

use super::graph::{Color, Graph};
use super::{conjoin, ReductionError};
use crate::engine::{BooleanChoice, Goal, Locality, Player, Position, RulesetConfig};
use crate::formula::Formula;
use crate::solver::AbstractGame;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ColoringState {
    pub colors: Vec<Color>,
    pub mover: Player,
}

#[derive(Clone, Debug)]
pub struct ColoringGame {
    graph: Graph,
}

/// Proper 2-Coloring on an uncolored graph, P1 first.
pub fn p2c_game(g: &Graph) -> Result<ColoringGame, ReductionError> {
    reject_paint(g)?;
    Ok(ColoringGame { graph: g.clone() })
}

fn reject_paint(g: &Graph) -> Result<(), ReductionError> {
    match g.colors().iter().position(|&c| c != Color::Uncolored) {
        Some(vertex) => Err(ReductionError::PreColored { vertex }),
        None => Ok(()),
    }
}

impl AbstractGame for ColoringGame {
    type State = ColoringState;
    type Move = (usize, Color);
    type Key = ColoringState;

    fn initial(&self) -> ColoringState {
        ColoringState {
            colors: self.graph.colors().to_vec(),
            mover: Player::P1,
        }
    }

    fn mover(&self, s: &ColoringState) -> Player {
        s.mover
    }

    fn legal_moves(&self, s: &ColoringState) -> Vec<(usize, Color)> {
        let mut out = Vec::new();
        for v in 0..self.graph.vertex_count() {
            if s.colors[v] != Color::Uncolored {
                continue;
            }
            for color in [Color::Red, Color::Blue] {
                if self
                    .graph
                    .neighbors(v)
                    .iter()
                    .all(|&u| s.colors[u] != color)
                {
                    out.push((v, color));
                }
            }
        }
        out
    }

    fn apply(&self, s: &ColoringState, &(v, color): &(usize, Color)) -> ColoringState {
        let mut colors = s.colors.clone();
        colors[v] = color;
        ColoringState {
            colors,
            mover: s.mover.opponent(),
        }
    }

    fn winner(&self, s: &ColoringState) -> Player {
        s.mover.opponent()
    }

    fn key(&self, s: &ColoringState) -> ColoringState {
        s.clone()
    }
}

/// Either-anywhere-same position equivalent to Proper 2-Coloring on `g`.
///
/// Each edge `{i, j}` contributes `(xi & !xj) | (!xi & xj)`, which becomes
/// blatantly false exactly when both endpoints get the same value.
pub fn p2c_to_position(g: &Graph) -> Result<Position, ReductionError> {
    reject_paint(g)?;
    let gadgets = g
        .edges()
        .map(|(i, j)| {
            Formula::Or(vec![
                Formula::And(vec![Formula::var(i), Formula::neg(j)]),
                Formula::And(vec![Formula::neg(i), Formula::var(j)]),
            ])
        })
        .collect();
    Ok(Position::new(
        conjoin(gadgets),
        g.vertex_count(),
        RulesetConfig::new(BooleanChoice::Either, Locality::Anywhere, Goal::Same),
    )?)
}
