//! Clock, click-loop, click-path and leaf-spin moves, and move graphs over
//! populations of perfect matchings.

mod click;
mod clock;
mod graph;
mod spin;

use serde::{Deserialize, Serialize};

use crate::diagram::Colour;
use crate::states::MonochromaticLoop;

pub use click::{click_loop_moves, click_path_moves, click_path_to, two_click_connect};
pub use clock::clock_moves;
pub use graph::{build_move_graph, verify_connectivity, MoveEdge, MoveGraph, Population};
pub use spin::{leaf_spin, leaf_spin_at};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MoveKind {
    Clock,
    ClickLoop,
    ClickPath,
    LeafSpin,
}

impl MoveKind {
    pub fn name(self) -> &'static str {
        match self {
            MoveKind::Clock => "clock",
            MoveKind::ClickLoop => "click_loop",
            MoveKind::ClickPath => "click_path",
            MoveKind::LeafSpin => "leaf_spin",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum ClockType {
    I,
    II,
    III,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Cw,
    Ccw,
}

impl Direction {
    pub fn reverse(self) -> Direction {
        match self {
            Direction::Cw => Direction::Ccw,
            Direction::Ccw => Direction::Cw,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Site {
    /// Index into the Tait graph's square list.
    Square(usize),
    Loop(MonochromaticLoop),
    /// Regions along the path from the old root to the new one.
    Path { colour: Colour, regions: Vec<usize> },
    Spin { leaf: usize, pivot: usize, direction: Direction },
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Move {
    pub kind: MoveKind,
    pub site: Site,
    pub clock_type: Option<ClockType>,
    pub delta_j: Option<i32>,
    /// Rotation sense of a clock move: counterclockwise when every matched
    /// corner advances by one slot.
    pub direction: Option<Direction>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MoveError {
    #[error("matching is not perfect and admissible")]
    NotPerfectAdmissible,
    #[error("matching is not a perfect discrete Morse function")]
    NotPerfectDmf,
    #[error("target region {0} is not on the tree of its colour")]
    TargetNotInTree(usize),
    #[error("edge {0} is not a leaf of the subgraph")]
    NotALeaf(usize),
    #[error("edge {0} has no other ambient edge at its pivot")]
    LeafOfAmbient(usize),
    #[error("both endpoints of edge {0} have degree one; give the pivot explicitly")]
    AmbiguousPivot(usize),
}

#[cfg(test)]
mod tests;
