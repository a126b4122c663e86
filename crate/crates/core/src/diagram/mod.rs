//! Knot projections: PD parsing, faces, chequerboard colouring, the black
//! and white graphs and the overlaid Tait graph.

mod build;
mod graphs;
mod pd;
mod tait;

use serde::{Deserialize, Serialize};

pub use build::Diagram;
pub use graphs::PlaneGraph;
pub use pd::{parse_pd, PdCode};
pub use tait::{Square, TaitGraph, TaitVertex};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DiagramError {
    #[error("malformed PD code at byte {position}: {message}")]
    MalformedSyntax { position: usize, message: String },
    #[error("arc label {label} appears {count} times (expected 2)")]
    ArcMultiplicity { label: u32, count: usize },
    #[error("diagram has no crossings")]
    EmptyDiagram,
    #[error("not a planar code: V - E + F = {v} - {e} + {f} != 2")]
    NonPlanarCode { v: usize, e: usize, f: usize },
    #[error("chequerboard colouring fails at face {face}")]
    ColouringConflict { face: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Colour {
    Black,
    White,
}

impl Colour {
    pub fn other(self) -> Colour {
        match self {
            Colour::Black => Colour::White,
            Colour::White => Colour::Black,
        }
    }

    pub fn index(self) -> usize {
        match self {
            Colour::Black => 0,
            Colour::White => 1,
        }
    }

    pub const BOTH: [Colour; 2] = [Colour::Black, Colour::White];
}

impl std::fmt::Display for Colour {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Colour::Black => "black",
            Colour::White => "white",
        })
    }
}

/// An arc-end: `slot` in `0..4` at crossing `crossing`. The corner with the
/// same index lies between slots `k` and `k + 1` counterclockwise.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Slot {
    pub crossing: usize,
    pub slot: usize,
}

impl Slot {
    pub fn new(crossing: usize, slot: usize) -> Self {
        Slot { crossing, slot: slot % 4 }
    }

    /// Flat index `4 * crossing + slot`.
    pub fn index(self) -> usize {
        4 * self.crossing + self.slot
    }
}

/// Parse and build in one step.
pub fn diagram_from_text(text: &str) -> Result<Diagram, DiagramError> {
    Diagram::build(&parse_pd(text)?)
}
