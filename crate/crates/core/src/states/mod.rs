//! Partial Kauffman states as matchings on the Tait graph, and everything
//! derived from them: acyclicity, Jordan resolutions, forest pairs.

mod enumerate;
mod forests;
mod jordan;
mod loops;
mod matching;
mod nonextendable;

pub use enumerate::{count_matchings, enumerate_matchings, for_each_matching, Filter};
pub use forests::{forests_to_matching, induced_forests, kpw, Component, ForestPair, InducedSubgraphs};
pub use jordan::{jordan_resolution, JordanResolution};
pub use loops::{is_dmf, monochromatic_loops, poset_graph_has_cycle, MonochromaticLoop};
pub use matching::{CriticalCells, Matching};
pub use nonextendable::{find_nonextendable, for_each_nonextendable};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum StatesError {
    #[error("not a matching: {0}")]
    NotAMatching(String),
    #[error("matching supports a monochromatic loop")]
    NotAcyclic,
    #[error("matching leaves no unmatched region of some colour")]
    NotAdmissible,
    #[error("matching is not perfect and admissible")]
    NotPerfectAdmissible,
    #[error("invalid forest pair: {0}")]
    InvalidForest(String),
    #[error("edge set is not a spanning tree of the black graph")]
    NotSpanning,
}

#[cfg(test)]
mod tests;
