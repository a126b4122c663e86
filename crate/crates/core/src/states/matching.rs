use std::fmt;

use serde::{Deserialize, Serialize};

use super::StatesError;
use crate::diagram::{Colour, TaitGraph};

/// A set of Tait edges, no two sharing a crossing or a region. Stored as a
/// sorted edge-id list, which is also the canonical form used for hashing
/// and node identity.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Matching {
    edges: Vec<usize>,
}

/// Unmatched vertices of each kind.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriticalCells {
    pub black: Vec<usize>,
    pub crossings: Vec<usize>,
    pub white: Vec<usize>,
}

impl Matching {
    pub fn new(t: &TaitGraph, mut edges: Vec<usize>) -> Result<Self, StatesError> {
        edges.sort_unstable();
        edges.dedup();
        let mut crossing_used = vec![false; t.num_crossings()];
        let mut region_used = vec![false; t.num_regions()];
        for &e in &edges {
            if e >= t.num_edges() {
                return Err(StatesError::NotAMatching(format!("edge {e} out of range")));
            }
            let (c, r) = (t.crossing(e), t.region(e));
            if std::mem::replace(&mut crossing_used[c], true) {
                return Err(StatesError::NotAMatching(format!("crossing {c} matched twice")));
            }
            if std::mem::replace(&mut region_used[r], true) {
                return Err(StatesError::NotAMatching(format!("region {r} matched twice")));
            }
        }
        Ok(Matching { edges })
    }

    /// Caller guarantees `edges` is a sorted matching.
    pub(crate) fn from_sorted(edges: Vec<usize>) -> Self {
        debug_assert!(edges.windows(2).all(|w| w[0] / 4 < w[1] / 4));
        Matching { edges }
    }

    pub fn empty() -> Self {
        Matching { edges: Vec::new() }
    }

    pub fn edges(&self) -> &[usize] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn contains(&self, e: usize) -> bool {
        self.edges.binary_search(&e).is_ok()
    }

    /// Matched edge at each crossing.
    pub fn crossing_partner(&self, t: &TaitGraph) -> Vec<Option<usize>> {
        let mut p = vec![None; t.num_crossings()];
        for &e in &self.edges {
            p[t.crossing(e)] = Some(e);
        }
        p
    }

    /// Matched edge at each region.
    pub fn region_partner(&self, t: &TaitGraph) -> Vec<Option<usize>> {
        let mut p = vec![None; t.num_regions()];
        for &e in &self.edges {
            p[t.region(e)] = Some(e);
        }
        p
    }

    /// `self ∖ remove ∪ add`, re-sorted.
    pub fn replace(&self, remove: &[usize], add: &[usize]) -> Matching {
        let mut edges: Vec<usize> = self.edges.iter().copied().filter(|e| !remove.contains(e)).collect();
        edges.extend_from_slice(add);
        edges.sort_unstable();
        Matching { edges }
    }

    /// Every crossing matched.
    pub fn is_perfect(&self, t: &TaitGraph) -> bool {
        self.edges.len() == t.num_crossings()
    }

    pub fn unmatched_regions(&self, t: &TaitGraph, colour: Colour) -> Vec<usize> {
        let p = self.region_partner(t);
        t.regions_of(colour).into_iter().filter(|&r| p[r].is_none()).collect()
    }

    /// At least one unmatched region of each colour.
    pub fn is_admissible(&self, t: &TaitGraph) -> bool {
        Colour::BOTH.iter().all(|&c| !self.unmatched_regions(t, c).is_empty())
    }

    pub fn is_perfect_admissible(&self, t: &TaitGraph) -> bool {
        self.is_perfect(t) && self.is_admissible(t)
    }

    /// No Tait edge can be added.
    pub fn is_maximal_matching(&self, t: &TaitGraph) -> bool {
        let cp = self.crossing_partner(t);
        let rp = self.region_partner(t);
        (0..t.num_crossings()).all(|c| cp[c].is_some() || (0..4).all(|k| rp[t.diagram().face_at(c, k)].is_some()))
    }

    pub fn critical_cells(&self, t: &TaitGraph) -> CriticalCells {
        let cp = self.crossing_partner(t);
        CriticalCells {
            black: self.unmatched_regions(t, Colour::Black),
            crossings: (0..t.num_crossings()).filter(|&c| cp[c].is_none()).collect(),
            white: self.unmatched_regions(t, Colour::White),
        }
    }
}

impl fmt::Debug for Matching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.edges)
    }
}

impl fmt::Display for Matching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.edges.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}
