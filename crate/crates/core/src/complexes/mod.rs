//! Matching and Morse complexes of a diagram and their integer homology.

mod homology;

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::diagram::{Colour, Diagram, TaitGraph};
use crate::states::{enumerate_matchings, is_dmf, kpw, Filter};

pub use homology::{face_cap_from_env, homology, homology_with_cap, DegreeHomology, HomologyError, HomologyResult, FACE_CAP_VAR};

/// A simplicial complex on Tait-graph edge ids, stored by its facets.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimplicialComplex {
    num_vertices: usize,
    facets: Vec<Vec<u32>>,
}

fn subsets(facet: &[u32], mut f: impl FnMut(Vec<u32>)) {
    let m = facet.len();
    for mask in 1u32..(1 << m) {
        f((0..m).filter(|i| mask >> i & 1 == 1).map(|i| facet[i]).collect());
    }
}

impl SimplicialComplex {
    /// Sorts and deduplicates, and drops any facet contained in another.
    pub fn from_facets(num_vertices: usize, facets: impl IntoIterator<Item = Vec<u32>>) -> Self {
        let mut facets: Vec<Vec<u32>> = facets
            .into_iter()
            .map(|mut f| {
                f.sort_unstable();
                f.dedup();
                f
            })
            .filter(|f| !f.is_empty())
            .collect();
        facets.sort();
        facets.dedup();
        let mut proper = HashSet::new();
        for f in &facets {
            subsets(f, |s| {
                if s.len() < f.len() {
                    proper.insert(s);
                }
            });
        }
        facets.retain(|f| !proper.contains(f));
        SimplicialComplex { num_vertices, facets }
    }

    pub fn num_vertices(&self) -> usize {
        self.num_vertices
    }

    pub fn facets(&self) -> &[Vec<u32>] {
        &self.facets
    }

    pub fn num_facets(&self) -> usize {
        self.facets.len()
    }

    /// `-1` for the empty complex.
    pub fn dimension(&self) -> isize {
        self.facets.iter().map(|f| f.len() as isize - 1).max().unwrap_or(-1)
    }

    pub fn is_pure(&self) -> bool {
        let d = self.dimension();
        self.facets.iter().all(|f| f.len() as isize - 1 == d)
    }

    /// Nonempty faces grouped by dimension, each list sorted. Stops with
    /// `None` once more than `cap` faces have been produced.
    pub fn faces_capped(&self, cap: usize) -> Option<Vec<Vec<Vec<u32>>>> {
        let dim = self.dimension();
        if dim < 0 {
            return Some(Vec::new());
        }
        let mut sets: Vec<HashSet<Vec<u32>>> = vec![HashSet::new(); dim as usize + 1];
        let mut total = 0usize;
        for f in &self.facets {
            let mut over = false;
            subsets(f, |s| {
                if !over && sets[s.len() - 1].insert(s) {
                    total += 1;
                    over = total > cap;
                }
            });
            if over {
                return None;
            }
        }
        Some(
            sets.into_iter()
                .map(|s| {
                    let mut v: Vec<_> = s.into_iter().collect();
                    v.sort();
                    v
                })
                .collect(),
        )
    }

    pub fn faces(&self) -> Vec<Vec<Vec<u32>>> {
        self.faces_capped(usize::MAX).unwrap()
    }

    pub fn f_vector(&self) -> Vec<usize> {
        self.faces().iter().map(Vec::len).collect()
    }

    /// Unreduced Euler characteristic.
    pub fn euler_characteristic(&self) -> i64 {
        self.f_vector().iter().enumerate().map(|(k, &n)| if k % 2 == 0 { n as i64 } else { -(n as i64) }).sum()
    }

    pub fn contains_face(&self, face: &[u32]) -> bool {
        self.facets.iter().any(|f| face.iter().all(|v| f.binary_search(v).is_ok()))
    }

    pub fn is_subcomplex_of(&self, other: &SimplicialComplex) -> bool {
        self.facets.iter().all(|f| other.contains_face(f))
    }
}

fn edges_u32(m: &crate::states::Matching) -> Vec<u32> {
    m.edges().iter().map(|&e| e as u32).collect()
}

/// Facets are the maximal matchings of the Tait graph.
pub fn matching_complex(t: &TaitGraph) -> SimplicialComplex {
    let facets = enumerate_matchings(t, Filter::MaximalMatching);
    SimplicialComplex::from_facets(t.num_edges(), facets.iter().map(edges_u32))
}

/// Facets are the maximal acyclic matchings.
pub fn morse_complex(t: &TaitGraph) -> SimplicialComplex {
    let facets = enumerate_matchings(t, Filter::MaximalDmf);
    SimplicialComplex::from_facets(t.num_edges(), facets.iter().map(edges_u32))
}

/// Subcomplex of the matching complex generated by those of its facets that
/// are acyclic.
pub fn acyclic_facet_complex(t: &TaitGraph) -> SimplicialComplex {
    let facets = enumerate_matchings(t, Filter::MaximalMatching);
    SimplicialComplex::from_facets(t.num_edges(), facets.iter().filter(|m| is_dmf(t, m)).map(edges_u32))
}

/// Subcomplex generated by the facets of top dimension.
pub fn pure_part(c: &SimplicialComplex) -> SimplicialComplex {
    let d = c.dimension();
    SimplicialComplex {
        num_vertices: c.num_vertices,
        facets: c.facets.iter().filter(|f| f.len() as isize - 1 == d).cloned().collect(),
    }
}

/// One top simplex per spanning tree of the black graph and pair of
/// unmatched regions, read off by the tree construction.
pub fn pure_morse_from_trees(d: &Diagram) -> SimplicialComplex {
    let t = d.tait();
    let gb = d.colour_graph(Colour::Black);
    let mut facets = Vec::new();
    for tree in gb.spanning_trees() {
        for v_b in d.faces_of(Colour::Black) {
            for v_w in d.faces_of(Colour::White) {
                let m = kpw(&t, &tree, v_b, v_w).expect("spanning tree with valid roots");
                facets.push(edges_u32(&m));
            }
        }
    }
    SimplicialComplex::from_facets(t.num_edges(), facets)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConnectivityBound {
    pub crossings: usize,
    /// Largest number of arcs on the boundary of a face.
    pub max_face_length: usize,
    /// The matching complex is at least this connected.
    pub bound: i64,
    pub connected: bool,
    pub simply_connected: bool,
}

/// `⌊(4n − 1) / 2f⌋ − 1` for `n` crossings and largest face length `f`.
pub fn connectivity_bound(d: &Diagram) -> ConnectivityBound {
    let n = d.num_crossings();
    let f = d.max_face_length();
    ConnectivityBound {
        crossings: n,
        max_face_length: f,
        bound: ((4 * n - 1) / (2 * f)) as i64 - 1,
        connected: 4 * n >= 2 * f + 1,
        simply_connected: 4 * n >= 4 * f + 1,
    }
}
