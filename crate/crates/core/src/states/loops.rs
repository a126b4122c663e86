use petgraph::algo::is_cyclic_directed;
use petgraph::graph::DiGraph;
use serde::{Deserialize, Serialize};

use super::Matching;
use crate::diagram::{Colour, TaitGraph};

/// A supported monochromatic loop: a cycle through regions of one colour
/// and crossings, alternating matched and unmatched edges.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct MonochromaticLoop {
    pub colour: Colour,
    /// Cyclic edge sequence, rotated to start at the smallest id and read
    /// in the direction whose second entry is smaller.
    pub edges: Vec<usize>,
}

impl MonochromaticLoop {
    fn canonical(colour: Colour, mut edges: Vec<usize>) -> Self {
        let m = edges.len();
        let start = (0..m).min_by_key(|&i| edges[i]).unwrap();
        edges.rotate_left(start);
        if m > 2 && edges[m - 1] < edges[1] {
            edges[1..].reverse();
        }
        MonochromaticLoop { colour, edges }
    }

    pub fn regions(&self, t: &TaitGraph) -> Vec<usize> {
        let mut r: Vec<usize> = self.edges.iter().map(|&e| t.region(e)).collect();
        r.sort_unstable();
        r.dedup();
        r
    }

    pub fn crossings(&self) -> Vec<usize> {
        let mut c: Vec<usize> = self.edges.iter().map(|&e| e / 4).collect();
        c.sort_unstable();
        c.dedup();
        c
    }
}

/// All loops supported by `x`.
///
/// A matched edge from region `r` to crossing `c` continues, unmatched, to
/// the region at the opposite corner of `c`, so supported loops are exactly
/// the cycles of the map sending a matched region to that opposite region.
pub fn monochromatic_loops(t: &TaitGraph, x: &Matching) -> Vec<MonochromaticLoop> {
    let partner = x.region_partner(t);
    let nr = t.num_regions();
    // 0 unvisited, 1 on current walk, 2 done
    let mut state = vec![0u8; nr];
    let mut loops = Vec::new();
    for start in 0..nr {
        if state[start] != 0 {
            continue;
        }
        let mut walk = Vec::new();
        let mut r = start;
        loop {
            if state[r] != 0 {
                break;
            }
            let Some(e) = partner[r] else {
                state[r] = 2;
                break;
            };
            state[r] = 1;
            walk.push(r);
            r = t.opposite_region(e);
        }
        if state[r] == 1 {
            let pos = walk.iter().position(|&w| w == r).unwrap();
            let mut edges = Vec::new();
            for &w in &walk[pos..] {
                let e = partner[w].unwrap();
                edges.push(e);
                edges.push(t.opposite_edge(e));
            }
            loops.push(MonochromaticLoop::canonical(t.region_colour(r), edges));
        }
        for w in walk {
            state[w] = 2;
        }
    }
    loops.sort();
    loops
}

/// Directed-cycle test on the Hasse diagram with matched edges reversed.
pub fn poset_graph_has_cycle(t: &TaitGraph, x: &Matching) -> bool {
    let mut g = DiGraph::<(), ()>::with_capacity(t.num_vertices(), t.num_edges());
    let nodes: Vec<_> = (0..t.num_vertices()).map(|_| g.add_node(())).collect();
    for e in 0..t.num_edges() {
        let (tail, head) = t.orientation(e);
        let (a, b) = if x.contains(e) { (head, tail) } else { (tail, head) };
        g.add_edge(nodes[t.vertex_index(a)], nodes[t.vertex_index(b)], ());
    }
    is_cyclic_directed(&g)
}

/// Acyclic matching, i.e. a discrete Morse function on the cell structure.
pub fn is_dmf(t: &TaitGraph, x: &Matching) -> bool {
    let acyclic = monochromatic_loops(t, x).is_empty();
    debug_assert_eq!(acyclic, !poset_graph_has_cycle(t, x), "loop criterion disagrees with poset graph");
    acyclic
}
