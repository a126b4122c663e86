use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use super::{is_dmf, Matching, StatesError};
use crate::diagram::{Colour, PlaneGraph, TaitGraph};

/// Rooted orthogonal forests: edge sets are crossing ids, roots are region
/// (face) ids. No crossing lies in both forests.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ForestPair {
    pub black: Vec<usize>,
    pub white: Vec<usize>,
    pub black_roots: Vec<usize>,
    pub white_roots: Vec<usize>,
}

impl ForestPair {
    pub fn edges(&self, c: Colour) -> &[usize] {
        match c {
            Colour::Black => &self.black,
            Colour::White => &self.white,
        }
    }

    pub fn roots(&self, c: Colour) -> &[usize] {
        match c {
            Colour::Black => &self.black_roots,
            Colour::White => &self.white_roots,
        }
    }
}

/// One component of a colour's induced subgraph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Component {
    /// Region ids.
    pub regions: Vec<usize>,
    /// Crossing ids.
    pub crossings: Vec<usize>,
}

impl Component {
    pub fn is_tree(&self) -> bool {
        self.crossings.len() + 1 == self.regions.len()
    }

    /// Exactly one cycle.
    pub fn is_unicyclic(&self) -> bool {
        self.crossings.len() == self.regions.len()
    }
}

/// Subgraphs `H^b`, `H^w` of the colour graphs spanned by the crossings a
/// matching pairs with black (resp. white) regions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InducedSubgraphs {
    pub black: Vec<usize>,
    pub white: Vec<usize>,
}

impl InducedSubgraphs {
    pub fn of(t: &TaitGraph, x: &Matching) -> Self {
        let mut black = Vec::new();
        let mut white = Vec::new();
        for &e in x.edges() {
            match t.edge_colour(e) {
                Colour::Black => black.push(t.crossing(e)),
                Colour::White => white.push(t.crossing(e)),
            }
        }
        InducedSubgraphs { black, white }
    }

    pub fn edges(&self, c: Colour) -> &[usize] {
        match c {
            Colour::Black => &self.black,
            Colour::White => &self.white,
        }
    }

    /// Components over all vertices of the colour graph, isolated vertices
    /// included, in order of smallest region id.
    pub fn components(&self, g: &PlaneGraph) -> Vec<Component> {
        let edges = self.edges(g.colour());
        let uf = g.components_of(edges.iter().copied());
        let labels = uf.into_labeling();
        let mut comps: Vec<(usize, Component)> = Vec::new();
        for v in 0..g.num_vertices() {
            let l = labels[v];
            match comps.iter_mut().find(|(k, _)| *k == l) {
                Some((_, c)) => c.regions.push(g.vertex_face(v)),
                None => comps.push((l, Component { regions: vec![g.vertex_face(v)], crossings: Vec::new() })),
            }
        }
        for &e in edges {
            let l = labels[g.endpoints(e)[0]];
            comps.iter_mut().find(|(k, _)| *k == l).unwrap().1.crossings.push(e);
        }
        let mut out: Vec<Component> = comps.into_iter().map(|(_, c)| c).collect();
        for c in &mut out {
            c.regions.sort_unstable();
            c.crossings.sort_unstable();
        }
        out.sort_by_key(|c| c.regions[0]);
        out
    }
}

pub fn induced_forests(t: &TaitGraph, x: &Matching) -> Result<ForestPair, StatesError> {
    if !is_dmf(t, x) {
        return Err(StatesError::NotAcyclic);
    }
    if !x.is_admissible(t) {
        return Err(StatesError::NotAdmissible);
    }
    let h = InducedSubgraphs::of(t, x);
    Ok(ForestPair {
        black: h.black,
        white: h.white,
        black_roots: x.unmatched_regions(t, Colour::Black),
        white_roots: x.unmatched_regions(t, Colour::White),
    })
}

/// Orient every forest component away from its root and pair each crossing
/// with the region at the head of its edge.
pub fn forests_to_matching(t: &TaitGraph, f: &ForestPair) -> Result<Matching, StatesError> {
    let d = t.diagram();
    let n = t.num_crossings();
    let mut seen = vec![false; n];
    for &c in f.black.iter().chain(&f.white) {
        if c >= n {
            return Err(StatesError::InvalidForest(format!("crossing {c} out of range")));
        }
        if std::mem::replace(&mut seen[c], true) {
            return Err(StatesError::InvalidForest(format!("crossing {c} used twice")));
        }
    }
    let mut edges = Vec::with_capacity(f.black.len() + f.white.len());
    for colour in Colour::BOTH {
        let g = d.colour_graph(colour);
        let forest = f.edges(colour);
        if !g.is_forest(forest) {
            return Err(StatesError::InvalidForest(format!("{colour} edge set has a cycle")));
        }
        let uf = g.components_of(forest.iter().copied());
        let mut rooted = vec![false; g.num_vertices()];
        let mut root_vertices = Vec::new();
        for &r in f.roots(colour) {
            let v = g
                .vertex_of_face(r)
                .ok_or_else(|| StatesError::InvalidForest(format!("root {r} is not a {colour} region")))?;
            let rep = uf.find(v);
            if std::mem::replace(&mut rooted[rep], true) {
                return Err(StatesError::InvalidForest(format!("two roots in the component of region {r}")));
            }
            root_vertices.push(v);
        }
        if (0..g.num_vertices()).any(|v| !rooted[uf.find(v)]) {
            return Err(StatesError::InvalidForest(format!("unrooted {colour} component")));
        }
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); g.num_vertices()];
        for &c in forest {
            let [a, b] = g.endpoints(c);
            adj[a].push(c);
            adj[b].push(c);
        }
        let mut visited = vec![false; g.num_vertices()];
        let mut queue: VecDeque<usize> = root_vertices.into_iter().collect();
        for &v in &queue {
            visited[v] = true;
        }
        while let Some(u) = queue.pop_front() {
            for &c in &adj[u] {
                let v = g.other_endpoint(c, u);
                if visited[v] {
                    continue;
                }
                visited[v] = true;
                let face = g.vertex_face(v);
                let k = g.edge_corners(c).into_iter().find(|&k| d.face_at(c, k) == face).unwrap();
                edges.push(t.edge(c, k));
                queue.push_back(v);
            }
        }
    }
    Matching::new(t, edges)
}

/// Root a spanning tree of the black graph at `v_b`, its dual tree at
/// `v_w`, and read off the perfect matching.
pub fn kpw(t: &TaitGraph, tree: &[usize], v_b: usize, v_w: usize) -> Result<Matching, StatesError> {
    let gb = t.diagram().colour_graph(Colour::Black);
    if !gb.is_spanning_tree(tree) {
        return Err(StatesError::NotSpanning);
    }
    let white: Vec<usize> = (0..t.num_crossings()).filter(|c| !tree.contains(c)).collect();
    let mut black = tree.to_vec();
    black.sort_unstable();
    forests_to_matching(t, &ForestPair { black, white, black_roots: vec![v_b], white_roots: vec![v_w] })
}
