use itertools::Itertools;
use petgraph::unionfind::UnionFind;
use serde::{Deserialize, Serialize};

use super::{Colour, Diagram};

/// Black or white graph of a diagram. Vertices are the faces of one colour,
/// edge `c` is crossing `c`. Loops and parallel edges are kept.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlaneGraph {
    colour: Colour,
    /// Face id of each vertex.
    vertices: Vec<usize>,
    /// Local vertex endpoints of each edge, from corners `k` and `k + 2`.
    edges: Vec<[usize; 2]>,
    /// The corners `[k, k + 2]` of the crossing that the endpoints occupy.
    edge_corners: Vec<[usize; 2]>,
    /// Counterclockwise cyclic order of `(edge, corner)` incidences at each
    /// vertex. A loop contributes two incidences.
    rotation: Vec<Vec<(usize, usize)>>,
}

impl PlaneGraph {
    pub(crate) fn from_diagram(d: &Diagram, colour: Colour) -> Self {
        let vertices = d.faces_of(colour);
        let mut local = vec![usize::MAX; d.num_faces()];
        for (i, &f) in vertices.iter().enumerate() {
            local[f] = i;
        }
        let mut edges = Vec::with_capacity(d.num_crossings());
        let mut edge_corners = Vec::with_capacity(d.num_crossings());
        for c in 0..d.num_crossings() {
            let [k, k2] = d.corners_of(c, colour);
            edges.push([local[d.face_at(c, k)], local[d.face_at(c, k2)]]);
            edge_corners.push([k, k2]);
        }
        // Faces are traced clockwise, so the counterclockwise rotation at a
        // vertex is the reversed corner sequence.
        let rotation = vertices
            .iter()
            .map(|&f| d.face_corners(f).iter().rev().map(|s| (s.crossing, s.slot)).collect())
            .collect();
        PlaneGraph { colour, vertices, edges, edge_corners, rotation }
    }

    pub fn colour(&self) -> Colour {
        self.colour
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn vertex_face(&self, v: usize) -> usize {
        self.vertices[v]
    }

    pub fn vertex_faces(&self) -> &[usize] {
        &self.vertices
    }

    pub fn vertex_of_face(&self, f: usize) -> Option<usize> {
        self.vertices.iter().position(|&x| x == f)
    }

    pub fn endpoints(&self, e: usize) -> [usize; 2] {
        self.edges[e]
    }

    pub fn edge_corners(&self, e: usize) -> [usize; 2] {
        self.edge_corners[e]
    }

    pub fn is_loop(&self, e: usize) -> bool {
        self.edges[e][0] == self.edges[e][1]
    }

    pub fn loops(&self) -> Vec<usize> {
        (0..self.edges.len()).filter(|&e| self.is_loop(e)).collect()
    }

    pub fn other_endpoint(&self, e: usize, v: usize) -> usize {
        let [a, b] = self.edges[e];
        if a == v {
            b
        } else {
            a
        }
    }

    pub fn rotation(&self, v: usize) -> &[(usize, usize)] {
        &self.rotation[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rotation[v].len()
    }

    /// Union-find over the vertices using the given edges.
    pub fn components_of(&self, edges: impl IntoIterator<Item = usize>) -> UnionFind<usize> {
        let mut uf = UnionFind::new(self.vertices.len());
        for e in edges {
            let [a, b] = self.edges[e];
            uf.union(a, b);
        }
        uf
    }

    pub fn num_components_of(&self, edges: impl IntoIterator<Item = usize>) -> usize {
        let uf = self.components_of(edges);
        let mut labels = uf.into_labeling();
        labels.sort_unstable();
        labels.dedup();
        labels.len()
    }

    pub fn is_connected(&self) -> bool {
        self.num_components_of(0..self.edges.len()) == 1
    }

    /// True if the edge set contains no cycle (loops count as cycles).
    pub fn is_forest(&self, edges: &[usize]) -> bool {
        let mut uf = UnionFind::new(self.vertices.len());
        edges.iter().all(|&e| {
            let [a, b] = self.edges[e];
            uf.union(a, b)
        })
    }

    pub fn is_spanning_tree(&self, edges: &[usize]) -> bool {
        edges.len() + 1 == self.vertices.len() && self.is_forest(edges)
    }

    /// Edges whose removal disconnects the graph.
    pub fn bridges(&self) -> Vec<usize> {
        (0..self.edges.len())
            .filter(|&e| !self.is_loop(e))
            .filter(|&e| {
                let [a, b] = self.edges[e];
                let uf = self.components_of((0..self.edges.len()).filter(|&f| f != e));
                !uf.equiv(a, b)
            })
            .collect()
    }

    /// Vertices whose deletion disconnects the remaining vertices.
    pub fn cut_vertices(&self) -> Vec<usize> {
        let n = self.vertices.len();
        (0..n)
            .filter(|&v| {
                let mut uf = UnionFind::new(n);
                for &[a, b] in &self.edges {
                    if a != v && b != v {
                        uf.union(a, b);
                    }
                }
                let mut roots: Vec<usize> = (0..n).filter(|&u| u != v).map(|u| uf.find(u)).collect();
                roots.sort_unstable();
                roots.dedup();
                roots.len() > 1
            })
            .collect()
    }

    /// No cut vertex and no loop.
    pub fn is_two_connected(&self) -> bool {
        self.is_connected() && self.cut_vertices().is_empty() && self.loops().is_empty()
    }

    /// All spanning trees as sorted edge lists, in lexicographic order.
    pub fn spanning_trees(&self) -> Vec<Vec<usize>> {
        let k = self.vertices.len() - 1;
        (0..self.edges.len())
            .filter(|&e| !self.is_loop(e))
            .combinations(k)
            .filter(|t| self.is_forest(t))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use crate::diagram::{diagram_from_text, Colour};

    #[test]
    fn trefoil_colour_graphs_are_triangle_and_theta() {
        let d = diagram_from_text("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)").unwrap();
        let (gb, gw) = d.colour_graphs();
        let mut shapes = [(gb.num_vertices(), gb.num_edges()), (gw.num_vertices(), gw.num_edges())];
        shapes.sort();
        assert_eq!(shapes, [(2, 3), (3, 3)]);
        assert!(gb.is_connected() && gw.is_connected());
        assert_eq!(gb.spanning_trees().len(), 3);
        assert_eq!(gw.spanning_trees().len(), 3);
        for g in [&gb, &gw] {
            let total: usize = (0..g.num_vertices()).map(|v| g.degree(v)).sum();
            assert_eq!(total, 2 * g.num_edges());
            assert!(g.is_two_connected());
        }
    }

    #[test]
    fn figure_eight_graphs_have_three_vertices_four_edges() {
        let d = diagram_from_text("X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)").unwrap();
        for col in Colour::BOTH {
            let g = d.colour_graph(col);
            assert_eq!((g.num_vertices(), g.num_edges()), (3, 4));
            assert_eq!(g.spanning_trees().len(), 5);
        }
    }

    #[test]
    fn kink_graphs_have_a_loop_and_a_bridge() {
        let d = diagram_from_text("X(1,2,2,1)").unwrap();
        let (gb, gw) = d.colour_graphs();
        assert_eq!(gb.loops().len() + gw.loops().len(), 1);
        assert_eq!(gb.bridges().len() + gw.bridges().len(), 1);
    }
}
