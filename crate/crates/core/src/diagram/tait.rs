use serde::{Deserialize, Serialize};

use super::{Colour, Diagram};

/// A vertex of the overlaid Tait graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", content = "id", rename_all = "lowercase")]
pub enum TaitVertex {
    Region(usize),
    Crossing(usize),
}

/// The square face of the Tait graph around one arc. With `(c, i)` the
/// arc's first end and `(c', j)` its second, `F1` is the face at corners
/// `(c, i-1)` and `(c', j)`, `F2` the face at `(c, i)` and `(c', j-1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Square {
    pub arc: usize,
    pub crossings: [usize; 2],
    pub black: usize,
    pub white: usize,
    /// `{c → F1, c' → F2}`.
    pub pair_a: [usize; 2],
    /// `{c → F2, c' → F1}`.
    pub pair_b: [usize; 2],
}

impl Square {
    pub fn edges(&self) -> [usize; 4] {
        [self.pair_a[0], self.pair_a[1], self.pair_b[0], self.pair_b[1]]
    }
}

/// Tripartite plane graph on regions and crossings. Edge `4c + k` joins
/// crossing `c` to the region at its corner `k`. Oriented W → C → B, it is
/// the Hasse diagram of the cell structure with black regions as 0-cells,
/// crossings as 1-cells and white regions as 2-cells.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TaitGraph {
    diagram: Diagram,
    squares: Vec<Square>,
    /// For each region, the edges reaching it.
    region_edges: Vec<Vec<usize>>,
}

impl TaitGraph {
    pub fn new(d: &Diagram) -> Self {
        let mut squares = Vec::with_capacity(d.num_arcs());
        for arc in 0..d.num_arcs() {
            let [p, q] = d.arc_ends(arc);
            let (f1, f2) = d.arc_sides(arc);
            let (black, white) = if d.colour(f1) == Colour::Black { (f1, f2) } else { (f2, f1) };
            squares.push(Square {
                arc,
                crossings: [p.crossing, q.crossing],
                black,
                white,
                pair_a: [edge_id(p.crossing, p.slot + 3), edge_id(q.crossing, q.slot + 3)],
                pair_b: [edge_id(p.crossing, p.slot), edge_id(q.crossing, q.slot)],
            });
        }
        let mut region_edges = vec![Vec::new(); d.num_faces()];
        for e in 0..4 * d.num_crossings() {
            region_edges[d.face_at(e / 4, e % 4)].push(e);
        }
        TaitGraph { diagram: d.clone(), squares, region_edges }
    }

    pub fn diagram(&self) -> &Diagram {
        &self.diagram
    }

    pub fn num_crossings(&self) -> usize {
        self.diagram.num_crossings()
    }

    pub fn num_regions(&self) -> usize {
        self.diagram.num_faces()
    }

    pub fn num_edges(&self) -> usize {
        4 * self.num_crossings()
    }

    pub fn num_vertices(&self) -> usize {
        self.num_regions() + self.num_crossings()
    }

    pub fn squares(&self) -> &[Square] {
        &self.squares
    }

    pub fn crossing(&self, e: usize) -> usize {
        e / 4
    }

    pub fn corner(&self, e: usize) -> usize {
        e % 4
    }

    pub fn region(&self, e: usize) -> usize {
        self.diagram.face_at(e / 4, e % 4)
    }

    /// The region at the corner diagonally opposite to the edge's corner.
    pub fn opposite_region(&self, e: usize) -> usize {
        self.diagram.face_at(e / 4, e % 4 + 2)
    }

    /// The other edge of the same colour at the same crossing.
    pub fn opposite_edge(&self, e: usize) -> usize {
        edge_id(e / 4, e % 4 + 2)
    }

    pub fn edge(&self, crossing: usize, corner: usize) -> usize {
        edge_id(crossing, corner)
    }

    pub fn edge_colour(&self, e: usize) -> Colour {
        self.diagram.colour(self.region(e))
    }

    pub fn region_colour(&self, r: usize) -> Colour {
        self.diagram.colour(r)
    }

    pub fn regions_of(&self, c: Colour) -> Vec<usize> {
        self.diagram.faces_of(c)
    }

    pub fn region_edges(&self, r: usize) -> &[usize] {
        &self.region_edges[r]
    }

    /// Tail and head under the W → C → B orientation.
    pub fn orientation(&self, e: usize) -> (TaitVertex, TaitVertex) {
        let c = TaitVertex::Crossing(e / 4);
        let r = TaitVertex::Region(self.region(e));
        match self.edge_colour(e) {
            Colour::White => (r, c),
            Colour::Black => (c, r),
        }
    }

    /// Dense vertex index: regions first, then crossings.
    pub fn vertex_index(&self, v: TaitVertex) -> usize {
        match v {
            TaitVertex::Region(r) => r,
            TaitVertex::Crossing(c) => self.num_regions() + c,
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        #[derive(Serialize)]
        struct V {
            id: usize,
            role: &'static str,
            source: usize,
        }
        #[derive(Serialize)]
        struct E {
            id: usize,
            crossing: usize,
            corner: usize,
            region: usize,
            tail: usize,
            head: usize,
        }
        let mut vertices: Vec<V> = (0..self.num_regions())
            .map(|r| V {
                id: r,
                role: match self.region_colour(r) {
                    Colour::Black => "black",
                    Colour::White => "white",
                },
                source: r,
            })
            .collect();
        vertices.extend((0..self.num_crossings()).map(|c| V { id: self.num_regions() + c, role: "crossing", source: c }));
        let edges: Vec<E> = (0..self.num_edges())
            .map(|e| {
                let (t, h) = self.orientation(e);
                E {
                    id: e,
                    crossing: e / 4,
                    corner: e % 4,
                    region: self.region(e),
                    tail: self.vertex_index(t),
                    head: self.vertex_index(h),
                }
            })
            .collect();
        serde_json::json!({ "vertices": vertices, "edges": edges, "squares": self.squares })
    }
}

pub(crate) fn edge_id(crossing: usize, corner: usize) -> usize {
    4 * crossing + corner % 4
}
