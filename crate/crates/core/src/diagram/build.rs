use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use super::{Colour, DiagramError, PdCode, PlaneGraph, Slot, TaitGraph};

/// A 4-valent plane projection with traced faces and a chequerboard
/// colouring. Immutable after construction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Diagram {
    pd: PdCode,
    /// Both ends of each arc (arc `a` carries label `a + 1`), in PD order.
    arc_ends: Vec<[Slot; 2]>,
    /// Face occupying corner `k` of crossing `c`.
    corner_face: Vec<[usize; 4]>,
    /// Corners of each face in tracing order.
    faces: Vec<Vec<Slot>>,
    colour: Vec<Colour>,
}

impl Diagram {
    pub fn build(pd: &PdCode) -> Result<Self, DiagramError> {
        let n = pd.num_crossings();
        let mut arc_ends: Vec<Vec<Slot>> = vec![Vec::new(); pd.num_arcs()];
        for (c, t) in pd.crossings().iter().enumerate() {
            for (s, &a) in t.iter().enumerate() {
                arc_ends[a as usize - 1].push(Slot::new(c, s));
            }
        }
        let arc_ends: Vec<[Slot; 2]> = arc_ends.into_iter().map(|v| [v[0], v[1]]).collect();
        let mut partner = vec![Slot::new(0, 0); 4 * n];
        for [p, q] in &arc_ends {
            partner[p.index()] = *q;
            partner[q.index()] = *p;
        }

        // From corner (c, k) follow the arc at slot k + 1; its far end (c', j)
        // is the next corner of the same face.
        const UNSET: usize = usize::MAX;
        let mut corner_face = vec![[UNSET; 4]; n];
        let mut faces: Vec<Vec<Slot>> = Vec::new();
        for [p, q] in &arc_ends {
            for end in [p, q] {
                let start = Slot::new(end.crossing, end.slot + 3);
                if corner_face[start.crossing][start.slot] != UNSET {
                    continue;
                }
                let f = faces.len();
                let mut corners = Vec::new();
                let mut cur = start;
                while corner_face[cur.crossing][cur.slot] == UNSET {
                    corner_face[cur.crossing][cur.slot] = f;
                    corners.push(cur);
                    cur = partner[Slot::new(cur.crossing, cur.slot + 1).index()];
                }
                if cur != start {
                    // Only possible for inconsistent input.
                    return Err(DiagramError::NonPlanarCode { v: n, e: 2 * n, f: faces.len() + 1 });
                }
                faces.push(corners);
            }
        }
        let (v, e, f) = (n, 2 * n, faces.len());
        if v + f != e + 2 {
            return Err(DiagramError::NonPlanarCode { v, e, f });
        }

        let mut colour: Vec<Option<Colour>> = vec![None; f];
        colour[0] = Some(Colour::White);
        let mut queue = VecDeque::from([0usize]);
        let mut adjacent: Vec<Vec<usize>> = vec![Vec::new(); f];
        for [p, _] in &arc_ends {
            let f1 = corner_face[p.crossing][(p.slot + 3) % 4];
            let f2 = corner_face[p.crossing][p.slot];
            adjacent[f1].push(f2);
            adjacent[f2].push(f1);
        }
        while let Some(a) = queue.pop_front() {
            let ca = colour[a].unwrap();
            for &b in &adjacent[a] {
                match colour[b] {
                    None => {
                        colour[b] = Some(ca.other());
                        queue.push_back(b);
                    }
                    Some(cb) if cb == ca => return Err(DiagramError::ColouringConflict { face: b }),
                    Some(_) => {}
                }
            }
        }
        let colour: Vec<Colour> = colour
            .into_iter()
            .enumerate()
            .map(|(i, c)| c.ok_or(DiagramError::ColouringConflict { face: i }))
            .collect::<Result<_, _>>()?;
        // Corners around a crossing must alternate.
        for (c, cf) in corner_face.iter().enumerate() {
            if (0..4).any(|k| colour[cf[k]] == colour[cf[(k + 1) % 4]]) {
                return Err(DiagramError::ColouringConflict { face: corner_face[c][0] });
            }
        }

        Ok(Diagram { pd: pd.clone(), arc_ends, corner_face, faces, colour })
    }

    pub fn pd(&self) -> &PdCode {
        &self.pd
    }

    pub fn num_crossings(&self) -> usize {
        self.corner_face.len()
    }

    pub fn num_arcs(&self) -> usize {
        self.arc_ends.len()
    }

    pub fn num_faces(&self) -> usize {
        self.faces.len()
    }

    pub fn arc_ends(&self, arc: usize) -> [Slot; 2] {
        self.arc_ends[arc]
    }

    /// Arc index (label − 1) at a slot.
    pub fn arc_at(&self, s: Slot) -> usize {
        self.pd.crossings()[s.crossing][s.slot] as usize - 1
    }

    /// The other end of the arc leaving slot `s`.
    pub fn partner(&self, s: Slot) -> Slot {
        let [p, q] = self.arc_ends[self.arc_at(s)];
        if p == s {
            q
        } else {
            p
        }
    }

    pub fn face_at(&self, crossing: usize, corner: usize) -> usize {
        self.corner_face[crossing][corner % 4]
    }

    pub fn corner_faces(&self, crossing: usize) -> [usize; 4] {
        self.corner_face[crossing]
    }

    /// Corners `(crossing, corner)` of face `f` in tracing order.
    pub fn face_corners(&self, f: usize) -> &[Slot] {
        &self.faces[f]
    }

    /// Number of arcs on the boundary of face `f`.
    pub fn face_length(&self, f: usize) -> usize {
        self.faces[f].len()
    }

    pub fn max_face_length(&self) -> usize {
        self.faces.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// The faces on either side of an arc: `(F1, F2)` where `F1` holds the
    /// corner before the first end's slot and `F2` the corner after it.
    pub fn arc_sides(&self, arc: usize) -> (usize, usize) {
        let p = self.arc_ends[arc][0];
        (self.face_at(p.crossing, p.slot + 3), self.face_at(p.crossing, p.slot))
    }

    /// The `(black, white)` regions on either side of an arc; these are
    /// the two forbidden regions of the Kauffman states marked at that arc.
    pub fn marked_arc_regions(&self, arc: usize) -> (usize, usize) {
        let (f1, f2) = self.arc_sides(arc);
        if self.colour[f1] == Colour::Black {
            (f1, f2)
        } else {
            (f2, f1)
        }
    }

    pub fn colour(&self, f: usize) -> Colour {
        self.colour[f]
    }

    pub fn colours(&self) -> &[Colour] {
        &self.colour
    }

    pub fn faces_of(&self, c: Colour) -> Vec<usize> {
        (0..self.faces.len()).filter(|&f| self.colour[f] == c).collect()
    }

    /// The two corners of crossing `c` occupied by colour `col`: `(k, k + 2)`.
    pub fn corners_of(&self, crossing: usize, col: Colour) -> [usize; 2] {
        let k = if self.colour[self.corner_face[crossing][0]] == col { 0 } else { 1 };
        [k, k + 2]
    }

    pub fn with_swapped_colours(&self) -> Diagram {
        let mut d = self.clone();
        for c in &mut d.colour {
            *c = c.other();
        }
        d
    }

    /// A crossing is nugatory when one face occupies two opposite corners.
    pub fn nugatory_crossings(&self) -> Vec<usize> {
        (0..self.num_crossings())
            .filter(|&c| {
                let cf = self.corner_face[c];
                cf[0] == cf[2] || cf[1] == cf[3]
            })
            .collect()
    }

    /// Reduced means no nugatory crossing. Checked against the equivalent
    /// statement that neither colour graph has a loop, detected as a bridge
    /// of the dual colour graph.
    pub fn is_reduced(&self) -> bool {
        let direct = self.nugatory_crossings().is_empty();
        let (gb, gw) = self.colour_graphs();
        let via_bridges = gb.bridges().is_empty() && gw.bridges().is_empty();
        assert_eq!(direct, via_bridges, "reducedness characterizations disagree");
        direct
    }

    pub fn colour_graph(&self, col: Colour) -> PlaneGraph {
        PlaneGraph::from_diagram(self, col)
    }

    pub fn colour_graphs(&self) -> (PlaneGraph, PlaneGraph) {
        (self.colour_graph(Colour::Black), self.colour_graph(Colour::White))
    }

    pub fn tait(&self) -> TaitGraph {
        TaitGraph::new(self)
    }

    /// Sizes of the colour classes `(black, white)`.
    pub fn colour_class_sizes(&self) -> (usize, usize) {
        let b = self.colour.iter().filter(|&&c| c == Colour::Black).count();
        (b, self.colour.len() - b)
    }
}
