use super::{Direction, MoveError};
use crate::diagram::PlaneGraph;

fn h_degree(g: &PlaneGraph, h: &[usize], v: usize) -> usize {
    h.iter().map(|&e| g.endpoints(e).iter().filter(|&&w| w == v).count()).sum()
}

/// Spin the leaf edge `leaf` of the subgraph `h` around its degree-one
/// endpoint: replace it by the next edge in the rotation at that vertex,
/// in `direction`, skipping loops and edges of `h`.
pub fn leaf_spin(g: &PlaneGraph, h: &[usize], leaf: usize, direction: Direction) -> Result<Vec<usize>, MoveError> {
    if !h.contains(&leaf) || g.is_loop(leaf) {
        return Err(MoveError::NotALeaf(leaf));
    }
    let [a, b] = g.endpoints(leaf);
    let pivots: Vec<usize> = [a, b].into_iter().filter(|&v| h_degree(g, h, v) == 1).collect();
    match pivots.as_slice() {
        [] => Err(MoveError::NotALeaf(leaf)),
        [p] => leaf_spin_at(g, h, leaf, *p, direction),
        _ => Err(MoveError::AmbiguousPivot(leaf)),
    }
}

/// As [`leaf_spin`] with the pivot vertex given explicitly.
pub fn leaf_spin_at(
    g: &PlaneGraph,
    h: &[usize],
    leaf: usize,
    pivot: usize,
    direction: Direction,
) -> Result<Vec<usize>, MoveError> {
    if !h.contains(&leaf) || g.is_loop(leaf) || !g.endpoints(leaf).contains(&pivot) || h_degree(g, h, pivot) != 1 {
        return Err(MoveError::NotALeaf(leaf));
    }
    let rot = g.rotation(pivot);
    let m = rot.len();
    let at = rot.iter().position(|&(e, _)| e == leaf).unwrap();
    for step in 1..m {
        let i = match direction {
            Direction::Ccw => (at + step) % m,
            Direction::Cw => (at + m - step) % m,
        };
        let e = rot[i].0;
        if e != leaf && !g.is_loop(e) && !h.contains(&e) {
            let mut out: Vec<usize> = h.iter().copied().filter(|&f| f != leaf).collect();
            out.push(e);
            out.sort_unstable();
            return Ok(out);
        }
    }
    Err(MoveError::LeafOfAmbient(leaf))
}
