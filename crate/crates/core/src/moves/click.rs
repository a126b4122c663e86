use std::collections::VecDeque;

use super::{Move, MoveError, MoveKind, Site};
use crate::diagram::{Colour, TaitGraph};
use crate::states::{is_dmf, monochromatic_loops, InducedSubgraphs, Matching};

/// Flip the alternation along each supported loop.
pub fn click_loop_moves(t: &TaitGraph, x: &Matching) -> Vec<(Move, Matching)> {
    monochromatic_loops(t, x)
        .into_iter()
        .map(|l| {
            let (on, off): (Vec<usize>, Vec<usize>) = l.edges.iter().partition(|&&e| x.contains(e));
            let y = x.replace(&on, &off);
            let mv = Move { kind: MoveKind::ClickLoop, site: Site::Loop(l), clock_type: None, delta_j: None, direction: None };
            (mv, y)
        })
        .collect()
}

/// Breadth-first tree of one colour's induced subgraph from its unmatched
/// region: `parent[v] = (u, crossing)` for each reached vertex `v`.
struct RootedTree {
    root: usize,
    parent: Vec<Option<(usize, usize)>>,
    reached: Vec<bool>,
}

fn rooted_tree(t: &TaitGraph, x: &Matching, colour: Colour) -> RootedTree {
    let g = t.diagram().colour_graph(colour);
    let h = InducedSubgraphs::of(t, x);
    let root_face = x.unmatched_regions(t, colour)[0];
    let root = g.vertex_of_face(root_face).unwrap();
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); g.num_vertices()];
    for &c in h.edges(colour) {
        let [a, b] = g.endpoints(c);
        adj[a].push(c);
        if a != b {
            adj[b].push(c);
        }
    }
    let mut parent = vec![None; g.num_vertices()];
    let mut reached = vec![false; g.num_vertices()];
    reached[root] = true;
    let mut queue = VecDeque::from([root]);
    while let Some(u) = queue.pop_front() {
        for &c in &adj[u] {
            let v = g.other_endpoint(c, u);
            if !reached[v] {
                reached[v] = true;
                parent[v] = Some((u, c));
                queue.push_back(v);
            }
        }
    }
    RootedTree { root, parent, reached }
}

fn path_move(t: &TaitGraph, x: &Matching, colour: Colour, tree: &RootedTree, target: usize) -> (Move, Matching) {
    let d = t.diagram();
    let g = d.colour_graph(colour);
    let mut remove = Vec::new();
    let mut add = Vec::new();
    let mut regions = vec![g.vertex_face(target)];
    let mut v = target;
    while let Some((u, c)) = tree.parent[v] {
        let [k0, k1] = g.edge_corners(c);
        let corner_of = |w: usize| if d.face_at(c, k0) == g.vertex_face(w) { k0 } else { k1 };
        remove.push(t.edge(c, corner_of(v)));
        add.push(t.edge(c, corner_of(u)));
        regions.push(g.vertex_face(u));
        v = u;
    }
    regions.reverse();
    let y = x.replace(&remove, &add);
    let mv = Move {
        kind: MoveKind::ClickPath,
        site: Site::Path { colour, regions },
        clock_type: None,
        delta_j: None,
        direction: None,
    };
    (mv, y)
}

/// Move the root of one colour's tree to every other vertex of that tree,
/// flipping each crossing along the path to the parent endpoint.
pub fn click_path_moves(t: &TaitGraph, x: &Matching) -> Result<Vec<(Move, Matching)>, MoveError> {
    if !x.is_perfect_admissible(t) {
        return Err(MoveError::NotPerfectAdmissible);
    }
    let mut out = Vec::new();
    for colour in Colour::BOTH {
        let tree = rooted_tree(t, x, colour);
        for v in 0..tree.reached.len() {
            if tree.reached[v] && v != tree.root {
                out.push(path_move(t, x, colour, &tree, v));
            }
        }
    }
    Ok(out)
}

/// The click-path move making `target` the unmatched region of its colour;
/// `None` when it already is.
pub fn click_path_to(t: &TaitGraph, x: &Matching, target: usize) -> Result<Option<(Move, Matching)>, MoveError> {
    if !x.is_perfect_admissible(t) {
        return Err(MoveError::NotPerfectAdmissible);
    }
    let colour = t.region_colour(target);
    let tree = rooted_tree(t, x, colour);
    let g = t.diagram().colour_graph(colour);
    let v = g.vertex_of_face(target).unwrap();
    if v == tree.root {
        return Ok(None);
    }
    if !tree.reached[v] {
        return Err(MoveError::TargetNotInTree(target));
    }
    Ok(Some(path_move(t, x, colour, &tree, v)))
}

/// At most one black and one white click-path move carrying a perfect dMf
/// to the one with critical regions `(v_b, v_w)` and the same unrooted trees.
pub fn two_click_connect(
    t: &TaitGraph,
    x: &Matching,
    v_b: usize,
    v_w: usize,
) -> Result<(Vec<Move>, Matching), MoveError> {
    if !x.is_perfect(t) || !is_dmf(t, x) {
        return Err(MoveError::NotPerfectDmf);
    }
    let mut moves = Vec::new();
    let mut cur = x.clone();
    for target in [v_b, v_w] {
        if let Some((mv, y)) = click_path_to(t, &cur, target)? {
            moves.push(mv);
            cur = y;
        }
    }
    Ok((moves, cur))
}
