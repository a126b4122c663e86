use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt::Write as _;

use petgraph::unionfind::UnionFind;
use serde::{Deserialize, Serialize};

use super::{click_loop_moves, click_path_moves, clock_moves, ClockType, MoveKind};
use crate::diagram::TaitGraph;
use crate::states::{enumerate_matchings, Filter, Matching};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Population {
    /// Kauffman states with the given unmatched regions.
    KauffmanStates { black: usize, white: usize },
    PerfectDmfs,
    PerfectAdmissible,
}

impl Population {
    pub fn filter(self) -> Filter {
        match self {
            Population::KauffmanStates { black, white } => Filter::KauffmanStates { black, white },
            Population::PerfectDmfs => Filter::PerfectDmf,
            Population::PerfectAdmissible => Filter::PerfectAdmissible,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MoveEdge {
    pub a: usize,
    pub b: usize,
    pub kind: MoveKind,
    pub clock_type: Option<ClockType>,
    pub delta_j: Option<i32>,
}

/// Undirected graph on a population of matchings, one edge per distinct
/// `(pair, kind)` of moves staying inside the population.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MoveGraph {
    pub population: Population,
    pub kinds: Vec<MoveKind>,
    pub nodes: Vec<Matching>,
    pub edges: Vec<MoveEdge>,
    /// Moves whose result lies outside the population.
    pub escaped: usize,
}

pub fn build_move_graph(t: &TaitGraph, population: Population, kinds: &[MoveKind]) -> MoveGraph {
    let nodes = enumerate_matchings(t, population.filter());
    let index: HashMap<&Matching, usize> = nodes.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let mut seen = BTreeSet::new();
    let mut edges = Vec::new();
    let mut escaped = 0;
    for (i, x) in nodes.iter().enumerate() {
        let mut moves = Vec::new();
        if kinds.contains(&MoveKind::Clock) {
            moves.extend(clock_moves(t, x));
        }
        if kinds.contains(&MoveKind::ClickLoop) {
            moves.extend(click_loop_moves(t, x));
        }
        if kinds.contains(&MoveKind::ClickPath) {
            if let Ok(ms) = click_path_moves(t, x) {
                moves.extend(ms);
            }
        }
        for (mv, y) in moves {
            let Some(&j) = index.get(&y) else {
                escaped += 1;
                continue;
            };
            let key = (i.min(j), i.max(j), mv.kind);
            if i != j && seen.insert(key) {
                edges.push(MoveEdge { a: key.0, b: key.1, kind: mv.kind, clock_type: mv.clock_type, delta_j: mv.delta_j });
            }
        }
    }
    let mut kinds = kinds.to_vec();
    kinds.sort();
    kinds.dedup();
    MoveGraph { population, kinds, nodes, edges, escaped }
}

/// `(connected, number of components)`.
pub fn verify_connectivity(g: &MoveGraph) -> (bool, usize) {
    let n = g.num_components();
    (n <= 1, n)
}

impl MoveGraph {
    pub fn num_nodes(&self) -> usize {
        self.nodes.len()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn node_of(&self, x: &Matching) -> Option<usize> {
        self.nodes.iter().position(|m| m == x)
    }

    fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.nodes.len()];
        for e in &self.edges {
            adj[e.a].push(e.b);
            adj[e.b].push(e.a);
        }
        for l in &mut adj {
            l.sort_unstable();
            l.dedup();
        }
        adj
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adjacency().iter().map(Vec::len).collect()
    }

    pub fn num_components(&self) -> usize {
        let mut uf = UnionFind::new(self.nodes.len());
        let mut n = self.nodes.len();
        for e in &self.edges {
            if uf.union(e.a, e.b) {
                n -= 1;
            }
        }
        n
    }

    /// Connected, acyclic and of maximum degree two.
    pub fn is_path_graph(&self) -> bool {
        let adj = self.adjacency();
        let simple_edges: usize = adj.iter().map(Vec::len).sum::<usize>() / 2;
        self.num_components() == 1 && simple_edges + 1 == self.nodes.len() && adj.iter().all(|l| l.len() <= 2)
    }

    /// Breadth-first shortest path of node indices from `a` to `b`.
    pub fn shortest_path(&self, a: usize, b: usize) -> Option<Vec<usize>> {
        let adj = self.adjacency();
        let mut prev = vec![usize::MAX; self.nodes.len()];
        prev[a] = a;
        let mut queue = VecDeque::from([a]);
        while let Some(u) = queue.pop_front() {
            if u == b {
                let mut path = vec![b];
                let mut v = b;
                while v != a {
                    v = prev[v];
                    path.push(v);
                }
                path.reverse();
                return Some(path);
            }
            for &v in &adj[u] {
                if prev[v] == usize::MAX {
                    prev[v] = u;
                    queue.push_back(v);
                }
            }
        }
        None
    }

    pub fn to_dot(&self, name: &str) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "graph \"{}\" {{", name.replace('"', "'"));
        for (i, m) in self.nodes.iter().enumerate() {
            let _ = writeln!(s, "  n{i} [label=\"{:?}\"];", m.edges());
        }
        for e in &self.edges {
            let mut label = e.kind.name().to_string();
            if let Some(ty) = e.clock_type {
                let _ = write!(label, " {ty:?}");
            }
            let _ = writeln!(s, "  n{} -- n{} [label=\"{label}\"];", e.a, e.b);
        }
        s.push_str("}\n");
        s
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("move graph serializes")
    }
}
