use petgraph::unionfind::UnionFind;
use serde::{Deserialize, Serialize};

use super::Matching;
use crate::diagram::{Slot, TaitGraph};

/// Curve system obtained by smoothing every matched crossing around its
/// dot; unmatched crossings stay as double points.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JordanResolution {
    /// Dotted corner per crossing, `None` for a double point.
    pub dots: Vec<Option<usize>>,
    /// Components as sorted lists of arc-ends.
    pub components: Vec<Vec<Slot>>,
    /// Component index of each arc-end, by flat slot index.
    pub component_of: Vec<usize>,
}

impl JordanResolution {
    pub fn num_components(&self) -> usize {
        self.components.len()
    }

    pub fn double_points(&self) -> Vec<usize> {
        (0..self.dots.len()).filter(|&c| self.dots[c].is_none()).collect()
    }

    /// Components meeting any arc-end of the given crossings.
    pub fn components_at(&self, crossings: &[usize]) -> Vec<usize> {
        let mut v: Vec<usize> = crossings
            .iter()
            .flat_map(|&c| (0..4).map(move |s| self.component_of[4 * c + s]))
            .collect();
        v.sort_unstable();
        v.dedup();
        v
    }
}

/// Smoothing with the dot at corner `k` joins the arc-ends at slots
/// `k+1, k+2` and `k+3, k`, so the dotted region merges with the region
/// across the crossing.
pub fn jordan_resolution(t: &TaitGraph, x: &Matching) -> JordanResolution {
    let d = t.diagram();
    let n = t.num_crossings();
    let mut uf = UnionFind::<usize>::new(4 * n);
    for a in 0..d.num_arcs() {
        let [p, q] = d.arc_ends(a);
        uf.union(p.index(), q.index());
    }
    let mut dots = vec![None; n];
    for &e in x.edges() {
        dots[t.crossing(e)] = Some(t.corner(e));
    }
    for (c, dot) in dots.iter().enumerate() {
        match *dot {
            Some(k) => {
                uf.union(4 * c + (k + 1) % 4, 4 * c + (k + 2) % 4);
                uf.union(4 * c + (k + 3) % 4, 4 * c + k);
            }
            None => {
                for s in 1..4 {
                    uf.union(4 * c, 4 * c + s);
                }
            }
        }
    }
    let labels = uf.into_labeling();
    let mut index = vec![usize::MAX; 4 * n];
    let mut components: Vec<Vec<Slot>> = Vec::new();
    let mut component_of = vec![0; 4 * n];
    for i in 0..4 * n {
        let l = labels[i];
        if index[l] == usize::MAX {
            index[l] = components.len();
            components.push(Vec::new());
        }
        component_of[i] = index[l];
        components[index[l]].push(Slot::new(i / 4, i % 4));
    }
    JordanResolution { dots, components, component_of }
}
