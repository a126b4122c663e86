use std::ops::ControlFlow;

use super::Matching;
use crate::diagram::TaitGraph;

struct Csp<'a, F> {
    t: &'a TaitGraph,
    visit: F,
    used: Vec<bool>,
    /// Number of unmatched crossings requiring each region.
    demand: Vec<u32>,
    last_touch: Vec<usize>,
    unmatched: usize,
    stack: Vec<usize>,
}

impl<F: FnMut(&[usize]) -> ControlFlow<()>> Csp<'_, F> {
    /// Every demanded, still free region can be taken by a later crossing.
    fn feasible(&self, c: usize) -> bool {
        let mut open = 0;
        for r in 0..self.used.len() {
            if self.demand[r] > 0 && !self.used[r] {
                if self.last_touch[r] <= c {
                    return false;
                }
                open += 1;
            }
        }
        open <= self.t.num_crossings() - c - 1
    }

    fn run(&mut self, c: usize) -> ControlFlow<()> {
        let t = self.t;
        if c == t.num_crossings() {
            if self.unmatched > 0 {
                let mut m = self.stack.clone();
                m.sort_unstable();
                (self.visit)(&m)?;
            }
            return ControlFlow::Continue(());
        }
        let faces = t.diagram().corner_faces(c);
        // Leave c unmatched: all four regions must end up matched.
        for &r in &faces {
            self.demand[r] += 1;
        }
        self.unmatched += 1;
        if self.feasible(c) {
            self.run(c + 1)?;
        }
        self.unmatched -= 1;
        for &r in &faces {
            self.demand[r] -= 1;
        }
        for k in 0..4 {
            let r = faces[k];
            if self.used[r] {
                continue;
            }
            self.used[r] = true;
            self.stack.push(t.edge(c, k));
            let flow = if self.feasible(c) { self.run(c + 1) } else { ControlFlow::Continue(()) };
            self.stack.pop();
            self.used[r] = false;
            flow?;
        }
        ControlFlow::Continue(())
    }
}

/// Visit every matching that is maximal (no Tait edge can be added) but not
/// perfect. The search fixes crossings in index order, trying "unmatched"
/// first, and prunes as soon as a region demanded by an unmatched crossing
/// can no longer be covered.
pub fn for_each_nonextendable<F>(t: &TaitGraph, visit: F) -> ControlFlow<()>
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    let mut last_touch = vec![0; t.num_regions()];
    for e in 0..t.num_edges() {
        let r = t.region(e);
        last_touch[r] = last_touch[r].max(t.crossing(e));
    }
    let mut csp = Csp {
        t,
        visit,
        used: vec![false; t.num_regions()],
        demand: vec![0; t.num_regions()],
        last_touch,
        unmatched: 0,
        stack: Vec::new(),
    };
    csp.run(0)
}

/// All maximal non-perfect matchings, optionally stopping after `limit`.
pub fn find_nonextendable(t: &TaitGraph, limit: Option<usize>) -> Vec<Matching> {
    let mut out = Vec::new();
    let _ = for_each_nonextendable(t, |m| {
        out.push(Matching::from_sorted(m.to_vec()));
        if limit.is_some_and(|l| out.len() >= l) {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    });
    out
}
