use std::ops::ControlFlow;

use serde::{Deserialize, Serialize};

use super::Matching;
use crate::diagram::{Colour, TaitGraph};

/// Which matchings to enumerate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Filter {
    All,
    /// Every crossing matched (maximal as a partial Kauffman state).
    MaximalPks,
    PerfectAdmissible,
    /// Acyclic matchings.
    Dmf,
    PerfectDmf,
    /// Perfect matchings leaving exactly the given black and white regions
    /// unmatched.
    KauffmanStates { black: usize, white: usize },
    /// No Tait edge can be added (perfect or not).
    MaximalMatching,
    /// Acyclic, and no edge can be added keeping it an acyclic matching.
    MaximalDmf,
}

impl Filter {
    fn perfect(self) -> bool {
        matches!(self, Filter::MaximalPks | Filter::PerfectAdmissible | Filter::PerfectDmf | Filter::KauffmanStates { .. })
    }

    fn acyclic(self) -> bool {
        matches!(self, Filter::Dmf | Filter::PerfectDmf | Filter::MaximalDmf)
    }
}

struct Search<'a, F> {
    t: &'a TaitGraph,
    filter: Filter,
    visit: F,
    used: Vec<bool>,
    /// Region → region reached through its matched crossing.
    next: Vec<Option<usize>>,
    /// Regions that must end up matched (touching a skipped crossing).
    required: Vec<usize>,
    /// Largest crossing index touching each region.
    last_touch: Vec<usize>,
    stack: Vec<usize>,
}

impl<F: FnMut(&[usize]) -> ControlFlow<()>> Search<'_, F> {
    fn creates_cycle(&self, e: usize) -> bool {
        let r = self.t.region(e);
        let mut s = self.t.opposite_region(e);
        loop {
            if s == r {
                return true;
            }
            match self.next[s] {
                Some(n) => s = n,
                None => return false,
            }
        }
    }

    fn accept(&self) -> bool {
        let t = self.t;
        match self.filter {
            Filter::All | Filter::Dmf | Filter::MaximalPks | Filter::PerfectDmf | Filter::KauffmanStates { .. } => true,
            Filter::PerfectAdmissible => Colour::BOTH
                .iter()
                .all(|&c| t.regions_of(c).iter().any(|&r| !self.used[r])),
            Filter::MaximalMatching => {
                let first = self.stack.last().map_or(0, |&e| t.crossing(e) + 1);
                (first..t.num_crossings()).all(|c| (0..4).all(|k| self.used[t.diagram().face_at(c, k)]))
                    && self.required.iter().all(|&r| self.used[r])
            }
            Filter::MaximalDmf => {
                let mut matched = vec![false; t.num_crossings()];
                for &e in &self.stack {
                    matched[t.crossing(e)] = true;
                }
                (0..t.num_edges()).all(|e| {
                    matched[t.crossing(e)] || self.used[t.region(e)] || self.creates_cycle(e)
                })
            }
        }
    }

    fn run(&mut self, next_crossing: usize) -> ControlFlow<()> {
        let t = self.t;
        let n = t.num_crossings();
        if !self.filter.perfect() || next_crossing == n {
            if self.accept() {
                (self.visit)(&self.stack)?;
            }
        }
        let range = if self.filter.perfect() { next_crossing..(next_crossing + 1).min(n) } else { next_crossing..n };
        let frame_required = self.required.len();
        for c in range {
            if self.filter == Filter::MaximalMatching && c > next_crossing {
                // Crossing c - 1 stays unmatched for good.
                for k in 0..4 {
                    self.required.push(t.diagram().face_at(c - 1, k));
                }
            }
            for k in 0..4 {
                let e = t.edge(c, k);
                let r = t.region(e);
                if self.used[r] {
                    continue;
                }
                if self.filter.acyclic() && self.creates_cycle(e) {
                    continue;
                }
                self.used[r] = true;
                self.next[r] = Some(t.opposite_region(e));
                self.stack.push(e);
                let feasible = self.filter != Filter::MaximalMatching
                    || self.required.iter().all(|&q| self.used[q] || self.last_touch[q] > c);
                let flow = if feasible { self.run(c + 1) } else { ControlFlow::Continue(()) };
                self.stack.pop();
                self.next[r] = None;
                self.used[r] = false;
                if flow.is_break() {
                    self.required.truncate(frame_required);
                    return flow;
                }
            }
        }
        self.required.truncate(frame_required);
        ControlFlow::Continue(())
    }
}

/// Visit every matching passing `filter`, as sorted edge-id slices, in
/// lexicographic order. The visitor may stop the search early.
pub fn for_each_matching<F>(t: &TaitGraph, filter: Filter, visit: F) -> ControlFlow<()>
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    let mut used = vec![false; t.num_regions()];
    if let Filter::KauffmanStates { black, white } = filter {
        assert_eq!(t.region_colour(black), Colour::Black, "forbidden black region has the wrong colour");
        assert_eq!(t.region_colour(white), Colour::White, "forbidden white region has the wrong colour");
        used[black] = true;
        used[white] = true;
    }
    let mut last_touch = vec![0; t.num_regions()];
    for e in 0..t.num_edges() {
        let r = t.region(e);
        last_touch[r] = last_touch[r].max(t.crossing(e));
    }
    let mut s = Search {
        t,
        filter,
        visit,
        used,
        next: vec![None; t.num_regions()],
        required: Vec::new(),
        last_touch,
        stack: Vec::with_capacity(t.num_crossings()),
    };
    s.run(0)
}

pub fn enumerate_matchings(t: &TaitGraph, filter: Filter) -> Vec<Matching> {
    let mut out = Vec::new();
    let _ = for_each_matching(t, filter, |m| {
        out.push(Matching::from_sorted(m.to_vec()));
        ControlFlow::Continue(())
    });
    out
}

pub fn count_matchings(t: &TaitGraph, filter: Filter) -> usize {
    let mut k = 0;
    let _ = for_each_matching(t, filter, |_| {
        k += 1;
        ControlFlow::Continue(())
    });
    k
}
