use super::{ClockType, Direction, Move, MoveKind, Site};
use crate::diagram::TaitGraph;
use crate::states::{jordan_resolution, Matching};

/// Every clock move available at `x`: a square whose two opposite edges
/// `{c → F1, c' → F2}` are matched swaps them for `{c → F2, c' → F1}`, or
/// back.
pub fn clock_moves(t: &TaitGraph, x: &Matching) -> Vec<(Move, Matching)> {
    let before = jordan_resolution(t, x);
    let mut out = Vec::new();
    for (i, s) in t.squares().iter().enumerate() {
        if s.crossings[0] == s.crossings[1] {
            continue;
        }
        let (from, to, direction) = if s.pair_a.iter().all(|&e| x.contains(e)) {
            (s.pair_a, s.pair_b, Direction::Ccw)
        } else if s.pair_b.iter().all(|&e| x.contains(e)) {
            (s.pair_b, s.pair_a, Direction::Cw)
        } else {
            continue;
        };
        let y = x.replace(&from, &to);
        let after = jordan_resolution(t, &y);
        let delta = after.num_components() as i32 - before.num_components() as i32;
        let clock_type = if delta != 0 {
            ClockType::III
        } else if before.components_at(&s.crossings).len() == 1 {
            ClockType::I
        } else {
            ClockType::II
        };
        let mv = Move {
            kind: MoveKind::Clock,
            site: Site::Square(i),
            clock_type: Some(clock_type),
            delta_j: Some(delta),
            direction: Some(direction),
        };
        out.push((mv, y));
    }
    out
}
