//! Named diagrams: minimal diagrams of the prime knots through seven
//! crossings, the torus family `T(2, m)` and a one-crossing kink.

use crate::diagram::{parse_pd, Diagram, DiagramError, PdCode};

/// Minimal knot diagrams, counterclockwise PD convention.
pub const KNOTS: &[(&str, &str)] = &[
    ("3_1", "X(6,3,1,4) X(4,1,5,2) X(2,5,3,6)"),
    ("4_1", "X(8,5,1,6) X(4,1,5,2) X(2,8,3,7) X(6,4,7,3)"),
    ("5_1", "X(10,5,1,6) X(6,1,7,2) X(2,7,3,8) X(8,3,9,4) X(4,9,5,10)"),
    ("5_2", "X(5,1,6,10) X(1,7,2,6) X(9,3,10,2) X(3,9,4,8) X(7,5,8,4)"),
    ("6_1", "X(7,12,8,1) X(1,6,2,7) X(11,3,12,2) X(3,11,4,10) X(9,5,10,4) X(5,9,6,8)"),
    ("6_2", "X(12,8,1,7) X(8,2,9,1) X(2,10,3,9) X(6,4,7,3) X(4,11,5,12) X(10,5,11,6)"),
    ("6_3", "X(9,12,10,1) X(1,5,2,4) X(7,3,8,2) X(3,9,4,8) X(5,10,6,11) X(11,6,12,7)"),
    ("7_1", "X(14,7,1,8) X(8,1,9,2) X(2,9,3,10) X(10,3,11,4) X(4,11,5,12) X(12,5,13,6) X(6,13,7,14)"),
    ("7_2", "X(14,11,1,12) X(10,1,11,2) X(2,9,3,10) X(8,3,9,4) X(4,7,5,8) X(12,5,13,6) X(6,13,7,14)"),
    ("7_3", "X(14,9,1,10) X(8,1,9,2) X(2,7,3,8) X(10,3,11,4) X(4,11,5,12) X(12,5,13,6) X(6,13,7,14)"),
    ("7_4", "X(14,8,1,7) X(6,2,7,1) X(2,12,3,11) X(10,4,11,3) X(4,10,5,9) X(12,6,13,5) X(8,14,9,13)"),
    ("7_5", "X(14,5,1,6) X(4,1,5,2) X(2,9,3,10) X(10,3,11,4) X(6,11,7,12) X(12,7,13,8) X(8,13,9,14)"),
    ("7_6", "X(9,14,10,1) X(1,8,2,9) X(13,3,14,2) X(3,13,4,12) X(7,4,8,5) X(5,10,6,11) X(11,6,12,7)"),
    ("7_7", "X(7,14,8,1) X(1,6,2,7) X(11,2,12,3) X(3,10,4,11) X(13,5,14,4) X(5,9,6,8) X(9,13,10,12)"),
];

pub const TREFOIL: &str = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)";
pub const FIGURE_EIGHT: &str = "X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)";
pub const KINK: &str = "X(1,2,2,1)";

/// PD code of the standard diagram of the torus link `T(2, m)`, `m >= 2`.
pub fn torus_2(m: usize) -> PdCode {
    assert!(m >= 2, "T(2, m) needs m >= 2");
    let wrap = |x: usize| (x - 1) % (2 * m) + 1;
    let raw = (1..=m)
        .map(|k| [2 * k - 1, 2 * k + m - 1, 2 * k, 2 * k + m].map(|x| wrap(x) as u32))
        .collect();
    PdCode::new(raw).expect("torus family codes are well formed")
}

/// Resolve a corpus name: `3_1` … `7_7`, `trefoil`, `figure-eight`/`fig8`,
/// `kink`, or `T2_m` / `D_m` for the torus family.
pub fn lookup(name: &str) -> Option<PdCode> {
    let key = name.trim().to_ascii_lowercase();
    let key = key.strip_suffix(".pd").unwrap_or(&key);
    let text = match key {
        "trefoil" => Some(TREFOIL),
        "figure-eight" | "figure_eight" | "fig8" | "figure8" => Some(FIGURE_EIGHT),
        "kink" => Some(KINK),
        _ => KNOTS.iter().find(|(n, _)| *n == key).map(|(_, pd)| *pd),
    };
    if let Some(t) = text {
        return parse_pd(t).ok();
    }
    let m = key.strip_prefix("t2_").or_else(|| key.strip_prefix("d_")).or_else(|| key.strip_prefix("d"))?;
    let m: usize = m.parse().ok()?;
    (m >= 2).then(|| torus_2(m))
}

pub fn diagram(name: &str) -> Option<Diagram> {
    lookup(name).and_then(|pd| Diagram::build(&pd).ok())
}

/// Structural metadata recorded for each corpus entry.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct EntryCheck {
    pub name: String,
    pub crossings: usize,
    pub faces: usize,
    pub euler_ok: bool,
    pub reduced: bool,
}

pub fn check_entry(name: &str, pd: &PdCode) -> Result<EntryCheck, DiagramError> {
    let d = Diagram::build(pd)?;
    Ok(EntryCheck {
        name: name.to_string(),
        crossings: d.num_crossings(),
        faces: d.num_faces(),
        euler_ok: d.num_crossings() + d.num_faces() == d.num_arcs() + 2,
        reduced: d.is_reduced(),
    })
}

/// Knot names with at most `max` crossings.
pub fn knots_up_to(max: usize) -> impl Iterator<Item = (&'static str, Diagram)> {
    KNOTS.iter().filter_map(move |(name, pd)| {
        let d = Diagram::build(&parse_pd(pd).ok()?).ok()?;
        (d.num_crossings() <= max).then_some((*name, d))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_knot_entry_is_valid_and_reduced() {
        for (name, pd) in KNOTS {
            let c = check_entry(name, &parse_pd(pd).unwrap()).unwrap();
            assert!(c.euler_ok && c.reduced, "{name}");
            assert_eq!(c.faces, c.crossings + 2);
            assert_eq!(name[..1].parse::<usize>().unwrap(), c.crossings);
        }
    }

    #[test]
    fn torus_family_shapes() {
        for m in [3, 5, 7, 15] {
            let d = Diagram::build(&torus_2(m)).unwrap();
            assert_eq!(d.num_faces(), m + 2);
            assert!(d.is_reduced());
            let b = d.colour_graphs().0.num_vertices();
            let mut sizes = [b, m + 2 - b];
            sizes.sort();
            assert_eq!(sizes, [2, m]);
        }
    }

    #[test]
    fn lookup_aliases() {
        assert_eq!(lookup("trefoil"), parse_pd(TREFOIL).ok());
        assert_eq!(lookup("fig8"), parse_pd(FIGURE_EIGHT).ok());
        assert!(lookup("4_1").is_some());
        assert_eq!(lookup("T2_5"), Some(torus_2(5)));
        assert_eq!(torus_2(3), parse_pd(TREFOIL).unwrap());
        assert_eq!(lookup("D5"), Some(torus_2(5)));
        assert!(lookup("9_42").is_none());
        assert!(!diagram("kink").unwrap().is_reduced());
    }
}
