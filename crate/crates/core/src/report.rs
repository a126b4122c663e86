//! Serializable per-diagram reports. Every number records how it was
//! obtained.

use serde::{Serialize, Serializer};

use crate::complexes::{connectivity_bound, ConnectivityBound};
use crate::counting::{count_all_dmfs, count_perfect_dmfs, count_perfect_dmfs_spectral, count_spanning_trees};
use crate::diagram::{Colour, Diagram};
use crate::states::{count_matchings, Filter};
use crate::Count;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Provenance {
    Formula,
    Enumeration,
    BothAgree,
    Disagree,
}

/// Integers as JSON numbers while they fit, as decimal strings beyond.
fn count_json<S: Serializer>(c: &Count, s: S) -> Result<S::Ok, S::Error> {
    match i64::try_from(c) {
        Ok(v) => s.serialize_i64(v),
        Err(_) => s.serialize_str(&c.to_string()),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Tagged {
    #[serde(serialize_with = "count_json")]
    pub value: Count,
    pub provenance: Provenance,
}

impl Tagged {
    pub fn formula(value: Count) -> Self {
        Tagged { value, provenance: Provenance::Formula }
    }

    /// Combine a formula value with an independent enumeration.
    pub fn checked(formula: Count, enumerated: Count) -> Self {
        let provenance = if formula == enumerated { Provenance::BothAgree } else { Provenance::Disagree };
        Tagged { value: formula, provenance }
    }

    pub fn agrees(&self) -> bool {
        self.provenance != Provenance::Disagree
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CountReport {
    pub diagram: String,
    pub crossings: usize,
    pub perfect: Tagged,
    pub all: Tagged,
    /// Present when the enumeration oracle ran.
    pub oracle_agreement: Option<bool>,
}

/// Perfect and total dMf counts. With `oracle`, both are recomputed by
/// exhaustive enumeration, and the perfect count also spectrally.
pub fn count_report(name: &str, d: &Diagram, oracle: bool) -> CountReport {
    let perfect = count_perfect_dmfs(d);
    let all = count_all_dmfs(d);
    let (perfect, all, agreement) = if oracle {
        let t = d.tait();
        let spectral_ok = Colour::BOTH.iter().all(|&c| count_perfect_dmfs_spectral(d, c) == perfect);
        let p = Tagged::checked(perfect, Count::from(count_matchings(&t, Filter::PerfectDmf)));
        let a = Tagged::checked(all, Count::from(count_matchings(&t, Filter::Dmf)));
        let ok = spectral_ok && p.agrees() && a.agrees();
        (p, a, Some(ok))
    } else {
        (Tagged::formula(perfect), Tagged::formula(all), None)
    };
    CountReport { diagram: name.to_string(), crossings: d.num_crossings(), perfect, all, oracle_agreement: agreement }
}

#[derive(Debug, Clone, Serialize)]
pub struct InfoReport {
    pub diagram: String,
    pub pd: String,
    pub crossings: usize,
    pub arcs: usize,
    pub faces: usize,
    pub black_regions: usize,
    pub white_regions: usize,
    pub euler_ok: bool,
    pub reduced: bool,
    pub nugatory_crossings: Vec<usize>,
    pub black_two_connected: bool,
    pub white_two_connected: bool,
    pub spanning_trees: Tagged,
    pub connectivity: ConnectivityBound,
}

pub fn info_report(name: &str, d: &Diagram) -> InfoReport {
    let (gb, gw) = d.colour_graphs();
    let tb = count_spanning_trees(&gb);
    let tw = count_spanning_trees(&gw);
    let (b, w) = d.colour_class_sizes();
    InfoReport {
        diagram: name.to_string(),
        pd: d.pd().to_string(),
        crossings: d.num_crossings(),
        arcs: d.num_arcs(),
        faces: d.num_faces(),
        black_regions: b,
        white_regions: w,
        euler_ok: d.num_crossings() + 2 == d.num_faces(),
        reduced: d.is_reduced(),
        nugatory_crossings: d.nugatory_crossings(),
        black_two_connected: gb.is_two_connected(),
        white_two_connected: gw.is_two_connected(),
        // the dual graph's count is the independent check
        spanning_trees: Tagged::checked(tb, tw),
        connectivity: connectivity_bound(d),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    #[test]
    fn trefoil_counts_with_oracle() {
        let d = corpus::diagram("trefoil").unwrap();
        let r = count_report("trefoil", &d, true);
        assert_eq!(r.perfect.value, Count::from(18));
        assert_eq!(r.all.value, Count::from(64));
        assert_eq!(r.oracle_agreement, Some(true));
        let json = serde_json::to_value(&r).unwrap();
        assert_eq!(json["perfect"]["value"], 18);
        assert_eq!(json["perfect"]["provenance"], "both_agree");
        let plain = count_report("trefoil", &d, false);
        assert_eq!(plain.perfect.provenance, Provenance::Formula);
        assert_eq!(plain.oracle_agreement, None);
    }

    #[test]
    fn large_counts_serialize_as_strings() {
        let t = Tagged::formula(Count::from(u64::MAX));
        assert_eq!(serde_json::to_value(&t).unwrap()["value"], u64::MAX.to_string());
    }

    #[test]
    fn figure_eight_info() {
        let d = corpus::diagram("4_1").unwrap();
        let r = info_report("4_1", &d);
        assert_eq!((r.crossings, r.faces, r.arcs), (4, 6, 8));
        assert!(r.euler_ok && r.reduced);
        assert_eq!(r.spanning_trees.value, Count::from(5));
        assert_eq!(r.connectivity.bound, 1);
    }
}
