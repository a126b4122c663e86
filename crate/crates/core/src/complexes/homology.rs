use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::Signed;
use serde::{Deserialize, Serialize};

use super::SimplicialComplex;
use crate::linalg::{Reduction, SparseMatrix};

pub const FACE_CAP_VAR: &str = "TAITMORSE_FACE_CAP";
const DEFAULT_FACE_CAP: usize = 5_000_000;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HomologyError {
    #[error("complex has more than {cap} faces")]
    ResourceLimit { cap: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeHomology {
    pub degree: usize,
    pub betti: usize,
    /// Torsion coefficients, each at least 2.
    pub torsion: Vec<BigInt>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologyResult {
    pub reduced: bool,
    pub degrees: Vec<DegreeHomology>,
    pub f_vector: Vec<usize>,
}

impl HomologyResult {
    /// Nonzero Betti numbers by degree.
    pub fn ranks(&self) -> BTreeMap<usize, usize> {
        self.degrees.iter().filter(|h| h.betti > 0).map(|h| (h.degree, h.betti)).collect()
    }

    pub fn has_torsion(&self) -> bool {
        self.degrees.iter().any(|h| !h.torsion.is_empty())
    }

    pub fn betti(&self, k: usize) -> usize {
        self.degrees.get(k).map_or(0, |h| h.betti)
    }

    /// Alternating sum of Betti numbers, plus one when reduced.
    pub fn euler_characteristic(&self) -> i64 {
        let s: i64 = self.degrees.iter().map(|h| if h.degree % 2 == 0 { h.betti as i64 } else { -(h.betti as i64) }).sum();
        if self.reduced { s + 1 } else { s }
    }
}

/// Face cap from the environment, or a default of five million.
pub fn face_cap_from_env() -> usize {
    std::env::var(FACE_CAP_VAR).ok().and_then(|s| s.trim().parse().ok()).unwrap_or(DEFAULT_FACE_CAP)
}

pub fn homology(c: &SimplicialComplex, reduced: bool) -> Result<HomologyResult, HomologyError> {
    homology_with_cap(c, reduced, face_cap_from_env())
}

fn boundary(lower: &[Vec<u32>], upper: &[Vec<u32>]) -> SparseMatrix<i64> {
    let index: HashMap<&[u32], u32> = lower.iter().enumerate().map(|(i, f)| (f.as_slice(), i as u32)).collect();
    let cols = upper
        .iter()
        .map(|f| {
            let mut col: Vec<(u32, i64)> = (0..f.len())
                .map(|i| {
                    let mut g = f.clone();
                    g.remove(i);
                    (index[g.as_slice()], if i % 2 == 0 { 1 } else { -1 })
                })
                .collect();
            col.sort_unstable();
            col
        })
        .collect();
    SparseMatrix::new(lower.len(), cols)
}

fn reduce(m: &SparseMatrix<i64>) -> Reduction<BigInt> {
    match m.reduce() {
        Ok(r) => Reduction { rank: r.rank, nontrivial_invariants: r.nontrivial_invariants.into_iter().map(BigInt::from).collect() },
        Err(_) => m.map(|&v| BigInt::from(v)).reduce().expect("BigInt cannot overflow"),
    }
}

/// Integer simplicial homology through Smith normal forms of the boundary
/// maps. Reduced homology augments `C_0` by the empty face.
pub fn homology_with_cap(c: &SimplicialComplex, reduced: bool, cap: usize) -> Result<HomologyResult, HomologyError> {
    let faces = c.faces_capped(cap).ok_or(HomologyError::ResourceLimit { cap })?;
    let top = faces.len();
    // reductions[k] describes d_k : C_k -> C_{k-1}
    let mut reductions: Vec<Reduction<BigInt>> = Vec::with_capacity(top + 1);
    for k in 0..=top {
        let r = if k == 0 {
            let rank = usize::from(reduced && !faces.is_empty() && !faces[0].is_empty());
            Reduction { rank, nontrivial_invariants: Vec::new() }
        } else if k == top {
            Reduction { rank: 0, nontrivial_invariants: Vec::new() }
        } else {
            reduce(&boundary(&faces[k - 1], &faces[k]))
        };
        reductions.push(r);
    }
    let degrees = (0..top)
        .map(|k| DegreeHomology {
            degree: k,
            betti: faces[k].len() - reductions[k].rank - reductions[k + 1].rank,
            torsion: reductions[k + 1].nontrivial_invariants.iter().map(|v| v.abs()).filter(|v| *v > BigInt::from(1)).collect(),
        })
        .collect();
    Ok(HomologyResult { reduced, degrees, f_vector: faces.iter().map(Vec::len).collect() })
}
