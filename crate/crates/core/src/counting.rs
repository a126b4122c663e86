//! Exact counts of perfect and general discrete Morse functions on a
//! diagram's cell structure.

use std::collections::BTreeMap;

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::diagram::{Colour, Diagram, PlaneGraph};
use crate::linalg::DenseMatrix;
use crate::poly::Polynomial;
use crate::{Count, IntMatrix, Poly};

/// Graph Laplacian `D − A`. Loops are skipped, parallel edges counted with
/// multiplicity.
pub fn laplacian(g: &PlaneGraph) -> IntMatrix {
    let n = g.num_vertices();
    let mut l = DenseMatrix::zeros(n, n);
    for e in 0..g.num_edges() {
        let [a, b] = g.endpoints(e);
        if a == b {
            continue;
        }
        l[(a, a)] += 1;
        l[(b, b)] += 1;
        l[(a, b)] -= 1;
        l[(b, a)] -= 1;
    }
    l
}

/// Laplacian with the formal edge variable `e_c` in place of each unit
/// entry.
pub fn symbolic_laplacian(g: &PlaneGraph) -> DenseMatrix<Poly> {
    let n = g.num_vertices();
    let mut l: DenseMatrix<Poly> = DenseMatrix::zeros(n, n);
    for e in 0..g.num_edges() {
        let [a, b] = g.endpoints(e);
        if a == b {
            continue;
        }
        let x = Polynomial::var(e);
        l[(a, a)] = l[(a, a)].clone() + x.clone();
        l[(b, b)] = l[(b, b)].clone() + x.clone();
        l[(a, b)] = l[(a, b)].clone() - x.clone();
        l[(b, a)] = l[(b, a)].clone() - x;
    }
    l
}

/// Kirchhoff: determinant of the Laplacian with row and column 0 removed.
pub fn count_spanning_trees(g: &PlaneGraph) -> Count {
    if g.num_vertices() <= 1 {
        return Count::one();
    }
    laplacian(g).minor(0, 0).det_bareiss().expect("BigInt cannot overflow")
}

/// `τ(G_b) · |V(G_b)| · |V(G_w)|`.
pub fn count_perfect_dmfs(d: &Diagram) -> Count {
    let (gb, gw) = d.colour_graphs();
    count_spanning_trees(&gb) * gb.num_vertices() * gw.num_vertices()
}

/// The same count from the characteristic polynomial of `L(g)`: the product
/// of the nonzero eigenvalues, times the number of vertices of the other
/// colour.
pub fn count_perfect_dmfs_spectral(d: &Diagram, colour: Colour) -> Count {
    let g = d.colour_graph(colour);
    let other = d.colour_graph(colour.other()).num_vertices();
    let p = laplacian(&g).charpoly();
    let n = g.num_vertices();
    let eigen_product = if n <= 1 { Count::one() } else { p[n - 1].abs() };
    eigen_product * other
}

/// Monomial of a forest pair: the crossings used as black and as white edges.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize)]
pub struct ForestKey {
    pub black: u64,
    pub white: u64,
}

impl ForestKey {
    fn of(colour: Colour, mask: u64) -> Self {
        match colour {
            Colour::Black => ForestKey { black: mask, white: 0 },
            Colour::White => ForestKey { black: 0, white: mask },
        }
    }

    pub fn degree(&self) -> u32 {
        self.black.count_ones() + self.white.count_ones()
    }
}

/// Squarefree polynomial in the variables `e_c` (black) and `e_c*` (white),
/// modulo `e_c · e_c* = 0`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ForestPolynomial {
    terms: BTreeMap<ForestKey, Count>,
}

#[derive(Serialize)]
struct TermRecord<'a> {
    black: Vec<usize>,
    white: Vec<usize>,
    coefficient: &'a Count,
}

fn bits(mask: u64) -> Vec<usize> {
    (0..64).filter(|i| mask >> i & 1 == 1).collect()
}

impl ForestPolynomial {
    pub fn terms(&self) -> impl Iterator<Item = (&ForestKey, &Count)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, key: ForestKey) -> Count {
        self.terms.get(&key).cloned().unwrap_or_default()
    }

    /// Value at `e_c = e_c* = 1`.
    pub fn coefficient_sum(&self) -> Count {
        self.terms.values().sum()
    }

    /// Sum of coefficients by total degree.
    pub fn by_degree(&self) -> BTreeMap<u32, Count> {
        let mut out = BTreeMap::new();
        for (k, c) in &self.terms {
            *out.entry(k.degree()).or_insert_with(Count::zero) += c;
        }
        out
    }

    fn add_term(&mut self, key: ForestKey, c: Count) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(key).or_insert_with(Count::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    /// Product in the quotient ring: repeated variables and any `e_c · e_c*`
    /// annihilate the term.
    pub fn mul(&self, other: &ForestPolynomial) -> ForestPolynomial {
        let mut out = ForestPolynomial::default();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let (ab, aw) = (a.black, a.white);
                let (bb, bw) = (b.black, b.white);
                if ab & bb != 0 || aw & bw != 0 || (ab | bb) & (aw | bw) != 0 {
                    continue;
                }
                out.add_term(ForestKey { black: ab | bb, white: aw | bw }, ca * cb);
            }
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let records: Vec<TermRecord> = self
            .terms
            .iter()
            .map(|(k, c)| TermRecord { black: bits(k.black), white: bits(k.white), coefficient: c })
            .collect();
        serde_json::to_value(records).expect("terms serialize")
    }
}

/// Call `f(mask, ρ)` for every spanning forest of `g`, where `ρ` is the
/// product of component sizes.
fn for_each_forest(g: &PlaneGraph, mut f: impl FnMut(u64, Count)) {
    assert!(g.num_edges() <= 64, "forest masks hold at most 64 edges");
    let edges: Vec<usize> = (0..g.num_edges()).filter(|&e| !g.is_loop(e)).collect();
    let labels: Vec<usize> = (0..g.num_vertices()).collect();
    fn go(g: &PlaneGraph, edges: &[usize], i: usize, mask: u64, labels: &mut Vec<usize>, f: &mut dyn FnMut(u64, Count)) {
        if i == edges.len() {
            let mut sizes = vec![0u64; labels.len()];
            for &l in labels.iter() {
                sizes[l] += 1;
            }
            let rho = sizes.iter().filter(|&&s| s > 0).fold(Count::one(), |acc, &s| acc * s);
            f(mask, rho);
            return;
        }
        go(g, edges, i + 1, mask, labels, f);
        let e = edges[i];
        let [a, b] = g.endpoints(e);
        let (la, lb) = (labels[a], labels[b]);
        if la != lb {
            let saved = labels.clone();
            for l in labels.iter_mut() {
                if *l == lb {
                    *l = la;
                }
            }
            go(g, edges, i + 1, mask | 1 << e, labels, f);
            *labels = saved;
        }
    }
    go(g, &edges, 0, 0, &mut labels.clone(), &mut f);
}

/// `det(I + L^symb(g))` by direct enumeration: each spanning forest `F`
/// contributes `ρ(F) · ∏_{e ∈ F} e`.
pub fn forest_polynomial(g: &PlaneGraph) -> ForestPolynomial {
    let mut out = ForestPolynomial::default();
    for_each_forest(g, |mask, rho| out.add_term(ForestKey::of(g.colour(), mask), rho));
    if cfg!(debug_assertions) && g.num_vertices() <= 6 {
        debug_assert_eq!(out, forest_polynomial_symbolic(g));
    }
    out
}

/// `det(I + L^symb(g))` by symbolic cofactor expansion.
pub fn forest_polynomial_symbolic(g: &PlaneGraph) -> ForestPolynomial {
    let n = g.num_vertices();
    let mut m = symbolic_laplacian(g);
    for i in 0..n {
        m[(i, i)] = m[(i, i)].clone() + Polynomial::one();
    }
    let det = m.det_expansion();
    let mut out = ForestPolynomial::default();
    for (mono, c) in det.terms() {
        assert!(mono.is_squarefree(), "non-squarefree term survived in a forest determinant");
        let mask = mono.support().fold(0u64, |acc, i| acc | 1 << i);
        out.add_term(ForestKey::of(g.colour(), mask), c.clone());
    }
    out
}

/// All dMfs induced by admissible partial Kauffman states: the product of
/// the two forest polynomials in the quotient ring, evaluated at one.
pub fn count_all_dmfs(d: &Diagram) -> Count {
    let (gb, gw) = d.colour_graphs();
    forest_polynomial(&gw).mul(&forest_polynomial(&gb)).coefficient_sum()
}

/// `(−1)^e c_e(g)` against the ρ-weighted number of `e`-edge forests, for
/// every `e`.
pub fn check_forest_coefficients(g: &PlaneGraph) -> bool {
    let p = laplacian(g).charpoly();
    let forests = forest_polynomial(g).by_degree();
    p.iter().enumerate().all(|(e, c)| {
        let signed = if e % 2 == 0 { c.clone() } else { -c.clone() };
        signed == forests.get(&(e as u32)).cloned().unwrap_or_default()
    })
}

fn fibonacci(k: usize) -> Count {
    let (mut a, mut b) = (Count::zero(), Count::one());
    for _ in 0..k {
        let c = &a + &b;
        a = b;
        b = c;
    }
    a
}

/// Closed form for the number of dMfs on the standard diagram of the torus
/// knot `T(2, 2n+1)`, with `Φ_1 = Φ_2 = 1`.
pub fn fibonacci_family_count(n: usize) -> Count {
    assert!(n >= 1);
    let phi = |k: usize| fibonacci(k);
    let two = Count::from(2);
    let first = phi(4 * n + 1) + phi(4 * n + 3) + Count::from(4 * n + 2) * phi(4 * n + 2) - &two;
    let second = &two * phi(4 * n + 1) + Count::from(4 * n + 3) * phi(4 * n + 2) - &two;
    assert_eq!(first, second);
    second
}

/// `2(2n+1)²`, the number of perfect dMfs on the same family.
pub fn torus_perfect_count(n: usize) -> Count {
    Count::from(2 * (2 * n + 1) * (2 * n + 1))
}
