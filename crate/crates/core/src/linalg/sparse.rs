use std::collections::BTreeMap;

use crate::linalg::dense::DenseMatrix;
use crate::scalar::{checked_lin, checked_mul_sub, IntegerScalar, Overflow};

/// Sparse column of `(row, value)` pairs, sorted by row, no explicit zeros.
pub type SparseColumn<T> = Vec<(u32, T)>;

/// Column-major sparse integer matrix, the shape boundary operators take.
#[derive(Clone, Debug, PartialEq)]
pub struct SparseMatrix<T> {
    nrows: usize,
    cols: Vec<SparseColumn<T>>,
}

/// Result of column reduction: rank and the invariant factors of the
/// Smith normal form.
#[derive(Clone, Debug, PartialEq)]
pub struct Reduction<T> {
    pub rank: usize,
    /// Invariant factors different from one, in divisibility order.
    pub nontrivial_invariants: Vec<T>,
}

impl<T: IntegerScalar> SparseMatrix<T> {
    pub fn new(nrows: usize, cols: Vec<SparseColumn<T>>) -> Self {
        debug_assert!(cols.iter().all(|c| c.windows(2).all(|w| w[0].0 < w[1].0)));
        debug_assert!(cols.iter().flatten().all(|(r, v)| (*r as usize) < nrows && !v.is_zero()));
        Self { nrows, cols }
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(Vec::len).sum()
    }

    pub fn map<U: IntegerScalar>(&self, f: impl Fn(&T) -> U) -> SparseMatrix<U> {
        SparseMatrix {
            nrows: self.nrows,
            cols: self.cols.iter().map(|c| c.iter().map(|(r, v)| (*r, f(v))).collect()).collect(),
        }
    }

    pub fn to_dense(&self) -> DenseMatrix<T> {
        let mut d = DenseMatrix::zeros(self.nrows, self.cols.len());
        for (j, col) in self.cols.iter().enumerate() {
            for (r, v) in col {
                d[(*r as usize, j)] = v.clone();
            }
        }
        d
    }

    /// Reduce columns left to right so that the lowest nonzero rows are
    /// pairwise distinct. Only unimodular column operations are used, so the
    /// Smith form is preserved. When every pivot is a unit the Smith form is
    /// all ones; otherwise the reduced columns are handed to a dense Smith
    /// normal form.
    pub fn reduce(&self) -> Result<Reduction<T>, Overflow> {
        let mut pivot_of_row: Vec<Option<usize>> = vec![None; self.nrows];
        let mut reduced: Vec<SparseColumn<T>> = Vec::new();
        let mut all_units = true;

        for col in &self.cols {
            let mut cur = col.clone();
            while let Some((low, low_val)) = cur.last().cloned() {
                let Some(p) = pivot_of_row[low as usize] else {
                    if !low_val.is_unit() {
                        all_units = false;
                    }
                    pivot_of_row[low as usize] = Some(reduced.len());
                    reduced.push(std::mem::take(&mut cur));
                    break;
                };
                let pivot_val = reduced[p].last().unwrap().1.clone();
                if low_val.is_multiple_of(&pivot_val) {
                    let q = low_val / pivot_val;
                    cur = axpy(&cur, &q, &reduced[p])?;
                } else {
                    // Euclid on the two columns: [p', cur'] = [p, cur] * U
                    // with U unimodular and low(p') = gcd.
                    let ext = pivot_val.extended_gcd(&low_val);
                    let g = ext.gcd;
                    let new_p = lin_comb(&ext.x, &reduced[p], &ext.y, &cur)?;
                    let a = -(low_val / g.clone());
                    let b = pivot_val / g;
                    cur = lin_comb(&a, &reduced[p], &b, &cur)?;
                    if !new_p.last().unwrap().1.is_unit() {
                        all_units = false;
                    }
                    reduced[p] = new_p;
                }
            }
        }

        let rank = reduced.len();
        if all_units {
            return Ok(Reduction { rank, nontrivial_invariants: Vec::new() });
        }
        // Compact the touched rows and fall back to a dense Smith form.
        let mut row_index: BTreeMap<u32, usize> = BTreeMap::new();
        for c in &reduced {
            for (r, _) in c {
                let next = row_index.len();
                row_index.entry(*r).or_insert(next);
            }
        }
        let mut dense = DenseMatrix::zeros(row_index.len(), reduced.len());
        for (j, c) in reduced.iter().enumerate() {
            for (r, v) in c {
                dense[(row_index[r], j)] = v.clone();
            }
        }
        let inv = dense.smith_invariants()?;
        debug_assert_eq!(inv.len(), rank);
        Ok(Reduction { rank, nontrivial_invariants: inv.into_iter().filter(|v| !v.is_one()).collect() })
    }
}

/// `x - q * y`
fn axpy<T: IntegerScalar>(x: &[(u32, T)], q: &T, y: &[(u32, T)]) -> Result<SparseColumn<T>, Overflow> {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        let take_x = j >= y.len() || (i < x.len() && x[i].0 < y[j].0);
        let take_y = i >= x.len() || (j < y.len() && y[j].0 < x[i].0);
        if take_x {
            out.push(x[i].clone());
            i += 1;
        } else if take_y {
            let v = checked_mul_sub(&T::zero(), q, &y[j].1)?;
            out.push((y[j].0, v));
            j += 1;
        } else {
            let v = checked_mul_sub(&x[i].1, q, &y[j].1)?;
            if !v.is_zero() {
                out.push((x[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    Ok(out)
}

/// `s * x + t * y`
fn lin_comb<T: IntegerScalar>(
    s: &T,
    x: &[(u32, T)],
    t: &T,
    y: &[(u32, T)],
) -> Result<SparseColumn<T>, Overflow> {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    let zero = T::zero();
    while i < x.len() || j < y.len() {
        let (row, xv, yv) = if j >= y.len() || (i < x.len() && x[i].0 < y[j].0) {
            i += 1;
            (x[i - 1].0, &x[i - 1].1, &zero)
        } else if i >= x.len() || y[j].0 < x[i].0 {
            j += 1;
            (y[j - 1].0, &zero, &y[j - 1].1)
        } else {
            i += 1;
            j += 1;
            (x[i - 1].0, &x[i - 1].1, &y[j - 1].1)
        };
        let v = checked_lin(s, xv, t, yv)?;
        if !v.is_zero() {
            out.push((row, v));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn from_dense(rows: &[&[i64]]) -> SparseMatrix<i64> {
        let nrows = rows.len();
        let ncols = rows[0].len();
        let cols = (0..ncols)
            .map(|j| {
                (0..nrows)
                    .filter(|&i| rows[i][j] != 0)
                    .map(|i| (i as u32, rows[i][j]))
                    .collect()
            })
            .collect();
        SparseMatrix::new(nrows, cols)
    }

    #[test]
    fn unit_pivots_give_trivial_invariants() {
        // boundary of a filled triangle edge->vertex
        let d1 = from_dense(&[&[-1, -1, 0], &[1, 0, -1], &[0, 1, 1]]);
        let r = d1.reduce().unwrap();
        assert_eq!(r.rank, 2);
        assert!(r.nontrivial_invariants.is_empty());
    }

    #[test]
    fn non_unit_pivots_fall_back_to_dense_smith() {
        let a = from_dense(&[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]]);
        let r = a.reduce().unwrap();
        assert_eq!(r.rank, 3);
        assert_eq!(r.nontrivial_invariants, vec![2, 6, 12]);
        let b = from_dense(&[&[2, 3]]);
        let r = b.reduce().unwrap();
        assert_eq!(r.rank, 1);
        assert!(r.nontrivial_invariants.is_empty());
    }

    #[test]
    fn reduction_rank_agrees_with_dense_smith() {
        let a = from_dense(&[&[1, 2, 3, 4], &[2, 4, 6, 8], &[0, 1, 0, 1], &[3, 0, 9, 0]]);
        let dense = a.to_dense().smith_invariants().unwrap();
        let r = a.reduce().unwrap();
        assert_eq!(r.rank, dense.len());
        let nontrivial: Vec<i64> = dense.into_iter().filter(|v| *v != 1).collect();
        assert_eq!(r.nontrivial_invariants, nontrivial);
    }
}
