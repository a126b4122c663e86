use std::fmt;
use std::ops::{Index, IndexMut};

use serde::{Deserialize, Serialize};

use crate::scalar::{checked_lin, checked_mul_sub, IntegerScalar, Overflow, Ring};

/// Dense row-major matrix over a ring.
#[derive(Clone, PartialEq, Serialize, Deserialize)]
pub struct DenseMatrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Ring> DenseMatrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![T::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = T::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Self { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn map<U: Ring>(&self, f: impl Fn(&T) -> U) -> DenseMatrix<U> {
        DenseMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    /// The submatrix obtained by deleting row `r` and column `c`.
    pub fn minor(&self, r: usize, c: usize) -> Self {
        let mut data = Vec::with_capacity((self.rows - 1) * (self.cols - 1));
        for i in (0..self.rows).filter(|&i| i != r) {
            for j in (0..self.cols).filter(|&j| j != c) {
                data.push(self[(i, j)].clone());
            }
        }
        Self { rows: self.rows - 1, cols: self.cols - 1, data }
    }

    /// Characteristic polynomial `det(t·I - A)` by Berkowitz's division-free
    /// algorithm. Coefficients are returned leading-first, so index `k` holds
    /// the coefficient of `t^(n-k)`.
    pub fn charpoly(&self) -> Vec<T> {
        assert!(self.is_square(), "charpoly of a non-square matrix");
        let n = self.rows;
        let mut p = vec![T::one()];
        for r in 0..n {
            // Leading principal block M = A[0..r][0..r], column C = A[0..r][r],
            // row R = A[r][0..r], corner a = A[r][r].
            let mut q = Vec::with_capacity(r + 2);
            q.push(T::one());
            q.push(-self[(r, r)].clone());
            let mut w: Vec<T> = (0..r).map(|i| self[(i, r)].clone()).collect();
            for _ in 0..r {
                let rw = (0..r).fold(T::zero(), |acc, j| acc + self[(r, j)].clone() * w[j].clone());
                q.push(-rw);
                w = (0..r)
                    .map(|i| (0..r).fold(T::zero(), |acc, j| acc + self[(i, j)].clone() * w[j].clone()))
                    .collect();
            }
            let mut next = Vec::with_capacity(r + 2);
            for j in 0..=r + 1 {
                let mut acc = T::zero();
                for (i, pi) in p.iter().enumerate().take(j.min(r) + 1) {
                    acc = acc + q[j - i].clone() * pi.clone();
                }
                next.push(acc);
            }
            p = next;
        }
        p
    }

    /// Determinant by Laplace expansion memoised over column subsets. Uses
    /// only ring operations; intended for small matrices over polynomial rings.
    pub fn det_expansion(&self) -> T {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let n = self.rows;
        assert!(n <= 24, "cofactor expansion limited to 24x24");
        if n == 0 {
            return T::one();
        }
        let mut dp: Vec<Option<T>> = vec![None; 1 << n];
        dp[0] = Some(T::one());
        for mask in 1usize..(1 << n) {
            let r = mask.count_ones() as usize - 1;
            let mut acc = T::zero();
            for j in 0..n {
                if mask & (1 << j) == 0 || self[(r, j)].is_zero() {
                    continue;
                }
                let rest = mask & !(1 << j);
                let Some(sub) = dp[rest].as_ref() else { continue };
                if sub.is_zero() {
                    continue;
                }
                let greater = (mask >> (j + 1)).count_ones();
                let term = self[(r, j)].clone() * sub.clone();
                acc = if greater % 2 == 0 { acc + term } else { acc - term };
            }
            dp[mask] = Some(acc);
        }
        dp[(1 << n) - 1].take().unwrap()
    }
}

impl<T: IntegerScalar> DenseMatrix<T> {
    /// Fraction-free Gaussian elimination (Bareiss). Exact for any integer
    /// scalar; fixed-width types report overflow instead of wrapping.
    pub fn det_bareiss(&self) -> Result<T, Overflow> {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let n = self.rows;
        let mut a = self.clone();
        let mut sign_negative = false;
        let mut prev = T::one();
        for k in 0..n {
            if a[(k, k)].is_zero() {
                let Some(p) = (k + 1..n).find(|&i| !a[(i, k)].is_zero()) else {
                    return Ok(T::zero());
                };
                a.swap_rows(k, p);
                sign_negative = !sign_negative;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let lhs = a[(i, j)].checked_mul(&a[(k, k)]).ok_or(Overflow)?;
                    let num = checked_mul_sub(&lhs, &a[(i, k)], &a[(k, j)])?;
                    a[(i, j)] = num / prev.clone();
                }
                a[(i, k)] = T::zero();
            }
            prev = a[(k, k)].clone();
        }
        let det = if n == 0 { T::one() } else { a[(n - 1, n - 1)].clone() };
        Ok(if sign_negative { -det } else { det })
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// Invariant factors of the Smith normal form: the nonzero diagonal
    /// entries `d_1 | d_2 | ...`, all positive.
    pub fn smith_invariants(&self) -> Result<Vec<T>, Overflow> {
        let mut a = self.clone();
        let (rows, cols) = (a.rows, a.cols);
        let mut out = Vec::new();
        for t in 0..rows.min(cols) {
            // Smallest nonzero entry of the trailing block becomes the pivot.
            let Some((pi, pj)) = a.min_abs_entry(t) else { break };
            a.swap_rows(t, pi);
            a.swap_cols(t, pj);
            loop {
                let mut dirty = false;
                for i in t + 1..rows {
                    if a[(i, t)].is_zero() {
                        continue;
                    }
                    let q = a[(i, t)].div_floor(&a[(t, t)]);
                    for j in t..cols {
                        a[(i, j)] = checked_mul_sub(&a[(i, j)], &q, &a[(t, j)])?;
                    }
                    if !a[(i, t)].is_zero() {
                        dirty = true;
                    }
                }
                for j in t + 1..cols {
                    if a[(t, j)].is_zero() {
                        continue;
                    }
                    let q = a[(t, j)].div_floor(&a[(t, t)]);
                    for i in t..rows {
                        a[(i, j)] = checked_mul_sub(&a[(i, j)], &q, &a[(i, t)])?;
                    }
                    if !a[(t, j)].is_zero() {
                        dirty = true;
                    }
                }
                if dirty {
                    let (pi, pj) = a.min_abs_in_cross(t);
                    a.swap_rows(t, pi);
                    a.swap_cols(t, pj);
                    continue;
                }
                // Row and column are clear; enforce divisibility of the rest.
                let pivot = a[(t, t)].clone();
                let bad = (t + 1..rows)
                    .flat_map(|i| (t + 1..cols).map(move |j| (i, j)))
                    .find(|&(i, j)| !a[(i, j)].is_multiple_of(&pivot));
                match bad {
                    Some((i, _)) => {
                        for j in t..cols {
                            let v = a[(i, j)].clone();
                            a[(t, j)] = checked_lin(&T::one(), &a[(t, j)], &T::one(), &v)?;
                        }
                    }
                    None => break,
                }
            }
            out.push(a[(t, t)].abs());
        }
        Ok(out)
    }

    fn min_abs_entry(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for i in t..self.rows {
            for j in t..self.cols {
                let v = &self[(i, j)];
                if v.is_zero() {
                    continue;
                }
                if best.map_or(true, |(bi, bj)| v.abs() < self[(bi, bj)].abs()) {
                    best = Some((i, j));
                    if v.is_unit() {
                        return best;
                    }
                }
            }
        }
        best
    }

    fn min_abs_in_cross(&self, t: usize) -> (usize, usize) {
        let mut best = (t, t);
        let consider = |i: usize, j: usize, best: &mut (usize, usize)| {
            let v = &self[(i, j)];
            if !v.is_zero() && (self[*best].is_zero() || v.abs() < self[*best].abs()) {
                *best = (i, j);
            }
        };
        for i in t..self.rows {
            consider(i, t, &mut best);
        }
        for j in t..self.cols {
            consider(t, j, &mut best);
        }
        best
    }
}

impl<T> Index<(usize, usize)> for DenseMatrix<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        &self.data[i * self.cols + j]
    }
}

impl<T> IndexMut<(usize, usize)> for DenseMatrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        &mut self.data[i * self.cols + j]
    }
}

impl<T: fmt::Display> fmt::Debug for DenseMatrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[")?;
        for i in 0..self.rows {
            write!(f, "  [")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.data[i * self.cols + j])?;
            }
            writeln!(f, "]")?;
        }
        write!(f, "]")
    }
}
