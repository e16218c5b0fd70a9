//! Sparse exact linear algebra over the scalar field.
//!
//! Module actions and tensor operators are stored column-major: entry
//! lookups during composition iterate one column at a time, which matches
//! how operator products are evaluated.

use crate::error::{Error, Result};
use crate::qfield::QScalar;
use std::collections::BTreeMap;

/// Sparse vector: index -> nonzero scalar.
pub type SparseVec = BTreeMap<usize, QScalar>;

/// Add `coeff * v` into `acc`, dropping entries that cancel to zero.
pub fn axpy(acc: &mut SparseVec, coeff: &QScalar, v: &SparseVec) {
    if coeff.is_zero() {
        return;
    }
    for (i, x) in v {
        let add = coeff * x;
        match acc.get_mut(i) {
            Some(cur) => {
                *cur += add;
                if cur.is_zero() {
                    acc.remove(i);
                }
            }
            None => {
                if !add.is_zero() {
                    acc.insert(*i, add);
                }
            }
        }
    }
}

/// Column-major sparse matrix with exact scalar entries.
#[derive(Clone, PartialEq, Eq)]
pub struct SparseMat {
    rows: usize,
    cols: Vec<SparseVec>,
}

impl SparseMat {
    pub fn zero(rows: usize, cols: usize) -> Self {
        SparseMat {
            rows,
            cols: vec![SparseVec::new(); cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = SparseMat::zero(n, n);
        for i in 0..n {
            m.cols[i].insert(i, QScalar::one());
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn set(&mut self, i: usize, j: usize, v: QScalar) {
        debug_assert!(i < self.rows && j < self.cols.len());
        if v.is_zero() {
            self.cols[j].remove(&i);
        } else {
            self.cols[j].insert(i, v);
        }
    }

    pub fn add_to(&mut self, i: usize, j: usize, v: &QScalar) {
        if v.is_zero() {
            return;
        }
        let col = &mut self.cols[j];
        match col.get_mut(&i) {
            Some(cur) => {
                *cur += v;
                if cur.is_zero() {
                    col.remove(&i);
                }
            }
            None => {
                col.insert(i, v.clone());
            }
        }
    }

    pub fn get(&self, i: usize, j: usize) -> Option<&QScalar> {
        self.cols[j].get(&i)
    }

    pub fn entry(&self, i: usize, j: usize) -> QScalar {
        self.get(i, j).cloned().unwrap_or_else(QScalar::zero)
    }

    pub fn col(&self, j: usize) -> &SparseVec {
        &self.cols[j]
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(|c| c.is_empty())
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(|c| c.len()).sum()
    }

    /// Matrix-vector product.
    pub fn apply(&self, x: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (j, xv) in x {
            axpy(&mut out, xv, &self.cols[*j]);
        }
        out
    }

    /// Matrix product `self * other`.
    pub fn mul(&self, other: &SparseMat) -> SparseMat {
        debug_assert_eq!(self.cols.len(), other.rows);
        let mut out = SparseMat::zero(self.rows, other.ncols());
        for (j, col) in other.cols.iter().enumerate() {
            if !col.is_empty() {
                out.cols[j] = self.apply(col);
            }
        }
        out
    }

    pub fn add(&self, other: &SparseMat) -> SparseMat {
        debug_assert_eq!((self.rows, self.ncols()), (other.rows, other.ncols()));
        let mut out = self.clone();
        let one = QScalar::one();
        for (j, col) in other.cols.iter().enumerate() {
            if !col.is_empty() {
                axpy(&mut out.cols[j], &one, col);
            }
        }
        out
    }

    pub fn sub(&self, other: &SparseMat) -> SparseMat {
        let mut out = self.clone();
        let minus_one = -&QScalar::one();
        for (j, col) in other.cols.iter().enumerate() {
            if !col.is_empty() {
                axpy(&mut out.cols[j], &minus_one, col);
            }
        }
        out
    }

    pub fn scaled(&self, c: &QScalar) -> SparseMat {
        let mut out = SparseMat::zero(self.rows, self.ncols());
        if c.is_zero() {
            return out;
        }
        for (j, col) in self.cols.iter().enumerate() {
            for (i, v) in col {
                out.cols[j].insert(*i, c * v);
            }
        }
        out
    }

    /// In-place `self += c * other`.
    pub fn add_scaled_assign(&mut self, other: &SparseMat, c: &QScalar) {
        debug_assert_eq!((self.rows, self.ncols()), (other.rows, other.ncols()));
        if c.is_zero() {
            return;
        }
        for (j, col) in other.cols.iter().enumerate() {
            axpy(&mut self.cols[j], c, col);
        }
    }

    /// Scale each column by its own factor (right-multiplication by a
    /// diagonal matrix).
    pub fn col_scaled(&self, scales: &[QScalar]) -> SparseMat {
        debug_assert_eq!(self.ncols(), scales.len());
        let mut out = SparseMat::zero(self.rows, self.ncols());
        for (j, col) in self.cols.iter().enumerate() {
            if scales[j].is_zero() {
                continue;
            }
            for (i, v) in col {
                out.cols[j].insert(*i, &scales[j] * v);
            }
        }
        out
    }

    /// Scale each row by its own factor (left-multiplication by a diagonal
    /// matrix).
    pub fn row_scaled(&self, scales: &[QScalar]) -> SparseMat {
        let mut out = SparseMat::zero(self.rows, self.ncols());
        for (j, col) in self.cols.iter().enumerate() {
            for (i, v) in col {
                if !scales[*i].is_zero() {
                    let scaled = &scales[*i] * v;
                    if !scaled.is_zero() {
                        out.cols[j].insert(*i, scaled);
                    }
                }
            }
        }
        out
    }

    pub fn trace(&self) -> QScalar {
        let mut acc = QScalar::zero();
        for (j, col) in self.cols.iter().enumerate() {
            if let Some(v) = col.get(&j) {
                acc += v;
            }
        }
        acc
    }

    /// If the matrix is `s * I`, return `s`.
    pub fn as_scalar_multiple_of_identity(&self) -> Option<QScalar> {
        if self.rows != self.ncols() || self.rows == 0 {
            return None;
        }
        let s = self.entry(0, 0);
        for (j, col) in self.cols.iter().enumerate() {
            for (i, v) in col {
                if i != &j || *v != s {
                    return None;
                }
            }
            if !s.is_zero() && col.get(&j).is_none() {
                return None;
            }
        }
        Some(s)
    }

    /// The matrix power by repeated multiplication (small exponents only).
    pub fn pow(&self, mut e: u32) -> SparseMat {
        debug_assert_eq!(self.rows, self.ncols());
        let mut acc = SparseMat::identity(self.rows);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }
}

impl std::fmt::Debug for SparseMat {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "SparseMat {}x{} [", self.rows, self.ncols())?;
        for (j, col) in self.cols.iter().enumerate() {
            for (i, v) in col {
                writeln!(f, "  ({i},{j}) = {v:?}")?;
            }
        }
        write!(f, "]")
    }
}

/// Indices of the lexicographically first maximal independent set of
/// columns, by fraction-exact row elimination.
pub fn column_rank_profile(m: &[Vec<QScalar>]) -> Vec<usize> {
    let rows = m.len();
    if rows == 0 {
        return Vec::new();
    }
    let cols = m[0].len();
    let mut work: Vec<Vec<QScalar>> = m.to_vec();
    let mut profile = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        let Some(p) = (row..rows).find(|r| !work[*r][col].is_zero()) else {
            continue;
        };
        work.swap(row, p);
        let inv = work[row][col].inverse().expect("pivot is nonzero");
        for c in col..cols {
            work[row][c] = &work[row][c] * &inv;
        }
        for r in row + 1..rows {
            if !work[r][col].is_zero() {
                let f = work[r][col].clone();
                for c in col..cols {
                    let sub = &f * &work[row][c];
                    work[r][c] -= sub;
                }
            }
        }
        profile.push(col);
        row += 1;
        if row == rows {
            break;
        }
    }
    profile
}

/// Rank of a dense matrix by fraction-exact Gaussian elimination.
pub fn dense_rank(mut m: Vec<Vec<QScalar>>) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut rank = 0;
    let mut row = 0;
    for col in 0..cols {
        let Some(p) = (row..rows).find(|r| !m[*r][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = m[row][col].inverse().expect("pivot is nonzero");
        for c in col..cols {
            m[row][c] = &m[row][c] * &inv;
        }
        for r in 0..rows {
            if r != row && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in col..cols {
                    let sub = &f * &m[row][c];
                    m[r][c] -= sub;
                }
            }
        }
        row += 1;
        rank += 1;
        if row == rows {
            break;
        }
    }
    rank
}

/// Solve a square dense system `a x = b` exactly.  Errors if the matrix is
/// singular.
pub fn solve_dense(mut a: Vec<Vec<QScalar>>, mut b: Vec<QScalar>) -> Result<Vec<QScalar>> {
    let n = a.len();
    debug_assert!(a.iter().all(|row| row.len() == n));
    debug_assert_eq!(b.len(), n);
    for col in 0..n {
        let p = (col..n)
            .find(|r| !a[*r][col].is_zero())
            .ok_or(Error::DivisionByZero)?;
        a.swap(col, p);
        b.swap(col, p);
        let inv = a[col][col].inverse()?;
        for c in col..n {
            a[col][c] = &a[col][c] * &inv;
        }
        b[col] = &b[col] * &inv;
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for c in col..n {
                    let sub = &f * &a[col][c];
                    a[r][c] -= sub;
                }
                let sub = &f * &b[col];
                b[r] -= sub;
            }
        }
    }
    Ok(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qfield::QField;

    fn f() -> QField {
        QField::new(2)
    }

    #[test]
    fn matrix_product_and_identity() {
        let q = f().q_power(&num::BigRational::from_integer(1.into())).unwrap();
        let mut a = SparseMat::zero(2, 2);
        a.set(0, 1, q.clone());
        a.set(1, 0, QScalar::one());
        let id = SparseMat::identity(2);
        assert_eq!(a.mul(&id), a);
        assert_eq!(id.mul(&a), a);
        // a^2 = q * id.
        let sq = a.mul(&a);
        assert_eq!(sq, id.scaled(&q));
        assert_eq!(a.pow(2), sq);
        assert_eq!(sq.trace(), &q + &q);
    }

    #[test]
    fn apply_matches_columns() {
        let mut a = SparseMat::zero(3, 2);
        a.set(0, 0, QScalar::from_int(1));
        a.set(2, 0, QScalar::from_int(5));
        a.set(1, 1, QScalar::from_int(-2));
        let mut x = SparseVec::new();
        x.insert(0, QScalar::from_int(3));
        x.insert(1, QScalar::from_int(1));
        let y = a.apply(&x);
        assert_eq!(y.get(&0), Some(&QScalar::from_int(3)));
        assert_eq!(y.get(&1), Some(&QScalar::from_int(-2)));
        assert_eq!(y.get(&2), Some(&QScalar::from_int(15)));
    }

    #[test]
    fn cancellation_prunes_entries() {
        let mut a = SparseMat::zero(2, 2);
        a.set(0, 0, QScalar::from_int(4));
        let b = a.scaled(&QScalar::from_int(-1));
        assert!(a.add(&b).is_zero());
        assert_eq!(a.add(&b).nnz(), 0);
    }

    #[test]
    fn rank_and_solve() {
        let one = QScalar::one;
        let int = QScalar::from_int;
        // [[1,2],[2,4]] has rank 1.
        let m = vec![vec![one(), int(2)], vec![int(2), int(4)]];
        assert_eq!(dense_rank(m), 1);
        // Solve [[1,1],[1,-1]] x = [3,1] -> x = (2,1).
        let a = vec![vec![one(), one()], vec![one(), int(-1)]];
        let b = vec![int(3), int(1)];
        assert_eq!(solve_dense(a, b).unwrap(), vec![int(2), int(1)]);
        // Singular system errors.
        let a = vec![vec![one(), one()], vec![one(), one()]];
        assert!(solve_dense(a, vec![one(), one()]).is_err());
    }
}
