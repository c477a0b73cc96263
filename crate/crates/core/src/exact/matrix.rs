//! Sparse exact matrices in compressed-column form.

use std::fmt;

use super::Rational;
use crate::error::{Error, Result};

/// A sparse vector: strictly increasing indices, no stored zeros.
pub type SparseVec = Vec<(usize, Rational)>;

/// Sorts, merges duplicate indices and drops zeros.
pub fn compress(mut entries: Vec<(usize, Rational)>) -> SparseVec {
    entries.sort_unstable_by_key(|(i, _)| *i);
    let mut out: SparseVec = Vec::with_capacity(entries.len());
    for (i, v) in entries {
        match out.last_mut() {
            Some((j, acc)) if *j == i => *acc += v,
            _ => out.push((i, v)),
        }
    }
    out.retain(|(_, v)| !v.is_zero());
    out
}

#[derive(Clone, PartialEq, Eq)]
pub struct SparseMatrix {
    nrows: usize,
    cols: Vec<SparseVec>,
}

impl SparseMatrix {
    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        SparseMatrix { nrows, cols: vec![Vec::new(); ncols] }
    }

    pub fn identity(n: usize) -> Self {
        Self::scalar(n, Rational::one())
    }

    pub fn scalar(n: usize, c: Rational) -> Self {
        if c.is_zero() {
            return Self::zeros(n, n);
        }
        SparseMatrix {
            nrows: n,
            cols: (0..n).map(|j| vec![(j, c.clone())]).collect(),
        }
    }

    /// Matrix unit `e_{ij}` (row `i`, column `j`) scaled by `c`.
    pub fn unit(n: usize, i: usize, j: usize, c: Rational) -> Self {
        let mut m = Self::zeros(n, n);
        if !c.is_zero() {
            m.cols[j].push((i, c));
        }
        m
    }

    pub fn from_triplets(nrows: usize, ncols: usize, triplets: Vec<(usize, usize, Rational)>) -> Self {
        let mut cols: Vec<Vec<(usize, Rational)>> = vec![Vec::new(); ncols];
        for (i, j, v) in triplets {
            assert!(i < nrows && j < ncols, "triplet out of range");
            cols[j].push((i, v));
        }
        SparseMatrix {
            nrows,
            cols: cols.into_iter().map(compress).collect(),
        }
    }

    pub fn from_columns(nrows: usize, cols: Vec<SparseVec>) -> Self {
        SparseMatrix { nrows, cols }
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn column(&self, j: usize) -> &SparseVec {
        &self.cols[j]
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(Vec::is_empty)
    }

    pub fn get(&self, i: usize, j: usize) -> Rational {
        self.cols[j]
            .binary_search_by_key(&i, |(r, _)| *r)
            .map(|k| self.cols[j][k].1.clone())
            .unwrap_or_default()
    }

    /// Nonzero entries as `(row, col, value)`, column-major.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Rational)> {
        self.cols
            .iter()
            .enumerate()
            .flat_map(|(j, col)| col.iter().map(move |(i, v)| (*i, j, v)))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zeros(self.nrows, self.ncols());
        }
        SparseMatrix {
            nrows: self.nrows,
            cols: self
                .cols
                .iter()
                .map(|col| col.iter().map(|(i, v)| (*i, v * c)).collect())
                .collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.add_scaled(other, &Rational::one())
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add_scaled(other, &Rational::from_integer(-1))
    }

    /// `self + c · other`.
    pub fn add_scaled(&self, other: &Self, c: &Rational) -> Self {
        assert_eq!(self.nrows, other.nrows, "row count mismatch");
        assert_eq!(self.ncols(), other.ncols(), "column count mismatch");
        let cols = self
            .cols
            .iter()
            .zip(&other.cols)
            .map(|(a, b)| {
                if b.is_empty() || c.is_zero() {
                    return a.clone();
                }
                let mut merged = a.clone();
                merged.extend(b.iter().map(|(i, v)| (*i, v * c)));
                compress(merged)
            })
            .collect();
        SparseMatrix { nrows: self.nrows, cols }
    }

    /// `self · x` for a sparse vector `x`.
    pub fn apply(&self, x: &[(usize, Rational)]) -> SparseVec {
        let mut acc = Vec::new();
        for (k, xk) in x {
            for (i, a) in &self.cols[*k] {
                acc.push((*i, a * xk));
            }
        }
        compress(acc)
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.ncols(), other.nrows, "inner dimension mismatch");
        SparseMatrix {
            nrows: self.nrows,
            cols: other.cols.iter().map(|col| self.apply(col)).collect(),
        }
    }

    /// If the matrix is `c · 1`, returns `c`.
    pub fn as_scalar(&self) -> Option<Rational> {
        if self.nrows != self.ncols() {
            return None;
        }
        if self.nrows == 0 {
            return Some(Rational::zero());
        }
        let c = self.get(0, 0);
        for (j, col) in self.cols.iter().enumerate() {
            match col.as_slice() {
                [] if c.is_zero() => {}
                [(i, v)] if *i == j && *v == c => {}
                _ => return None,
            }
        }
        Some(c)
    }

    /// First entry (column-major) where `self` and `other` differ.
    pub fn first_difference(&self, other: &Self) -> Option<(usize, usize, Rational, Rational)> {
        for j in 0..self.ncols() {
            if self.cols[j] != other.cols[j] {
                let mut rows: Vec<usize> = self.cols[j].iter().chain(&other.cols[j]).map(|(i, _)| *i).collect();
                rows.sort_unstable();
                rows.dedup();
                for i in rows {
                    let (a, b) = (self.get(i, j), other.get(i, j));
                    if a != b {
                        return Some((i, j, a, b));
                    }
                }
            }
        }
        None
    }

    pub fn to_dense(&self) -> Vec<Vec<Rational>> {
        let mut d = vec![vec![Rational::zero(); self.ncols()]; self.nrows];
        for (i, j, v) in self.entries() {
            d[i][j] = v.clone();
        }
        d
    }

    pub fn from_dense(rows: &[Vec<Rational>]) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        let mut triplets = Vec::new();
        for (i, row) in rows.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                if !v.is_zero() {
                    triplets.push((i, j, v.clone()));
                }
            }
        }
        Self::from_triplets(nrows, ncols, triplets)
    }

    /// Exact inverse by Gauss–Jordan elimination.
    pub fn inverse(&self) -> Result<Self> {
        let n = self.nrows;
        if n != self.ncols() {
            return Err(Error::Dimension(format!("cannot invert a {}x{} matrix", n, self.ncols())));
        }
        let mut a = self.to_dense();
        let mut inv: Vec<Vec<Rational>> = (0..n)
            .map(|i| (0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }).collect())
            .collect();
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a[r][col].is_zero()).ok_or(Error::Singular)?;
            a.swap(col, pivot);
            inv.swap(col, pivot);
            let p = a[col][col].recip().expect("nonzero pivot");
            for j in 0..n {
                a[col][j] = &a[col][j] * &p;
                inv[col][j] = &inv[col][j] * &p;
            }
            for r in 0..n {
                if r == col || a[r][col].is_zero() {
                    continue;
                }
                let f = a[r][col].clone();
                for j in 0..n {
                    if !a[col][j].is_zero() {
                        let t = &f * &a[col][j];
                        a[r][j] -= t;
                    }
                    if !inv[col][j].is_zero() {
                        let t = &f * &inv[col][j];
                        inv[r][j] -= t;
                    }
                }
            }
        }
        Ok(Self::from_dense(&inv))
    }
}

impl fmt::Debug for SparseMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SparseMatrix {}x{} [", self.nrows, self.ncols())?;
        for (i, j, v) in self.entries() {
            write!(f, " ({i},{j})={v}")?;
        }
        f.write_str(" ]")
    }
}
