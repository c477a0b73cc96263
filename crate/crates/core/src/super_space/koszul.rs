//! Graded tensor products under the Koszul evaluation rule
//!
//! `(X_1⊗…⊗X_d)(v_1⊗…⊗v_d) = (−1)^{Σ_{a<b} |X_b||v_a|} X_1v_1⊗…⊗X_dv_d`.
//!
//! Tensor indices are flattened with the first leg most significant.

use crate::exact::{Rational, SparseMatrix, SparseVec};

/// One homogeneous leg operator together with its parity.
#[derive(Clone, Copy)]
pub struct Factor<'a> {
    pub matrix: &'a SparseMatrix,
    pub parity: u8,
}

impl<'a> Factor<'a> {
    pub fn new(matrix: &'a SparseMatrix, parity: u8) -> Self {
        Factor { matrix, parity: parity % 2 }
    }
}

pub fn flat_index(dims: &[usize], idx: &[usize]) -> usize {
    idx.iter().zip(dims).fold(0, |acc, (i, d)| acc * d + i)
}

pub fn multi_index(dims: &[usize], mut flat: usize) -> Vec<usize> {
    let mut out = vec![0; dims.len()];
    for (slot, d) in out.iter_mut().zip(dims).rev() {
        *slot = flat % d;
        flat /= d;
    }
    out
}

/// Parity of a basis tensor.
pub fn tensor_parity(leg_parities: &[&[u8]], idx: &[usize]) -> u8 {
    idx.iter().zip(leg_parities).map(|(i, p)| p[*i]).sum::<u8>() % 2
}

/// Matrix of `X_1⊗…⊗X_d` on the tensor product of graded spaces whose
/// basis parities are `leg_parities`.
pub fn koszul_product(leg_parities: &[&[u8]], factors: &[Factor<'_>]) -> SparseMatrix {
    assert_eq!(leg_parities.len(), factors.len(), "one factor per leg");
    let dims: Vec<usize> = leg_parities.iter().map(|p| p.len()).collect();
    for (f, d) in factors.iter().zip(&dims) {
        assert!(f.matrix.nrows() == *d && f.matrix.ncols() == *d, "factor shape mismatch");
    }
    let total: usize = dims.iter().product();
    let mut cols: Vec<SparseVec> = vec![Vec::new(); total];
    let mut walker = Walker { leg_parities, factors, dims: &dims, cols: &mut cols };
    walker.descend(0, 0, 0, false, vec![(0usize, Rational::one())]);
    SparseMatrix::from_columns(total, cols)
}

struct Walker<'a, 'b> {
    leg_parities: &'a [&'a [u8]],
    factors: &'a [Factor<'b>],
    dims: &'a [usize],
    cols: &'a mut Vec<SparseVec>,
}

impl Walker<'_, '_> {
    /// `prefix_parity` is the parity of the input vectors on legs `< leg`;
    /// `partial` is the outer product of the chosen columns so far, with
    /// rows flattened over legs `< leg`. Rows stay sorted.
    fn descend(&mut self, leg: usize, flat_in: usize, prefix_parity: u8, negate: bool, partial: SparseVec) {
        if leg == self.factors.len() {
            let col = if negate {
                partial.into_iter().map(|(i, v)| (i, -v)).collect()
            } else {
                partial
            };
            self.cols[flat_in] = col;
            return;
        }
        let f = self.factors[leg];
        let dim = self.dims[leg];
        let flip = f.parity * prefix_parity % 2 == 1;
        for c in 0..dim {
            let column = f.matrix.column(c);
            if column.is_empty() {
                continue;
            }
            let mut next = Vec::with_capacity(partial.len() * column.len());
            for (r0, v0) in &partial {
                for (r, v) in column {
                    next.push((r0 * dim + r, v0 * v));
                }
            }
            let parity = (prefix_parity + self.leg_parities[leg][c]) % 2;
            self.descend(leg + 1, flat_in * dim + c, parity, negate ^ flip, next);
        }
    }
}

/// The factor `(−1)^{Σ_{a<b} (ī_b+j̄_b) j̄_a}` relating the matrix entry at
/// `(rows, cols)` of a pure tensor of matrix units to its coefficient.
pub fn unit_sign(leg_parities: &[&[u8]], rows: &[usize], cols: &[usize]) -> bool {
    let mut prefix = 0u8;
    let mut negative = false;
    for ((p, r), c) in leg_parities.iter().zip(rows).zip(cols) {
        let unit = (p[*r] + p[*c]) % 2;
        if unit * prefix == 1 {
            negative = !negative;
        }
        prefix = (prefix + p[*c]) % 2;
    }
    negative
}
