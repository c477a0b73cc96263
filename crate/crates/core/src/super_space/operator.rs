use std::fmt;

use super::context::ParityContext;
use super::koszul::{flat_index, multi_index, unit_sign};
use crate::error::{Error, Result};
use crate::exact::{Rational, SparseMatrix, SparseVec};

/// An exact operator on `(C^N)^{⊗d}` stored as its Koszul-evaluated matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct GradedOperator {
    ctx: ParityContext,
    legs: usize,
    matrix: SparseMatrix,
}

/// A coefficient of `Σ c · e_{i_1 j_1} ⊗ … ⊗ e_{i_d j_d}`.
pub type UnitTerm = (Vec<usize>, Vec<usize>, Rational);

impl GradedOperator {
    pub fn new(ctx: &ParityContext, legs: usize, matrix: SparseMatrix) -> Result<Self> {
        let size = ctx.dim().pow(legs as u32);
        if matrix.nrows() != size || matrix.ncols() != size {
            return Err(Error::Dimension(format!(
                "expected a {size}x{size} matrix for {legs} legs, got {}x{}",
                matrix.nrows(),
                matrix.ncols()
            )));
        }
        Ok(GradedOperator { ctx: ctx.clone(), legs, matrix })
    }

    pub fn identity(ctx: &ParityContext, legs: usize) -> Self {
        let size = ctx.dim().pow(legs as u32);
        GradedOperator { ctx: ctx.clone(), legs, matrix: SparseMatrix::identity(size) }
    }

    pub fn zero(ctx: &ParityContext, legs: usize) -> Self {
        let size = ctx.dim().pow(legs as u32);
        GradedOperator { ctx: ctx.clone(), legs, matrix: SparseMatrix::zeros(size, size) }
    }

    /// Builds `Σ c · e_{i_1 j_1} ⊗ … ⊗ e_{i_d j_d}` from abstract coefficients.
    pub fn from_units(ctx: &ParityContext, legs: usize, terms: impl IntoIterator<Item = UnitTerm>) -> Self {
        let dims = vec![ctx.dim(); legs];
        let parities = vec![ctx.bars(); legs];
        let size = ctx.dim().pow(legs as u32);
        let triplets = terms
            .into_iter()
            .map(|(rows, cols, c)| {
                assert_eq!(rows.len(), legs);
                assert_eq!(cols.len(), legs);
                let v = if unit_sign(&parities, &rows, &cols) { -c } else { c };
                (flat_index(&dims, &rows), flat_index(&dims, &cols), v)
            })
            .collect();
        GradedOperator {
            ctx: ctx.clone(),
            legs,
            matrix: SparseMatrix::from_triplets(size, size, triplets),
        }
    }

    /// The abstract matrix-unit coefficients of this operator.
    pub fn units(&self) -> Vec<UnitTerm> {
        let dims = vec![self.ctx.dim(); self.legs];
        let parities = vec![self.ctx.bars(); self.legs];
        self.matrix
            .entries()
            .map(|(r, c, v)| {
                let (rows, cols) = (multi_index(&dims, r), multi_index(&dims, c));
                let coeff = if unit_sign(&parities, &rows, &cols) { -v } else { v.clone() };
                (rows, cols, coeff)
            })
            .collect()
    }

    pub fn ctx(&self) -> &ParityContext {
        &self.ctx
    }

    pub fn legs(&self) -> usize {
        self.legs
    }

    pub fn matrix(&self) -> &SparseMatrix {
        &self.matrix
    }

    fn same_space(&self, other: &Self) {
        assert!(self.ctx == other.ctx && self.legs == other.legs, "operators act on different spaces");
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Self {
        self.same_space(other);
        GradedOperator { ctx: self.ctx.clone(), legs: self.legs, matrix: self.matrix.mul(&other.matrix) }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.same_space(other);
        GradedOperator { ctx: self.ctx.clone(), legs: self.legs, matrix: self.matrix.add(&other.matrix) }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.same_space(other);
        GradedOperator { ctx: self.ctx.clone(), legs: self.legs, matrix: self.matrix.sub(&other.matrix) }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        GradedOperator { ctx: self.ctx.clone(), legs: self.legs, matrix: self.matrix.scale(c) }
    }

    /// Image of the basis tensor `e_{idx_1} ⊗ … ⊗ e_{idx_d}`.
    pub fn apply_basis(&self, idx: &[usize]) -> SparseVec {
        let dims = vec![self.ctx.dim(); self.legs];
        self.matrix.column(flat_index(&dims, idx)).clone()
    }

    /// Places this operator on legs `positions` (strictly increasing) of a
    /// `total`-leg space, with the identity elsewhere.
    pub fn embed(&self, positions: &[usize], total: usize) -> Result<Self> {
        if positions.len() != self.legs {
            return Err(Error::Dimension(format!(
                "{} positions for a {}-leg operator",
                positions.len(),
                self.legs
            )));
        }
        if let Some(&bad) = positions.iter().find(|&&p| p >= total) {
            return Err(Error::InvalidLeg { leg: bad + 1, legs: total });
        }
        if positions.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Dimension("embedding positions must be strictly increasing".into()));
        }
        let dim = self.ctx.dim();
        let free: Vec<usize> = (0..total).filter(|p| !positions.contains(p)).collect();
        let free_count = dim.pow(free.len() as u32);
        let mut terms = Vec::new();
        for (rows, cols, c) in self.units() {
            for k in 0..free_count {
                let fill = multi_index(&vec![dim; free.len()], k);
                let mut r = vec![0; total];
                let mut s = vec![0; total];
                for (slot, &p) in positions.iter().enumerate() {
                    r[p] = rows[slot];
                    s[p] = cols[slot];
                }
                for (slot, &p) in free.iter().enumerate() {
                    r[p] = fill[slot];
                    s[p] = fill[slot];
                }
                terms.push((r, s, c.clone()));
            }
        }
        Ok(Self::from_units(&self.ctx, total, terms))
    }

    /// Applies `t: e_{ij} ↦ e_{j′i′}(−1)^{īj̄+ī}θ_iθ_j` on tensor factor
    /// `leg` (1-based).
    pub fn super_transpose(&self, leg: usize) -> Result<Self> {
        if leg == 0 || leg > self.legs {
            return Err(Error::InvalidLeg { leg, legs: self.legs });
        }
        let a = leg - 1;
        let ctx = &self.ctx;
        let terms = self.units().into_iter().map(|(mut rows, mut cols, c)| {
            let (i, j) = (rows[a], cols[a]);
            let c = &c * &transpose_sign(ctx, i, j);
            rows[a] = ctx.prime(j);
            cols[a] = ctx.prime(i);
            (rows, cols, c)
        });
        Ok(Self::from_units(ctx, self.legs, terms.collect::<Vec<_>>()))
    }
}

/// `(−1)^{īj̄+ī}θ_iθ_j`.
pub fn transpose_sign(ctx: &ParityContext, i: usize, j: usize) -> Rational {
    let e = ctx.bar(i) * ctx.bar(j) + ctx.bar(i);
    ctx.theta_pair(i, j) * Rational::sign(e as u32)
}

impl fmt::Debug for GradedOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GradedOperator({:?}, legs={}, {:?})", self.ctx, self.legs, self.matrix)
    }
}
