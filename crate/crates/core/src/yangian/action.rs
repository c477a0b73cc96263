use rayon::prelude::*;

use super::spec::ModuleSpec;
use crate::error::{Error, Result};
use crate::exact::{Rational, SparseMatrix, TruncatedSeries};
use crate::super_space::{koszul_product, Factor, ParityContext};

/// The matrices of `t_{ij}(u0)` on a module, indexed `i·N + j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ActionAtPoint {
    spec: ModuleSpec,
    u0: Rational,
    matrices: Vec<SparseMatrix>,
}

impl ActionAtPoint {
    pub fn spec(&self) -> &ModuleSpec {
        &self.spec
    }

    pub fn u0(&self) -> &Rational {
        &self.u0
    }

    pub fn get(&self, i: usize, j: usize) -> &SparseMatrix {
        &self.matrices[i * self.spec.ctx().dim() + j]
    }

    pub fn matrices(&self) -> &[SparseMatrix] {
        &self.matrices
    }
}

/// The coefficients `t_{ij}^{(r)}` on a module for `r = 0, …, K`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ActionAsSeries {
    spec: ModuleSpec,
    coefficients: Vec<Vec<SparseMatrix>>,
}

impl ActionAsSeries {
    pub fn spec(&self) -> &ModuleSpec {
        &self.spec
    }

    pub fn order(&self) -> usize {
        self.coefficients.len() - 1
    }

    /// Matrix of `t_{ij}^{(r)}`; `r = 0` gives `δ_{ij}·1`.
    pub fn coefficient(&self, r: usize, i: usize, j: usize) -> &SparseMatrix {
        &self.coefficients[r][i * self.spec.ctx().dim() + j]
    }

    /// The `(row, col)` entry of `t_{ij}(u)` as a truncated series.
    pub fn entry_series(&self, i: usize, j: usize, row: usize, col: usize) -> TruncatedSeries {
        let cs = (0..=self.order()).map(|r| self.coefficient(r, i, j).get(row, col)).collect();
        TruncatedSeries::new(cs, self.order())
    }
}

/// Sums matrices of a common shape.
pub fn sum_matrices(nrows: usize, ncols: usize, terms: impl IntoIterator<Item = (SparseMatrix, Rational)>) -> SparseMatrix {
    let mut triplets = Vec::new();
    for (m, c) in terms {
        if c.is_zero() {
            continue;
        }
        for (i, j, v) in m.entries() {
            triplets.push((i, j, v * &c));
        }
    }
    SparseMatrix::from_triplets(nrows, ncols, triplets)
}

fn pole_check(ctx: &ParityContext, x: &Rational) -> Result<()> {
    if x.is_zero() || (x + &ctx.kappa()).is_zero() {
        return Err(Error::Pole(format!("vector representation evaluated at {x}")));
    }
    Ok(())
}

/// `t_{ij}(x) ↦ δ_{ij} + x⁻¹ e_{ij}(−1)^ī − (x+κ)⁻¹ e_{j′i′}(−1)^{īj̄}θ_iθ_j`.
fn vector_matrices(ctx: &ParityContext, x: &Rational) -> Result<Vec<SparseMatrix>> {
    pole_check(ctx, x)?;
    let a = x.recip().expect("nonzero");
    let b = (x + &ctx.kappa()).recip().expect("nonzero");
    Ok(vector_terms(ctx, &Rational::one(), &a, &b))
}

/// `c0·δ_{ij} + a·e_{ij}(−1)^ī − b·e_{j′i′}(−1)^{īj̄}θ_iθ_j`.
fn vector_terms(ctx: &ParityContext, c0: &Rational, a: &Rational, b: &Rational) -> Vec<SparseMatrix> {
    let n = ctx.dim();
    let mut out = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let mut triplets = Vec::new();
            if i == j && !c0.is_zero() {
                triplets.extend((0..n).map(|k| (k, k, c0.clone())));
            }
            triplets.push((i, j, a * &Rational::sign(ctx.bar(i) as u32)));
            let s = ctx.theta_pair(i, j) * Rational::sign((ctx.bar(i) * ctx.bar(j)) as u32);
            triplets.push((ctx.prime(j), ctx.prime(i), -(b * &s)));
            out.push(SparseMatrix::from_triplets(n, n, triplets));
        }
    }
    out
}

pub fn vector_action(ctx: &ParityContext, u0: &Rational) -> Result<ActionAtPoint> {
    module_action(&ModuleSpec::vector(ctx), u0)
}

/// Parities of the tensor product of two graded bases.
fn product_parities(left: &[u8], right: &[u8]) -> Vec<u8> {
    left.iter().flat_map(|a| right.iter().map(move |b| (a + b) % 2)).collect()
}

/// `ρ(t_{ij}) = Σ_k ρ_1(t_{ik}) ⊗ ρ_2(t_{kj})` under the Koszul rule.
fn coproduct_step(
    ctx: &ParityContext,
    first: &[SparseMatrix],
    rest: &[SparseMatrix],
    rest_parities: &[u8],
) -> Vec<SparseMatrix> {
    let n = ctx.dim();
    let bars = ctx.bars();
    let size = n * rest_parities.len();
    (0..n * n)
        .into_par_iter()
        .map(|ij| {
            let (i, j) = (ij / n, ij % n);
            let terms = (0..n).filter_map(|k| {
                let (x, y) = (&first[i * n + k], &rest[k * n + j]);
                if x.is_zero() || y.is_zero() {
                    return None;
                }
                let m = koszul_product(
                    &[bars, rest_parities],
                    &[Factor::new(x, ctx.unit_parity(i, k)), Factor::new(y, ctx.unit_parity(k, j))],
                );
                Some((m, Rational::one()))
            });
            sum_matrices(size, size, terms.collect::<Vec<_>>())
        })
        .collect()
}

pub fn module_action(spec: &ModuleSpec, u0: &Rational) -> Result<ActionAtPoint> {
    if let Some(reason) = spec.pole(u0) {
        return Err(Error::Pole(reason));
    }
    let ctx = spec.ctx();
    let legs = spec
        .leg_offsets()
        .iter()
        .map(|c| vector_matrices(ctx, &(u0 + c)))
        .collect::<Result<Vec<_>>>()?;
    let mut acc = legs.last().expect("at least one leg").clone();
    let mut parities = ctx.bars().to_vec();
    for leg in legs[..legs.len() - 1].iter().rev() {
        acc = coproduct_step(ctx, leg, &acc, &parities);
        parities = product_parities(ctx.bars(), &parities);
    }
    Ok(ActionAtPoint { spec: spec.clone(), u0: u0.clone(), matrices: acc })
}

/// Coefficients of `t_{ij}(u + c)` on `C^N` through order `k`.
fn vector_series(ctx: &ParityContext, c: &Rational, k: usize) -> Vec<Vec<SparseMatrix>> {
    let first = TruncatedSeries::inverse_linear(c, k);
    let second = TruncatedSeries::inverse_linear(&(c + &ctx.kappa()), k);
    (0..=k)
        .map(|r| {
            let c0 = if r == 0 { Rational::one() } else { Rational::zero() };
            vector_terms(ctx, &c0, first.coefficient(r), second.coefficient(r))
        })
        .collect()
}

pub fn module_action_series(spec: &ModuleSpec, k: usize) -> ActionAsSeries {
    let ctx = spec.ctx();
    let n = ctx.dim();
    let legs: Vec<_> = spec.leg_offsets().iter().map(|c| vector_series(ctx, c, k)).collect();
    let mut acc = legs.last().expect("at least one leg").clone();
    let mut parities = ctx.bars().to_vec();
    for leg in legs[..legs.len() - 1].iter().rev() {
        let size = n * parities.len();
        let partial: Vec<Vec<Vec<SparseMatrix>>> = (0..=k)
            .into_par_iter()
            .map(|r1| {
                (0..=k - r1)
                    .map(|r2| coproduct_step(ctx, &leg[r1], &acc[r2], &parities))
                    .collect()
            })
            .collect();
        acc = (0..=k)
            .map(|r| {
                (0..n * n)
                    .map(|ij| {
                        let terms = (0..=r).map(|r1| (partial[r1][r - r1][ij].clone(), Rational::one()));
                        sum_matrices(size, size, terms.collect::<Vec<_>>())
                    })
                    .collect()
            })
            .collect();
        parities = product_parities(ctx.bars(), &parities);
    }
    ActionAsSeries { spec: spec.clone(), coefficients: acc }
}
