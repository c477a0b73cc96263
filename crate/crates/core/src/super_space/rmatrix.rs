use rayon::prelude::*;
use serde::Serialize;

use super::context::ParityContext;
use super::operator::GradedOperator;
use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::report::{CheckReport, SampleCheck};
use crate::sampling::{admissible_points, Sampler};

/// `P = Σ e_{ij} ⊗ e_{ji} (−1)^{j̄}`.
pub fn build_p(ctx: &ParityContext) -> GradedOperator {
    let n = ctx.dim();
    let terms = (0..n).flat_map(|i| {
        (0..n).map(move |j| (vec![i, j], vec![j, i], Rational::sign(ctx.bar(j) as u32)))
    });
    GradedOperator::from_units(ctx, 2, terms.collect::<Vec<_>>())
}

/// `Q = Σ e_{ij} ⊗ e_{i′j′} (−1)^{īj̄} θ_iθ_j`.
pub fn build_q(ctx: &ParityContext) -> GradedOperator {
    let n = ctx.dim();
    let terms = (0..n).flat_map(|i| {
        (0..n).map(move |j| {
            let c = ctx.theta_pair(i, j) * Rational::sign((ctx.bar(i) * ctx.bar(j)) as u32);
            (vec![i, ctx.prime(i)], vec![j, ctx.prime(j)], c)
        })
    });
    GradedOperator::from_units(ctx, 2, terms.collect::<Vec<_>>())
}

pub fn super_transpose(op: &GradedOperator, leg: usize) -> Result<GradedOperator> {
    op.super_transpose(leg)
}

/// Reason `u0` is a pole of `R(u)`, if it is one.
pub fn r_pole(ctx: &ParityContext, u0: &Rational) -> Option<String> {
    if u0.is_zero() {
        Some("R(u) has a pole at u = 0".into())
    } else if *u0 == ctx.kappa() {
        Some(format!("R(u) has a pole at u = κ = {}", ctx.kappa()))
    } else {
        None
    }
}

/// `R(u0) = 1 − P/u0 + Q/(u0 − κ)`.
pub fn build_r(ctx: &ParityContext, u0: &Rational) -> Result<GradedOperator> {
    if r_pole(ctx, u0).is_some() {
        return Err(Error::Pole(u0.to_string()));
    }
    let p_coeff = -u0.recip().expect("nonzero");
    let q_coeff = (u0 - &ctx.kappa()).recip().expect("u0 differs from κ");
    Ok(GradedOperator::identity(ctx, 2)
        .add(&build_p(ctx).scale(&p_coeff))
        .add(&build_q(ctx).scale(&q_coeff)))
}

fn ybe_obstruction(ctx: &ParityContext, point: &[Rational]) -> Option<String> {
    let (u, v) = (&point[0], &point[1]);
    r_pole(ctx, u)
        .or_else(|| r_pole(ctx, v))
        .or_else(|| r_pole(ctx, &(u - v)))
}

/// Checks `R12(u−v) R13(u) R23(v) = R23(v) R13(u) R12(u−v)` on `(C^N)^{⊗3}`.
pub fn check_yang_baxter(
    ctx: &ParityContext,
    samples: &[(Rational, Rational)],
    sampler: &mut Sampler,
) -> Result<CheckReport> {
    let requested: Vec<Vec<Rational>> = samples.iter().map(|(u, v)| vec![u.clone(), v.clone()]).collect();
    let (points, resampled) = admissible_points(&requested, sampler, |p| ybe_obstruction(ctx, p))?;
    let checks = points
        .par_iter()
        .map(|p| yang_baxter_at(ctx, &p[0], &p[1]).map(|ok| {
            if ok {
                SampleCheck::pass(p.clone())
            } else {
                SampleCheck::fail(p.clone(), "YBE sides differ")
            }
        }))
        .collect::<Result<Vec<_>>>()?;
    Ok(CheckReport::from_samples("yang-baxter", checks, resampled))
}

fn yang_baxter_at(ctx: &ParityContext, u: &Rational, v: &Rational) -> Result<bool> {
    let r12 = build_r(ctx, &(u - v))?.embed(&[0, 1], 3)?;
    let r13 = build_r(ctx, u)?.embed(&[0, 2], 3)?;
    let r23 = build_r(ctx, v)?.embed(&[1, 2], 3)?;
    let lhs = r12.compose(&r13).compose(&r23);
    let rhs = r23.compose(&r13).compose(&r12);
    Ok(lhs == rhs)
}

/// Proportionality constants among `P` and `Q`, computed by brute force.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QConstants {
    /// `c` with `Q² = c Q`.
    pub q_squared: Option<Rational>,
    /// `ε` with `QP = ε Q`.
    pub qp: Option<Rational>,
    /// `ε` with `PQ = ε Q`.
    pub pq: Option<Rational>,
}

/// The `c` with `a = c · b`, if one exists.
pub fn proportionality(a: &GradedOperator, b: &GradedOperator) -> Option<Rational> {
    let (r, c, v) = b.matrix().entries().next()?;
    let ratio = &a.matrix().get(r, c) / v;
    (b.scale(&ratio) == *a).then_some(ratio)
}

pub fn q_constants(ctx: &ParityContext) -> QConstants {
    let p = build_p(ctx);
    let q = build_q(ctx);
    QConstants {
        q_squared: proportionality(&q.compose(&q), &q),
        qp: proportionality(&q.compose(&p), &q),
        pq: proportionality(&p.compose(&q), &q),
    }
}
