use super::action::{module_action, ActionAtPoint};
use super::checks::rtt_mismatch;
use super::spec::ModuleSpec;
use crate::error::{Error, Result};
use crate::exact::{Rational, SparseMatrix};
use crate::report::{CheckReport, SampleCheck};
use crate::sampling::{admissible_points, Sampler};
use crate::super_space::{build_r, r_pole, ParityContext};

/// The context of the subalgebra on indices `2, …, 2′`: the first parity bit
/// is dropped, removing one even or one odd pair of basis vectors.
pub fn reduced_context(ctx: &ParityContext) -> Result<ParityContext> {
    let (first, rest) = ctx
        .parity()
        .split_first()
        .ok_or_else(|| Error::InvalidParity("empty parity sequence cannot be reduced".into()))?;
    let (n, m) = if *first == 0 { (ctx.n() - 1, ctx.m()) } else { (ctx.n(), ctx.m() - 1) };
    ParityContext::new(n, m, rest)
}

/// `t_{ij}(u0) − t_{i1}(u0) t_{11}(u0)⁻¹ t_{1j}(u0)` for `2 ≤ i, j ≤ 2′`, on
/// the original module.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedAction {
    pub ctx: ParityContext,
    pub u0: Rational,
    /// Indexed `i·N′ + j` in the reduced numbering.
    pub matrices: Vec<SparseMatrix>,
    pub t11_inverse: SparseMatrix,
}

pub fn embed_reduce(spec: &ModuleSpec, u0: &Rational) -> Result<ReducedAction> {
    let small = reduced_context(spec.ctx())?;
    let action: ActionAtPoint = module_action(spec, u0)?;
    let inv = action.get(0, 0).inverse()?;
    let n = spec.ctx().dim();
    let mut matrices = Vec::with_capacity((n - 2) * (n - 2));
    for i in 1..n - 1 {
        let left = action.get(i, 0).mul(&inv);
        for j in 1..n - 1 {
            matrices.push(action.get(i, j).sub(&left.mul(action.get(0, j))));
        }
    }
    Ok(ReducedAction { ctx: small, u0: u0.clone(), matrices, t11_inverse: inv })
}

/// Checks the subalgebra's RTT relation, with its own `R`-matrix, on the
/// reduced action.
pub fn check_reduced_relations(
    spec: &ModuleSpec,
    samples: &[(Rational, Rational)],
    sampler: &mut Sampler,
) -> Result<CheckReport> {
    let small = reduced_context(spec.ctx())?;
    let obstruction = |p: &[Rational]| {
        spec.pole(&p[0])
            .or_else(|| spec.pole(&p[1]))
            .or_else(|| r_pole(&small, &(&p[0] - &p[1])))
            .or_else(|| {
                p.iter()
                    .find(|u| matches!(embed_reduce(spec, u), Err(Error::Singular)))
                    .map(|u| format!("t_11({u}) is singular"))
            })
    };
    let requested: Vec<Vec<Rational>> = samples.iter().map(|(u, v)| vec![u.clone(), v.clone()]).collect();
    let (points, resampled) = admissible_points(&requested, sampler, obstruction)?;
    let parities = spec.basis_parities();
    let mut checks = Vec::new();
    for p in points {
        let tu = embed_reduce(spec, &p[0])?;
        let tv = embed_reduce(spec, &p[1])?;
        let r = build_r(&small, &(&p[0] - &p[1]))?;
        checks.push(match rtt_mismatch(&small, &parities, &tu.matrices, &tv.matrices, r.matrix()) {
            None => SampleCheck::pass(p),
            Some(why) => SampleCheck::fail(p, why),
        });
    }
    let identity = format!("rtt-reduced (κ′ = {})", small.kappa());
    Ok(CheckReport::from_samples(identity, checks, resampled))
}
