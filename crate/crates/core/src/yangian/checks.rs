use rayon::prelude::*;
use serde::Serialize;

use super::action::{module_action, module_action_series, sum_matrices, ActionAtPoint};
use super::spec::{highest_vector, ModuleSpec};
use crate::error::{Error, Result};
use crate::exact::{Rational, SparseMatrix, SparseVec, TruncatedSeries};
use crate::report::{CheckReport, SampleCheck};
use crate::sampling::{admissible_points, fresh_points, Sampler};
use crate::super_space::{build_r, koszul_product, r_pole, Factor, ParityContext};

/// `(−1)^{īj̄+j̄}`, the sign identifying `[a_{ij}]` with `Σ e_{ij} ⊗ a_{ij}`.
pub fn matrix_sign(ctx: &ParityContext, i: usize, j: usize) -> Rational {
    Rational::sign((ctx.bar(i) * ctx.bar(j) + ctx.bar(j)) as u32)
}

fn unit_matrix(n: usize, i: usize, j: usize) -> SparseMatrix {
    SparseMatrix::unit(n, i, j, Rational::one())
}

/// `A ⊗ 1_k` with the identity on a trailing even-operator leg.
pub fn kron_identity(a: &SparseMatrix, k: usize) -> SparseMatrix {
    let mut cols = Vec::with_capacity(a.ncols() * k);
    for c in 0..a.ncols() {
        for m in 0..k {
            cols.push(a.column(c).iter().map(|(r, v)| (r * k + m, v.clone())).collect());
        }
    }
    SparseMatrix::from_columns(a.nrows() * k, cols)
}

/// `T_a(u) = Σ e_{ij} (on auxiliary leg a) ⊗ t_{ij}(u) (−1)^{īj̄+j̄}` on
/// `V^{⊗aux} ⊗ M`.
pub fn auxiliary_operator(
    ctx: &ParityContext,
    aux: usize,
    leg: usize,
    module_parities: &[u8],
    action: &[SparseMatrix],
) -> SparseMatrix {
    let n = ctx.dim();
    let id = SparseMatrix::identity(n);
    let mut parities: Vec<&[u8]> = vec![ctx.bars(); aux];
    parities.push(module_parities);
    let size = n.pow(aux as u32) * module_parities.len();
    let terms: Vec<_> = (0..n * n)
        .into_par_iter()
        .filter_map(|ij| {
            let (i, j) = (ij / n, ij % n);
            let t = &action[ij];
            if t.is_zero() {
                return None;
            }
            let e = unit_matrix(n, i, j);
            let p = ctx.unit_parity(i, j);
            let mut factors: Vec<Factor<'_>> =
                (0..aux).map(|a| if a == leg { Factor::new(&e, p) } else { Factor::new(&id, 0) }).collect();
            factors.push(Factor::new(t, p));
            Some((koszul_product(&parities, &factors), matrix_sign(ctx, i, j)))
        })
        .collect();
    sum_matrices(size, size, terms)
}

fn apply_chain(chain: &[&SparseMatrix], col: &SparseVec) -> SparseVec {
    chain.iter().fold(col.clone(), |v, m| m.apply(&v))
}

/// First column where `R(u−v)T_1(u)T_2(v)` and `T_2(v)T_1(u)R(u−v)` differ.
pub fn rtt_mismatch(
    ctx: &ParityContext,
    module_parities: &[u8],
    t_u: &[SparseMatrix],
    t_v: &[SparseMatrix],
    r: &SparseMatrix,
) -> Option<String> {
    let dim_m = module_parities.len();
    let r = kron_identity(r, dim_m);
    let t1 = auxiliary_operator(ctx, 2, 0, module_parities, t_u);
    let t2 = auxiliary_operator(ctx, 2, 1, module_parities, t_v);
    (0..r.ncols())
        .into_par_iter()
        .find_first(|&c| {
            let e = vec![(c, Rational::one())];
            apply_chain(&[&t2, &t1, &r], &e) != apply_chain(&[&r, &t1, &t2], &e)
        })
        .map(|c| format!("RTT sides differ in column {c}"))
}

fn two_point_obstruction(spec: &ModuleSpec, p: &[Rational]) -> Option<String> {
    spec.pole(&p[0])
        .or_else(|| spec.pole(&p[1]))
        .or_else(|| r_pole(spec.ctx(), &(&p[0] - &p[1])))
}

/// Verifies the RTT relation exactly on `V ⊗ V ⊗ M` at each sample.
pub fn check_defining_relations(
    spec: &ModuleSpec,
    samples: &[(Rational, Rational)],
    sampler: &mut Sampler,
) -> Result<CheckReport> {
    let requested: Vec<Vec<Rational>> = samples.iter().map(|(u, v)| vec![u.clone(), v.clone()]).collect();
    let (points, resampled) = admissible_points(&requested, sampler, |p| two_point_obstruction(spec, p))?;
    let parities = spec.basis_parities();
    let mut checks = Vec::new();
    for p in points {
        let (u, v) = (&p[0], &p[1]);
        let tu = module_action(spec, u)?;
        let tv = module_action(spec, v)?;
        let r = build_r(spec.ctx(), &(u - v))?;
        checks.push(match rtt_mismatch(spec.ctx(), &parities, tu.matrices(), tv.matrices(), r.matrix()) {
            None => SampleCheck::pass(p),
            Some(why) => SampleCheck::fail(p, why),
        });
    }
    Ok(CheckReport::from_samples("rtt", checks, resampled))
}

/// `λ` with `m·v = λ·v`, if `v` is an eigenvector.
pub fn eigenvalue(m: &SparseMatrix, v: &SparseVec) -> Option<Rational> {
    let (k, vk) = v.first()?;
    let w = m.apply(v);
    let lambda = &w.iter().find(|(i, _)| i == k).map(|(_, x)| x.clone()).unwrap_or_default() / vk;
    let scaled: SparseVec = v.iter().map(|(i, x)| (*i, x * &lambda)).filter(|(_, x)| !x.is_zero()).collect();
    (w == scaled).then_some(lambda)
}

/// Diagonal eigenvalue series of a highest vector.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExtractedWeight {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub source: Option<ModuleSpec>,
    /// `λ_1(u), …, λ_{1′}(u)`.
    pub components: Vec<TruncatedSeries>,
    #[serde(skip)]
    pub vector: SparseVec,
}

impl ExtractedWeight {
    /// A weight given only by its series, with no module to sample.
    pub fn from_components(components: Vec<TruncatedSeries>) -> Self {
        ExtractedWeight { source: None, components, vector: Vec::new() }
    }
}

/// The eigenvalues `λ_i(u0)` on `ξ_d` for all `i`, after checking
/// annihilation by every `t_{ij}(u0)` with `i < j`.
pub fn weight_at_point(action: &ActionAtPoint, xi: &SparseVec) -> Result<Vec<Rational>> {
    let n = action.spec().ctx().dim();
    for i in 0..n {
        for j in i + 1..n {
            if !action.get(i, j).apply(xi).is_empty() {
                return Err(Error::NotHighestVector { i: i + 1, j: j + 1 });
            }
        }
    }
    (0..n)
        .map(|i| eigenvalue(action.get(i, i), xi).ok_or(Error::NotEigenvector { i: i + 1 }))
        .collect()
}

const POINT_CHECKS: usize = 3;

/// Checks `t_{ij}(u)ξ_d = 0` for `i < j` to order `k` and at sample points,
/// and returns the eigenvalue series of `t_{ii}(u)` on `ξ_d`.
pub fn extract_highest_weight(spec: &ModuleSpec, k: usize, sampler: &mut Sampler) -> Result<ExtractedWeight> {
    let xi = highest_vector(spec);
    let n = spec.ctx().dim();
    let series = module_action_series(spec, k);
    for i in 0..n {
        for j in i + 1..n {
            if (1..=k).any(|r| !series.coefficient(r, i, j).apply(&xi).is_empty()) {
                return Err(Error::NotHighestVector { i: i + 1, j: j + 1 });
            }
        }
    }
    let components = (0..n)
        .map(|i| {
            let cs = (0..=k)
                .map(|r| eigenvalue(series.coefficient(r, i, i), &xi).ok_or(Error::NotEigenvector { i: i + 1 }))
                .collect::<Result<Vec<_>>>()?;
            Ok(TruncatedSeries::new(cs, k))
        })
        .collect::<Result<Vec<_>>>()?;
    for p in fresh_points(POINT_CHECKS, 1, sampler, |p| spec.pole(&p[0]))? {
        weight_at_point(&module_action(spec, &p[0])?, &xi)?;
    }
    Ok(ExtractedWeight { source: Some(spec.clone()), components, vector: xi })
}

/// `T(u)` on `V ⊗ M`, optionally super-transposed componentwise:
/// `(A^t)_{ij} = a_{j′i′}(−1)^{īj̄+j̄}θ_iθ_j`.
fn one_leg_operator(ctx: &ParityContext, parities: &[u8], action: &ActionAtPoint, transposed: bool) -> SparseMatrix {
    let n = ctx.dim();
    let entries: Vec<SparseMatrix> = (0..n * n)
        .map(|ij| {
            let (i, j) = (ij / n, ij % n);
            if transposed {
                let c = ctx.theta_pair(i, j) * matrix_sign(ctx, i, j);
                action.get(ctx.prime(j), ctx.prime(i)).scale(&c)
            } else {
                action.get(i, j).clone()
            }
        })
        .collect();
    auxiliary_operator(ctx, 1, 0, parities, &entries)
}

/// Checks that `T(u0−κ)T^t(u0)` is the scalar `λ_1(u0) λ_{1′}(u0−κ)`.
pub fn check_central_series(spec: &ModuleSpec, samples: &[Rational], sampler: &mut Sampler) -> Result<CheckReport> {
    let ctx = spec.ctx();
    let kappa = ctx.kappa();
    let requested: Vec<Vec<Rational>> = samples.iter().map(|u| vec![u.clone()]).collect();
    let (points, resampled) =
        admissible_points(&requested, sampler, |p| spec.pole(&(&p[0] - &kappa)).or_else(|| spec.pole(&p[0])))?;
    let parities = spec.basis_parities();
    let xi = highest_vector(spec);
    let last = ctx.dim() - 1;
    let mut checks = Vec::new();
    for p in points {
        let u0 = &p[0];
        let shifted = module_action(spec, &(u0 - &kappa))?;
        let at_u0 = module_action(spec, u0)?;
        let product = one_leg_operator(ctx, &parities, &shifted, false)
            .mul(&one_leg_operator(ctx, &parities, &at_u0, true));
        let expected = &weight_at_point(&at_u0, &xi)?[0] * &weight_at_point(&shifted, &xi)?[last];
        checks.push(match product.as_scalar() {
            None => {
                let (r, c, v) = product
                    .entries()
                    .find(|(r, c, _)| r != c)
                    .map(|(r, c, v)| (r, c, v.clone()))
                    .unwrap_or_else(|| (0, 0, product.get(0, 0)));
                SampleCheck::fail(p, format!("not scalar: entry ({r},{c}) = {v}"))
            }
            Some(c) if c == expected => SampleCheck::pass(p),
            Some(c) => SampleCheck::fail(p, format!("scalar {c} differs from λ_1 λ_1′ = {expected}")),
        });
    }
    Ok(CheckReport::from_samples("central-series", checks, resampled))
}

/// `c_i = −κ + Σ_{k ≤ i} (−1)^{k̄}` for 1-based `i`.
pub fn consistency_shift(ctx: &ParityContext, i: usize) -> Rational {
    let s: i64 = (0..i).map(|k| if ctx.bar(k) == 0 { 1 } else { -1 }).sum();
    Rational::from_integer(s) - ctx.kappa()
}

/// Checks `λ_i(u)λ_{i′}(u+c_i) = λ_{i+1}(u)λ_{(i+1)′}(u+c_i)` for
/// `i = 1, …, m+n`, as series and, when the weight has a source module,
/// at sample points.
pub fn check_consistency(weight: &ExtractedWeight, ctx: &ParityContext, sampler: &mut Sampler) -> Result<CheckReport> {
    let n = ctx.dim();
    if weight.components.len() != n {
        return Err(Error::Dimension(format!("expected {n} components, got {}", weight.components.len())));
    }
    let comp = &weight.components;
    let mut failures = Vec::new();
    for i in 1..=ctx.middle() {
        let c = consistency_shift(ctx, i);
        let (a, b) = (i - 1, i);
        let lhs = &comp[a] * &comp[ctx.prime(a)].shift_argument(&c);
        let rhs = &comp[b] * &comp[ctx.prime(b)].shift_argument(&c);
        if lhs != rhs {
            failures.push(format!("series identity fails at i = {i}"));
        }
    }
    let mut samples = Vec::new();
    if let Some(spec) = &weight.source {
        let shifts: Vec<Rational> = (1..=ctx.middle()).map(|i| consistency_shift(ctx, i)).collect();
        let obstruction = |p: &[Rational]| {
            spec.pole(&p[0]).or_else(|| shifts.iter().find_map(|c| spec.pole(&(&p[0] + c))))
        };
        for p in fresh_points(POINT_CHECKS, 1, sampler, obstruction)? {
            let u0 = &p[0];
            let at = weight_at_point(&module_action(spec, u0)?, &weight.vector)?;
            let mut bad = None;
            for (k, c) in shifts.iter().enumerate() {
                let at_c = weight_at_point(&module_action(spec, &(u0 + c))?, &weight.vector)?;
                let (a, b) = (k, k + 1);
                if &at[a] * &at_c[ctx.prime(a)] != &at[b] * &at_c[ctx.prime(b)] {
                    bad = Some(k + 1);
                    break;
                }
            }
            samples.push(match bad {
                None => SampleCheck::pass(p),
                Some(i) => SampleCheck::fail(p, format!("point identity fails at i = {i}")),
            });
        }
    }
    let mut report = CheckReport::from_samples("consistency", samples, Vec::new());
    report.passed &= failures.is_empty();
    report.failures = failures;
    Ok(report)
}
