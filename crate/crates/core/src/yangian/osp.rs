use std::collections::BTreeMap;

use rayon::prelude::*;

use super::action::{module_action_series, sum_matrices};
use super::spec::ModuleSpec;
use crate::exact::{Rational, SparseMatrix};
use crate::report::CheckReport;
use crate::super_space::{transpose_sign, ParityContext};

/// Images of `F_{ij} = ½(t_{ij}^{(1)} − t_{j′i′}^{(1)}(−1)^{īj̄+j̄}θ_iθ_j)(−1)^ī`
/// on the vector representation, indexed `i·N + j`.
pub fn osp_generators(ctx: &ParityContext) -> Vec<SparseMatrix> {
    let n = ctx.dim();
    let series = module_action_series(&ModuleSpec::vector(ctx), 1);
    let half = Rational::half();
    (0..n * n)
        .map(|ij| {
            let (i, j) = (ij / n, ij % n);
            let c = ctx.theta_pair(i, j) * Rational::sign((ctx.bar(i) * ctx.bar(j) + ctx.bar(j)) as u32);
            let f = series
                .coefficient(1, i, j)
                .sub(&series.coefficient(1, ctx.prime(j), ctx.prime(i)).scale(&c));
            f.scale(&(&half * &Rational::sign(ctx.bar(i) as u32)))
        })
        .collect()
}

/// `[E_{ab}, E_{cd}] = δ_{cb}E_{ad} − δ_{ad}E_{cb}(−1)^{(ā+b̄)(c̄+d̄)}`, accumulated into `z`.
fn gl_bracket(ctx: &ParityContext, (a, b): (usize, usize), (c, d): (usize, usize), k: &Rational, z: &mut BTreeMap<(usize, usize), Rational>) {
    if c == b {
        *z.entry((a, d)).or_default() += k.clone();
    }
    if a == d {
        let s = Rational::sign((ctx.unit_parity(a, b) * ctx.unit_parity(c, d)) as u32);
        *z.entry((c, b)).or_default() -= k * &s;
    }
}

/// `F_{ij}` in the `E` basis: `E_{ij} − E_{j′i′}(−1)^{īj̄+ī}θ_iθ_j`.
fn f_in_e(ctx: &ParityContext, i: usize, j: usize) -> [((usize, usize), Rational); 2] {
    [((i, j), Rational::one()), ((ctx.prime(j), ctx.prime(i)), -transpose_sign(ctx, i, j))]
}

/// Verifies the symmetry of the `F_{ij}`, that they realise the natural
/// orthosymplectic embedding, and every super-bracket `[F_{ij}, F_{kl}]`.
pub fn osp_level_one(ctx: &ParityContext) -> CheckReport {
    let n = ctx.dim();
    let f = osp_generators(ctx);
    let mut failures = Vec::new();
    let mid = ctx.middle();
    if !f[mid * n + mid].is_zero() {
        failures.push(format!("F_{{{0},{0}}} is not zero", mid + 1));
    }
    for i in 0..n {
        for j in 0..n {
            let partner = &f[ctx.prime(j) * n + ctx.prime(i)];
            if !f[i * n + j].add(&partner.scale(&transpose_sign(ctx, i, j))).is_zero() {
                failures.push(format!("symmetry fails for F_{{{},{}}}", i + 1, j + 1));
            }
            let natural = sum_matrices(
                n,
                n,
                f_in_e(ctx, i, j).map(|((a, b), c)| (SparseMatrix::unit(n, a, b, Rational::one()), c)),
            );
            if f[i * n + j] != natural {
                failures.push(format!("F_{{{},{}}} is not the natural image", i + 1, j + 1));
            }
        }
    }
    let bracket_failures: Vec<String> = (0..n * n)
        .into_par_iter()
        .flat_map_iter(|ij| {
            let (i, j) = (ij / n, ij % n);
            let f = &f;
            (0..n * n).filter_map(move |kl| {
                let (k, l) = (kl / n, kl % n);
                bracket_failure(ctx, f, (i, j), (k, l))
            })
        })
        .collect();
    failures.extend(bracket_failures);
    CheckReport::from_failures("osp-level-one", failures)
}

fn bracket_failure(ctx: &ParityContext, f: &[SparseMatrix], (i, j): (usize, usize), (k, l): (usize, usize)) -> Option<String> {
    let n = ctx.dim();
    let mut z = BTreeMap::new();
    for (x, cx) in f_in_e(ctx, i, j) {
        for (y, cy) in f_in_e(ctx, k, l) {
            gl_bracket(ctx, x, y, &(&cx * &cy), &mut z);
        }
    }
    z.retain(|_, v| !v.is_zero());
    // The bracket lies in osp exactly when the involution negates it.
    let mut image: BTreeMap<(usize, usize), Rational> = BTreeMap::new();
    for ((a, b), v) in &z {
        *image.entry((ctx.prime(*b), ctx.prime(*a))).or_default() += v * &transpose_sign(ctx, *a, *b);
    }
    image.retain(|_, v| !v.is_zero());
    let negated: BTreeMap<_, _> = z.iter().map(|(k, v)| (*k, -v)).collect();
    if image != negated {
        return Some(format!("[F_{{{},{}}}, F_{{{},{}}}] leaves osp", i + 1, j + 1, k + 1, l + 1));
    }
    let (x, y) = (&f[i * n + j], &f[k * n + l]);
    let s = Rational::sign((ctx.unit_parity(i, j) * ctx.unit_parity(k, l)) as u32);
    let lhs = x.mul(y).sub(&y.mul(x).scale(&s));
    let half = Rational::half();
    let rhs = sum_matrices(n, n, z.iter().map(|((a, b), v)| (f[a * n + b].clone(), v * &half)).collect::<Vec<_>>());
    (lhs != rhs).then(|| format!("bracket [F_{{{},{}}}, F_{{{},{}}}] fails", i + 1, j + 1, k + 1, l + 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::q;

    #[test]
    fn f11_pattern() {
        let ctx = ParityContext::standard(1, 1);
        let f = osp_generators(&ctx);
        let f11 = &f[0];
        assert_eq!(f11.nnz(), 2);
        assert_eq!(f11.get(0, 0), q(1, 1));
        assert_eq!(f11.get(4, 4), -transpose_sign(&ctx, 0, 0));
    }

    #[test]
    fn level_one_small() {
        let r = osp_level_one(&ParityContext::standard(1, 1));
        assert!(r.passed, "{:?}", r.failures);
    }
}
