//! Independent oracles and generators shared by the integration targets.
#![allow(dead_code)]

use ospy::classify::{HighestWeight, LinearWeight};
use ospy::exact::{Rational, RootMultiset, SparseMatrix};
use ospy::super_space::ParityContext;
use ospy::yangian::ModuleSpec;
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn r(n: i64, d: i64) -> Rational {
    Rational::new(n, d)
}

/// Ascending coefficients of a polynomial in `u`.
pub type Poly = Vec<Rational>;

fn trim(mut p: Poly) -> Poly {
    while p.len() > 1 && p.last().is_some_and(Rational::is_zero) {
        p.pop();
    }
    p
}

pub fn poly_mul(a: &[Rational], b: &[Rational]) -> Poly {
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

pub fn poly_sub(a: &[Rational], b: &[Rational]) -> Poly {
    let len = a.len().max(b.len());
    let z = Rational::zero();
    trim((0..len).map(|i| a.get(i).unwrap_or(&z) - b.get(i).unwrap_or(&z)).collect())
}

/// `Π (u + ρ)`.
pub fn poly_from_params(params: &[Rational]) -> Poly {
    params.iter().fold(vec![Rational::one()], |acc, p| poly_mul(&acc, &[p.clone(), Rational::one()]))
}

/// `(u + σ)^k`.
fn shifted_power(sigma: &Rational, k: usize) -> Poly {
    (0..k).fold(vec![Rational::one()], |acc, _| poly_mul(&acc, &[sigma.clone(), Rational::one()]))
}

/// Solves `A x = b` exactly; `None` if inconsistent. Free unknowns are
/// set to zero.
pub fn solve_linear(mut a: Vec<Vec<Rational>>, mut b: Vec<Rational>) -> Option<Vec<Rational>> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        let Some(p) = (row..rows).find(|&r| !a[r][col].is_zero()) else { continue };
        a.swap(row, p);
        b.swap(row, p);
        let inv = a[row][col].recip().unwrap();
        for x in a[row].iter_mut() {
            *x = &*x * &inv;
        }
        b[row] = &b[row] * &inv;
        for r2 in 0..rows {
            if r2 != row && !a[r2][col].is_zero() {
                let f = a[r2][col].clone();
                let pivot_row = a[row].clone();
                for (x, y) in a[r2].iter_mut().zip(&pivot_row) {
                    *x -= &f * y;
                }
                let t = &f * &b[row];
                b[r2] -= t;
            }
        }
        pivots.push(col);
        row += 1;
    }
    if b[row..].iter().any(|x| !x.is_zero()) {
        return None;
    }
    let mut x = vec![Rational::zero(); cols];
    for (r2, &c) in pivots.iter().enumerate() {
        x[c] = b[r2].clone();
    }
    Some(x)
}

fn padded_polys(b: &RootMultiset, a: &RootMultiset) -> (Vec<Rational>, Vec<Rational>) {
    let p = a.len().max(b.len());
    (b.padded(p).into_roots(), a.padded(p).into_roots())
}

/// Monic `P` with `P(u+σ)a(u) = P(u)b(u)`, found by linear algebra on the
/// coefficients; the degree is forced by comparing the subleading terms.
pub fn drinfeld_oracle(b: &RootMultiset, a: &RootMultiset, sigma: &Rational) -> Option<Poly> {
    let (bs, as_) = padded_polys(b, a);
    let diff: Rational = bs.iter().sum::<Rational>() - as_.iter().sum::<Rational>();
    let degree = &diff / sigma;
    if !degree.is_nonnegative_integer() {
        return None;
    }
    let d = degree.to_i64().unwrap() as usize;
    let pa = poly_from_params(&as_);
    let pb = poly_from_params(&bs);
    let column = |k: usize| {
        let mut u_k = vec![Rational::zero(); k];
        u_k.push(Rational::one());
        poly_sub(&poly_mul(&pa, &shifted_power(sigma, k)), &poly_mul(&pb, &u_k))
    };
    let len = pa.len() + d;
    let cols: Vec<Poly> = (0..=d).map(column).collect();
    let at = |p: &Poly, i: usize| p.get(i).cloned().unwrap_or_default();
    let matrix: Vec<Vec<Rational>> = (0..len).map(|i| (0..d).map(|k| at(&cols[k], i)).collect()).collect();
    let rhs: Vec<Rational> = (0..len).map(|i| -at(&cols[d], i)).collect();
    let mut coeffs = if d == 0 {
        rhs.iter().all(Rational::is_zero).then(Vec::new)?
    } else {
        solve_linear(matrix, rhs)?
    };
    coeffs.push(Rational::one());
    Some(coeffs)
}

/// Exhaustive search over multisets `Π` of lattice points `ρ + jσ`,
/// `ρ` a denominator root, of size at most `max_degree`.
pub fn drinfeld_enumerative(b: &RootMultiset, a: &RootMultiset, sigma: &Rational, max_degree: usize) -> Option<RootMultiset> {
    let (bs, as_) = padded_polys(b, a);
    let top = bs.iter().max().cloned();
    let mut candidates: Vec<Rational> = as_
        .iter()
        .flat_map(|x| (0..=2 * as_.len().max(1)).map(move |j| x + sigma * Rational::from_integer(j as i64)))
        .filter(|x| top.as_ref().is_some_and(|t| x < t))
        .collect();
    candidates.sort();
    candidates.dedup();
    let b_set = RootMultiset::new(bs);
    let a_set = RootMultiset::new(as_);
    let fits = |pi: &RootMultiset| b_set.union(pi) == a_set.union(&pi.shifted(sigma));
    fn go(
        cands: &[Rational],
        start: usize,
        left: usize,
        current: &mut Vec<Rational>,
        fits: &dyn Fn(&RootMultiset) -> bool,
    ) -> Option<RootMultiset> {
        let pi = RootMultiset::new(current.clone());
        if fits(&pi) {
            return Some(pi);
        }
        if left == 0 {
            return None;
        }
        for i in start..cands.len() {
            current.push(cands[i].clone());
            if let Some(found) = go(cands, i, left - 1, current, fits) {
                return Some(found);
            }
            current.pop();
        }
        None
    }
    go(&candidates, 0, max_degree, &mut Vec::new(), &fits)
}

/// The 20-element root pool `k/2`, `k = −4, …, 15`.
pub fn root_pool() -> Vec<Rational> {
    (-4..=15).map(|k| r(k, 2)).collect()
}

pub fn random_multiset(rng: &mut ChaCha8Rng, pool: &[Rational], max_len: usize) -> RootMultiset {
    let len = rng.gen_range(0..=max_len);
    RootMultiset::new((0..len).map(|_| pool.choose(rng).unwrap().clone()).collect())
}

/// A random linear weight at the standard sequence passing the linear
/// criterion, twisted by a random half-integer shift.
pub fn random_finite_linear(rng: &mut ChaCha8Rng, n: usize, m: usize) -> Vec<Rational> {
    let step = |rng: &mut ChaCha8Rng| Rational::from_integer(rng.gen_range(0..=2));
    let mut v = vec![Rational::zero(); m + n + 1];
    if rng.gen_bool(0.5) {
        v[m - 1] = Rational::from_integer(-(n as i64)) - step(rng);
        v[m + n - 1] = Rational::half() + step(rng);
        for k in (m..m + n - 1).rev() {
            v[k] = &v[k + 1] + step(rng);
        }
    } else {
        let l = rng.gen_range(0..=n + 1);
        v[m - 1] = Rational::from_integer(-(l as i64));
        let k = l.min(n);
        if k > 0 {
            v[m + k - 1] = step(rng);
            for j in (m..m + k - 1).rev() {
                v[j] = &v[j + 1] + step(rng);
            }
        }
    }
    for i in (0..m - 1).rev() {
        v[i] = &v[i + 1] - step(rng);
    }
    let shift = r(rng.gen_range(-4..=4), 2);
    v.iter().map(|x| x + &shift).collect()
}

/// Product of `p` random finite linear weights, each column shifted by
/// `shifts[a]`.
pub fn product_weight(rng: &mut ChaCha8Rng, n: usize, m: usize, p: usize, shifts: &[Rational]) -> HighestWeight {
    let ctx = ParityContext::standard(n, m);
    let mut rows = vec![Vec::new(); m + n + 1];
    for a in 0..p {
        let col = random_finite_linear(rng, n, m);
        for (i, x) in col.into_iter().enumerate() {
            rows[i].push(x + &shifts[a % shifts.len()]);
        }
    }
    HighestWeight::new(&ctx, rows.into_iter().map(RootMultiset::new).collect()).unwrap()
}

pub fn linear(ctx: &ParityContext, values: Vec<Rational>) -> LinearWeight {
    LinearWeight::new(ctx, values).unwrap()
}

/// `t_{kl}(x) e_c` on `C^N`, straight from the defining formula.
fn vector_entry(ctx: &ParityContext, x: &Rational, k: usize, l: usize, c: usize) -> Vec<(usize, Rational)> {
    let mut out = Vec::new();
    if k == l {
        out.push((c, Rational::one()));
    }
    if l == c {
        out.push((k, Rational::sign(ctx.bar(k) as u32) / x));
    }
    if ctx.prime(k) == c {
        let s = ctx.theta_pair(k, l) * Rational::sign((ctx.bar(k) * ctx.bar(l)) as u32);
        out.push((ctx.prime(l), -(s / (x + ctx.kappa()))));
    }
    out
}

/// Matrix of `ρ(t_{ij}(u0))` on `(C^N)^{⊗d}` by summing over every path
/// `i = k_0, k_1, …, k_d = j` and every basis tensor, with the Koszul sign
/// written out explicitly.
pub fn slow_module_entry(spec: &ModuleSpec, u0: &Rational, i: usize, j: usize) -> SparseMatrix {
    let ctx = spec.ctx();
    let n = ctx.dim();
    let offsets = spec.leg_offsets();
    let d = offsets.len();
    let size = n.pow(d as u32);
    let mut triplets = Vec::new();
    let mut path = vec![0usize; d + 1];
    path[0] = i;
    path[d] = j;
    let inner = n.pow(d as u32 - 1);
    for walk in 0..inner {
        let mut w = walk;
        for slot in (1..d).rev() {
            path[slot] = w % n;
            w /= n;
        }
        for input in 0..size {
            let mut digits = vec![0usize; d];
            let mut f = input;
            for slot in (0..d).rev() {
                digits[slot] = f % n;
                f /= n;
            }
            // (−1)^{Σ_{a<b} |X_b| |v_a|}
            let mut sign = 0u32;
            for b in 0..d {
                let xb = ctx.unit_parity(path[b], path[b + 1]) as u32;
                sign += digits[..b].iter().map(|&v| xb * ctx.bar(v) as u32).sum::<u32>();
            }
            let mut partial: Vec<(Vec<usize>, Rational)> = vec![(Vec::new(), Rational::sign(sign))];
            for leg in 0..d {
                let x = u0 + &offsets[leg];
                let images = vector_entry(ctx, &x, path[leg], path[leg + 1], digits[leg]);
                partial = partial
                    .into_iter()
                    .flat_map(|(idx, c)| {
                        images.iter().map(move |(out, v)| {
                            let mut idx = idx.clone();
                            idx.push(*out);
                            (idx, &c * v)
                        })
                    })
                    .collect();
            }
            for (idx, c) in partial {
                let row = idx.iter().fold(0, |acc, x| acc * n + x);
                triplets.push((row, input, c));
            }
        }
    }
    SparseMatrix::from_triplets(size, size, triplets)
}
