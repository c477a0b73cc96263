use serde::Serialize;

use super::weight::{HighestWeight, LinearWeight};
use crate::error::{Error, Result};
use crate::exact::{Rational, RootMultiset};

/// The branch of the linear criterion that certifies finiteness.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "branch", rename_all = "snake_case")]
pub enum LinearBranch {
    HalfInteger,
    YoungDiagram { l: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "SCREAMING_SNAKE_CASE")]
pub enum LinearVerdict {
    Finite(LinearBranch),
    NotFinite,
}

impl LinearVerdict {
    pub fn is_finite(&self) -> bool {
        matches!(self, LinearVerdict::Finite(_))
    }
}

/// `λ_i ↦ λ_i − λ_{m+n+1}`.
pub fn normalize_linear(lw: &LinearWeight) -> LinearWeight {
    let last = lw.values.last().expect("weights are non-empty").clone();
    LinearWeight { ctx: lw.ctx.clone(), values: lw.values.iter().map(|v| v - &last).collect() }
}

/// `a → b`, i.e. `a − b ∈ ℤ₊`.
fn arrow(a: &Rational, b: &Rational) -> bool {
    (a - b).is_nonnegative_integer()
}

pub fn check_linear(lw: &LinearWeight) -> Result<LinearVerdict> {
    let ctx = &lw.ctx;
    if !ctx.is_standard() {
        return Err(Error::NonStandardParity(ctx.parity_string()));
    }
    let (m, n) = (ctx.m(), ctx.n());
    let v = &lw.values;
    if !v[m + n].is_zero() {
        return Err(Error::NotNormalized(v[m + n].to_string()));
    }
    let gl_chain = (1..m).all(|i| arrow(&v[i], &v[i - 1]));
    if !gl_chain {
        return Ok(LinearVerdict::NotFinite);
    }
    let odd = &v[m..m + n];
    let descending = odd.windows(2).all(|w| arrow(&w[0], &w[1]));

    let minus_n = Rational::from_integer(-(n as i64));
    if arrow(&minus_n, &v[m - 1]) && descending && arrow(&odd[n - 1], &Rational::half()) {
        return Ok(LinearVerdict::Finite(LinearBranch::HalfInteger));
    }

    let l = -&v[m - 1];
    if l.is_nonnegative_integer() {
        let l_int = l.to_i64().expect("small integer") as u64;
        let k = (l_int as usize).min(n);
        let zero = Rational::zero();
        let head = &odd[..k];
        let head_ok = head.windows(2).all(|w| arrow(&w[0], &w[1])) && head.last().is_none_or(|x| arrow(x, &zero));
        let tail_ok = odd[k..].iter().all(Rational::is_zero);
        if head_ok && tail_ok {
            return Ok(LinearVerdict::Finite(LinearBranch::YoungDiagram { l: l_int }));
        }
    }
    Ok(LinearVerdict::NotFinite)
}

/// Row-wise union; the components multiply.
pub fn tensor_weight(h1: &HighestWeight, h2: &HighestWeight) -> Result<HighestWeight> {
    if h1.ctx() != h2.ctx() {
        return Err(Error::ContextMismatch(format!("{:?} vs {:?}", h1.ctx(), h2.ctx())));
    }
    let rows: Vec<RootMultiset> = h1.rows().iter().zip(h2.rows()).map(|(a, b)| a.union(b)).collect();
    HighestWeight::new(h1.ctx(), rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{q, roots};
    use crate::super_space::ParityContext;

    fn lw(n: usize, m: usize, values: &[(i64, i64)]) -> LinearWeight {
        LinearWeight::new(&ParityContext::standard(n, m), values.iter().map(|&(a, b)| q(a, b)).collect()).unwrap()
    }

    #[test]
    fn normalization() {
        assert_eq!(normalize_linear(&lw(1, 1, &[(1, 1), (2, 1), (3, 1)])), lw(1, 1, &[(-2, 1), (-1, 1), (0, 1)]));
        assert_eq!(normalize_linear(&lw(1, 1, &[(-1, 2), (1, 1), (1, 2)])), lw(1, 1, &[(-1, 1), (1, 2), (0, 1)]));
        let done = lw(1, 1, &[(-1, 1), (1, 2), (0, 1)]);
        assert_eq!(normalize_linear(&done), done);
    }

    #[test]
    fn verdicts() {
        assert_eq!(check_linear(&lw(1, 1, &[(-1, 1), (1, 2), (0, 1)])).unwrap(), LinearVerdict::Finite(LinearBranch::HalfInteger));
        assert_eq!(
            check_linear(&lw(2, 1, &[(0, 1); 4])).unwrap(),
            LinearVerdict::Finite(LinearBranch::YoungDiagram { l: 0 })
        );
        assert_eq!(check_linear(&lw(1, 1, &[(-1, 2), (1, 2), (0, 1)])).unwrap(), LinearVerdict::NotFinite);
        // l = 1 < n = 2: one box in the odd part, then zeros.
        assert!(check_linear(&lw(2, 1, &[(-1, 1), (3, 1), (0, 1), (0, 1)])).unwrap().is_finite());
        assert!(!check_linear(&lw(2, 1, &[(-1, 1), (3, 1), (1, 1), (0, 1)])).unwrap().is_finite());
        // l ≥ n: the whole odd part descends to 0.
        assert!(check_linear(&lw(2, 1, &[(-5, 1), (3, 1), (1, 1), (0, 1)])).unwrap().is_finite());
        assert!(matches!(check_linear(&lw(1, 1, &[(0, 1), (0, 1), (1, 1)])), Err(Error::NotNormalized(_))));
    }

    #[test]
    fn tensor_products() {
        let ctx = ParityContext::standard(1, 1);
        let h1 = HighestWeight::new(&ctx, vec![roots(&[(-1, 1)]), roots(&[(0, 1)]), roots(&[(0, 1)])]).unwrap();
        let h2 = HighestWeight::new(&ctx, vec![roots(&[(-2, 1)]), roots(&[(0, 1)]), roots(&[(0, 1)])]).unwrap();
        let t = tensor_weight(&h1, &h2).unwrap();
        assert_eq!(t.row(0), &roots(&[(-1, 1), (-2, 1)]));
        assert_eq!(t.row(2), &roots(&[(0, 1), (0, 1)]));
        assert_eq!(t, tensor_weight(&h2, &h1).unwrap());
        let ones = HighestWeight::new(&ctx, vec![RootMultiset::empty(); 3]).unwrap();
        assert_eq!(tensor_weight(&h1, &ones).unwrap(), h1);
        let other = HighestWeight::new(&ParityContext::standard(1, 2), vec![RootMultiset::empty(); 4]).unwrap();
        assert!(tensor_weight(&h1, &other).is_err());
    }
}
