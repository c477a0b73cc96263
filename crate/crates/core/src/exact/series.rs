use std::fmt;
use std::ops::{Add, Mul, Sub};

use serde::Serialize;

use super::{Rational, RootMultiset};
use crate::error::{Error, Result};

/// `c_0 + c_1 u⁻¹ + … + c_K u⁻ᴷ`, exact modulo `u^{-(K+1)}`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
pub struct TruncatedSeries {
    coefficients: Vec<Rational>,
}

impl TruncatedSeries {
    /// The series with the given leading coefficients, zero-extended (or cut)
    /// to order `order`.
    pub fn new(mut coefficients: Vec<Rational>, order: usize) -> Self {
        coefficients.resize(order + 1, Rational::zero());
        TruncatedSeries { coefficients }
    }

    pub fn zero(order: usize) -> Self {
        TruncatedSeries { coefficients: vec![Rational::zero(); order + 1] }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(Rational::one(), order)
    }

    pub fn constant(c: Rational, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coefficients[0] = c;
        s
    }

    /// `(u + c)⁻¹ = Σ_{r≥1} (−c)^{r−1} u⁻ʳ`.
    pub fn inverse_linear(c: &Rational, order: usize) -> Self {
        let mut s = Self::zero(order);
        let minus_c = -c;
        let mut p = Rational::one();
        for r in 1..=order {
            s.coefficients[r] = p.clone();
            p = &p * &minus_c;
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coefficients.len() - 1
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.coefficients
    }

    pub fn coefficient(&self, r: usize) -> &Rational {
        &self.coefficients[r]
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.iter().all(Rational::is_zero)
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::new(self.coefficients[..=order.min(self.order())].to_vec(), order)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        TruncatedSeries {
            coefficients: self.coefficients.iter().map(|x| x * c).collect(),
        }
    }

    fn check_order(&self, other: &Self) {
        assert_eq!(self.order(), other.order(), "series truncation orders differ");
    }

    /// Multiplicative inverse; the constant term must be nonzero.
    pub fn invert(&self) -> Result<Self> {
        let c0 = self.coefficients[0].recip().ok_or(Error::NotInvertible)?;
        let k = self.order();
        let mut inv = vec![Rational::zero(); k + 1];
        inv[0] = c0.clone();
        for r in 1..=k {
            let acc: Rational = (1..=r).map(|j| &self.coefficients[j] * &inv[r - j]).sum();
            inv[r] = -(&acc * &c0);
        }
        Ok(TruncatedSeries { coefficients: inv })
    }

    /// The series of `f(u + c)`, re-expanded in `u⁻¹`.
    pub fn shift_argument(&self, c: &Rational) -> Self {
        // (u + c)^{-r} = Σ_k C(r+k−1, k) (−c)^k u^{-r-k}
        let k = self.order();
        let minus_c = -c;
        let mut out = vec![Rational::zero(); k + 1];
        out[0] = self.coefficients[0].clone();
        for r in 1..=k {
            if self.coefficients[r].is_zero() {
                continue;
            }
            let mut term = self.coefficients[r].clone();
            for j in 0..=(k - r) {
                out[r + j] += &term;
                // C(r+j, j+1) / C(r+j−1, j) = (r+j)/(j+1)
                term = &term * &minus_c * Rational::new((r + j) as i64, (j + 1) as i64);
            }
        }
        TruncatedSeries { coefficients: out }
    }
}

impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn add(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        self.check_order(rhs);
        TruncatedSeries {
            coefficients: self
                .coefficients
                .iter()
                .zip(&rhs.coefficients)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn sub(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        self.check_order(rhs);
        TruncatedSeries {
            coefficients: self
                .coefficients
                .iter()
                .zip(&rhs.coefficients)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn mul(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        self.check_order(rhs);
        let k = self.order();
        let mut out = vec![Rational::zero(); k + 1];
        for (i, a) in self.coefficients.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coefficients[..=k - i].iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        TruncatedSeries { coefficients: out }
    }
}

impl fmt::Debug for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.coefficients[0])?;
        for (r, c) in self.coefficients.iter().enumerate().skip(1) {
            if !c.is_zero() {
                write!(f, " + ({c})u^-{r}")?;
            }
        }
        write!(f, " + O(u^-{})", self.order() + 1)
    }
}

/// `Π_{ρ ∈ roots} (1 + ρ u⁻¹)` modulo `u^{-(K+1)}`.
pub fn series_from_roots(roots: &RootMultiset, order: usize) -> TruncatedSeries {
    // Coefficient r is the r-th elementary symmetric polynomial of the roots.
    let mut e = vec![Rational::zero(); order + 1];
    e[0] = Rational::one();
    for rho in roots.roots() {
        for r in (1..=order).rev() {
            let add = &e[r - 1] * rho;
            e[r] += add;
        }
    }
    TruncatedSeries { coefficients: e }
}

pub fn series_invert(s: &TruncatedSeries) -> Result<TruncatedSeries> {
    s.invert()
}

/// `Π (1 + ρ/u₀)`.
pub fn evaluate_factored(roots: &RootMultiset, u0: &Rational) -> Result<Rational> {
    let inv = u0.recip().ok_or_else(|| Error::Pole(u0.to_string()))?;
    Ok(roots
        .roots()
        .iter()
        .map(|rho| Rational::one() + rho * &inv)
        .product())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{q, roots};

    fn series(cs: &[(i64, i64)], order: usize) -> TruncatedSeries {
        TruncatedSeries::new(cs.iter().map(|&(n, d)| q(n, d)).collect(), order)
    }

    #[test]
    fn from_roots_examples() {
        assert_eq!(series_from_roots(&RootMultiset::empty(), 3), TruncatedSeries::one(3));
        assert_eq!(
            series_from_roots(&roots(&[(-2, 1), (1, 2)]), 2),
            series(&[(1, 1), (-3, 2), (-1, 1)], 2)
        );
        assert_eq!(
            series_from_roots(&roots(&[(1, 1), (1, 1)]), 2),
            series(&[(1, 1), (2, 1), (1, 1)], 2)
        );
    }

    #[test]
    fn invert_examples() {
        let geometric = series(&[(1, 1), (1, 1)], 2).invert().unwrap();
        assert_eq!(geometric, series(&[(1, 1), (-1, 1), (1, 1)], 2));
        assert_eq!(TruncatedSeries::one(5).invert().unwrap(), TruncatedSeries::one(5));

        let s = series(&[(1, 1), (-3, 2), (-1, 1)], 2);
        let inv = s.invert().unwrap();
        assert_eq!(inv, series(&[(1, 1), (3, 2), (13, 4)], 2));
        assert_eq!(&s * &inv, TruncatedSeries::one(2));
    }

    #[test]
    fn invert_rejects_zero_constant() {
        assert_eq!(series(&[(0, 1), (1, 1)], 3).invert(), Err(Error::NotInvertible));
    }

    #[test]
    fn evaluate_examples() {
        assert_eq!(evaluate_factored(&RootMultiset::empty(), &q(7, 1)).unwrap(), q(1, 1));
        assert_eq!(evaluate_factored(&roots(&[(-2, 1), (1, 2)]), &q(2, 1)).unwrap(), q(0, 1));
        assert_eq!(evaluate_factored(&roots(&[(1, 1)]), &q(3, 1)).unwrap(), q(4, 3));
        assert!(matches!(
            evaluate_factored(&roots(&[(1, 1)]), &q(0, 1)),
            Err(Error::Pole(_))
        ));
    }

    #[test]
    fn inverse_linear_matches_inverted_factor() {
        // (u + c)^{-1} = u^{-1} (1 + c u^{-1})^{-1}
        let c = q(-3, 2);
        let factor = series_from_roots(&RootMultiset::singleton(c.clone()), 6).invert().unwrap();
        let direct = TruncatedSeries::inverse_linear(&c, 6);
        for r in 1..=6 {
            assert_eq!(direct.coefficient(r), factor.coefficient(r - 1));
        }
    }

    #[test]
    fn shift_argument_of_linear_factor() {
        // 1 + a/(u + c) expanded directly must match shifting 1 + a/u.
        let a = q(2, 3);
        let c = q(5, 2);
        let base = series(&[(1, 1), (2, 3)], 7);
        let shifted = base.shift_argument(&c);
        let direct = &TruncatedSeries::one(7) + &TruncatedSeries::inverse_linear(&c, 7).scale(&a);
        assert_eq!(shifted, direct);
    }
}
