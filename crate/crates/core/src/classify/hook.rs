use serde::Serialize;

use super::reflection::transport_parity;
use super::weight::HighestWeight;
use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::super_space::{reversed_bits, ParityContext};

/// A partition with at most `n` boxes in row `m+1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HookPartition {
    pub m: usize,
    pub n: usize,
    pub gamma: Vec<u64>,
}

impl HookPartition {
    pub fn new(m: usize, n: usize, mut gamma: Vec<u64>) -> Result<Self> {
        if gamma.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{gamma:?} is not weakly decreasing")));
        }
        while gamma.last() == Some(&0) {
            gamma.pop();
        }
        let row = gamma.get(m).copied().unwrap_or(0);
        if row > n as u64 {
            return Err(Error::InvalidPartition(format!(
                "row {} has {row} boxes, more than n = {n}",
                m + 1
            )));
        }
        Ok(HookPartition { m, n, gamma })
    }

    pub fn row(&self, i: usize) -> u64 {
        self.gamma.get(i).copied().unwrap_or(0)
    }

    /// `Γ′_j` for `j = 1, …, len`.
    pub fn conjugate(&self, len: usize) -> Vec<u64> {
        (0..len as u64).map(|j| self.gamma.iter().filter(|&&g| g > j).count() as u64).collect()
    }

    /// All `(m,n)`-hook partitions with at most `max_first` columns and at
    /// most `max_rows` rows.
    pub fn enumerate(m: usize, n: usize, max_first: u64, max_rows: usize) -> Vec<HookPartition> {
        fn go(m: usize, n: usize, cap: u64, max_rows: usize, prefix: &mut Vec<u64>, out: &mut Vec<HookPartition>) {
            out.push(HookPartition { m, n, gamma: prefix.clone() });
            let row = prefix.len();
            if row == max_rows {
                return;
            }
            let cap = if row >= m { cap.min(n as u64) } else { cap };
            for g in 1..=cap {
                prefix.push(g);
                go(m, n, g, max_rows, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        go(m, n, max_first, max_rows, &mut Vec::new(), &mut out);
        out
    }
}

/// `Γ^♯ = (−Γ_1, …, −Γ_m, ν_1, …, ν_n)` and
/// `Γ^♭ = (Γ′_1, …, Γ′_n, −μ_1, …, −μ_m)` with `μ_i = max(Γ_i − n, 0)`,
/// `ν_j = max(Γ′_j − m, 0)`.
pub fn hook_tuples(gamma: &HookPartition) -> (Vec<i64>, Vec<i64>) {
    let (m, n) = (gamma.m, gamma.n);
    let conj = gamma.conjugate(n);
    let mu = (0..m).map(|i| gamma.row(i).saturating_sub(n as u64) as i64);
    let nu = conj.iter().map(|&c| c.saturating_sub(m as u64) as i64);
    let sharp = (0..m).map(|i| -(gamma.row(i) as i64)).chain(nu).collect();
    let flat = conj.iter().map(|&c| c as i64).chain(mu.map(|x| -x)).collect();
    (sharp, flat)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HookReport {
    pub partition: HookPartition,
    pub sharp: Vec<i64>,
    pub flat: Vec<i64>,
    /// First `m+n` scalars after transport to `0…01…1`.
    pub transported: Vec<Rational>,
    pub passed: bool,
}

/// Transports the linear weight `(Γ^♯, 0)` from the standard sequence to
/// `0…01…1` and compares the result with `Γ^♭`.
pub fn hook_reflection_consistency(gamma: &HookPartition) -> Result<HookReport> {
    let (m, n) = (gamma.m, gamma.n);
    let ctx = ParityContext::new(n, m, &crate::super_space::standard_bits(n, m))?;
    let (sharp, flat) = hook_tuples(gamma);
    let mut values: Vec<Rational> = sharp.iter().map(|&x| Rational::from_integer(x)).collect();
    values.push(Rational::zero());
    let hw = HighestWeight::linear(&ctx, &values)?;
    let moved = transport_parity(&hw, &reversed_bits(n, m))?;
    let mut transported = moved.as_linear().expect("p = 1").values;
    let last = transported.pop().expect("non-empty");
    let expected: Vec<Rational> = flat.iter().map(|&x| Rational::from_integer(x)).collect();
    let passed = last.is_zero() && transported == expected;
    Ok(HookReport { partition: gamma.clone(), sharp, flat, transported, passed })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tuples() {
        let g = HookPartition::new(1, 2, vec![3, 1]).unwrap();
        assert_eq!(g.conjugate(3), vec![2, 1, 1]);
        assert_eq!(hook_tuples(&g), (vec![-3, 1, 0], vec![2, 1, -1]));
        let g = HookPartition::new(1, 1, vec![2]).unwrap();
        assert_eq!(hook_tuples(&g), (vec![-2, 0], vec![1, -1]));
        let empty = HookPartition::new(2, 1, vec![]).unwrap();
        assert_eq!(hook_tuples(&empty), (vec![0, 0, 0], vec![0, 0, 0]));
    }

    #[test]
    fn rejects_non_hooks() {
        assert!(HookPartition::new(1, 1, vec![2, 2]).is_err());
        assert!(HookPartition::new(1, 1, vec![1, 2]).is_err());
        assert!(HookPartition::new(1, 1, vec![5, 1, 1, 0]).is_ok());
    }

    #[test]
    fn calibration_cases() {
        for (gamma, transported) in [(vec![1], vec![1, 0]), (vec![2], vec![1, -1])] {
            let r = hook_reflection_consistency(&HookPartition::new(1, 1, gamma).unwrap()).unwrap();
            assert!(r.passed, "{r:?}");
            assert_eq!(r.transported, transported.into_iter().map(Rational::from_integer).collect::<Vec<_>>());
        }
        assert!(hook_reflection_consistency(&HookPartition::new(1, 2, vec![3, 1]).unwrap()).unwrap().passed);
    }

    #[test]
    fn enumeration_respects_hook() {
        // Γ_1 ∈ {0,…,3} followed by up to two rows of length 1.
        let all = HookPartition::enumerate(1, 1, 3, 3);
        assert!(all.iter().all(|g| g.row(1) <= 1 && g.gamma.len() <= 3));
        assert_eq!(all.len(), 1 + 3 * 3);
    }
}
