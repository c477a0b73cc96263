use serde::Serialize;

use super::drinfeld::{solve_drinfeld_ratio, RatioOutcome};
use super::reflection::iterated_reflection_series;
use super::weight::HighestWeight;
use crate::error::{Error, Result};
use crate::exact::{Rational, RootMultiset};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ConditionKind {
    /// `λ_{i+1}/λ_i`, `i = 1, …, m−1`.
    Gl,
    /// `λ_j/λ_{j+1}`, `j = m+1, …, m+n`.
    Odd,
    /// `λ_{m+n+1}/λ^{[n]}_m`.
    Osp,
}

/// One Drinfeld-ratio condition `b(u)/a(u) = P(u+σ)/P(u)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConditionResult {
    pub kind: ConditionKind,
    /// 1-based index of the polynomial `P_index`.
    pub index: usize,
    pub numerator: RootMultiset,
    pub denominator: RootMultiset,
    pub sigma: Rational,
    pub outcome: RatioOutcome,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NecessaryReport {
    pub passed: bool,
    pub conditions: Vec<ConditionResult>,
}

impl NecessaryReport {
    pub fn first_failure(&self) -> Option<&ConditionResult> {
        self.conditions.iter().find(|c| !c.outcome.is_found())
    }
}

pub fn check_necessary(hw: &HighestWeight) -> Result<NecessaryReport> {
    let ctx = hw.ctx();
    if !ctx.is_standard() {
        return Err(Error::NonStandardParity(ctx.parity_string()));
    }
    let (m, n) = (ctx.m(), ctx.n());
    let one = Rational::one();
    let mut conditions = Vec::with_capacity(m + n);
    let mut run = |kind, index, b: &RootMultiset, a: &RootMultiset, sigma: Rational| {
        let outcome = solve_drinfeld_ratio(b, a, &sigma);
        conditions.push(ConditionResult {
            kind,
            index,
            numerator: b.clone(),
            denominator: a.clone(),
            sigma,
            outcome,
        });
    };
    for i in 1..m {
        run(ConditionKind::Gl, i, hw.row(i), hw.row(i - 1), one.clone());
    }
    for j in m + 1..=m + n {
        let sigma = if j == m + n { Rational::half() } else { one.clone() };
        run(ConditionKind::Odd, j, hw.row(j - 1), hw.row(j), sigma);
    }
    let reflected = iterated_reflection_series(hw)?;
    run(ConditionKind::Osp, m, hw.row(m + n), &reflected, one);
    let passed = conditions.iter().all(|c| c.outcome.is_found());
    Ok(NecessaryReport { passed, conditions })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{q, roots};
    use crate::super_space::ParityContext;

    fn unsplit() -> HighestWeight {
        let ctx = ParityContext::standard(2, 1);
        HighestWeight::new(
            &ctx,
            vec![roots(&[(-2, 1), (1, 2)]), roots(&[(2, 1), (1, 2)]), roots(&[(2, 1), (1, 2)]), roots(&[(3, 2), (0, 1)])],
        )
        .unwrap()
    }

    #[test]
    fn unsplit_weight_passes() {
        let report = check_necessary(&unsplit()).unwrap();
        assert!(report.passed);
        let polys: Vec<(ConditionKind, usize, RootMultiset)> = report
            .conditions
            .iter()
            .map(|c| (c.kind, c.index, c.outcome.polynomial().unwrap().root_params.clone()))
            .collect();
        assert_eq!(
            polys,
            vec![
                (ConditionKind::Odd, 2, RootMultiset::empty()),
                (ConditionKind::Odd, 3, roots(&[(0, 1), (3, 2)])),
                (ConditionKind::Osp, 1, roots(&[(1, 2)])),
            ]
        );
    }

    #[test]
    fn equal_rows_pass_trivially() {
        let ctx = ParityContext::standard(2, 2);
        let hw = HighestWeight::new(&ctx, vec![roots(&[(7, 3), (-1, 1)]); 5]).unwrap();
        let report = check_necessary(&hw).unwrap();
        assert!(report.passed);
        assert!(report.conditions.iter().all(|c| c.outcome.polynomial().unwrap().degree() == 0));
    }

    #[test]
    fn odd_condition_failure() {
        let ctx = ParityContext::standard(1, 1);
        let hw = HighestWeight::new(&ctx, vec![roots(&[(0, 1)]), roots(&[(1, 3)]), roots(&[(0, 1)])]).unwrap();
        let report = check_necessary(&hw).unwrap();
        assert!(!report.passed);
        let fail = report.first_failure().unwrap();
        assert_eq!((fail.kind, fail.index, fail.sigma.clone()), (ConditionKind::Odd, 2, q(1, 2)));
    }
}
