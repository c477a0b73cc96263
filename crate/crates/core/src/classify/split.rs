use std::collections::HashMap;

use serde::Serialize;

use super::linear::{check_linear, normalize_linear, LinearBranch, LinearVerdict};
use super::reflection::{to_standard, transport_parity};
use super::weight::{HighestWeight, LinearWeight};
use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::super_space::{bits_to_string, ParityContext};

/// Largest `p` the exhaustive search accepts.
pub const SPLIT_GUARD: usize = 6;

/// A column decomposition of the weight at `parity` into linear weights.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Splitting {
    pub parity: String,
    /// Column scalars relative to `parity`.
    pub columns: Vec<Vec<Rational>>,
    /// The same columns transported to the standard sequence and normalized.
    pub standard_columns: Vec<Vec<Rational>>,
    pub branches: Vec<LinearBranch>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SplitReport {
    pub searched: Vec<String>,
    pub splitting: Option<Splitting>,
}

/// Verdict of a column `(λ_1, …, λ_{m+n+1})` given relative to `ctx`.
pub fn linear_column_verdict(ctx: &ParityContext, column: &[Rational]) -> Result<(Vec<Rational>, LinearVerdict)> {
    let hw = LinearWeight::new(ctx, column.to_vec())?.to_highest_weight()?;
    let (standard, _) = to_standard(&hw)?;
    let normalized = normalize_linear(&standard.as_linear().expect("reflections keep p = 1"));
    let verdict = check_linear(&normalized)?;
    Ok((normalized.values, verdict))
}

pub fn split_search(hw: &HighestWeight, parities: &[Vec<u8>]) -> Result<SplitReport> {
    if hw.p() > SPLIT_GUARD {
        return Err(Error::SearchTooLarge(format!("p = {} exceeds the guard p ≤ {SPLIT_GUARD}", hw.p())));
    }
    let mut searched = Vec::with_capacity(parities.len());
    for parity in parities {
        let moved = transport_parity(hw, parity)?;
        searched.push(bits_to_string(parity));
        let mut search = Search::new(&moved);
        if search.run()? {
            let (standard_columns, branches) = search
                .chosen
                .iter()
                .map(|c| {
                    let (values, verdict) = search.cache[c].clone();
                    match verdict {
                        LinearVerdict::Finite(b) => (values, b),
                        LinearVerdict::NotFinite => unreachable!("only finite columns are kept"),
                    }
                })
                .unzip();
            return Ok(SplitReport {
                searched,
                splitting: Some(Splitting {
                    parity: bits_to_string(parity),
                    columns: search.chosen,
                    standard_columns,
                    branches,
                }),
            });
        }
    }
    Ok(SplitReport { searched, splitting: None })
}

/// Depth-first search over columns. Column `a` takes the smallest unused
/// root of the first row, so each unordered decomposition is met once;
/// other rows are tried in ascending order, which fixes the first success.
struct Search<'a> {
    ctx: &'a ParityContext,
    remaining: Vec<Vec<(Rational, usize)>>,
    chosen: Vec<Vec<Rational>>,
    cache: HashMap<Vec<Rational>, (Vec<Rational>, LinearVerdict)>,
    p: usize,
}

impl<'a> Search<'a> {
    fn new(hw: &'a HighestWeight) -> Self {
        Search {
            ctx: hw.ctx(),
            remaining: hw.rows().iter().map(|r| r.counts()).collect(),
            chosen: Vec::new(),
            cache: HashMap::new(),
            p: hw.p(),
        }
    }

    fn run(&mut self) -> Result<bool> {
        if self.chosen.len() == self.p {
            return Ok(true);
        }
        let mut column = Vec::with_capacity(self.remaining.len());
        self.fill(&mut column)
    }

    fn take(&mut self, row: usize, k: usize) -> Rational {
        self.remaining[row][k].1 -= 1;
        self.remaining[row][k].0.clone()
    }

    fn fill(&mut self, column: &mut Vec<Rational>) -> Result<bool> {
        let row = column.len();
        if row == self.remaining.len() {
            if !self.column_passes(column)? {
                return Ok(false);
            }
            self.chosen.push(column.clone());
            if self.run()? {
                return Ok(true);
            }
            self.chosen.pop();
            return Ok(false);
        }
        let candidates: Vec<usize> = if row == 0 {
            self.remaining[0].iter().position(|(_, c)| *c > 0).into_iter().collect()
        } else {
            (0..self.remaining[row].len()).filter(|&k| self.remaining[row][k].1 > 0).collect()
        };
        for k in candidates {
            let value = self.take(row, k);
            column.push(value);
            let done = self.fill(column)?;
            column.pop();
            self.remaining[row][k].1 += 1;
            if done {
                return Ok(true);
            }
        }
        Ok(false)
    }

    fn column_passes(&mut self, column: &[Rational]) -> Result<bool> {
        if let Some((_, v)) = self.cache.get(column) {
            return Ok(v.is_finite());
        }
        let result = linear_column_verdict(self.ctx, column)?;
        let finite = result.1.is_finite();
        self.cache.insert(column.to_vec(), result);
        Ok(finite)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::reflection::standard_chain;
    use crate::exact::{q, roots};

    #[test]
    fn generic_instance_splits() {
        let ctx = ParityContext::standard(1, 1);
        let hw = HighestWeight::new(&ctx, vec![roots(&[(-1, 1), (-3, 1)]), roots(&[(1, 2), (3, 2)]), roots(&[(0, 1), (0, 1)])])
            .unwrap();
        let report = split_search(&hw, &[ctx.parity().to_vec()]).unwrap();
        let s = report.splitting.expect("splitting exists");
        assert_eq!(s.columns, vec![vec![q(-3, 1), q(1, 2), q(0, 1)], vec![q(-1, 1), q(3, 2), q(0, 1)]]);
        assert!(s.branches.iter().all(|b| *b == LinearBranch::HalfInteger));
    }

    #[test]
    fn unsplit_weight_has_no_splitting() {
        let ctx = ParityContext::standard(2, 1);
        let hw = HighestWeight::new(
            &ctx,
            vec![roots(&[(-2, 1), (1, 2)]), roots(&[(2, 1), (1, 2)]), roots(&[(2, 1), (1, 2)]), roots(&[(3, 2), (0, 1)])],
        )
        .unwrap();
        let report = split_search(&hw, &standard_chain(2, 1)).unwrap();
        assert_eq!(report.searched, vec!["100", "010", "001"]);
        assert_eq!(report.splitting, None);
    }

    #[test]
    fn linear_weight_reduces_to_check_linear() {
        let ctx = ParityContext::standard(1, 1);
        let good = HighestWeight::linear(&ctx, &[q(-1, 1), q(1, 2), q(0, 1)]).unwrap();
        let bad = HighestWeight::linear(&ctx, &[q(-1, 2), q(1, 2), q(0, 1)]).unwrap();
        assert!(split_search(&good, &[ctx.parity().to_vec()]).unwrap().splitting.is_some());
        assert!(split_search(&bad, &[ctx.parity().to_vec()]).unwrap().splitting.is_none());
    }

    #[test]
    fn guard_is_explicit() {
        let ctx = ParityContext::standard(1, 1);
        let hw = HighestWeight::new(&ctx, vec![crate::exact::RootMultiset::zeros(7); 3]).unwrap();
        assert!(matches!(split_search(&hw, &[ctx.parity().to_vec()]), Err(Error::SearchTooLarge(_))));
    }
}
