use serde::Serialize;

use super::linear::LinearBranch;
use super::reflection::standard_chain;
use super::split::{linear_column_verdict, split_search};
use super::weight::HighestWeight;
use crate::error::{Error, Result};
use crate::exact::{Rational, RootMultiset};

/// The weight with `δ = λ_{m+2} ∩ (λ_m ∩ λ_{m+1})` removed from the last
/// three rows; those rows then hold `p − |δ|` roots.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GcdReduction {
    pub delta: RootMultiset,
    pub rows: Vec<RootMultiset>,
}

pub fn gcd_reduce_n1(hw: &HighestWeight) -> Result<GcdReduction> {
    let ctx = hw.ctx();
    if ctx.n() != 1 {
        return Err(Error::InvalidWeight(format!("gcd reduction needs n = 1, got n = {}", ctx.n())));
    }
    if !ctx.is_standard() {
        return Err(Error::NonStandardParity(ctx.parity_string()));
    }
    let m = ctx.m();
    let common = hw.row(m - 1).intersection(hw.row(m));
    let delta = hw.row(m + 1).intersection(&common);
    let mut rows = hw.rows().to_vec();
    for row in &mut rows[m - 1..] {
        *row = row.difference(&delta);
    }
    Ok(GcdReduction { delta, rows })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CertificateMethod {
    GcdMatching,
    SplitSearch,
}

/// Linear columns at the standard sequence whose product is the weight and
/// each of which is finite-dimensional.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct N1Certificate {
    pub method: CertificateMethod,
    pub delta: RootMultiset,
    pub columns: Vec<Vec<Rational>>,
    pub branches: Vec<LinearBranch>,
}

/// Perfect matching of `left` onto `right` under `edge` (Kuhn's algorithm);
/// `result[i]` is the partner of `left[i]`.
fn perfect_matching(left: &[Rational], right: &[Rational], edge: impl Fn(&Rational, &Rational) -> bool) -> Option<Vec<usize>> {
    if left.len() != right.len() {
        return None;
    }
    let adj: Vec<Vec<usize>> = left.iter().map(|l| (0..right.len()).filter(|&j| edge(l, &right[j])).collect()).collect();
    let mut owner: Vec<Option<usize>> = vec![None; right.len()];
    fn augment(i: usize, adj: &[Vec<usize>], seen: &mut [bool], owner: &mut [Option<usize>]) -> bool {
        for &j in &adj[i] {
            if !seen[j] {
                seen[j] = true;
                if owner[j].is_none_or(|k| augment(k, adj, seen, owner)) {
                    owner[j] = Some(i);
                    return true;
                }
            }
        }
        false
    }
    for i in 0..left.len() {
        let mut seen = vec![false; right.len()];
        if !augment(i, &adj, &mut seen, &mut owner) {
            return None;
        }
    }
    let mut partner = vec![0; left.len()];
    for (j, o) in owner.iter().enumerate() {
        partner[o.expect("perfect matching")] = j;
    }
    Some(partner)
}

/// Columns assembled from the reduced weight: the first `m` rows chained by
/// integer steps, the `δ` slots filled by `(d, d, d)`, and the remaining
/// slots of row `m` matched through row `m+2` to row `m+1`.
fn matching_columns(hw: &HighestWeight, reduction: &GcdReduction) -> Option<Vec<Vec<Rational>>> {
    let m = hw.ctx().m();
    let p = hw.p();
    let full: Vec<Vec<Rational>> = hw.rows()[..m].iter().map(|r| r.roots().to_vec()).collect();
    let integer_step = |a: &Rational, b: &Rational| (b - a).is_nonnegative_integer();

    // slot[r][a] is the index into row r used by column a.
    let mut slots: Vec<Vec<usize>> = vec![(0..p).collect()];
    for r in 1..m {
        let partner = perfect_matching(&full[r - 1], &full[r], integer_step)?;
        slots.push(slots[r - 1].iter().map(|&k| partner[k]).collect());
    }

    let mut delta_left = reduction.delta.clone();
    let mut is_delta = vec![false; p];
    for (k, v) in full[m - 1].iter().enumerate() {
        if delta_left.remove_one(v) {
            is_delta[k] = true;
        }
    }
    let rest: Vec<usize> = (0..p).filter(|&k| !is_delta[k]).collect();
    let rest_values: Vec<Rational> = rest.iter().map(|&k| full[m - 1][k].clone()).collect();
    let top = reduction.rows[m + 1].roots();
    let odd = reduction.rows[m].roots();
    let to_top = perfect_matching(&rest_values, top, |a, b| {
        let d = b - a;
        d.is_nonnegative_integer() && !d.is_zero()
    })?;
    let to_odd = perfect_matching(top, odd, |t, o| (Rational::from_integer(2) * (o - t)).is_nonnegative_integer())?;

    let columns = (0..p)
        .map(|a| {
            let mut col: Vec<Rational> = (0..m).map(|r| full[r][slots[r][a]].clone()).collect();
            let k = slots[m - 1][a];
            let last = col[m - 1].clone();
            if is_delta[k] {
                col.extend([last.clone(), last]);
            } else {
                let t = to_top[rest.iter().position(|&x| x == k).expect("rest slot")];
                col.push(odd[to_odd[t]].clone());
                col.push(top[t].clone());
            }
            col
        })
        .collect();
    Some(columns)
}

fn certify_columns(hw: &HighestWeight, columns: &[Vec<Rational>]) -> Result<Option<Vec<LinearBranch>>> {
    let mut branches = Vec::with_capacity(columns.len());
    for c in columns {
        match linear_column_verdict(hw.ctx(), c)?.1 {
            super::linear::LinearVerdict::Finite(b) => branches.push(b),
            super::linear::LinearVerdict::NotFinite => return Ok(None),
        }
    }
    Ok(Some(branches))
}

/// A splitting certificate for an `n = 1` weight at the standard sequence:
/// the gcd reduction followed by matchings, falling back on the exhaustive
/// search. `None` when neither succeeds.
pub fn n1_certificate(hw: &HighestWeight) -> Result<Option<N1Certificate>> {
    let reduction = gcd_reduce_n1(hw)?;
    if let Some(columns) = matching_columns(hw, &reduction) {
        if let Some(branches) = certify_columns(hw, &columns)? {
            return Ok(Some(N1Certificate { method: CertificateMethod::GcdMatching, delta: reduction.delta, columns, branches }));
        }
    }
    let chain = standard_chain(hw.ctx().n(), hw.ctx().m());
    let report = split_search(hw, &chain)?;
    Ok(report.splitting.and_then(|s| {
        (s.parity == hw.ctx().parity_string()).then_some(N1Certificate {
            method: CertificateMethod::SplitSearch,
            delta: reduction.delta,
            columns: s.columns,
            branches: s.branches,
        })
    }))
}
