use serde::Serialize;

use super::linear::{check_linear, normalize_linear, LinearVerdict};
use super::n1::{n1_certificate, N1Certificate};
use super::necessary::{check_necessary, NecessaryReport};
use super::reflection::{standard_chain, to_standard, ReflectionStep};
use super::split::{split_search, SplitReport, SPLIT_GUARD};
use super::weight::HighestWeight;
use crate::error::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    Finite,
    NotFinite,
    Unknown,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Reason {
    NecessaryFailed,
    Linear,
    RankOne,
    Generic,
    Splitting,
    NoSplitting,
    SearchTooLarge,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassificationReport {
    pub verdict: Verdict,
    pub reason: Reason,
    /// The weight relative to the standard sequence.
    pub weight: HighestWeight,
    pub reflections: Vec<ReflectionStep>,
    pub necessary: NecessaryReport,
    pub generic: bool,
    pub linear: Option<LinearVerdict>,
    pub certificate: Option<N1Certificate>,
    pub splitting: Option<SplitReport>,
}

/// No two roots of one row differ by an integer.
pub fn is_generic(hw: &HighestWeight) -> bool {
    hw.rows().iter().all(|row| {
        let r = row.roots();
        (0..r.len()).all(|a| (a + 1..r.len()).all(|b| !(&r[a] - &r[b]).is_integer()))
    })
}

pub fn classify(hw: &HighestWeight) -> Result<ClassificationReport> {
    let (weight, reflections) = to_standard(hw)?;
    let necessary = check_necessary(&weight)?;
    let mut report = ClassificationReport {
        verdict: Verdict::NotFinite,
        reason: Reason::NecessaryFailed,
        weight,
        reflections,
        necessary,
        generic: false,
        linear: None,
        certificate: None,
        splitting: None,
    };
    if !report.necessary.passed {
        return Ok(report);
    }
    let w = &report.weight;
    let ctx = w.ctx();

    if let Some(lw) = w.as_linear() {
        let verdict = check_linear(&normalize_linear(&lw))?;
        report.verdict = if verdict.is_finite() { Verdict::Finite } else { Verdict::NotFinite };
        report.reason = Reason::Linear;
        report.linear = Some(verdict);
        return Ok(report);
    }
    if ctx.n() == 1 {
        report.certificate = n1_certificate(w)?;
        report.verdict = Verdict::Finite;
        report.reason = Reason::RankOne;
        return Ok(report);
    }
    report.generic = is_generic(w);
    if w.p() > SPLIT_GUARD {
        report.verdict = Verdict::Unknown;
        report.reason = Reason::SearchTooLarge;
        return Ok(report);
    }
    // Genericity alone does not rule out ambiguous pairings in the σ = 1/2
    // condition, so the generic route still requires an explicit splitting.
    if report.generic {
        let split = split_search(w, &[ctx.parity().to_vec()])?;
        if split.splitting.is_some() {
            report.splitting = Some(split);
            report.verdict = Verdict::Finite;
            report.reason = Reason::Generic;
            return Ok(report);
        }
    }
    let split = split_search(w, &standard_chain(ctx.n(), ctx.m()))?;
    let found = split.splitting.is_some();
    report.splitting = Some(split);
    report.verdict = if found { Verdict::Finite } else { Verdict::Unknown };
    report.reason = if found { Reason::Splitting } else { Reason::NoSplitting };
    Ok(report)
}
