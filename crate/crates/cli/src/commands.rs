use std::fmt::Write as _;
use std::path::Path;

use ospy::classify::{
    classify, hook_reflection_consistency, split_search, standard_chain, transport_with_trace, ClassificationReport,
    HighestWeight, HookPartition, SplitReport,
};
use ospy::exact::Rational;
use ospy::report::CheckReport;
use ospy::sampling::Sampler;
use ospy::super_space::{
    build_p, build_q, build_r, check_yang_baxter, parse_bits, r_pole, ParityContext,
};
use ospy::yangian::{
    check_central_series, check_consistency, check_defining_relations, extract_highest_weight, ModuleKind,
    ModuleSpec,
};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::fixtures;

/// An error that makes the input unusable; reported with exit code 2.
#[derive(Debug)]
pub struct InputError {
    pub code: &'static str,
    pub message: String,
}

impl From<ospy::Error> for InputError {
    fn from(e: ospy::Error) -> Self {
        InputError { code: e.code(), message: e.to_string() }
    }
}

impl InputError {
    fn new(code: &'static str, message: impl Into<String>) -> Self {
        InputError { code, message: message.into() }
    }

    pub fn to_json(&self) -> Value {
        json!({ "error": { "code": self.code, "message": self.message } })
    }
}

pub type CmdResult = Result<Outcome, InputError>;

pub struct Outcome {
    pub report: Value,
    pub text: String,
    /// Every identity that must hold did hold.
    pub passed: bool,
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("reports serialize")
}

/// Reads a path, or a bundled fixture given as `builtin:NAME`.
pub fn read_input(input: &str) -> Result<String, InputError> {
    if let Some(name) = input.strip_prefix("builtin:") {
        return fixtures::find(name)
            .map(|f| f.contents.to_string())
            .ok_or_else(|| InputError::new("E_IO", format!("no bundled example named {name:?}")));
    }
    std::fs::read_to_string(Path::new(input)).map_err(|e| InputError::new("E_IO", format!("{input}: {e}")))
}

fn parse_json<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T, InputError> {
    serde_json::from_str(text).map_err(|e| InputError::new("E_JSON", e.to_string()))
}

pub fn load_weight(input: &str) -> Result<HighestWeight, InputError> {
    parse_json(&read_input(input)?)
}

fn context(n: usize, m: usize, parity: Option<&str>) -> Result<ParityContext, InputError> {
    Ok(match parity {
        Some(bits) => ParityContext::parse(n, m, bits)?,
        None => ParityContext::new(n, m, &ospy::super_space::standard_bits(n, m))?,
    })
}

fn rows_text(w: &HighestWeight) -> String {
    w.rows()
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let roots: Vec<String> = r.roots().iter().map(Rational::to_string).collect();
            format!("  λ_{} roots: [{}]\n", i + 1, roots.join(", "))
        })
        .collect()
}

fn list(values: &[Rational]) -> String {
    let v: Vec<String> = values.iter().map(Rational::to_string).collect();
    format!("({})", v.join(", "))
}

fn split_text(out: &mut String, split: &SplitReport) {
    let _ = writeln!(out, "splitting searched at: {}", split.searched.join(", "));
    match &split.splitting {
        None => out.push_str("splitting: none\n"),
        Some(s) => {
            let _ = writeln!(out, "splitting at {}:", s.parity);
            for c in &s.columns {
                let _ = writeln!(out, "  column {}", list(c));
            }
        }
    }
}

fn classification_text(r: &ClassificationReport) -> String {
    let mut out = String::new();
    let verdict = serde_json::to_value(r.verdict).expect("serializes");
    let reason = serde_json::to_value(r.reason).expect("serializes");
    let _ = writeln!(out, "verdict: {} ({})", verdict.as_str().unwrap_or(""), reason.as_str().unwrap_or(""));
    for step in &r.reflections {
        let _ = writeln!(out, "reflection: {} -> {} at position {}", step.from, step.to, step.position);
    }
    out.push_str(&rows_text(&r.weight));
    for c in &r.necessary.conditions {
        let kind = serde_json::to_value(c.kind).expect("serializes");
        let status = match c.outcome.polynomial() {
            Some(p) => format!("P_{} roots {}", c.index, list(p.root_params.roots())),
            None => "fails".to_string(),
        };
        let _ = writeln!(out, "condition {} P_{} (σ = {}): {status}", kind.as_str().unwrap_or(""), c.index, c.sigma);
    }
    if let Some(split) = &r.splitting {
        split_text(&mut out, split);
    }
    if let Some(cert) = &r.certificate {
        let _ = writeln!(out, "certificate with δ = {}:", list(cert.delta.roots()));
        for c in &cert.columns {
            let _ = writeln!(out, "  column {}", list(c));
        }
    }
    out
}

pub fn run_classify(input: &str) -> CmdResult {
    let hw = load_weight(input)?;
    let report = classify(&hw)?;
    Ok(Outcome { text: classification_text(&report), report: to_value(&report), passed: true })
}

pub fn run_reflect(input: &str, to_parity: &str) -> CmdResult {
    let hw = load_weight(input)?;
    let target = parse_bits(to_parity)?;
    let (moved, steps) = transport_with_trace(&hw, &target)?;
    let mut text = String::new();
    for step in &steps {
        let _ = writeln!(text, "reflection: {} -> {} at position {}", step.from, step.to, step.position);
    }
    text.push_str(&rows_text(&moved));
    Ok(Outcome { report: json!({ "weight": moved, "reflections": steps }), text, passed: true })
}

pub fn run_split(input: &str, all_parities: bool) -> CmdResult {
    let hw = load_weight(input)?;
    let parities = if all_parities {
        standard_chain(hw.ctx().n(), hw.ctx().m())
    } else {
        vec![hw.ctx().parity().to_vec()]
    };
    let report = split_search(&hw, &parities)?;
    let mut text = String::new();
    split_text(&mut text, &report);
    Ok(Outcome { report: to_value(&report), text, passed: true })
}

#[derive(Deserialize)]
struct HookInput {
    m: usize,
    n: usize,
    gamma: Vec<u64>,
}

pub fn run_hook(input: Option<&str>, gamma: Option<&str>, m: Option<usize>, n: Option<usize>) -> CmdResult {
    let partition = match (input, gamma) {
        (Some(path), None) => {
            let h: HookInput = parse_json(&read_input(path)?)?;
            HookPartition::new(h.m, h.n, h.gamma)?
        }
        (None, Some(g)) => {
            let (m, n) = m
                .zip(n)
                .ok_or_else(|| InputError::new("E_USAGE", "--gamma requires --m and --n"))?;
            let parts = g
                .split(',')
                .filter(|s| !s.trim().is_empty())
                .map(|s| s.trim().parse::<u64>())
                .collect::<Result<Vec<_>, _>>()
                .map_err(|e| InputError::new("E_PARTITION", format!("{g:?}: {e}")))?;
            HookPartition::new(m, n, parts)?
        }
        _ => return Err(InputError::new("E_USAGE", "pass exactly one of --input and --gamma")),
    };
    let report = hook_reflection_consistency(&partition)?;
    let ints = |v: &[i64]| v.iter().map(i64::to_string).collect::<Vec<_>>().join(", ");
    let text = format!(
        "Γ = {:?}, m = {}, n = {}\nΓ♯ = ({})\nΓ♭ = ({})\ntransported = {}\n{}\n",
        partition.gamma,
        partition.m,
        partition.n,
        ints(&report.sharp),
        ints(&report.flat),
        list(&report.transported),
        if report.passed { "consistent" } else { "MISMATCH" }
    );
    Ok(Outcome { passed: report.passed, report: to_value(&report), text })
}

fn check_lines(checks: &[CheckReport]) -> String {
    checks
        .iter()
        .map(|c| {
            let status = if c.passed { "pass" } else { "FAIL" };
            if c.samples.is_empty() {
                format!("{status} {}\n", c.identity)
            } else {
                format!("{status} {} ({}/{} samples)\n", c.identity, c.pass_count(), c.samples.len())
            }
        })
        .collect()
}

fn pairs(sampler: &mut Sampler, count: usize) -> Vec<(Rational, Rational)> {
    sampler.points(count, 2).into_iter().map(|p| (p[0].clone(), p[1].clone())).collect()
}

pub struct RmatrixArgs<'a> {
    pub n: usize,
    pub m: usize,
    pub parity: Option<&'a str>,
    pub samples: usize,
    pub seed: u64,
}

pub fn run_verify_rmatrix(args: &RmatrixArgs<'_>) -> CmdResult {
    let ctx = context(args.n, args.m, args.parity)?;
    let mut sampler = Sampler::new(args.seed);
    let mut checks = Vec::new();

    let p = build_p(&ctx);
    let q = build_q(&ctx);
    let mut failures = Vec::new();
    if p.compose(&p) != ospy::super_space::GradedOperator::identity(&ctx, 2) {
        failures.push("P² ≠ 1".to_string());
    }
    checks.push(CheckReport::from_failures("p-squared", failures));
    let mut failures = Vec::new();
    for leg in [1, 2] {
        if p.super_transpose(leg)? != q {
            failures.push(format!("Q ≠ P^t{leg}"));
        }
    }
    checks.push(CheckReport::from_failures("q-partial-transpose", failures));
    let mut failures = Vec::new();
    let mut u0 = sampler.rational();
    while r_pole(&ctx, &u0).is_some() {
        u0 = sampler.rational();
    }
    let r = build_r(&ctx, &u0)?;
    for leg in [1, 2] {
        if r.super_transpose(leg)?.super_transpose(leg)? != r {
            failures.push(format!("t{leg} is not involutive on R({u0})"));
        }
    }
    checks.push(CheckReport::from_failures("transpose-involution", failures));
    let samples = pairs(&mut sampler, args.samples);
    checks.push(check_yang_baxter(&ctx, &samples, &mut sampler)?);

    let passed = checks.iter().all(|c| c.passed);
    let text = format!("{:?}, seed {}\n{}", ctx, args.seed, check_lines(&checks));
    Ok(Outcome { report: json!({ "ctx": ctx, "seed": args.seed, "passed": passed, "checks": checks }), text, passed })
}

pub struct ModuleArgs<'a> {
    pub n: usize,
    pub m: usize,
    pub parity: Option<&'a str>,
    pub kind: &'a str,
    pub d: usize,
    pub shift: &'a str,
    pub samples: usize,
    pub order: usize,
    pub seed: u64,
}

pub fn run_build_module(args: &ModuleArgs<'_>) -> CmdResult {
    let ctx = match (args.parity, args.kind) {
        (Some(bits), _) => ParityContext::parse(args.n, args.m, bits)?,
        (None, "flat") => ParityContext::new(args.n, args.m, &ospy::super_space::reversed_bits(args.n, args.m))?,
        (None, _) => context(args.n, args.m, None)?,
    };
    let kind: ModuleKind = args.kind.parse()?;
    let shift: Rational = args.shift.parse()?;
    let spec = ModuleSpec::new(&ctx, kind, args.d, shift)?;
    let mut sampler = Sampler::new(args.seed);

    let samples = pairs(&mut sampler, args.samples);
    let mut checks = vec![check_defining_relations(&spec, &samples, &mut sampler)?];
    let weight = extract_highest_weight(&spec, args.order, &mut sampler)?;
    let singles: Vec<Rational> = (0..args.samples).map(|_| sampler.rational()).collect();
    checks.push(check_central_series(&spec, &singles, &mut sampler)?);
    checks.push(check_consistency(&weight, &ctx, &mut sampler)?);

    let passed = checks.iter().all(|c| c.passed);
    let mut text = format!("{kind} module, d = {}, shift = {}, {:?}, dim {}\n", spec.d(), spec.shift(), ctx, spec.dim());
    text.push_str(&check_lines(&checks));
    for (i, c) in weight.components.iter().take(ctx.middle() + 1).enumerate() {
        let _ = writeln!(text, "  λ_{}(u) = {:?}", i + 1, c);
    }
    let components: Vec<&[Rational]> = weight.components.iter().map(|c| c.coefficients()).collect();
    let report = json!({
        "module": spec,
        "dim": spec.dim(),
        "seed": args.seed,
        "order": args.order,
        "passed": passed,
        "checks": checks,
        "highest_weight": components,
    });
    Ok(Outcome { report, text, passed })
}

pub fn run_examples(name: Option<&str>) -> CmdResult {
    match name {
        None => {
            let list: Vec<Value> = fixtures::bundled_examples()
                .iter()
                .map(|f| json!({ "name": f.name, "file": f.file, "summary": f.summary }))
                .collect();
            let text = fixtures::bundled_examples()
                .iter()
                .map(|f| format!("{:<12} {}\n", f.name, f.summary))
                .collect();
            Ok(Outcome { report: Value::Array(list), text, passed: true })
        }
        Some(n) => {
            let f = fixtures::find(n).ok_or_else(|| InputError::new("E_IO", format!("no bundled example named {n:?}")))?;
            Ok(Outcome { report: parse_json(f.contents)?, text: f.contents.to_string(), passed: true })
        }
    }
}
