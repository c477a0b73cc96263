mod common;

use common::{r, slow_module_entry};
use ospy::exact::{series_from_roots, Rational, RootMultiset};
use ospy::sampling::Sampler;
use ospy::super_space::ParityContext;
use ospy::yangian::{
    check_central_series, check_consistency, check_defining_relations, embed_reduce, extract_highest_weight,
    highest_vector, module_action, module_action_series, weight_at_point, ModuleKind, ModuleSpec,
};

fn specs() -> Vec<ModuleSpec> {
    let mut out = Vec::new();
    for (n, m) in [(1, 1), (1, 2), (2, 1)] {
        let std = ParityContext::standard(n, m);
        let bits = if (n, m) == (1, 2) { "101".to_string() } else { std.parity_string() };
        out.push(ModuleSpec::vector(&ParityContext::parse(n, m, &bits).unwrap()));
        out.push(ModuleSpec::sharp(&std, 2.min(m)).unwrap().with_shift(r(1, 3)));
        out.push(ModuleSpec::flat(&ParityContext::reversed(n, m), 2.min(n)).unwrap());
    }
    out
}

#[test]
fn coproduct_matches_path_sum() {
    for spec in specs() {
        let u0 = r(11, 4);
        let fast = module_action(&spec, &u0).unwrap();
        let n = spec.ctx().dim();
        for i in 0..n {
            for j in 0..n {
                let slow = slow_module_entry(&spec, &u0, i, j);
                assert_eq!(fast.get(i, j), &slow, "{spec} entry ({i},{j})");
            }
        }
    }
}

#[test]
fn series_approach_point_values() {
    // Each matrix entry of t_{ij}(u) is a rational function of u; summing its
    // truncated expansion at a large point must approach the exact value
    // within the first omitted term.
    let ctx = ParityContext::standard(1, 1);
    let spec = ModuleSpec::sharp(&ctx, 1).unwrap();
    let k = 12;
    let series = module_action_series(&spec, k);
    let u0 = r(1000, 1);
    let point = module_action(&spec, &u0).unwrap();
    let n = ctx.dim();
    let inv = u0.recip().unwrap();
    for i in 0..n {
        for j in 0..n {
            for (row, col, exact) in point.get(i, j).entries() {
                let s = series.entry_series(i, j, row, col);
                let summed: Rational = s.coefficients().iter().enumerate().map(|(p, c)| c * &inv.pow(p as i32)).sum();
                let err = (&summed - exact).abs();
                assert!(err < inv.pow(k as i32), "entry ({i},{j}) at ({row},{col})");
            }
        }
    }
}

#[test]
fn vector_weight_series() {
    let ctx = ParityContext::standard(1, 1);
    let mut s = Sampler::new(3);
    let w = extract_highest_weight(&ModuleSpec::vector(&ctx), 6, &mut s).unwrap();
    // λ_1(u) = 1 − 1/u for an odd first vector.
    assert_eq!(w.components[0], series_from_roots(&RootMultiset::singleton(r(-1, 1)), 6));
    assert_eq!(w.components[1], series_from_roots(&RootMultiset::empty(), 6));
}

#[test]
fn highest_vector_point_weight_matches_series() {
    let ctx = ParityContext::standard(2, 1);
    let spec = ModuleSpec::sharp(&ctx, 1).unwrap().with_shift(r(1, 2));
    let mut s = Sampler::new(5);
    let w = extract_highest_weight(&spec, 10, &mut s).unwrap();
    let action = module_action(&spec, &r(7, 3)).unwrap();
    let at = weight_at_point(&action, &highest_vector(&spec)).unwrap();
    assert_eq!(at.len(), w.components.len());
    assert!(at.iter().all(|x| !x.is_zero()));
}

#[test]
fn rtt_central_and_consistency_small() {
    let mut s = Sampler::new(11);
    for spec in specs() {
        let samples: Vec<_> = s.points(2, 2).into_iter().map(|p| (p[0].clone(), p[1].clone())).collect();
        assert!(check_defining_relations(&spec, &samples, &mut s).unwrap().passed, "{spec}");
        assert!(check_central_series(&spec, &[r(9, 2), r(-5, 3)], &mut s).unwrap().passed, "{spec}");
        let w = extract_highest_weight(&spec, 6, &mut s).unwrap();
        assert!(check_consistency(&w, spec.ctx(), &mut s).unwrap().passed, "{spec}");
    }
}

#[test]
fn poles_are_reported() {
    let ctx = ParityContext::standard(1, 1);
    let spec = ModuleSpec::new(&ctx, ModuleKind::Sharp, 1, r(2, 1)).unwrap();
    assert!(module_action(&spec, &r(2, 1)).is_err());
    assert!(spec.pole(&r(5, 2)).is_some());
    assert!(spec.pole(&r(3, 1)).is_none());
}

#[test]
fn reduced_action_has_reduced_size() {
    let ctx = ParityContext::parse(1, 1, "01").unwrap();
    let red = embed_reduce(&ModuleSpec::vector(&ctx), &r(5, 3)).unwrap();
    assert_eq!(red.ctx.dim(), 3);
    assert_eq!(red.matrices.len(), 9);
    assert_eq!(red.ctx.m(), 1);
}
