mod support;

use std::f64::consts::E;

use proptest::prelude::*;
use qicert_core::search::{curated, sample_instance};
use qicert_core::{evaluate_case, CaseId, CaseInstance, EvalConfig, Expr, Interval, Verdict};
use support::samples::{on, samples, unit};

/// Links that compare two pointwise quantities and so do not vanish on a
/// degenerate interval.
fn pointwise_link(case: CaseId, index: usize) -> bool {
    matches!((case, index), (CaseId::Lemma1OverE, 1) | (CaseId::CorLog3, 1))
}

#[test]
fn degenerate_intervals_give_zero_sides() {
    for mut inst in samples() {
        if inst.case_id == CaseId::LemmaExp {
            continue;
        }
        inst.interval = Interval::new(0.5, 0.5).unwrap();
        let r = evaluate_case(&inst, &EvalConfig::default()).unwrap();
        assert!(r.hypotheses_passed(), "{}: {r:#?}", inst.case_id);
        for (i, link) in r.links.iter().enumerate() {
            if pointwise_link(inst.case_id, i) {
                continue;
            }
            assert_eq!((link.lhs, link.rhs), (0.0, 0.0), "{} link {i}", inst.case_id);
            assert_eq!(link.verdict, Verdict::Tight);
        }
    }
}

#[test]
fn fh_bound_dominates_fgh2_bound() {
    for (s, p, n) in [(0.5, 0.5, 2), (1.0, 0.9, 2), (2.0, 0.3, 2), (0.7, 1.5, 3), (1.5, 1.9, 3)] {
        let f = format!("pow(x + {s}, {p})");
        let fh = unit(CaseId::CorFh, Some(n), &[("f", &f), ("h", "1")]).with_alpha(1.0);
        let fgh2 = unit(CaseId::CorFgh2, Some(n), &[("f", &f)]);
        let cfg = EvalConfig::default();
        let (a, b) = (evaluate_case(&fh, &cfg).unwrap(), evaluate_case(&fgh2, &cfg).unwrap());
        assert!(a.hypotheses_passed() && b.hypotheses_passed(), "{f}");
        assert!((a.rhs.unwrap() - b.rhs.unwrap()).abs() < 1e-12);
        assert!(a.lhs.unwrap() >= b.lhs.unwrap(), "{f}: {} < {}", a.lhs.unwrap(), b.lhs.unwrap());
    }
}

#[test]
fn lemma_exp_scan() {
    let cfg = EvalConfig::default();
    for i in 0..=2000 {
        let x = 10f64.powf(-3.0 + 5.0 * i as f64 / 2000.0);
        let inst = on(CaseId::LemmaExp, x, x, None, &[]);
        let r = evaluate_case(&inst, &cfg).unwrap();
        let margin = r.links[1].margin;
        assert!(margin >= -1e-12, "x = {x}: {margin}");
        if margin < 1e-12 {
            assert!((x - E).abs() < 1e-4, "x = {x}: {margin}");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn prop1_sharpens_the_trivial_estimate(seed in any::<u64>()) {
        let inst = sample_instance(CaseId::Prop1General, &curated(CaseId::Prop1General), seed).unwrap();
        let Ok(r) = evaluate_case(&inst, &EvalConfig::default()) else { return Ok(()) };
        if !r.hypotheses_passed() {
            return Ok(());
        }
        let n = inst.n().unwrap() as i32;
        let c = &r.constants;
        let mut trivial = inst.interval.width() * c.k.unwrap() * c.big_m.unwrap().powi(n);
        for (i, m) in (1..=n).zip(c.m.as_ref().unwrap()) {
            trivial *= m.powi(n - i);
        }
        prop_assert!(trivial <= r.rhs.unwrap() + r.combined_error().unwrap() + 1e-9);
    }

    #[test]
    fn evaluation_is_deterministic(seed in any::<u64>(), pick in 0usize..22) {
        let case = CaseId::ALL[pick];
        let inst = sample_instance(case, &curated(case), seed).unwrap();
        let cfg = EvalConfig::default();
        let (a, b) = (evaluate_case(&inst, &cfg), evaluate_case(&inst, &cfg));
        prop_assert_eq!(a, b);
    }

    #[test]
    fn instances_round_trip_through_json(seed in any::<u64>(), pick in 0usize..22) {
        let case = CaseId::ALL[pick];
        let inst = sample_instance(case, &curated(case), seed).unwrap();
        let back: CaseInstance = serde_json::from_str(&serde_json::to_string(&inst).unwrap()).unwrap();
        prop_assert_eq!(&back, &inst);
        let f = inst.functions.values().next().cloned().unwrap_or_else(Expr::one);
        prop_assert_eq!(f.to_string(), back.functions.values().next().cloned().unwrap_or_else(Expr::one).to_string());
    }
}
