use std::f64::consts::{E, PI};

use qicert_core::{evaluate_case, CaseId, CaseInstance, EvalConfig, Expr, Interval, Verdict};

fn e(s: &str) -> Expr {
    Expr::parse(s).unwrap()
}

fn unit(case: CaseId) -> CaseInstance {
    CaseInstance::new(case, Interval::new(0.0, 1.0).unwrap())
}

fn assert_sides(inst: &CaseInstance, lhs: f64, rhs: f64, verdict: Verdict) {
    let r = evaluate_case(inst, &EvalConfig::default()).unwrap();
    assert_eq!(r.verdict, verdict, "{r:#?}");
    assert!((r.lhs.unwrap() - lhs).abs() <= 1e-8, "lhs {} vs {lhs}", r.lhs.unwrap());
    assert!((r.rhs.unwrap() - rhs).abs() <= 1e-8, "rhs {} vs {rhs}", r.rhs.unwrap());
}

#[test]
fn qi_original_identity() {
    let inst = unit(CaseId::QiOriginal).with_n(1).with_fn("f", e("x"));
    assert_sides(&inst, 0.25, 0.25, Verdict::Tight);
}

#[test]
fn prop1_unit_weights() {
    let inst = unit(CaseId::Prop1General)
        .with_n(2)
        .with_alpha(1.0)
        .with_partition([2])
        .with_fn("f", e("x + 1"))
        .with_fn("g", e("1"))
        .with_fn("h_1", e("1"))
        .with_fn("h_2", e("1"));
    assert_sides(&inst, 3.25, 3.75, Verdict::Certified);
}

#[test]
fn prop1_partition_one() {
    let inst = unit(CaseId::Prop1General)
        .with_n(2)
        .with_alpha(1.0)
        .with_partition([1])
        .with_fn("f", e("x + 1"))
        .with_fn("g", e("pow(1 + x, 2)"))
        .with_fn("h_1", e("1/(1 + x)"))
        .with_fn("h_2", e("1"));
    let r = evaluate_case(&inst, &EvalConfig::default()).unwrap();
    assert_eq!(r.constants.big_m, Some(1.0));
    assert!((r.constants.m.as_ref().unwrap()[0] - 0.5).abs() < 1e-14);
    assert_eq!(r.constants.k, Some(1.0));
    assert_sides(&inst, 0.5 + (7.0f64 / 3.0).powi(2), 127.0 / 7.0, Verdict::Certified);
}

#[test]
fn prop2_exponential() {
    let inst = unit(CaseId::Prop2GOverF).with_n(1).with_fn("f", e("exp(x)")).with_fn("g", e("1")).with_fn("h", e("1"));
    assert_sides(&inst, 1.0 / E + (1.0 - 1.0 / E).powi(2), E - 1.0, Verdict::Certified);
}

#[test]
fn prop_alpha1_exponential() {
    let inst = unit(CaseId::PropAlpha1).with_n(2).with_alpha(3.0).with_fn("f", e("exp(2*x)")).with_fn("g", e("1"));
    let lhs = 1.0 + ((E * E - 1.0) / 2.0).powi(2);
    assert_sides(&inst, lhs, (E.powi(4) - 1.0) / 4.0, Verdict::Certified);
}

#[test]
fn prop_x_minus_a_equality() {
    let inst = unit(CaseId::PropXMinusA).with_n(2).with_k(1).with_fn("f", e("x")).with_fn("g", e("1")).with_fn("h", e("1"));
    assert_sides(&inst, 0.25, 0.25, Verdict::Tight);
}

#[test]
fn cor_fgh2_exponential() {
    let inst = unit(CaseId::CorFgh2).with_n(2).with_fn("f", e("exp(x)"));
    assert_sides(&inst, 1.0 + (E - 1.0).powi(2) / 2.0, (E * E - 1.0) / 2.0, Verdict::Certified);
}

#[test]
fn cor_log3_links() {
    let inst = unit(CaseId::CorLog3).with_fn("f", e("exp(x)"));
    let r = evaluate_case(&inst, &EvalConfig::default()).unwrap();
    assert_eq!(r.links.len(), 2);
    assert!((r.links[0].lhs - (1.0 - 1.0 / E)).abs() < 1e-12);
    assert!((r.links[0].rhs - 1.0).abs() < 1e-12);
    assert_eq!(r.links[0].verdict, Verdict::Certified);
    assert!((r.links[1].lhs - 1.0).abs() < 1e-12);
    assert!((r.links[1].rhs - 1.0).abs() < 1e-12);
    assert_eq!(r.links[1].verdict, Verdict::Tight);
    assert_eq!(r.verdict, Verdict::Tight);
}

#[test]
fn lemma_exp_equality_at_e() {
    let inst = CaseInstance::new(CaseId::LemmaExp, Interval::new(E, E).unwrap());
    let r = evaluate_case(&inst, &EvalConfig::default()).unwrap();
    assert!(r.links.iter().all(|l| l.verdict == Verdict::Tight), "{r:#?}");
    let inst = CaseInstance::new(CaseId::LemmaExp, Interval::new(PI, PI).unwrap());
    let r = evaluate_case(&inst, &EvalConfig::default()).unwrap();
    assert!(r.links.iter().all(|l| l.verdict == Verdict::Certified));
}

#[test]
fn failed_hypothesis_skips_evaluation() {
    // f'' = -2 < 0 breaks the qi growth condition
    let inst = unit(CaseId::QiOriginal).with_n(2).with_fn("f", e("1 + x - x*x"));
    let r = evaluate_case(&inst, &EvalConfig::default()).unwrap();
    assert_eq!(r.verdict, Verdict::HypothesesFailed);
    assert!(r.lhs.is_none() && r.links.is_empty());
    assert!(r.hypothesis_reports.iter().any(|h| h.id == "growth" && !h.passed));
}
