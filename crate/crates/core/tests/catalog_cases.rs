mod support;

use std::f64::consts::E;

use qicert_core::catalog::limit_constant;
use qicert_core::{
    derive_scaled_case, evaluate_case, limit_scan, CaseId, CaseInstance, EvalConfig, Error, ScalingRoute, Verdict,
};
use support::samples::{samples, unit};

#[test]
fn every_case_holds_on_a_sample() {
    let samples = samples();
    assert_eq!(samples.len(), CaseId::ALL.len());
    for inst in samples {
        let r = evaluate_case(&inst, &EvalConfig::default()).unwrap();
        assert!(
            matches!(r.verdict, Verdict::Certified | Verdict::Tight),
            "{}: {:?}\n{r:#?}",
            inst.case_id,
            r.verdict
        );
    }
}

#[test]
fn lemma_1_over_e_closed_form() {
    let inst = unit(CaseId::Lemma1OverE, None, &[("f", "exp(x)"), ("g", "1")]);
    let r = evaluate_case(&inst, &EvalConfig::default()).unwrap();
    assert!((r.links[0].lhs - (1.0 - 1.0 / E)).abs() < 1e-12);
    assert!((r.links[0].rhs - 1.0).abs() < 1e-12);
    assert_eq!(r.links[1].verdict, Verdict::Tight);
}

#[test]
fn constants_follow_endpoint_rules() {
    let prop1 = samples().remove(1);
    let r = evaluate_case(&prop1, &EvalConfig::default()).unwrap();
    assert_eq!(r.constants.k, Some(1.0));

    let fg3 = unit(CaseId::CorFg3, Some(2), &[("f", "exp(x)"), ("g", "1")]).with_alpha(0.0);
    let r = evaluate_case(&fg3, &EvalConfig::default()).unwrap();
    assert_eq!(r.constants.beta, Some(2.0));

    let alpha2 = unit(CaseId::PropAlpha2, Some(2), &[("f", "exp(4*x)"), ("g", "1 + x")]).with_alpha(-1.0);
    let c = qicert_core::compute_constants(&alpha2, &EvalConfig::default()).unwrap();
    assert!((c.k.unwrap() - 0.5).abs() < 1e-15);
    assert_eq!(c.g_supnorm, Some(2.0));
}

fn route_matches_direct(route: ScalingRoute, inst: &CaseInstance) {
    let cfg = EvalConfig::default();
    let direct = evaluate_case(inst, &cfg).unwrap();
    let scaled = derive_scaled_case(route, inst, &cfg).unwrap();
    let base = evaluate_case(&scaled.instance, &cfg).unwrap();
    assert!(base.hypotheses_passed(), "{base:#?}");
    let (lhs, rhs) = scaled.rescaled_sides(&base).unwrap();
    let tol = direct.combined_error().unwrap() + base.combined_error().unwrap() * scaled.side_factor + 1e-9;
    assert!((lhs - direct.lhs.unwrap()).abs() <= tol * (1.0 + lhs.abs()), "{lhs} vs {}", direct.lhs.unwrap());
    assert!((rhs - direct.rhs.unwrap()).abs() <= tol * (1.0 + rhs.abs()), "{rhs} vs {}", direct.rhs.unwrap());
}

#[test]
fn scaling_routes_reproduce_corollaries() {
    let fg1 = unit(CaseId::CorFg1, Some(2), &[("f", "exp(x)"), ("g", "1")]).with_alpha(1.0);
    let scaled = derive_scaled_case(ScalingRoute::Fg1ViaProp1, &fg1, &EvalConfig::default()).unwrap();
    assert!((scaled.c - 1.0).abs() < 1e-14);
    route_matches_direct(ScalingRoute::Fg1ViaProp1, &fg1);
    let fg1 = unit(CaseId::CorFg1, Some(3), &[("f", "exp(x) + x"), ("g", "1 + x")]).with_alpha(0.5);
    route_matches_direct(ScalingRoute::Fg1ViaProp1, &fg1);

    let g_over_f = unit(CaseId::CorGOverF, Some(2), &[("f", "exp(x)"), ("g", "1 + x")]);
    route_matches_direct(ScalingRoute::GOverFViaProp2, &g_over_f);

    // f / f' = 0.5 everywhere
    let alpha1 = unit(CaseId::CorAlpha1, Some(2), &[("f", "exp(2*x)")]);
    let scaled = derive_scaled_case(ScalingRoute::Alpha1ViaPropAlpha1, &alpha1, &EvalConfig::default()).unwrap();
    assert!((scaled.c - 1.0).abs() < 1e-12);
    assert_eq!(scaled.instance.params.alpha, Some(4.0));
    route_matches_direct(ScalingRoute::Alpha1ViaPropAlpha1, &alpha1);
}

#[test]
fn fg1_scaling_degenerates_at_critical_alpha() {
    let inst = unit(CaseId::CorFg1, Some(2), &[("f", "exp(x)"), ("g", "1")]).with_alpha(1.5);
    let err = derive_scaled_case(ScalingRoute::Fg1ViaProp1, &inst, &EvalConfig::default()).unwrap_err();
    assert!(matches!(err, Error::DegenerateScaling(_)));
    // the corollary itself still evaluates
    let r = evaluate_case(&inst, &EvalConfig::default()).unwrap();
    assert!(r.hypotheses_passed());
}

#[test]
fn limit_scan_exponential() {
    let inst = unit(CaseId::CorLimitScan, Some(1), &[("f", "exp(x)"), ("g", "1")]);
    let rows = limit_scan(&inst, 40, &EvalConfig::default()).unwrap();
    assert_eq!(rows.len(), 40);
    assert!((rows[0].s_n - (E - 1.0).sqrt()).abs() < 1e-12);
    assert!((rows[0].upper_rhs - E.sqrt()).abs() < 1e-12);
    assert!(rows.iter().all(|r| r.lower_holds && r.upper_holds));
    assert!((rows[39].c_n - limit_constant(40)).abs() < 1e-15);
}
