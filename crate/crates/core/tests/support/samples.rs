//! One admissible instance per catalog case.

use qicert_core::{CaseId, CaseInstance, Expr, Interval};

fn e(s: &str) -> Expr {
    Expr::parse(s).unwrap()
}

pub fn on(case: CaseId, a: f64, b: f64, n: Option<u32>, slots: &[(&str, &str)]) -> CaseInstance {
    let mut inst = CaseInstance::new(case, Interval::new(a, b).unwrap());
    inst.params.n = n;
    for (name, src) in slots {
        inst = inst.with_fn(name, e(src));
    }
    inst
}

pub fn unit(case: CaseId, n: Option<u32>, slots: &[(&str, &str)]) -> CaseInstance {
    on(case, 0.0, 1.0, n, slots)
}

/// One admissible instance per case.
pub fn samples() -> Vec<CaseInstance> {
    use CaseId::*;
    vec![
        unit(QiOriginal, Some(2), &[("f", "x*x")]),
        unit(Prop1General, Some(2), &[("f", "x + 1"), ("g", "1"), ("h_1", "1"), ("h_2", "1")])
            .with_alpha(1.0)
            .with_partition([2]),
        unit(CorFghp, Some(2), &[("f", "1 + x"), ("g", "1"), ("h", "1"), ("p", "1")]).with_alpha(1.0).with_nu(2),
        unit(CorFg1, Some(2), &[("f", "exp(x)"), ("g", "1")]).with_alpha(1.0),
        unit(CorFg2, Some(2), &[("f", "exp(x)"), ("g", "1 + x")]).with_alpha(1.0),
        unit(CorFh, Some(2), &[("f", "1 + x"), ("h", "x/2 + 0.25")]).with_alpha(1.0),
        unit(CorFg3, Some(2), &[("f", "exp(x)"), ("g", "1")]).with_alpha(0.5),
        unit(Prop2GOverF, Some(1), &[("f", "exp(x)"), ("g", "1"), ("h", "1")]),
        unit(CorGOverF, Some(2), &[("f", "exp(x)"), ("g", "1")]),
        unit(CorLimitScan, Some(1), &[("f", "exp(x)"), ("g", "1")]),
        unit(Lemma1OverE, None, &[("f", "exp(x)"), ("g", "1")]),
        on(LemmaExp, 2.0, 2.0, None, &[]),
        unit(CorLog1, Some(2), &[("f", "exp(x)")]),
        unit(CorLog2, Some(2), &[("f", "exp(x)")]),
        unit(CorLog3, None, &[("f", "exp(x)")]),
        unit(PropAlpha1, Some(2), &[("f", "exp(2*x)"), ("g", "1")]).with_alpha(3.0),
        unit(CorAlpha1, Some(2), &[("f", "exp(x)")]),
        unit(PropAlpha2, Some(2), &[("f", "exp(4*x)"), ("g", "1 + x")]).with_alpha(1.0),
        unit(PropFgh, Some(2), &[("f", "exp(2*x)"), ("g", "1"), ("h", "1")]).with_l(1),
        unit(CorFgh1, Some(2), &[("f", "exp(2*x)"), ("g", "1")]),
        unit(CorFgh2, Some(2), &[("f", "exp(x)")]),
        unit(PropXMinusA, Some(2), &[("f", "x"), ("g", "1"), ("h", "1")]).with_k(1),
    ]
}

