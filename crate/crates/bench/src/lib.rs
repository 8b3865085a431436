//! Shared fixtures for the benchmarks.

use qicert_core::{CaseId, CaseInstance, Expr, Interval};

pub fn expr(src: &str) -> Expr {
    Expr::parse(src).expect("fixture expressions parse")
}

/// Expressions of increasing size for jet and quadrature timings.
pub fn expressions() -> Vec<(&'static str, Expr)> {
    [
        ("poly", "1 + 2*x + 3*x*x + pow(x, 4)"),
        ("exp_log", "exp(0.5*x) * log(1 + x) / (1 + x*x)"),
        ("kinked", "max(x, 1 - x) * abs(x - 0.3) + pow(2 + x, -1.5)"),
    ]
    .into_iter()
    .map(|(name, src)| (name, expr(src)))
    .collect()
}

/// Admissible instances spanning cheap and expensive cases.
pub fn instances() -> Vec<CaseInstance> {
    let unit = Interval::new(0.0, 1.0).expect("valid interval");
    vec![
        CaseInstance::new(CaseId::QiOriginal, unit).with_n(2).with_fn("f", expr("exp(x)")),
        CaseInstance::new(CaseId::Prop1General, unit)
            .with_n(2)
            .with_alpha(1.0)
            .with_partition([1])
            .with_fn("f", expr("x + 1"))
            .with_fn("g", expr("pow(1 + x, 2)"))
            .with_fn("h_1", expr("1/(1 + x)"))
            .with_fn("h_2", expr("1")),
        CaseInstance::new(CaseId::PropAlpha1, unit).with_n(2).with_alpha(3.0).with_fn("f", expr("exp(2*x)")).with_fn("g", expr("1")),
    ]
}
