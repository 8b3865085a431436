mod support;

use proptest::prelude::*;
use qicert_core::{integrate, integrate_expr, Expr, Interval, QuadOptions};
use support::quadrature_corpus;

fn quad(src: &str, a: f64, b: f64) -> qicert_core::QuadratureResult {
    let e = Expr::parse(src).unwrap();
    integrate_expr(&e, Interval::new(a, b).unwrap(), &QuadOptions::default()).unwrap()
}

#[test]
fn corpus_errors_are_bounded_by_the_estimates() {
    let corpus = quadrature_corpus();
    assert_eq!(corpus.len(), 20);
    for c in corpus {
        let r = quad(c.src, c.a, c.b);
        let err = (r.value - c.exact).abs();
        assert!(r.converged, "{}", c.src);
        assert!(err <= r.abs_error_estimate, "{}: error {err:e} > estimate {:e}", c.src, r.abs_error_estimate);
        assert!(err <= 1e-10, "{}: error {err:e}", c.src);
    }
}

proptest! {
    #[test]
    fn integration_is_linear(c1 in -3.0f64..3.0, c2 in -3.0f64..3.0, b in 0.2f64..3.0) {
        let f = "exp(x)";
        let g = "1/(1 + x*x)";
        let combo = format!("{c1} * {f} + {c2} * {g}").replace("* -", "* (-1) * ");
        let lhs = quad(&combo, 0.0, b);
        let (rf, rg) = (quad(f, 0.0, b), quad(g, 0.0, b));
        let expected = c1 * rf.value + c2 * rg.value;
        let slack = lhs.abs_error_estimate + c1.abs() * rf.abs_error_estimate + c2.abs() * rg.abs_error_estimate;
        prop_assert!((lhs.value - expected).abs() <= slack + 1e-12 * (1.0 + expected.abs()));
    }

    #[test]
    fn integration_is_additive(m in 0.05f64..0.95, src in prop::sample::select(vec!["abs(x - 0.5)", "exp(-x)*pow(1 + x, 2)", "max(x, 1 - x)", "log(1 + x)"])) {
        let whole = quad(src, 0.0, 1.0);
        let (left, right) = (quad(src, 0.0, m), quad(src, m, 1.0));
        let slack = whole.abs_error_estimate + left.abs_error_estimate + right.abs_error_estimate;
        prop_assert!((whole.value - left.value - right.value).abs() <= slack + 1e-14);
    }

    #[test]
    fn kinked_errors_are_bounded_by_the_estimates(c in 0.0f64..1.0, k in 0.1f64..3.0, b in 0.05f64..2.0) {
        let r = quad(&format!("{k} * abs(x - {c}) + max(x, {c})"), 0.0, b);
        let (lo, hi) = (c.min(b), b - c.min(b));
        let exact = k * if c < b { (c * c + hi * hi) / 2.0 } else { (c * c - (c - b) * (c - b)) / 2.0 } + c * lo + (b * b - lo * lo) / 2.0;
        prop_assert!(r.converged);
        prop_assert!((r.value - exact).abs() <= r.abs_error_estimate, "{} vs {exact}, estimate {:e}", r.value, r.abs_error_estimate);
    }
}

/// The plain integrator is blind to a kink between a panel end and the
/// panel's outermost node; the expression integrator is not.
#[test]
fn kinks_hidden_from_the_nodes_are_split_off() {
    let (b, c) = (1.8154689459619486, 0.9082961035345418);
    let e = Expr::parse(&format!("abs(x - {c})")).unwrap();
    let exact = (c * c + (b - c) * (b - c)) / 2.0;
    let unit = Interval::new(0.0, b).unwrap();
    let blind = integrate(|x| e.eval(x), unit, &QuadOptions::default()).unwrap();
    assert!((blind.value - exact).abs() > 1e3 * blind.abs_error_estimate);
    let split = integrate_expr(&e, unit, &QuadOptions::default()).unwrap();
    assert!((split.value - exact).abs() <= split.abs_error_estimate);
    assert!((split.value - exact).abs() <= 1e-14);
}
