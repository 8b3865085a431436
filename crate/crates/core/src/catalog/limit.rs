//! Finite-n steps behind the `g/f` limit statement.

use serde::{Deserialize, Serialize};

use super::{Approx, CaseId, CaseInstance, Ctx, EvalConfig};
use crate::error::{Error, Result};
use crate::expr::Expr;
use crate::util::factorial;

/// One row of a limit scan.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LimitRow {
    pub n: u32,
    /// `(int f^n g^(n+1))^(1/(n+1))`.
    pub s_n: f64,
    /// `(n!/(n+1)^(n-1))^(1/(n+1))`.
    pub c_n: f64,
    pub lower_lhs: f64,
    pub lower_rhs: f64,
    pub lower_holds: bool,
    pub upper_lhs: f64,
    pub upper_rhs: f64,
    pub upper_holds: bool,
}

pub(crate) struct LimitTerms {
    pub s: Approx,
    pub upper: Approx,
    pub ratio_integral: Approx,
    pub lower: Approx,
    pub c_n: f64,
}

/// `c_n`, through logarithms so large `n` does not overflow.
pub fn limit_constant(n: u32) -> f64 {
    let log_fact: f64 = (2..=n).map(|k| (k as f64).ln()).sum();
    let nf = n as f64;
    ((log_fact - (nf - 1.0) * (nf + 1.0).ln()) / (nf + 1.0)).exp()
}

pub(crate) fn row(ctx: &Ctx, f: &Expr, g: &Expr, n: u32) -> Result<LimitTerms> {
    let nf = n as f64;
    let root = 1.0 / (nf + 1.0);
    let s = ctx.integral(&(f.powi(n as i64) * g.powi(n as i64 + 1)))?.powf(root);
    let upper = ctx.width().powf(root) * ctx.at_b(f)?.powf(nf * root) * ctx.at_b(g)?;
    let c_n = if n <= 20 {
        (factorial(n) / (nf + 1.0).powi(n as i32 - 1)).powf(root)
    } else {
        limit_constant(n)
    };
    let slope = ctx.at_a(&f.derivative(1))?;
    let lower = (s * c_n).div(ctx.at_a(f)? * slope.powf(nf * root));
    let ratio_integral = ctx.integral(&(g / f))?;
    Ok(LimitTerms { s, upper, ratio_integral, lower, c_n })
}

/// Evaluates both finite-n links for `n = 1..=n_max`, using the functions of
/// a `cor_limit_scan` (or `cor_g_over_f`) instance. Hypotheses are not checked.
pub fn limit_scan(inst: &CaseInstance, n_max: u32, cfg: &EvalConfig) -> Result<Vec<LimitRow>> {
    if !matches!(inst.case_id, CaseId::CorLimitScan | CaseId::CorGOverF) {
        return Err(Error::InvalidParams(format!("limit scan needs a g/f instance, got {}", inst.case_id)));
    }
    if n_max == 0 {
        return Err(Error::InvalidParams("nmax must be at least 1".into()));
    }
    let ctx = Ctx { inst, cfg };
    let (f, g) = (inst.slot("f")?, inst.slot("g")?);
    (1..=n_max)
        .map(|n| {
            let t = row(&ctx, f, g, n)?;
            let holds = |lhs: Approx, rhs: Approx| rhs.value - lhs.value >= -(lhs.err + rhs.err + cfg.tau_v);
            Ok(LimitRow {
                n,
                s_n: t.s.value,
                c_n: t.c_n,
                lower_lhs: t.ratio_integral.value,
                lower_rhs: t.lower.value,
                lower_holds: holds(t.ratio_integral, t.lower),
                upper_lhs: t.s.value,
                upper_rhs: t.upper.value,
                upper_holds: holds(t.s, t.upper),
            })
        })
        .collect()
}
