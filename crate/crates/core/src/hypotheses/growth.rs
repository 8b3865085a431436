//! Growth conditions: pointwise lower bounds `lhs(x) >= rhs(x)` tying a
//! derivative of `f` to the other functions of an instance.

use super::{minimize, side_at, value_at, CheckConfig, ConditionReport};
use crate::catalog::{CaseId, CaseInstance};
use crate::error::Result;
use crate::expr::{Expr, Side};
use crate::util::factorial;

#[derive(Debug, Clone, PartialEq)]
pub struct GrowthCondition {
    pub lhs: Expr,
    pub rhs: Expr,
    /// Whether the condition is only imposed at the left endpoint.
    pub at_a_only: bool,
}

/// The growth condition of the instance's case, if it has one.
pub fn growth_condition(inst: &CaseInstance) -> Result<Option<GrowthCondition>> {
    use CaseId::*;
    let c = Expr::constant;
    let over_n_minus_1 = |n: u32| factorial(n) / (n - 1) as f64;
    let cond = match inst.case_id {
        QiOriginal => {
            let n = inst.n()?;
            GrowthCondition { lhs: inst.slot("f")?.derivative(n), rhs: c(factorial(n)), at_a_only: false }
        }
        Prop1General | CorFghp => {
            let (n, alpha) = (inst.n()?, inst.alpha()?);
            let f = inst.slot("f")?;
            let lhs = c(n as f64 + 1.0 - alpha) * f.derivative(n - 1) * f.powf(n as f64 * (1.0 - alpha));
            let weights = if inst.case_id == Prop1General {
                let hs = inst.weights()?;
                Expr::product(hs.iter().zip(1..).map(|(h, i)| (h, i)))
            } else {
                inst.slot("h")? * inst.slot("p")?.powi(inst.nu()? as i64)
            };
            GrowthCondition { lhs, rhs: c(factorial(n)) * weights, at_a_only: false }
        }
        Prop2GOverF => {
            let n = inst.n()?;
            let f = inst.slot("f")?;
            let lhs = f.powi(n as i64 + 1) * f.derivative(1).powi(n as i64) * inst.slot("h")?;
            let rhs = c(factorial(n) / (n as f64 + 1.0).powi(n as i32 - 1));
            GrowthCondition { lhs, rhs, at_a_only: true }
        }
        PropAlpha1 => {
            let (n, alpha) = (inst.n()?, inst.alpha()?);
            let f = inst.slot("f")?;
            let lhs = inst.slot("g")?.powf(alpha - n as f64) * f.derivative(n - 1);
            GrowthCondition { lhs, rhs: c(over_n_minus_1(n)) * f, at_a_only: false }
        }
        PropAlpha2 => {
            let (n, alpha) = (inst.n()?, inst.alpha()?);
            let f = inst.slot("f")?;
            // g is required to be increasing, so its sup norm is g(b)
            let sup_g = value_at(inst.slot("g")?, &inst.interval, inst.interval.b(), inst.side)?;
            let rhs = c(over_n_minus_1(n) * sup_g.powf(n as f64 - alpha)) * f;
            GrowthCondition { lhs: f.derivative(n - 1), rhs, at_a_only: false }
        }
        PropFgh => {
            let (n, l) = (inst.n()?, inst.l()?);
            let f = inst.slot("f")?;
            let rhs = c(over_n_minus_1(n))
                * f
                * inst.slot("g")?.powi((n - l) as i64)
                * inst.slot("h")?.powi(n as i64);
            GrowthCondition { lhs: f.derivative(n - 1), rhs, at_a_only: false }
        }
        CorFgh1 => {
            let n = inst.n()?;
            let f = inst.slot("f")?;
            let lhs = f.derivative(n - 1) * inst.slot("g")?;
            GrowthCondition { lhs, rhs: c(over_n_minus_1(n)) * f, at_a_only: false }
        }
        PropXMinusA => {
            let (n, k) = (inst.n()?, inst.k()?);
            let coef = factorial(n - 1) / factorial(n - k - 1);
            let shifted = Expr::x() - c(inst.interval.a());
            let rhs = c(coef) * shifted.powi((n - k - 1) as i64) * inst.slot("h")?;
            GrowthCondition { lhs: inst.slot("f")?.derivative(k), rhs, at_a_only: false }
        }
        _ => return Ok(None),
    };
    Ok(Some(cond))
}

/// Checks the growth condition of the instance; `None` when the case has none.
pub fn check_growth(inst: &CaseInstance, cfg: &CheckConfig) -> Result<Option<ConditionReport>> {
    let Some(cond) = growth_condition(inst)? else {
        return Ok(None);
    };
    let interval = &inst.interval;
    if cond.at_a_only {
        let a = interval.a();
        let margin = cond.lhs.jet(a, 0, Side::Right)?.value() - cond.rhs.jet(a, 0, Side::Right)?.value();
        return Ok(Some(ConditionReport::at_point("growth at a", margin, a, false, cfg)));
    }
    let margin = |x: f64| -> Result<f64> {
        let side = side_at(interval, x, inst.side);
        Ok(cond.lhs.jet(x, 0, side)?.value() - cond.rhs.jet(x, 0, side)?.value())
    };
    let grid = interval.chebyshev_grid(cfg.grid);
    let (worst, at) = minimize(margin, &grid)?;
    Ok(Some(ConditionReport {
        id: "growth".to_owned(),
        passed: worst >= -cfg.tau_h,
        worst_margin: worst,
        worst_point: at,
        grid_size: grid.len(),
    }))
}
