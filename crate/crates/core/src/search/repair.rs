//! One-step repair of growth conditions by rescaling a single slot.

use crate::catalog::{CaseId, CaseInstance};
use crate::error::Result;
use crate::hypotheses::{extremum_of, growth_condition, value_at, CheckConfig, ExtremumKind};

/// The slot to rescale and the degree `d` such that scaling it by `t`
/// multiplies `lhs / rhs` of the growth condition by `t^d`.
fn scaling_slot(inst: &CaseInstance) -> Result<Option<(&'static str, f64)>> {
    use CaseId::*;
    let n = inst.params.n.unwrap_or(0) as f64;
    Ok(Some(match inst.case_id {
        QiOriginal | PropXMinusA => ("f", 1.0),
        Prop1General | CorFghp => ("f", 1.0 + n * (1.0 - inst.alpha()?)),
        Prop2GOverF => ("f", 2.0 * n + 1.0),
        PropAlpha1 | PropAlpha2 => ("g", inst.alpha()? - n),
        PropFgh => ("h", -n),
        CorFgh1 => ("g", 1.0),
        _ => return Ok(None),
    }))
}

/// Rescales one slot so the growth condition holds with a small relative
/// slack, when the sampled functions miss it by a constant factor. Leaves the
/// instance alone when no finite factor can help.
pub(super) fn repair_growth(inst: &mut CaseInstance, cfg: &CheckConfig) -> Result<()> {
    let (Some(cond), Some((slot, degree))) = (growth_condition(inst)?, scaling_slot(inst)?) else {
        return Ok(());
    };
    if degree.abs() < 1e-6 {
        return Ok(());
    }
    let interval = inst.interval;
    let side = inst.side;
    let ratio = |x: f64| -> Result<f64> {
        let lhs = value_at(&cond.lhs, &interval, x, side)?;
        let rhs = value_at(&cond.rhs, &interval, x, side)?;
        Ok(if rhs <= 0.0 {
            0.0
        } else if lhs <= 0.0 {
            f64::INFINITY
        } else {
            rhs / lhs
        })
    };
    let worst = if cond.at_a_only {
        ratio(interval.a())?
    } else {
        extremum_of(ratio, &interval, ExtremumKind::Sup, cfg)?.0
    };
    if !worst.is_finite() || worst <= 1.0 {
        return Ok(());
    }
    let t = (worst * (1.0 + 1e-9)).powf(1.0 / degree);
    if t.is_finite() && t > 0.0 {
        let scaled = inst.slot(slot)?.scale(t);
        inst.functions.insert(slot.to_owned(), scaled);
    }
    Ok(())
}
