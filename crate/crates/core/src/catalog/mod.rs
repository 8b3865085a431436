//! The inequality catalog: hypotheses, constants and both sides of every case.

mod approx;
mod cases;
mod instance;
mod limit;
mod scaling;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::expr::Expr;
use crate::hypotheses::{extremum_of, value_at, CheckConfig, ConditionReport, ExtremumKind};
use crate::interval::Interval;
use crate::quadrature::{integrate_expr, QuadOptions};
pub(crate) use approx::Approx;
pub use instance::{CaseId, CaseInstance, Params, MAX_N};
pub use limit::{limit_constant, limit_scan, LimitRow};
pub use scaling::{derive_scaled_case, ScaledCase, ScalingRoute};

/// Tolerances shared by every evaluation.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EvalConfig {
    pub quad: QuadOptions,
    pub check: CheckConfig,
    /// Verdict tolerance added to the propagated error bounds.
    pub tau_v: f64,
}

impl Default for EvalConfig {
    fn default() -> Self {
        EvalConfig { quad: QuadOptions::default(), check: CheckConfig::default(), tau_v: 1e-9 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    /// The margin exceeds the combined error bound.
    Certified,
    /// Both sides agree within the combined error bound.
    Tight,
    /// Some integral did not reach its tolerance.
    Indeterminate,
    /// The left side exceeds the right by more than the error bound although
    /// every hypothesis passed.
    Violated,
    HypothesesFailed,
}

impl Verdict {
    fn severity(self) -> u8 {
        match self {
            Verdict::Certified => 0,
            Verdict::Tight => 1,
            Verdict::Indeterminate => 2,
            Verdict::Violated => 3,
            Verdict::HypothesesFailed => 4,
        }
    }
}

/// Constants referenced by a case statement; unused ones stay empty.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct Constants {
    #[serde(rename = "M", default, skip_serializing_if = "Option::is_none")]
    pub big_m: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<Vec<f64>>,
    #[serde(rename = "A", default, skip_serializing_if = "Option::is_none")]
    pub a: Option<f64>,
    #[serde(rename = "C", default, skip_serializing_if = "Option::is_none")]
    pub c: Option<f64>,
    #[serde(rename = "K", default, skip_serializing_if = "Option::is_none")]
    pub k: Option<f64>,
    #[serde(rename = "L", default, skip_serializing_if = "Option::is_none")]
    pub l: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub beta: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub g_supnorm: Option<f64>,
}

/// One inequality `lhs <= rhs`; chained statements have several.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LinkResult {
    pub label: String,
    pub lhs: f64,
    pub rhs: f64,
    pub lhs_error: f64,
    pub rhs_error: f64,
    pub margin: f64,
    pub verdict: Verdict,
}

impl LinkResult {
    fn new(label: impl Into<String>, lhs: Approx, rhs: Approx, tau_v: f64) -> Self {
        let margin = rhs.value - lhs.value;
        let slack = lhs.err + rhs.err + tau_v;
        let verdict = if !(lhs.converged && rhs.converged) || !margin.is_finite() || !slack.is_finite() {
            Verdict::Indeterminate
        } else if margin > slack {
            Verdict::Certified
        } else if margin >= -slack {
            Verdict::Tight
        } else {
            Verdict::Violated
        };
        LinkResult {
            label: label.into(),
            lhs: lhs.value,
            rhs: rhs.value,
            lhs_error: lhs.err,
            rhs_error: rhs.err,
            margin,
            verdict,
        }
    }
}

/// Outcome of evaluating one instance.
///
/// For chained statements the top-level numbers repeat those of the link
/// with the worst verdict (ties go to the smallest margin).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationResult {
    pub case_id: CaseId,
    pub verdict: Verdict,
    pub lhs: Option<f64>,
    pub rhs: Option<f64>,
    pub lhs_error: Option<f64>,
    pub rhs_error: Option<f64>,
    pub margin: Option<f64>,
    pub constants: Constants,
    pub hypothesis_reports: Vec<ConditionReport>,
    pub links: Vec<LinkResult>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl VerificationResult {
    pub fn hypotheses_passed(&self) -> bool {
        self.verdict != Verdict::HypothesesFailed
    }

    /// `lhs_error + rhs_error` of the reported link.
    pub fn combined_error(&self) -> Option<f64> {
        Some(self.lhs_error? + self.rhs_error?)
    }

    fn worst_link(links: &[LinkResult]) -> Option<&LinkResult> {
        // ties go to the earlier link
        links
            .iter()
            .enumerate()
            .max_by(|(i, a), (j, b)| {
                a.verdict
                    .severity()
                    .cmp(&b.verdict.severity())
                    .then_with(|| b.margin.total_cmp(&a.margin))
                    .then_with(|| j.cmp(i))
            })
            .map(|(_, l)| l)
    }
}

/// Per-instance evaluation context.
pub(crate) struct Ctx<'a> {
    pub inst: &'a CaseInstance,
    pub cfg: &'a EvalConfig,
}

impl Ctx<'_> {
    pub fn interval(&self) -> &Interval {
        &self.inst.interval
    }

    pub fn width(&self) -> Approx {
        Approx::computed(self.interval().width())
    }

    pub fn integral(&self, e: &Expr) -> Result<Approx> {
        let r = integrate_expr(e, *self.interval(), &self.cfg.quad)?;
        Ok(Approx::new(r.value, r.abs_error_estimate, r.converged))
    }

    fn point(&self, e: &Expr, x: f64) -> Result<Approx> {
        Ok(Approx::computed(value_at(e, self.interval(), x, self.inst.side)?))
    }

    pub fn at_a(&self, e: &Expr) -> Result<Approx> {
        self.point(e, self.interval().a())
    }

    pub fn at_b(&self, e: &Expr) -> Result<Approx> {
        self.point(e, self.interval().b())
    }

    pub fn extremum(&self, e: &Expr, kind: ExtremumKind) -> Result<f64> {
        let interval = self.interval();
        let f = |x| value_at(e, interval, x, self.inst.side);
        Ok(extremum_of(f, interval, kind, &self.cfg.check)?.0)
    }
}

/// Runs every hypothesis check of the instance's case, in a fixed order.
pub fn check_hypotheses(inst: &CaseInstance, cfg: &EvalConfig) -> Result<Vec<ConditionReport>> {
    inst.validate()?;
    cases::hypotheses(&Ctx { inst, cfg })
}

/// Constants the case statement refers to.
pub fn compute_constants(inst: &CaseInstance, cfg: &EvalConfig) -> Result<Constants> {
    inst.validate()?;
    cases::constants(&Ctx { inst, cfg })
}

/// Checks the hypotheses and, if they all pass, evaluates both sides.
pub fn evaluate_case(inst: &CaseInstance, cfg: &EvalConfig) -> Result<VerificationResult> {
    inst.validate()?;
    let ctx = Ctx { inst, cfg };
    let reports = cases::hypotheses(&ctx)?;
    if reports.iter().any(|r| !r.passed) {
        return Ok(VerificationResult {
            case_id: inst.case_id,
            verdict: Verdict::HypothesesFailed,
            lhs: None,
            rhs: None,
            lhs_error: None,
            rhs_error: None,
            margin: None,
            constants: Constants::default(),
            hypothesis_reports: reports,
            links: Vec::new(),
            notes: Vec::new(),
        });
    }
    let constants = cases::constants(&ctx)?;
    let links: Vec<LinkResult> = cases::links(&ctx, &constants)?
        .into_iter()
        .map(|(label, lhs, rhs)| LinkResult::new(label, lhs, rhs, cfg.tau_v))
        .collect();
    let worst = VerificationResult::worst_link(&links).expect("every case has a link").clone();
    Ok(VerificationResult {
        case_id: inst.case_id,
        verdict: worst.verdict,
        lhs: Some(worst.lhs),
        rhs: Some(worst.rhs),
        lhs_error: Some(worst.lhs_error),
        rhs_error: Some(worst.rhs_error),
        margin: Some(worst.margin),
        constants,
        hypothesis_reports: reports,
        links,
        notes: cases::notes(inst.case_id),
    })
}
