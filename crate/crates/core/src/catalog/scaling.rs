//! Corollaries obtained from a base case by rescaling `f` or freezing `g`.
//!
//! The derived instance is an instance of the base case. Multiplying both
//! sides of its inequality by `side_factor` gives back the corollary.

use serde::{Deserialize, Serialize};

use super::{CaseId, CaseInstance, Ctx, EvalConfig, VerificationResult};
use crate::error::{Error, Result};
use crate::expr::Expr;
use crate::hypotheses::ExtremumKind;
use crate::util::factorial;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ScalingRoute {
    /// `cor_fg1` as `prop1_general` applied to `c f` with unit weights.
    Fg1ViaProp1,
    /// `cor_g_over_f` as `prop2_g_over_f` applied to `c f` with `h = 1`.
    GOverFViaProp2,
    /// `cor_alpha1` as `prop_alpha1` with constant `g` and `alpha = 2n`.
    Alpha1ViaPropAlpha1,
}

impl ScalingRoute {
    pub fn source(self) -> CaseId {
        match self {
            ScalingRoute::Fg1ViaProp1 => CaseId::CorFg1,
            ScalingRoute::GOverFViaProp2 => CaseId::CorGOverF,
            ScalingRoute::Alpha1ViaPropAlpha1 => CaseId::CorAlpha1,
        }
    }

    pub fn base(self) -> CaseId {
        match self {
            ScalingRoute::Fg1ViaProp1 => CaseId::Prop1General,
            ScalingRoute::GOverFViaProp2 => CaseId::Prop2GOverF,
            ScalingRoute::Alpha1ViaPropAlpha1 => CaseId::PropAlpha1,
        }
    }

    /// The route whose source is `case`, if any.
    pub fn for_case(case: CaseId) -> Option<Self> {
        [ScalingRoute::Fg1ViaProp1, ScalingRoute::GOverFViaProp2, ScalingRoute::Alpha1ViaPropAlpha1]
            .into_iter()
            .find(|r| r.source() == case)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScaledCase {
    pub route: ScalingRoute,
    pub instance: CaseInstance,
    /// The scaling constant: `c` for the `c f` routes, the constant value of
    /// `g` for the `alpha1` route.
    pub c: f64,
    /// Factor turning the base-case sides into the corollary's sides.
    pub side_factor: f64,
}

impl ScaledCase {
    /// `(lhs, rhs)` of the base evaluation, rescaled to the corollary.
    pub fn rescaled_sides(&self, base: &VerificationResult) -> Option<(f64, f64)> {
        Some((base.lhs? * self.side_factor, base.rhs? * self.side_factor))
    }
}

/// Builds the base-case instance reproducing `inst` (a corollary instance).
pub fn derive_scaled_case(route: ScalingRoute, inst: &CaseInstance, cfg: &EvalConfig) -> Result<ScaledCase> {
    if inst.case_id != route.source() {
        return Err(Error::InvalidParams(format!("route {route:?} applies to {}, got {}", route.source(), inst.case_id)));
    }
    inst.validate()?;
    let ctx = Ctx { inst, cfg };
    let n = inst.n()?;
    let nf = n as f64;
    let f = inst.slot("f")?;
    let mut out = CaseInstance::new(route.base(), inst.interval);
    out.side = inst.side;

    let (c, side_factor) = match route {
        ScalingRoute::Fg1ViaProp1 => {
            let alpha = inst.alpha()?;
            let denom = nf * (1.0 - alpha) + 1.0;
            if denom.abs() < 1e-12 {
                return Err(Error::DegenerateScaling(format!("n(1-alpha)+1 = 0 at n = {n}, alpha = {alpha}")));
            }
            let a = ctx.extremum(&(f.derivative(n - 1) * f.powf(nf * (1.0 - alpha))), ExtremumKind::Inf)?;
            if a <= 0.0 {
                return Err(Error::DegenerateScaling(format!("A = {a} is not positive")));
            }
            let c = ((nf + 1.0 - alpha) * a / factorial(n)).powf(-1.0 / denom);
            out = out.with_n(n).with_alpha(alpha).with_partition([1]).with_fn("f", f.scale(c)).with_fn("g", inst.slot("g")?.clone());
            for i in 1..=n {
                out = out.with_fn(&format!("h_{i}"), Expr::one());
            }
            (c, c.powf(-(nf + 1.0)))
        }
        ScalingRoute::GOverFViaProp2 => {
            let (fa, slope) = (ctx.at_a(f)?.value, ctx.at_a(&f.derivative(1))?.value);
            let base = factorial(n) / ((nf + 1.0).powi(n as i32 - 1) * fa.powi(n as i32 + 1) * slope.powi(n as i32));
            if !(base.is_finite() && base > 0.0) {
                return Err(Error::DegenerateScaling(format!("f(a)^(n+1) f'(a)^n = {}", fa.powi(n as i32 + 1) * slope.powi(n as i32))));
            }
            let c = base.powf(1.0 / (2.0 * nf + 1.0));
            out = out.with_n(n).with_fn("f", f.scale(c)).with_fn("g", inst.slot("g")?.clone()).with_fn("h", Expr::one());
            (c, 1.0 / (c.powi(n as i32) * fa.powi(n as i32 + 1)))
        }
        ScalingRoute::Alpha1ViaPropAlpha1 => {
            let a = ctx.extremum(&(f / f.derivative(n - 1)), ExtremumKind::Sup)?;
            if !(a > 0.0 && a.is_finite()) {
                return Err(Error::DegenerateScaling(format!("A = {a} is not positive")));
            }
            let gamma = (factorial(n) * a / (nf - 1.0)).powf(1.0 / nf);
            out = out.with_n(n).with_alpha(2.0 * nf).with_fn("f", f.clone()).with_fn("g", Expr::constant(gamma));
            (gamma, gamma.powi(-2 * n as i32))
        }
    };
    Ok(ScaledCase { route, instance: out, c, side_factor })
}
