//! Numerical certification of Qi-type integral inequalities.
//!
//! The crate evaluates both sides of a catalog of integral inequalities on
//! concrete functions and intervals, checks their hypotheses numerically and
//! reports a verdict with error bounds. A randomized search looks for
//! admissible instances that come close to (or break) an inequality.

pub mod catalog;
pub mod error;
pub mod expr;
pub mod hypotheses;
pub mod interval;
pub mod quadrature;
pub mod search;
pub mod util;

pub use catalog::{
    check_hypotheses, compute_constants, derive_scaled_case, evaluate_case, limit_scan, CaseId, CaseInstance,
    Constants, EvalConfig, LimitRow, LinkResult, Params, ScaledCase, ScalingRoute, VerificationResult, Verdict,
};
pub use error::{Error, Result};
pub use expr::{Expr, Jet, Node, Side};
pub use hypotheses::{CheckConfig, ConditionReport};
pub use interval::Interval;
pub use quadrature::{integrate, integrate_expr, QuadOptions, QuadratureResult};
