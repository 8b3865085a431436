//! Numerical checks of pointwise hypotheses on an interval.
//!
//! Every check samples a Chebyshev-Lobatto grid (endpoints included), then
//! refines around the worst grid point with a golden-section search. One-sided
//! jets follow the requested convention: with [`Side::Right`] interior points
//! and `a` use right derivatives and `b` uses the left one; [`Side::Left`] is
//! the mirror image.

mod growth;
mod partition;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::expr::{Expr, Side};
use crate::interval::Interval;

pub use growth::{check_growth, growth_condition, GrowthCondition};
pub use partition::{check_partition_conditions, check_partition_shortcut, PartitionSpec};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CheckConfig {
    /// Hypothesis tolerance: a condition passes when its worst margin is at least `-tau_h`.
    pub tau_h: f64,
    /// Number of grid points, endpoints included.
    pub grid: usize,
}

impl Default for CheckConfig {
    fn default() -> Self {
        CheckConfig { tau_h: 1e-9, grid: 1025 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SignRequirement {
    Nonneg,
    Nonpos,
    StrictPos,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Direction {
    Increasing,
    Decreasing,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ExtremumKind {
    Inf,
    Sup,
}

impl fmt::Display for SignRequirement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SignRequirement::Nonneg => ">= 0",
            SignRequirement::Nonpos => "<= 0",
            SignRequirement::StrictPos => "> 0",
        })
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Direction::Increasing => "increasing",
            Direction::Decreasing => "decreasing",
        })
    }
}

/// Outcome of one hypothesis check.
///
/// `worst_margin` is the smallest value of the quantity required to be
/// nonnegative (or positive, for strict conditions) and `worst_point` is where
/// it occurs.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConditionReport {
    pub id: String,
    pub passed: bool,
    pub worst_margin: f64,
    pub worst_point: f64,
    pub grid_size: usize,
}

impl ConditionReport {
    pub fn with_id(mut self, id: impl Into<String>) -> Self {
        self.id = id.into();
        self
    }

    /// Report for a condition that only involves the point `x`.
    pub fn at_point(id: impl Into<String>, margin: f64, x: f64, strict: bool, cfg: &CheckConfig) -> Self {
        let passed = if strict { margin > 0.0 } else { margin >= -cfg.tau_h };
        ConditionReport { id: id.into(), passed, worst_margin: margin, worst_point: x, grid_size: 1 }
    }

    /// Conjunction of several reports: passes iff all do, and carries the
    /// smallest margin.
    pub fn all(id: impl Into<String>, reports: &[ConditionReport]) -> Self {
        let worst = reports
            .iter()
            .min_by(|a, b| a.worst_margin.total_cmp(&b.worst_margin))
            .expect("at least one report");
        ConditionReport {
            id: id.into(),
            passed: reports.iter().all(|r| r.passed),
            worst_margin: worst.worst_margin,
            worst_point: worst.worst_point,
            grid_size: worst.grid_size,
        }
    }
}

/// The side whose jet is used at `x` under the given convention.
pub(crate) fn side_at(interval: &Interval, x: f64, side: Side) -> Side {
    match side {
        Side::Right if x >= interval.b() && !interval.is_degenerate() => Side::Left,
        Side::Left if x <= interval.a() && !interval.is_degenerate() => Side::Right,
        s => s,
    }
}

/// Value of `expr` at `x`, with any derivative nodes taken from the side
/// appropriate for `x` under `side`.
pub(crate) fn value_at(expr: &Expr, interval: &Interval, x: f64, side: Side) -> Result<f64> {
    Ok(expr.jet(x, 0, side_at(interval, x, side))?.value())
}

/// Smallest value of `f` on the grid, refined by golden-section search
/// between the neighbours of the best grid point. Returns `(value, point)`.
pub(crate) fn minimize<F>(f: F, grid: &[f64]) -> Result<(f64, f64)>
where
    F: Fn(f64) -> Result<f64>,
{
    let values = grid.iter().map(|&x| f(x)).collect::<Result<Vec<_>>>()?;
    let (i, &v) = values
        .iter()
        .enumerate()
        .min_by(|a, b| a.1.total_cmp(b.1))
        .expect("grid is never empty");
    let mut best = (v, grid[i]);
    let lo = grid[i.saturating_sub(1)];
    let hi = grid[(i + 1).min(grid.len() - 1)];
    if lo < hi {
        let refined = golden_section(&f, lo, hi)?;
        if refined.0 < best.0 {
            best = refined;
        }
    }
    Ok(best)
}

fn golden_section<F>(f: &F, mut lo: f64, mut hi: f64) -> Result<(f64, f64)>
where
    F: Fn(f64) -> Result<f64>,
{
    const INV_PHI: f64 = 0.618_033_988_749_894_8;
    let mut x1 = hi - INV_PHI * (hi - lo);
    let mut x2 = lo + INV_PHI * (hi - lo);
    let (mut f1, mut f2) = (f(x1)?, f(x2)?);
    for _ in 0..100 {
        if hi - lo <= 1e-14 * (1.0 + lo.abs().max(hi.abs())) {
            break;
        }
        if f1 <= f2 {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - INV_PHI * (hi - lo);
            f1 = f(x1)?;
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + INV_PHI * (hi - lo);
            f2 = f(x2)?;
        }
    }
    Ok(if f1 <= f2 { (f1, x1) } else { (f2, x2) })
}

/// Checks the sign of the `order`-th derivative of `expr` on `interval`.
pub fn check_sign(
    expr: &Expr,
    order: usize,
    interval: &Interval,
    sign: SignRequirement,
    side: Side,
    cfg: &CheckConfig,
) -> Result<ConditionReport> {
    let margin = |x: f64| -> Result<f64> {
        let d = expr.derivative_at(x, order, side_at(interval, x, side))?;
        Ok(match sign {
            SignRequirement::Nonpos => -d,
            _ => d,
        })
    };
    let grid = interval.chebyshev_grid(cfg.grid);
    let (worst, at) = minimize(margin, &grid)?;
    let passed = match sign {
        SignRequirement::StrictPos => worst > 0.0,
        _ => worst >= -cfg.tau_h,
    };
    Ok(ConditionReport {
        id: format!("derivative {order} {sign}"),
        passed,
        worst_margin: worst,
        worst_point: at,
        grid_size: grid.len(),
    })
}

/// Checks (non-strict) monotonicity through the sign of the one-sided first
/// derivative, cross-checked by consecutive grid values.
pub fn check_monotone(
    expr: &Expr,
    interval: &Interval,
    direction: Direction,
    side: Side,
    cfg: &CheckConfig,
) -> Result<ConditionReport> {
    let sign = match direction {
        Direction::Increasing => SignRequirement::Nonneg,
        Direction::Decreasing => SignRequirement::Nonpos,
    };
    let deriv = check_sign(expr, 1, interval, sign, side, cfg)?;
    let grid = interval.chebyshev_grid(cfg.grid);
    let values = grid.iter().map(|&x| value_at(expr, interval, x, side)).collect::<Result<Vec<_>>>()?;
    let s = match direction {
        Direction::Increasing => 1.0,
        Direction::Decreasing => -1.0,
    };
    let (pair_margin, pair_point) = values
        .windows(2)
        .zip(&grid)
        .map(|(w, &x)| (s * (w[1] - w[0]), x))
        .min_by(|a, b| a.0.total_cmp(&b.0))
        .unwrap_or((0.0, interval.a()));
    let (worst, at) = if pair_margin < deriv.worst_margin {
        (pair_margin, pair_point)
    } else {
        (deriv.worst_margin, deriv.worst_point)
    };
    Ok(ConditionReport {
        id: direction.to_string(),
        passed: worst >= -cfg.tau_h,
        worst_margin: worst,
        worst_point: at,
        grid_size: grid.len(),
    })
}

/// Infimum or supremum of `expr` over the closed interval: `(value, argpoint)`.
pub fn extremum(expr: &Expr, interval: &Interval, kind: ExtremumKind, cfg: &CheckConfig) -> Result<(f64, f64)> {
    extremum_of(|x| expr.eval(x), interval, kind, cfg)
}

pub(crate) fn extremum_of<F>(f: F, interval: &Interval, kind: ExtremumKind, cfg: &CheckConfig) -> Result<(f64, f64)>
where
    F: Fn(f64) -> Result<f64>,
{
    let grid = interval.chebyshev_grid(cfg.grid);
    match kind {
        ExtremumKind::Inf => minimize(f, &grid),
        ExtremumKind::Sup => {
            let (v, x) = minimize(|x| Ok(-f(x)?), &grid)?;
            Ok((-v, x))
        }
    }
}
