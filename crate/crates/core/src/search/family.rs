//! Parametric function families for random instances.

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::expr::Expr;

/// A closed range `[lo, hi]` of reals.
pub type Range = [f64; 2];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Join {
    Max,
    Min,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "kebab-case")]
pub enum FamilySpec {
    /// `sum c_i x^i` with `c_i` drawn from `coef` and degree from
    /// `min_degree..=max_degree`.
    PolyNonneg {
        #[serde(default)]
        min_degree: u32,
        max_degree: u32,
        coef: Range,
    },
    /// `c exp(lambda x) + d`.
    ExpAffine { c: Range, lambda: Range, d: Range },
    /// `(x + s)^p`.
    PowerShift { s: Range, p: Range },
    /// Max or min of affine pieces `c_j + k_j x`, which is monotone when the
    /// slopes share a sign.
    PiecewiseMonotone {
        pieces: u32,
        intercept: Range,
        slope: Range,
        join: Join,
    },
}

fn draw(rng: &mut impl Rng, [lo, hi]: Range) -> f64 {
    if lo == hi {
        lo
    } else {
        rng.gen_range(lo..=hi)
    }
}

fn check_range(name: &str, [lo, hi]: Range) -> Result<()> {
    if lo.is_finite() && hi.is_finite() && lo <= hi {
        Ok(())
    } else {
        Err(Error::InvalidParams(format!("family range `{name}` must satisfy lo <= hi, got [{lo}, {hi}]")))
    }
}

impl FamilySpec {
    pub fn validate(&self) -> Result<()> {
        match self {
            FamilySpec::PolyNonneg { min_degree, max_degree, coef } => {
                check_range("coef", *coef)?;
                if coef[0] < 0.0 {
                    return Err(Error::InvalidParams("poly-nonneg coefficients must be nonnegative".into()));
                }
                if min_degree > max_degree || *max_degree > 12 {
                    return Err(Error::InvalidParams(format!(
                        "poly-nonneg degrees must satisfy min <= max <= 12, got {min_degree}..={max_degree}"
                    )));
                }
                Ok(())
            }
            FamilySpec::ExpAffine { c, lambda, d } => {
                check_range("c", *c)?;
                check_range("lambda", *lambda)?;
                check_range("d", *d)
            }
            FamilySpec::PowerShift { s, p } => {
                check_range("s", *s)?;
                check_range("p", *p)
            }
            FamilySpec::PiecewiseMonotone { pieces, intercept, slope, .. } => {
                check_range("intercept", *intercept)?;
                check_range("slope", *slope)?;
                if *pieces == 0 || *pieces > 8 {
                    return Err(Error::InvalidParams(format!("piecewise-monotone needs 1..=8 pieces, got {pieces}")));
                }
                Ok(())
            }
        }
    }

    /// Draws one member of the family.
    pub fn sample(&self, rng: &mut impl Rng) -> Expr {
        let x = Expr::x;
        let c = Expr::constant;
        match self {
            FamilySpec::PolyNonneg { min_degree, max_degree, coef } => {
                let degree = rng.gen_range(*min_degree..=*max_degree);
                let mut terms = (0..=degree).map(|i| {
                    let ci = draw(rng, *coef);
                    match i {
                        0 => c(ci),
                        1 => c(ci) * x(),
                        _ => c(ci) * x().powi(i as i64),
                    }
                });
                let first = terms.next().expect("degree 0 has a term");
                terms.fold(first, |acc, t| acc + t)
            }
            FamilySpec::ExpAffine { c: cr, lambda, d } => {
                let (cv, l, dv) = (draw(rng, *cr), draw(rng, *lambda), draw(rng, *d));
                c(cv) * (c(l) * x()).exp() + c(dv)
            }
            FamilySpec::PowerShift { s, p } => {
                let (sv, pv) = (draw(rng, *s), draw(rng, *p));
                (x() + c(sv)).powf(pv)
            }
            FamilySpec::PiecewiseMonotone { pieces, intercept, slope, join } => {
                let count = rng.gen_range(1..=*pieces);
                let mut parts = (0..count).map(|_| c(draw(rng, *intercept)) + c(draw(rng, *slope)) * x());
                let first = parts.next().expect("at least one piece");
                parts.fold(first, |acc, p| match join {
                    Join::Max => acc.max(&p),
                    Join::Min => acc.min(&p),
                })
            }
        }
    }
}
