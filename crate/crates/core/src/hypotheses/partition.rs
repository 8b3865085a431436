use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::{check_monotone, check_sign, CheckConfig, ConditionReport, Direction, SignRequirement};
use crate::error::{Error, Result};
use crate::expr::{Expr, Side};
use crate::interval::Interval;

/// A split of `{1, ..., n}` into `I` and its complement `J`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionSpec {
    n: usize,
    i: BTreeSet<usize>,
}

impl PartitionSpec {
    pub fn new(n: usize, i: impl IntoIterator<Item = usize>) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidParams(format!("partition needs n >= 2, got {n}")));
        }
        let mut set = BTreeSet::new();
        for idx in i {
            if !(1..=n).contains(&idx) {
                return Err(Error::InvalidParams(format!("partition index {idx} outside 1..={n}")));
            }
            if !set.insert(idx) {
                return Err(Error::InvalidParams(format!("partition index {idx} listed twice")));
            }
        }
        Ok(PartitionSpec { n, i: set })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn i_set(&self) -> &BTreeSet<usize> {
        &self.i
    }

    pub fn j_set(&self) -> BTreeSet<usize> {
        (1..=self.n).filter(|j| !self.i.contains(j)).collect()
    }

    /// `{j in J : j >= k + 1}`
    pub fn j_upper(&self, k: usize) -> BTreeSet<usize> {
        self.j_set().into_iter().filter(|&j| j > k).collect()
    }

    /// `{j in J : j <= k + 1}`
    pub fn j_lower(&self, k: usize) -> BTreeSet<usize> {
        self.j_set().into_iter().filter(|&j| j <= k + 1).collect()
    }
}

fn check_arity(hs: &[Expr], partition: &PartitionSpec) -> Result<()> {
    if hs.len() != partition.n() {
        return Err(Error::ArityMismatch { expected: partition.n(), found: hs.len() });
    }
    Ok(())
}

/// `prod h_idx^exp(idx)` over the given indices (1-based).
fn weight_product(hs: &[Expr], idx: impl IntoIterator<Item = usize>, exp: impl Fn(usize) -> i64) -> Expr {
    let factors: Vec<(&Expr, i64)> = idx.into_iter().map(|i| (&hs[i - 1], exp(i))).collect();
    Expr::product(factors)
}

/// Conditions (i)-(iii) on the weights: one report for (i), then `n - 1`
/// reports for (ii) with `k = 1..n-1`, then `n - 1` for (iii) with
/// `k = 0..n-2`. All exponents involved are nonnegative.
pub fn check_partition_conditions(
    g: &Expr,
    hs: &[Expr],
    partition: &PartitionSpec,
    interval: &Interval,
    side: Side,
    cfg: &CheckConfig,
) -> Result<Vec<ConditionReport>> {
    check_arity(hs, partition)?;
    let n = partition.n();
    let i_set = partition.i_set();
    let mut reports = Vec::with_capacity(2 * n - 1);

    let first = g * weight_product(hs, i_set.iter().copied(), |_| 1);
    reports.push(check_monotone(&first, interval, Direction::Increasing, side, cfg)?.with_id("partition (i)"));

    for k in 1..n {
        let e = weight_product(hs, i_set.iter().copied(), |i| i as i64)
            * weight_product(hs, partition.j_upper(k), |j| (j - k) as i64);
        let r = check_monotone(&e, interval, Direction::Decreasing, side, cfg)?;
        reports.push(r.with_id(format!("partition (ii) k={k}")));
    }
    for k in 0..n - 1 {
        let e = weight_product(hs, partition.j_lower(k), |j| (k + 1 - j) as i64);
        let r = check_monotone(&e, interval, Direction::Increasing, side, cfg)?;
        reports.push(r.with_id(format!("partition (iii) k={k}")));
    }
    Ok(reports)
}

/// The sufficient condition for (ii) and (iii): `h_1 h_2^2 ... h_n^n`
/// decreasing and every `h_j`, `j` in `J`, increasing and strictly positive.
pub fn check_partition_shortcut(
    hs: &[Expr],
    partition: &PartitionSpec,
    interval: &Interval,
    side: Side,
    cfg: &CheckConfig,
) -> Result<ConditionReport> {
    check_arity(hs, partition)?;
    let weighted = weight_product(hs, 1..=partition.n(), |i| i as i64);
    let mut parts = vec![check_monotone(&weighted, interval, Direction::Decreasing, side, cfg)?];
    for j in partition.j_set() {
        let h = &hs[j - 1];
        parts.push(check_monotone(h, interval, Direction::Increasing, side, cfg)?);
        parts.push(check_sign(h, 0, interval, SignRequirement::StrictPos, side, cfg)?);
    }
    Ok(ConditionReport::all("partition shortcut", &parts))
}
