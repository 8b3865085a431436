//! Default search spaces, tuned so each case's hypotheses pass often enough.

use std::collections::BTreeMap;

use super::family::{FamilySpec, Join};
use super::{Families, IntervalRange};
use crate::catalog::CaseId;

fn poly(min_degree: u32, max_degree: u32, lo: f64, hi: f64) -> FamilySpec {
    FamilySpec::PolyNonneg { min_degree, max_degree, coef: [lo, hi] }
}

fn exp_affine(c: [f64; 2], lambda: [f64; 2], d: [f64; 2]) -> FamilySpec {
    FamilySpec::ExpAffine { c, lambda, d }
}

fn power_shift(s: [f64; 2], p: [f64; 2]) -> FamilySpec {
    FamilySpec::PowerShift { s, p }
}

fn ramp(lo: f64, hi: f64, slope: [f64; 2], join: Join) -> FamilySpec {
    FamilySpec::PiecewiseMonotone { pieces: 3, intercept: [lo, hi], slope, join }
}

/// Positive, with every derivative nonnegative on `x >= 0`.
fn positive_absolutely_monotone() -> Vec<FamilySpec> {
    vec![poly(1, 4, 0.1, 2.0), exp_affine([0.1, 2.0], [0.1, 2.0], [0.0, 1.0])]
}

/// Nonnegative and increasing on `x >= 0`.
fn increasing_weight() -> Vec<FamilySpec> {
    vec![poly(0, 2, 0.1, 2.0), ramp(0.1, 1.0, [0.0, 2.0], Join::Max), exp_affine([0.1, 1.0], [0.0, 1.0], [0.0, 1.0])]
}

fn constant_or_increasing() -> Vec<FamilySpec> {
    vec![poly(0, 0, 0.5, 2.0), poly(0, 1, 0.2, 1.5)]
}

/// The curated search space of a case.
pub fn curated(case: CaseId) -> Families {
    use CaseId::*;
    let mut slots: BTreeMap<&str, Vec<FamilySpec>> = BTreeMap::new();
    let mut n = None;
    let mut alpha = None;
    let mut interval = IntervalRange::default();
    match case {
        QiOriginal => {
            n = Some([1, 3]);
            slots.insert("f", vec![poly(0, 4, 0.0, 2.0), exp_affine([0.1, 2.0], [0.1, 2.0], [0.0, 1.0])]);
        }
        Prop1General => {
            n = Some([2, 3]);
            alpha = Some([0.0, 1.2]);
            slots.insert("f", positive_absolutely_monotone());
            slots.insert("g", constant_or_increasing());
            slots.insert("h", vec![poly(0, 0, 0.5, 2.0), power_shift([1.0, 2.0], [-1.0, 0.0])]);
        }
        CorFghp => {
            n = Some([2, 3]);
            alpha = Some([0.0, 1.2]);
            slots.insert("f", positive_absolutely_monotone());
            slots.insert("g", vec![poly(0, 2, 0.5, 2.0)]);
            slots.insert("h", constant_or_increasing());
            slots.insert("p", vec![poly(0, 0, 0.5, 2.0), power_shift([2.0, 3.0], [-0.3, 0.0])]);
        }
        CorFg1 | CorFg2 => {
            n = Some([2, 3]);
            alpha = Some([-0.5, 1.2]);
            slots.insert("f", positive_absolutely_monotone());
            slots.insert("g", increasing_weight());
        }
        CorFg3 => {
            n = Some([2, 3]);
            alpha = Some([-0.5, 1.0]);
            slots.insert("f", positive_absolutely_monotone());
            slots.insert("g", increasing_weight());
        }
        CorFh => {
            // (x+s)^p: p in (0,1] is concave for n = 2, p in (1,2] fits n = 3
            n = Some([2, 3]);
            alpha = Some([-0.5, 1.2]);
            slots.insert("f", vec![power_shift([0.5, 2.0], [0.2, 2.0])]);
            slots.insert("h", vec![poly(0, 1, 0.0, 0.3)]);
        }
        Prop2GOverF => {
            n = Some([1, 3]);
            slots.insert("f", positive_absolutely_monotone());
            slots.insert("g", increasing_weight());
            slots.insert("h", vec![poly(0, 1, 0.1, 2.0)]);
        }
        CorGOverF | CorLimitScan | CorLog1 => {
            n = Some([1, 3]);
            slots.insert("f", positive_absolutely_monotone());
            slots.insert("g", increasing_weight());
        }
        CorLog2 | CorLog3 => {
            n = Some([1, 3]);
            slots.insert("f", vec![exp_affine([0.1, 2.0], [0.1, 2.0], [0.0, 1.0]), poly(1, 1, 0.1, 2.0)]);
        }
        Lemma1OverE => {
            slots.insert("f", positive_absolutely_monotone());
            slots.insert("g", increasing_weight());
        }
        LemmaExp => {
            interval = IntervalRange { a: [0.05, 8.0], width: [0.0, 0.0] };
        }
        PropAlpha1 | CorFgh1 => {
            n = Some([2, 3]);
            if case == PropAlpha1 {
                alpha = Some([3.2, 5.0]);
            }
            slots.insert("f", positive_absolutely_monotone());
            slots.insert("g", vec![poly(0, 2, 0.1, 2.0), exp_affine([0.1, 1.0], [0.0, 1.0], [0.1, 1.0])]);
        }
        CorAlpha1 => {
            n = Some([2, 3]);
            slots.insert("f", positive_absolutely_monotone());
        }
        PropAlpha2 => {
            n = Some([2, 3]);
            alpha = Some([-1.0, 1.5]);
            slots.insert("f", positive_absolutely_monotone());
            slots.insert("g", vec![poly(0, 2, 0.1, 2.0), ramp(0.1, 1.0, [0.0, 2.0], Join::Max)]);
        }
        PropFgh => {
            n = Some([2, 3]);
            slots.insert("f", positive_absolutely_monotone());
            slots.insert("g", vec![poly(0, 0, 0.5, 2.0), poly(1, 1, 0.1, 0.5)]);
            slots.insert("h", vec![poly(0, 0, 0.5, 2.0), power_shift([1.0, 3.0], [-3.0, -1.0])]);
        }
        CorFgh2 => {
            n = Some([2, 3]);
            slots.insert(
                "f",
                vec![power_shift([0.2, 2.0], [1.2, 4.0]), exp_affine([1.0, 2.0], [0.2, 2.0], [-0.5, 0.0])],
            );
        }
        PropXMinusA => {
            n = Some([2, 3]);
            slots.insert("f", vec![poly(1, 4, 0.0, 2.0), exp_affine([0.1, 2.0], [0.1, 2.0], [-0.1, 0.5])]);
            slots.insert("g", increasing_weight());
            slots.insert("h", vec![poly(0, 1, 0.1, 2.0)]);
        }
    }
    Families {
        slots: slots.into_iter().map(|(k, v)| (k.to_owned(), v)).collect(),
        interval: Some(interval),
        n,
        alpha,
    }
}
