//! Random instances and falsification campaigns.
//!
//! Instances are drawn by rejection sampling: functions come from parametric
//! families, growth conditions get one repair step (rescaling a slot by the
//! deficit the checker reports) and the hypothesis checks decide admissibility.

mod curated;
mod family;
mod repair;

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::catalog::{evaluate_case, CaseId, CaseInstance, EvalConfig, Verdict, MAX_N};
use crate::error::{Error, Result};
use crate::interval::Interval;

pub use curated::curated;
pub use family::{FamilySpec, Join, Range};

/// Where interval endpoints are drawn from: `a` uniform in `a`, `b = a + w`
/// with `w` uniform in `width`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct IntervalRange {
    pub a: Range,
    pub width: Range,
}

impl Default for IntervalRange {
    fn default() -> Self {
        IntervalRange { a: [0.0, 1.0], width: [0.2, 1.5] }
    }
}

/// The search space of a campaign. Slots `h_1, h_2, ...` fall back to the
/// families listed under `h`. Omitted ranges use the case's curated ones.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct Families {
    #[serde(default)]
    pub slots: BTreeMap<String, Vec<FamilySpec>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub interval: Option<IntervalRange>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<[u32; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha: Option<Range>,
}

impl Families {
    fn for_slot(&self, slot: &str) -> Result<&[FamilySpec]> {
        let found = self.slots.get(slot).or_else(|| {
            slot.strip_prefix("h_").filter(|i| i.parse::<u32>().is_ok()).and_then(|_| self.slots.get("h"))
        });
        match found {
            Some(v) if !v.is_empty() => Ok(v),
            _ => Err(Error::MissingFamily(slot.to_owned())),
        }
    }

    pub fn validate(&self) -> Result<()> {
        self.slots.values().flatten().try_for_each(FamilySpec::validate)
    }
}

/// The random stream of instance `index` in a campaign seeded with `seed`.
fn stream(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

fn uniform(rng: &mut ChaCha8Rng, [lo, hi]: Range) -> f64 {
    if lo >= hi {
        lo
    } else {
        rng.gen_range(lo..=hi)
    }
}

/// `alpha` range of the case, intersected with its domain.
fn alpha_range(case: CaseId, n: u32, range: Range) -> Result<Range> {
    use CaseId::*;
    let nf = n as f64;
    let [mut lo, mut hi] = range;
    match case {
        Prop1General | CorFghp | CorFg1 | CorFg2 | CorFh => hi = hi.min(nf / (nf - 1.0)),
        CorFg3 => hi = hi.min(1.0),
        PropAlpha2 => hi = hi.min(nf),
        PropAlpha1 => lo = lo.max(nf + 1e-3),
        _ => {}
    }
    if lo > hi {
        return Err(Error::InvalidParams(format!("{case}: alpha range {range:?} is empty for n = {n}")));
    }
    Ok([lo, hi])
}

fn needs_alpha(case: CaseId) -> bool {
    use CaseId::*;
    matches!(case, Prop1General | CorFghp | CorFg1 | CorFg2 | CorFh | CorFg3 | PropAlpha1 | PropAlpha2)
}

/// Draws an instance of `case`. Deterministic in `seed`; the hypotheses are
/// not checked, only the growth condition is repaired where a scaling helps.
pub fn sample_instance(case: CaseId, families: &Families, seed: u64) -> Result<CaseInstance> {
    sample_with(case, families, &EvalConfig::default(), &mut stream(seed, 0))
}

fn sample_with(case: CaseId, families: &Families, cfg: &EvalConfig, rng: &mut ChaCha8Rng) -> Result<CaseInstance> {
    use CaseId::*;
    let defaults = curated(case);
    let interval_range = families.interval.or(defaults.interval).unwrap_or_default();
    let a = uniform(rng, interval_range.a);
    let b = a + uniform(rng, interval_range.width);
    let mut inst = CaseInstance::new(case, Interval::new(a, b)?);

    if let Some([lo, hi]) = families.n.or(defaults.n) {
        let hi = hi.min(MAX_N);
        if lo > hi {
            return Err(Error::InvalidParams(format!("n range {lo}..={hi} is empty")));
        }
        let n_min = match case {
            QiOriginal | Prop2GOverF | CorGOverF | CorLimitScan | CorLog1 | CorLog2 => 1,
            _ => 2,
        };
        inst = inst.with_n(rng.gen_range(lo.max(n_min)..=hi.max(n_min)));
    }
    let n = inst.params.n.unwrap_or(0);
    if needs_alpha(case) {
        let range = families.alpha.or(defaults.alpha).unwrap_or([0.0, 1.0]);
        inst = inst.with_alpha(uniform(rng, alpha_range(case, n, range)?));
    }
    match case {
        CorFghp => inst = inst.with_nu(rng.gen_range(2..=n)),
        PropFgh => inst = inst.with_l(rng.gen_range(1..=n)),
        PropXMinusA => inst = inst.with_k(rng.gen_range(1..n)),
        Prop1General => {
            let i: Vec<usize> = (1..=n as usize).filter(|_| rng.gen_bool(0.5)).collect();
            inst = inst.with_partition(i);
        }
        _ => {}
    }

    for slot in inst.required_slots() {
        let spec = families.for_slot(&slot)?.choose(rng).expect("nonempty family list");
        let f = spec.sample(rng);
        inst = inst.with_fn(&slot, f);
    }
    repair::repair_growth(&mut inst, &cfg.check)?;
    Ok(inst)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FalsificationReport {
    pub case_id: CaseId,
    pub attempts: usize,
    /// Instances whose hypotheses all passed.
    pub admissible: usize,
    /// Admissible instances whose left side exceeds the right by more than
    /// the combined error bound.
    pub violations: usize,
    pub indeterminate: usize,
    /// Draws rejected because some function left its domain.
    pub domain_errors: usize,
    /// Smallest `rhs - lhs` among admissible instances.
    pub min_margin: Option<f64>,
    pub min_margin_instance: Option<CaseInstance>,
    /// The first violating instance, for reproduction.
    pub first_violation: Option<CaseInstance>,
}

enum Outcome {
    DomainError,
    Rejected,
    Evaluated { verdict: Verdict, margin: f64, inst: CaseInstance },
}

fn attempt(case: CaseId, families: &Families, cfg: &EvalConfig, seed: u64, index: u64) -> Result<Outcome> {
    let mut rng = stream(seed, index);
    let inst = match sample_with(case, families, cfg, &mut rng) {
        Ok(inst) => inst,
        Err(e) if e.is_domain() => return Ok(Outcome::DomainError),
        Err(e) => return Err(e),
    };
    let r = match evaluate_case(&inst, cfg) {
        Ok(r) => r,
        Err(e) if e.is_domain() => return Ok(Outcome::DomainError),
        Err(e) => return Err(e),
    };
    match (r.verdict, r.margin) {
        (Verdict::HypothesesFailed, _) | (_, None) => Ok(Outcome::Rejected),
        (verdict, Some(margin)) => Ok(Outcome::Evaluated { verdict, margin, inst }),
    }
}

/// Samples `budget` instances of `case`, evaluates the admissible ones and
/// aggregates. Work is spread over the rayon pool; each attempt has its own
/// random stream, so the report does not depend on the thread count.
pub fn falsify(case: CaseId, budget: usize, families: &Families, seed: u64, cfg: &EvalConfig) -> Result<FalsificationReport> {
    if budget == 0 {
        return Err(Error::InvalidParams("budget must be at least 1".into()));
    }
    families.validate()?;
    let outcomes: Vec<Outcome> =
        (0..budget as u64).into_par_iter().map(|i| attempt(case, families, cfg, seed, i)).collect::<Result<_>>()?;

    let mut report = FalsificationReport {
        case_id: case,
        attempts: budget,
        admissible: 0,
        violations: 0,
        indeterminate: 0,
        domain_errors: 0,
        min_margin: None,
        min_margin_instance: None,
        first_violation: None,
    };
    for outcome in outcomes {
        match outcome {
            Outcome::DomainError => report.domain_errors += 1,
            Outcome::Rejected => {}
            Outcome::Evaluated { verdict, margin, inst } => {
                report.admissible += 1;
                match verdict {
                    Verdict::Violated => {
                        report.violations += 1;
                        report.first_violation.get_or_insert_with(|| inst.clone());
                    }
                    Verdict::Indeterminate => report.indeterminate += 1,
                    _ => {}
                }
                if report.min_margin.map_or(true, |m| margin < m) {
                    report.min_margin = Some(margin);
                    report.min_margin_instance = Some(inst);
                }
            }
        }
    }
    Ok(report)
}

/// Runs [`falsify`] on each case with its curated families, or with
/// `families` for every case when given.
pub fn suite(
    cases: &[CaseId],
    count: usize,
    seed: u64,
    families: Option<&Families>,
    cfg: &EvalConfig,
) -> Result<Vec<FalsificationReport>> {
    cases
        .iter()
        .map(|&case| match families {
            Some(f) => falsify(case, count, f, seed, cfg),
            None => falsify(case, count, &curated(case), seed, cfg),
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn h_slots_fall_back_to_h() {
        let fam = curated(CaseId::Prop1General);
        assert!(fam.for_slot("h_3").is_ok());
        assert!(matches!(fam.for_slot("p"), Err(Error::MissingFamily(_))));
        assert!(matches!(Families::default().for_slot("h_1"), Err(Error::MissingFamily(_))));
    }

    #[test]
    fn alpha_ranges_respect_case_domains() {
        assert_eq!(alpha_range(CaseId::CorFg1, 2, [0.0, 5.0]).unwrap(), [0.0, 2.0]);
        assert_eq!(alpha_range(CaseId::CorFg3, 3, [0.0, 5.0]).unwrap(), [0.0, 1.0]);
        assert!(alpha_range(CaseId::PropAlpha1, 3, [0.0, 2.0]).is_err());
    }

    #[test]
    fn streams_are_independent_of_evaluation_order() {
        let a: u64 = stream(9, 4).gen();
        let _: u64 = stream(9, 3).gen();
        assert_eq!(a, stream(9, 4).gen::<u64>());
        assert_ne!(a, stream(9, 5).gen::<u64>());
    }
}
