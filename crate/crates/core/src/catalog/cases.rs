//! Hypotheses, constants and formulas of each catalog case.

use std::f64::consts::E;
use std::ops::Range;

use super::{Approx, CaseId, Constants, Ctx};
use crate::error::Result;
use crate::expr::{Expr, Side};
use crate::hypotheses::{
    check_growth, check_monotone, check_partition_conditions, check_sign, ConditionReport, Direction,
    ExtremumKind, SignRequirement,
};
use crate::util::factorial;

/// A link `lhs <= rhs` with its label.
pub(crate) type Link = (String, Approx, Approx);

/// Collects condition reports. A domain error raised by a check after an
/// earlier check has already failed ends the collection instead of aborting:
/// the failed hypothesis usually explains it (e.g. `log f` once `f > 0` failed).
struct Checks<'a, 'b> {
    ctx: &'a Ctx<'b>,
    reports: Vec<ConditionReport>,
    halted: bool,
}

impl<'a, 'b> Checks<'a, 'b> {
    fn new(ctx: &'a Ctx<'b>) -> Self {
        Checks { ctx, reports: Vec::new(), halted: false }
    }

    fn run(&mut self, check: impl FnOnce(&Ctx<'b>) -> Result<Vec<ConditionReport>>) -> Result<()> {
        if self.halted {
            return Ok(());
        }
        match check(self.ctx) {
            Ok(r) => self.reports.extend(r),
            Err(e) if e.is_domain() && self.reports.iter().any(|r| !r.passed) => self.halted = true,
            Err(e) => return Err(e),
        }
        Ok(())
    }

    fn sign(&mut self, id: String, e: &Expr, order: usize, sign: SignRequirement) -> Result<()> {
        self.run(|ctx| {
            let inst = ctx.inst;
            let r = check_sign(e, order, &inst.interval, sign, inst.side, &ctx.cfg.check)?;
            Ok(vec![r.with_id(id)])
        })
    }

    fn nonneg(&mut self, name: &str, e: &Expr) -> Result<()> {
        self.sign(format!("{name} >= 0"), e, 0, SignRequirement::Nonneg)
    }

    fn positive(&mut self, name: &str, e: &Expr) -> Result<()> {
        self.sign(format!("{name} > 0"), e, 0, SignRequirement::StrictPos)
    }

    /// `f^(i) >= 0` for every `i` in `orders`.
    fn derivatives_nonneg(&mut self, f: &Expr, orders: Range<u32>) -> Result<()> {
        for i in orders {
            let id = if i == 0 { "f >= 0".to_owned() } else { format!("f^({i}) >= 0") };
            self.sign(id, f, i as usize, SignRequirement::Nonneg)?;
        }
        Ok(())
    }

    fn monotone(&mut self, name: &str, e: &Expr, direction: Direction) -> Result<()> {
        self.run(|ctx| {
            let inst = ctx.inst;
            let r = check_monotone(e, &inst.interval, direction, inst.side, &ctx.cfg.check)?;
            Ok(vec![r.with_id(format!("{name} {direction}"))])
        })
    }

    fn increasing(&mut self, name: &str, e: &Expr) -> Result<()> {
        self.monotone(name, e, Direction::Increasing)
    }

    fn decreasing(&mut self, name: &str, e: &Expr) -> Result<()> {
        self.monotone(name, e, Direction::Decreasing)
    }

    /// Strict positivity of `f'(a)`.
    fn slope_at_a_positive(&mut self, f: &Expr) -> Result<()> {
        self.run(|ctx| {
            let a = ctx.interval().a();
            let d = f.derivative_at(a, 1, Side::Right)?;
            Ok(vec![ConditionReport::at_point("f'(a) > 0", d, a, true, &ctx.cfg.check)])
        })
    }

    fn growth(&mut self) -> Result<()> {
        self.run(|ctx| Ok(check_growth(ctx.inst, &ctx.cfg.check)?.into_iter().collect()))
    }

    fn finish(self) -> Vec<ConditionReport> {
        self.reports
    }
}

pub(crate) fn hypotheses(ctx: &Ctx) -> Result<Vec<ConditionReport>> {
    use CaseId::*;
    let inst = ctx.inst;
    let mut c = Checks::new(ctx);
    match inst.case_id {
        QiOriginal => {
            let (n, f) = (inst.n()?, inst.slot("f")?);
            for i in 0..n {
                c.run(|ctx| {
                    let a = ctx.interval().a();
                    let d = f.derivative_at(a, i as usize, Side::Right)?;
                    let id = if i == 0 { "f(a) >= 0".to_owned() } else { format!("f^({i})(a) >= 0") };
                    Ok(vec![ConditionReport::at_point(id, d, a, false, &ctx.cfg.check)])
                })?;
            }
            c.growth()?;
        }
        Prop1General => {
            let (n, f, g) = (inst.n()?, inst.slot("f")?, inst.slot("g")?);
            let hs = inst.weights()?;
            c.nonneg("g", g)?;
            for (i, h) in hs.iter().enumerate() {
                c.nonneg(&format!("h_{}", i + 1), h)?;
            }
            c.positive("f", f)?;
            c.derivatives_nonneg(f, 1..n)?;
            c.growth()?;
            let partition = inst.partition()?;
            c.run(|ctx| check_partition_conditions(g, &hs, &partition, ctx.interval(), inst.side, &ctx.cfg.check))?;
        }
        CorFghp => {
            let (n, f) = (inst.n()?, inst.slot("f")?);
            let (g, h, p) = (inst.slot("g")?, inst.slot("h")?, inst.slot("p")?);
            c.nonneg("g", g)?;
            c.nonneg("h", h)?;
            c.nonneg("p", p)?;
            c.decreasing("p", p)?;
            c.increasing("h", h)?;
            c.increasing("g p", &(g * p))?;
            c.positive("f", f)?;
            c.derivatives_nonneg(f, 1..n)?;
            c.growth()?;
        }
        CorFg1 => {
            let (n, f, g) = (inst.n()?, inst.slot("f")?, inst.slot("g")?);
            c.positive("f", f)?;
            c.derivatives_nonneg(f, 1..n)?;
            c.nonneg("g", g)?;
            c.increasing("g", g)?;
        }
        CorFg2 | CorFg3 => {
            let (n, f, g) = (inst.n()?, inst.slot("f")?, inst.slot("g")?);
            c.positive("f", f)?;
            c.derivatives_nonneg(f, 1..n + 1)?;
            c.nonneg("g", g)?;
            c.increasing("g", g)?;
        }
        CorFh => {
            let (n, f, h) = (inst.n()?, inst.slot("f")?, inst.slot("h")?);
            c.positive("f", f)?;
            c.derivatives_nonneg(f, 1..n - 1)?;
            c.sign(format!("f^({}) > 0", n - 1), &f.derivative(n - 1), 0, SignRequirement::StrictPos)?;
            c.sign(format!("f^({n}) <= 0"), f, n as usize, SignRequirement::Nonpos)?;
            c.nonneg("h", h)?;
            c.sign("h <= 1".to_owned(), &(Expr::one() - h), 0, SignRequirement::Nonneg)?;
            c.increasing("h", h)?;
        }
        Prop2GOverF => {
            let (f, g, h) = (inst.slot("f")?, inst.slot("g")?, inst.slot("h")?);
            c.positive("f", f)?;
            c.derivatives_nonneg(f, 1..3)?;
            c.nonneg("g", g)?;
            c.increasing("g", g)?;
            c.nonneg("h", h)?;
            c.increasing("h", h)?;
            c.growth()?;
        }
        CorGOverF | CorLimitScan => {
            let (f, g) = (inst.slot("f")?, inst.slot("g")?);
            c.positive("f", f)?;
            c.slope_at_a_positive(f)?;
            c.derivatives_nonneg(f, 2..3)?;
            c.nonneg("g", g)?;
            c.increasing("g", g)?;
        }
        Lemma1OverE => {
            let (f, g) = (inst.slot("f")?, inst.slot("g")?);
            c.positive("f", f)?;
            c.increasing("f'", &f.derivative(1))?;
            c.slope_at_a_positive(f)?;
            c.nonneg("g", g)?;
            c.increasing("g", g)?;
        }
        LemmaExp => {
            c.positive("x", &Expr::x())?;
        }
        CorLog1 | CorLog2 => {
            let f = inst.slot("f")?;
            c.positive("f", f)?;
            c.slope_at_a_positive(f)?;
            c.derivatives_nonneg(f, 2..3)?;
            if inst.case_id == CorLog2 {
                c.sign("log f convex".to_owned(), &f.ln(), 2, SignRequirement::Nonneg)?;
            }
        }
        CorLog3 => {
            let f = inst.slot("f")?;
            c.positive("f", f)?;
            c.positive("f'", &f.derivative(1))?;
            c.sign("log f convex".to_owned(), &f.ln(), 2, SignRequirement::Nonneg)?;
        }
        PropAlpha1 | PropAlpha2 | CorFgh1 => {
            let (n, f, g) = (inst.n()?, inst.slot("f")?, inst.slot("g")?);
            c.derivatives_nonneg(f, 0..n - 1)?;
            c.positive("g", g)?;
            c.increasing("g", g)?;
            c.growth()?;
        }
        CorAlpha1 => {
            let (n, f) = (inst.n()?, inst.slot("f")?);
            c.derivatives_nonneg(f, 0..n - 1)?;
            c.positive(&format!("f^({})", n - 1), &f.derivative(n - 1))?;
        }
        PropFgh => {
            let (n, f) = (inst.n()?, inst.slot("f")?);
            let (g, h) = (inst.slot("g")?, inst.slot("h")?);
            c.derivatives_nonneg(f, 0..n - 1)?;
            c.nonneg("g", g)?;
            c.nonneg("h", h)?;
            c.increasing("g", g)?;
            c.decreasing("h", h)?;
            c.decreasing("g h", &(g * h))?;
            c.growth()?;
        }
        CorFgh2 => {
            let (n, f) = (inst.n()?, inst.slot("f")?);
            let top = f.derivative(n - 1);
            c.positive("f", f)?;
            c.derivatives_nonneg(f, 1..n - 1)?;
            c.positive(&format!("f^({})", n - 1), &top)?;
            c.increasing(&format!("f / f^({})", n - 1), &(f / &top))?;
        }
        PropXMinusA => {
            let (k, f) = (inst.k()?, inst.slot("f")?);
            let (g, h) = (inst.slot("g")?, inst.slot("h")?);
            c.derivatives_nonneg(f, 0..k)?;
            c.nonneg("g", g)?;
            c.increasing("g", g)?;
            c.positive("h", h)?;
            c.increasing("h", h)?;
            c.growth()?;
        }
    }
    Ok(c.finish())
}

/// `K = f^(n+1)(a)` for `alpha >= 0`, `f^(n+1-alpha)(a) f^alpha(b)` otherwise,
/// with `n + 1` replaced by `power` so the same rule serves `L`.
fn endpoint_weight(fa: Approx, fb: Approx, power: f64, alpha: f64) -> Approx {
    if alpha >= 0.0 {
        fa.powf(power)
    } else {
        fa.powf(power - alpha) * fb.powf(alpha)
    }
}

pub(crate) fn constants(ctx: &Ctx) -> Result<Constants> {
    use CaseId::*;
    let inst = ctx.inst;
    let mut out = Constants::default();
    match inst.case_id {
        Prop1General | CorFghp | CorFg1 | CorFg2 | CorFh => {
            let (n, alpha, f) = (inst.n()? as f64, inst.alpha()?, inst.slot("f")?);
            let (fa, fb) = (ctx.at_a(f)?, ctx.at_b(f)?);
            out.k = Some(endpoint_weight(fa, fb, n + 1.0, alpha).value);
            match inst.case_id {
                Prop1General => {
                    out.big_m = Some(ctx.extremum(inst.slot("g")?, ExtremumKind::Inf)?);
                    let m = inst
                        .weights()?
                        .iter()
                        .map(|h| ctx.extremum(h, ExtremumKind::Inf))
                        .collect::<Result<Vec<_>>>()?;
                    out.m = Some(m);
                }
                CorFghp => out.big_m = Some(ctx.extremum(inst.slot("g")?, ExtremumKind::Inf)?),
                CorFg1 => {
                    let e = f.derivative(inst.n()? - 1) * f.powf(n * (1.0 - alpha));
                    out.a = Some(ctx.extremum(&e, ExtremumKind::Inf)?);
                }
                _ => out.c = Some(if alpha <= 1.0 { fa.value } else { fb.value }),
            }
        }
        CorFg3 => {
            let (n, alpha, f) = (inst.n()? as f64, inst.alpha()?, inst.slot("f")?);
            let beta = n * (1.0 - alpha) + alpha;
            out.beta = Some(beta);
            out.l = Some(endpoint_weight(ctx.at_a(f)?, ctx.at_b(f)?, n * beta + 1.0, alpha).value);
        }
        PropAlpha2 => {
            let (alpha, g) = (inst.alpha()?, inst.slot("g")?);
            let (ga, gb) = (ctx.at_a(g)?, ctx.at_b(g)?);
            out.k = Some(if alpha >= 0.0 { ga } else { gb }.powf(alpha).value);
            // g is increasing, so the sup norm sits at b
            out.g_supnorm = Some(gb.value);
        }
        CorAlpha1 => {
            let (n, f) = (inst.n()?, inst.slot("f")?);
            out.a = Some(ctx.extremum(&(f / f.derivative(n - 1)), ExtremumKind::Sup)?);
        }
        _ => {}
    }
    Ok(out)
}

fn single(lhs: Approx, rhs: Approx) -> Vec<Link> {
    vec![("lhs <= rhs".to_owned(), lhs, rhs)]
}

pub(crate) fn links(ctx: &Ctx, k: &Constants) -> Result<Vec<Link>> {
    use CaseId::*;
    let inst = ctx.inst;
    let w = ctx.width();
    let exact = Approx::exact;
    let computed = Approx::computed;
    let n = inst.params.n.unwrap_or(1);
    let (ni, nf) = (n as i32, n as f64);
    let fact = factorial(n);
    let kk = || computed(k.k.expect("K computed for this case"));

    let links = match inst.case_id {
        QiOriginal => {
            let f = inst.slot("f")?;
            let lhs = ctx.integral(f)?.powi(ni + 1);
            single(lhs, ctx.integral(&f.powi(n as i64 + 2))?)
        }
        Prop1General => {
            let (alpha, f, g) = (inst.alpha()?, inst.slot("f")?, inst.slot("g")?);
            let hs = inst.weights()?;
            let m = k.m.as_ref().expect("m computed");
            let mut first = w * kk() * computed(k.big_m.expect("M computed")).powi(ni);
            for (i, mi) in (1..=ni).zip(m) {
                first = first * computed(*mi).powi(ni - i);
            }
            let all = Expr::product(hs.iter().map(|h| (h, 1)));
            let inner = ctx.integral(&(f.powf(alpha) * g * all))?;
            let weighted = Expr::product(hs.iter().zip(1..).map(|(h, i)| (h, n as i64 - i)));
            let rhs = ctx.integral(&(f.powi(n as i64 + 1) * g.powi(n as i64) * weighted))?;
            single(first + inner.powi(ni), rhs)
        }
        CorFghp => {
            let (alpha, nu, f) = (inst.alpha()?, inst.nu()? as i32, inst.slot("f")?);
            let (g, h, p) = (inst.slot("g")?, inst.slot("h")?, inst.slot("p")?);
            let first = w
                * kk()
                * computed(k.big_m.expect("M computed")).powi(ni)
                * ctx.at_a(h)?.powi(ni - 1)
                * ctx.at_b(p)?.powi(ni - nu);
            let inner = ctx.integral(&(f.powf(alpha) * g * h * p))?;
            let rhs = ctx.integral(
                &(f.powi(n as i64 + 1) * g.powi(n as i64) * h.powi(n as i64 - 1) * p.powi((ni - nu) as i64)),
            )?;
            single(first + inner.powi(ni), rhs)
        }
        CorFg1 => {
            let (alpha, f, g) = (inst.alpha()?, inst.slot("f")?, inst.slot("g")?);
            let coef = computed(k.a.expect("A computed")) * ((nf + 1.0 - alpha) / fact);
            let first = w * kk() * ctx.at_a(g)?.powi(ni);
            let inner = ctx.integral(&(f.powf(alpha) * g))?;
            let rhs = ctx.integral(&(f.powi(n as i64 + 1) * g.powi(n as i64)))?;
            single(first + coef * inner.powi(ni), rhs)
        }
        CorFg2 => {
            let (alpha, f, g) = (inst.alpha()?, inst.slot("f")?, inst.slot("g")?);
            let top = f.derivative(n - 1);
            let coef = computed(k.c.expect("C computed")).powf(nf * (1.0 - alpha)) * ((nf + 1.0 - alpha) / fact);
            let first = w * kk() * ctx.at_a(g)?.powi(ni) * ctx.at_a(&top)?.powi(ni - 1);
            let inner = ctx.integral(&(f.powf(alpha) * g * &top))?;
            let rhs = ctx.integral(&(f.powi(n as i64 + 1) * g.powi(n as i64) * top.powi(n as i64 - 1)))?;
            single(first + coef * inner.powi(ni), rhs)
        }
        CorFh => {
            let (alpha, f, h) = (inst.alpha()?, inst.slot("f")?, inst.slot("h")?);
            let top = f.derivative(n - 1);
            let coef = computed(k.c.expect("C computed")).powf(nf * (1.0 - alpha)) * ((nf + 1.0 - alpha) / fact);
            let first = (w * kk() * ctx.at_a(h)?.powi(ni - 1)).div(ctx.at_a(&top)?);
            let inner = ctx.integral(&(f.powf(alpha) * h))?;
            let rhs = ctx.integral(&(f.powi(n as i64 + 1) * h.powi(n as i64 - 1) / &top))?;
            single(first + coef * inner.powi(ni), rhs)
        }
        CorFg3 => {
            let (alpha, f, g) = (inst.alpha()?, inst.slot("f")?, inst.slot("g")?);
            let beta = k.beta.expect("beta computed");
            let top = f.derivative(n - 1);
            let l = computed(k.l.expect("L computed"));
            let first = w * l * ctx.at_a(g)?.powi(ni) * ctx.at_a(&top)?.powi(ni - 1);
            let inner = ctx.integral(&(f.powf(beta) * g * &top))?;
            let rhs = ctx.integral(&(f.powf(nf * beta + 1.0) * g.powi(n as i64) * top.powi(n as i64 - 1)))?;
            single(first + inner.powi(ni) * ((nf + 1.0 - alpha) / fact), rhs)
        }
        Prop2GOverF => {
            let (f, g, h) = (inst.slot("f")?, inst.slot("g")?, inst.slot("h")?);
            let first = (w * ctx.at_a(f)?.powi(ni + 1) * ctx.at_a(g)?.powi(ni + 1) * ctx.at_a(h)?).div(ctx.at_b(f)?);
            let inner = ctx.integral(&(g / f))?;
            let rhs = ctx.integral(&(f.powi(n as i64) * g.powi(n as i64 + 1) * h))?;
            single(first + inner.powi(ni + 1), rhs)
        }
        CorGOverF => {
            let (f, g) = (inst.slot("f")?, inst.slot("g")?);
            let first = (w * ctx.at_a(g)?.powi(ni + 1)).div(ctx.at_b(f)?);
            let coef = ctx.at_a(&f.derivative(1))?.powi(ni) * ((nf + 1.0).powi(ni - 1) / fact);
            let inner = ctx.integral(&(g / f))?;
            let rhs = ctx.integral(&(f.powi(n as i64) * g.powi(n as i64 + 1)))?.div(ctx.at_a(f)?.powi(ni + 1));
            single(first + coef * inner.powi(ni + 1), rhs)
        }
        CorLimitScan => {
            let (f, g) = (inst.slot("f")?, inst.slot("g")?);
            let row = super::limit::row(ctx, f, g, n)?;
            vec![
                ("upper: S_n <= (b-a)^(1/(n+1)) f(b)^(n/(n+1)) g(b)".to_owned(), row.s, row.upper),
                ("lower: int g/f <= S_n c_n / (f(a) f'(a)^(n/(n+1)))".to_owned(), row.ratio_integral, row.lower),
            ]
        }
        Lemma1OverE => {
            let (f, g) = (inst.slot("f")?, inst.slot("g")?);
            let (fa, fb, gb) = (ctx.at_a(f)?, ctx.at_b(f)?, ctx.at_b(g)?);
            let slope = ctx.at_a(&f.derivative(1))?;
            let middle = gb.div(slope) * fb.div(fa).ln();
            let right = (fb * gb).div(fa * slope) * (1.0 / E);
            vec![
                ("int g/f <= g(b)/f'(a) log(f(b)/f(a))".to_owned(), ctx.integral(&(g / f))?, middle),
                ("g(b)/f'(a) log(f(b)/f(a)) <= f(b) g(b)/(e f(a) f'(a))".to_owned(), middle, right),
            ]
        }
        LemmaExp => {
            let xv = computed(inst.interval.a());
            vec![
                ("x^e <= e^x".to_owned(), xv.powf(E), computed(xv.value.exp())),
                ("e log x <= x".to_owned(), xv.ln() * E, xv),
            ]
        }
        CorLog1 => {
            let f = inst.slot("f")?;
            let (fa, fb) = (ctx.at_a(f)?, ctx.at_b(f)?);
            let (da, db) = (ctx.at_a(&f.derivative(1))?, ctx.at_b(&f.derivative(1))?);
            let log_ratio = fb.div(fa).ln();
            let lhs = log_ratio.powi(ni + 1) + (w * da).div(fb) * (fact / (nf + 1.0).powi(ni - 1));
            let growth = fb.div(fa).powi(ni + 1) - exact(1.0);
            let rhs = db.div(da).powi(ni) * growth * (fact / (nf + 1.0).powi(ni));
            single(lhs, rhs)
        }
        CorLog2 => {
            let f = inst.slot("f")?;
            let (fa, fb) = (ctx.at_a(f)?, ctx.at_b(f)?);
            let (da, db) = (ctx.at_a(&f.derivative(1))?, ctx.at_b(&f.derivative(1))?);
            let lhs = (exact(1.0) - fa.div(fb)).powi(ni + 1);
            let inner = db.div(da).powi(ni) * fb.div(fa).ln() - (w * da).div(fb);
            single(lhs, inner * (fact / (nf + 1.0).powi(ni - 1)))
        }
        CorLog3 => {
            let f = inst.slot("f")?;
            let (fa, fb) = (ctx.at_a(f)?, ctx.at_b(f)?);
            let (da, db) = (ctx.at_a(&f.derivative(1))?, ctx.at_b(&f.derivative(1))?);
            let middle = (db * fa).div(fb * da) * fb.div(fa).ln();
            vec![
                ("1 - f(a)/f(b) <= f'(b) f(a)/(f(b) f'(a)) log(f(b)/f(a))".to_owned(), exact(1.0) - fa.div(fb), middle),
                ("f'(b) f(a)/(f(b) f'(a)) log(f(b)/f(a)) <= f'(b)/(e f'(a))".to_owned(), middle, db.div(da) * (1.0 / E)),
            ]
        }
        PropAlpha1 => {
            let (alpha, f, g) = (inst.alpha()?, inst.slot("f")?, inst.slot("g")?);
            let first = w * ctx.at_a(f)?.powi(ni) * ctx.at_a(g)?.powf(alpha);
            let inner = ctx.integral(&(f * g))?;
            single(first + inner.powi(ni), ctx.integral(&(f.powi(n as i64) * g.powf(alpha)))?)
        }
        CorAlpha1 => {
            let f = inst.slot("f")?;
            let a_const = computed(k.a.expect("A computed"));
            let coef = exact((nf - 1.0) / fact).div(a_const);
            let first = w * ctx.at_a(f)?.powi(ni);
            single(first + coef * ctx.integral(f)?.powi(ni), ctx.integral(&f.powi(n as i64))?)
        }
        PropAlpha2 => {
            let (alpha, f, g) = (inst.alpha()?, inst.slot("f")?, inst.slot("g")?);
            let first = w * ctx.at_a(f)?.powi(ni) * kk();
            let inner = ctx.integral(&(f * g))?;
            single(first + inner.powi(ni), ctx.integral(&(f.powi(n as i64) * g.powf(alpha)))?)
        }
        PropFgh => {
            let (l, f) = (inst.l()? as i32, inst.slot("f")?);
            let (g, h) = (inst.slot("g")?, inst.slot("h")?);
            let first = w * ctx.at_a(f)?.powi(ni) * ctx.at_a(g)?.powi(l);
            let inner = ctx.integral(&(f * g * h))?;
            single(first + inner.powi(ni), ctx.integral(&(f.powi(n as i64) * g.powi(l as i64)))?)
        }
        CorFgh1 => {
            let (f, g) = (inst.slot("f")?, inst.slot("g")?);
            let first = w * ctx.at_a(f)?.powi(ni) * ctx.at_a(g)?;
            single(first + ctx.integral(f)?.powi(ni), ctx.integral(&(f.powi(n as i64) * g))?)
        }
        CorFgh2 => {
            let f = inst.slot("f")?;
            let top = f.derivative(n - 1);
            let first = (w * ctx.at_a(f)?.powi(ni + 1)).div(ctx.at_a(&top)?);
            let second = ctx.integral(f)?.powi(ni) * ((nf - 1.0) / fact);
            single(first + second, ctx.integral(&(f.powi(n as i64 + 1) / &top))?)
        }
        PropXMinusA => {
            let f = inst.slot("f")?;
            let (g, h) = (inst.slot("g")?, inst.slot("h")?);
            let first = w * ctx.at_a(f)?.powi(ni + 1) * ctx.at_a(g)?.powi(ni) * ctx.at_a(h)?.powi(ni - 1);
            let inner = ctx.integral(&(f * g * h))?;
            let rhs = ctx.integral(&(f.powi(n as i64 + 1) * g.powi(n as i64) * h.powi(n as i64 - 1)))?;
            single(first + inner.powi(ni), rhs)
        }
    };
    Ok(links)
}

pub(crate) fn notes(case: CaseId) -> Vec<String> {
    match case {
        CaseId::CorLimitScan => vec![
            "only the two finite-n inequalities at the instance's n are evaluated; the liminf/limsup \
             statements are not checked"
                .to_owned(),
        ],
        _ => Vec::new(),
    }
}
