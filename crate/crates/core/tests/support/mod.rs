//! Oracles and generators shared by the integration tests.
#![allow(dead_code)]

pub mod samples;

use std::f64::consts::{E, LN_2, PI};

use astro_float::{BigFloat, Consts, Radix, RoundingMode};
use qicert_core::{Expr, Node};
use rand::Rng;

const PREC: usize = 768;
const RM: RoundingMode = RoundingMode::ToEven;

fn big(v: f64) -> BigFloat {
    BigFloat::from_f64(v, PREC)
}

fn to_f64(v: &BigFloat, cc: &mut Consts) -> f64 {
    v.format(Radix::Dec, RoundingMode::ToEven, cc).expect("finite value formats").parse().expect("decimal parses")
}

/// Evaluates `e` at `x` in 768-bit arithmetic; `None` outside the domain.
pub fn eval_mp(e: &Expr, x: &BigFloat, cc: &mut Consts) -> Option<BigFloat> {
    let v = match e.node() {
        Node::Const(c) => big(*c),
        Node::Var => x.clone(),
        Node::Neg(a) => eval_mp(a, x, cc)?.neg(),
        Node::Add(a, b) => eval_mp(a, x, cc)?.add(&eval_mp(b, x, cc)?, PREC, RM),
        Node::Sub(a, b) => eval_mp(a, x, cc)?.sub(&eval_mp(b, x, cc)?, PREC, RM),
        Node::Mul(a, b) => eval_mp(a, x, cc)?.mul(&eval_mp(b, x, cc)?, PREC, RM),
        Node::Div(a, b) => {
            let d = eval_mp(b, x, cc)?;
            if d.is_zero() {
                return None;
            }
            eval_mp(a, x, cc)?.div(&d, PREC, RM)
        }
        Node::Pow(a, r) => {
            let base = eval_mp(a, x, cc)?;
            if r.fract() == 0.0 {
                let p = base.powi(r.abs() as usize, PREC, RM);
                if *r < 0.0 {
                    if p.is_zero() {
                        return None;
                    }
                    p.reciprocal(PREC, RM)
                } else {
                    p
                }
            } else {
                if !base.is_positive() || base.is_zero() {
                    return None;
                }
                base.pow(&big(*r), PREC, RM, cc)
            }
        }
        Node::Exp(a) => eval_mp(a, x, cc)?.exp(PREC, RM, cc),
        Node::Log(a) => {
            let v = eval_mp(a, x, cc)?;
            if v.is_zero() || v.is_negative() {
                return None;
            }
            v.ln(PREC, RM, cc)
        }
        Node::Abs(a) => eval_mp(a, x, cc)?.abs(),
        Node::Min(a, b) | Node::Max(a, b) => {
            let (u, v) = (eval_mp(a, x, cc)?, eval_mp(b, x, cc)?);
            let u_less = u.cmp(&v)? < 0;
            let take_u = if matches!(e.node(), Node::Min(..)) { u_less } else { !u_less };
            if take_u {
                u
            } else {
                v
            }
        }
        Node::Deriv(..) => return None,
    };
    (!v.is_nan() && !v.is_inf()).then_some(v)
}

/// One-sided finite-difference derivatives `f^(0..=order)` at `x` in
/// 768-bit arithmetic: forward differences for the right side, backward for
/// the left. The step `2^-80` keeps truncation far below 1e-15 relative.
pub fn fd_derivatives(e: &Expr, x: f64, order: usize, right: bool) -> Option<Vec<f64>> {
    let mut cc = Consts::new().expect("constants cache");
    let h = big(2f64.powi(-80));
    let h = if right { h } else { h.neg() };
    let x0 = big(x);
    let values: Vec<BigFloat> = (0..=order)
        .map(|j| {
            let xj = x0.add(&h.mul(&big(j as f64), PREC, RM), PREC, RM);
            eval_mp(e, &xj, &mut cc)
        })
        .collect::<Option<_>>()?;
    let mut out = Vec::with_capacity(order + 1);
    // successive difference tables: delta^k f(x) / h^k
    let mut diffs = values;
    let mut scale = big(1.0);
    for k in 0..=order {
        out.push(to_f64(&diffs[0].div(&scale, PREC, RM), &mut cc));
        if k < order {
            diffs = diffs.windows(2).map(|w| w[1].sub(&w[0], PREC, RM)).collect();
            scale = scale.mul(&h, PREC, RM);
        }
    }
    Some(out)
}

fn pick<T: Copy>(rng: &mut impl Rng, xs: &[T]) -> T {
    xs[rng.gen_range(0..xs.len())]
}

/// An expression positive on `x > 0`.
pub fn random_positive(rng: &mut impl Rng, depth: u32) -> Expr {
    let x = Expr::x;
    let c = |v: f64| Expr::constant(v);
    if depth == 0 {
        return match rng.gen_range(0..3) {
            0 => c(rng.gen_range(0.5..2.0)) + x(),
            1 => c(rng.gen_range(0.5..3.0)),
            _ => c(1.0) + x() * x(),
        };
    }
    let d = depth - 1;
    match rng.gen_range(0..8) {
        0 => random_positive(rng, d) * random_positive(rng, d),
        1 => random_positive(rng, d) + random_positive(rng, d),
        2 => random_positive(rng, d).powf(pick(rng, &[-2.0, -1.0, -0.5, 0.5, 1.5, 2.0, 3.0])),
        3 => random_positive(rng, d) / random_positive(rng, d),
        4 => (c(0.5) * random_expr(rng, d)).exp(),
        5 => random_positive(rng, d).max(&random_positive(rng, d)),
        6 => random_positive(rng, d).min(&random_positive(rng, d)),
        _ => random_expr(rng, d).abs() + c(rng.gen_range(0.1..1.0)),
    }
}

/// An expression defined on `x > 0`, possibly with kinks.
pub fn random_expr(rng: &mut impl Rng, depth: u32) -> Expr {
    let x = Expr::x;
    if depth == 0 {
        return match rng.gen_range(0..3) {
            0 => x(),
            1 => Expr::constant(rng.gen_range(-2.0..2.0)),
            _ => random_positive(rng, 0),
        };
    }
    let d = depth - 1;
    match rng.gen_range(0..11) {
        0 => random_expr(rng, d) + random_expr(rng, d),
        1 => random_expr(rng, d) - random_expr(rng, d),
        2 => random_expr(rng, d) * random_expr(rng, d),
        3 => random_expr(rng, d) / random_positive(rng, d),
        4 => random_positive(rng, d).ln(),
        5 => random_expr(rng, d).abs(),
        6 => random_expr(rng, d).min(&random_expr(rng, d)),
        7 => random_expr(rng, d).max(&random_expr(rng, d)),
        8 => -random_expr(rng, d),
        9 => random_expr(rng, d).powi(pick(rng, &[2, 3])),
        _ => random_positive(rng, d),
    }
}

/// Jet-vs-oracle comparison: relative error with a unit floor.
pub fn close(jet: f64, oracle: f64, tol: f64) -> bool {
    (jet - oracle).abs() <= tol * oracle.abs().max(1.0)
}

pub struct QuadCase {
    pub src: &'static str,
    pub a: f64,
    pub b: f64,
    pub exact: f64,
}

/// Integrals with closed forms.
pub fn quadrature_corpus() -> Vec<QuadCase> {
    let q = |src, a, b, exact| QuadCase { src, a, b, exact };
    vec![
        q("x", 0.0, 1.0, 0.5),
        q("pow(1 + x, 3)", 0.0, 1.0, 15.0 / 4.0),
        q("pow(1 + x, 6)", 0.0, 1.0, 127.0 / 7.0),
        q("pow(x, 5)", 0.0, 2.0, 64.0 / 6.0),
        q("3*x*x - 2*x + 1", -1.0, 2.0, 9.0),
        q("exp(x)", 0.0, 1.0, E - 1.0),
        q("exp(-2*x)", 0.0, 3.0, (1.0 - (-6.0f64).exp()) / 2.0),
        q("exp(3*x)", -1.0, 1.0, ((3.0f64).exp() - (-3.0f64).exp()) / 3.0),
        q("log(x)", 1.0, E, 1.0),
        q("log(1 + x)", 0.0, 1.0, 2.0 * LN_2 - 1.0),
        q("1/(1 + x)", 0.0, 1.0, LN_2),
        q("1/(1 + x*x)", 0.0, 1.0, PI / 4.0),
        q("pow(1 + x, -2)", 0.0, 3.0, 0.75),
        q("x/(1 + x*x)", 0.0, 2.0, 5f64.ln() / 2.0),
        q("pow(x, 0.5)", 1.0, 4.0, 14.0 / 3.0),
        q("pow(1 + x, -1.5)", 0.0, 3.0, 1.0),
        q("x*exp(x)", 0.0, 1.0, 1.0),
        q("x*x*log(x)", 1.0, 2.0, 8.0 / 3.0 * LN_2 - 7.0 / 9.0),
        q("1/(x*(1 + x))", 1.0, 2.0, (4.0f64 / 3.0).ln()),
        q("pow(x, 4) - x*x", -1.0, 1.0, -4.0 / 15.0),
    ]
}
