//! Functions of one real variable as immutable expression trees.
//!
//! Expressions are built from the grammar
//!
//! ```text
//! E := E + E | E - E | E * E | E / E | -E | ( E )
//!    | pow(E, R) | exp(E) | log(E) | abs(E) | min(E, E) | max(E, E)
//!    | x | <decimal literal>
//! ```
//!
//! and support pointwise evaluation plus Taylor-mode jets of any order.
//! `abs`, `min` and `max` have kinks; jets there depend on the requested
//! [`Side`], and a two-sided request at a genuine kink is an error.
//!
//! Besides the grammar nodes there is one derived node, [`Node::Deriv`],
//! built programmatically (never parsed) so that hypothesis checks and
//! integrands can refer to `f^(k)` as an ordinary expression.

mod kinks;
mod parse;
mod taylor;

use std::fmt;
use std::ops;
use std::sync::Arc;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
pub use taylor::{Jet, Side};
pub(crate) use taylor::Taylor;
use taylor::{integer_exponent, pow_by_squaring};

#[derive(Debug, Clone, PartialEq)]
pub enum Node {
    Const(f64),
    Var,
    Neg(Expr),
    Add(Expr, Expr),
    Sub(Expr, Expr),
    Mul(Expr, Expr),
    Div(Expr, Expr),
    Pow(Expr, f64),
    Exp(Expr),
    Log(Expr),
    Abs(Expr),
    Min(Expr, Expr),
    Max(Expr, Expr),
    /// k-th derivative of the inner expression.
    Deriv(Expr, u32),
}

/// Cheaply clonable handle to an immutable expression tree.
#[derive(Debug, Clone, PartialEq)]
pub struct Expr(Arc<Node>);

impl Expr {
    pub fn new(node: Node) -> Self {
        Expr(Arc::new(node))
    }

    pub fn node(&self) -> &Node {
        &self.0
    }

    pub fn x() -> Self {
        Expr::new(Node::Var)
    }

    /// A constant leaf. Panics on non-finite values, which the grammar cannot express.
    pub fn constant(c: f64) -> Self {
        assert!(c.is_finite(), "expression constants must be finite, got {c}");
        Expr::new(Node::Const(c))
    }

    pub fn one() -> Self {
        Expr::constant(1.0)
    }

    pub fn parse(src: &str) -> Result<Self> {
        parse::parse(src)
    }

    pub fn powf(&self, r: f64) -> Self {
        Expr::new(Node::Pow(self.clone(), r))
    }

    pub fn powi(&self, k: i64) -> Self {
        self.powf(k as f64)
    }

    pub fn exp(&self) -> Self {
        Expr::new(Node::Exp(self.clone()))
    }

    pub fn ln(&self) -> Self {
        Expr::new(Node::Log(self.clone()))
    }

    pub fn abs(&self) -> Self {
        Expr::new(Node::Abs(self.clone()))
    }

    pub fn min(&self, other: &Expr) -> Self {
        Expr::new(Node::Min(self.clone(), other.clone()))
    }

    pub fn max(&self, other: &Expr) -> Self {
        Expr::new(Node::Max(self.clone(), other.clone()))
    }

    /// The k-th derivative as an expression; `k = 0` returns `self`.
    pub fn derivative(&self, k: u32) -> Self {
        if k == 0 {
            return self.clone();
        }
        match self.node() {
            Node::Deriv(inner, j) => Expr::new(Node::Deriv(inner.clone(), j + k)),
            _ => Expr::new(Node::Deriv(self.clone(), k)),
        }
    }

    pub fn scale(&self, c: f64) -> Self {
        Expr::constant(c) * self
    }

    /// Product of `base^exp` factors; zero exponents are dropped and an empty
    /// product is the constant 1.
    pub fn product<'a>(factors: impl IntoIterator<Item = (&'a Expr, i64)>) -> Self {
        factors
            .into_iter()
            .filter(|(_, k)| *k != 0)
            .map(|(e, k)| if k == 1 { e.clone() } else { e.powi(k) })
            .reduce(|acc, f| acc * f)
            .unwrap_or_else(Expr::one)
    }

    /// True when the tree has no kinked node (`abs`, `min`, `max`).
    pub fn is_smooth(&self) -> bool {
        match self.node() {
            Node::Const(_) | Node::Var => true,
            Node::Abs(_) | Node::Min(..) | Node::Max(..) => false,
            Node::Neg(a) | Node::Pow(a, _) | Node::Exp(a) | Node::Log(a) | Node::Deriv(a, _) => {
                a.is_smooth()
            }
            Node::Add(a, b) | Node::Sub(a, b) | Node::Mul(a, b) | Node::Div(a, b) => {
                a.is_smooth() && b.is_smooth()
            }
        }
    }

    /// Pointwise evaluation. Derived nodes use right-hand derivatives.
    pub fn eval(&self, x: f64) -> Result<f64> {
        let v = match self.node() {
            Node::Const(c) => *c,
            Node::Var => x,
            Node::Neg(a) => -a.eval(x)?,
            Node::Add(a, b) => a.eval(x)? + b.eval(x)?,
            Node::Sub(a, b) => a.eval(x)? - b.eval(x)?,
            Node::Mul(a, b) => a.eval(x)? * b.eval(x)?,
            Node::Div(a, b) => {
                let (n, d) = (a.eval(x)?, b.eval(x)?);
                if d == 0.0 {
                    return Err(Error::domain(format!("division by zero at x = {x}")));
                }
                n / d
            }
            Node::Pow(a, r) => scalar_pow(a.eval(x)?, *r)?,
            Node::Exp(a) => a.eval(x)?.exp(),
            Node::Log(a) => {
                let u = a.eval(x)?;
                if u <= 0.0 {
                    return Err(Error::domain(format!("log of nonpositive value {u} at x = {x}")));
                }
                u.ln()
            }
            Node::Abs(a) => a.eval(x)?.abs(),
            Node::Min(a, b) => {
                let (u, v) = (a.eval(x)?, b.eval(x)?);
                if u <= v { u } else { v }
            }
            Node::Max(a, b) => {
                let (u, v) = (a.eval(x)?, b.eval(x)?);
                if u >= v { u } else { v }
            }
            Node::Deriv(a, k) => {
                let t = a.taylor(x, *k as usize, Side::Right)?;
                t.shift(*k as usize, 0).value()
            }
        };
        if v.is_finite() {
            Ok(v)
        } else {
            Err(Error::domain(format!("non-finite value at x = {x}")))
        }
    }

    /// Derivatives up to `order` at `x`, taken from `side`.
    pub fn jet(&self, x: f64, order: usize, side: Side) -> Result<Jet> {
        let t = self.taylor(x, order, side)?;
        let derivatives = t.into_derivatives();
        if derivatives.iter().any(|d| !d.is_finite()) {
            return Err(Error::domain(format!("non-finite derivative at x = {x}")));
        }
        Ok(Jet { anchor: x, side, derivatives })
    }

    /// Value of the k-th one-sided derivative at `x`.
    pub fn derivative_at(&self, x: f64, k: usize, side: Side) -> Result<f64> {
        Ok(self.jet(x, k, side)?.derivatives[k])
    }

    pub(crate) fn taylor(&self, x: f64, m: usize, side: Side) -> Result<Taylor> {
        let t = match self.node() {
            Node::Const(c) => Taylor::constant(*c, m),
            Node::Var => Taylor::variable(x, m),
            Node::Neg(a) => a.taylor(x, m, side)?.neg(),
            Node::Add(a, b) => a.taylor(x, m, side)?.add(&b.taylor(x, m, side)?),
            Node::Sub(a, b) => a.taylor(x, m, side)?.sub(&b.taylor(x, m, side)?),
            Node::Mul(a, b) => a.taylor(x, m, side)?.mul(&b.taylor(x, m, side)?),
            Node::Div(a, b) => a
                .taylor(x, m, side)?
                .div(&b.taylor(x, m, side)?)
                .map_err(|_| Error::domain(format!("division by zero at x = {x}")))?,
            Node::Pow(a, r) => {
                let u = a.taylor(x, m, side)?;
                match integer_exponent(*r) {
                    Some(k) => u.powi(k),
                    None => u.powf(*r),
                }
                .map_err(|e| with_location(e, x))?
            }
            Node::Exp(a) => a.taylor(x, m, side)?.exp(),
            Node::Log(a) => a.taylor(x, m, side)?.ln().map_err(|e| with_location(e, x))?,
            Node::Abs(a) => {
                let u = a.taylor(x, m, side)?;
                let s = branch_sign(&u, side, x)?;
                if s < 0.0 { u.neg() } else { u }
            }
            Node::Min(a, b) | Node::Max(a, b) => {
                let u = a.taylor(x, m, side)?;
                let v = b.taylor(x, m, side)?;
                // sign of (u - v) on the requested side picks the active branch
                let s = branch_sign(&u.sub(&v), side, x)?;
                let take_u = match self.node() {
                    Node::Min(..) => s <= 0.0,
                    _ => s >= 0.0,
                };
                if take_u { u } else { v }
            }
            Node::Deriv(a, k) => {
                let k = *k as usize;
                a.taylor(x, m + k, side)?.shift(k, m)
            }
        };
        if t.value().is_finite() {
            Ok(t)
        } else {
            Err(Error::domain(format!("non-finite value at x = {x}")))
        }
    }
}

fn with_location(e: Error, x: f64) -> Error {
    match e {
        Error::Domain(msg) => Error::Domain(format!("{msg} at x = {x}")),
        other => other,
    }
}

fn scalar_pow(u: f64, r: f64) -> Result<f64> {
    match integer_exponent(r) {
        Some(k) => {
            let p = pow_by_squaring(u, k.unsigned_abs(), 1.0, |a, b| a * b);
            if k >= 0 {
                Ok(p)
            } else if p == 0.0 {
                Err(Error::domain(format!("negative power {r} of zero")))
            } else {
                Ok(1.0 / p)
            }
        }
        None if u > 0.0 => Ok(u.powf(r)),
        None => Err(Error::domain(format!("real power {r} of nonpositive base {u}"))),
    }
}

/// Sign of a series just to the requested side of its anchor: the sign of the
/// value if nonzero, otherwise of the first nonzero coefficient times
/// `(x - x0)^j`. Zero means the series vanishes to the available order, in
/// which case either branch yields the same truncated jet.
fn branch_sign(t: &Taylor, side: Side, x: f64) -> Result<f64> {
    let Some((j, c)) = t.0.iter().copied().enumerate().find(|(_, c)| *c != 0.0) else {
        return Ok(0.0);
    };
    let right = c.signum();
    match side {
        Side::Right => Ok(right),
        Side::Left => Ok(right * Side::Left.power_sign(j)),
        Side::Two => {
            if Side::Left.power_sign(j) < 0.0 {
                Err(Error::NonDifferentiable { x })
            } else {
                Ok(right)
            }
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.node() {
            Node::Const(c) => write!(f, "{c}"),
            Node::Var => f.write_str("x"),
            Node::Neg(a) => write!(f, "-({a})"),
            Node::Add(a, b) => write!(f, "({a} + {b})"),
            Node::Sub(a, b) => write!(f, "({a} - {b})"),
            Node::Mul(a, b) => write!(f, "({a} * {b})"),
            Node::Div(a, b) => write!(f, "({a} / {b})"),
            Node::Pow(a, r) => write!(f, "pow({a}, {r})"),
            Node::Exp(a) => write!(f, "exp({a})"),
            Node::Log(a) => write!(f, "log({a})"),
            Node::Abs(a) => write!(f, "abs({a})"),
            Node::Min(a, b) => write!(f, "min({a}, {b})"),
            Node::Max(a, b) => write!(f, "max({a}, {b})"),
            Node::Deriv(a, k) => write!(f, "diff({a}, {k})"),
        }
    }
}

impl std::str::FromStr for Expr {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Expr::parse(s)
    }
}

impl Serialize for Expr {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Expr {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        Expr::parse(&s).map_err(serde::de::Error::custom)
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident, $variant:ident) => {
        impl ops::$tr<Expr> for Expr {
            type Output = Expr;
            fn $method(self, rhs: Expr) -> Expr {
                Expr::new(Node::$variant(self, rhs))
            }
        }
        impl ops::$tr<&Expr> for Expr {
            type Output = Expr;
            fn $method(self, rhs: &Expr) -> Expr {
                Expr::new(Node::$variant(self, rhs.clone()))
            }
        }
        impl ops::$tr<Expr> for &Expr {
            type Output = Expr;
            fn $method(self, rhs: Expr) -> Expr {
                Expr::new(Node::$variant(self.clone(), rhs))
            }
        }
        impl ops::$tr<&Expr> for &Expr {
            type Output = Expr;
            fn $method(self, rhs: &Expr) -> Expr {
                Expr::new(Node::$variant(self.clone(), rhs.clone()))
            }
        }
    };
}

binop!(Add, add, Add);
binop!(Sub, sub, Sub);
binop!(Mul, mul, Mul);
binop!(Div, div, Div);

impl ops::Neg for Expr {
    type Output = Expr;
    fn neg(self) -> Expr {
        Expr::new(Node::Neg(self))
    }
}

impl ops::Neg for &Expr {
    type Output = Expr;
    fn neg(self) -> Expr {
        Expr::new(Node::Neg(self.clone()))
    }
}
