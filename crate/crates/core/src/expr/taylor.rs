//! Truncated Taylor series arithmetic.
//!
//! A [`Taylor`] holds normalized coefficients `t[i] = f^(i)(x0) / i!`, which
//! keeps every propagation rule an O(m^2) convolution. [`Jet`] is the public
//! view with plain derivatives.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Which one-sided limit a jet is taken from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    /// Both one-sided jets must agree.
    Two,
    /// Right-hand derivatives (the `D+` convention).
    #[default]
    #[serde(alias = "D+", alias = "d+", alias = "plus")]
    Right,
    /// Left-hand derivatives (the `D-` convention).
    #[serde(alias = "D-", alias = "d-", alias = "minus")]
    Left,
}

impl Side {
    /// Sign of `(x - x0)^j` on this side, for the leading-term sign test at kinks.
    pub(crate) fn power_sign(self, j: usize) -> f64 {
        match self {
            Side::Left if j % 2 == 1 => -1.0,
            _ => 1.0,
        }
    }
}

/// Derivatives `f(x), f'(x), ..., f^(m)(x)` at an anchor, from a given side.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Jet {
    pub anchor: f64,
    pub side: Side,
    pub derivatives: Vec<f64>,
}

impl Jet {
    pub fn order(&self) -> usize {
        self.derivatives.len() - 1
    }

    pub fn value(&self) -> f64 {
        self.derivatives[0]
    }

    pub fn derivative(&self, i: usize) -> f64 {
        self.derivatives[i]
    }
}

#[derive(Debug, Clone, PartialEq)]
pub(crate) struct Taylor(pub(crate) Vec<f64>);

impl Taylor {
    pub fn constant(c: f64, order: usize) -> Self {
        let mut t = vec![0.0; order + 1];
        t[0] = c;
        Taylor(t)
    }

    pub fn variable(x: f64, order: usize) -> Self {
        let mut t = Self::constant(x, order);
        if order >= 1 {
            t.0[1] = 1.0;
        }
        t
    }

    #[cfg(test)]
    pub fn from_derivatives(derivs: &[f64]) -> Self {
        let mut fact = 1.0;
        Taylor(
            derivs
                .iter()
                .enumerate()
                .map(|(i, d)| {
                    if i > 0 {
                        fact *= i as f64;
                    }
                    d / fact
                })
                .collect(),
        )
    }

    pub fn into_derivatives(self) -> Vec<f64> {
        let mut fact = 1.0;
        self.0
            .into_iter()
            .enumerate()
            .map(|(i, t)| {
                if i > 0 {
                    fact *= i as f64;
                }
                t * fact
            })
            .collect()
    }

    pub fn order(&self) -> usize {
        self.0.len() - 1
    }

    pub fn value(&self) -> f64 {
        self.0[0]
    }

    /// Series of the k-th derivative, truncated to `order`.
    pub fn shift(&self, k: usize, order: usize) -> Self {
        // d^k/dx^k of sum t_i (x-x0)^i has coefficient t_{i+k} (i+k)!/i!
        Taylor(
            (0..=order)
                .map(|i| {
                    let falling: f64 = ((i + 1)..=(i + k)).map(|v| v as f64).product();
                    self.0[i + k] * falling
                })
                .collect(),
        )
    }

    pub fn neg(&self) -> Self {
        Taylor(self.0.iter().map(|v| -v).collect())
    }

    pub fn add(&self, o: &Self) -> Self {
        Taylor(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, o: &Self) -> Self {
        Taylor(self.0.iter().zip(&o.0).map(|(a, b)| a - b).collect())
    }

    pub fn mul(&self, o: &Self) -> Self {
        let m = self.order();
        Taylor(
            (0..=m)
                .map(|k| (0..=k).map(|j| self.0[j] * o.0[k - j]).sum())
                .collect(),
        )
    }

    pub fn div(&self, o: &Self) -> Result<Self> {
        let b0 = o.0[0];
        if b0 == 0.0 {
            return Err(Error::domain("division by zero"));
        }
        let m = self.order();
        let mut c = vec![0.0; m + 1];
        for k in 0..=m {
            let acc: f64 = (1..=k).map(|j| o.0[j] * c[k - j]).sum();
            c[k] = (self.0[k] - acc) / b0;
        }
        Ok(Taylor(c))
    }

    pub fn recip(&self) -> Result<Self> {
        Taylor::constant(1.0, self.order()).div(self)
    }

    pub fn exp(&self) -> Self {
        let m = self.order();
        let mut e = vec![0.0; m + 1];
        e[0] = self.0[0].exp();
        for k in 1..=m {
            let acc: f64 = (1..=k).map(|j| j as f64 * self.0[j] * e[k - j]).sum();
            e[k] = acc / k as f64;
        }
        Taylor(e)
    }

    pub fn ln(&self) -> Result<Self> {
        let u0 = self.0[0];
        if u0 <= 0.0 {
            return Err(Error::domain(format!("log of nonpositive value {u0}")));
        }
        let m = self.order();
        let mut l = vec![0.0; m + 1];
        l[0] = u0.ln();
        for k in 1..=m {
            let acc: f64 = (1..k).map(|j| j as f64 * l[j] * self.0[k - j]).sum();
            l[k] = (self.0[k] - acc / k as f64) / u0;
        }
        Ok(Taylor(l))
    }

    /// `u^r` for a real exponent; the base must be strictly positive.
    pub fn powf(&self, r: f64) -> Result<Self> {
        let u0 = self.0[0];
        if u0 <= 0.0 {
            return Err(Error::domain(format!(
                "real power {r} of nonpositive base {u0}"
            )));
        }
        let m = self.order();
        let mut p = vec![0.0; m + 1];
        p[0] = u0.powf(r);
        for k in 1..=m {
            let acc: f64 = (1..=k)
                .map(|j| (r * j as f64 - (k - j) as f64) * self.0[j] * p[k - j])
                .sum();
            p[k] = acc / (k as f64 * u0);
        }
        Ok(Taylor(p))
    }

    /// `u^k` for an integer exponent; any base is allowed unless `k < 0`.
    pub fn powi(&self, k: i64) -> Result<Self> {
        let pos = pow_by_squaring(self.clone(), k.unsigned_abs(), Taylor::constant(1.0, self.order()), |a, b| a.mul(b));
        if k >= 0 {
            Ok(pos)
        } else {
            pos.recip()
        }
    }

}

/// Binary exponentiation shared by scalar and series evaluation so that the
/// zeroth coefficient of a jet matches pointwise evaluation bit for bit.
pub(crate) fn pow_by_squaring<T>(base: T, mut k: u64, one: T, mul: impl Fn(&T, &T) -> T) -> T {
    let mut acc: Option<T> = None;
    let mut sq = base;
    while k > 0 {
        if k & 1 == 1 {
            acc = Some(match acc {
                None => mul(&one, &sq),
                Some(a) => mul(&a, &sq),
            });
        }
        k >>= 1;
        if k > 0 {
            sq = mul(&sq, &sq);
        }
    }
    acc.unwrap_or(one)
}

/// The integer value of an exponent that should take the integer-power path.
pub(crate) fn integer_exponent(r: f64) -> Option<i64> {
    (r.fract() == 0.0 && r.abs() <= 1e9).then_some(r as i64)
}
