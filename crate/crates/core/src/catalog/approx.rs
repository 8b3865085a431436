//! Floating-point values carried together with an absolute error bound.
//!
//! Errors propagate to first order plus the exact second-order term for
//! products, and every operation adds a rounding allowance proportional to
//! its result. The bounds are estimates, not rigorous enclosures.

use std::ops::{Add, Mul, Sub};

const ROUNDING: f64 = 4.0 * f64::EPSILON;

#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) struct Approx {
    pub value: f64,
    pub err: f64,
    /// False if any input came from an integral that hit the subdivision cap.
    pub converged: bool,
}

impl Approx {
    pub fn new(value: f64, err: f64, converged: bool) -> Self {
        Approx { value, err: err.abs(), converged }
    }

    /// A constant known to full precision.
    pub fn exact(value: f64) -> Self {
        Approx::new(value, 0.0, true)
    }

    /// A computed value with only rounding uncertainty.
    pub fn computed(value: f64) -> Self {
        Approx::new(value, 16.0 * f64::EPSILON * value.abs(), true)
    }

    fn derive(&self, value: f64, err: f64, other: Option<&Approx>) -> Self {
        let converged = self.converged && other.map_or(true, |o| o.converged);
        Approx::new(value, err + ROUNDING * value.abs(), converged)
    }

    pub fn scale(self, c: f64) -> Self {
        self.derive(c * self.value, c.abs() * self.err, None)
    }

    pub fn div(self, o: Approx) -> Self {
        let value = self.value / o.value;
        let denom = o.value.abs() - o.err;
        let err = if denom > 0.0 {
            (self.err + value.abs() * o.err) / denom
        } else {
            f64::INFINITY
        };
        self.derive(value, err, Some(&o))
    }

    pub fn powi(self, k: i32) -> Self {
        let value = self.value.powi(k);
        let err = if self.err == 0.0 {
            0.0
        } else {
            let (v, e) = (self.value.abs(), self.err);
            if k >= 0 {
                (v + e).powi(k) - v.powi(k)
            } else if v > e {
                (v - e).powi(k) - v.powi(k)
            } else {
                f64::INFINITY
            }
        };
        self.derive(value, err, None)
    }

    pub fn powf(self, r: f64) -> Self {
        let value = self.value.powf(r);
        let (v, e) = (self.value, self.err);
        let err = if e == 0.0 {
            0.0
        } else if v - e > 0.0 {
            let (lo, hi) = ((v - e).powf(r), (v + e).powf(r));
            (hi - value).abs().max((value - lo).abs())
        } else if r > 0.0 {
            (v + e).powf(r)
        } else {
            f64::INFINITY
        };
        self.derive(value, err, None)
    }

    pub fn ln(self) -> Self {
        let value = self.value.ln();
        let err = if self.err == 0.0 {
            0.0
        } else if self.value > self.err {
            (self.value / (self.value - self.err)).ln()
        } else {
            f64::INFINITY
        };
        self.derive(value, err, None)
    }
}

impl Add for Approx {
    type Output = Approx;
    fn add(self, o: Approx) -> Approx {
        self.derive(self.value + o.value, self.err + o.err, Some(&o))
    }
}

impl Sub for Approx {
    type Output = Approx;
    fn sub(self, o: Approx) -> Approx {
        self.derive(self.value - o.value, self.err + o.err, Some(&o))
    }
}

impl Mul for Approx {
    type Output = Approx;
    fn mul(self, o: Approx) -> Approx {
        let err = self.value.abs() * o.err + o.value.abs() * self.err + self.err * o.err;
        self.derive(self.value * o.value, err, Some(&o))
    }
}

impl Mul<f64> for Approx {
    type Output = Approx;
    fn mul(self, c: f64) -> Approx {
        self.scale(c)
    }
}
