use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A closed interval `[a, b]` with finite endpoints and `a <= b`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawInterval", into = "RawInterval")]
pub struct Interval {
    a: f64,
    b: f64,
}

#[derive(Serialize, Deserialize)]
struct RawInterval {
    a: f64,
    b: f64,
}

impl Interval {
    pub fn new(a: f64, b: f64) -> Result<Self> {
        if !a.is_finite() || !b.is_finite() {
            return Err(Error::InvalidInterval(format!("endpoints must be finite, got [{a}, {b}]")));
        }
        if a > b {
            return Err(Error::InvalidInterval(format!("a > b in [{a}, {b}]")));
        }
        Ok(Interval { a, b })
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    pub fn width(&self) -> f64 {
        self.b - self.a
    }

    pub fn is_degenerate(&self) -> bool {
        self.a == self.b
    }

    pub fn contains(&self, x: f64) -> bool {
        self.a <= x && x <= self.b
    }

    pub fn midpoint(&self) -> f64 {
        0.5 * (self.a + self.b)
    }

    /// Chebyshev-Lobatto points, endpoints included, in increasing order.
    pub fn chebyshev_grid(&self, points: usize) -> Vec<f64> {
        if points <= 1 || self.is_degenerate() {
            return vec![self.a; points.max(1)];
        }
        let (mid, half) = (self.midpoint(), 0.5 * self.width());
        let last = (points - 1) as f64;
        let mut grid: Vec<f64> = (0..points)
            .map(|j| mid - half * (std::f64::consts::PI * j as f64 / last).cos())
            .collect();
        grid[0] = self.a;
        grid[points - 1] = self.b;
        grid
    }
}

impl TryFrom<RawInterval> for Interval {
    type Error = Error;

    fn try_from(raw: RawInterval) -> Result<Self> {
        Interval::new(raw.a, raw.b)
    }
}

impl From<Interval> for RawInterval {
    fn from(i: Interval) -> Self {
        RawInterval { a: i.a, b: i.b }
    }
}

impl std::fmt::Display for Interval {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[{}, {}]", self.a, self.b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_reversed_and_nonfinite() {
        assert!(Interval::new(1.0, 0.0).is_err());
        assert!(Interval::new(f64::NAN, 1.0).is_err());
        assert!(Interval::new(0.0, f64::INFINITY).is_err());
        assert!(Interval::new(2.0, 2.0).unwrap().is_degenerate());
    }

    #[test]
    fn chebyshev_grid_is_sorted_and_closed() {
        let i = Interval::new(-1.0, 3.0).unwrap();
        let g = i.chebyshev_grid(1025);
        assert_eq!(g.len(), 1025);
        assert_eq!(g[0], -1.0);
        assert_eq!(g[1024], 3.0);
        assert!(g.windows(2).all(|w| w[0] <= w[1]));
        assert!((g[512] - 1.0).abs() < 1e-12);
    }
}
