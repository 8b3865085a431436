//! Locating the points where `abs`, `min` and `max` switch branch.

use super::{Expr, Node};
use crate::interval::Interval;

/// Cells of the uniform scan grid.
const CELLS: usize = 1024;

fn switches(e: &Expr, out: &mut Vec<Expr>) {
    match e.node() {
        Node::Const(_) | Node::Var => {}
        Node::Abs(a) => {
            out.push(a.clone());
            switches(a, out);
        }
        Node::Min(a, b) | Node::Max(a, b) => {
            out.push(a - b);
            switches(a, out);
            switches(b, out);
        }
        Node::Neg(a) | Node::Pow(a, _) | Node::Exp(a) | Node::Log(a) | Node::Deriv(a, _) => switches(a, out),
        Node::Add(a, b) | Node::Sub(a, b) | Node::Mul(a, b) | Node::Div(a, b) => {
            switches(a, out);
            switches(b, out);
        }
    }
}

/// Root of `s` in `[lo, hi]` given a sign change, to the last representable bit.
fn bisect(s: &Expr, mut lo: f64, mut hi: f64, lo_negative: bool) -> f64 {
    loop {
        let mid = 0.5 * (lo + hi);
        if !(lo < mid && mid < hi) {
            return mid;
        }
        match s.eval(mid) {
            Ok(v) if v == 0.0 => return mid,
            Ok(v) if (v < 0.0) == lo_negative => lo = mid,
            Ok(_) => hi = mid,
            Err(_) => return mid,
        }
    }
}

impl Expr {
    /// Interior points of `interval` where a kinked node changes branch:
    /// sign changes of `abs` arguments and of `min`/`max` differences. They
    /// are found on a uniform 1024-cell scan and refined by bisection, so a
    /// switch function crossing zero twice within one cell is missed.
    /// Switch functions that vanish on a quarter of the scan are treated as
    /// identically zero and ignored.
    pub fn breakpoints(&self, interval: &Interval) -> Vec<f64> {
        if self.is_smooth() || interval.is_degenerate() {
            return Vec::new();
        }
        let mut fns = Vec::new();
        switches(self, &mut fns);
        let (a, w) = (interval.a(), interval.width());
        let grid: Vec<f64> =
            (0..=CELLS).map(|i| if i == CELLS { interval.b() } else { a + w * i as f64 / CELLS as f64 }).collect();

        let mut points = Vec::new();
        for s in &fns {
            let values: Vec<Option<f64>> = grid.iter().map(|&x| s.eval(x).ok()).collect();
            if values.iter().filter(|v| **v == Some(0.0)).count() > CELLS / 4 {
                continue;
            }
            for i in 0..CELLS {
                match (values[i], values[i + 1]) {
                    (Some(u), _) if u == 0.0 && i > 0 => points.push(grid[i]),
                    (Some(u), Some(v)) if u * v < 0.0 => points.push(bisect(s, grid[i], grid[i + 1], u < 0.0)),
                    _ => {}
                }
            }
        }
        points.retain(|&x| interval.a() < x && x < interval.b());
        points.sort_by(f64::total_cmp);
        points.dedup();
        points
    }
}
