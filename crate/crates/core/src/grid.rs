//! Uniform arclength grids, finite-difference stencils, and local
//! polynomial interpolation.

use crate::error::{Error, Result};
#[allow(unused_imports)]
use crate::float::prelude::*;
use alloc::vec::Vec;

/// Uniform sample grid on an arclength interval.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    pub s_min: f64,
    pub s_max: f64,
    pub n: usize,
}

impl GridSpec {
    /// Central stencils need interior points, hence n >= 5.
    pub fn new(s_min: f64, s_max: f64, n: usize) -> Result<Self> {
        if n < 5 || !(s_max > s_min) || !s_min.is_finite() || !s_max.is_finite() {
            return Err(Error::InvalidGrid);
        }
        Ok(GridSpec { s_min, s_max, n })
    }

    pub fn h(&self) -> f64 {
        (self.s_max - self.s_min) / (self.n - 1) as f64
    }

    pub fn value(&self, i: usize) -> f64 {
        self.s_min + self.h() * i as f64
    }

    pub fn values(&self) -> Vec<f64> {
        (0..self.n).map(|i| self.value(i)).collect()
    }

    /// Same interval with (n-1)*factor + 1 samples (h divided by factor).
    pub fn refined(&self, factor: usize) -> GridSpec {
        GridSpec {
            s_min: self.s_min,
            s_max: self.s_max,
            n: (self.n - 1) * factor + 1,
        }
    }

    /// Tabulate a function on the grid.
    pub fn sample(&self, f: impl Fn(f64) -> f64) -> Vec<f64> {
        (0..self.n).map(|i| f(self.value(i))).collect()
    }
}

/// First derivative, second-order: central inside, one-sided 3-point at the
/// two ends. Output has the input length.
pub fn deriv1(values: &[f64], h: f64) -> Vec<f64> {
    let n = values.len();
    let mut d = Vec::with_capacity(n);
    for i in 0..n {
        let v = if i == 0 {
            (-3.0 * values[0] + 4.0 * values[1] - values[2]) / (2.0 * h)
        } else if i == n - 1 {
            (3.0 * values[n - 1] - 4.0 * values[n - 2] + values[n - 3]) / (2.0 * h)
        } else {
            (values[i + 1] - values[i - 1]) / (2.0 * h)
        };
        d.push(v);
    }
    d
}

/// First derivative, fourth-order five-point stencils (one-sided near the
/// ends). Used where the O(h^2) truncation of `deriv1` would eat the whole
/// error budget.
pub fn deriv1_o4(values: &[f64], h: f64) -> Vec<f64> {
    let n = values.len();
    assert!(n >= 5, "five-point stencils need n >= 5");
    let mut d = Vec::with_capacity(n);
    for i in 0..n {
        let v = if i >= 2 && i + 2 < n {
            (-values[i + 2] + 8.0 * values[i + 1] - 8.0 * values[i - 1] + values[i - 2])
                / (12.0 * h)
        } else if i < 2 {
            // forward five-point at offset i
            let c: [[f64; 5]; 2] = [
                [-25.0, 48.0, -36.0, 16.0, -3.0],
                [-3.0, -10.0, 18.0, -6.0, 1.0],
            ];
            c[i].iter()
                .zip(&values[0..5])
                .map(|(a, v)| a * v)
                .sum::<f64>()
                / (12.0 * h)
        } else {
            let j = n - 1 - i; // 0 or 1 from the right end
            let c: [[f64; 5]; 2] = [
                [-25.0, 48.0, -36.0, 16.0, -3.0],
                [-3.0, -10.0, 18.0, -6.0, 1.0],
            ];
            -c[j].iter()
                .zip(values[n - 5..n].iter().rev())
                .map(|(a, v)| a * v)
                .sum::<f64>()
                / (12.0 * h)
        };
        d.push(v);
    }
    d
}

/// Interior-only second derivative, central 3-point. Two samples are
/// dropped at each end; no one-sided second-derivative stencils.
pub fn deriv2_interior(values: &[f64], h: f64) -> InteriorProfile {
    let n = values.len();
    let mut vals = Vec::with_capacity(n.saturating_sub(4));
    for i in 2..n.saturating_sub(2) {
        vals.push((values[i + 1] - 2.0 * values[i] + values[i - 1]) / (h * h));
    }
    InteriorProfile {
        offset: 2,
        values: vals,
    }
}

/// Interior-only first derivative aligned with `deriv2_interior`.
pub fn deriv1_interior(values: &[f64], h: f64) -> InteriorProfile {
    let n = values.len();
    let mut vals = Vec::with_capacity(n.saturating_sub(4));
    for i in 2..n.saturating_sub(2) {
        vals.push((values[i + 1] - values[i - 1]) / (2.0 * h));
    }
    InteriorProfile {
        offset: 2,
        values: vals,
    }
}

/// Cumulative integral from the first sample, fourth order: each segment
/// integrates the cubic through its four nearest samples.
pub fn cumulative_integral(values: &[f64], h: f64) -> Vec<f64> {
    let n = values.len();
    assert!(n >= 4, "cumulative integral needs n >= 4");
    let mut out = Vec::with_capacity(n);
    out.push(0.0);
    for i in 0..n - 1 {
        let seg = if i == 0 {
            h / 24.0 * (9.0 * values[0] + 19.0 * values[1] - 5.0 * values[2] + values[3])
        } else if i + 2 >= n {
            h / 24.0
                * (9.0 * values[n - 1] + 19.0 * values[n - 2] - 5.0 * values[n - 3]
                    + values[n - 4])
        } else {
            h / 24.0
                * (-values[i - 1] + 13.0 * values[i] + 13.0 * values[i + 1] - values[i + 2])
        };
        out.push(out[i] + seg);
    }
    out
}

/// A profile defined on interior grid samples `offset .. n - offset`.
#[derive(Debug, Clone, PartialEq)]
pub struct InteriorProfile {
    pub offset: usize,
    pub values: Vec<f64>,
}

impl InteriorProfile {
    pub fn max_abs(&self) -> f64 {
        self.values.iter().fold(0.0, |m, v| m.max(v.abs()))
    }

    pub fn rms(&self) -> f64 {
        if self.values.is_empty() {
            return 0.0;
        }
        (self.values.iter().map(|v| v * v).sum::<f64>() / self.values.len() as f64).sqrt()
    }
}

/// Local cubic (4-point Lagrange) interpolation of samples on a uniform
/// grid. O(h^4) pointwise, no global solve, deterministic.
pub fn interp_cubic(grid: &GridSpec, values: &[f64], s: f64) -> f64 {
    debug_assert_eq!(grid.n, values.len());
    let h = grid.h();
    let x = (s - grid.s_min) / h;
    let n = grid.n;
    // window start: clamp so [j, j+3] stays in range and x sits near the middle
    let mut j = if x < 1.0 { 0.0 } else { (x - 1.0).floor() } as usize;
    if j + 3 >= n {
        j = n - 4;
    }
    let t = x - j as f64;
    let mut acc = 0.0;
    for (m, w) in lagrange4_weights(t).iter().enumerate() {
        acc += w * values[j + m];
    }
    acc
}

fn lagrange4_weights(t: f64) -> [f64; 4] {
    // nodes 0,1,2,3
    let t0 = t;
    let t1 = t - 1.0;
    let t2 = t - 2.0;
    let t3 = t - 3.0;
    [
        -t1 * t2 * t3 / 6.0,
        t0 * t2 * t3 / 2.0,
        -t0 * t1 * t3 / 2.0,
        t0 * t1 * t2 / 6.0,
    ]
}

/// Cubic interpolation on a strictly increasing non-uniform knot table.
pub fn interp_cubic_nonuniform(xs: &[f64], ys: &[f64], x: f64) -> f64 {
    debug_assert_eq!(xs.len(), ys.len());
    let n = xs.len();
    debug_assert!(n >= 4);
    // binary search for the segment
    let mut lo = 0usize;
    let mut hi = n - 1;
    while hi - lo > 1 {
        let mid = (lo + hi) / 2;
        if xs[mid] <= x {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let j = lo.saturating_sub(1).min(n - 4);
    let (xw, yw) = (&xs[j..j + 4], &ys[j..j + 4]);
    let mut acc = 0.0;
    for m in 0..4 {
        let mut w = 1.0;
        for l in 0..4 {
            if l != m {
                w *= (x - xw[l]) / (xw[m] - xw[l]);
            }
        }
        acc += w * yw[m];
    }
    acc
}
