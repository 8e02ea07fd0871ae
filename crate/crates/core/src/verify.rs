//! Cross-cutting verification: multiplier fits on surfaces, grid
//! convergence studies, and the per-construction report record.

use crate::error::{Error, Result};
#[allow(unused_imports)]
use crate::float::prelude::*;
use crate::grid::GridSpec;
use crate::surfaces::{laplacian_of, ImmersedSurface, ShapeData};
use alloc::string::String;
use alloc::vec::Vec;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LambdaFit {
    pub lambda: f64,
    pub stderr: f64,
    pub rms: f64,
}

/// Least-squares multiplier from Delta H = (|B|^2 - Ric(N) + lambda) H:
/// with y = Delta H - (|B|^2 - Ric(N)) H the model is y = lambda H, linear
/// in lambda with the closed-form solution sum(H y)/sum(H^2) over interior
/// nodes. Minimal surfaces make the fit indeterminate.
pub fn fit_lambda_surface(surface: &ImmersedSurface, shape: &ShapeData) -> Result<LambdaFit> {
    let h_max = shape.h.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    if h_max < 1e-10 {
        return Err(Error::IndeterminateMultiplier);
    }
    // same two-ring trim as the residuals: keep one-sided boundary noise
    // out of the second differences
    let lap = laplacian_of(surface, &shape.h)?.trimmed(2, 2);
    let mut sum_h2 = 0.0;
    let mut sum_hy = 0.0;
    let mut pairs = Vec::with_capacity(lap.values.len());
    for it in 0..lap.nt {
        for is in 0..lap.ns {
            let node = (it + lap.t_offset) * shape.ns + (is + lap.s_offset);
            let h = shape.h[node];
            let y = lap.get(it, is) - (shape.b_norm2[node] - shape.ric_n[node]) * h;
            sum_h2 += h * h;
            sum_hy += h * y;
            pairs.push((h, y));
        }
    }
    if sum_h2 < 1e-16 {
        return Err(Error::IndeterminateMultiplier);
    }
    let lambda = sum_hy / sum_h2;
    let m = pairs.len();
    let ss: f64 = pairs
        .iter()
        .map(|(h, y)| {
            let r = y - lambda * h;
            r * r
        })
        .sum();
    let rms = (ss / m as f64).sqrt();
    let stderr = if m > 1 {
        (ss / ((m - 1) as f64 * sum_h2)).sqrt()
    } else {
        f64::INFINITY
    };
    Ok(LambdaFit {
        lambda,
        stderr,
        rms,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct ConvergenceResult {
    /// Least-squares slope of log(residual) against log(h); None when the
    /// data sit at roundoff.
    pub slope: Option<f64>,
    pub at_roundoff: bool,
    /// Residuals failed to decrease with h somewhere.
    pub non_monotone: bool,
    /// (h, residual_max) per level, coarsest first.
    pub levels: Vec<(f64, f64)>,
}

/// Runs `build` on at least three grid levels (each halving h) and fits
/// the convergence slope. `build` maps a grid to the measured residual.
pub fn convergence_study(
    base: &GridSpec,
    levels: usize,
    mut build: impl FnMut(&GridSpec) -> f64,
) -> Result<ConvergenceResult> {
    if levels < 3 {
        return Err(Error::InvalidGrid);
    }
    let mut data = Vec::with_capacity(levels);
    for level in 0..levels {
        let grid = base.refined(1 << level);
        data.push((grid.h(), build(&grid)));
    }
    Ok(convergence_slope(data))
}

/// Slope fit on precomputed (h, residual) pairs.
pub fn convergence_slope(levels: Vec<(f64, f64)>) -> ConvergenceResult {
    let at_roundoff = levels.iter().all(|(_, r)| *r < 1e-12);
    let mut non_monotone = false;
    for w in levels.windows(2) {
        if w[1].1 > w[0].1 {
            non_monotone = true;
        }
    }
    if at_roundoff {
        return ConvergenceResult {
            slope: None,
            at_roundoff,
            non_monotone,
            levels,
        };
    }
    // least squares on log-log
    let pts: Vec<(f64, f64)> = levels
        .iter()
        .filter(|(_, r)| *r > 0.0)
        .map(|(h, r)| (h.ln(), r.ln()))
        .collect();
    let n = pts.len() as f64;
    let sx: f64 = pts.iter().map(|p| p.0).sum();
    let sy: f64 = pts.iter().map(|p| p.1).sum();
    let sxx: f64 = pts.iter().map(|p| p.0 * p.0).sum();
    let sxy: f64 = pts.iter().map(|p| p.0 * p.1).sum();
    let denom = n * sxx - sx * sx;
    let slope = if denom.abs() < 1e-300 {
        None
    } else {
        Some((n * sxy - sx * sy) / denom)
    };
    ConvergenceResult {
        slope,
        at_roundoff,
        non_monotone,
        levels,
    }
}

/// Halt and degeneracy flags attached to a report.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct ReportFlags {
    /// H below threshold everywhere: multiplier indeterminate.
    pub minimal: bool,
    /// A reduced-equation trajectory stopped early.
    pub halted: Option<crate::curves::HaltReason>,
    pub non_monotone: bool,
    pub at_roundoff: bool,
}

/// Per-construction verification record.
#[derive(Debug, Clone)]
pub struct ResidualReport {
    pub construction: String,
    pub grid_t: Option<GridSpec>,
    pub grid_s: Option<GridSpec>,
    pub residual_max: f64,
    pub residual_rms: f64,
    pub lambda_used: f64,
    pub lambda_fit: Option<LambdaFit>,
    pub convergence_slope: Option<f64>,
    pub flags: ReportFlags,
}

impl ResidualReport {
    pub fn new(construction: String, lambda_used: f64, residual_max: f64, residual_rms: f64) -> Self {
        debug_assert!(residual_rms <= residual_max + 1e-300);
        ResidualReport {
            construction,
            grid_t: None,
            grid_s: None,
            residual_max,
            residual_rms,
            lambda_used,
            lambda_fit: None,
            convergence_slope: None,
            flags: ReportFlags::default(),
        }
    }
}
