//! Reparametrization of sampled curves by metric arclength.

use super::AmbientSpace;
use crate::curves::CurveSamples;
use crate::error::{Error, Result};
#[allow(unused_imports)]
use crate::float::prelude::*;
use crate::grid::{self, GridSpec};
use crate::linalg;
use alloc::vec::Vec;

/// Resamples a point sequence to a uniform arclength grid with unit metric
/// speed. Segment lengths use the metric at the (manifold-projected)
/// midpoint, second order in the input spacing; coordinates are then
/// re-sampled with local cubic interpolation against cumulative arclength.
pub fn arclength_reparam(space: &AmbientSpace, points: &[f64]) -> Result<CurveSamples> {
    let cd = space.coord_dim();
    if points.len() % cd != 0 {
        return Err(Error::DimensionMismatch);
    }
    let n = points.len() / cd;
    if n < 5 {
        return Err(Error::InvalidGrid);
    }
    let pt = |i: usize| &points[i * cd..(i + 1) * cd];

    // cumulative arclength table
    let mut cum = Vec::with_capacity(n);
    cum.push(0.0);
    for i in 0..n - 1 {
        let a = pt(i);
        let b = pt(i + 1);
        let mid_raw: Vec<f64> = a.iter().zip(b).map(|(x, y)| 0.5 * (x + y)).collect();
        let mid = space.project_point(&mid_raw);
        space.check_chart(&mid)?;
        let chord = linalg::sub(b, a);
        let len = space.norm(&mid, &chord)?;
        if len < 1e-14 {
            return Err(Error::DegenerateCurve { index: i });
        }
        cum.push(cum[i] + len);
    }
    let total = cum[n - 1];

    // resample each coordinate as a function of arclength
    let grid = GridSpec::new(0.0, total, n)?;
    let mut out = Vec::with_capacity(n * cd);
    for i in 0..n {
        let s = grid.value(i).min(total);
        let mut q = Vec::with_capacity(cd);
        for c in 0..cd {
            let col: Vec<f64> = (0..n).map(|j| points[j * cd + c]).collect();
            q.push(grid::interp_cubic_nonuniform(&cum, &col, s));
        }
        let q = space.project_point(&q);
        out.extend_from_slice(&q);
    }

    Ok(CurveSamples {
        space: space.clone(),
        grid,
        points: out,
        unit_speed: true,
    })
}

/// Max deviation of the metric speed from 1, measured with fourth-order
/// stencils so the measurement does not dominate the error.
pub fn metric_speed_error(curve: &CurveSamples) -> Result<f64> {
    let cd = curve.space.coord_dim();
    let n = curve.grid.n;
    let h = curve.grid.h();
    let mut worst = 0.0f64;
    let mut deriv = Vec::with_capacity(cd);
    for c in 0..cd {
        let col: Vec<f64> = (0..n).map(|j| curve.points[j * cd + c]).collect();
        deriv.push(grid::deriv1_o4(&col, h));
    }
    for i in 0..n {
        let p = curve.point(i);
        let v: Vec<f64> = (0..cd).map(|c| deriv[c][i]).collect();
        let v = curve.space.tangent_project(p, &v);
        let speed = curve.space.norm(p, &v)?;
        worst = worst.max((speed - 1.0).abs());
    }
    Ok(worst)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn straight_segment_resamples_uniformly() {
        // nonuniform parameter t^2 along a straight segment
        let n = 64;
        let mut pts = Vec::new();
        for i in 0..n {
            let t = (i as f64 / (n - 1) as f64).powi(2);
            pts.push(1.0 + 3.0 * t);
            pts.push(-2.0 * t);
        }
        let c = arclength_reparam(&AmbientSpace::EuclideanPlane, &pts).unwrap();
        let total = (3.0f64 * 3.0 + 2.0 * 2.0).sqrt();
        assert!((c.grid.s_max - total).abs() < 1e-9);
        assert!(metric_speed_error(&c).unwrap() < 1e-7);
    }

    #[test]
    fn circle_circumference_from_angle_samples() {
        // circle of radius 2 sampled by angle: length 4*pi
        let n = 2000;
        let mut pts = Vec::new();
        for i in 0..n {
            let th = 2.0 * core::f64::consts::PI * i as f64 / (n - 1) as f64;
            pts.push(2.0 * th.cos());
            pts.push(2.0 * th.sin());
        }
        let c = arclength_reparam(&AmbientSpace::EuclideanPlane, &pts).unwrap();
        assert!(
            (c.grid.s_max - 4.0 * core::f64::consts::PI).abs() < 1e-5,
            "total = {}",
            c.grid.s_max
        );
        assert!(metric_speed_error(&c).unwrap() < 1e-6);
    }

    #[test]
    fn vertical_line_hyperbolic_length() {
        // x = y = 0, z in [1, e]: hyperbolic length = int dz/z = 1
        let n = 1200;
        let mut pts = Vec::new();
        for i in 0..n {
            let z = 1.0 + (core::f64::consts::E - 1.0) * i as f64 / (n - 1) as f64;
            pts.extend_from_slice(&[0.0, 0.0, z]);
        }
        let c = arclength_reparam(&AmbientSpace::Hyperbolic3HalfSpace, &pts).unwrap();
        assert!((c.grid.s_max - 1.0).abs() < 1e-6, "length = {}", c.grid.s_max);
        assert!(metric_speed_error(&c).unwrap() < 1e-6);
    }

    #[test]
    fn duplicate_samples_rejected() {
        let mut pts = alloc::vec![0.0; 12];
        for i in 0..6 {
            pts[2 * i] = if i < 3 { i as f64 } else { 2.0 };
        }
        let e = arclength_reparam(&AmbientSpace::EuclideanPlane, &pts);
        assert!(matches!(e, Err(Error::DegenerateCurve { .. })));
    }
}
