//! Frenet frames of sampled curves, built from covariant derivative
//! estimates with the ambient connection and Gram-Schmidt.

use super::CurveSamples;
use crate::error::{Error, Result};
#[allow(unused_imports)]
use crate::float::prelude::*;
use crate::grid;
use crate::linalg;
use alloc::vec;
use alloc::vec::Vec;

/// Per-sample orthonormal frames B1..Bm with the curvature functions
/// k1 (= k) and, in dimension 3, k2 (= tau). Samples where k1 falls below
/// the curvature floor are masked: the frame beyond B1 is undefined there
/// (set to zero), not an error.
#[derive(Debug, Clone)]
pub struct FrenetApparatus {
    pub coord_dim: usize,
    /// Frame size m = intrinsic dimension of the ambient space.
    pub m: usize,
    /// n * m * coord_dim, sample-major then frame index.
    pub frames: Vec<f64>,
    /// n * (m - 1): [k1] in dim 2, [k1, k2] in dim 3.
    pub curvatures: Vec<f64>,
    pub degeneracy_mask: Vec<bool>,
}

impl FrenetApparatus {
    pub fn frame(&self, sample: usize, idx: usize) -> &[f64] {
        let cd = self.coord_dim;
        let start = (sample * self.m + idx) * cd;
        &self.frames[start..start + cd]
    }

    pub fn curvature(&self, sample: usize, idx: usize) -> f64 {
        self.curvatures[sample * (self.m - 1) + idx]
    }

    /// The k1 profile (signed in dim 2, nonnegative in dim 3).
    pub fn k1(&self) -> Vec<f64> {
        let n = self.degeneracy_mask.len();
        (0..n).map(|i| self.curvature(i, 0)).collect()
    }

    pub fn k2(&self) -> Option<Vec<f64>> {
        if self.m < 3 {
            return None;
        }
        let n = self.degeneracy_mask.len();
        Some((0..n).map(|i| self.curvature(i, 1)).collect())
    }
}

/// Derivative of every coordinate column: n x cd values. Fourth-order
/// stencils: the boundary rings would otherwise seed an error cascade that
/// the frame derivatives amplify by 1/h per level.
fn curve_derivative(curve: &CurveSamples) -> Vec<f64> {
    let cd = curve.coord_dim();
    let n = curve.n();
    let h = curve.grid.h();
    let cols: Vec<Vec<f64>> = (0..cd)
        .map(|c| grid::deriv1_o4(&curve.coord(c), h))
        .collect();
    let mut out = vec![0.0; n * cd];
    for i in 0..n {
        for c in 0..cd {
            out[i * cd + c] = cols[c][i];
        }
    }
    out
}

fn field_derivative(field: &[f64], n: usize, cd: usize, h: f64) -> Vec<f64> {
    let mut out = vec![0.0; n * cd];
    for c in 0..cd {
        let col: Vec<f64> = (0..n).map(|i| field[i * cd + c]).collect();
        let d = grid::deriv1_o4(&col, h);
        for i in 0..n {
            out[i * cd + c] = d[i];
        }
    }
    out
}

pub fn frenet(curve: &CurveSamples) -> Result<FrenetApparatus> {
    let space = &curve.space;
    let m = space.dim();
    let cd = space.coord_dim();
    let n = curve.n();
    let h = curve.grid.h();
    if n < 5 {
        return Err(Error::InvalidGrid);
    }

    // unit tangents
    let dgamma = curve_derivative(curve);
    let mut tangents = vec![0.0; n * cd];
    for i in 0..n {
        let p = curve.point(i);
        let v = space.tangent_project(p, &dgamma[i * cd..(i + 1) * cd]);
        let t = space.normalize(p, &v)?;
        tangents[i * cd..(i + 1) * cd].copy_from_slice(&t);
    }

    // covariant acceleration nabla_T T
    let dt = field_derivative(&tangents, n, cd, h);
    let mut accel = vec![0.0; n * cd];
    for i in 0..n {
        let p = curve.point(i);
        let t = &tangents[i * cd..(i + 1) * cd];
        let a = space.covariant_from_derivative(p, t, t, &dt[i * cd..(i + 1) * cd])?;
        accel[i * cd..(i + 1) * cd].copy_from_slice(&a);
    }

    let mut frames = vec![0.0; n * m * cd];
    let mut curvatures = vec![0.0; n * (m - 1)];
    let mut mask = vec![false; n];

    if m == 2 {
        for i in 0..n {
            let p = curve.point(i);
            let t = &tangents[i * cd..(i + 1) * cd];
            let nrm = space.oriented_normal2(p, t)?;
            let k = space.inner(p, &accel[i * cd..(i + 1) * cd], &nrm)?;
            frames[(i * m) * cd..(i * m + 1) * cd].copy_from_slice(t);
            frames[(i * m + 1) * cd..(i * m + 2) * cd].copy_from_slice(&nrm);
            curvatures[i] = k;
            mask[i] = k.abs() < crate::K_FLOOR;
        }
        return Ok(FrenetApparatus {
            coord_dim: cd,
            m,
            frames,
            curvatures,
            degeneracy_mask: mask,
        });
    }

    // dimension 3: principal normal by normalization, binormal by the
    // oriented complement, torsion from nabla_T B2
    let mut normals = vec![0.0; n * cd];
    for i in 0..n {
        let p = curve.point(i);
        let a = &accel[i * cd..(i + 1) * cd];
        let k1 = space.norm(p, a)?;
        curvatures[i * 2] = k1;
        let t = &tangents[i * cd..(i + 1) * cd];
        frames[(i * m) * cd..(i * m + 1) * cd].copy_from_slice(t);
        if k1 < crate::K_FLOOR {
            mask[i] = true;
            continue;
        }
        let b2 = linalg::scale(a, 1.0 / k1);
        let b3 = space.normal_complement(p, t, &b2)?;
        frames[(i * m + 1) * cd..(i * m + 2) * cd].copy_from_slice(&b2);
        frames[(i * m + 2) * cd..(i * m + 3) * cd].copy_from_slice(&b3);
        normals[i * cd..(i + 1) * cd].copy_from_slice(&b2);
    }

    // torsion needs clean B2 neighborhoods: mask outputs whose stencil
    // touches a masked sample
    let dn = field_derivative(&normals, n, cd, h);
    for i in 0..n {
        if mask[i] {
            continue;
        }
        let stencil_masked = (i > 0 && mask[i - 1])
            || (i + 1 < n && mask[i + 1])
            || (i == 0 && n > 2 && mask[i + 2])
            || (i + 1 == n && i >= 2 && mask[i - 2]);
        if stencil_masked {
            mask[i] = true;
            continue;
        }
        let p = curve.point(i);
        let t = &tangents[i * cd..(i + 1) * cd];
        let b2 = &normals[i * cd..(i + 1) * cd];
        let nab = space.covariant_from_derivative(p, t, b2, &dn[i * cd..(i + 1) * cd])?;
        let b3 = &frames[(i * m + 2) * cd..(i * m + 3) * cd];
        curvatures[i * 2 + 1] = space.inner(p, &nab, b3)?;
    }

    Ok(FrenetApparatus {
        coord_dim: cd,
        m,
        frames,
        curvatures,
        degeneracy_mask: mask,
    })
}
