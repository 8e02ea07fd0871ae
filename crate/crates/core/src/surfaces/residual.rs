//! Biminimal surface residuals: the general codimension-one equation
//! Delta H = (|B|^2 - Ric(N) + lambda) H and its space-form specialization
//! Delta H - 2H(2H^2 - G + lambda/2), plus the Laplace-Beltrami and
//! intrinsic-curvature machinery they need.

use super::shape::ShapeData;
use super::{Field2, ImmersedSurface};
use crate::error::{Error, Result};
#[allow(unused_imports)]
use crate::float::prelude::*;
use alloc::vec;
use alloc::vec::Vec;

/// Induced metric coefficients E = g(psi_t, psi_t), F = g(psi_t, psi_s),
/// G = g(psi_s, psi_s) on the full grid.
fn induced_metric(surface: &ImmersedSurface) -> Result<(Vec<f64>, Vec<f64>, Vec<f64>)> {
    let space = &surface.space;
    let cd = space.coord_dim();
    let (nt, ns) = (surface.nt(), surface.ns());
    let (ht, hs) = (surface.t_grid.h(), surface.s_grid.h());
    let psi_t = super::shape_derivative(&surface.points, nt, ns, cd, ht, 0);
    let psi_s = super::shape_derivative(&surface.points, nt, ns, cd, hs, 1);
    let mut ee = vec![0.0; nt * ns];
    let mut ff = vec![0.0; nt * ns];
    let mut gg = vec![0.0; nt * ns];
    for it in 0..nt {
        for is in 0..ns {
            let node = it * ns + is;
            let p = surface.point(it, is);
            let g = space.metric_at(p)?;
            let vt = space.tangent_project(p, &psi_t[node * cd..(node + 1) * cd]);
            let vs = space.tangent_project(p, &psi_s[node * cd..(node + 1) * cd]);
            ee[node] = g.bilinear(&vt, &vt);
            ff[node] = g.bilinear(&vt, &vs);
            gg[node] = g.bilinear(&vs, &vs);
        }
    }
    Ok((ee, ff, gg))
}

fn full_grid_deriv(values: &[f64], nt: usize, ns: usize, h: f64, dir: usize) -> Vec<f64> {
    super::shape_derivative(values, nt, ns, 1, h, dir)
}

/// General two-dimensional Laplace-Beltrami of a full-grid scalar field via
/// the divergence form (1/sqrt g) d_a (sqrt g g^{ab} d_b u) of the induced
/// metric; two boundary rings dropped.
pub fn laplace_beltrami(surface: &ImmersedSurface, field: &[f64]) -> Result<Field2> {
    let (nt, ns) = (surface.nt(), surface.ns());
    debug_assert_eq!(field.len(), nt * ns);
    let (ht, hs) = (surface.t_grid.h(), surface.s_grid.h());
    let (ee, ff, gg) = induced_metric(surface)?;

    let u_t = full_grid_deriv(field, nt, ns, ht, 0);
    let u_s = full_grid_deriv(field, nt, ns, hs, 1);

    let mut flux_t = vec![0.0; nt * ns];
    let mut flux_s = vec![0.0; nt * ns];
    let mut sqrt_det = vec![0.0; nt * ns];
    for node in 0..nt * ns {
        let det = ee[node] * gg[node] - ff[node] * ff[node];
        if det <= 0.0 {
            return Err(Error::RankDeficient {
                it: node / ns,
                is: node % ns,
            });
        }
        let sd = det.sqrt();
        sqrt_det[node] = sd;
        // inverse metric: [G, -F; -F, E]/det
        flux_t[node] = sd * (gg[node] * u_t[node] - ff[node] * u_s[node]) / det;
        flux_s[node] = sd * (ee[node] * u_s[node] - ff[node] * u_t[node]) / det;
    }
    let dflux_t = full_grid_deriv(&flux_t, nt, ns, ht, 0);
    let dflux_s = full_grid_deriv(&flux_s, nt, ns, hs, 1);

    let off = 2;
    let mut values = Vec::with_capacity((nt - 2 * off) * (ns - 2 * off));
    for it in off..nt - off {
        for is in off..ns - off {
            let node = it * ns + is;
            values.push((dflux_t[node] + dflux_s[node]) / sqrt_det[node]);
        }
    }
    Ok(Field2 {
        t_offset: off,
        s_offset: off,
        nt: nt - 2 * off,
        ns: ns - 2 * off,
        values,
    })
}

/// Laplacian of a full-grid field with the operator appropriate to the
/// surface: the strip form when the surface carries a submersion strip,
/// the general induced-metric Laplace-Beltrami otherwise.
pub fn laplacian_of(surface: &ImmersedSurface, field: &[f64]) -> Result<Field2> {
    match &surface.strip {
        Some(strip) => Ok(super::strip::strip_laplacian(
            &strip.profile,
            &surface.t_grid,
            &surface.s_grid,
            field,
        )),
        None => laplace_beltrami(surface, field),
    }
}

/// Residual of Delta H - (|B|^2 - Ric(N) + lambda) H on interior nodes.
/// The Laplacian is trimmed two extra rings: the shape fields carry
/// one-sided-stencil errors on the outermost rings, and second differences
/// amplify those by 1/h^2 instead of averaging them away.
pub fn biminimal_residual_surface(
    surface: &ImmersedSurface,
    shape: &ShapeData,
    lambda: f64,
) -> Result<Field2> {
    let lap = laplacian_of(surface, &shape.h)?.trimmed(2, 2);
    let ns_full = shape.ns;
    let mut values = Vec::with_capacity(lap.values.len());
    for it in 0..lap.nt {
        for is in 0..lap.ns {
            let node = (it + lap.t_offset) * ns_full + (is + lap.s_offset);
            let rhs = (shape.b_norm2[node] - shape.ric_n[node] + lambda) * shape.h[node];
            values.push(lap.get(it, is) - rhs);
        }
    }
    Ok(Field2 {
        t_offset: lap.t_offset,
        s_offset: lap.s_offset,
        nt: lap.nt,
        ns: lap.ns,
        values,
    })
}

/// Space-form specialization Delta H - 2H(2H^2 - G + lambda/2) with the
/// intrinsic Gauss curvature obtained from the shape data through the
/// Gauss equation G = c + det B. Requires a constant-curvature ambient.
/// Agreement with `biminimal_residual_surface` cross-validates the
/// identity |B|^2 = 4H^2 - s + 2c at n = 2 together with Ric(N) = 2c.
pub fn biminimal_residual_spaceform(
    surface: &ImmersedSurface,
    shape: &ShapeData,
    lambda: f64,
) -> Result<Field2> {
    let c = match surface.space.constant_curvature() {
        Some(c) if surface.space.dim() == 3 => c,
        _ => return Err(Error::NotSpaceForm),
    };
    let lap = laplacian_of(surface, &shape.h)?.trimmed(2, 2);
    let ns_full = shape.ns;
    let mut values = Vec::with_capacity(lap.values.len());
    for it in 0..lap.nt {
        for is in 0..lap.ns {
            let node = (it + lap.t_offset) * ns_full + (is + lap.s_offset);
            let h = shape.h[node];
            let det_b = shape.b11[node] * shape.b22[node] - shape.b12[node] * shape.b12[node];
            let g_intr = c + det_b;
            values.push(lap.get(it, is) - 2.0 * h * (2.0 * h * h - g_intr + 0.5 * lambda));
        }
    }
    Ok(Field2 {
        t_offset: lap.t_offset,
        s_offset: lap.s_offset,
        nt: lap.nt,
        ns: lap.ns,
        values,
    })
}

/// Intrinsic Gauss curvature of the induced metric by the Brioschi
/// formula, independent of the second fundamental form. Diagnostic route:
/// comparing it with c + det B checks the Gauss equation numerically at
/// O(h^2).
pub fn gauss_intrinsic(surface: &ImmersedSurface) -> Result<Field2> {
    let (nt, ns) = (surface.nt(), surface.ns());
    let (ht, hs) = (surface.t_grid.h(), surface.s_grid.h());
    let (ee, ff, gg) = induced_metric(surface)?;

    let e_t = full_grid_deriv(&ee, nt, ns, ht, 0);
    let e_s = full_grid_deriv(&ee, nt, ns, hs, 1);
    let f_t = full_grid_deriv(&ff, nt, ns, ht, 0);
    let f_s = full_grid_deriv(&ff, nt, ns, hs, 1);
    let g_t = full_grid_deriv(&gg, nt, ns, ht, 0);
    let g_s = full_grid_deriv(&gg, nt, ns, hs, 1);
    let e_ss = full_grid_deriv(&e_s, nt, ns, hs, 1);
    let g_tt = full_grid_deriv(&g_t, nt, ns, ht, 0);
    let f_ts = full_grid_deriv(&f_t, nt, ns, hs, 1);

    let det3 = |m: [[f64; 3]; 3]| -> f64 {
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    };

    let off = 2;
    let mut values = Vec::with_capacity((nt - 2 * off) * (ns - 2 * off));
    for it in off..nt - off {
        for is in off..ns - off {
            let n = it * ns + is;
            let m1 = [
                [
                    -0.5 * e_ss[n] + f_ts[n] - 0.5 * g_tt[n],
                    0.5 * e_t[n],
                    f_t[n] - 0.5 * e_s[n],
                ],
                [f_s[n] - 0.5 * g_t[n], ee[n], ff[n]],
                [0.5 * g_s[n], ff[n], gg[n]],
            ];
            let m2 = [
                [0.0, 0.5 * e_s[n], 0.5 * g_t[n]],
                [0.5 * e_s[n], ee[n], ff[n]],
                [0.5 * g_t[n], ff[n], gg[n]],
            ];
            let det = ee[n] * gg[n] - ff[n] * ff[n];
            values.push((det3(m1) - det3(m2)) / (det * det));
        }
    }
    Ok(Field2 {
        t_offset: off,
        s_offset: off,
        nt: nt - 2 * off,
        ns: ns - 2 * off,
        values,
    })
}

/// Max |H| over the full grid; used to flag minimal surfaces.
pub fn max_mean_curvature(shape: &ShapeData) -> f64 {
    shape.h.iter().fold(0.0f64, |m, v| m.max(v.abs()))
}
