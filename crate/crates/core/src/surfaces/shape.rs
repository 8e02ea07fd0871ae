//! Second fundamental form, mean curvature, and ambient Ricci along the
//! unit normal, all by finite differences on the parameter grid.

use super::{Field2, ImmersedSurface};
use crate::error::{Error, Result};
#[allow(unused_imports)]
use crate::float::prelude::*;
use crate::linalg;
use alloc::vec;
use alloc::vec::Vec;

/// Shape fields on the full grid. The orthonormal tangent frame is
/// e1 = psi_t / |psi_t| and e2 the Gram-Schmidt complement of psi_s; the
/// unit normal is the oriented metric complement times the construction's
/// `normal_sign`. B is symmetrized; the raw asymmetry (a discretization
/// diagnostic) is reported separately.
#[derive(Debug, Clone)]
pub struct ShapeData {
    pub nt: usize,
    pub ns: usize,
    /// Unit normal components, (it*ns+is)*cd + c.
    pub normal: Vec<f64>,
    pub b11: Vec<f64>,
    pub b12: Vec<f64>,
    pub b22: Vec<f64>,
    pub h: Vec<f64>,
    pub b_norm2: Vec<f64>,
    pub ric_n: Vec<f64>,
    pub asymmetry_max: f64,
}

impl ShapeData {
    pub fn h_field(&self) -> Field2 {
        Field2::full(self.nt, self.ns, self.h.clone())
    }

    pub fn idx(&self, it: usize, is: usize) -> usize {
        it * self.ns + is
    }
}

use super::shape_derivative as grid_derivative;

pub fn shape_data(surface: &ImmersedSurface) -> Result<ShapeData> {
    let space = &surface.space;
    if space.dim() != 3 {
        return Err(Error::DimensionMismatch);
    }
    let cd = space.coord_dim();
    let (nt, ns) = (surface.nt(), surface.ns());
    let (ht, hs) = (surface.t_grid.h(), surface.s_grid.h());
    let sign = surface.provenance.normal_sign;

    let psi_t = grid_derivative(&surface.points, nt, ns, cd, ht, 0);
    let psi_s = grid_derivative(&surface.points, nt, ns, cd, hs, 1);

    // orthonormal frame, its parameter coefficients, and the unit normal
    let mut e1 = vec![0.0; nt * ns * cd];
    let mut e2 = vec![0.0; nt * ns * cd];
    let mut normal = vec![0.0; nt * ns * cd];
    // e_i = a_i^t psi-partial_t + a_i^s psi-partial_s
    let mut coeff = vec![0.0; nt * ns * 3]; // (a1t, a2t, a2s)
    for it in 0..nt {
        for is in 0..ns {
            let node = it * ns + is;
            let p = surface.point(it, is);
            let g = space.metric_at(p)?;
            let v1 = space.tangent_project(p, &psi_t[node * cd..(node + 1) * cd]);
            let v2 = space.tangent_project(p, &psi_s[node * cd..(node + 1) * cd]);
            let n1 = g.bilinear(&v1, &v1).max(0.0).sqrt();
            if n1 < 1e-12 {
                return Err(Error::RankDeficient { it, is });
            }
            let a1t = 1.0 / n1;
            let u1 = linalg::scale(&v1, a1t);
            let proj = g.bilinear(&v2, &u1);
            let mut w = v2.clone();
            linalg::axpy(&mut w, -proj, &u1);
            let nw = g.bilinear(&w, &w).max(0.0).sqrt();
            let n2 = g.bilinear(&v2, &v2).max(0.0).sqrt();
            if nw < 1e-9 * n2.max(1.0) {
                return Err(Error::RankDeficient { it, is });
            }
            let u2 = linalg::scale(&w, 1.0 / nw);
            let mut nrm = space.normal_complement(p, &u1, &u2)?;
            for v in nrm.iter_mut() {
                *v *= sign;
            }
            e1[node * cd..(node + 1) * cd].copy_from_slice(&u1);
            e2[node * cd..(node + 1) * cd].copy_from_slice(&u2);
            normal[node * cd..(node + 1) * cd].copy_from_slice(&nrm);
            coeff[node * 3] = a1t;
            coeff[node * 3 + 1] = -proj * a1t / nw;
            coeff[node * 3 + 2] = 1.0 / nw;
        }
    }

    // parameter derivatives of the frame fields
    let de1_t = grid_derivative(&e1, nt, ns, cd, ht, 0);
    let de1_s = grid_derivative(&e1, nt, ns, cd, hs, 1);
    let de2_t = grid_derivative(&e2, nt, ns, cd, ht, 0);
    let de2_s = grid_derivative(&e2, nt, ns, cd, hs, 1);

    let mut b11 = vec![0.0; nt * ns];
    let mut b12 = vec![0.0; nt * ns];
    let mut b22 = vec![0.0; nt * ns];
    let mut h_field = vec![0.0; nt * ns];
    let mut b_norm2 = vec![0.0; nt * ns];
    let mut ric_n = vec![0.0; nt * ns];
    let mut asym = 0.0f64;

    for it in 0..nt {
        for is in 0..ns {
            let node = it * ns + is;
            let p = surface.point(it, is);
            let g = space.metric_at(p)?;
            let nrm = &normal[node * cd..(node + 1) * cd];
            let u1 = &e1[node * cd..(node + 1) * cd];
            let u2 = &e2[node * cd..(node + 1) * cd];
            let (a1t, a2t, a2s) = (coeff[node * 3], coeff[node * 3 + 1], coeff[node * 3 + 2]);

            // directional parameter derivative of field e_j along e_i
            let dir_deriv = |dt_field: &[f64], ds_field: &[f64], at: f64, a_s: f64| -> Vec<f64> {
                let mut out = vec![0.0; cd];
                for c in 0..cd {
                    out[c] =
                        at * dt_field[node * cd + c] + a_s * ds_field[node * cd + c];
                }
                out
            };

            let second_form = |deriv: &[f64], ei: &[f64], ej: &[f64]| -> Result<f64> {
                let full = if space.is_embedded() {
                    deriv.to_vec()
                } else {
                    let gamma = space.christoffel_at(p)?;
                    linalg::add(deriv, &gamma.contract(ei, ej))
                };
                Ok(g.bilinear(&full, nrm))
            };

            let d11 = dir_deriv(&de1_t, &de1_s, a1t, 0.0);
            let d12 = dir_deriv(&de2_t, &de2_s, a1t, 0.0);
            let d21 = dir_deriv(&de1_t, &de1_s, a2t, a2s);
            let d22 = dir_deriv(&de2_t, &de2_s, a2t, a2s);

            let v11 = second_form(&d11, u1, u1)?;
            let v12 = second_form(&d12, u1, u2)?;
            let v21 = second_form(&d21, u2, u1)?;
            let v22 = second_form(&d22, u2, u2)?;
            asym = asym.max((v12 - v21).abs());
            let sym12 = 0.5 * (v12 + v21);

            b11[node] = v11;
            b12[node] = sym12;
            b22[node] = v22;
            h_field[node] = 0.5 * (v11 + v22);
            b_norm2[node] = v11 * v11 + 2.0 * sym12 * sym12 + v22 * v22;
            ric_n[node] = space.ricci_normal_h(p, nrm, crate::H_FD_DEFAULT)?;
        }
    }

    Ok(ShapeData {
        nt,
        ns,
        normal,
        b11,
        b12,
        b22,
        h: h_field,
        b_norm2,
        ric_n,
        asymmetry_max: asym,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::AmbientSpace;
    use crate::grid::GridSpec;

    #[test]
    fn plane_has_vanishing_shape() {
        let t = GridSpec::new(0.0, 1.0, 21).unwrap();
        let s = GridSpec::new(0.0, 1.0, 21).unwrap();
        let surf = ImmersedSurface::from_map(AmbientSpace::Euclidean3, t, s, |tv, sv| {
            alloc::vec![tv, sv, 0.0]
        })
        .unwrap();
        let sd = shape_data(&surf).unwrap();
        assert!(sd.b_norm2.iter().all(|v| v.abs() < 1e-18));
        assert!(sd.h.iter().all(|v| v.abs() < 1e-10));
    }

    #[test]
    fn unit_cylinder_classical_shape_operator() {
        // inward normal: H = 1/2, |B|^2 = 1
        let t = GridSpec::new(0.0, core::f64::consts::TAU, 201).unwrap();
        let s = GridSpec::new(0.0, 1.0, 41).unwrap();
        let mut surf = ImmersedSurface::from_map(AmbientSpace::Euclidean3, t, s, |tv, sv| {
            alloc::vec![tv.cos(), tv.sin(), sv]
        })
        .unwrap();
        // pick the sign that makes H positive at the center node
        let sd0 = shape_data(&surf).unwrap();
        let mid = sd0.idx(100, 20);
        if sd0.h[mid] < 0.0 {
            surf.provenance.normal_sign = -1.0;
        }
        let sd = shape_data(&surf).unwrap();
        for it in 2..sd.nt - 2 {
            for is in 2..sd.ns - 2 {
                let i = sd.idx(it, is);
                assert!((sd.h[i] - 0.5).abs() < 1e-6, "H = {}", sd.h[i]);
                assert!((sd.b_norm2[i] - 1.0).abs() < 1e-5);
            }
        }
        assert!(sd.asymmetry_max < 1e-8);
    }

    #[test]
    fn rank_deficiency_detected() {
        let t = GridSpec::new(0.0, 1.0, 11).unwrap();
        let s = GridSpec::new(0.0, 1.0, 11).unwrap();
        // psi ignores s entirely
        let surf = ImmersedSurface::from_map(AmbientSpace::Euclidean3, t, s, |tv, _| {
            alloc::vec![tv, 0.0, 0.0]
        })
        .unwrap();
        assert!(matches!(
            shape_data(&surf),
            Err(Error::RankDeficient { .. })
        ));
    }
}
