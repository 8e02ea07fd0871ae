//! Codimension-one surfaces on parameter grids: second fundamental form,
//! strip geometry of submersion preimages, biminimal residuals, and the
//! construction catalog.

mod catalog;
mod residual;
mod shape;
mod strip;

pub use catalog::{
    build_catalog_surface, correspondence_check, hopf_map, hopf_preimage, CatalogKind,
    CorrespondencePair, FiberParams,
};
pub use residual::{
    biminimal_residual_spaceform, biminimal_residual_surface, gauss_intrinsic, laplacian_of,
    max_mean_curvature,
};
pub use shape::{shape_data, ShapeData};
pub use strip::{lemma_mean_curvature, oneill_check, strip_gauss, strip_laplacian, StripProfile};

#[allow(unused_imports)]
use crate::float::prelude::*;
use crate::error::{Error, Result};
use crate::geometry::AmbientSpace;
use crate::grid::GridSpec;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

/// Derivative of each coordinate column of a grid-sampled vector field
/// along t (dir = 0) or s (dir = 1): central inside, 3-point one-sided on
/// the boundary rings. Layout (it*ns+is)*cd + c.
pub(crate) fn shape_derivative(
    points: &[f64],
    nt: usize,
    ns: usize,
    cd: usize,
    h: f64,
    dir: usize,
) -> Vec<f64> {
    let mut out = vec![0.0; nt * ns * cd];
    let stride = if dir == 0 { ns * cd } else { cd };
    let extent = if dir == 0 { nt } else { ns };
    for it in 0..nt {
        for is in 0..ns {
            let pos = if dir == 0 { it } else { is };
            for c in 0..cd {
                let i0 = (it * ns + is) * cd + c;
                out[i0] = if pos == 0 {
                    (-3.0 * points[i0] + 4.0 * points[i0 + stride] - points[i0 + 2 * stride])
                        / (2.0 * h)
                } else if pos == extent - 1 {
                    (3.0 * points[i0] - 4.0 * points[i0 - stride] + points[i0 - 2 * stride])
                        / (2.0 * h)
                } else {
                    (points[i0 + stride] - points[i0 - stride]) / (2.0 * h)
                };
            }
        }
    }
    out
}

/// Strip structure of a submersion preimage: the metric is
/// dt^2 / Lambda(s)^2 + ds^2 with the dilation constant along t.
#[derive(Debug, Clone)]
pub struct StripSurface {
    pub profile: StripProfile,
    /// Lambda sampled on the s grid.
    pub lambda: Vec<f64>,
    pub lambda_s: Vec<f64>,
    pub lambda_ss: Vec<f64>,
    /// Signed curvature of the source curve on the t grid.
    pub source_curvature: Vec<f64>,
}

/// Construction bookkeeping attached to a surface.
#[derive(Debug, Clone)]
pub struct Provenance {
    pub kind: Option<CatalogKind>,
    pub label: String,
    /// Sign flipping the raw oriented complement onto the construction's
    /// normal convention.
    pub normal_sign: f64,
    /// Multiplier the construction is expected to satisfy when the source
    /// curve is free biminimal in its base geometry.
    pub lambda_expected: Option<f64>,
    /// Multiplier shift of the curve-surface correspondence: the surface is
    /// biminimal w.r.t. lambda iff the curve w.r.t. lambda + shift.
    pub curve_shift: Option<f64>,
}

impl Default for Provenance {
    fn default() -> Self {
        Provenance {
            kind: None,
            label: String::new(),
            normal_sign: 1.0,
            lambda_expected: None,
            curve_shift: None,
        }
    }
}

/// psi(t, s) sampled on a rectangular parameter grid, node-major in t.
#[derive(Debug, Clone)]
pub struct ImmersedSurface {
    pub space: AmbientSpace,
    pub t_grid: GridSpec,
    pub s_grid: GridSpec,
    /// (it * ns + is) * coord_dim + c
    pub points: Vec<f64>,
    pub strip: Option<StripSurface>,
    pub provenance: Provenance,
}

impl ImmersedSurface {
    pub fn nt(&self) -> usize {
        self.t_grid.n
    }

    pub fn ns(&self) -> usize {
        self.s_grid.n
    }

    pub fn point(&self, it: usize, is: usize) -> &[f64] {
        let cd = self.space.coord_dim();
        let idx = (it * self.ns() + is) * cd;
        &self.points[idx..idx + cd]
    }

    /// Tabulates a coordinate map over the grids; every node must stay in
    /// the chart domain.
    pub fn from_map(
        space: AmbientSpace,
        t_grid: GridSpec,
        s_grid: GridSpec,
        map: impl Fn(f64, f64) -> Vec<f64>,
    ) -> Result<Self> {
        let cd = space.coord_dim();
        let mut points = Vec::with_capacity(t_grid.n * s_grid.n * cd);
        for it in 0..t_grid.n {
            for is in 0..s_grid.n {
                let p = map(t_grid.value(it), s_grid.value(is));
                if p.len() != cd {
                    return Err(Error::DimensionMismatch);
                }
                space.check_chart(&p)?;
                points.extend_from_slice(&p);
            }
        }
        Ok(ImmersedSurface {
            space,
            t_grid,
            s_grid,
            points,
            strip: None,
            provenance: Provenance::default(),
        })
    }
}

/// Scalar field on the (t, s) grid, possibly trimmed to interior nodes.
#[derive(Debug, Clone)]
pub struct Field2 {
    pub t_offset: usize,
    pub s_offset: usize,
    /// Retained extent in t and s.
    pub nt: usize,
    pub ns: usize,
    pub values: Vec<f64>,
}

impl Field2 {
    pub fn full(nt: usize, ns: usize, values: Vec<f64>) -> Self {
        debug_assert_eq!(values.len(), nt * ns);
        Field2 {
            t_offset: 0,
            s_offset: 0,
            nt,
            ns,
            values,
        }
    }

    /// Value by retained-grid indices.
    pub fn get(&self, it: usize, is: usize) -> f64 {
        self.values[it * self.ns + is]
    }

    pub fn max_abs(&self) -> f64 {
        self.values.iter().fold(0.0f64, |m, v| m.max(v.abs()))
    }

    pub fn rms(&self) -> f64 {
        if self.values.is_empty() {
            return 0.0;
        }
        (self.values.iter().map(|v| v * v).sum::<f64>() / self.values.len() as f64).sqrt()
    }

    /// Further interior trim by `dt`/`ds` rings on each side.
    pub fn trimmed(&self, dt: usize, ds: usize) -> Field2 {
        let nt = self.nt - 2 * dt;
        let ns = self.ns - 2 * ds;
        let mut values = Vec::with_capacity(nt * ns);
        for it in 0..nt {
            for is in 0..ns {
                values.push(self.get(it + dt, is + ds));
            }
        }
        Field2 {
            t_offset: self.t_offset + dt,
            s_offset: self.s_offset + ds,
            nt,
            ns,
            values,
        }
    }

    pub fn map(&self, f: impl Fn(f64) -> f64) -> Field2 {
        Field2 {
            t_offset: self.t_offset,
            s_offset: self.s_offset,
            nt: self.nt,
            ns: self.ns,
            values: self.values.iter().map(|v| f(*v)).collect(),
        }
    }
}
