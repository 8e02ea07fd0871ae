//! The construction catalog: preimage surfaces of curves under the
//! submersions of the nine ambient geometries, plus the rectifying
//! envelope of a constant-slope curve.

use super::strip::StripProfile;
use super::{ImmersedSurface, Provenance, StripSurface};
use crate::curves::{frenet, residual_planar, CurveSamples};
use crate::error::{Error, Result};
#[allow(unused_imports)]
use crate::float::prelude::*;
use crate::geometry::AmbientSpace;
use crate::grid::{self, GridSpec};
use crate::linalg;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CatalogKind {
    R3VerticalCylinder,
    R3Cone,
    R3Envelope,
    H3VerticalCylinder,
    H3GeodesicTube,
    S3LongitudePreimage,
    HopfCylinder,
    ProductS2Cylinder,
    ProductH2Cylinder,
    HeisenbergCylinder,
    Sl2rCylinder,
}

impl CatalogKind {
    pub fn all() -> [CatalogKind; 11] {
        use CatalogKind::*;
        [
            R3VerticalCylinder,
            R3Cone,
            R3Envelope,
            H3VerticalCylinder,
            H3GeodesicTube,
            S3LongitudePreimage,
            HopfCylinder,
            ProductS2Cylinder,
            ProductH2Cylinder,
            HeisenbergCylinder,
            Sl2rCylinder,
        ]
    }

    pub fn name(&self) -> &'static str {
        match self {
            CatalogKind::R3VerticalCylinder => "r3-cylinder",
            CatalogKind::R3Cone => "r3-cone",
            CatalogKind::R3Envelope => "r3-envelope",
            CatalogKind::H3VerticalCylinder => "h3-cylinder",
            CatalogKind::H3GeodesicTube => "h3-tube",
            CatalogKind::S3LongitudePreimage => "s3-longitude",
            CatalogKind::HopfCylinder => "hopf",
            CatalogKind::ProductS2Cylinder => "s2xr",
            CatalogKind::ProductH2Cylinder => "h2xr",
            CatalogKind::HeisenbergCylinder => "heisenberg",
            CatalogKind::Sl2rCylinder => "sl2r",
        }
    }

    pub fn parse(s: &str) -> Option<CatalogKind> {
        CatalogKind::all().into_iter().find(|k| k.name() == s)
    }

    pub fn ambient(&self) -> AmbientSpace {
        match self {
            CatalogKind::R3VerticalCylinder | CatalogKind::R3Cone | CatalogKind::R3Envelope => {
                AmbientSpace::Euclidean3
            }
            CatalogKind::H3VerticalCylinder | CatalogKind::H3GeodesicTube => {
                AmbientSpace::Hyperbolic3HalfSpace
            }
            CatalogKind::S3LongitudePreimage | CatalogKind::HopfCylinder => AmbientSpace::Sphere3,
            CatalogKind::ProductS2Cylinder => AmbientSpace::ProductS2xR,
            CatalogKind::ProductH2Cylinder => AmbientSpace::ProductH2xR,
            CatalogKind::HeisenbergCylinder => AmbientSpace::Heisenberg,
            CatalogKind::Sl2rCylinder => AmbientSpace::Sl2r,
        }
    }

    /// Geometry the source curve must live in.
    pub fn base_space(&self) -> AmbientSpace {
        match self {
            CatalogKind::R3VerticalCylinder
            | CatalogKind::H3VerticalCylinder
            | CatalogKind::HeisenbergCylinder => AmbientSpace::EuclideanPlane,
            CatalogKind::R3Cone
            | CatalogKind::S3LongitudePreimage
            | CatalogKind::ProductS2Cylinder => AmbientSpace::Sphere2 { radius: 1.0 },
            CatalogKind::HopfCylinder => AmbientSpace::Sphere2 { radius: 0.5 },
            CatalogKind::H3GeodesicTube
            | CatalogKind::ProductH2Cylinder
            | CatalogKind::Sl2rCylinder => AmbientSpace::HyperbolicPlane,
            CatalogKind::R3Envelope => AmbientSpace::Euclidean3,
        }
    }

    /// Multiplier shift of the curve-surface correspondence for the
    /// Riemannian-submersion kinds: the surface is biminimal w.r.t. lambda
    /// iff the curve is biminimal w.r.t. lambda + shift in the base.
    pub fn curve_shift(&self) -> Option<f64> {
        match self {
            CatalogKind::R3VerticalCylinder => Some(0.0),
            CatalogKind::HopfCylinder => Some(4.0),
            CatalogKind::HeisenbergCylinder | CatalogKind::Sl2rCylinder => Some(1.0),
            CatalogKind::ProductS2Cylinder | CatalogKind::ProductH2Cylinder => Some(0.0),
            _ => None,
        }
    }

    /// Multiplier the surface satisfies when the source curve is free
    /// biminimal in its base geometry (2c for the homothetic-submersion
    /// constructions from a space form of curvature c, minus the shift for
    /// the Riemannian-submersion cylinders).
    pub fn lambda_expected_free(&self) -> Option<f64> {
        match self {
            CatalogKind::R3VerticalCylinder | CatalogKind::R3Cone | CatalogKind::R3Envelope => {
                Some(0.0)
            }
            CatalogKind::H3VerticalCylinder | CatalogKind::H3GeodesicTube => Some(-2.0),
            CatalogKind::S3LongitudePreimage => Some(2.0),
            CatalogKind::HopfCylinder => Some(-4.0),
            CatalogKind::HeisenbergCylinder | CatalogKind::Sl2rCylinder => Some(-1.0),
            CatalogKind::ProductS2Cylinder | CatalogKind::ProductH2Cylinder => Some(0.0),
        }
    }

    fn strip_profile(&self) -> Option<StripProfile> {
        match self {
            CatalogKind::R3VerticalCylinder
            | CatalogKind::HopfCylinder
            | CatalogKind::ProductS2Cylinder
            | CatalogKind::ProductH2Cylinder
            | CatalogKind::HeisenbergCylinder
            | CatalogKind::Sl2rCylinder => Some(StripProfile::One),
            CatalogKind::R3Cone => Some(StripProfile::InvLinear { offset: 1.0 }),
            CatalogKind::H3VerticalCylinder => Some(StripProfile::Exp),
            CatalogKind::H3GeodesicTube => Some(StripProfile::Sech),
            CatalogKind::S3LongitudePreimage => Some(StripProfile::CosecS),
            CatalogKind::R3Envelope => None,
        }
    }
}

/// Fiber-direction grid of the preimage parametrization.
#[derive(Debug, Clone, Copy)]
pub struct FiberParams {
    pub s_min: f64,
    pub s_max: f64,
    pub n_s: usize,
}

impl FiberParams {
    pub fn grid(&self) -> Result<GridSpec> {
        GridSpec::new(self.s_min, self.s_max, self.n_s)
    }
}

fn base_matches(kind: CatalogKind, space: &AmbientSpace) -> bool {
    match (kind.base_space(), space) {
        (AmbientSpace::Sphere2 { radius: want }, AmbientSpace::Sphere2 { radius }) => {
            (want - radius).abs() < 1e-12
        }
        (want, got) => want == *got,
    }
}

/// Builds the preimage surface psi(t, s) of `gamma` under the submersion
/// belonging to `kind`, with t the curve parameter and s the fiber
/// arclength. The normal orientation is fixed against the construction's
/// reference normal (the horizontal lift of the curve's oriented normal;
/// the principal normal for the envelope) and recorded in provenance.
pub fn build_catalog_surface(
    kind: CatalogKind,
    gamma: &CurveSamples,
    fiber: &FiberParams,
) -> Result<ImmersedSurface> {
    if !base_matches(kind, &gamma.space) {
        return Err(Error::UnsupportedPair);
    }
    let s_grid = fiber.grid()?;
    let t_grid = gamma.grid;
    validate_fiber(kind, &s_grid)?;

    let fr = frenet(gamma)?;
    let source_curvature = fr.k1();

    let ambient = kind.ambient();
    let cd = ambient.coord_dim();
    let (nt, ns) = (t_grid.n, s_grid.n);

    // per-kind point tables
    let points = build_points(kind, gamma, &fr, &t_grid, &s_grid)?;
    debug_assert_eq!(points.len(), nt * ns * cd);

    // strip data
    let strip = kind.strip_profile().map(|profile| {
        let lambda: Vec<f64> = s_grid.values().iter().map(|&s| profile.value(s)).collect();
        let lambda_s: Vec<f64> = s_grid.values().iter().map(|&s| profile.d1(s)).collect();
        let lambda_ss: Vec<f64> = s_grid.values().iter().map(|&s| profile.d2(s)).collect();
        StripSurface {
            profile,
            lambda,
            lambda_s,
            lambda_ss,
            source_curvature: source_curvature.clone(),
        }
    });

    let mut surface = ImmersedSurface {
        space: ambient,
        t_grid,
        s_grid,
        points,
        strip,
        provenance: Provenance {
            kind: Some(kind),
            label: format!("{}", kind.name()),
            normal_sign: 1.0,
            lambda_expected: kind.lambda_expected_free(),
            curve_shift: kind.curve_shift(),
        },
    };
    surface.provenance.normal_sign = orientation_sign(kind, gamma, &fr, &surface)?;
    Ok(surface)
}

fn validate_fiber(kind: CatalogKind, s_grid: &GridSpec) -> Result<()> {
    match kind {
        CatalogKind::R3Cone => {
            if s_grid.s_min <= -1.0 + 1e-9 {
                return Err(Error::InvalidGrid);
            }
        }
        CatalogKind::S3LongitudePreimage => {
            if s_grid.s_min <= 1e-9 || s_grid.s_max >= core::f64::consts::PI - 1e-9 {
                return Err(Error::InvalidGrid);
            }
        }
        _ => {}
    }
    Ok(())
}

fn build_points(
    kind: CatalogKind,
    gamma: &CurveSamples,
    fr: &crate::curves::FrenetApparatus,
    t_grid: &GridSpec,
    s_grid: &GridSpec,
) -> Result<Vec<f64>> {
    let nt = t_grid.n;
    let svals = s_grid.values();
    let mut out = Vec::new();
    match kind {
        CatalogKind::R3VerticalCylinder => {
            for it in 0..nt {
                let p = gamma.point(it);
                for &s in &svals {
                    out.extend_from_slice(&[p[0], p[1], s]);
                }
            }
        }
        CatalogKind::R3Cone => {
            for it in 0..nt {
                let u = gamma.point(it);
                for &s in &svals {
                    out.extend_from_slice(&[(1.0 + s) * u[0], (1.0 + s) * u[1], (1.0 + s) * u[2]]);
                }
            }
        }
        CatalogKind::R3Envelope => {
            // X(t, s) = gamma(t) + s (B + T); requires k = tau
            let n = gamma.n();
            let k1 = fr.k1();
            let k2 = fr.k2().ok_or(Error::DimensionMismatch)?;
            let kmax = k1.iter().fold(0.0f64, |m, v| m.max(v.abs()));
            for i in 2..n - 2 {
                if fr.degeneracy_mask[i] {
                    return Err(Error::UnsupportedPair);
                }
                if (k1[i] - k2[i]).abs() > 1e-3 * (1.0 + kmax) {
                    return Err(Error::UnsupportedPair);
                }
            }
            for it in 0..nt {
                let p = gamma.point(it);
                let t = fr.frame(it, 0);
                let b = fr.frame(it, 2);
                for &s in &svals {
                    out.extend_from_slice(&[
                        p[0] + s * (b[0] + t[0]),
                        p[1] + s * (b[1] + t[1]),
                        p[2] + s * (b[2] + t[2]),
                    ]);
                }
            }
        }
        CatalogKind::H3VerticalCylinder => {
            for it in 0..nt {
                let p = gamma.point(it);
                for &s in &svals {
                    out.extend_from_slice(&[p[0], p[1], s.exp()]);
                }
            }
        }
        CatalogKind::H3GeodesicTube => {
            for it in 0..nt {
                let p = gamma.point(it);
                for &s in &svals {
                    out.extend_from_slice(&[p[0], p[1] * s.tanh(), p[1] / s.cosh()]);
                }
            }
        }
        CatalogKind::S3LongitudePreimage => {
            for it in 0..nt {
                let u = gamma.point(it);
                for &s in &svals {
                    out.extend_from_slice(&[
                        s.sin() * u[0],
                        s.sin() * u[1],
                        s.sin() * u[2],
                        s.cos(),
                    ]);
                }
            }
        }
        CatalogKind::HopfCylinder => {
            let lift = hopf_lift(gamma)?;
            for it in 0..nt {
                let q = &lift[4 * it..4 * it + 4];
                for &s in &svals {
                    out.extend_from_slice(&fiber_rotate(q, s));
                }
            }
        }
        CatalogKind::ProductS2Cylinder => {
            for it in 0..nt {
                let u = gamma.point(it);
                for &s in &svals {
                    out.extend_from_slice(&[u[0], u[1], u[2], s]);
                }
            }
        }
        CatalogKind::ProductH2Cylinder => {
            for it in 0..nt {
                let p = gamma.point(it);
                for &s in &svals {
                    out.extend_from_slice(&[p[0], p[1], s]);
                }
            }
        }
        CatalogKind::HeisenbergCylinder => {
            // horizontal lift: z' = x y'
            let x = gamma.coord(0);
            let y = gamma.coord(1);
            let yp = grid::deriv1_o4(&y, t_grid.h());
            let integrand: Vec<f64> = x.iter().zip(&yp).map(|(xi, ypi)| xi * ypi).collect();
            let zt = grid::cumulative_integral(&integrand, t_grid.h());
            for it in 0..nt {
                for &s in &svals {
                    out.extend_from_slice(&[x[it], y[it], zt[it] + s]);
                }
            }
        }
        CatalogKind::Sl2rCylinder => {
            // horizontal lift: x' = -y'/z for gamma = (y, z) in H^2
            let y = gamma.coord(0);
            let z = gamma.coord(1);
            let yp = grid::deriv1_o4(&y, t_grid.h());
            let integrand: Vec<f64> = yp.iter().zip(&z).map(|(ypi, zi)| -ypi / zi).collect();
            let xt = grid::cumulative_integral(&integrand, t_grid.h());
            for it in 0..nt {
                for &s in &svals {
                    out.extend_from_slice(&[xt[it] + s, y[it], z[it]]);
                }
            }
        }
    }
    Ok(out)
}

/// The Hopf map S^3 -> S^2(1/2) with z = (q0, q1), w = (q2, q3):
/// (z w-bar, (|z|^2 - |w|^2)/2).
pub fn hopf_map(q: &[f64]) -> [f64; 3] {
    [
        q[0] * q[2] + q[1] * q[3],
        q[1] * q[2] - q[0] * q[3],
        0.5 * (q[0] * q[0] + q[1] * q[1] - q[2] * q[2] - q[3] * q[3]),
    ]
}

fn hopf_jacobian(q: &[f64]) -> [[f64; 4]; 3] {
    [
        [q[2], q[3], q[0], q[1]],
        [-q[3], q[2], q[1], -q[0]],
        [q[0], q[1], -q[2], -q[3]],
    ]
}

/// Fiber direction (the vertical unit field) at q.
#[cfg_attr(not(test), allow(dead_code))]
fn hopf_vertical(q: &[f64]) -> [f64; 4] {
    [-q[1], q[0], -q[3], q[2]]
}

fn hopf_horizontal_basis(q: &[f64]) -> ([f64; 4], [f64; 4]) {
    (
        [-q[2], q[3], q[0], -q[1]],
        [-q[3], -q[2], q[1], q[0]],
    )
}

/// Solves for the horizontal vector at q mapping to `v` under the Hopf
/// differential (2x2 normal equations on the horizontal basis).
pub fn hopf_horizontal_lift_vector(q: &[f64], v: &[f64]) -> Vec<f64> {
    let jac = hopf_jacobian(q);
    let (h1, h2) = hopf_horizontal_basis(q);
    let apply = |u: &[f64; 4]| -> [f64; 3] {
        [
            linalg::dot(&jac[0], u),
            linalg::dot(&jac[1], u),
            linalg::dot(&jac[2], u),
        ]
    };
    let m1 = apply(&h1);
    let m2 = apply(&h2);
    let a11 = linalg::dot(&m1, &m1);
    let a12 = linalg::dot(&m1, &m2);
    let a22 = linalg::dot(&m2, &m2);
    let b1 = linalg::dot(&m1, v);
    let b2 = linalg::dot(&m2, v);
    let det = a11 * a22 - a12 * a12;
    let ca = (a22 * b1 - a12 * b2) / det;
    let cb = (a11 * b2 - a12 * b1) / det;
    let mut out = vec![0.0; 4];
    for i in 0..4 {
        out[i] = ca * h1[i] + cb * h2[i];
    }
    out
}

/// A preimage of a point of S^2(1/2) under the Hopf map.
pub fn hopf_preimage(target: &[f64]) -> [f64; 4] {
    let z2 = (0.5 + target[2]).max(0.0);
    let w2 = (0.5 - target[2]).max(0.0);
    if z2 >= w2 {
        let z = z2.sqrt();
        [z, 0.0, target[0] / z, -target[1] / z]
    } else {
        let w = w2.sqrt();
        [target[0] / w, target[1] / w, w, 0.0]
    }
}

/// Integrates the horizontal lift of `gamma` (on S^2(1/2)) through the
/// Hopf fibration; returns 4 components per t sample.
fn hopf_lift(gamma: &CurveSamples) -> Result<Vec<f64>> {
    let n = gamma.n();
    let h = gamma.grid.h();
    let cols: [Vec<f64>; 3] = [gamma.coord(0), gamma.coord(1), gamma.coord(2)];
    let dcols: [Vec<f64>; 3] = [
        grid::deriv1_o4(&cols[0], h),
        grid::deriv1_o4(&cols[1], h),
        grid::deriv1_o4(&cols[2], h),
    ];
    let grid_spec = gamma.grid;
    let dgamma = move |t: f64| -> [f64; 3] {
        [
            grid::interp_cubic(&grid_spec, &dcols[0], t),
            grid::interp_cubic(&grid_spec, &dcols[1], t),
            grid::interp_cubic(&grid_spec, &dcols[2], t),
        ]
    };
    let q0 = hopf_preimage(gamma.point(0));
    let traj = crate::ode::integrate_grid(
        &grid_spec,
        &q0,
        &mut |t, q, dq| {
            let v = dgamma(t);
            let lift = hopf_horizontal_lift_vector(q, &v);
            dq.copy_from_slice(&lift);
        },
        &mut |_, q| {
            let norm = linalg::norm(q);
            for v in q.iter_mut() {
                *v /= norm;
            }
            true
        },
    );
    if traj.len() != 4 * n {
        return Err(Error::DegenerateCurve { index: traj.len() / 4 });
    }
    Ok(traj)
}

/// Rotation by the fiber circle action through arclength s.
fn fiber_rotate(q: &[f64], s: f64) -> [f64; 4] {
    let (c, sn) = (s.cos(), s.sin());
    [
        q[0] * c - q[1] * sn,
        q[0] * sn + q[1] * c,
        q[2] * c - q[3] * sn,
        q[2] * sn + q[3] * c,
    ]
}

/// Reference normal of the construction at a node: the lift of the curve's
/// oriented normal (principal normal for the envelope).
fn reference_normal(
    kind: CatalogKind,
    gamma: &CurveSamples,
    fr: &crate::curves::FrenetApparatus,
    it: usize,
    s: f64,
) -> Result<Vec<f64>> {
    let base = gamma.point(it);
    match kind {
        CatalogKind::R3Envelope => Ok(fr.frame(it, 1).to_vec()),
        CatalogKind::HeisenbergCylinder => {
            let n2 = fr.frame(it, 1); // oriented normal (-y', x')
            Ok(vec![n2[0], n2[1], base[0] * n2[1]])
        }
        CatalogKind::Sl2rCylinder => {
            // lift of (a, b): (a/z) E2 + (b/z) E3 with E2 = z d/dy - d/dx,
            // E3 = z d/dz; coordinates (-a/z*1 ... ) => (-a/z, a, b)
            let n2 = fr.frame(it, 1);
            let z = base[1];
            Ok(vec![-n2[0] / z, n2[0], n2[1]])
        }
        CatalogKind::HopfCylinder => {
            let n2 = fr.frame(it, 1);
            let lift_pt = hopf_lift(gamma)?;
            let q = &lift_pt[4 * it..4 * it + 4];
            let v = hopf_horizontal_lift_vector(q, n2);
            Ok(fiber_rotate(&v, s).to_vec())
        }
        _ => {
            // generic: finite difference of the fiber embedding in the
            // direction of the curve's oriented normal
            let n2 = fr.frame(it, 1);
            let eps = 1e-6;
            let plus = embed_single(kind, &linalg::add(base, &linalg::scale(n2, eps)), s);
            let minus = embed_single(kind, &linalg::sub(base, &linalg::scale(n2, eps)), s);
            Ok(linalg::scale(&linalg::sub(&plus, &minus), 0.5 / eps))
        }
    }
}

/// Fiber embedding (base point, fiber arclength) -> ambient coordinates
/// for the kinds where the surface is a pure function of the base point.
fn embed_single(kind: CatalogKind, base: &[f64], s: f64) -> Vec<f64> {
    match kind {
        CatalogKind::R3VerticalCylinder => vec![base[0], base[1], s],
        CatalogKind::R3Cone => vec![
            (1.0 + s) * base[0],
            (1.0 + s) * base[1],
            (1.0 + s) * base[2],
        ],
        CatalogKind::H3VerticalCylinder => vec![base[0], base[1], s.exp()],
        CatalogKind::H3GeodesicTube => vec![base[0], base[1] * s.tanh(), base[1] / s.cosh()],
        CatalogKind::S3LongitudePreimage => vec![
            s.sin() * base[0],
            s.sin() * base[1],
            s.sin() * base[2],
            s.cos(),
        ],
        CatalogKind::ProductS2Cylinder => vec![base[0], base[1], base[2], s],
        CatalogKind::ProductH2Cylinder => vec![base[0], base[1], s],
        _ => unreachable!("no single-point embedding for {kind:?}"),
    }
}

/// Compares the oriented complement at a center node with the reference
/// normal; the returned sign makes shape_data reproduce the construction's
/// normal convention.
fn orientation_sign(
    kind: CatalogKind,
    gamma: &CurveSamples,
    fr: &crate::curves::FrenetApparatus,
    surface: &ImmersedSurface,
) -> Result<f64> {
    let space = &surface.space;
    let cd = space.coord_dim();
    let (it, is) = (surface.nt() / 2, surface.ns() / 2);
    let (ht, hs) = (surface.t_grid.h(), surface.s_grid.h());
    let p = surface.point(it, is);

    let mut psi_t = vec![0.0; cd];
    let mut psi_s = vec![0.0; cd];
    for c in 0..cd {
        psi_t[c] = (surface.point(it + 1, is)[c] - surface.point(it - 1, is)[c]) / (2.0 * ht);
        psi_s[c] = (surface.point(it, is + 1)[c] - surface.point(it, is - 1)[c]) / (2.0 * hs);
    }
    let g = space.metric_at(p)?;
    let v1 = space.tangent_project(p, &psi_t);
    let v2 = space.tangent_project(p, &psi_s);
    let e1 = linalg::scale(&v1, 1.0 / g.bilinear(&v1, &v1).sqrt());
    let mut w = v2.clone();
    let proj = g.bilinear(&v2, &e1);
    linalg::axpy(&mut w, -proj, &e1);
    let e2 = linalg::scale(&w, 1.0 / g.bilinear(&w, &w).sqrt());
    let raw = space.normal_complement(p, &e1, &e2)?;

    let reference = reference_normal(kind, gamma, fr, it, surface.s_grid.value(is))?;
    let inner = g.bilinear(&raw, &reference);
    if inner.abs() < 1e-10 {
        return Err(Error::RankDeficient { it, is });
    }
    Ok(if inner > 0.0 { 1.0 } else { -1.0 })
}

/// Residual pair of the curve-surface correspondence: the curve residual
/// at the shifted multiplier and the surface residual at lambda. For a
/// biminimal pair both vanish together.
#[derive(Debug, Clone, Copy)]
pub struct CorrespondencePair {
    pub lambda_surface: f64,
    pub lambda_curve: f64,
    pub curve_residual_max: f64,
    pub surface_residual_max: f64,
}

pub fn correspondence_check(
    kind: CatalogKind,
    gamma: &CurveSamples,
    lambda_surface: f64,
    fiber: &FiberParams,
) -> Result<CorrespondencePair> {
    let shift = kind.curve_shift().ok_or(Error::UnsupportedPair)?;
    let g_base = kind
        .base_space()
        .constant_curvature()
        .ok_or(Error::UnsupportedPair)?;
    let fr = frenet(gamma)?;
    let k = fr.k1();
    let lambda_curve = lambda_surface + shift;
    // the outermost k samples come from one-sided tangent stencils; drop
    // one ring so the second difference only sees central-stencil data
    let h = gamma.grid.h();
    let inner_grid = crate::grid::GridSpec::new(
        gamma.grid.s_min + h,
        gamma.grid.s_max - h,
        gamma.grid.n - 2,
    )?;
    let curve_res = residual_planar(&inner_grid, &k[1..gamma.grid.n - 1], g_base, lambda_curve)
        .max_abs();

    let surface = build_catalog_surface(kind, gamma, fiber)?;
    let shape = super::shape_data(&surface)?;
    let surf_res = super::biminimal_residual_surface(&surface, &shape, lambda_surface)?.max_abs();

    Ok(CorrespondencePair {
        lambda_surface,
        lambda_curve,
        curve_residual_max: curve_res,
        surface_residual_max: surf_res,
    })
}
