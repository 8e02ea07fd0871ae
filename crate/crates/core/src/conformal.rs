//! Conformal changes of metric on the plane: radial conformal factors, the
//! tangential bitension of radial geodesics, the biharmonic profile family
//! ln(a r^2 + b r + c), and a numerical certificate that radial lines stay
//! free biminimal in the deformed metric.

use crate::error::{Error, Result};
#[allow(unused_imports)]
use crate::float::prelude::*;
use crate::geometry::AmbientSpace;
use crate::grid::{self, GridSpec};
use crate::linalg;
use alloc::vec::Vec;

/// A scalar profile f of the geodesic distance r, with first three
/// derivatives. Analytic variants evaluate exactly; tabulated profiles
/// differentiate a local cubic fit (third derivative is then only
/// piecewise constant, which the caller must tolerate).
#[derive(Debug, Clone, PartialEq)]
pub enum RadialProfile {
    Zero,
    /// f(r) = ln(a r^2 + b r + c); requires a r^2 + b r + c > 0 on the
    /// working interval.
    LogQuadratic { a: f64, b: f64, c: f64 },
    /// f(r) = slope * r.
    Linear { slope: f64 },
    Tabulated {
        grid: GridSpec,
        f: Vec<f64>,
        f1: Vec<f64>,
        f2: Vec<f64>,
        f3: Vec<f64>,
    },
}

impl RadialProfile {
    /// Tabulated profile with numerically differentiated derivatives.
    pub fn from_samples(grid: GridSpec, f: Vec<f64>) -> Result<Self> {
        if f.len() != grid.n {
            return Err(Error::DimensionMismatch);
        }
        let h = grid.h();
        let f1 = grid::deriv1_o4(&f, h);
        let f2 = grid::deriv1_o4(&f1, h);
        let f3 = grid::deriv1_o4(&f2, h);
        Ok(RadialProfile::Tabulated { grid, f, f1, f2, f3 })
    }

    pub fn f(&self, r: f64) -> f64 {
        match self {
            RadialProfile::Zero => 0.0,
            RadialProfile::LogQuadratic { a, b, c } => (a * r * r + b * r + c).ln(),
            RadialProfile::Linear { slope } => slope * r,
            RadialProfile::Tabulated { grid, f, .. } => interp_clamped(grid, f, r),
        }
    }

    pub fn f1(&self, r: f64) -> f64 {
        match self {
            RadialProfile::Zero => 0.0,
            RadialProfile::LogQuadratic { a, b, c } => {
                let q = a * r * r + b * r + c;
                (2.0 * a * r + b) / q
            }
            RadialProfile::Linear { slope } => *slope,
            RadialProfile::Tabulated { grid, f1, .. } => interp_clamped(grid, f1, r),
        }
    }

    pub fn f2(&self, r: f64) -> f64 {
        match self {
            RadialProfile::Zero => 0.0,
            RadialProfile::LogQuadratic { a, b, c } => {
                let q = a * r * r + b * r + c;
                let qp = 2.0 * a * r + b;
                2.0 * a / q - qp * qp / (q * q)
            }
            RadialProfile::Linear { .. } => 0.0,
            RadialProfile::Tabulated { grid, f2, .. } => interp_clamped(grid, f2, r),
        }
    }

    pub fn f3(&self, r: f64) -> f64 {
        match self {
            RadialProfile::Zero => 0.0,
            RadialProfile::LogQuadratic { a, b, c } => {
                let q = a * r * r + b * r + c;
                let qp = 2.0 * a * r + b;
                -6.0 * a * qp / (q * q) + 2.0 * qp * qp * qp / (q * q * q)
            }
            RadialProfile::Linear { .. } => 0.0,
            RadialProfile::Tabulated { grid, f3, .. } => interp_clamped(grid, f3, r),
        }
    }

    /// Positivity of the quadratic on [r_lo, r_hi] for the analytic family.
    pub fn valid_on(&self, r_lo: f64, r_hi: f64) -> bool {
        match self {
            RadialProfile::LogQuadratic { a, b, c } => {
                let q = |r: f64| a * r * r + b * r + c;
                if q(r_lo) <= 0.0 || q(r_hi) <= 0.0 {
                    return false;
                }
                if *a != 0.0 {
                    let v = -b / (2.0 * a);
                    if v > r_lo && v < r_hi && q(v) <= 0.0 {
                        return false;
                    }
                }
                true
            }
            _ => true,
        }
    }
}

fn interp_clamped(grid: &GridSpec, values: &[f64], r: f64) -> f64 {
    grid::interp_cubic(grid, values, r.clamp(grid.s_min, grid.s_max))
}

/// The metric of the Enneper minimal surface in isothermal coordinates:
/// (r^2 + 1)^2 (dx^2 + dy^2), i.e. the conformal factor exp(2 ln(r^2+1)).
pub fn enneper_metric() -> AmbientSpace {
    AmbientSpace::ConformalPlane {
        profile: RadialProfile::LogQuadratic {
            a: 1.0,
            b: 0.0,
            c: 1.0,
        },
    }
}

/// Levi-Civita covariant derivative of the conformal metric e^{2f} g from
/// data of the base metric:
/// nabla'_X Y = nabla_X Y + X(f) Y + Y(f) X - g(X,Y) grad f,
/// where `df` holds the coordinate partials of f at the base point and
/// `base_deriv` the value of nabla_X Y there.
pub fn conformal_covariant(
    space: &AmbientSpace,
    p: &[f64],
    df: &[f64],
    base_deriv: &[f64],
    x: &[f64],
    y: &[f64],
) -> Result<Vec<f64>> {
    let g = space.metric_at(p)?;
    let ginv = g.inverse().ok_or(Error::PointOutsideChart)?;
    let grad_f = ginv.mul_vec(df);
    let xf = linalg::dot(x, df);
    let yf = linalg::dot(y, df);
    let gxy = g.bilinear(x, y);
    let mut out = base_deriv.to_vec();
    linalg::axpy(&mut out, xf, y);
    linalg::axpy(&mut out, yf, x);
    linalg::axpy(&mut out, -gxy, &grad_f);
    Ok(out)
}

/// Scalar bitension coefficient f''' + 3 f'' f' + (f')^3 from raw
/// derivative values.
pub fn bitension_scalar(f1: f64, f2: f64, f3: f64) -> f64 {
    f3 + 3.0 * f2 * f1 + f1 * f1 * f1
}

/// Tangential bitension T(r) of a radial geodesic through the profile
/// center in the conformally flat plane. The bitension is T(r) B1 exactly,
/// so its normal component vanishes for every profile; T itself vanishes
/// exactly when the geodesic becomes biharmonic.
pub fn radial_bitension_tangential(profile: &RadialProfile, r: &[f64]) -> Vec<f64> {
    r.iter()
        .map(|&r| bitension_scalar(profile.f1(r), profile.f2(r), profile.f3(r)))
        .collect()
}

/// Residual of the biharmonicity ODE f''' + 3 f'' f' + (f')^3 = 0. Same
/// formula as `radial_bitension_tangential`; zero residual certifies the
/// radial geodesic becomes biharmonic, not merely biminimal.
pub fn biharmonic_profile_residual(profile: &RadialProfile, r: &[f64]) -> Vec<f64> {
    radial_bitension_tangential(profile, r)
}

/// Numerical certificate for a straight line mapped into the conformal
/// plane (see `free_biminimal_check_radial`).
#[derive(Debug, Clone)]
pub struct RadialCertificate {
    /// False when the line misses the profile center: the computation still
    /// runs but the theorem hypothesis is violated.
    pub certifying: bool,
    /// Max metric norm of the normal component of the bitension.
    pub normal_max: f64,
    /// Max deviation of the tangential coefficient from T(r); NaN-free but
    /// only meaningful when `certifying`.
    pub tangential_max_dev: f64,
    /// Interior grid offset the stats were taken over.
    pub offset: usize,
    pub tangential: Vec<f64>,
    pub normal_norm: Vec<f64>,
}

/// Computes the full bitension of the Euclidean-arclength line
/// p(sigma) = offset*(-sin phi, cos phi) + sigma*(cos phi, sin phi),
/// sigma on `grid`, as a map into (R^2, e^{2f} delta), with Christoffel
/// symbols obtained by finite differences of the conformal metric. The
/// bitension of such a line is purely tangential when the line passes
/// through the origin and f is radial; the tangential coefficient is then
/// T(sigma) from `radial_bitension_tangential`.
pub fn free_biminimal_check_radial(
    profile: &RadialProfile,
    angle: f64,
    perp_offset: f64,
    grid: &GridSpec,
) -> Result<RadialCertificate> {
    let space = AmbientSpace::ConformalPlane {
        profile: profile.clone(),
    };
    let certifying = perp_offset.abs() < 1e-12;
    let dir = [angle.cos(), angle.sin()];
    let base = [-angle.sin() * perp_offset, angle.cos() * perp_offset];
    let n = grid.n;
    let h = grid.h();
    let h_fd = 1e-5;

    let mut points = Vec::with_capacity(n);
    let mut tau = Vec::with_capacity(2 * n);
    for i in 0..n {
        let sigma = grid.value(i);
        let p = [base[0] + sigma * dir[0], base[1] + sigma * dir[1]];
        let gamma = space.christoffel_fd(&p, h_fd)?;
        let t = gamma.contract(&dir, &dir);
        tau.extend_from_slice(&t);
        points.push(p);
    }

    // two covariant derivatives of the tension field along the line
    let cov_deriv = |field: &[f64]| -> Result<Vec<f64>> {
        let xs: Vec<f64> = (0..n).map(|i| field[2 * i]).collect();
        let ys: Vec<f64> = (0..n).map(|i| field[2 * i + 1]).collect();
        let dxs = grid::deriv1(&xs, h);
        let dys = grid::deriv1(&ys, h);
        let mut out = Vec::with_capacity(2 * n);
        for i in 0..n {
            let gamma = space.christoffel_fd(&points[i], h_fd)?;
            let v = [field[2 * i], field[2 * i + 1]];
            let corr = gamma.contract(&dir, &v);
            out.push(dxs[i] + corr[0]);
            out.push(dys[i] + corr[1]);
        }
        Ok(out)
    };
    let dtau = cov_deriv(&tau)?;
    let ddtau = cov_deriv(&dtau)?;

    let offset = 4;
    let mut tangential = Vec::new();
    let mut normal_norm = Vec::new();
    let mut normal_max = 0.0f64;
    let mut tangential_max_dev = 0.0f64;
    for i in offset..n - offset {
        let p = &points[i];
        let tau_i = [tau[2 * i], tau[2 * i + 1]];
        let curv = space.riemann(p, &dir, &tau_i, &dir)?;
        let bitension = [ddtau[2 * i] + curv[0], ddtau[2 * i + 1] + curv[1]];
        let g = space.metric_at(p)?;
        let dir_sq = g.bilinear(&dir, &dir);
        let a = g.bilinear(&bitension, &dir) / dir_sq;
        let normal = [bitension[0] - a * dir[0], bitension[1] - a * dir[1]];
        let n_norm = g.bilinear(&normal, &normal).max(0.0).sqrt();
        normal_max = normal_max.max(n_norm);
        if certifying {
            let r = grid.value(i);
            let t_expected = bitension_scalar(profile.f1(r), profile.f2(r), profile.f3(r));
            tangential_max_dev = tangential_max_dev.max((a - t_expected).abs());
        }
        tangential.push(a);
        normal_norm.push(n_norm);
    }

    Ok(RadialCertificate {
        certifying,
        normal_max,
        tangential_max_dev,
        offset,
        tangential,
        normal_norm,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enneper_factor_values() {
        let space = enneper_metric();
        let g0 = space.metric_at(&[0.0, 0.0]).unwrap();
        assert!((g0.get(0, 0) - 1.0).abs() < 1e-15);
        let g1 = space.metric_at(&[1.0, 0.0]).unwrap();
        assert!((g1.get(0, 0) - 4.0).abs() < 1e-15, "(1+1)^2 = 4");
        assert!(g1.get(0, 1).abs() < 1e-15);
    }

    #[test]
    fn constant_factor_leaves_connection_unchanged() {
        let space = AmbientSpace::EuclideanPlane;
        let p = [0.4, -0.2];
        let x = [1.0, 2.0];
        let y = [-0.5, 1.0];
        let base = [0.7, 0.1];
        let out = conformal_covariant(&space, &p, &[0.0, 0.0], &base, &x, &y).unwrap();
        assert_eq!(out, base.to_vec());
    }

    #[test]
    fn radial_unit_tangent_picks_up_f_prime() {
        // X = Y = unit radial direction, f radial: correction is
        // 2 f' X - f' X = f' X
        let space = AmbientSpace::EuclideanPlane;
        let p = [2.0, 0.0];
        let x = [1.0, 0.0];
        let fp = 0.37;
        let df = [fp, 0.0];
        let out = conformal_covariant(&space, &p, &df, &[0.0, 0.0], &x, &x).unwrap();
        assert!((out[0] - fp).abs() < 1e-15);
        assert!(out[1].abs() < 1e-15);
    }

    #[test]
    fn orthogonal_directions_unchanged_when_f_flat_there() {
        let space = AmbientSpace::EuclideanPlane;
        let p = [1.0, 0.0];
        // X, Y orthogonal to grad f, g(X,Y) = 0, X(f) = Y(f) = 0
        let df = [0.9, 0.0];
        let x = [0.0, 1.0];
        let y = [0.0, 0.0];
        let out = conformal_covariant(&space, &p, &df, &[0.0, 0.0], &x, &y).unwrap();
        assert!(linalg::norm(&out) < 1e-15);
    }

    #[test]
    fn bitension_examples() {
        let r: Vec<f64> = (0..60).map(|i| 0.05 + i as f64 * 0.08).collect();
        let zero = radial_bitension_tangential(&RadialProfile::Zero, &r);
        assert!(zero.iter().all(|v| *v == 0.0));

        let enneper = RadialProfile::LogQuadratic {
            a: 1.0,
            b: 0.0,
            c: 1.0,
        };
        let t = radial_bitension_tangential(&enneper, &r);
        assert!(t.iter().all(|v| v.abs() < 1e-9), "ln(r^2+1) is biharmonic");

        let lin = radial_bitension_tangential(&RadialProfile::Linear { slope: 1.0 }, &r);
        assert!(lin.iter().all(|v| (v - 1.0).abs() < 1e-12), "f = r gives T = 1");
    }

    #[test]
    fn log_linear_family_member() {
        // (a,b,c) = (0,1,1): f = ln(r+1) also solves the biharmonic ODE
        let p = RadialProfile::LogQuadratic {
            a: 0.0,
            b: 1.0,
            c: 1.0,
        };
        let r: Vec<f64> = (0..40).map(|i| 0.1 + i as f64 * 0.1).collect();
        let res = biharmonic_profile_residual(&p, &r);
        assert!(res.iter().all(|v| v.abs() < 1e-9));
    }

    #[test]
    fn quadratic_profile_is_not_biharmonic() {
        // f = r^2 tabulated: residual = 12 r + 8 r^3
        let grid = GridSpec::new(0.1, 3.0, 591).unwrap();
        let f = grid.sample(|r| r * r);
        let p = RadialProfile::from_samples(grid, f).unwrap();
        for &r in &[0.5, 1.0, 2.0] {
            let res = biharmonic_profile_residual(&p, &[r])[0];
            let want = 12.0 * r + 8.0 * r * r * r;
            assert!((res - want).abs() < 1e-3 * want, "res {res} want {want}");
        }
    }

    #[test]
    fn substitution_chain_matches_x_third_over_x() {
        // f = ln x with x = r^3 + 1: T must equal x'''/x = 6/(r^3+1)
        for &r in &[0.3, 0.8, 1.7] {
            let x = r * r * r + 1.0;
            let xp = 3.0 * r * r;
            let xpp = 6.0 * r;
            let xppp = 6.0;
            let f1 = xp / x;
            let f2 = xpp / x - (xp / x) * (xp / x);
            let f3 = xppp / x - 3.0 * xp * xpp / (x * x) + 2.0 * xp * xp * xp / (x * x * x);
            let t = bitension_scalar(f1, f2, f3);
            assert!((t - xppp / x).abs() < 1e-12);
        }
    }

    #[test]
    fn certificate_flat_profile() {
        let grid = GridSpec::new(0.5, 3.0, 201).unwrap();
        let cert = free_biminimal_check_radial(&RadialProfile::Zero, 0.3, 0.0, &grid).unwrap();
        assert!(cert.certifying);
        assert!(cert.normal_max < 1e-10);
        assert!(cert.tangential_max_dev < 1e-10);
    }

    #[test]
    fn certificate_flags_offset_lines() {
        let grid = GridSpec::new(0.5, 2.0, 101).unwrap();
        let cert = free_biminimal_check_radial(
            &RadialProfile::LogQuadratic {
                a: 1.0,
                b: 0.0,
                c: 1.0,
            },
            0.0,
            0.4,
            &grid,
        )
        .unwrap();
        assert!(!cert.certifying);
    }
}
