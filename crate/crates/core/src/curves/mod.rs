//! Discrete curves, curvature profiles, the Frenet apparatus, curve
//! reconstruction from prescribed curvature, and the biminimal curve
//! equations with their first integrals.

mod frenet;
mod reconstruct;
mod reduced;
mod residual;

pub use frenet::{frenet, FrenetApparatus};
pub use reconstruct::{
    reconstruct_plane_curve, reconstruct_space_curve, reconstruct_surface_curve, FrameInit,
    SurfaceCurveInit,
};
pub use reduced::{
    first_integral, integrate_reduced, reduced_rhs, u_polynomial, HaltReason, ReducedTrajectory,
};
pub use residual::{fit_lambda_curve, residual_planar, residual_space3, CurveLambdaFit};

use crate::error::{Error, Result};
use crate::geometry::AmbientSpace;
use crate::grid::GridSpec;
use alloc::vec::Vec;

/// An arclength-sampled curve in one of the model geometries; `points` is
/// row-major with `space.coord_dim()` entries per sample.
#[derive(Debug, Clone, PartialEq)]
pub struct CurveSamples {
    pub space: AmbientSpace,
    pub grid: GridSpec,
    pub points: Vec<f64>,
    pub unit_speed: bool,
}

impl CurveSamples {
    pub fn coord_dim(&self) -> usize {
        self.space.coord_dim()
    }

    pub fn n(&self) -> usize {
        self.grid.n
    }

    pub fn point(&self, i: usize) -> &[f64] {
        let cd = self.coord_dim();
        &self.points[i * cd..(i + 1) * cd]
    }

    /// One coordinate as a column over the grid.
    pub fn coord(&self, c: usize) -> Vec<f64> {
        let cd = self.coord_dim();
        (0..self.n()).map(|i| self.points[i * cd + c]).collect()
    }
}

/// Sampled curvature data k(s) (and optionally tau) together with the
/// multiplier bookkeeping of the reduced equation: alpha = k^2 tau,
/// beta = c - lambda, and the first-integral constant A.
#[derive(Debug, Clone, PartialEq)]
pub struct CurvatureProfile {
    pub grid: GridSpec,
    pub k: Vec<f64>,
    pub tau: Option<Vec<f64>>,
    pub lambda: f64,
    pub c: f64,
    pub alpha: f64,
    pub beta: f64,
    pub first_integral: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CurveClass {
    /// k identically below the curvature floor: any multiplier works and a
    /// free biminimal curve is automatically biharmonic.
    Geodesic,
    /// k constant (and nonzero): free biminimal implies biharmonic.
    ConstantCurvature,
    General,
}

impl CurvatureProfile {
    /// Planar profile (no torsion): alpha = 0, beta = c - lambda.
    pub fn planar(grid: GridSpec, k: Vec<f64>, c: f64, lambda: f64) -> Result<Self> {
        if k.len() != grid.n {
            return Err(Error::DimensionMismatch);
        }
        let beta = c - lambda;
        let first_integral = mid_first_integral(&grid, &k, 0.0, beta);
        Ok(CurvatureProfile {
            grid,
            k,
            tau: None,
            lambda,
            c,
            alpha: 0.0,
            beta,
            first_integral,
        })
    }

    /// Space profile with torsion. Requires k > 0 everywhere and checks
    /// that k^2 tau is uniformly the stated alpha within `alpha_tol`.
    pub fn with_torsion(
        grid: GridSpec,
        k: Vec<f64>,
        tau: Vec<f64>,
        c: f64,
        lambda: f64,
        alpha: f64,
        alpha_tol: f64,
    ) -> Result<Self> {
        if k.len() != grid.n || tau.len() != grid.n {
            return Err(Error::DimensionMismatch);
        }
        for (i, (&ki, &ti)) in k.iter().zip(&tau).enumerate() {
            if ki <= crate::K_FLOOR {
                return Err(Error::NonpositiveCurvature {
                    s: grid.value(i),
                    k: ki,
                });
            }
            if (ki * ki * ti - alpha).abs() > alpha_tol {
                return Err(Error::DimensionMismatch);
            }
        }
        let beta = c - lambda;
        let first_integral = mid_first_integral(&grid, &k, alpha, beta);
        Ok(CurvatureProfile {
            grid,
            k,
            tau: Some(tau),
            lambda,
            c,
            alpha,
            beta,
            first_integral,
        })
    }

    /// Free-biminimal-vs-biharmonic classifier: biharmonicity additionally
    /// needs k k' = 0, i.e. constant curvature or a geodesic.
    pub fn classify(&self) -> CurveClass {
        let max_k = self.k.iter().fold(0.0f64, |m, v| m.max(v.abs()));
        if max_k < crate::K_FLOOR {
            return CurveClass::Geodesic;
        }
        let k0 = self.k[0];
        let dev = self.k.iter().fold(0.0f64, |m, v| m.max((v - k0).abs()));
        if dev < 1e-8 * (1.0 + k0.abs()) {
            CurveClass::ConstantCurvature
        } else {
            CurveClass::General
        }
    }
}

fn mid_first_integral(grid: &GridSpec, k: &[f64], alpha: f64, beta: f64) -> f64 {
    let i = grid.n / 2;
    let kp = (k[i + 1] - k[i - 1]) / (2.0 * grid.h());
    reduced::first_integral(k[i], kp, alpha, beta)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classifier_cases() {
        let grid = GridSpec::new(0.0, 1.0, 11).unwrap();
        let geo = CurvatureProfile::planar(grid, alloc::vec![0.0; 11], 0.0, 0.0).unwrap();
        assert_eq!(geo.classify(), CurveClass::Geodesic);

        let cst = CurvatureProfile::planar(grid, alloc::vec![1.0; 11], 1.0, 0.0).unwrap();
        assert_eq!(cst.classify(), CurveClass::ConstantCurvature);

        let k = grid.sample(|s| 1.0 + s);
        let gen = CurvatureProfile::planar(grid, k, 0.0, 0.0).unwrap();
        assert_eq!(gen.classify(), CurveClass::General);
    }

    #[test]
    fn torsion_profile_validates_alpha_and_positivity() {
        let grid = GridSpec::new(1.0, 2.0, 11).unwrap();
        let k = grid.sample(|s| 1.0 / s);
        let tau = grid.sample(|s| s * s); // k^2 tau = 1
        let p =
            CurvatureProfile::with_torsion(grid, k.clone(), tau, 0.0, 0.0, 1.0, 1e-12).unwrap();
        assert_eq!(p.alpha, 1.0);

        let bad_tau = grid.sample(|s| s);
        assert!(
            CurvatureProfile::with_torsion(grid, k, bad_tau, 0.0, 0.0, 1.0, 1e-12).is_err()
        );

        let kz = alloc::vec![0.0; 11];
        let tz = alloc::vec![1.0; 11];
        assert!(matches!(
            CurvatureProfile::with_torsion(grid, kz, tz, 0.0, 0.0, 0.0, 1.0),
            Err(Error::NonpositiveCurvature { .. })
        ));
    }

    #[test]
    fn beta_is_c_minus_lambda_exactly() {
        let grid = GridSpec::new(0.0, 1.0, 11).unwrap();
        let p = CurvatureProfile::planar(grid, alloc::vec![0.5; 11], -1.0, -3.0).unwrap();
        assert_eq!(p.beta, 2.0);
    }
}
