//! Residuals of the biminimal curve equations and the least-squares
//! multiplier fit.

use super::CurvatureProfile;
use crate::error::{Error, Result};
#[allow(unused_imports)]
use crate::float::prelude::*;
use crate::grid::{self, GridSpec, InteriorProfile};
use alloc::vec::Vec;

/// Residual of the planar equation r = k'' - k^3 + k G - lambda k on
/// interior samples (two dropped at each end). A biminimal curve gives
/// max |r| -> 0 at rate O(h^2) in the sample spacing.
pub fn residual_planar(grid: &GridSpec, k: &[f64], g_curv: f64, lambda: f64) -> InteriorProfile {
    let kpp = grid::deriv2_interior(k, grid.h());
    let values = kpp
        .values
        .iter()
        .enumerate()
        .map(|(idx, kdd)| {
            let ki = k[idx + kpp.offset];
            kdd - ki * ki * ki + ki * g_curv - lambda * ki
        })
        .collect();
    InteriorProfile {
        offset: kpp.offset,
        values,
    }
}

/// Residual pair of the space-form system:
/// r1 = k'' - k^3 - k tau^2 + k c - lambda k and r2 = (k^2 tau)'.
/// Both vanish exactly when the curve is biminimal with respect to lambda
/// in the space form of curvature c. Without torsion r1 reduces to the
/// planar residual with G = c, sample for sample.
pub fn residual_space3(profile: &CurvatureProfile) -> Result<(InteriorProfile, InteriorProfile)> {
    let grid = &profile.grid;
    let h = grid.h();
    let k = &profile.k;
    let zero_tau;
    let tau: &[f64] = match &profile.tau {
        Some(t) => t,
        None => {
            zero_tau = alloc::vec![0.0; grid.n];
            &zero_tau
        }
    };
    for i in 0..grid.n {
        if tau[i] != 0.0 && k[i] <= crate::K_FLOOR {
            return Err(Error::NonpositiveCurvature {
                s: grid.value(i),
                k: k[i],
            });
        }
    }

    let kpp = grid::deriv2_interior(k, h);
    let r1 = kpp
        .values
        .iter()
        .enumerate()
        .map(|(idx, kdd)| {
            let i = idx + kpp.offset;
            let (ki, ti) = (k[i], tau[i]);
            kdd - ki * ki * ki - ki * ti * ti + ki * profile.c - profile.lambda * ki
        })
        .collect();

    let k2tau: Vec<f64> = k.iter().zip(tau).map(|(ki, ti)| ki * ki * ti).collect();
    let r2 = grid::deriv1_interior(&k2tau, h);

    Ok((
        InteriorProfile {
            offset: kpp.offset,
            values: r1,
        },
        r2,
    ))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CurveLambdaFit {
    pub lambda: f64,
    /// RMS of the post-fit residual over interior samples.
    pub rms: f64,
    pub stderr: f64,
}

/// Least-squares multiplier: minimizes sum (k'' - k^3 - k tau^2 + k c -
/// lambda k)^2 over interior samples. Errors with
/// `IndeterminateMultiplier` when sum k^2 < 1e-12 (a geodesic satisfies
/// the equation for every lambda).
pub fn fit_lambda_curve(
    grid: &GridSpec,
    k: &[f64],
    tau: Option<&[f64]>,
    curv: f64,
) -> Result<CurveLambdaFit> {
    let h = grid.h();
    let kpp = grid::deriv2_interior(k, h);
    let mut sum_k2 = 0.0;
    let mut sum_ky = 0.0;
    let mut ys = Vec::with_capacity(kpp.values.len());
    let mut ks = Vec::with_capacity(kpp.values.len());
    for (idx, kdd) in kpp.values.iter().enumerate() {
        let i = idx + kpp.offset;
        let ti = tau.map_or(0.0, |t| t[i]);
        let ki = k[i];
        let y = kdd - ki * ki * ki - ki * ti * ti + ki * curv;
        sum_k2 += ki * ki;
        sum_ky += ki * y;
        ys.push(y);
        ks.push(ki);
    }
    if sum_k2 < 1e-12 {
        return Err(Error::IndeterminateMultiplier);
    }
    let lambda = sum_ky / sum_k2;
    let m = ys.len();
    let ss: f64 = ys
        .iter()
        .zip(&ks)
        .map(|(y, ki)| {
            let r = y - lambda * ki;
            r * r
        })
        .sum();
    let rms = (ss / m as f64).sqrt();
    let stderr = if m > 1 {
        (ss / ((m - 1) as f64 * sum_k2)).sqrt()
    } else {
        f64::INFINITY
    };
    Ok(CurveLambdaFit {
        lambda,
        rms,
        stderr,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn geodesic_residual_vanishes() {
        let grid = GridSpec::new(0.0, 1.0, 101).unwrap();
        let k = alloc::vec![0.0; 101];
        let r = residual_planar(&grid, &k, 3.0, -0.7);
        assert!(r.max_abs() == 0.0);
    }

    #[test]
    fn spiral_residual_small_at_fine_grid() {
        // k = sqrt(2)/s solves k'' - k^3 = 0 exactly
        let grid = GridSpec::new(0.5, 10.0, 9501).unwrap();
        let k = grid.sample(|s| core::f64::consts::SQRT_2 / s);
        let r = residual_planar(&grid, &k, 0.0, 0.0);
        assert!(r.max_abs() < 1e-4, "max residual {}", r.max_abs());
    }

    #[test]
    fn sphere_parallel_residual_zero() {
        // k = 1, G = 1, lambda = 0: 0 - 1 + 1 - 0 = 0
        let grid = GridSpec::new(0.0, 2.0, 201).unwrap();
        let k = alloc::vec![1.0; 201];
        let r = residual_planar(&grid, &k, 1.0, 0.0);
        assert!(r.max_abs() < 1e-12);
    }

    #[test]
    fn space3_reduces_to_planar_without_torsion() {
        let grid = GridSpec::new(0.5, 3.0, 251).unwrap();
        let k = grid.sample(|s| 1.0 / s + 0.2 * s.sin());
        let profile = CurvatureProfile::planar(grid, k.clone(), -1.0, 0.5).unwrap();
        let (r1, _r2) = residual_space3(&profile).unwrap();
        let rp = residual_planar(&grid, &k, -1.0, 0.5);
        assert_eq!(r1.offset, rp.offset);
        for (a, b) in r1.values.iter().zip(&rp.values) {
            assert!((a - b).abs() == 0.0, "sample-for-sample identical");
        }
    }

    #[test]
    fn constant_helix_data_solves_space_system() {
        // constant k, tau with k^2 + tau^2 = c - lambda (algebraic oracle:
        // substitute constants into the system)
        let (k0, t0) = (0.6, 0.8);
        let c = 0.3;
        let lambda = c - (k0 * k0 + t0 * t0);
        let grid = GridSpec::new(0.0, 5.0, 301).unwrap();
        let profile = CurvatureProfile::with_torsion(
            grid,
            alloc::vec![k0; 301],
            alloc::vec![t0; 301],
            c,
            lambda,
            k0 * k0 * t0,
            1e-12,
        )
        .unwrap();
        let (r1, r2) = residual_space3(&profile).unwrap();
        assert!(r1.max_abs() < 1e-12);
        assert!(r2.max_abs() < 1e-12);
    }

    #[test]
    fn space3_guards_vanishing_k_with_torsion() {
        let grid = GridSpec::new(0.0, 1.0, 101).unwrap();
        let mut k = alloc::vec![1.0; 101];
        k[50] = 0.0;
        let profile = CurvatureProfile {
            grid,
            k,
            tau: Some(alloc::vec![1.0; 101]),
            lambda: 0.0,
            c: 0.0,
            alpha: 1.0,
            beta: 0.0,
            first_integral: 0.0,
        };
        assert!(matches!(
            residual_space3(&profile),
            Err(Error::NonpositiveCurvature { .. })
        ));
    }

    #[test]
    fn lambda_fit_spiral_is_free() {
        let grid = GridSpec::new(0.5, 10.0, 9501).unwrap();
        let k = grid.sample(|s| core::f64::consts::SQRT_2 / s);
        let fit = fit_lambda_curve(&grid, &k, None, 0.0).unwrap();
        assert!(fit.lambda.abs() < 1e-4, "lambda = {}", fit.lambda);
    }

    #[test]
    fn lambda_fit_constant_k_on_sphere() {
        let grid = GridSpec::new(0.0, 3.0, 301).unwrap();
        let k = alloc::vec![1.0; 301];
        let fit = fit_lambda_curve(&grid, &k, None, 1.0).unwrap();
        assert!(fit.lambda.abs() < 1e-6);
        assert!(fit.rms < 1e-12);
    }

    #[test]
    fn lambda_fit_geodesic_indeterminate() {
        let grid = GridSpec::new(0.0, 1.0, 101).unwrap();
        let k = alloc::vec![0.0; 101];
        assert!(matches!(
            fit_lambda_curve(&grid, &k, None, 0.0),
            Err(Error::IndeterminateMultiplier)
        ));
    }

    #[test]
    fn scaling_covariance_of_planar_equation() {
        // if k solves with (G, lambda) then rho k(rho s) solves with
        // (rho^2 G, rho^2 lambda); check residual vanishes on rescaled data
        let rho = 1.7;
        let grid = GridSpec::new(0.4, 2.0, 1601).unwrap();
        // k = sqrt(2)/s with G = 0, lambda = 0; rescaled: rho sqrt(2)/(rho s)
        let k_scaled = grid.sample(|s| rho * core::f64::consts::SQRT_2 / (rho * s));
        let r = residual_planar(&grid, &k_scaled, 0.0, 0.0);
        assert!(r.max_abs() < 2e-3, "max {}", r.max_abs());

        // a nontrivial (G, lambda): constant k0 with k0^2 = G - lambda
        let (k0, g0, l0) = (0.9, 1.5, 1.5 - 0.81);
        let k_scaled = grid.sample(|_| rho * k0);
        let r = residual_planar(&grid, &k_scaled, rho * rho * g0, rho * rho * l0);
        assert!(r.max_abs() < 1e-12);
    }
}
