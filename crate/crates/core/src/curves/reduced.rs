//! The reduced curvature equation k'' = k^3 + alpha^2/k^3 - beta k, its
//! first integral, and the cubic (u')^2 = P(u) obtained from u = k^2.

use super::CurvatureProfile;
use crate::error::{Error, Result};
use crate::grid::GridSpec;
use alloc::vec::Vec;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HaltReason {
    /// k reached the curvature floor while alpha != 0 (singular term).
    CurvatureUnderflow,
    /// |k| or |k'| exceeded the blow-up ceiling.
    Blowup,
}

/// Right-hand side of k'' = k^3 + alpha^2/k^3 - beta k. With alpha = 0 the
/// singular term is absent and any k is admissible; otherwise k must stay
/// above the floor.
pub fn reduced_rhs(k: f64, alpha: f64, beta: f64) -> Result<f64> {
    if alpha != 0.0 && k <= crate::K_FLOOR {
        return Err(Error::CurvatureUnderflow { k });
    }
    let singular = if alpha == 0.0 {
        0.0
    } else {
        alpha * alpha / (k * k * k)
    };
    Ok(k * k * k + singular - beta * k)
}

/// First integral A = (k')^2 - k^4/2 + alpha^2/k^2 + beta k^2, conserved
/// along solutions of the reduced equation.
pub fn first_integral(k: f64, kp: f64, alpha: f64, beta: f64) -> f64 {
    let singular = if alpha == 0.0 { 0.0 } else { alpha * alpha / (k * k) };
    kp * kp - 0.5 * k * k * k * k + singular + beta * k * k
}

/// Coefficients [2, -4 beta, 4 A, -4 alpha^2] of the cubic P with
/// (u')^2 = P(u) for u = k^2, degree 3 down to 0.
pub fn u_polynomial(alpha: f64, beta: f64, a: f64) -> [f64; 4] {
    [2.0, -4.0 * beta, 4.0 * a, -4.0 * alpha * alpha]
}

/// A fixed-step RK4 trajectory of the reduced equation. `k`/`k_prime` hold
/// however many samples were completed: a halted integration returns the
/// partial trajectory with its halt reason rather than an error.
#[derive(Debug, Clone)]
pub struct ReducedTrajectory {
    pub grid: GridSpec,
    pub alpha: f64,
    pub beta: f64,
    pub k: Vec<f64>,
    pub k_prime: Vec<f64>,
    /// First integral at the initial sample.
    pub a0: f64,
    /// max_i |A(s_i) - A(s_0)| over the retained samples.
    pub drift: f64,
    pub halt: Option<HaltReason>,
}

impl ReducedTrajectory {
    pub fn len(&self) -> usize {
        self.k.len()
    }

    pub fn is_empty(&self) -> bool {
        self.k.is_empty()
    }

    pub fn first_integral_at(&self, i: usize) -> f64 {
        first_integral(self.k[i], self.k_prime[i], self.alpha, self.beta)
    }

    /// Max |(u')^2 - P(u)| along the trajectory with u = k^2 and
    /// u' = 2 k k' taken from the integrated state.
    pub fn u_consistency_max(&self) -> f64 {
        let p = u_polynomial(self.alpha, self.beta, self.a0);
        let mut worst = 0.0f64;
        for i in 0..self.len() {
            let u = self.k[i] * self.k[i];
            let up = 2.0 * self.k[i] * self.k_prime[i];
            let pu = ((p[0] * u + p[1]) * u + p[2]) * u + p[3];
            worst = worst.max((up * up - pu).abs());
        }
        worst
    }

    /// Packages the trajectory as a planar curvature profile in a space of
    /// constant curvature c, with lambda = c - beta. Only complete
    /// trajectories (no halt) convert.
    pub fn into_profile(self, c: f64) -> Result<CurvatureProfile> {
        if self.halt.is_some() || self.len() != self.grid.n {
            return Err(Error::InvalidGrid);
        }
        Ok(CurvatureProfile {
            grid: self.grid,
            k: self.k,
            tau: None,
            lambda: c - self.beta,
            c,
            alpha: self.alpha,
            beta: self.beta,
            first_integral: self.a0,
        })
    }
}

/// Integrates the reduced equation from (k0, k0') over the grid. Requires
/// k0 above the curvature floor when alpha != 0; during integration a
/// floor crossing (alpha != 0) or a blow-up truncates the trajectory.
pub fn integrate_reduced(
    k0: f64,
    k0_prime: f64,
    alpha: f64,
    beta: f64,
    grid: &GridSpec,
) -> Result<ReducedTrajectory> {
    if alpha != 0.0 && k0 <= crate::K_FLOOR {
        return Err(Error::CurvatureUnderflow { k: k0 });
    }
    let h = grid.h();
    let mut k = Vec::with_capacity(grid.n);
    let mut kp = Vec::with_capacity(grid.n);
    k.push(k0);
    kp.push(k0_prime);
    let a0 = first_integral(k0, k0_prime, alpha, beta);
    let mut drift = 0.0f64;
    let mut halt = None;

    let mut y = [k0, k0_prime];
    let mut scratch = [0.0; 10];
    'steps: for _ in 1..grid.n {
        let mut singular_hit = false;
        {
            let mut f = |_s: f64, y: &[f64], dy: &mut [f64]| {
                dy[0] = y[1];
                dy[1] = match reduced_rhs(y[0], alpha, beta) {
                    Ok(v) => v,
                    Err(_) => {
                        singular_hit = true;
                        0.0
                    }
                };
            };
            crate::ode::rk4_step(&mut f, 0.0, &mut y, h, &mut scratch);
        }
        if singular_hit || (alpha != 0.0 && y[0] <= crate::K_FLOOR) {
            halt = Some(HaltReason::CurvatureUnderflow);
            break 'steps;
        }
        if !y[0].is_finite()
            || !y[1].is_finite()
            || y[0].abs() > crate::K_CEILING
            || y[1].abs() > crate::K_CEILING
        {
            halt = Some(HaltReason::Blowup);
            break 'steps;
        }
        k.push(y[0]);
        kp.push(y[1]);
        drift = drift.max((first_integral(y[0], y[1], alpha, beta) - a0).abs());
    }

    Ok(ReducedTrajectory {
        grid: *grid,
        alpha,
        beta,
        k,
        k_prime: kp,
        a0,
        drift,
        halt,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rhs_examples() {
        assert!((reduced_rhs(1.0, 0.0, 0.0).unwrap() - 1.0).abs() < 1e-15);
        assert!((reduced_rhs(1.0, 1.0, 2.0).unwrap()).abs() < 1e-15, "equilibrium");
        // k = sqrt(2)/s at s = 1 with alpha = beta = 0: k'' = k^3 = 2 sqrt 2
        let v = reduced_rhs(core::f64::consts::SQRT_2, 0.0, 0.0).unwrap();
        assert!((v - 2.0 * core::f64::consts::SQRT_2).abs() < 1e-15);
    }

    #[test]
    fn rhs_underflow_guard() {
        assert!(matches!(
            reduced_rhs(1e-9, 0.5, 0.0),
            Err(Error::CurvatureUnderflow { .. })
        ));
        // no singular term without torsion
        assert!(reduced_rhs(0.0, 0.0, 1.0).is_ok());
    }

    #[test]
    fn u_polynomial_coefficients() {
        assert_eq!(u_polynomial(0.0, 0.0, 0.0), [2.0, 0.0, 0.0, 0.0]);
        assert_eq!(u_polynomial(1.0, 2.0, 3.0), [2.0, -8.0, 12.0, -4.0]);
    }

    #[test]
    fn equilibrium_stays_constant() {
        let grid = GridSpec::new(0.0, 5.0, 50_001).unwrap();
        let t = integrate_reduced(1.0, 0.0, 1.0, 2.0, &grid).unwrap();
        assert!(t.halt.is_none());
        assert!(t.k.iter().all(|k| (k - 1.0).abs() < 1e-12));
        assert!(t.drift < 1e-12);
    }

    #[test]
    fn spiral_solution_reproduced() {
        // k = sqrt(2)/s solves k'' = k^3; start at s0 = 1
        let grid = GridSpec::new(1.0, 5.0, 40_001).unwrap();
        let s2 = core::f64::consts::SQRT_2;
        let t = integrate_reduced(s2, -s2, 0.0, 0.0, &grid).unwrap();
        assert!(t.halt.is_none());
        for i in (0..grid.n).step_by(1000) {
            let s = grid.value(i);
            assert!((t.k[i] - s2 / s).abs() < 1e-6, "at s = {s}");
        }
        assert!(t.drift < 1e-9, "drift = {}", t.drift);
    }

    #[test]
    fn blowup_returns_partial_trajectory() {
        // k'' = k^3 from k0 = 1, k0' = 1 blows up in finite arclength
        let grid = GridSpec::new(0.0, 10.0, 100_001).unwrap();
        let t = integrate_reduced(1.0, 1.0, 0.0, 0.0, &grid).unwrap();
        assert_eq!(t.halt, Some(HaltReason::Blowup));
        assert!(t.len() < grid.n);
        assert!(t.len() > 100, "should survive a while before the pole");
    }

    #[test]
    fn underflow_halts_with_partial_trajectory() {
        // strong beta pushes k down; with alpha tiny the true turning point
        // sits below the curvature floor, so the halt is genuine
        let grid = GridSpec::new(0.0, 10.0, 100_001).unwrap();
        let t = integrate_reduced(0.5, -0.3, 1e-9, 4.0, &grid).unwrap();
        assert_eq!(t.halt, Some(HaltReason::CurvatureUnderflow));
        assert!(!t.is_empty());
    }

    /// Bisection root of P on a bracket (test oracle).
    fn cubic_root(p: &[f64; 4], mut lo: f64, mut hi: f64) -> f64 {
        let eval = |u: f64| ((p[0] * u + p[1]) * u + p[2]) * u + p[3];
        assert!(eval(lo) * eval(hi) < 0.0, "bracket must straddle a root");
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if eval(lo) * eval(mid) <= 0.0 {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        0.5 * (lo + hi)
    }

    #[test]
    fn oscillation_through_zero_turning_points() {
        // beta > 0, alpha = 0, small k0: u = k^2 oscillates between the
        // roots 0 and u_lo of P(u) = 2u^3 - 4 beta u^2 + 4 A u
        let beta = 1.0;
        let k0 = 0.3;
        let grid = GridSpec::new(0.0, 40.0, 400_001).unwrap();
        let t = integrate_reduced(k0, 0.0, 0.0, beta, &grid).unwrap();
        assert!(t.halt.is_none());
        let a = t.a0;
        // positive roots of P(u)/u = 2u^2 - 4 beta u + 4 A
        let disc = 16.0 * beta * beta - 32.0 * a;
        assert!(disc > 0.0);
        let u_lo = (4.0 * beta - disc.sqrt()) / 4.0;
        assert!((u_lo - k0 * k0).abs() < 1e-12, "started at a turning point");
        let mut crossings = 0usize;
        for i in 1..t.len() - 1 {
            if t.k_prime[i] * t.k_prime[i + 1] < 0.0 {
                let u_turn = t.k[i] * t.k[i];
                assert!((u_turn - u_lo).abs() < 1e-4, "turning point u = {u_turn}");
            }
            if t.k[i] * t.k[i + 1] < 0.0 {
                crossings += 1;
            }
        }
        assert!(crossings >= 2, "signed curvature oscillates through zero");
    }

    #[test]
    fn bounded_branch_turning_points_match_cubic_roots() {
        // alpha != 0 trajectory trapped between the two lower positive
        // roots of P; the roots come from an independent bisection oracle
        let (alpha, beta, k0, k0p) = (0.7, 1.9, 1.1, 0.05);
        let grid = GridSpec::new(0.0, 30.0, 300_001).unwrap();
        let t = integrate_reduced(k0, k0p, alpha, beta, &grid).unwrap();
        assert!(t.halt.is_none());
        let p = u_polynomial(alpha, beta, t.a0);
        let r1 = cubic_root(&p, 0.2, 1.1 * 1.1);
        let r2 = cubic_root(&p, 1.1 * 1.1, 2.0);
        let mut seen = [false, false];
        for i in 1..t.len() - 1 {
            if t.k_prime[i] * t.k_prime[i + 1] < 0.0 {
                let u_turn = t.k[i] * t.k[i];
                if (u_turn - r1).abs() < 1e-4 {
                    seen[0] = true;
                } else if (u_turn - r2).abs() < 1e-4 {
                    seen[1] = true;
                } else {
                    panic!("turning point {u_turn} matches neither root {r1} / {r2}");
                }
            }
        }
        assert!(seen[0] && seen[1], "both turning circles visited");
    }

    #[test]
    fn u_identity_along_trajectories() {
        let grid = GridSpec::new(0.0, 8.0, 80_001).unwrap();
        let t = integrate_reduced(1.1, 0.05, 0.7, 1.9, &grid).unwrap();
        assert!(t.halt.is_none(), "chosen data stays bounded");
        assert!(t.u_consistency_max() < 1e-8);
    }
}
