//! Fixed-step classical Runge-Kutta. Deterministic by construction: no
//! step-size control, so identical inputs give byte-identical trajectories.

use alloc::vec;
use alloc::vec::Vec;

/// One RK4 step of size h for dy/ds = f(s, y). `scratch` must hold 5*dim.
pub fn rk4_step(
    f: &mut dyn FnMut(f64, &[f64], &mut [f64]),
    s: f64,
    y: &mut [f64],
    h: f64,
    scratch: &mut [f64],
) {
    let n = y.len();
    let (k1, rest) = scratch.split_at_mut(n);
    let (k2, rest) = rest.split_at_mut(n);
    let (k3, rest) = rest.split_at_mut(n);
    let (k4, tmp) = rest.split_at_mut(n);

    f(s, y, k1);
    for i in 0..n {
        tmp[i] = y[i] + 0.5 * h * k1[i];
    }
    f(s + 0.5 * h, tmp, k2);
    for i in 0..n {
        tmp[i] = y[i] + 0.5 * h * k2[i];
    }
    f(s + 0.5 * h, tmp, k3);
    for i in 0..n {
        tmp[i] = y[i] + h * k3[i];
    }
    f(s + h, tmp, k4);
    for i in 0..n {
        y[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    }
}

/// Integrates from grid.s_min over n-1 uniform steps, recording the state at
/// every grid sample (including the initial one). `post_step` may project
/// the state back onto a constraint manifold; returning false halts the
/// integration and the trajectory is truncated at the last valid sample.
pub fn integrate_grid(
    grid: &crate::grid::GridSpec,
    y0: &[f64],
    f: &mut dyn FnMut(f64, &[f64], &mut [f64]),
    post_step: &mut dyn FnMut(f64, &mut [f64]) -> bool,
) -> Vec<f64> {
    let dim = y0.len();
    let h = grid.h();
    let mut out = Vec::with_capacity(grid.n * dim);
    let mut y = y0.to_vec();
    let mut scratch = vec![0.0; 5 * dim];
    out.extend_from_slice(&y);
    for i in 1..grid.n {
        let s = grid.value(i - 1);
        rk4_step(f, s, &mut y, h, &mut scratch);
        if !post_step(grid.value(i), &mut y) {
            break;
        }
        out.extend_from_slice(&y);
    }
    out
}
