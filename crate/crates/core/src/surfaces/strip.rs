//! Strip geometry of submersion preimages: the Laplacian and Gauss
//! curvature of the metric dt^2/Lambda^2 + ds^2, the O'Neill identity, and
//! the mean-curvature lemma H = Lambda k / (n - 1).
//!
//! "grad(log Lambda)" is read as the scalar s-derivative of log Lambda:
//! the dilation restricted to the strip depends only on s. The sech and
//! exp Gauss-curvature values pin this reading.

use crate::error::{Error, Result};
#[allow(unused_imports)]
use crate::float::prelude::*;
use crate::grid::GridSpec;
use alloc::vec::Vec;

use super::Field2;

/// Dilation profile Lambda(s) with exact first and second derivatives for
/// the catalog constructions, or tabulated samples for user data.
#[derive(Debug, Clone, PartialEq)]
pub enum StripProfile {
    /// Lambda = 1 (Riemannian submersions).
    One,
    /// Lambda = e^s (half-space vertical lines).
    Exp,
    /// Lambda = sech s (geodesic tubes over H^2).
    Sech,
    /// Lambda = 1/sin s (longitude projection of the round sphere).
    CosecS,
    /// Lambda = 1/(offset + s) (cones over the unit sphere).
    InvLinear { offset: f64 },
    /// Samples on a uniform grid; derivatives by five-point stencils.
    Tabulated {
        grid: GridSpec,
        values: Vec<f64>,
        d1: Vec<f64>,
        d2: Vec<f64>,
    },
}

impl StripProfile {
    pub fn tabulated(grid: GridSpec, values: Vec<f64>) -> Result<Self> {
        if values.len() != grid.n {
            return Err(Error::DimensionMismatch);
        }
        let h = grid.h();
        let d1 = crate::grid::deriv1_o4(&values, h);
        let d2 = crate::grid::deriv1_o4(&d1, h);
        Ok(StripProfile::Tabulated {
            grid,
            values,
            d1,
            d2,
        })
    }

    pub fn value(&self, s: f64) -> f64 {
        match self {
            StripProfile::One => 1.0,
            StripProfile::Exp => s.exp(),
            StripProfile::Sech => 1.0 / s.cosh(),
            StripProfile::CosecS => 1.0 / s.sin(),
            StripProfile::InvLinear { offset } => 1.0 / (offset + s),
            StripProfile::Tabulated { grid, values, .. } => {
                crate::grid::interp_cubic(grid, values, s.clamp(grid.s_min, grid.s_max))
            }
        }
    }

    pub fn d1(&self, s: f64) -> f64 {
        match self {
            StripProfile::One => 0.0,
            StripProfile::Exp => s.exp(),
            StripProfile::Sech => -s.tanh() / s.cosh(),
            StripProfile::CosecS => -s.cos() / (s.sin() * s.sin()),
            StripProfile::InvLinear { offset } => {
                let d = offset + s;
                -1.0 / (d * d)
            }
            StripProfile::Tabulated { grid, d1, .. } => {
                crate::grid::interp_cubic(grid, d1, s.clamp(grid.s_min, grid.s_max))
            }
        }
    }

    pub fn d2(&self, s: f64) -> f64 {
        match self {
            StripProfile::One => 0.0,
            StripProfile::Exp => s.exp(),
            StripProfile::Sech => {
                let (sech, tanh) = (1.0 / s.cosh(), s.tanh());
                sech * tanh * tanh - sech * sech * sech
            }
            StripProfile::CosecS => {
                let (sin, cos) = (s.sin(), s.cos());
                (1.0 + cos * cos) / (sin * sin * sin)
            }
            StripProfile::InvLinear { offset } => {
                let d = offset + s;
                2.0 / (d * d * d)
            }
            StripProfile::Tabulated { grid, d2, .. } => {
                crate::grid::interp_cubic(grid, d2, s.clamp(grid.s_min, grid.s_max))
            }
        }
    }
}

/// Strip Laplacian Lambda^2 u_tt + u_ss - (log Lambda)' u_s with central
/// stencils; two boundary rings dropped. `field` is full-grid values,
/// node-major in t.
pub fn strip_laplacian(
    profile: &StripProfile,
    t_grid: &GridSpec,
    s_grid: &GridSpec,
    field: &[f64],
) -> Field2 {
    let (nt, ns) = (t_grid.n, s_grid.n);
    debug_assert_eq!(field.len(), nt * ns);
    let (ht, hs) = (t_grid.h(), s_grid.h());
    let off = 2;
    let mut values = Vec::with_capacity((nt - 2 * off) * (ns - 2 * off));
    for it in off..nt - off {
        for is in off..ns - off {
            let s = s_grid.value(is);
            let lam = profile.value(s);
            let dlog = profile.d1(s) / lam;
            let u = |a: usize, b: usize| field[a * ns + b];
            let u_tt = (u(it + 1, is) - 2.0 * u(it, is) + u(it - 1, is)) / (ht * ht);
            let u_ss = (u(it, is + 1) - 2.0 * u(it, is) + u(it, is - 1)) / (hs * hs);
            let u_s = (u(it, is + 1) - u(it, is - 1)) / (2.0 * hs);
            values.push(lam * lam * u_tt + u_ss - dlog * u_s);
        }
    }
    Field2 {
        t_offset: off,
        s_offset: off,
        nt: nt - 2 * off,
        ns: ns - 2 * off,
        values,
    }
}

/// Gauss curvature of the strip: G_S = (Delta Lambda)/Lambda -
/// ((log Lambda)')^2, where Delta Lambda = Lambda'' - (log Lambda)'
/// Lambda' because Lambda depends only on s.
pub fn strip_gauss(profile: &StripProfile, s: &[f64]) -> Vec<f64> {
    s.iter()
        .map(|&s| {
            let lam = profile.value(s);
            let dlog = profile.d1(s) / lam;
            let dl = profile.d2(s) - dlog * profile.d1(s);
            dl / lam - dlog * dlog
        })
        .collect()
}

/// O'Neill identity residual (c + ((log Lambda)')^2)/Lambda^2 - G_N for a
/// horizontally homothetic submersion from a space form of curvature c
/// onto a surface of Gauss curvature G_N.
pub fn oneill_check(profile: &StripProfile, c: f64, g_n: f64, s: &[f64]) -> Vec<f64> {
    s.iter()
        .map(|&s| {
            let lam = profile.value(s);
            let dlog = profile.d1(s) / lam;
            (c + dlog * dlog) / (lam * lam) - g_n
        })
        .collect()
}

/// Mean curvature of the preimage of a curve of signed curvature k_gamma
/// under a horizontally homothetic submersion with minimal fibres from an
/// n-manifold: H = Lambda k_gamma / (n - 1).
pub fn lemma_mean_curvature(lambda: f64, k_gamma: f64, n: usize) -> f64 {
    lambda * k_gamma / (n - 1) as f64
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn flat_profile_gives_flat_operator() {
        // Lambda = 1: operator is d^2/dt^2 + d^2/ds^2 and G_S = 0
        let t = GridSpec::new(0.0, 1.0, 21).unwrap();
        let s = GridSpec::new(0.0, 1.0, 21).unwrap();
        let mut field = Vec::new();
        for it in 0..21 {
            for _is in 0..21 {
                let tv = t.value(it);
                field.push(tv * tv);
            }
        }
        let lap = strip_laplacian(&StripProfile::One, &t, &s, &field);
        for v in &lap.values {
            assert!((v - 2.0).abs() < 1e-9, "u = t^2 has Laplacian 2");
        }
        let g = strip_gauss(&StripProfile::One, &s.values());
        assert!(g.iter().all(|v| v.abs() < 1e-15));
    }

    #[test]
    fn sech_profile_pins_gradient_reading() {
        // Delta Lambda / Lambda = -sech^2, G_S = -1
        let s: Vec<f64> = (0..40).map(|i| -2.0 + i as f64 * 0.1).collect();
        let p = StripProfile::Sech;
        for &sv in &s {
            let lam = p.value(sv);
            let dlog = p.d1(sv) / lam;
            let dl = p.d2(sv) - dlog * p.d1(sv);
            let sech2 = 1.0 / (sv.cosh() * sv.cosh());
            assert!((dl / lam + sech2).abs() < 1e-12, "symbolic oracle for sech");
        }
        let g = strip_gauss(&p, &s);
        assert!(g.iter().all(|v| (v + 1.0).abs() < 1e-6));
    }

    #[test]
    fn exp_profile_gauss_minus_one() {
        // Lambda'' = e^s, (log Lambda)' = 1, Delta Lambda = 0, G_S = -1
        let s: Vec<f64> = (0..30).map(|i| -1.0 + i as f64 * 0.1).collect();
        let g = strip_gauss(&StripProfile::Exp, &s);
        assert!(g.iter().all(|v| (v + 1.0).abs() < 1e-6));
    }

    #[test]
    fn laplacian_matches_symbolic_oracle_for_sech_field() {
        // u = Lambda(s): Delta u = Lambda'' - (log Lambda)' Lambda', and
        // Delta Lambda / Lambda = -sech^2
        let t = GridSpec::new(0.0, 1.0, 11).unwrap();
        let s = GridSpec::new(-1.5, 1.5, 3001).unwrap();
        let mut field = Vec::new();
        for _it in 0..t.n {
            for is in 0..s.n {
                field.push(1.0 / s.value(is).cosh());
            }
        }
        let lap = strip_laplacian(&StripProfile::Sech, &t, &s, &field);
        for it in 0..lap.nt {
            for is in 0..lap.ns {
                let sv = s.value(is + lap.s_offset);
                let lam = 1.0 / sv.cosh();
                let want = -lam * lam * lam;
                assert!(
                    (lap.get(it, is) - want).abs() < 1e-6,
                    "Delta Lambda = -sech^3"
                );
            }
        }
    }

    #[test]
    fn cone_profile_is_flat() {
        let p = StripProfile::InvLinear { offset: 1.0 };
        let s: Vec<f64> = (0..30).map(|i| -0.5 + i as f64 * 0.1).collect();
        let g = strip_gauss(&p, &s);
        assert!(g.iter().all(|v| v.abs() < 1e-12), "cones are flat");
    }

    #[test]
    fn cosec_profile_gauss_plus_one() {
        let p = StripProfile::CosecS;
        let s: Vec<f64> = (1..30).map(|i| 0.1 + i as f64 * 0.1).collect();
        let g = strip_gauss(&p, &s);
        assert!(g.iter().all(|v| (v - 1.0).abs() < 1e-10));
    }

    #[test]
    fn oneill_three_submersion_profiles() {
        let s: Vec<f64> = (0..25).map(|i| 0.2 + i as f64 * 0.1).collect();
        // H^3 -> R^2: Lambda = e^s, c = -1, G_N = 0: (-1 + 1)/Lambda^2 = 0
        let r = oneill_check(&StripProfile::Exp, -1.0, 0.0, &s);
        assert!(r.iter().all(|v| v.abs() < 1e-12));
        // H^3 -> H^2: Lambda = sech, c = -1: (-1 + tanh^2)/sech^2 = -1
        let r = oneill_check(&StripProfile::Sech, -1.0, -1.0, &s);
        assert!(r.iter().all(|v| v.abs() < 1e-12));
        // S^3 -> S^2: Lambda = 1/sin t, c = 1: (1 + cot^2)/csc^2 = 1
        let r = oneill_check(&StripProfile::CosecS, 1.0, 1.0, &s);
        assert!(r.iter().all(|v| v.abs() < 1e-10));
    }

    #[test]
    fn lemma_values() {
        assert!((lemma_mean_curvature(1.0, 1.0, 3) - 0.5).abs() < 1e-15);
        assert_eq!(lemma_mean_curvature(2.7, 0.0, 3), 0.0);
        // cone: Lambda = 1/t, k = 1, n = 3 gives 1/(2t)
        let t = 1.7;
        assert!((lemma_mean_curvature(1.0 / t, 1.0, 3) - 1.0 / (2.0 * t)).abs() < 1e-15);
    }

    #[test]
    fn tabulated_profile_tracks_analytic() {
        let grid = GridSpec::new(-1.0, 1.0, 401).unwrap();
        let vals = grid.sample(|s| 1.0 / s.cosh());
        let p = StripProfile::tabulated(grid, vals).unwrap();
        let g = strip_gauss(&p, &[0.0, 0.3, -0.6]);
        for v in g {
            assert!((v + 1.0).abs() < 1e-5, "tabulated sech profile, G = {v}");
        }
    }
}
