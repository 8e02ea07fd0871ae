//! Curvature tensors: finite differences of the Christoffel symbols on
//! chart spaces, constant-curvature closed forms on the embedded spheres.

use super::AmbientSpace;
use crate::error::{Error, Result};
use crate::linalg::{self, Christoffel};
use alloc::vec;
use alloc::vec::Vec;

pub(super) struct CurvatureTables {
    gamma: Christoffel,
    dgamma: Vec<Christoffel>,
}

pub(super) fn tables(space: &AmbientSpace, p: &[f64], h: f64) -> Result<CurvatureTables> {
    let n = space.coord_dim();
    let gamma = space.christoffel_at(p)?;
    let step = h * space.fd_scale(p);
    let mut dgamma = Vec::with_capacity(n);
    for dir in 0..n {
        dgamma.push(christoffel_partial(space, p, dir, step)?);
    }
    Ok(CurvatureTables { gamma, dgamma })
}

fn christoffel_partial(
    space: &AmbientSpace,
    p: &[f64],
    dir: usize,
    step: f64,
) -> Result<Christoffel> {
    let n = space.coord_dim();
    let mut fwd = p.to_vec();
    let mut bwd = p.to_vec();
    fwd[dir] += step;
    bwd[dir] -= step;
    let diff = |a: &Christoffel, b: &Christoffel, w: f64| {
        let mut out = Christoffel::zeros(n);
        for k in 0..n {
            for i in 0..n {
                for j in 0..n {
                    out.set(k, i, j, (a.get(k, i, j) - b.get(k, i, j)) * w);
                }
            }
        }
        out
    };
    match (space.chart_contains(&fwd), space.chart_contains(&bwd)) {
        (true, true) => {
            let a = space.christoffel_at(&fwd)?;
            let b = space.christoffel_at(&bwd)?;
            Ok(diff(&a, &b, 1.0 / (2.0 * step)))
        }
        (true, false) => {
            let mut fwd2 = p.to_vec();
            fwd2[dir] += 2.0 * step;
            let g0 = space.christoffel_at(p)?;
            let g1 = space.christoffel_at(&fwd)?;
            let g2 = space.christoffel_at(&fwd2)?;
            let mut out = Christoffel::zeros(n);
            for k in 0..n {
                for i in 0..n {
                    for j in 0..n {
                        out.set(
                            k,
                            i,
                            j,
                            (-3.0 * g0.get(k, i, j) + 4.0 * g1.get(k, i, j) - g2.get(k, i, j))
                                / (2.0 * step),
                        );
                    }
                }
            }
            Ok(out)
        }
        (false, true) => {
            let mut bwd2 = p.to_vec();
            bwd2[dir] -= 2.0 * step;
            let g0 = space.christoffel_at(p)?;
            let g1 = space.christoffel_at(&bwd)?;
            let g2 = space.christoffel_at(&bwd2)?;
            let mut out = Christoffel::zeros(n);
            for k in 0..n {
                for i in 0..n {
                    for j in 0..n {
                        out.set(
                            k,
                            i,
                            j,
                            (3.0 * g0.get(k, i, j) - 4.0 * g1.get(k, i, j) + g2.get(k, i, j))
                                / (2.0 * step),
                        );
                    }
                }
            }
            Ok(out)
        }
        (false, false) => Err(Error::PointOutsideChart),
    }
}

/// R(X,Y)Z in the chosen sign convention (see `AmbientSpace::riemann`).
/// For chart spaces this is minus the coordinate expression
/// d_i Gamma^l_{jk} - d_j Gamma^l_{ik} + Gamma Gamma - Gamma Gamma.
fn contract(t: &CurvatureTables, x: &[f64], y: &[f64], z: &[f64]) -> Vec<f64> {
    let n = t.gamma.n;
    let mut out = vec![0.0; n];
    for l in 0..n {
        let mut acc = 0.0;
        for i in 0..n {
            for j in 0..n {
                let xy = x[i] * y[j];
                if xy == 0.0 {
                    continue;
                }
                for k in 0..n {
                    if z[k] == 0.0 {
                        continue;
                    }
                    let mut r = t.dgamma[i].get(l, j, k) - t.dgamma[j].get(l, i, k);
                    for m in 0..n {
                        r += t.gamma.get(l, i, m) * t.gamma.get(m, j, k)
                            - t.gamma.get(l, j, m) * t.gamma.get(m, i, k);
                    }
                    acc += r * xy * z[k];
                }
            }
        }
        out[l] = -acc;
    }
    out
}

fn embedded_riemann(space: &AmbientSpace, x: &[f64], y: &[f64], z: &[f64]) -> Vec<f64> {
    match space {
        AmbientSpace::Sphere2 { radius } => {
            let c = 1.0 / (radius * radius);
            space_form_term(c, x, y, z)
        }
        AmbientSpace::Sphere3 => space_form_term(1.0, x, y, z),
        AmbientSpace::ProductS2xR => {
            // only the unit-sphere factor curves
            let mut out = space_form_term(1.0, &x[..3], &y[..3], &z[..3]);
            out.push(0.0);
            out
        }
        _ => unreachable!("embedded_riemann on chart space"),
    }
}

fn space_form_term(c: f64, x: &[f64], y: &[f64], z: &[f64]) -> Vec<f64> {
    let yz = linalg::dot(y, z);
    let xz = linalg::dot(x, z);
    x.iter()
        .zip(y)
        .map(|(xi, yi)| -c * (yz * xi - xz * yi))
        .collect()
}

pub(super) fn riemann(
    space: &AmbientSpace,
    p: &[f64],
    x: &[f64],
    y: &[f64],
    z: &[f64],
    h: f64,
) -> Result<Vec<f64>> {
    space.check_chart(p)?;
    if space.is_embedded() {
        Ok(embedded_riemann(space, x, y, z))
    } else {
        let t = tables(space, p, h)?;
        Ok(contract(&t, x, y, z))
    }
}

/// Ric(N,N) = sum_a g(R(E_a, N)E_a, N) over an orthonormal tangent basis.
pub(super) fn ricci(space: &AmbientSpace, p: &[f64], n_vec: &[f64], h: f64) -> Result<f64> {
    let basis = space.orthonormal_basis(p)?;
    let g = space.metric_at(p)?;
    if space.is_embedded() {
        let mut acc = 0.0;
        for e in &basis {
            let r = embedded_riemann(space, e, n_vec, e);
            acc += g.bilinear(&r, n_vec);
        }
        return Ok(acc);
    }
    let t = tables(space, p, h)?;
    let mut acc = 0.0;
    for e in &basis {
        let r = contract(&t, e, n_vec, e);
        acc += g.bilinear(&r, n_vec);
    }
    Ok(acc)
}
