//! The nine ambient model geometries: coordinate metrics, Christoffel
//! symbols, curvature evaluators, and tangent-space utilities.
//!
//! Two representations coexist behind one enum. Chart spaces carry an
//! explicit coordinate metric on an open domain (half-space and half-plane
//! models, Heisenberg, SL(2,R), conformal planes). Sphere-like spaces are
//! embedded in R^3/R^4 and use the flat ambient metric restricted to the
//! constraint set, with covariant derivatives obtained by tangential
//! projection and curvature from the constant-curvature closed form.

mod arclength;
mod curvature;

pub use arclength::{arclength_reparam, metric_speed_error};

use crate::conformal::RadialProfile;
use crate::error::{Error, Result};
#[allow(unused_imports)]
use crate::float::prelude::*;
use crate::linalg::{self, Christoffel, SquareMat};
use alloc::vec;
use alloc::vec::Vec;

/// Tolerance for the embedded-sphere constraint when validating points.
const CONSTRAINT_TOL: f64 = 1e-6;

#[derive(Debug, Clone, PartialEq)]
pub enum AmbientSpace {
    EuclideanPlane,
    Sphere2 { radius: f64 },
    HyperbolicPlane,
    Euclidean3,
    Sphere3,
    Hyperbolic3HalfSpace,
    Heisenberg,
    Sl2r,
    ProductS2xR,
    ProductH2xR,
    ConformalPlane { profile: RadialProfile },
}

/// A tangent vector anchored at a chart point.
#[derive(Debug, Clone, PartialEq)]
pub struct TangentData {
    pub base: Vec<f64>,
    pub vector: Vec<f64>,
}

impl TangentData {
    pub fn new(base: Vec<f64>, vector: Vec<f64>) -> Self {
        TangentData { base, vector }
    }
}

impl AmbientSpace {
    /// Intrinsic dimension (2 or 3).
    pub fn dim(&self) -> usize {
        match self {
            AmbientSpace::EuclideanPlane
            | AmbientSpace::Sphere2 { .. }
            | AmbientSpace::HyperbolicPlane
            | AmbientSpace::ConformalPlane { .. } => 2,
            _ => 3,
        }
    }

    /// Length of the coordinate tuples this space works with.
    pub fn coord_dim(&self) -> usize {
        match self {
            AmbientSpace::EuclideanPlane
            | AmbientSpace::HyperbolicPlane
            | AmbientSpace::ConformalPlane { .. } => 2,
            AmbientSpace::Sphere2 { .. }
            | AmbientSpace::Euclidean3
            | AmbientSpace::Hyperbolic3HalfSpace
            | AmbientSpace::Heisenberg
            | AmbientSpace::Sl2r
            | AmbientSpace::ProductH2xR => 3,
            AmbientSpace::Sphere3 | AmbientSpace::ProductS2xR => 4,
        }
    }

    pub fn is_embedded(&self) -> bool {
        matches!(
            self,
            AmbientSpace::Sphere2 { .. } | AmbientSpace::Sphere3 | AmbientSpace::ProductS2xR
        )
    }

    pub fn name(&self) -> &'static str {
        match self {
            AmbientSpace::EuclideanPlane => "euclidean-plane",
            AmbientSpace::Sphere2 { .. } => "sphere2",
            AmbientSpace::HyperbolicPlane => "hyperbolic-plane",
            AmbientSpace::Euclidean3 => "euclidean3",
            AmbientSpace::Sphere3 => "sphere3",
            AmbientSpace::Hyperbolic3HalfSpace => "hyperbolic3",
            AmbientSpace::Heisenberg => "heisenberg",
            AmbientSpace::Sl2r => "sl2r",
            AmbientSpace::ProductS2xR => "s2xr",
            AmbientSpace::ProductH2xR => "h2xr",
            AmbientSpace::ConformalPlane { .. } => "conformal-plane",
        }
    }

    /// Constant sectional curvature (dim 3) or constant Gauss curvature
    /// (dim 2); None where curvature is not constant.
    pub fn constant_curvature(&self) -> Option<f64> {
        match self {
            AmbientSpace::EuclideanPlane | AmbientSpace::Euclidean3 => Some(0.0),
            AmbientSpace::Sphere2 { radius } => Some(1.0 / (radius * radius)),
            AmbientSpace::Sphere3 => Some(1.0),
            AmbientSpace::HyperbolicPlane | AmbientSpace::Hyperbolic3HalfSpace => Some(-1.0),
            _ => None,
        }
    }

    pub fn chart_contains(&self, p: &[f64]) -> bool {
        if p.len() != self.coord_dim() || p.iter().any(|v| !v.is_finite()) {
            return false;
        }
        match self {
            AmbientSpace::HyperbolicPlane => p[1] > 0.0,
            AmbientSpace::Hyperbolic3HalfSpace | AmbientSpace::Sl2r => p[2] > 0.0,
            AmbientSpace::ProductH2xR => p[1] > 0.0,
            AmbientSpace::Sphere2 { radius } => {
                (linalg::norm(p) - radius).abs() < CONSTRAINT_TOL * radius.max(1.0)
            }
            AmbientSpace::Sphere3 => (linalg::norm(p) - 1.0).abs() < CONSTRAINT_TOL,
            AmbientSpace::ProductS2xR => (linalg::norm(&p[..3]) - 1.0).abs() < CONSTRAINT_TOL,
            _ => true,
        }
    }

    pub fn check_chart(&self, p: &[f64]) -> Result<()> {
        if self.chart_contains(p) {
            Ok(())
        } else {
            Err(Error::PointOutsideChart)
        }
    }

    /// Coordinate metric matrix at p. For embedded spheres this is the flat
    /// ambient metric (their geometry enters through projection instead).
    pub fn metric_at(&self, p: &[f64]) -> Result<SquareMat> {
        self.check_chart(p)?;
        let n = self.coord_dim();
        let mut g = SquareMat::identity(n);
        match self {
            AmbientSpace::EuclideanPlane
            | AmbientSpace::Euclidean3
            | AmbientSpace::Sphere2 { .. }
            | AmbientSpace::Sphere3
            | AmbientSpace::ProductS2xR => {}
            AmbientSpace::HyperbolicPlane => {
                let w = 1.0 / (p[1] * p[1]);
                g.set(0, 0, w);
                g.set(1, 1, w);
            }
            AmbientSpace::Hyperbolic3HalfSpace => {
                let w = 1.0 / (p[2] * p[2]);
                for i in 0..3 {
                    g.set(i, i, w);
                }
            }
            AmbientSpace::Heisenberg => {
                // dx^2 + dy^2 + (dz - x dy)^2
                let x = p[0];
                g.set(1, 1, 1.0 + x * x);
                g.set(1, 2, -x);
                g.set(2, 1, -x);
                g.set(2, 2, 1.0);
            }
            AmbientSpace::Sl2r => {
                // (dx + dy/z)^2 + (dy^2 + dz^2)/z^2
                let z = p[2];
                g.set(0, 0, 1.0);
                g.set(0, 1, 1.0 / z);
                g.set(1, 0, 1.0 / z);
                g.set(1, 1, 2.0 / (z * z));
                g.set(2, 2, 1.0 / (z * z));
            }
            AmbientSpace::ProductH2xR => {
                let w = 1.0 / (p[1] * p[1]);
                g.set(0, 0, w);
                g.set(1, 1, w);
                g.set(2, 2, 1.0);
            }
            AmbientSpace::ConformalPlane { profile } => {
                let r = linalg::norm(p);
                let w = (2.0 * profile.f(r)).exp();
                g.set(0, 0, w);
                g.set(1, 1, w);
            }
        }
        Ok(g)
    }

    /// Hand-coded Christoffel symbols of the coordinate metric; zero for
    /// the embedded representations (flat ambient coordinates).
    pub fn christoffel_at(&self, p: &[f64]) -> Result<Christoffel> {
        self.check_chart(p)?;
        let n = self.coord_dim();
        let mut c = Christoffel::zeros(n);
        match self {
            AmbientSpace::EuclideanPlane
            | AmbientSpace::Euclidean3
            | AmbientSpace::Sphere2 { .. }
            | AmbientSpace::Sphere3
            | AmbientSpace::ProductS2xR => {}
            AmbientSpace::HyperbolicPlane => {
                let y = p[1];
                c.set_sym(0, 0, 1, -1.0 / y);
                c.set(1, 0, 0, 1.0 / y);
                c.set(1, 1, 1, -1.0 / y);
            }
            AmbientSpace::Hyperbolic3HalfSpace => {
                let z = p[2];
                c.set_sym(0, 0, 2, -1.0 / z);
                c.set_sym(1, 1, 2, -1.0 / z);
                c.set(2, 2, 2, -1.0 / z);
                c.set(2, 0, 0, 1.0 / z);
                c.set(2, 1, 1, 1.0 / z);
            }
            AmbientSpace::Heisenberg => {
                let x = p[0];
                c.set_sym(0, 1, 2, 0.5);
                c.set(0, 1, 1, -x);
                c.set_sym(1, 0, 1, 0.5 * x);
                c.set_sym(2, 0, 1, 0.5 * (x * x - 1.0));
                c.set_sym(1, 0, 2, -0.5);
                c.set_sym(2, 0, 2, -0.5 * x);
            }
            AmbientSpace::Sl2r => {
                let z = p[2];
                c.set_sym(0, 1, 2, 1.0 / (z * z));
                c.set_sym(1, 1, 2, -1.5 / z);
                c.set_sym(0, 0, 2, 0.5 / z);
                c.set_sym(1, 0, 2, -0.5);
                c.set_sym(2, 0, 1, 0.5);
                c.set(2, 1, 1, 2.0 / z);
                c.set(2, 2, 2, -1.0 / z);
            }
            AmbientSpace::ProductH2xR => {
                let y = p[1];
                c.set_sym(0, 0, 1, -1.0 / y);
                c.set(1, 0, 0, 1.0 / y);
                c.set(1, 1, 1, -1.0 / y);
            }
            AmbientSpace::ConformalPlane { profile } => {
                // Gamma^k_ij = d_i f delta_jk + d_j f delta_ik - d_k f delta_ij
                let r = linalg::norm(p);
                let mut df = [0.0; 2];
                if r > 1e-12 {
                    let fp = profile.f1(r);
                    df[0] = fp * p[0] / r;
                    df[1] = fp * p[1] / r;
                }
                for k in 0..2 {
                    for i in 0..2 {
                        for j in 0..2 {
                            let mut v = 0.0;
                            if j == k {
                                v += df[i];
                            }
                            if i == k {
                                v += df[j];
                            }
                            if i == j {
                                v -= df[k];
                            }
                            c.set(k, i, j, v);
                        }
                    }
                }
            }
        }
        Ok(c)
    }

    /// Christoffel symbols by central finite differences of `metric_at`,
    /// falling back to one-sided stencils at the chart boundary. Steps are
    /// scaled by `fd_scale` so the half-space models keep uniform relative
    /// accuracy.
    pub fn christoffel_fd(&self, p: &[f64], h: f64) -> Result<Christoffel> {
        let n = self.coord_dim();
        let g = self.metric_at(p)?;
        let ginv = g.inverse().ok_or(Error::PointOutsideChart)?;
        let step = h * self.fd_scale(p);
        // dg[l] = partial_l g
        let mut dg = Vec::with_capacity(n);
        for l in 0..n {
            dg.push(self.metric_partial(p, l, step)?);
        }
        let mut c = Christoffel::zeros(n);
        for k in 0..n {
            for i in 0..n {
                for j in 0..=i {
                    let mut acc = 0.0;
                    for l in 0..n {
                        let half = 0.5 * (dg[i].get(l, j) + dg[j].get(l, i) - dg[l].get(i, j));
                        acc += ginv.get(k, l) * half;
                    }
                    c.set_sym(k, i, j, acc);
                }
            }
        }
        Ok(c)
    }

    fn metric_partial(&self, p: &[f64], dir: usize, step: f64) -> Result<SquareMat> {
        let n = self.coord_dim();
        let mut fwd = p.to_vec();
        let mut bwd = p.to_vec();
        fwd[dir] += step;
        bwd[dir] -= step;
        match (self.chart_contains(&fwd), self.chart_contains(&bwd)) {
            (true, true) => {
                let gf = self.metric_at(&fwd)?;
                let gb = self.metric_at(&bwd)?;
                let mut out = SquareMat::zeros(n);
                for i in 0..n {
                    for j in 0..n {
                        out.set(i, j, (gf.get(i, j) - gb.get(i, j)) / (2.0 * step));
                    }
                }
                Ok(out)
            }
            (true, false) => {
                let mut fwd2 = p.to_vec();
                fwd2[dir] += 2.0 * step;
                let g0 = self.metric_at(p)?;
                let g1 = self.metric_at(&fwd)?;
                let g2 = self.metric_at(&fwd2)?;
                let mut out = SquareMat::zeros(n);
                for i in 0..n {
                    for j in 0..n {
                        out.set(
                            i,
                            j,
                            (-3.0 * g0.get(i, j) + 4.0 * g1.get(i, j) - g2.get(i, j))
                                / (2.0 * step),
                        );
                    }
                }
                Ok(out)
            }
            (false, true) => {
                let mut bwd2 = p.to_vec();
                bwd2[dir] -= 2.0 * step;
                let g0 = self.metric_at(p)?;
                let g1 = self.metric_at(&bwd)?;
                let g2 = self.metric_at(&bwd2)?;
                let mut out = SquareMat::zeros(n);
                for i in 0..n {
                    for j in 0..n {
                        out.set(
                            i,
                            j,
                            (3.0 * g0.get(i, j) - 4.0 * g1.get(i, j) + g2.get(i, j))
                                / (2.0 * step),
                        );
                    }
                }
                Ok(out)
            }
            (false, false) => Err(Error::PointOutsideChart),
        }
    }

    /// Hyperbolic charts are scale-invariant in the boundary coordinate, so
    /// finite-difference steps proportional to it keep relative truncation
    /// error flat across the chart.
    pub fn fd_scale(&self, p: &[f64]) -> f64 {
        match self {
            AmbientSpace::HyperbolicPlane | AmbientSpace::ProductH2xR => p[1].abs().max(1e-8),
            AmbientSpace::Hyperbolic3HalfSpace | AmbientSpace::Sl2r => p[2].abs().max(1e-8),
            _ => 1.0,
        }
    }

    pub fn inner(&self, p: &[f64], u: &[f64], v: &[f64]) -> Result<f64> {
        Ok(self.metric_at(p)?.bilinear(u, v))
    }

    pub fn norm(&self, p: &[f64], v: &[f64]) -> Result<f64> {
        Ok(self.inner(p, v, v)?.max(0.0).sqrt())
    }

    /// Metric-unit rescaling of v at p.
    pub fn normalize(&self, p: &[f64], v: &[f64]) -> Result<Vec<f64>> {
        let n = self.norm(p, v)?;
        if n < 1e-300 {
            return Err(Error::NonUnitVector { norm: n });
        }
        Ok(linalg::scale(v, 1.0 / n))
    }

    /// Removes the components normal to the embedded constraint set; the
    /// identity on chart spaces.
    pub fn tangent_project(&self, p: &[f64], v: &[f64]) -> Vec<f64> {
        match self {
            AmbientSpace::Sphere2 { .. } | AmbientSpace::Sphere3 => {
                let r2 = linalg::dot(p, p);
                let c = linalg::dot(p, v) / r2;
                v.iter().zip(p).map(|(vi, pi)| vi - c * pi).collect()
            }
            AmbientSpace::ProductS2xR => {
                let u = &p[..3];
                let c = linalg::dot(&v[..3], u) / linalg::dot(u, u);
                let mut out = v.to_vec();
                for i in 0..3 {
                    out[i] -= c * u[i];
                }
                out
            }
            _ => v.to_vec(),
        }
    }

    /// Projects a nearby ambient point back onto the constraint set; the
    /// identity on chart spaces.
    pub fn project_point(&self, p: &[f64]) -> Vec<f64> {
        match self {
            AmbientSpace::Sphere2 { radius } => linalg::scale(p, radius / linalg::norm(p)),
            AmbientSpace::Sphere3 => linalg::scale(p, 1.0 / linalg::norm(p)),
            AmbientSpace::ProductS2xR => {
                let nu = linalg::norm(&p[..3]);
                let mut out = p.to_vec();
                for v in out.iter_mut().take(3) {
                    *v /= nu;
                }
                out
            }
            _ => p.to_vec(),
        }
    }

    /// Covariant derivative value from a plain parameter derivative `dv` of
    /// a field V along a direction `u` at p: chart spaces add the
    /// Christoffel contraction, embedded spaces project tangentially.
    pub fn covariant_from_derivative(
        &self,
        p: &[f64],
        u: &[f64],
        v: &[f64],
        dv: &[f64],
    ) -> Result<Vec<f64>> {
        if self.is_embedded() {
            Ok(self.tangent_project(p, dv))
        } else {
            let gamma = self.christoffel_at(p)?;
            Ok(linalg::add(dv, &gamma.contract(u, v)))
        }
    }

    /// An orthonormal basis of the tangent space at p (dim() vectors of
    /// coord_dim() components).
    pub fn orthonormal_basis(&self, p: &[f64]) -> Result<Vec<Vec<f64>>> {
        self.check_chart(p)?;
        let cd = self.coord_dim();
        let g = self.metric_at(p)?;
        let mut basis: Vec<Vec<f64>> = Vec::with_capacity(self.dim());
        for i in 0..cd {
            let mut v = vec![0.0; cd];
            v[i] = 1.0;
            let mut v = self.tangent_project(p, &v);
            for b in &basis {
                let c = g.bilinear(&v, b);
                linalg::axpy(&mut v, -c, b);
            }
            let n = g.bilinear(&v, &v).max(0.0).sqrt();
            if n > 1e-8 {
                basis.push(linalg::scale(&v, 1.0 / n));
            }
            if basis.len() == self.dim() {
                break;
            }
        }
        if basis.len() != self.dim() {
            return Err(Error::RankDeficient { it: 0, is: 0 });
        }
        Ok(basis)
    }

    /// Unit vector completing the orthonormal pair (e1, e2) in an oriented
    /// 3-dimensional tangent space.
    pub fn normal_complement(&self, p: &[f64], e1: &[f64], e2: &[f64]) -> Result<Vec<f64>> {
        match self {
            AmbientSpace::Sphere3 => Ok(linalg::hodge4(p, e1, e2).to_vec()),
            AmbientSpace::ProductS2xR => {
                let nu = [p[0], p[1], p[2], 0.0];
                Ok(linalg::hodge4(&nu, e1, e2).to_vec())
            }
            _ if self.dim() == 3 => {
                // (e1 x e2)^l = sqrt(det g) g^{lm} eps_{mij} e1^i e2^j
                let g = self.metric_at(p)?;
                let ginv = g.inverse().ok_or(Error::PointOutsideChart)?;
                let sqrt_det = g.det().max(0.0).sqrt();
                let cov = linalg::cross3(e1, e2);
                let mut out = ginv.mul_vec(&cov);
                for v in out.iter_mut() {
                    *v *= sqrt_det;
                }
                Ok(out)
            }
            _ => Err(Error::DimensionMismatch),
        }
    }

    /// Oriented unit normal of a unit tangent in dimension 2: T rotated by
    /// +90 degrees so that {T, N} is a positive basis.
    pub fn oriented_normal2(&self, p: &[f64], t: &[f64]) -> Result<Vec<f64>> {
        match self {
            AmbientSpace::Sphere2 { radius } => {
                let nu = linalg::scale(p, 1.0 / radius);
                Ok(linalg::cross3(&nu, t).to_vec())
            }
            AmbientSpace::EuclideanPlane
            | AmbientSpace::HyperbolicPlane
            | AmbientSpace::ConformalPlane { .. } => {
                // conformal charts: Euclidean rotation preserves the metric
                // norm and orthogonality
                Ok(vec![-t[1], t[0]])
            }
            _ => Err(Error::DimensionMismatch),
        }
    }

    /// Curvature operator in the sign convention R(X,Y)Z = nabla_{[X,Y]}Z -
    /// [nabla_X, nabla_Y]Z, so that g(R(T,N)T,N) equals the sectional
    /// curvature of span{T,N}.
    pub fn riemann(&self, p: &[f64], x: &[f64], y: &[f64], z: &[f64]) -> Result<Vec<f64>> {
        curvature::riemann(self, p, x, y, z, crate::H_FD_DEFAULT)
    }

    /// Ricci curvature Ric(N, N) of a metrically unit vector N.
    pub fn ricci_normal(&self, p: &[f64], n_vec: &[f64]) -> Result<f64> {
        self.ricci_normal_h(p, n_vec, crate::H_FD_DEFAULT)
    }

    pub fn ricci_normal_h(&self, p: &[f64], n_vec: &[f64], h: f64) -> Result<f64> {
        let nn = self.norm(p, n_vec)?;
        if (nn - 1.0).abs() > 1e-8 {
            return Err(Error::NonUnitVector { norm: nn });
        }
        curvature::ricci(self, p, n_vec, h)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat(rows: &[&[f64]]) -> SquareMat {
        let n = rows.len();
        let mut m = SquareMat::zeros(n);
        for i in 0..n {
            for j in 0..n {
                m.set(i, j, rows[i][j]);
            }
        }
        m
    }

    #[test]
    fn euclidean_metric_is_identity() {
        let g = AmbientSpace::Euclidean3
            .metric_at(&[0.3, -1.0, 2.0])
            .unwrap();
        assert_eq!(g, SquareMat::identity(3));
    }

    #[test]
    fn heisenberg_metric_hand_expansion() {
        // expand dx^2 + dy^2 + (dz - x dy)^2 at x = 1 by hand
        let g = AmbientSpace::Heisenberg.metric_at(&[1.0, 0.0, 0.0]).unwrap();
        let want = mat(&[&[1.0, 0.0, 0.0], &[0.0, 2.0, -1.0], &[0.0, -1.0, 1.0]]);
        for i in 0..3 {
            for j in 0..3 {
                assert!((g.get(i, j) - want.get(i, j)).abs() < 1e-15);
            }
        }
    }

    #[test]
    fn half_space_metric_scales_as_inverse_z_squared() {
        let g = AmbientSpace::Hyperbolic3HalfSpace
            .metric_at(&[0.0, 0.0, 2.0])
            .unwrap();
        for i in 0..3 {
            for j in 0..3 {
                let want = if i == j { 0.25 } else { 0.0 };
                assert!((g.get(i, j) - want).abs() < 1e-15);
            }
        }
    }

    #[test]
    fn chart_violations_are_rejected() {
        assert_eq!(
            AmbientSpace::Hyperbolic3HalfSpace.metric_at(&[0.0, 0.0, -1.0]),
            Err(Error::PointOutsideChart)
        );
        assert_eq!(
            AmbientSpace::HyperbolicPlane.christoffel_at(&[0.0, 0.0]),
            Err(Error::PointOutsideChart)
        );
    }

    #[test]
    fn euclidean_christoffels_vanish() {
        let c = AmbientSpace::Euclidean3
            .christoffel_at(&[1.0, 2.0, 3.0])
            .unwrap();
        assert_eq!(c.max_abs_diff(&Christoffel::zeros(3)), 0.0);
    }

    #[test]
    fn half_space_christoffels_standard_values() {
        // symbolic differentiation of g = delta/z^2 gives Gamma^z_xx = 1/z,
        // Gamma^x_xz = -1/z, Gamma^z_zz = -1/z
        let c = AmbientSpace::Hyperbolic3HalfSpace
            .christoffel_at(&[0.0, 0.0, 1.0])
            .unwrap();
        assert!((c.get(2, 0, 0) - 1.0).abs() < 1e-15);
        assert!((c.get(0, 0, 2) + 1.0).abs() < 1e-15);
        assert!((c.get(2, 2, 2) + 1.0).abs() < 1e-15);
        assert!(c.get(0, 1, 1).abs() < 1e-15);
    }

    #[test]
    fn closed_form_matches_finite_difference_on_heisenberg() {
        let space = AmbientSpace::Heisenberg;
        let mut rng = crate::util::XorShift64::new(0xbeef);
        let mut worst = 0.0f64;
        for _ in 0..100 {
            let p = [
                rng.uniform(-2.0, 2.0),
                rng.uniform(-2.0, 2.0),
                rng.uniform(-2.0, 2.0),
            ];
            let a = space.christoffel_at(&p).unwrap();
            let b = space.christoffel_fd(&p, 1e-4).unwrap();
            worst = worst.max(a.max_abs_diff(&b));
        }
        assert!(worst < 1e-6, "worst diff {worst}");
    }

    #[test]
    fn closed_form_matches_finite_difference_on_all_chart_spaces() {
        let spaces = [
            AmbientSpace::HyperbolicPlane,
            AmbientSpace::Hyperbolic3HalfSpace,
            AmbientSpace::Sl2r,
            AmbientSpace::ProductH2xR,
            AmbientSpace::ConformalPlane {
                profile: RadialProfile::LogQuadratic {
                    a: 1.0,
                    b: 0.0,
                    c: 1.0,
                },
            },
        ];
        let mut rng = crate::util::XorShift64::new(0x5eed);
        for space in &spaces {
            let cd = space.coord_dim();
            let mut worst = 0.0f64;
            for _ in 0..60 {
                let mut p = vec![0.0; cd];
                for v in p.iter_mut() {
                    *v = rng.uniform(0.2, 2.0);
                }
                let a = space.christoffel_at(&p).unwrap();
                let b = space.christoffel_fd(&p, 1e-4).unwrap();
                worst = worst.max(a.max_abs_diff(&b));
            }
            assert!(worst < 1e-6, "{}: worst diff {worst}", space.name());
        }
    }

    #[test]
    fn ricci_flat_space_is_zero() {
        let r = AmbientSpace::Euclidean3
            .ricci_normal(&[0.1, 0.2, 0.3], &[0.0, 1.0, 0.0])
            .unwrap();
        assert!(r.abs() < 1e-12);
    }

    #[test]
    fn ricci_space_forms_give_two_c() {
        // isotropy: arbitrary unit directions
        let h3 = AmbientSpace::Hyperbolic3HalfSpace;
        let p = [0.4, -0.3, 0.8];
        let dir = [0.6, 0.4, 1.1];
        let n = h3.normalize(&p, &dir).unwrap();
        let r = h3.ricci_normal_h(&p, &n, 1e-3).unwrap();
        assert!((r + 2.0).abs() < 2e-3, "H3 Ricci {r}");

        let s3 = AmbientSpace::Sphere3;
        let p = AmbientSpace::Sphere3.project_point(&[0.5, -0.5, 0.5, 0.5]);
        let v = s3.tangent_project(&p, &[1.0, 0.3, -0.2, 0.1]);
        let n = s3.normalize(&p, &v).unwrap();
        let r = s3.ricci_normal_h(&p, &n, 1e-3).unwrap();
        assert!((r - 2.0).abs() < 2e-3, "S3 Ricci {r}");
    }

    #[test]
    fn ricci_rejects_non_unit_vectors() {
        let e = AmbientSpace::Euclidean3.ricci_normal(&[0.0; 3], &[0.0, 2.0, 0.0]);
        assert!(matches!(e, Err(Error::NonUnitVector { .. })));
    }

    #[test]
    fn ricci_heisenberg_horizontal_direction() {
        let space = AmbientSpace::Heisenberg;
        let p = [0.7, -0.4, 0.2];
        // horizontal unit vector N = -y' E1 + x' E2 for an angle choice
        let (c, s) = (0.6f64, 0.8f64);
        let e1 = [1.0, 0.0, 0.0];
        let e2 = [0.0, 1.0, p[0]];
        let mut n = vec![0.0; 3];
        linalg::axpy(&mut n, -s, &e1);
        linalg::axpy(&mut n, c, &e2);
        let r = space.ricci_normal_h(&p, &n, 1e-3).unwrap();
        assert!((r + 0.5).abs() < 2e-3, "Heisenberg Ricci(N) = {r}");
    }

    #[test]
    fn ricci_sl2r_horizontal_direction() {
        let space = AmbientSpace::Sl2r;
        let p = [0.3, 0.5, 1.3];
        let z = p[2];
        // E2 = z d/dy - d/dx, E3 = z d/dz; horizontal combination
        let e2 = [-1.0, z, 0.0];
        let e3 = [0.0, 0.0, z];
        let (c, s) = (0.28f64, 0.96f64);
        let mut n = vec![0.0; 3];
        linalg::axpy(&mut n, c, &e2);
        linalg::axpy(&mut n, s, &e3);
        let r = space.ricci_normal_h(&p, &n, 1e-3).unwrap();
        assert!((r + 1.5).abs() < 2e-3, "SL2R Ricci(N) = {r}");
    }

    #[test]
    fn ricci_products_give_plus_minus_one_horizontally() {
        let s2r = AmbientSpace::ProductS2xR;
        let p = s2r.project_point(&[0.0, 0.6, 0.8, 1.7]);
        let v = s2r.tangent_project(&p, &[1.0, 0.2, -0.3, 0.0]);
        let n = s2r.normalize(&p, &v).unwrap();
        let r = s2r.ricci_normal_h(&p, &n, 1e-3).unwrap();
        assert!((r - 1.0).abs() < 2e-3, "S2xR Ricci {r}");

        let h2r = AmbientSpace::ProductH2xR;
        let p = [0.3, 0.9, -0.4];
        let n = h2r.normalize(&p, &[0.7, 0.5, 0.0]).unwrap();
        let r = h2r.ricci_normal_h(&p, &n, 1e-3).unwrap();
        assert!((r + 1.0).abs() < 2e-3, "H2xR Ricci {r}");
    }

    #[test]
    fn ricci_even_in_n() {
        let space = AmbientSpace::Heisenberg;
        let p = [0.2, 0.1, -0.3];
        let n = space.normalize(&p, &[0.3, -0.5, 0.8]).unwrap();
        let minus: Vec<f64> = n.iter().map(|v| -v).collect();
        let a = space.ricci_normal(&p, &n).unwrap();
        let b = space.ricci_normal(&p, &minus).unwrap();
        assert!((a - b).abs() < 1e-12);
    }

    #[test]
    fn normal_complement_is_unit_and_orthogonal() {
        for space in [
            AmbientSpace::Heisenberg,
            AmbientSpace::Hyperbolic3HalfSpace,
            AmbientSpace::Sl2r,
            AmbientSpace::ProductH2xR,
        ] {
            let p = [0.4, 0.7, 1.2];
            let basis = space.orthonormal_basis(&p).unwrap();
            let n = space.normal_complement(&p, &basis[0], &basis[1]).unwrap();
            assert!((space.norm(&p, &n).unwrap() - 1.0).abs() < 1e-10);
            assert!(space.inner(&p, &n, &basis[0]).unwrap().abs() < 1e-10);
            assert!(space.inner(&p, &n, &basis[1]).unwrap().abs() < 1e-10);
        }
    }

    #[test]
    fn conformal_plane_gauss_curvature_via_riemann() {
        // K = -e^{-2f} Delta f; for f = ln(r^2+1) at the origin K = -4
        let space = AmbientSpace::ConformalPlane {
            profile: RadialProfile::LogQuadratic {
                a: 1.0,
                b: 0.0,
                c: 1.0,
            },
        };
        let p = [0.0, 0.0];
        let basis = space.orthonormal_basis(&p).unwrap();
        let r = space
            .riemann(&p, &basis[0], &basis[1], &basis[0])
            .unwrap();
        let k = space.inner(&p, &r, &basis[1]).unwrap();
        assert!((k + 4.0).abs() < 1e-5, "K(0) = {k}");
    }
}
