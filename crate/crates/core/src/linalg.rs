//! Small dense helpers sized for coordinate dimensions 2..4. Everything is
//! stack-allocated; `SquareMat` holds up to 4x4.

#[allow(unused_imports)]
use crate::float::prelude::*;
use alloc::vec::Vec;

pub fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn norm(v: &[f64]) -> f64 {
    dot(v, v).sqrt()
}

pub fn scale(v: &[f64], s: f64) -> Vec<f64> {
    v.iter().map(|x| x * s).collect()
}

pub fn add(a: &[f64], b: &[f64]) -> Vec<f64> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub(a: &[f64], b: &[f64]) -> Vec<f64> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn axpy(acc: &mut [f64], s: f64, v: &[f64]) {
    for (a, x) in acc.iter_mut().zip(v) {
        *a += s * x;
    }
}

pub fn cross3(a: &[f64], b: &[f64]) -> [f64; 3] {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

/// Hodge complement in R^4: the vector orthogonal to a, b, c with
/// orientation given by the standard volume form.
pub fn hodge4(a: &[f64], b: &[f64], c: &[f64]) -> [f64; 4] {
    let minor = |i: usize, j: usize, k: usize| -> f64 {
        a[i] * (b[j] * c[k] - b[k] * c[j]) - a[j] * (b[i] * c[k] - b[k] * c[i])
            + a[k] * (b[i] * c[j] - b[j] * c[i])
    };
    // d^l = eps_{ijk l} a^i b^j c^k; expanding the 4x4 determinant along
    // the last row gives alternating 3x3 minors.
    [
        -minor(1, 2, 3),
        minor(0, 2, 3),
        -minor(0, 1, 3),
        minor(0, 1, 2),
    ]
}

/// Square matrix of runtime dimension n <= 4.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SquareMat {
    pub n: usize,
    a: [f64; 16],
}

impl SquareMat {
    pub fn zeros(n: usize) -> Self {
        debug_assert!((1..=4).contains(&n));
        SquareMat { n, a: [0.0; 16] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.set(i, i, 1.0);
        }
        m
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.a[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        self.a[i * self.n + j] = v;
    }

    pub fn add_to(&mut self, i: usize, j: usize, v: f64) {
        self.a[i * self.n + j] += v;
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.a[i * self.n..(i + 1) * self.n]
    }

    pub fn mul_vec(&self, v: &[f64]) -> Vec<f64> {
        (0..self.n).map(|i| dot(self.row(i), v)).collect()
    }

    /// Bilinear form v^T M w.
    pub fn bilinear(&self, v: &[f64], w: &[f64]) -> f64 {
        (0..self.n).map(|i| v[i] * dot(self.row(i), w)).sum()
    }

    pub fn max_asymmetry(&self) -> f64 {
        let mut m = 0.0f64;
        for i in 0..self.n {
            for j in 0..i {
                m = m.max((self.get(i, j) - self.get(j, i)).abs());
            }
        }
        m
    }

    pub fn det(&self) -> f64 {
        match self.n {
            1 => self.get(0, 0),
            2 => self.get(0, 0) * self.get(1, 1) - self.get(0, 1) * self.get(1, 0),
            3 => {
                self.get(0, 0) * (self.get(1, 1) * self.get(2, 2) - self.get(1, 2) * self.get(2, 1))
                    - self.get(0, 1)
                        * (self.get(1, 0) * self.get(2, 2) - self.get(1, 2) * self.get(2, 0))
                    + self.get(0, 2)
                        * (self.get(1, 0) * self.get(2, 1) - self.get(1, 1) * self.get(2, 0))
            }
            _ => {
                // Laplace along the first row; n = 4 only.
                let mut d = 0.0;
                for j in 0..4 {
                    d += self.get(0, j) * self.cofactor(0, j);
                }
                d
            }
        }
    }

    fn cofactor(&self, ri: usize, rj: usize) -> f64 {
        let mut sub = SquareMat::zeros(self.n - 1);
        let mut r = 0;
        for i in 0..self.n {
            if i == ri {
                continue;
            }
            let mut c = 0;
            for j in 0..self.n {
                if j == rj {
                    continue;
                }
                sub.set(r, c, self.get(i, j));
                c += 1;
            }
            r += 1;
        }
        let sign = if (ri + rj) % 2 == 0 { 1.0 } else { -1.0 };
        sign * sub.det()
    }

    /// Inverse by Gauss-Jordan with partial pivoting. Returns None for a
    /// numerically singular matrix.
    pub fn inverse(&self) -> Option<SquareMat> {
        let n = self.n;
        let mut a = *self;
        let mut inv = SquareMat::identity(n);
        for col in 0..n {
            let mut piv = col;
            for r in col + 1..n {
                if a.get(r, col).abs() > a.get(piv, col).abs() {
                    piv = r;
                }
            }
            if a.get(piv, col).abs() < 1e-300 {
                return None;
            }
            if piv != col {
                for j in 0..n {
                    let (x, y) = (a.get(col, j), a.get(piv, j));
                    a.set(col, j, y);
                    a.set(piv, j, x);
                    let (x, y) = (inv.get(col, j), inv.get(piv, j));
                    inv.set(col, j, y);
                    inv.set(piv, j, x);
                }
            }
            let d = a.get(col, col);
            for j in 0..n {
                a.set(col, j, a.get(col, j) / d);
                inv.set(col, j, inv.get(col, j) / d);
            }
            for r in 0..n {
                if r == col {
                    continue;
                }
                let f = a.get(r, col);
                if f == 0.0 {
                    continue;
                }
                for j in 0..n {
                    a.set(r, j, a.get(r, j) - f * a.get(col, j));
                    inv.set(r, j, inv.get(r, j) - f * inv.get(col, j));
                }
            }
        }
        Some(inv)
    }

    /// Smallest eigenvalue of a symmetric matrix via cyclic Jacobi sweeps.
    pub fn sym_eig_min(&self) -> f64 {
        let n = self.n;
        let mut a = *self;
        for _ in 0..60 {
            let mut off = 0.0f64;
            for i in 0..n {
                for j in i + 1..n {
                    off = off.max(a.get(i, j).abs());
                }
            }
            if off < 1e-14 {
                break;
            }
            for p in 0..n {
                for q in p + 1..n {
                    let apq = a.get(p, q);
                    if apq.abs() < 1e-300 {
                        continue;
                    }
                    let theta = 0.5 * (2.0 * apq).atan2(a.get(p, p) - a.get(q, q));
                    let (c, s) = (theta.cos(), theta.sin());
                    let mut b = a;
                    for k in 0..n {
                        b.set(p, k, c * a.get(p, k) + s * a.get(q, k));
                        b.set(q, k, -s * a.get(p, k) + c * a.get(q, k));
                    }
                    let mut b2 = b;
                    for k in 0..n {
                        b2.set(k, p, c * b.get(k, p) + s * b.get(k, q));
                        b2.set(k, q, -s * b.get(k, p) + c * b.get(k, q));
                    }
                    a = b2;
                }
            }
        }
        let mut m = a.get(0, 0);
        for i in 1..n {
            m = m.min(a.get(i, i));
        }
        m
    }
}

/// Rank-3 array of Christoffel symbols Gamma^k_{ij}, dimension <= 4.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Christoffel {
    pub n: usize,
    g: [f64; 64],
}

impl Christoffel {
    pub fn zeros(n: usize) -> Self {
        debug_assert!((1..=4).contains(&n));
        Christoffel { n, g: [0.0; 64] }
    }

    pub fn get(&self, k: usize, i: usize, j: usize) -> f64 {
        self.g[(k * self.n + i) * self.n + j]
    }

    pub fn set(&mut self, k: usize, i: usize, j: usize, v: f64) {
        self.g[(k * self.n + i) * self.n + j] = v;
    }

    /// Sets Gamma^k_{ij} = Gamma^k_{ji} = v.
    pub fn set_sym(&mut self, k: usize, i: usize, j: usize, v: f64) {
        self.set(k, i, j, v);
        self.set(k, j, i, v);
    }

    /// Contraction Gamma^k_{ij} u^i v^j for all k.
    pub fn contract(&self, u: &[f64], v: &[f64]) -> Vec<f64> {
        let n = self.n;
        let mut out = alloc::vec![0.0; n];
        for k in 0..n {
            let mut acc = 0.0;
            for i in 0..n {
                for j in 0..n {
                    acc += self.get(k, i, j) * u[i] * v[j];
                }
            }
            out[k] = acc;
        }
        out
    }

    pub fn max_abs_diff(&self, other: &Christoffel) -> f64 {
        self.g
            .iter()
            .zip(other.g.iter())
            .fold(0.0f64, |m, (a, b)| m.max((a - b).abs()))
    }

    pub fn max_lower_asymmetry(&self) -> f64 {
        let mut m = 0.0f64;
        for k in 0..self.n {
            for i in 0..self.n {
                for j in 0..i {
                    m = m.max((self.get(k, i, j) - self.get(k, j, i)).abs());
                }
            }
        }
        m
    }
}
