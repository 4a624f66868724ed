//! Minimal fixed-size complex linear algebra for the 3-dimensional coin space.
//!
//! The whole crate only ever needs 3-vectors and 3x3 matrices, so these are
//! plain stack types with the handful of operations used by the evolution and
//! spectral code. No general-purpose linear algebra dependency is warranted.

use std::ops::{Add, Mul, Sub};

pub use num_complex::Complex64;

pub const C_ZERO: Complex64 = Complex64::new(0.0, 0.0);
pub const C_ONE: Complex64 = Complex64::new(1.0, 0.0);

/// Complex 3-vector (coin-space amplitudes ordered by coin state -1, 0, +1).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CVec3(pub [Complex64; 3]);

/// Complex 3x3 matrix, row-major.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CMat3(pub [[Complex64; 3]; 3]);

impl CVec3 {
    pub fn zero() -> Self {
        CVec3([C_ZERO; 3])
    }

    pub fn from_reals(x: f64, y: f64, z: f64) -> Self {
        CVec3([
            Complex64::new(x, 0.0),
            Complex64::new(y, 0.0),
            Complex64::new(z, 0.0),
        ])
    }

    /// Hermitian inner product; conjugates `self`.
    pub fn dot(&self, other: &CVec3) -> Complex64 {
        self.0
            .iter()
            .zip(other.0.iter())
            .map(|(a, b)| a.conj() * b)
            .sum()
    }

    pub fn norm_sqr(&self) -> f64 {
        self.0.iter().map(|z| z.norm_sqr()).sum()
    }

    pub fn norm(&self) -> f64 {
        self.norm_sqr().sqrt()
    }

    pub fn scaled(&self, z: Complex64) -> CVec3 {
        CVec3([self.0[0] * z, self.0[1] * z, self.0[2] * z])
    }

    /// Outer product `self * other^dagger`.
    pub fn outer(&self, other: &CVec3) -> CMat3 {
        let mut m = [[C_ZERO; 3]; 3];
        for (i, row) in m.iter_mut().enumerate() {
            for (j, e) in row.iter_mut().enumerate() {
                *e = self.0[i] * other.0[j].conj();
            }
        }
        CMat3(m)
    }
}

impl Add for CVec3 {
    type Output = CVec3;
    fn add(self, rhs: CVec3) -> CVec3 {
        CVec3([
            self.0[0] + rhs.0[0],
            self.0[1] + rhs.0[1],
            self.0[2] + rhs.0[2],
        ])
    }
}

impl Sub for CVec3 {
    type Output = CVec3;
    fn sub(self, rhs: CVec3) -> CVec3 {
        CVec3([
            self.0[0] - rhs.0[0],
            self.0[1] - rhs.0[1],
            self.0[2] - rhs.0[2],
        ])
    }
}

impl CMat3 {
    pub fn zero() -> Self {
        CMat3([[C_ZERO; 3]; 3])
    }

    pub fn identity() -> Self {
        let mut m = [[C_ZERO; 3]; 3];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = C_ONE;
        }
        CMat3(m)
    }

    pub fn from_real(r: [[f64; 3]; 3]) -> Self {
        let mut m = [[C_ZERO; 3]; 3];
        for i in 0..3 {
            for j in 0..3 {
                m[i][j] = Complex64::new(r[i][j], 0.0);
            }
        }
        CMat3(m)
    }

    pub fn diagonal(d0: Complex64, d1: Complex64, d2: Complex64) -> Self {
        let mut m = [[C_ZERO; 3]; 3];
        m[0][0] = d0;
        m[1][1] = d1;
        m[2][2] = d2;
        CMat3(m)
    }

    pub fn adjoint(&self) -> CMat3 {
        let mut m = [[C_ZERO; 3]; 3];
        for i in 0..3 {
            for j in 0..3 {
                m[i][j] = self.0[j][i].conj();
            }
        }
        CMat3(m)
    }

    pub fn scaled(&self, z: Complex64) -> CMat3 {
        let mut m = self.0;
        for row in m.iter_mut() {
            for e in row.iter_mut() {
                *e *= z;
            }
        }
        CMat3(m)
    }

    pub fn det(&self) -> Complex64 {
        let m = &self.0;
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    }

    /// Largest entry modulus; handy for residual checks.
    pub fn max_abs(&self) -> f64 {
        self.0
            .iter()
            .flatten()
            .map(|z| z.norm())
            .fold(0.0, f64::max)
    }
}

impl Mul<CVec3> for CMat3 {
    type Output = CVec3;
    fn mul(self, v: CVec3) -> CVec3 {
        let mut out = [C_ZERO; 3];
        for (i, row) in self.0.iter().enumerate() {
            out[i] = row[0] * v.0[0] + row[1] * v.0[1] + row[2] * v.0[2];
        }
        CVec3(out)
    }
}

impl Mul for CMat3 {
    type Output = CMat3;
    fn mul(self, rhs: CMat3) -> CMat3 {
        let mut out = [[C_ZERO; 3]; 3];
        for i in 0..3 {
            for j in 0..3 {
                out[i][j] =
                    self.0[i][0] * rhs.0[0][j] + self.0[i][1] * rhs.0[1][j] + self.0[i][2] * rhs.0[2][j];
            }
        }
        CMat3(out)
    }
}

impl Add for CMat3 {
    type Output = CMat3;
    fn add(self, rhs: CMat3) -> CMat3 {
        let mut out = self.0;
        for i in 0..3 {
            for j in 0..3 {
                out[i][j] += rhs.0[i][j];
            }
        }
        CMat3(out)
    }
}

impl Sub for CMat3 {
    type Output = CMat3;
    fn sub(self, rhs: CMat3) -> CMat3 {
        let mut out = self.0;
        for i in 0..3 {
            for j in 0..3 {
                out[i][j] -= rhs.0[i][j];
            }
        }
        CMat3(out)
    }
}

/// Pairwise (cascade) summation: O(log n) roundoff growth instead of O(n),
/// used for probability totals and moments over long position ranges.
pub fn pairwise_sum(xs: &[f64]) -> f64 {
    if xs.len() <= 32 {
        return xs.iter().sum();
    }
    let mid = xs.len() / 2;
    pairwise_sum(&xs[..mid]) + pairwise_sum(&xs[mid..])
}
