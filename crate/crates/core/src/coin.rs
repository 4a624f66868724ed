//! The parameterized three-state coin.
//!
//! The coin acts on the internal space spanned by coin states (-1, 0, +1):
//!
//! ```text
//!         [ -(1+c)/2   s/sqrt2    (1-c)/2  ]
//!     C = [  s/sqrt2   c          s/sqrt2  ]      c = cos(theta), s = sin(theta)
//!         [  (1-c)/2   s/sqrt2   -(1+c)/2  ]
//! ```
//!
//! `theta = arccos(-1/3)` gives the Grover diffusion matrix with entries
//! -1/3 and 2/3. Multiples of pi are rejected: there the coin is diagonal and
//! the walk degenerates to free shifts.

use crate::error::{Error, Result};
use crate::linalg::CMat3;

/// Coin angle for which C is the 3x3 Grover diffusion matrix.
pub fn grover_angle() -> f64 {
    (-1.0f64 / 3.0).acos()
}

/// Validated coin angle with cached cosine and sine.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CoinParameters {
    theta: f64,
    c: f64,
    s: f64,
}

impl CoinParameters {
    /// Angles within this distance of a multiple of pi count as degenerate.
    pub const DEGENERACY_TOL: f64 = 1e-12;

    pub fn new(theta: f64) -> Result<Self> {
        if !theta.is_finite() {
            return Err(Error::NonFiniteAngle(theta));
        }
        let r = theta.rem_euclid(std::f64::consts::PI);
        if r < Self::DEGENERACY_TOL || std::f64::consts::PI - r < Self::DEGENERACY_TOL {
            return Err(Error::DegenerateAngle(theta));
        }
        Ok(CoinParameters {
            theta,
            c: theta.cos(),
            s: theta.sin(),
        })
    }

    pub fn grover() -> Self {
        Self::new(grover_angle()).expect("grover angle is non-degenerate")
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    /// cos(theta)
    pub fn c(&self) -> f64 {
        self.c
    }

    /// sin(theta)
    pub fn s(&self) -> f64 {
        self.s
    }
}

/// The coin matrix; real entries, rows/columns ordered by coin state (-1, 0, +1).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CoinOperator {
    pub rows: [[f64; 3]; 3],
}

/// Builds the coin matrix for the given angle.
pub fn build_coin(params: &CoinParameters) -> CoinOperator {
    let (c, s) = (params.c(), params.s());
    let sq = s / std::f64::consts::SQRT_2;
    CoinOperator {
        rows: [
            [-(1.0 + c) / 2.0, sq, (1.0 - c) / 2.0],
            [sq, c, sq],
            [(1.0 - c) / 2.0, sq, -(1.0 + c) / 2.0],
        ],
    }
}

impl CoinOperator {
    pub fn as_cmat3(&self) -> CMat3 {
        CMat3::from_real(self.rows)
    }
}
