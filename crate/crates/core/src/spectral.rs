//! Momentum-space analysis of the walk.
//!
//! Because the evolution is 3-periodic in time, the natural object is the
//! one-period transfer operator at momentum k,
//!
//! ```text
//!     M(k) = S(k) (S(k) C)^2,   S(k) = diag(e^{ik}, 1, e^{-ik}),
//! ```
//!
//! whose spectrum drives everything observable at long times: a flat band
//! lambda_1(k) = 1 is responsible for localization, and the two moving bands
//! lambda_{2,3}(k) = g(k) -+ i sqrt(1 - g(k)^2) transport mass at group
//! velocities h_{2,3}(k) whose range is exactly the support of the long-time
//! position density.

use std::f64::consts::PI;

use crate::coin::{build_coin, CoinParameters};
use crate::error::{Error, Result};
use crate::linalg::{CMat3, CVec3, Complex64};
use crate::quadrature::{integrate_doubling, Converged};
use crate::walk::InitialState;

/// Half-width of the sliver excluded around the removable singularity of the
/// eigenvector formula at k = 0. The integrands extend continuously, so the
/// excluded mass is below 1e-9.
pub const MOMENTUM_EPS: f64 = 1e-9;

/// Eigenvector normalizations below this threshold count as degenerate.
pub const NORM_DEGENERACY_THRESHOLD: f64 = 1e-20;

/// Default and maximum node budgets per momentum segment group.
pub const DEFAULT_NODES: usize = 512;
pub const MAX_NODES: usize = 8192;

/// Node-doubling convergence targets: doubling stops below `QUAD_TARGET`;
/// an estimate above `QUAD_FAIL` is reported as non-convergence.
pub const QUAD_TARGET: f64 = 1e-8;
pub const QUAD_FAIL: f64 = 1e-6;

/// Branch alignment between the eigenvalue labels and the velocity formula,
/// fixed empirically rather than guessed: with lambda_j = g + (-1)^j i
/// sqrt(1-g^2), the closed form in [`group_velocity`] already reproduces the
/// finite-difference phase derivative -(1/3) d(arg lambda_j)/dk at the
/// reference point theta = 5pi/6, k = 1 (h_2 = -0.380637...), so the
/// multiplier is +1 for both moving branches.
pub const VELOCITY_BRANCH_SIGN: [f64; 2] = [1.0, 1.0];

/// diag(e^{ik}, 1, e^{-ik}): the shift in momentum space.
pub fn shift_phase(k: f64) -> CMat3 {
    CMat3::diagonal(
        Complex64::from_polar(1.0, k),
        Complex64::new(1.0, 0.0),
        Complex64::from_polar(1.0, -k),
    )
}

/// The one-period operator M(k) = S(k) (S(k) C)^2 by direct multiplication.
pub fn period_operator(k: f64, params: &CoinParameters) -> CMat3 {
    let s = shift_phase(k);
    let sc = s * build_coin(params).as_cmat3();
    s * sc * sc
}

/// Real part g(k) of the moving eigenvalues:
/// ((1+c)^2/4) cos 3k + (s^2/2) cos 2k + ((1-c)(3+c)/4) cos k - s^2/2.
pub fn dispersion_g(k: f64, params: &CoinParameters) -> f64 {
    let (c, s) = (params.c(), params.s());
    let s2 = s * s;
    (1.0 + c) * (1.0 + c) / 4.0 * (3.0 * k).cos()
        + s2 / 2.0 * (2.0 * k).cos()
        + (1.0 - c) * (3.0 + c) / 4.0 * k.cos()
        - s2 / 2.0
}

/// Eigenvalue of branch j at momentum k: 1 for j=1, g + (-1)^j i sqrt(1-g^2)
/// for j=2,3 (tiny negative 1-g^2 from roundoff is clamped to 0).
pub fn eigenvalue(j: usize, k: f64, params: &CoinParameters) -> Result<Complex64> {
    match j {
        1 => Ok(Complex64::new(1.0, 0.0)),
        2 | 3 => {
            let g = dispersion_g(k, params);
            let im = (1.0 - g * g).max(0.0).sqrt();
            let sign = if j == 2 { 1.0 } else { -1.0 };
            Ok(Complex64::new(g, sign * im))
        }
        _ => Err(Error::InvalidBranch(j)),
    }
}

fn eta(k: f64, c: f64) -> Complex64 {
    Complex64::from_polar(1.0 + c, k) + (1.0 - c)
}

/// Unnormalized eigenvector of branch j from the closed form; `None` when the
/// formula degenerates (k near 0 or an eigenvalue collision).
fn eigenvector_numerator(j: usize, k: f64, params: &CoinParameters) -> Result<CVec3> {
    let lambda = eigenvalue(j, k, params)?;
    let (c, s) = (params.c(), params.s());
    let ek = Complex64::from_polar(1.0, k);
    let emk = Complex64::from_polar(1.0, -k);
    let t1 = ek * eta(k, c) * lambda - eta(-k, c);
    let t2 = emk * eta(-k, c) * lambda - eta(k, c);
    let lp1 = lambda + 1.0;
    Ok(CVec3([
        (Complex64::new(1.0, 0.0) - ek) * t1 * lp1 * s,
        t1 * t2 * std::f64::consts::SQRT_2,
        (Complex64::new(1.0, 0.0) - emk) * t2 * lp1 * s,
    ]))
}

fn try_eigenvector(j: usize, k: f64, params: &CoinParameters) -> Result<CVec3> {
    let w = eigenvector_numerator(j, k, params)?;
    let n = w.norm_sqr();
    if n <= NORM_DEGENERACY_THRESHOLD {
        return Err(Error::DegenerateMomentum { k, norm_sqr: n });
    }
    Ok(w.scaled(Complex64::new(1.0 / n.sqrt(), 0.0)))
}

/// Normalized eigenvector of branch j at momentum k (closed form).
/// Fails where the formula degenerates: k = 0, and for the moving branches
/// also the band-edge collisions.
pub fn eigenvector_v(j: usize, k: f64, params: &CoinParameters) -> Result<CVec3> {
    try_eigenvector(j, k, params)
}

/// The normalization factor N_j(k): squared norm of the closed-form
/// eigenvector numerator before scaling.
pub fn eigenvector_normalization(j: usize, k: f64, params: &CoinParameters) -> Result<f64> {
    Ok(eigenvector_numerator(j, k, params)?.norm_sqr())
}

/// Group velocity h_j(k) = i lambda_j'(k) / (3 lambda_j(k)) of moving branch
/// j in {2, 3}, in closed form. Errors where the sign factor
/// {c - (1+c) cos k} sin k vanishes.
pub fn group_velocity(j: usize, k: f64, params: &CoinParameters) -> Result<f64> {
    if j != 2 && j != 3 {
        return Err(Error::InvalidBranch(j));
    }
    let c = params.c();
    let ck = k.cos();
    let u = (c - (1.0 + c) * ck) * k.sin();
    if u == 0.0 {
        return Err(Error::VelocitySignUndefined(k));
    }
    let branch = if j == 2 { 1.0 } else { -1.0 };
    let numer = 2.0 + c + 3.0 * (1.0 + c) * ck;
    let denom = 3.0
        * (2.0 - c * c + 2.0 * (1.0 + c) * ck + (1.0 + c) * (1.0 + c) * ck * ck).sqrt();
    Ok(VELOCITY_BRANCH_SIGN[j - 2] * branch * u.signum() * numer / denom)
}

/// The full spectral data at one momentum.
#[derive(Clone, Debug)]
pub struct SpectralPoint {
    pub k: f64,
    pub matrix: CMat3,
    pub eigenvalues: [Complex64; 3],
    pub eigenvectors: [CVec3; 3],
    /// h_2(k), h_3(k)
    pub velocities: [f64; 2],
}

impl SpectralPoint {
    /// Computes everything at k; errors at degenerate or sign-undefined k.
    pub fn compute(k: f64, params: &CoinParameters) -> Result<Self> {
        let matrix = period_operator(k, params);
        let eigenvalues = [
            eigenvalue(1, k, params)?,
            eigenvalue(2, k, params)?,
            eigenvalue(3, k, params)?,
        ];
        let eigenvectors = [
            try_eigenvector(1, k, params)?,
            try_eigenvector(2, k, params)?,
            try_eigenvector(3, k, params)?,
        ];
        let velocities = [group_velocity(2, k, params)?, group_velocity(3, k, params)?];
        Ok(SpectralPoint {
            k,
            matrix,
            eigenvalues,
            eigenvectors,
            velocities,
        })
    }

    /// |<v_j | psi>|^2 for j = 1, 2, 3.
    pub fn overlaps(&self, init: &InitialState) -> [f64; 3] {
        let psi = init.as_cvec3();
        [
            self.eigenvectors[0].dot(&psi).norm_sqr(),
            self.eigenvectors[1].dot(&psi).norm_sqr(),
            self.eigenvectors[2].dot(&psi).norm_sqr(),
        ]
    }
}

/// Momentum segments for quadrature: [-pi, pi] minus a sliver at the
/// removable k = 0 singularity, additionally split where the velocity sign
/// factor flips (cos k = c/(1+c)) so that integrands of odd velocity powers
/// stay piecewise-smooth.
pub fn momentum_segments(params: &CoinParameters) -> Vec<(f64, f64)> {
    let mut cuts = vec![MOMENTUM_EPS];
    let c = params.c();
    let ratio = c / (1.0 + c);
    if ratio.abs() <= 1.0 {
        let k0 = ratio.acos();
        if k0 > MOMENTUM_EPS + 1e-6 && k0 < PI - 1e-6 {
            cuts.push(k0);
        }
    }
    cuts.push(PI);
    let mut segments = Vec::with_capacity(2 * (cuts.len() - 1));
    for i in (0..cuts.len() - 1).rev() {
        segments.push((-cuts[i + 1], -cuts[i]));
    }
    for i in 0..cuts.len() - 1 {
        segments.push((cuts[i], cuts[i + 1]));
    }
    segments
}

/// Atom mass quadrature record.
#[derive(Clone, Copy, Debug)]
pub struct DeltaQuadrature {
    /// The overlap integral of the initial state with the flat band.
    pub value: f64,
    /// Node budget of the final doubling pass.
    pub nodes: usize,
    /// |final - half-budget| convergence estimate.
    pub estimate: f64,
}

fn overlap_density(j: usize, k: f64, params: &CoinParameters, psi: &CVec3) -> f64 {
    match try_eigenvector(j, k, params) {
        Ok(v) => v.dot(psi).norm_sqr(),
        // quadrature nodes never land on the degenerate set; a miss here
        // contributes a measure-zero 0 instead of poisoning the integral
        Err(_) => 0.0,
    }
}

/// The atom mass Delta = integral of |<v_1(k)|psi>|^2 dk/2pi, by composite
/// Gauss-Legendre with node doubling up to `nodes` per pass (>= 64).
pub fn delta_mass(
    init: &InitialState,
    params: &CoinParameters,
    nodes: usize,
) -> Result<DeltaQuadrature> {
    if nodes < 64 {
        return Err(Error::TooFewNodes { min: 64, got: nodes });
    }
    let psi = init.as_cvec3();
    let segments = momentum_segments(params);
    let out = integrate_doubling(
        &segments,
        DEFAULT_NODES.min(nodes),
        nodes,
        QUAD_TARGET,
        QUAD_FAIL,
        |k| overlap_density(1, k, params, &psi) / (2.0 * PI),
    )?;
    Ok(DeltaQuadrature {
        value: out.value,
        nodes: out.nodes,
        estimate: out.estimate,
    })
}

/// Limit of E[(X_t/t)^r]: the moving-branch integral
/// sum_j int h_j(k)^r |<v_j|psi>|^2 dk/2pi, plus 0^r times the atom mass.
pub fn moment_limit(r: u32, init: &InitialState, params: &CoinParameters) -> Result<f64> {
    let psi = init.as_cvec3();
    let segments = momentum_segments(params);
    let ballistic: Converged = integrate_doubling(
        &segments,
        DEFAULT_NODES,
        MAX_NODES,
        QUAD_TARGET,
        QUAD_FAIL,
        |k| {
            let mut total = 0.0;
            for j in [2usize, 3] {
                let w = overlap_density(j, k, params, &psi);
                let factor = if r == 0 {
                    1.0
                } else {
                    match group_velocity(j, k, params) {
                        Ok(h) => h.powi(r as i32),
                        Err(_) => 0.0,
                    }
                };
                total += factor * w;
            }
            total / (2.0 * PI)
        },
    )?;
    if r == 0 {
        let atom = delta_mass(init, params, MAX_NODES)?;
        Ok(ballistic.value + atom.value)
    } else {
        Ok(ballistic.value)
    }
}

/// The seven homogeneous linear conditions a delocalized initial state would
/// have to satisfy, as rows acting on (alpha, beta, gamma). They are the
/// Fourier coefficients (up to nonzero prefactors) of the flat-band overlap,
/// so rank 3 means only the zero vector delocalizes — i.e. every normalized
/// initial state keeps a positive atom mass.
pub fn delocalization_conditions(params: &CoinParameters) -> [[f64; 3]; 7] {
    let (c, s) = (params.c(), params.s());
    let r2 = std::f64::consts::SQRT_2;
    [
        [r2 * s, 1.0 + c, 0.0],
        [r2 * c, -s, 0.0],
        [2.0 * r2 * (1.0 - c) * s, (1.0 - c) * (1.0 + 3.0 * c), -r2 * (1.0 + c) * s],
        [c * s, r2 * (1.0 + c * c), c * s],
        [-r2 * (1.0 + c) * s, (1.0 - c) * (1.0 + 3.0 * c), 2.0 * r2 * (1.0 - c) * s],
        [0.0, -s, r2 * c],
        [0.0, 1.0 + c, r2 * s],
    ]
}

/// Rank of a real matrix with 3 columns by Gaussian elimination with partial
/// pivoting; pivots below `1e-10 * max|entry|` count as zero.
pub fn column_rank(rows: &[[f64; 3]]) -> usize {
    let mut a: Vec<[f64; 3]> = rows.to_vec();
    let scale = a
        .iter()
        .flatten()
        .map(|x| x.abs())
        .fold(0.0, f64::max);
    if scale == 0.0 {
        return 0;
    }
    let tol = scale * 1e-10;
    let mut rank = 0;
    for col in 0..3 {
        let pivot = (rank..a.len())
            .max_by(|&i, &j| a[i][col].abs().total_cmp(&a[j][col].abs()))
            .filter(|&i| a[i][col].abs() > tol);
        let Some(p) = pivot else { continue };
        a.swap(rank, p);
        for r in rank + 1..a.len() {
            let factor = a[r][col] / a[rank][col];
            for cc in col..3 {
                a[r][cc] -= factor * a[rank][cc];
            }
        }
        rank += 1;
        if rank == 3 {
            break;
        }
    }
    rank
}

/// Outcome of the delocalization impossibility check.
#[derive(Clone, Copy, Debug)]
pub struct RankReport {
    pub rank: usize,
    /// True iff rank = 3: the condition system admits only the zero solution,
    /// so the atom mass is strictly positive for every normalized start.
    pub only_zero_solution: bool,
}

pub fn delocalization_rank_check(params: &CoinParameters) -> RankReport {
    let rank = column_rank(&delocalization_conditions(params));
    RankReport {
        rank,
        only_zero_solution: rank == 3,
    }
}
