//! The long-time position distribution of the rescaled walk X_t/t.
//!
//! As t grows, the law of X_t/t converges to a mixture of a point mass at the
//! origin (weight Delta, the localized part) and an absolutely continuous
//! part supported on the union of two mirror-image intervals
//!
//! ```text
//!     D1 = (-(1+2c)/3, sqrt(5+4c)/3),       D2 = -D1,        c = cos(theta).
//! ```
//!
//! For c < -1/2 the intervals pull apart and the density vanishes identically
//! on a symmetric window around the origin: the distribution has a gap. The
//! continuous density is nu(alpha,beta,gamma; x) f(x) on D1 plus the mirrored
//! term nu(gamma,beta,alpha; -x) f(-x) on D2, with f carrying inverse
//! square-root singularities at the four interval endpoints.

use std::f64::consts::PI;

use crate::coin::CoinParameters;
use crate::error::{Error, Result};
use crate::linalg::Complex64;
use crate::measurement::ProbabilityDistribution;
use crate::quadrature::integrate_sqrt_endpoints;
use crate::spectral::{
    delta_mass, DeltaQuadrature, DEFAULT_NODES, MAX_NODES, QUAD_FAIL, QUAD_TARGET,
};
use crate::walk::InitialState;

/// Evaluation points closer than this to a support endpoint are rejected
/// instead of returning a huge, meaningless float.
pub const ENDPOINT_EPS: f64 = 1e-9;

/// Tolerance for the mass-closure self-check Delta + continuous = 1.
pub const MASS_CLOSURE_TOL: f64 = 1e-6;

/// The two open intervals supporting the continuous part of the limit.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SupportIntervals {
    pub d1: (f64, f64),
    pub d2: (f64, f64),
}

impl SupportIntervals {
    pub fn for_coin(params: &CoinParameters) -> Self {
        let c = params.c();
        let lo = -(1.0 + 2.0 * c) / 3.0;
        let hi = (5.0 + 4.0 * c).sqrt() / 3.0;
        SupportIntervals {
            d1: (lo, hi),
            d2: (-hi, -lo),
        }
    }

    /// Top propagation speed: the rescaled support is contained in
    /// [-speed, speed], with speed = sqrt(5+4c)/3 < 1.
    pub fn speed(&self) -> f64 {
        self.d1.1
    }

    /// The open symmetric window around 0 where the density vanishes, if the
    /// intervals are disjoint (c < -1/2); `None` when they overlap.
    pub fn gap(&self) -> Option<(f64, f64)> {
        if self.d1.0 > 0.0 {
            Some((-self.d1.0, self.d1.0))
        } else {
            None
        }
    }

    pub fn in_d1(&self, x: f64) -> bool {
        self.d1.0 < x && x < self.d1.1
    }

    pub fn in_d2(&self, x: f64) -> bool {
        self.d2.0 < x && x < self.d2.1
    }

    pub fn in_support(&self, x: f64) -> bool {
        self.in_d1(x) || self.in_d2(x)
    }

    fn endpoints(&self) -> [f64; 4] {
        [self.d1.0, self.d1.1, self.d2.0, self.d2.1]
    }
}

/// D(x) = (1-c){2(5+4c) - 9(1+c)x^2}, clamped at 0 against roundoff.
/// Strictly positive on the closure of D1 for every admissible angle.
fn big_d(x: f64, params: &CoinParameters) -> f64 {
    let c = params.c();
    let d = (1.0 - c) * (2.0 * (5.0 + 4.0 * c) - 9.0 * (1.0 + c) * x * x);
    debug_assert!(d > -1e-12, "D(x) negative beyond roundoff at x={x}");
    d.max(0.0)
}

/// The polarization factors entering the weight nu at rescaled position x.
#[derive(Clone, Copy, Debug)]
pub struct NuFactors {
    pub xi_plus: f64,
    pub xi_minus: f64,
    pub chi1: f64,
    pub chi2: f64,
}

pub fn nu_factors(x: f64, params: &CoinParameters) -> NuFactors {
    let (c, s) = (params.c(), params.s());
    let sd = big_d(x, params).sqrt();
    let r2 = std::f64::consts::SQRT_2;
    NuFactors {
        xi_plus: (2.0 * (5.0 + 4.0 * c) + 9.0 * (1.0 + c) * x + sd) / (2.0 * r2),
        xi_minus: (-2.0 * (5.0 + 4.0 * c) + 9.0 * (1.0 + c) * x + sd) / (2.0 * r2),
        chi1: 3.0 * (s * s * x - (1.0 + c) * sd) / (2.0 * s),
        chi2: (3.0 * (1.0 - c) * (4.0 + 3.0 * c) * x - (2.0 + c) * sd) / s,
    }
}

/// The quadratic weight nu(a, b, g; x) coupling the initial spin components
/// to the rescaled position x.
pub fn nu_weight(
    a: Complex64,
    b: Complex64,
    g: Complex64,
    x: f64,
    params: &CoinParameters,
) -> f64 {
    let f = nu_factors(x, params);
    f.xi_minus * f.xi_minus * a.norm_sqr()
        + f.chi1 * f.chi1 * b.norm_sqr()
        + f.xi_plus * f.xi_plus * g.norm_sqr()
        - f.xi_minus * f.chi2 * (a * b.conj()).re
        - f.xi_plus * f.chi2 * (b * g.conj()).re
        + (f.chi1 * f.chi1 - f.chi2 * f.chi2 / 2.0) * (g * a.conj()).re
}

/// The state-independent density factor f(x) for x strictly inside D1.
/// Diverges like an inverse square root at both endpoints; callers are
/// responsible for staying clear of them.
pub fn density_f(x: f64, params: &CoinParameters) -> f64 {
    let c = params.c();
    let d = big_d(x, params);
    let sd = d.sqrt();
    let x2 = x * x;
    let one_minus = 1.0 - x2;
    assert!(
        one_minus > 0.0,
        "density evaluated at |x| >= 1, outside the unit-speed cone"
    );
    let w_plus = 1.0 + 2.0 * c - 3.0 * c * x2 + x * sd;
    let w_minus = 5.0 + 4.0 * c - 3.0 * (2.0 + c) * x2 - x * sd;
    let ww = (w_plus * w_minus).max(0.0);
    let five = 5.0 + 4.0 * c;
    (1.0 - c) * (five - (4.0 + 5.0 * c) * x2 + x * sd)
        / (PI * five * five * one_minus * ww.sqrt() * sd)
}

/// The limit law of X_t/t for one coin angle and initial state: atom mass at
/// the origin plus the continuous density on D1 and D2, self-checked for
/// mass closure at construction.
#[derive(Clone, Debug)]
pub struct LimitDensityModel {
    params: CoinParameters,
    init: InitialState,
    support: SupportIntervals,
    delta: DeltaQuadrature,
    continuous_mass: f64,
}

impl LimitDensityModel {
    /// Builds the model with the default momentum-quadrature budget.
    pub fn new(init: &InitialState, params: &CoinParameters) -> Result<Self> {
        Self::with_nodes(init, params, MAX_NODES)
    }

    /// Builds the model with an explicit momentum-node cap for the atom mass.
    pub fn with_nodes(
        init: &InitialState,
        params: &CoinParameters,
        nodes: usize,
    ) -> Result<Self> {
        let support = SupportIntervals::for_coin(params);
        assert!(support.speed() < 1.0);
        let delta = delta_mass(init, params, nodes)?;
        if !(delta.value > 0.0 && delta.value <= 1.0 + 1e-12) {
            return Err(Error::AtomMassOutOfRange(delta.value));
        }
        let (a, b, g) = (init.alpha(), init.beta(), init.gamma());
        // The D2 term mirrors onto D1 under y = -x, so both pieces integrate
        // over D1 against the same singular factor f.
        let integral = integrate_sqrt_endpoints(
            support.d1.0,
            support.d1.1,
            DEFAULT_NODES,
            MAX_NODES,
            QUAD_TARGET,
            QUAD_FAIL,
            |x| {
                (nu_weight(a, b, g, x, params) + nu_weight(g, b, a, x, params))
                    * density_f(x, params)
            },
        )?;
        let continuous_mass = integral.value;
        let defect = (delta.value + continuous_mass - 1.0).abs();
        if defect > MASS_CLOSURE_TOL {
            return Err(Error::MassClosure {
                delta: delta.value,
                continuous: continuous_mass,
                defect,
            });
        }
        Ok(LimitDensityModel {
            params: *params,
            init: init.clone(),
            support,
            delta,
            continuous_mass,
        })
    }

    pub fn params(&self) -> &CoinParameters {
        &self.params
    }

    pub fn init(&self) -> &InitialState {
        &self.init
    }

    pub fn support(&self) -> &SupportIntervals {
        &self.support
    }

    /// Weight of the point mass at the origin.
    pub fn delta(&self) -> f64 {
        self.delta.value
    }

    pub fn delta_quadrature(&self) -> &DeltaQuadrature {
        &self.delta
    }

    /// Mass of the continuous part; delta() + continuous_mass() = 1 within
    /// the closure tolerance.
    pub fn continuous_mass(&self) -> f64 {
        self.continuous_mass
    }

    /// The continuous density at rescaled position x (the atom excluded).
    /// Zero outside the support; rejects x within [`ENDPOINT_EPS`] of an
    /// interval endpoint.
    pub fn continuous_density(&self, x: f64) -> Result<f64> {
        for e in self.support.endpoints() {
            if (x - e).abs() < ENDPOINT_EPS {
                return Err(Error::EndpointSingularity {
                    x,
                    eps: ENDPOINT_EPS,
                });
            }
        }
        let (a, b, g) = (self.init.alpha(), self.init.beta(), self.init.gamma());
        let mut value = 0.0;
        if self.support.in_d1(x) {
            value += nu_weight(a, b, g, x, &self.params) * density_f(x, &self.params);
        }
        if self.support.in_d2(x) {
            value += nu_weight(g, b, a, -x, &self.params) * density_f(-x, &self.params);
        }
        if value < 0.0 {
            debug_assert!(value > -1e-12, "density negative beyond roundoff at x={x}");
            value = 0.0;
        }
        Ok(value)
    }

    /// Large-t approximation of P(X_t = x) away from the origin:
    /// (1/t) times the continuous density at x/t; 0 at x = 0 where the
    /// approximation does not apply.
    pub fn approximate_prob(&self, x: i64, t: u64) -> Result<f64> {
        assert!(t >= 1);
        if x == 0 {
            return Ok(0.0);
        }
        let u = x as f64 / t as f64;
        Ok(self.continuous_density(u)? / t as f64)
    }
}

/// One sliding-window row of a simulation-vs-limit comparison.
#[derive(Clone, Copy, Debug)]
pub struct ComparisonRow {
    pub center: i64,
    /// Average of simulated P(X_t = x) over the window around `center`.
    pub simulated: f64,
    /// Same average with the large-t approximation substituted for P.
    pub approximate: f64,
    pub abs_gap: f64,
}

/// Aggregated windowed comparison between a simulated distribution at finite
/// t and the limit model's pointwise approximation.
#[derive(Clone, Debug)]
pub struct WindowedComparison {
    pub rows: Vec<ComparisonRow>,
    pub mean_abs_gap: f64,
    pub max_abs_gap: f64,
}

/// Slides a window of `width` sites (rounded up to odd) over all centers
/// with min_abs_x <= |center| <= floor(speed * t) + 2 and compares the
/// window-averaged probabilities. Averaging irons out the parity and period-3
/// oscillations that the smooth limit density cannot resolve.
pub fn compare_windowed(
    dist: &ProbabilityDistribution,
    model: &LimitDensityModel,
    width: usize,
    min_abs_x: i64,
) -> Result<WindowedComparison> {
    assert!(width >= 1);
    assert!(min_abs_x >= 1);
    let t = dist.time().max(1);
    let half = (width / 2) as i64;
    let max_abs = (model.support().speed() * t as f64).floor() as i64 + 2;
    let mut rows = Vec::new();
    let mut gap_sum = 0.0;
    let mut gap_max = 0.0f64;
    let mut centers: Vec<i64> = (min_abs_x..=max_abs).collect();
    let negatives: Vec<i64> = centers.iter().map(|&x| -x).rev().collect();
    centers.splice(0..0, negatives);
    let cells = (2 * half + 1) as f64;
    for &center in &centers {
        let mut simulated = 0.0;
        let mut approximate = 0.0;
        for x in center - half..=center + half {
            simulated += dist.probability(x);
            approximate += model.approximate_prob(x, dist.time())?;
        }
        simulated /= cells;
        approximate /= cells;
        let abs_gap = (simulated - approximate).abs();
        gap_sum += abs_gap;
        gap_max = gap_max.max(abs_gap);
        rows.push(ComparisonRow {
            center,
            simulated,
            approximate,
            abs_gap,
        });
    }
    let mean_abs_gap = if rows.is_empty() {
        0.0
    } else {
        gap_sum / rows.len() as f64
    };
    Ok(WindowedComparison {
        rows,
        mean_abs_gap,
        max_abs_gap: gap_max,
    })
}
