//! Position measurement: probability distributions, moments, and the
//! empirical gap metric.

use std::collections::BTreeMap;

use crate::coin::CoinParameters;
use crate::error::{Error, Result};
use crate::linalg::pairwise_sum;
use crate::walk::WalkState;

/// Position probabilities at one instant; zero entries are omitted.
#[derive(Clone, Debug)]
pub struct ProbabilityDistribution {
    time: u64,
    probs: BTreeMap<i64, f64>,
}

/// Measures a walk state: p(x) is the squared norm of the coin 3-vector at x.
pub fn distribution(state: &WalkState) -> ProbabilityDistribution {
    let mut probs = BTreeMap::new();
    for (x, a) in state.iter() {
        let p = a[0].norm_sqr() + a[1].norm_sqr() + a[2].norm_sqr();
        if p > 0.0 {
            probs.insert(x, p);
        }
    }
    ProbabilityDistribution {
        time: state.time(),
        probs,
    }
}

impl ProbabilityDistribution {
    pub fn time(&self) -> u64 {
        self.time
    }

    pub fn probability(&self, x: i64) -> f64 {
        self.probs.get(&x).copied().unwrap_or(0.0)
    }

    pub fn len(&self) -> usize {
        self.probs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.probs.is_empty()
    }

    /// Iterates `(position, probability)` in increasing position order.
    pub fn iter(&self) -> impl Iterator<Item = (i64, f64)> + '_ {
        self.probs.iter().map(|(&x, &p)| (x, p))
    }

    /// Total probability, summed pairwise; 1 within 1e-10 for t <= 1e4.
    pub fn total_mass(&self) -> f64 {
        let terms: Vec<f64> = self.probs.values().copied().collect();
        pairwise_sum(&terms)
    }

    /// r-th moment of the position, of x/t when `rescaled`. At t=0 the
    /// rescaled moment is defined by convention as 1 for r=0 and 0 otherwise.
    pub fn moment(&self, r: u32, rescaled: bool) -> f64 {
        if rescaled && self.time == 0 {
            return if r == 0 { 1.0 } else { 0.0 };
        }
        let scale = if rescaled { self.time as f64 } else { 1.0 };
        let terms: Vec<f64> = self
            .probs
            .iter()
            .map(|(&x, &p)| (x as f64 / scale).powi(r as i32) * p)
            .collect();
        pairwise_sum(&terms)
    }

    /// Probability mass over positions satisfying the predicate.
    pub fn mass_where<F: Fn(i64) -> bool>(&self, pred: F) -> f64 {
        let terms: Vec<f64> = self
            .probs
            .iter()
            .filter(|(&x, _)| pred(x))
            .map(|(_, &p)| p)
            .collect();
        pairwise_sum(&terms)
    }
}

/// Probability found inside the forbidden velocity window.
#[derive(Clone, Copy, Debug)]
pub struct GapReport {
    /// The window ((1+2c)/3, -(1+2c)/3) in rescaled units x/t, present only
    /// when c < -1/2 (otherwise there is no gap and the mass is 0).
    pub window: Option<(f64, f64)>,
    /// Total probability at positions with x_min <= |x| and |x|/t inside the window.
    pub mass: f64,
    /// Origin-peak exclusion cutoff actually used.
    pub x_min: i64,
}

/// Default origin-exclusion cutoff: ceil(t^0.6), at least 1. Large enough to
/// escape the exponentially decaying localized peak, small next to the gap
/// edge ~0.244 t.
pub fn default_gap_cutoff(time: u64) -> i64 {
    ((time as f64).powf(0.6).ceil() as i64).max(1)
}

/// Sums probability over the gap region x_min <= |x| < -(1+2c)/3 * t.
/// `x_min = None` uses [`default_gap_cutoff`]. Requires t >= 3 * x_min so the
/// window is meaningfully wider than the cutoff.
pub fn gap_mass(
    dist: &ProbabilityDistribution,
    params: &CoinParameters,
    x_min: Option<i64>,
) -> Result<GapReport> {
    let x_min = x_min.unwrap_or_else(|| default_gap_cutoff(dist.time()));
    if x_min < 1 {
        return Err(Error::InvalidGapCutoff(x_min));
    }
    let min_time = 3 * x_min as u64;
    if dist.time() < min_time {
        return Err(Error::GapWindowTooEarly {
            time: dist.time(),
            min_time,
        });
    }
    let c = params.c();
    let edge = -(1.0 + 2.0 * c) / 3.0;
    if edge <= 0.0 {
        return Ok(GapReport {
            window: None,
            mass: 0.0,
            x_min,
        });
    }
    let t = dist.time() as f64;
    let mass = dist.mass_where(|x| {
        let ax = x.unsigned_abs() as f64;
        x.unsigned_abs() as i64 >= x_min && ax / t < edge
    });
    Ok(GapReport {
        window: Some((-edge, edge)),
        mass,
        x_min,
    })
}
