//! Gauss-Legendre quadrature: fixed rules, composite panels over segment
//! lists, a node-doubling convergence driver, and a substitution-based
//! integrator for inverse-square-root endpoint singularities.
//!
//! All summation orders are fixed so identical inputs give bit-identical
//! results.

use crate::error::{Error, Result};
use crate::linalg::pairwise_sum;

/// A Gauss-Legendre rule on [-1, 1].
#[derive(Clone, Debug)]
pub struct GaussLegendre {
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl GaussLegendre {
    /// Computes the n-point rule by Newton iteration on the Legendre
    /// polynomial recurrence.
    pub fn new(n: usize) -> Self {
        assert!(n >= 1);
        let mut nodes = vec![0.0; n];
        let mut weights = vec![0.0; n];
        for i in 0..n {
            // Tricomi-style initial guess, then Newton
            let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
            let mut dp = 0.0;
            for _ in 0..100 {
                let (p, d) = legendre_with_derivative(n, x);
                dp = d;
                let dx = p / d;
                x -= dx;
                if dx.abs() < 1e-15 {
                    let (_, d) = legendre_with_derivative(n, x);
                    dp = d;
                    break;
                }
            }
            // guesses start from the right; store ascending
            nodes[n - 1 - i] = x;
            weights[n - 1 - i] = 2.0 / ((1.0 - x * x) * dp * dp);
        }
        GaussLegendre { nodes, weights }
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    /// Single-panel integral of f over [a, b].
    pub fn integrate<F: FnMut(f64) -> f64>(&self, a: f64, b: f64, mut f: F) -> f64 {
        let mid = 0.5 * (a + b);
        let half = 0.5 * (b - a);
        let terms: Vec<f64> = self
            .nodes
            .iter()
            .zip(&self.weights)
            .map(|(&x, &w)| half * w * f(mid + half * x))
            .collect();
        pairwise_sum(&terms)
    }
}

fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    for k in 2..=n {
        let k = k as f64;
        let p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
    }
    if n == 0 {
        return (1.0, 0.0);
    }
    let d = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}

/// Panel size of the base rule used by the composite scheme.
pub const PANEL_SIZE: usize = 32;

/// Composite integral over a list of disjoint segments with a total node
/// budget. Panels of the 32-point base rule are distributed across segments
/// in proportion to length (at least one per segment), uniformly within each
/// segment.
pub fn composite_over_segments<F: FnMut(f64) -> f64>(
    segments: &[(f64, f64)],
    total_nodes: usize,
    mut f: F,
) -> f64 {
    let rule = base_rule();
    let total_len: f64 = segments.iter().map(|&(a, b)| b - a).sum();
    let total_panels = (total_nodes / PANEL_SIZE).max(segments.len());
    let mut values = Vec::new();
    for &(a, b) in segments {
        let share = ((b - a) / total_len * total_panels as f64).round() as usize;
        let panels = share.max(1);
        let h = (b - a) / panels as f64;
        for p in 0..panels {
            values.push(rule.integrate(a + p as f64 * h, a + (p + 1) as f64 * h, &mut f));
        }
    }
    pairwise_sum(&values)
}

fn base_rule() -> &'static GaussLegendre {
    use std::sync::OnceLock;
    static RULE: OnceLock<GaussLegendre> = OnceLock::new();
    RULE.get_or_init(|| GaussLegendre::new(PANEL_SIZE))
}

/// Result of a node-doubling integration.
#[derive(Clone, Copy, Debug)]
pub struct Converged {
    pub value: f64,
    /// Node budget of the final pass.
    pub nodes: usize,
    /// |final pass - half-node pass|.
    pub estimate: f64,
}

/// Integrates over the segments, doubling the node budget from `start_nodes`
/// until successive values differ by less than `target` or `max_nodes` is
/// reached. The convergence estimate is always the difference against the
/// half-budget run; an estimate above `fail_threshold` is an error.
pub fn integrate_doubling<F: FnMut(f64) -> f64>(
    segments: &[(f64, f64)],
    start_nodes: usize,
    max_nodes: usize,
    target: f64,
    fail_threshold: f64,
    mut f: F,
) -> Result<Converged> {
    let mut nodes = start_nodes.min(max_nodes).max(2 * PANEL_SIZE);
    let mut prev = composite_over_segments(segments, nodes / 2, &mut f);
    let mut value = composite_over_segments(segments, nodes, &mut f);
    let mut estimate = (value - prev).abs();
    while estimate > target && nodes < max_nodes {
        nodes = (nodes * 2).min(max_nodes);
        prev = value;
        value = composite_over_segments(segments, nodes, &mut f);
        estimate = (value - prev).abs();
    }
    if estimate > fail_threshold {
        return Err(Error::QuadratureNotConverged {
            estimate,
            tol: fail_threshold,
            nodes,
        });
    }
    Ok(Converged {
        value,
        nodes,
        estimate,
    })
}

/// Integrates f over [a, b] where f may diverge like 1/sqrt(distance) at
/// either endpoint. The substitution x = a + u^2 (resp. x = b - u^2) absorbs
/// the singularity: the transformed integrand 2 u f(a + u^2) extends smoothly
/// to u = 0, and the open Gauss rule never evaluates f at the endpoints
/// themselves.
pub fn integrate_sqrt_endpoints<F: Fn(f64) -> f64>(
    a: f64,
    b: f64,
    start_nodes: usize,
    max_nodes: usize,
    target: f64,
    fail_threshold: f64,
    f: F,
) -> Result<Converged> {
    assert!(b > a);
    let mid = 0.5 * (a + b);
    let left_len = (mid - a).sqrt();
    let right_len = (b - mid).sqrt();
    let left = integrate_doubling(
        &[(0.0, left_len)],
        start_nodes,
        max_nodes,
        target,
        fail_threshold,
        |u| 2.0 * u * f(a + u * u),
    )?;
    let right = integrate_doubling(
        &[(0.0, right_len)],
        start_nodes,
        max_nodes,
        target,
        fail_threshold,
        |u| 2.0 * u * f(b - u * u),
    )?;
    Ok(Converged {
        value: left.value + right.value,
        nodes: left.nodes.max(right.nodes),
        estimate: left.estimate + right.estimate,
    })
}
