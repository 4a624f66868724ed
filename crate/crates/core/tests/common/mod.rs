//! Shared oracles for the integration tests.
//!
//! Everything here recomputes model quantities along an independent route —
//! dense cyclic-ring evolution, a general cubic eigensolver, momentum-space
//! propagation — so that agreement with the library is evidence, not
//! tautology.

#![allow(dead_code)]

use triwalk::{build_coin, CoinParameters, Complex64, InitialState, Schedule};

pub const C_ZERO: Complex64 = Complex64 { re: 0.0, im: 0.0 };

/// Dense evolution on the cyclic ring Z/NZ: coin applied site by site, then
/// the three components rotated as whole arrays. With N >= 2t+4 the
/// wavefront never wraps, so ring amplitudes equal line amplitudes.
pub struct RingState {
    pub time: u64,
    pub sites: Vec<[Complex64; 3]>,
}

impl RingState {
    pub fn localized(init: &InitialState, n: usize) -> Self {
        let mut sites = vec![[C_ZERO; 3]; n];
        sites[0] = init.amplitudes();
        RingState { time: 0, sites }
    }

    /// Amplitude at line position x (negative positions wrap around).
    pub fn amplitude(&self, x: i64) -> [Complex64; 3] {
        let n = self.sites.len() as i64;
        self.sites[x.rem_euclid(n) as usize]
    }

    pub fn step(&mut self, params: &CoinParameters, schedule: Schedule) {
        let n = self.sites.len();
        if schedule.applies_coin_at(self.time) {
            let coin = build_coin(params);
            for site in self.sites.iter_mut() {
                let old = *site;
                for (row, out) in coin.rows.iter().zip(site.iter_mut()) {
                    *out = old[0] * row[0] + old[1] * row[1] + old[2] * row[2];
                }
            }
        }
        let mut shifted = vec![[C_ZERO; 3]; n];
        for x in 0..n {
            shifted[x][0] = self.sites[(x + 1) % n][0];
            shifted[x][1] = self.sites[x][1];
            shifted[x][2] = self.sites[(x + n - 1) % n][2];
        }
        self.sites = shifted;
        self.time += 1;
    }

    pub fn evolve(&mut self, params: &CoinParameters, schedule: Schedule, steps: u64) {
        for _ in 0..steps {
            self.step(params, schedule);
        }
    }
}

/// All roots of the monic cubic z^3 + a z^2 + b z + c via Cardano's formula
/// in complex arithmetic. Good to ~1e-12 for well-separated roots.
pub fn cubic_roots(a: Complex64, b: Complex64, c: Complex64) -> [Complex64; 3] {
    let third = 1.0 / 3.0;
    let p = b - a * a * third;
    let q = a * a * a * (2.0 / 27.0) - a * b * third + c;
    let disc = (q * q * 0.25 + p * p * p / 27.0).sqrt();
    let mut u = (-q * 0.5 + disc).cbrt();
    if u.norm() < 1e-30 {
        u = (-q * 0.5 - disc).cbrt();
    }
    let omega = Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI / 3.0);
    let mut roots = [C_ZERO; 3];
    let mut uk = u;
    for root in roots.iter_mut() {
        let y = if uk.norm() < 1e-30 {
            (-q).cbrt()
        } else {
            uk - p / (uk * 3.0)
        };
        *root = y - a * third;
        uk *= omega;
    }
    roots
}

/// Eigenvalues of a 3x3 complex matrix by solving its characteristic cubic —
/// no use of the closed-form spectrum under test.
pub fn dense_eigenvalues(m: &triwalk::CMat3) -> [Complex64; 3] {
    let a = m.0;
    let tr = a[0][0] + a[1][1] + a[2][2];
    let m00 = a[1][1] * a[2][2] - a[1][2] * a[2][1];
    let m11 = a[0][0] * a[2][2] - a[0][2] * a[2][0];
    let m22 = a[0][0] * a[1][1] - a[0][1] * a[1][0];
    let sum_minors = m00 + m11 + m22;
    let det = m.det();
    // char poly: z^3 - tr z^2 + sum_minors z - det
    cubic_roots(-tr, sum_minors, -det)
}

/// A null vector of (M - lambda I) via formal cross products of its rows
/// (bilinear orthogonality), picking the most robust pair. Unit norm.
pub fn dense_eigenvector(m: &triwalk::CMat3, lambda: Complex64) -> triwalk::CVec3 {
    let mut a = *m;
    for i in 0..3 {
        a.0[i][i] -= lambda;
    }
    let rows: Vec<[Complex64; 3]> = a.0.to_vec();
    let cross = |u: &[Complex64; 3], v: &[Complex64; 3]| -> [Complex64; 3] {
        [
            u[1] * v[2] - u[2] * v[1],
            u[2] * v[0] - u[0] * v[2],
            u[0] * v[1] - u[1] * v[0],
        ]
    };
    let candidates = [
        cross(&rows[0], &rows[1]),
        cross(&rows[0], &rows[2]),
        cross(&rows[1], &rows[2]),
    ];
    let best = candidates
        .iter()
        .max_by(|x, y| {
            let nx: f64 = x.iter().map(|z| z.norm_sqr()).sum();
            let ny: f64 = y.iter().map(|z| z.norm_sqr()).sum();
            nx.total_cmp(&ny)
        })
        .unwrap();
    let norm: f64 = best.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    assert!(norm > 1e-12, "cross-product eigenvector degenerate");
    triwalk::CVec3([best[0] / norm, best[1] / norm, best[2] / norm])
}

/// Momentum-space evolution oracle: propagates the origin-localized start on
/// a ring of size n through t steps of the *main* schedule using powers of
/// the one-period momentum operator plus the partial-period factor, then
/// inverse-DFTs back to position amplitudes.
pub fn dft_evolved_amplitudes(
    init: &InitialState,
    params: &CoinParameters,
    t: u64,
    n: usize,
) -> Vec<[Complex64; 3]> {
    use triwalk::{period_operator, CVec3};
    let full = t / 3;
    let partial = t % 3;
    let coin = build_coin(params).as_cmat3();
    let mut site_amps = vec![[C_ZERO; 3]; n];
    for m in 0..n {
        let k = 2.0 * std::f64::consts::PI * m as f64 / n as f64;
        let mk = period_operator(k, params);
        // hat psi_0(k) = (alpha, beta, gamma) for the origin-localized start
        let mut v = CVec3(init.amplitudes());
        for _ in 0..full {
            v = mk * v;
        }
        let shift = triwalk::spectral::shift_phase(k);
        for _ in 0..partial {
            v = shift * (coin * v);
        }
        // inverse DFT accumulation: psi(x) = (1/n) sum_m e^{ikx} hat psi(k_m)
        for (x, site) in site_amps.iter_mut().enumerate() {
            let phase = Complex64::from_polar(1.0 / n as f64, k * x as f64);
            for c in 0..3 {
                site[c] += phase * v.0[c];
            }
        }
    }
    site_amps
}

/// A reproducible stream of Haar-like random normalized initial states.
pub fn random_inits(seed: u64, count: usize) -> Vec<InitialState> {
    use rand::{Rng, SeedableRng};
    let mut rng = rand::rngs::StdRng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let mut comps = [C_ZERO; 3];
        for c in comps.iter_mut() {
            // Box-Muller pairs give an isotropic complex Gaussian
            let u1: f64 = rng.random::<f64>().max(1e-12);
            let u2: f64 = rng.random();
            let r = (-2.0 * u1.ln()).sqrt();
            *c = Complex64::new(
                r * (2.0 * std::f64::consts::PI * u2).cos(),
                r * (2.0 * std::f64::consts::PI * u2).sin(),
            );
        }
        if let Ok(state) = InitialState::normalized(comps[0], comps[1], comps[2]) {
            out.push(state);
        }
    }
    out
}

/// Largest absolute difference between a walk state on the line and a ring
/// state, compared over all ring sites.
pub fn max_amplitude_gap(line: &triwalk::WalkState, ring: &RingState) -> f64 {
    let n = ring.sites.len() as i64;
    let half = n / 2;
    let mut worst = 0.0f64;
    for x in -half..half {
        let a = line.amplitude(x);
        let b = ring.amplitude(x);
        for c in 0..3 {
            worst = worst.max((a[c] - b[c]).norm());
        }
    }
    worst
}
