//! State and evolution of the walk on the integer line.
//!
//! One time step is: optionally apply the coin at every position, then shift
//! coin component -1 one site left, leave component 0 in place, and shift
//! component +1 one site right. The schedule decides which residue of
//! t mod 3 skips the coin, using the *current* time before the step.

use crate::coin::{build_coin, CoinOperator, CoinParameters};
use crate::error::{Error, Result};
use crate::linalg::{pairwise_sum, CVec3, Complex64, C_ZERO};

/// Normalized coin-space amplitudes (alpha, beta, gamma) placed at the origin.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct InitialState {
    amps: [Complex64; 3],
}

impl InitialState {
    pub const NORM_TOL: f64 = 1e-12;

    /// Requires |alpha|^2 + |beta|^2 + |gamma|^2 = 1 within [`Self::NORM_TOL`].
    pub fn new(alpha: Complex64, beta: Complex64, gamma: Complex64) -> Result<Self> {
        let norm_sqr = alpha.norm_sqr() + beta.norm_sqr() + gamma.norm_sqr();
        if (norm_sqr - 1.0).abs() > Self::NORM_TOL {
            return Err(Error::UnnormalizedState {
                norm_sqr,
                tol: Self::NORM_TOL,
            });
        }
        Ok(InitialState {
            amps: [alpha, beta, gamma],
        })
    }

    /// Rescales the given amplitudes to unit norm.
    pub fn normalized(alpha: Complex64, beta: Complex64, gamma: Complex64) -> Result<Self> {
        let norm = (alpha.norm_sqr() + beta.norm_sqr() + gamma.norm_sqr()).sqrt();
        if norm < 1e-12 {
            return Err(Error::ZeroState);
        }
        Ok(InitialState {
            amps: [alpha / norm, beta / norm, gamma / norm],
        })
    }

    /// The reference initial state (1, 1, 1)/sqrt(3).
    pub fn equal_superposition() -> Self {
        let a = Complex64::new(1.0 / 3f64.sqrt(), 0.0);
        InitialState { amps: [a, a, a] }
    }

    pub fn from_reals(a: f64, b: f64, g: f64) -> Result<Self> {
        Self::new(
            Complex64::new(a, 0.0),
            Complex64::new(b, 0.0),
            Complex64::new(g, 0.0),
        )
    }

    pub fn alpha(&self) -> Complex64 {
        self.amps[0]
    }

    pub fn beta(&self) -> Complex64 {
        self.amps[1]
    }

    pub fn gamma(&self) -> Complex64 {
        self.amps[2]
    }

    pub fn amplitudes(&self) -> [Complex64; 3] {
        self.amps
    }

    pub fn as_cvec3(&self) -> CVec3 {
        CVec3(self.amps)
    }
}

/// Which residue of t mod 3 skips the coin. `SkipAt2` is the reference
/// evolution; the other two reproduce it from a delocalized start
/// (see [`delocalized_equivalent_initial_state`]).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Schedule {
    /// Coin at t = 0, 1 mod 3; shift alone at t = 2 mod 3 (the main walk).
    SkipAt2,
    /// Shift alone at t = 0 mod 3.
    SkipAt0,
    /// Shift alone at t = 1 mod 3.
    SkipAt1,
}

impl Schedule {
    pub fn skip_residue(self) -> u64 {
        match self {
            Schedule::SkipAt2 => 2,
            Schedule::SkipAt0 => 0,
            Schedule::SkipAt1 => 1,
        }
    }

    /// Whether the step taken *at* time t applies the coin.
    pub fn applies_coin_at(self, t: u64) -> bool {
        t % 3 != self.skip_residue()
    }

    pub fn label(self) -> &'static str {
        match self {
            Schedule::SkipAt2 => "main",
            Schedule::SkipAt0 => "skip0",
            Schedule::SkipAt1 => "skip1",
        }
    }
}

impl std::fmt::Display for Schedule {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.label())
    }
}

impl std::str::FromStr for Schedule {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "main" => Ok(Schedule::SkipAt2),
            "skip0" => Ok(Schedule::SkipAt0),
            "skip1" => Ok(Schedule::SkipAt1),
            other => Err(format!(
                "unknown schedule '{other}' (expected main, skip0, or skip1)"
            )),
        }
    }
}

/// Full amplitude field at one instant: a contiguous window of complex
/// 3-vectors over positions `[min_position, max_position]`. Everything
/// outside the window is exactly zero; all nonzero amplitudes stay within
/// |x| <= t.
#[derive(Clone, Debug)]
pub struct WalkState {
    time: u64,
    origin_index: usize,
    amps: Vec<[Complex64; 3]>,
}

impl WalkState {
    fn new(time: u64, origin_index: usize, amps: Vec<[Complex64; 3]>) -> Self {
        debug_assert!(origin_index < amps.len());
        WalkState {
            time,
            origin_index,
            amps,
        }
    }

    pub fn from_initial(init: &InitialState) -> Self {
        WalkState::new(0, 0, vec![init.amplitudes()])
    }

    pub fn time(&self) -> u64 {
        self.time
    }

    pub fn min_position(&self) -> i64 {
        -(self.origin_index as i64)
    }

    pub fn max_position(&self) -> i64 {
        self.min_position() + self.amps.len() as i64 - 1
    }

    /// Coin-space amplitudes at position x; zero outside the stored window.
    pub fn amplitude(&self, x: i64) -> [Complex64; 3] {
        let idx = x - self.min_position();
        if idx < 0 || idx as usize >= self.amps.len() {
            [C_ZERO; 3]
        } else {
            self.amps[idx as usize]
        }
    }

    /// Iterates `(position, amplitudes)` over the stored window.
    pub fn iter(&self) -> impl Iterator<Item = (i64, &[Complex64; 3])> {
        let min = self.min_position();
        self.amps
            .iter()
            .enumerate()
            .map(move |(i, a)| (min + i as i64, a))
    }

    /// Total probability, summed pairwise.
    pub fn norm_sqr(&self) -> f64 {
        let cell_norms: Vec<f64> = self
            .amps
            .iter()
            .map(|a| a[0].norm_sqr() + a[1].norm_sqr() + a[2].norm_sqr())
            .collect();
        pairwise_sum(&cell_norms)
    }

    /// Positions carrying nonzero probability, as (leftmost, rightmost).
    pub fn support(&self) -> Option<(i64, i64)> {
        let occupied = |a: &[Complex64; 3]| {
            a[0].norm_sqr() + a[1].norm_sqr() + a[2].norm_sqr() > 0.0
        };
        let first = self.amps.iter().position(occupied)?;
        let last = self.amps.iter().rposition(occupied)?;
        Some((
            self.min_position() + first as i64,
            self.min_position() + last as i64,
        ))
    }

    /// One step under the given schedule (branch selected by the current time).
    pub fn step(&self, coin: &CoinOperator, schedule: Schedule) -> WalkState {
        let mut next = Vec::new();
        let apply = schedule.applies_coin_at(self.time);
        step_into(&self.amps, apply.then_some(coin), &mut next);
        WalkState::new(self.time + 1, self.origin_index + 1, next)
    }

    /// Advances by `steps` steps, continuing the schedule from the current time.
    pub fn evolved(&self, params: &CoinParameters, schedule: Schedule, steps: u64) -> WalkState {
        let coin = build_coin(params);
        let mut cur = self.amps.clone();
        let mut scratch: Vec<[Complex64; 3]> = Vec::new();
        for s in 0..steps {
            let apply = schedule.applies_coin_at(self.time + s);
            step_into(&cur, apply.then_some(&coin), &mut scratch);
            std::mem::swap(&mut cur, &mut scratch);
        }
        WalkState::new(
            self.time + steps,
            self.origin_index + steps as usize,
            cur,
        )
    }
}

/// One step as a gather: the destination cell at position x collects
/// coin component -1 from x+1, component 0 from x, component +1 from x-1,
/// each taken after the (optional) coin application at the source.
fn step_into(
    src: &[[Complex64; 3]],
    coin: Option<&CoinOperator>,
    dst: &mut Vec<[Complex64; 3]>,
) {
    let n = src.len();
    dst.clear();
    dst.resize(n + 2, [C_ZERO; 3]);
    let get = |i: isize| -> [Complex64; 3] {
        if i < 0 || i as usize >= n {
            [C_ZERO; 3]
        } else {
            src[i as usize]
        }
    };
    match coin {
        Some(c) => {
            let row_dot = |row: &[f64; 3], v: &[Complex64; 3]| {
                v[0] * row[0] + v[1] * row[1] + v[2] * row[2]
            };
            for (j, out) in dst.iter_mut().enumerate() {
                let j = j as isize;
                // dst index j sits one position left of src index j
                let from_right = get(j);
                let from_here = get(j - 1);
                let from_left = get(j - 2);
                *out = [
                    row_dot(&c.rows[0], &from_right),
                    row_dot(&c.rows[1], &from_here),
                    row_dot(&c.rows[2], &from_left),
                ];
            }
        }
        None => {
            for (j, out) in dst.iter_mut().enumerate() {
                let j = j as isize;
                *out = [get(j)[0], get(j - 1)[1], get(j - 2)[2]];
            }
        }
    }
}

/// Runs the walk for t steps from an origin-localized start.
pub fn evolve(
    init: &InitialState,
    params: &CoinParameters,
    schedule: Schedule,
    t: u64,
) -> WalkState {
    WalkState::from_initial(init).evolved(params, schedule, t)
}

/// The delocalized state from which the *main* schedule reproduces a
/// coin-skipping variant: evolving the returned state under `SkipAt2` for
/// t-1 steps (variant `SkipAt0`) or t-2 steps (variant `SkipAt1`) gives the
/// variant walk at time t.
///
/// For `SkipAt0` the state is the shifted start: alpha at (x=-1, coin -1),
/// beta at (0, coin 0), gamma at (+1, coin +1). For `SkipAt1` the coin is
/// applied first and the components land at x = -2, 0, +2.
pub fn delocalized_equivalent_initial_state(
    init: &InitialState,
    params: &CoinParameters,
    schedule: Schedule,
) -> Result<WalkState> {
    let place = |v: [Complex64; 3], spread: usize| -> WalkState {
        let width = 2 * spread + 1;
        let mut amps = vec![[C_ZERO; 3]; width];
        amps[0][0] = v[0];
        amps[spread][1] = v[1];
        amps[width - 1][2] = v[2];
        WalkState::new(0, spread, amps)
    };
    match schedule {
        Schedule::SkipAt2 => Err(Error::NoEquivalentState(schedule)),
        Schedule::SkipAt0 => Ok(place(init.amplitudes(), 1)),
        Schedule::SkipAt1 => {
            let coin = build_coin(params).as_cmat3();
            let u = coin * init.as_cvec3();
            Ok(place(u.0, 2))
        }
    }
}
