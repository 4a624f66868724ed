//! Simulation and analysis toolkit for a discrete-time three-state quantum
//! walk on the integer line driven by a 3-periodic coin schedule.
//!
//! The walker carries a three-dimensional internal (coin) state whose
//! components move left, stay put, or move right at each step. A one-
//! parameter orthogonal coin mixes the components, but only at two of every
//! three time steps: at the third the coin is skipped and the walk shifts
//! unhindered. That small periodic break in the driving produces two
//! distinctive long-time effects this crate measures exactly:
//!
//! * **Localization with no escape hatch.** The one-period momentum operator
//!   has a flat eigenvalue band, so part of the wave packet stays pinned near
//!   the origin forever. The trapped fraction — the atom mass `Delta` — is a
//!   momentum integral this crate evaluates to quadrature accuracy, and a
//!   rank argument shows no normalized initial spin can make it vanish.
//! * **A gap in the spread.** The ballistic part of the position
//!   distribution occupies two mirror-image velocity windows. For coin
//!   angles with `cos(theta) < -1/2` the windows detach from the origin and
//!   a strictly empty zone opens between the localized peak and the moving
//!   fronts.
//!
//! The crate exposes the pieces separately: [`walk`] evolves amplitudes
//! exactly, [`measurement`] turns them into position distributions and gap
//! diagnostics, [`spectral`] carries the momentum-space eigensystem and the
//! atom-mass/moment quadratures, and [`limit`] evaluates the closed-form
//! long-time density and compares it against finite-time simulation. The
//! `triwalk` binary wraps all of it in a scriptable CLI.

pub mod cli;
pub mod coin;
pub mod error;
pub mod limit;
pub mod linalg;
pub mod measurement;
pub mod quadrature;
pub mod spectral;
pub mod walk;

pub use coin::{build_coin, grover_angle, CoinOperator, CoinParameters};
pub use error::{Error, Result};
pub use limit::{
    compare_windowed, density_f, nu_factors, nu_weight, LimitDensityModel, SupportIntervals,
    WindowedComparison,
};
pub use linalg::{CMat3, CVec3, Complex64};
pub use measurement::{distribution, default_gap_cutoff, gap_mass, GapReport, ProbabilityDistribution};
pub use spectral::{
    delta_mass, delocalization_rank_check, dispersion_g, eigenvalue, eigenvector_v,
    group_velocity, moment_limit, period_operator, DeltaQuadrature, RankReport, SpectralPoint,
};
pub use walk::{
    delocalized_equivalent_initial_state, evolve, InitialState, Schedule, WalkState,
};
