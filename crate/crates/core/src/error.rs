use crate::walk::Schedule;

/// Errors produced by the library. Each variant classifies as either an
/// input/domain problem ([`Error::is_input_error`]) or a numerical
/// non-convergence, which the CLI maps to distinct exit codes.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("coin angle must be finite, got {0}")]
    NonFiniteAngle(f64),

    /// The coin degenerates to a diagonal/permutation matrix when sin(theta)=0;
    /// the dynamics are trivial there and the model excludes them.
    #[error("coin angle {0} is a multiple of pi; sin(theta)=0 is excluded")]
    DegenerateAngle(f64),

    #[error("initial state has squared norm {norm_sqr}, expected 1 within {tol}")]
    UnnormalizedState { norm_sqr: f64, tol: f64 },

    #[error("initial state has near-zero norm and cannot be normalized")]
    ZeroState,

    #[error("schedule {0} is the reference evolution; no equivalent initial state to construct")]
    NoEquivalentState(Schedule),

    #[error("time {time} is too short for the gap window (need time >= 3*x_min = {min_time})")]
    GapWindowTooEarly { time: u64, min_time: u64 },

    #[error("x_min must be >= 1, got {0}")]
    InvalidGapCutoff(i64),

    #[error("eigenvector branch index must be 1, 2, or 3, got {0}")]
    InvalidBranch(usize),

    #[error("eigenvector formula degenerates at k = {k} (normalization {norm_sqr:.3e} below threshold)")]
    DegenerateMomentum { k: f64, norm_sqr: f64 },

    #[error("group velocity sign is undefined at k = {0} ({{c-(1+c)cos k}}sin k = 0)")]
    VelocitySignUndefined(f64),

    #[error("evaluation point {x} lies within {eps:.1e} of a support endpoint where the density diverges")]
    EndpointSingularity { x: f64, eps: f64 },

    #[error("quadrature did not converge: estimate {estimate:.3e} exceeds {tol:.3e} at {nodes} nodes")]
    QuadratureNotConverged {
        estimate: f64,
        tol: f64,
        nodes: usize,
    },

    #[error(
        "mass closure violated: atom {delta} + continuous {continuous} deviates from 1 by {defect:.3e}"
    )]
    MassClosure {
        delta: f64,
        continuous: f64,
        defect: f64,
    },

    #[error("atom mass {0} is outside (0, 1]")]
    AtomMassOutOfRange(f64),

    #[error("quadrature node count must be >= {min}, got {got}")]
    TooFewNodes { min: usize, got: usize },
}

impl Error {
    /// True for errors caused by invalid input or domain violations,
    /// false for numerical non-convergence.
    pub fn is_input_error(&self) -> bool {
        !matches!(self, Error::QuadratureNotConverged { .. } | Error::MassClosure { .. })
    }
}

pub type Result<T> = std::result::Result<T, Error>;
