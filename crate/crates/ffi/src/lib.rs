//! C ABI for the triwalk library.
//!
//! Conventions:
//! - Objects are opaque handles created by `*_new` functions and released by
//!   the matching `*_free`; every other function borrows them.
//! - Every fallible function returns a [`TwkStatus`] and writes results
//!   through out-pointers, which are only written on `TWK_STATUS_OK`.
//! - Spin components are passed as (re, im) pairs for (alpha, beta, gamma)
//!   and are normalized internally; the zero vector is rejected.
//! - Panics never cross the boundary: they are caught and reported as
//!   `TWK_STATUS_NONCONVERGENCE`.

use std::os::raw::c_char;
use std::panic::{catch_unwind, AssertUnwindSafe};

use triwalk::{
    delocalization_rank_check, delta_mass, dispersion_g, distribution, group_velocity,
    CoinParameters, Complex64, InitialState, LimitDensityModel, Schedule, WalkState,
};

/// Result of every fallible call in this API.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TwkStatus {
    /// Success; out-parameters hold the results.
    Ok = 0,
    /// A required pointer argument was null.
    NullArgument = 1,
    /// Arguments were rejected (bad angle, unnormalizable spin, bad branch,
    /// a singular evaluation point, or an undersized buffer).
    InvalidInput = 2,
    /// A quadrature failed to converge or an internal invariant broke.
    Nonconvergence = 3,
}

/// Which residue of t mod 3 skips the coin. Pass the numeric value to
/// `twk_walk_new`; `TWK_SCHEDULE_MAIN` is the reference walk.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TwkSchedule {
    Main = 0,
    SkipAt0 = 1,
    SkipAt1 = 2,
}

/// A coined walk on the line: angle, schedule, and the evolving state.
pub struct TwkWalk {
    params: CoinParameters,
    schedule: Schedule,
    state: WalkState,
}

/// The long-time distribution model for one (angle, initial spin) pair.
pub struct TwkLimitModel {
    model: LimitDensityModel,
}

fn status_of(e: &triwalk::Error) -> TwkStatus {
    if e.is_input_error() {
        TwkStatus::InvalidInput
    } else {
        TwkStatus::Nonconvergence
    }
}

fn guarded<F: FnOnce() -> TwkStatus>(f: F) -> TwkStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(status) => status,
        Err(_) => TwkStatus::Nonconvergence,
    }
}

fn build_params(theta: f64) -> Result<CoinParameters, TwkStatus> {
    CoinParameters::new(theta).map_err(|e| status_of(&e))
}

#[allow(clippy::too_many_arguments)]
fn build_init(
    a_re: f64,
    a_im: f64,
    b_re: f64,
    b_im: f64,
    g_re: f64,
    g_im: f64,
) -> Result<InitialState, TwkStatus> {
    if ![a_re, a_im, b_re, b_im, g_re, g_im]
        .iter()
        .all(|v| v.is_finite())
    {
        return Err(TwkStatus::InvalidInput);
    }
    InitialState::normalized(
        Complex64::new(a_re, a_im),
        Complex64::new(b_re, b_im),
        Complex64::new(g_re, g_im),
    )
    .map_err(|e| status_of(&e))
}

fn decode_schedule(schedule: u32) -> Result<Schedule, TwkStatus> {
    match schedule {
        0 => Ok(Schedule::SkipAt2),
        1 => Ok(Schedule::SkipAt0),
        2 => Ok(Schedule::SkipAt1),
        _ => Err(TwkStatus::InvalidInput),
    }
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn twk_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}

/// Static human-readable description of a status code.
#[no_mangle]
pub extern "C" fn twk_status_message(status: TwkStatus) -> *const c_char {
    let msg: &'static str = match status {
        TwkStatus::Ok => "ok\0",
        TwkStatus::NullArgument => "null pointer argument\0",
        TwkStatus::InvalidInput => "invalid input\0",
        TwkStatus::Nonconvergence => "numerical non-convergence\0",
    };
    msg.as_ptr() as *const c_char
}

/// The angle whose coin is the Grover diffusion operator, acos(-1/3).
#[no_mangle]
pub extern "C" fn twk_grover_theta() -> f64 {
    CoinParameters::grover().theta()
}

/// Creates a walk at t = 0 with the walker at the origin.
///
/// `schedule` takes a `TwkSchedule` value. On success `*out` owns the walk.
///
/// # Safety
/// `out` must be a valid writable pointer.
#[no_mangle]
#[allow(clippy::too_many_arguments)]
pub unsafe extern "C" fn twk_walk_new(
    theta: f64,
    a_re: f64,
    a_im: f64,
    b_re: f64,
    b_im: f64,
    g_re: f64,
    g_im: f64,
    schedule: u32,
    out: *mut *mut TwkWalk,
) -> TwkStatus {
    if out.is_null() {
        return TwkStatus::NullArgument;
    }
    guarded(|| {
        let params = match build_params(theta) {
            Ok(p) => p,
            Err(s) => return s,
        };
        let init = match build_init(a_re, a_im, b_re, b_im, g_re, g_im) {
            Ok(i) => i,
            Err(s) => return s,
        };
        let schedule = match decode_schedule(schedule) {
            Ok(s) => s,
            Err(s) => return s,
        };
        let walk = TwkWalk {
            params,
            schedule,
            state: WalkState::from_initial(&init),
        };
        unsafe { *out = Box::into_raw(Box::new(walk)) };
        TwkStatus::Ok
    })
}

/// Releases a walk. Passing null is a no-op.
///
/// # Safety
/// `walk` must be null or a pointer obtained from `twk_walk_new` that has
/// not been freed yet.
#[no_mangle]
pub unsafe extern "C" fn twk_walk_free(walk: *mut TwkWalk) {
    if !walk.is_null() {
        drop(unsafe { Box::from_raw(walk) });
    }
}

/// Advances the walk by `steps` time steps.
///
/// # Safety
/// `walk` must be a live handle from `twk_walk_new`.
#[no_mangle]
pub unsafe extern "C" fn twk_walk_evolve(walk: *mut TwkWalk, steps: u64) -> TwkStatus {
    let Some(walk) = (unsafe { walk.as_mut() }) else {
        return TwkStatus::NullArgument;
    };
    guarded(|| {
        walk.state = walk.state.evolved(&walk.params, walk.schedule, steps);
        TwkStatus::Ok
    })
}

/// Reports the walk's current time.
///
/// # Safety
/// `walk` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn twk_walk_time(walk: *const TwkWalk, out: *mut u64) -> TwkStatus {
    let Some(walk) = (unsafe { walk.as_ref() }) else {
        return TwkStatus::NullArgument;
    };
    if out.is_null() {
        return TwkStatus::NullArgument;
    }
    unsafe { *out = walk.state.time() };
    TwkStatus::Ok
}

/// Number of lattice sites the position distribution spans, i.e. the
/// capacity `twk_walk_distribution` needs.
///
/// # Safety
/// `walk` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn twk_walk_distribution_len(
    walk: *const TwkWalk,
    out: *mut usize,
) -> TwkStatus {
    let Some(walk) = (unsafe { walk.as_ref() }) else {
        return TwkStatus::NullArgument;
    };
    if out.is_null() {
        return TwkStatus::NullArgument;
    }
    let len = walk.state.max_position() - walk.state.min_position() + 1;
    unsafe { *out = len as usize };
    TwkStatus::Ok
}

/// Writes the position distribution as parallel arrays of sites and
/// probabilities, ordered by increasing site. Rejects undersized buffers;
/// query `twk_walk_distribution_len` first. `written` receives the number
/// of rows filled.
///
/// # Safety
/// `walk` must be a live handle; `xs` and `ps` must point to at least
/// `capacity` writable elements; `written` must be writable.
#[no_mangle]
pub unsafe extern "C" fn twk_walk_distribution(
    walk: *const TwkWalk,
    xs: *mut i64,
    ps: *mut f64,
    capacity: usize,
    written: *mut usize,
) -> TwkStatus {
    let Some(walk) = (unsafe { walk.as_ref() }) else {
        return TwkStatus::NullArgument;
    };
    if xs.is_null() || ps.is_null() || written.is_null() {
        return TwkStatus::NullArgument;
    }
    let (lo, hi) = (walk.state.min_position(), walk.state.max_position());
    let len = (hi - lo + 1) as usize;
    if capacity < len {
        return TwkStatus::InvalidInput;
    }
    for (i, x) in (lo..=hi).enumerate() {
        let amp = walk.state.amplitude(x);
        let p: f64 = amp.iter().map(|z| z.norm_sqr()).sum();
        unsafe {
            *xs.add(i) = x;
            *ps.add(i) = p;
        }
    }
    unsafe { *written = len };
    TwkStatus::Ok
}

/// Total probability mass of the walk (should stay 1 up to rounding).
///
/// # Safety
/// `walk` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn twk_walk_total_mass(walk: *const TwkWalk, out: *mut f64) -> TwkStatus {
    let Some(walk) = (unsafe { walk.as_ref() }) else {
        return TwkStatus::NullArgument;
    };
    if out.is_null() {
        return TwkStatus::NullArgument;
    }
    guarded(|| {
        let mass = distribution(&walk.state).total_mass();
        unsafe { *out = mass };
        TwkStatus::Ok
    })
}

/// Builds the long-time distribution model (atom mass plus continuous
/// density) for the given angle and spin. `nodes` caps the quadrature size;
/// pass 0 for the library default.
///
/// # Safety
/// `out` must be a valid writable pointer.
#[no_mangle]
#[allow(clippy::too_many_arguments)]
pub unsafe extern "C" fn twk_limit_model_new(
    theta: f64,
    a_re: f64,
    a_im: f64,
    b_re: f64,
    b_im: f64,
    g_re: f64,
    g_im: f64,
    nodes: usize,
    out: *mut *mut TwkLimitModel,
) -> TwkStatus {
    if out.is_null() {
        return TwkStatus::NullArgument;
    }
    guarded(|| {
        let params = match build_params(theta) {
            Ok(p) => p,
            Err(s) => return s,
        };
        let init = match build_init(a_re, a_im, b_re, b_im, g_re, g_im) {
            Ok(i) => i,
            Err(s) => return s,
        };
        let built = if nodes == 0 {
            LimitDensityModel::new(&init, &params)
        } else {
            LimitDensityModel::with_nodes(&init, &params, nodes)
        };
        match built {
            Ok(model) => {
                unsafe { *out = Box::into_raw(Box::new(TwkLimitModel { model })) };
                TwkStatus::Ok
            }
            Err(e) => status_of(&e),
        }
    })
}

/// Releases a limit model. Passing null is a no-op.
///
/// # Safety
/// `model` must be null or a pointer obtained from `twk_limit_model_new`
/// that has not been freed yet.
#[no_mangle]
pub unsafe extern "C" fn twk_limit_model_free(model: *mut TwkLimitModel) {
    if !model.is_null() {
        drop(unsafe { Box::from_raw(model) });
    }
}

/// Mass of the point atom at the origin of the rescaled distribution.
///
/// # Safety
/// `model` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn twk_limit_model_delta(
    model: *const TwkLimitModel,
    out: *mut f64,
) -> TwkStatus {
    let Some(handle) = (unsafe { model.as_ref() }) else {
        return TwkStatus::NullArgument;
    };
    if out.is_null() {
        return TwkStatus::NullArgument;
    }
    unsafe { *out = handle.model.delta() };
    TwkStatus::Ok
}

/// Support of the continuous density as four doubles
/// (d1_lo, d1_hi, d2_lo, d2_hi) written to `out[0..4]`.
///
/// # Safety
/// `model` must be a live handle; `out` must point to 4 writable doubles.
#[no_mangle]
pub unsafe extern "C" fn twk_limit_model_support(
    model: *const TwkLimitModel,
    out: *mut f64,
) -> TwkStatus {
    let Some(handle) = (unsafe { model.as_ref() }) else {
        return TwkStatus::NullArgument;
    };
    if out.is_null() {
        return TwkStatus::NullArgument;
    }
    let s = handle.model.support();
    unsafe {
        *out.add(0) = s.d1.0;
        *out.add(1) = s.d1.1;
        *out.add(2) = s.d2.0;
        *out.add(3) = s.d2.1;
    }
    TwkStatus::Ok
}

/// Continuous part of the limit density at rescaled position `x`; zero
/// outside the support. Evaluation within 1e-9 of a support endpoint is
/// rejected as invalid input (the density has integrable singularities
/// there).
///
/// # Safety
/// `model` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn twk_limit_model_density(
    model: *const TwkLimitModel,
    x: f64,
    out: *mut f64,
) -> TwkStatus {
    let Some(handle) = (unsafe { model.as_ref() }) else {
        return TwkStatus::NullArgument;
    };
    if out.is_null() {
        return TwkStatus::NullArgument;
    }
    guarded(|| match handle.model.continuous_density(x) {
        Ok(d) => {
            unsafe { *out = d };
            TwkStatus::Ok
        }
        Err(e) => status_of(&e),
    })
}

/// Finite-time approximation P(X_t = x) ~ density(x/t)/t for t >= 1; the
/// origin cell belongs to the atom and reports 0.
///
/// # Safety
/// `model` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn twk_limit_model_approx_prob(
    model: *const TwkLimitModel,
    x: i64,
    t: u64,
    out: *mut f64,
) -> TwkStatus {
    let Some(handle) = (unsafe { model.as_ref() }) else {
        return TwkStatus::NullArgument;
    };
    if out.is_null() {
        return TwkStatus::NullArgument;
    }
    if t == 0 {
        return TwkStatus::InvalidInput;
    }
    guarded(|| match handle.model.approximate_prob(x, t) {
        Ok(p) => {
            unsafe { *out = p };
            TwkStatus::Ok
        }
        Err(e) => status_of(&e),
    })
}

/// Atom mass for one (angle, spin) pair without building a full model.
/// `nodes` caps the quadrature size; pass 0 for the library default.
///
/// # Safety
/// `out` must be a valid writable pointer.
#[no_mangle]
#[allow(clippy::too_many_arguments)]
pub unsafe extern "C" fn twk_delta_mass(
    theta: f64,
    a_re: f64,
    a_im: f64,
    b_re: f64,
    b_im: f64,
    g_re: f64,
    g_im: f64,
    nodes: usize,
    out: *mut f64,
) -> TwkStatus {
    if out.is_null() {
        return TwkStatus::NullArgument;
    }
    guarded(|| {
        let params = match build_params(theta) {
            Ok(p) => p,
            Err(s) => return s,
        };
        let init = match build_init(a_re, a_im, b_re, b_im, g_re, g_im) {
            Ok(i) => i,
            Err(s) => return s,
        };
        let cap = if nodes == 0 { 8192 } else { nodes };
        match delta_mass(&init, &params, cap) {
            Ok(d) => {
                unsafe { *out = d.value };
                TwkStatus::Ok
            }
            Err(e) => status_of(&e),
        }
    })
}

/// Real dispersion factor g(k) shared by the two moving bands.
///
/// # Safety
/// `out` must be a valid writable pointer.
#[no_mangle]
pub unsafe extern "C" fn twk_dispersion(theta: f64, k: f64, out: *mut f64) -> TwkStatus {
    if out.is_null() {
        return TwkStatus::NullArgument;
    }
    guarded(|| {
        let params = match build_params(theta) {
            Ok(p) => p,
            Err(s) => return s,
        };
        if !k.is_finite() {
            return TwkStatus::InvalidInput;
        }
        unsafe { *out = dispersion_g(k, &params) };
        TwkStatus::Ok
    })
}

/// Group velocity of moving band `branch` (2 or 3) at momentum `k`.
/// Momenta where the velocity's sign is undefined are rejected.
///
/// # Safety
/// `out` must be a valid writable pointer.
#[no_mangle]
pub unsafe extern "C" fn twk_group_velocity(
    branch: u32,
    theta: f64,
    k: f64,
    out: *mut f64,
) -> TwkStatus {
    if out.is_null() {
        return TwkStatus::NullArgument;
    }
    guarded(|| {
        let params = match build_params(theta) {
            Ok(p) => p,
            Err(s) => return s,
        };
        if !k.is_finite() || !(2..=3).contains(&branch) {
            return TwkStatus::InvalidInput;
        }
        match group_velocity(branch as usize, k, &params) {
            Ok(h) => {
                unsafe { *out = h };
                TwkStatus::Ok
            }
            Err(e) => status_of(&e),
        }
    })
}

/// Rank of the 7x3 delocalization system for the given angle; rank 3 means
/// every nonzero spin localizes.
///
/// # Safety
/// `out` must be a valid writable pointer.
#[no_mangle]
pub unsafe extern "C" fn twk_delocalization_rank(theta: f64, out: *mut u32) -> TwkStatus {
    if out.is_null() {
        return TwkStatus::NullArgument;
    }
    guarded(|| {
        let params = match build_params(theta) {
            Ok(p) => p,
            Err(s) => return s,
        };
        unsafe { *out = delocalization_rank_check(&params).rank as u32 };
        TwkStatus::Ok
    })
}
