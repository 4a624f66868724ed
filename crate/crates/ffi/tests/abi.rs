//! Exercises the C ABI end to end from Rust: object lifecycles, status
//! codes, buffer contracts, and numeric agreement with the native library.

use std::ffi::CStr;
use std::f64::consts::PI;
use std::ptr;
use triwalk_ffi::*;

const SYM: f64 = 0.577_350_269_189_625_8; // 1/sqrt(3)

fn new_walk(theta: f64, schedule: u32) -> *mut TwkWalk {
    let mut walk = ptr::null_mut();
    let status = unsafe {
        twk_walk_new(theta, SYM, 0.0, SYM, 0.0, SYM, 0.0, schedule, &mut walk)
    };
    assert_eq!(status, TwkStatus::Ok);
    assert!(!walk.is_null());
    walk
}

fn new_model(theta: f64) -> *mut TwkLimitModel {
    let mut model = ptr::null_mut();
    let status = unsafe {
        twk_limit_model_new(theta, SYM, 0.0, SYM, 0.0, SYM, 0.0, 0, &mut model)
    };
    assert_eq!(status, TwkStatus::Ok);
    model
}

#[test]
fn version_and_messages_are_static_strings() {
    let version = unsafe { CStr::from_ptr(twk_version()) }.to_str().unwrap();
    assert_eq!(version, env!("CARGO_PKG_VERSION"));
    for status in [
        TwkStatus::Ok,
        TwkStatus::NullArgument,
        TwkStatus::InvalidInput,
        TwkStatus::Nonconvergence,
    ] {
        let msg = unsafe { CStr::from_ptr(twk_status_message(status)) };
        assert!(!msg.to_str().unwrap().is_empty());
    }
    assert!((twk_grover_theta() - (-1.0f64 / 3.0).acos()).abs() < 1e-15);
}

#[test]
fn walk_lifecycle_and_distribution() {
    let walk = new_walk(twk_grover_theta(), TwkSchedule::Main as u32);
    unsafe {
        assert_eq!(twk_walk_evolve(walk, 100), TwkStatus::Ok);
        let mut t = 0u64;
        assert_eq!(twk_walk_time(walk, &mut t), TwkStatus::Ok);
        assert_eq!(t, 100);

        let mut len = 0usize;
        assert_eq!(twk_walk_distribution_len(walk, &mut len), TwkStatus::Ok);
        assert_eq!(len, 201);

        let mut xs = vec![0i64; len];
        let mut ps = vec![0f64; len];
        let mut written = 0usize;
        assert_eq!(
            twk_walk_distribution(walk, xs.as_mut_ptr(), ps.as_mut_ptr(), len, &mut written),
            TwkStatus::Ok
        );
        assert_eq!(written, len);
        assert!(xs.windows(2).all(|w| w[1] == w[0] + 1));
        assert_eq!(xs[0], -100);
        let total: f64 = ps.iter().sum();
        assert!((total - 1.0).abs() < 1e-12);

        let mut mass = 0f64;
        assert_eq!(twk_walk_total_mass(walk, &mut mass), TwkStatus::Ok);
        assert!((mass - 1.0).abs() < 1e-12);

        // undersized buffer is rejected without writing anything
        assert_eq!(
            twk_walk_distribution(walk, xs.as_mut_ptr(), ps.as_mut_ptr(), len - 1, &mut written),
            TwkStatus::InvalidInput
        );
        twk_walk_free(walk);
    }
}

#[test]
fn distribution_matches_native_library() {
    let walk = new_walk(twk_grover_theta(), TwkSchedule::Main as u32);
    unsafe {
        assert_eq!(twk_walk_evolve(walk, 50), TwkStatus::Ok);
        let mut len = 0usize;
        twk_walk_distribution_len(walk, &mut len);
        let mut xs = vec![0i64; len];
        let mut ps = vec![0f64; len];
        let mut written = 0usize;
        twk_walk_distribution(walk, xs.as_mut_ptr(), ps.as_mut_ptr(), len, &mut written);

        let native = triwalk::distribution(&triwalk::evolve(
            &triwalk::InitialState::equal_superposition(),
            &triwalk::CoinParameters::grover(),
            triwalk::Schedule::SkipAt2,
            50,
        ));
        for (&x, &p) in xs.iter().zip(&ps) {
            assert!((p - native.probability(x)).abs() < 1e-15);
        }
        twk_walk_free(walk);
    }
}

#[test]
fn variant_schedules_run() {
    for schedule in [TwkSchedule::SkipAt0 as u32, TwkSchedule::SkipAt1 as u32] {
        let walk = new_walk(5.0 * PI / 6.0, schedule);
        unsafe {
            assert_eq!(twk_walk_evolve(walk, 30), TwkStatus::Ok);
            let mut mass = 0f64;
            assert_eq!(twk_walk_total_mass(walk, &mut mass), TwkStatus::Ok);
            assert!((mass - 1.0).abs() < 1e-12);
            twk_walk_free(walk);
        }
    }
}

#[test]
fn construction_rejects_bad_input() {
    let mut walk = ptr::null_mut();
    unsafe {
        // degenerate angle
        assert_eq!(
            twk_walk_new(PI, SYM, 0.0, SYM, 0.0, SYM, 0.0, 0, &mut walk),
            TwkStatus::InvalidInput
        );
        // zero spin
        assert_eq!(
            twk_walk_new(1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0, &mut walk),
            TwkStatus::InvalidInput
        );
        // non-finite component
        assert_eq!(
            twk_walk_new(1.0, f64::NAN, 0.0, SYM, 0.0, SYM, 0.0, 0, &mut walk),
            TwkStatus::InvalidInput
        );
        // unknown schedule
        assert_eq!(
            twk_walk_new(1.0, SYM, 0.0, SYM, 0.0, SYM, 0.0, 7, &mut walk),
            TwkStatus::InvalidInput
        );
        // null out-pointer
        assert_eq!(
            twk_walk_new(1.0, SYM, 0.0, SYM, 0.0, SYM, 0.0, 0, ptr::null_mut()),
            TwkStatus::NullArgument
        );
    }
}

#[test]
fn null_handles_are_reported_not_dereferenced() {
    unsafe {
        assert_eq!(twk_walk_evolve(ptr::null_mut(), 1), TwkStatus::NullArgument);
        let mut t = 0u64;
        assert_eq!(twk_walk_time(ptr::null(), &mut t), TwkStatus::NullArgument);
        let mut d = 0f64;
        assert_eq!(
            twk_limit_model_delta(ptr::null(), &mut d),
            TwkStatus::NullArgument
        );
        let walk = new_walk(1.0, 0);
        assert_eq!(twk_walk_time(walk, ptr::null_mut()), TwkStatus::NullArgument);
        twk_walk_free(walk);
        // frees tolerate null
        twk_walk_free(ptr::null_mut());
        twk_limit_model_free(ptr::null_mut());
    }
}

#[test]
fn limit_model_surface() {
    let model = new_model(twk_grover_theta());
    unsafe {
        let mut delta = 0f64;
        assert_eq!(twk_limit_model_delta(model, &mut delta), TwkStatus::Ok);
        assert!((delta - 0.3593894673946085).abs() < 1e-9);

        let mut support = [0f64; 4];
        assert_eq!(
            twk_limit_model_support(model, support.as_mut_ptr()),
            TwkStatus::Ok
        );
        let native = triwalk::SupportIntervals::for_coin(&triwalk::CoinParameters::grover());
        assert_eq!(support, [native.d1.0, native.d1.1, native.d2.0, native.d2.1]);

        let mut density = 0f64;
        assert_eq!(
            twk_limit_model_density(model, 0.35, &mut density),
            TwkStatus::Ok
        );
        assert!((density - 0.3750285780).abs() < 1e-6);
        // support endpoints are singular and rejected
        assert_eq!(
            twk_limit_model_density(model, native.d1.1, &mut density),
            TwkStatus::InvalidInput
        );

        let mut p = -1.0f64;
        assert_eq!(
            twk_limit_model_approx_prob(model, 0, 500, &mut p),
            TwkStatus::Ok
        );
        assert_eq!(p, 0.0);
        assert_eq!(
            twk_limit_model_approx_prob(model, 100, 0, &mut p),
            TwkStatus::InvalidInput
        );
        twk_limit_model_free(model);
    }

    // the gapped angle reports zero density around the origin
    let model = new_model(5.0 * PI / 6.0);
    unsafe {
        let mut density = -1.0f64;
        assert_eq!(
            twk_limit_model_density(model, 0.1, &mut density),
            TwkStatus::Ok
        );
        assert_eq!(density, 0.0);
        twk_limit_model_free(model);
    }

    // tiny node budgets are an input error
    let mut model = ptr::null_mut();
    unsafe {
        assert_eq!(
            twk_limit_model_new(1.0, SYM, 0.0, SYM, 0.0, SYM, 0.0, 16, &mut model),
            TwkStatus::InvalidInput
        );
    }
}

#[test]
fn scalar_helpers_match_references() {
    unsafe {
        let mut delta = 0f64;
        assert_eq!(
            twk_delta_mass(5.0 * PI / 6.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0, &mut delta),
            TwkStatus::Ok
        );
        assert!((delta - 0.7968156278209148).abs() < 1e-9);

        let mut g = 0f64;
        assert_eq!(twk_dispersion(1.1, 0.0, &mut g), TwkStatus::Ok);
        assert!((g - 1.0).abs() < 1e-15);

        let mut h = 0f64;
        assert_eq!(
            twk_group_velocity(2, 5.0 * PI / 6.0, 1.0, &mut h),
            TwkStatus::Ok
        );
        assert!((h + 0.380637326070).abs() < 1e-9);
        // the sibling band moves opposite
        let mut h3 = 0f64;
        assert_eq!(
            twk_group_velocity(3, 5.0 * PI / 6.0, 1.0, &mut h3),
            TwkStatus::Ok
        );
        assert!((h + h3).abs() < 1e-15);
        // flat band and out-of-range branches are rejected
        assert_eq!(
            twk_group_velocity(1, 5.0 * PI / 6.0, 1.0, &mut h),
            TwkStatus::InvalidInput
        );
        // sign-undefined momentum
        assert_eq!(
            twk_group_velocity(2, 5.0 * PI / 6.0, 0.0, &mut h),
            TwkStatus::InvalidInput
        );

        let mut rank = 0u32;
        assert_eq!(
            twk_delocalization_rank(twk_grover_theta(), &mut rank),
            TwkStatus::Ok
        );
        assert_eq!(rank, 3);
    }
}
