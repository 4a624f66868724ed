//! The long-time density model: frozen pointwise values, mass closure, the
//! distribution gap, moment consistency between the x-space density and the
//! k-space quadrature, and finite-time windowed comparisons.

mod common;

use common::random_inits;
use proptest::prelude::*;
use std::f64::consts::PI;
use triwalk::quadrature::integrate_sqrt_endpoints;
use triwalk::{
    compare_windowed, density_f, distribution, evolve, moment_limit, nu_weight, CoinParameters,
    Complex64, Error, InitialState, LimitDensityModel, Schedule, SupportIntervals,
};

fn grover() -> CoinParameters {
    CoinParameters::grover()
}

fn five_pi_six() -> CoinParameters {
    CoinParameters::new(5.0 * PI / 6.0).unwrap()
}

fn complex_init() -> InitialState {
    InitialState::normalized(
        Complex64::new(0.2, 0.5),
        Complex64::new(-0.6, 0.0),
        Complex64::new(0.1, -0.4),
    )
    .unwrap()
}

#[test]
fn density_matches_frozen_pointwise_values() {
    // Frozen from an implementation cross-validated against the band
    // pushforward density sum_j w_j(k) / (2 pi |h_j'(k)|) at 1e-10.
    let sym = InitialState::equal_superposition();
    let cases = [
        (grover(), 0.35, 0.3750285780),
        (grover(), -0.30, 0.3684236150),
        (grover(), 0.55, 0.4065691147),
        (grover(), -0.62, 0.5125502035),
        (grover(), 0.12, 0.3570177818),
        (five_pi_six(), 0.35, 1.3410088093),
        (five_pi_six(), -0.30, 1.6861655051),
        (five_pi_six(), 0.12, 0.0),
        (five_pi_six(), 0.55, 0.0),
        (five_pi_six(), -0.62, 0.0),
    ];
    for (params, x, expect) in cases {
        let model = LimitDensityModel::new(&sym, &params).unwrap();
        let got = model.continuous_density(x).unwrap();
        assert!(
            (got - expect).abs() < 1e-6,
            "density({x}) = {got} vs frozen {expect} at theta={}",
            params.theta()
        );
    }
}

#[test]
fn mass_closes_for_reference_grid_and_random_states() {
    let sym = InitialState::equal_superposition();
    let center = InitialState::from_reals(0.0, 1.0, 0.0).unwrap();
    for params in [grover(), five_pi_six()] {
        for init in [&sym, &center] {
            let model = LimitDensityModel::new(init, &params).unwrap();
            let defect = (model.delta() + model.continuous_mass() - 1.0).abs();
            assert!(defect < 1e-6, "closure defect {defect:.2e}");
        }
    }
    for init in random_inits(11, 20) {
        let model = LimitDensityModel::new(&init, &five_pi_six()).unwrap();
        let defect = (model.delta() + model.continuous_mass() - 1.0).abs();
        assert!(defect < 1e-6, "random-state closure defect {defect:.2e}");
        assert!(model.delta() > 0.0 && model.delta() < 1.0);
    }
}

/// x-space moment of the continuous part: the D2 term mirrors onto D1 with
/// the parity factor (-1)^r.
fn continuous_moment(r: u32, init: &InitialState, params: &CoinParameters) -> f64 {
    let s = SupportIntervals::for_coin(params);
    let (a, b, g) = (init.alpha(), init.beta(), init.gamma());
    let parity = if r % 2 == 0 { 1.0 } else { -1.0 };
    integrate_sqrt_endpoints(s.d1.0, s.d1.1, 512, 8192, 1e-9, 1e-6, |x| {
        (nu_weight(a, b, g, x, params) + parity * nu_weight(g, b, a, x, params))
            * density_f(x, params)
            * x.powi(r as i32)
    })
    .unwrap()
    .value
}

#[test]
fn density_moments_agree_with_momentum_quadrature() {
    // Two entirely different integrals — x against the closed-form density,
    // and h_j(k) against band overlaps — must produce the same moments.
    let sym = InitialState::equal_superposition();
    let cplx = complex_init();
    for params in [grover(), five_pi_six()] {
        for init in [&sym, &cplx] {
            for r in 1..=3u32 {
                let from_density = continuous_moment(r, init, &params);
                let from_momentum = moment_limit(r, init, &params).unwrap();
                assert!(
                    (from_density - from_momentum).abs() < 1e-6,
                    "r={r}: density {from_density} vs momentum {from_momentum}"
                );
            }
            // r = 0 needs the atom added back on the density side
            let model = LimitDensityModel::new(init, &params).unwrap();
            let total = continuous_moment(0, init, &params) + model.delta();
            assert!((total - moment_limit(0, init, &params).unwrap()).abs() < 1e-6);
        }
    }
}

#[test]
fn gap_region_is_identically_zero() {
    let model = LimitDensityModel::new(&complex_init(), &five_pi_six()).unwrap();
    let (lo, hi) = model.support().gap().unwrap();
    assert!(lo < -0.244 && hi > 0.244);
    for i in 0..200 {
        let x = -0.2395 + 0.479 * i as f64 / 199.0;
        assert_eq!(
            model.continuous_density(x).unwrap(),
            0.0,
            "gap density nonzero at {x}"
        );
    }
    // just beyond the inner edges the density turns on
    assert!(model.continuous_density(0.250).unwrap() > 0.0);
    assert!(model.continuous_density(-0.250).unwrap() > 0.0);
}

#[test]
fn no_gap_for_small_angle_coins() {
    // cos(theta) >= -1/2 keeps the two intervals overlapping
    let model = LimitDensityModel::new(
        &InitialState::equal_superposition(),
        &CoinParameters::new(PI / 3.0).unwrap(),
    )
    .unwrap();
    assert!(model.support().gap().is_none());
    assert!(model.continuous_density(0.01).unwrap() > 0.0);
}

#[test]
fn all_four_endpoints_are_guarded() {
    let model = LimitDensityModel::new(&InitialState::equal_superposition(), &five_pi_six())
        .unwrap();
    let s = *model.support();
    for e in [s.d1.0, s.d1.1, s.d2.0, s.d2.1] {
        assert!(matches!(
            model.continuous_density(e),
            Err(Error::EndpointSingularity { .. })
        ));
        assert!(matches!(
            model.continuous_density(e + 0.9e-9),
            Err(Error::EndpointSingularity { .. })
        ));
    }
}

#[test]
fn node_budget_is_validated() {
    assert!(matches!(
        LimitDensityModel::with_nodes(
            &InitialState::equal_superposition(),
            &grover(),
            32
        ),
        Err(Error::TooFewNodes { .. })
    ));
}

#[test]
fn windowed_comparison_tracks_simulation_mid_horizon() {
    // moderate-time smoke check of the full pipeline; the t = 500 criterion
    // run uses tight tolerances
    for params in [grover(), five_pi_six()] {
        let init = InitialState::equal_superposition();
        let model = LimitDensityModel::new(&init, &params).unwrap();
        let dist = distribution(&evolve(&init, &params, Schedule::SkipAt2, 200));
        let cmp = compare_windowed(&dist, &model, 11, 30).unwrap();
        assert!(
            cmp.mean_abs_gap < 1e-3,
            "mean gap {:.2e} at t=200",
            cmp.mean_abs_gap
        );
        assert!(cmp.max_abs_gap < 5e-3, "max gap {:.2e}", cmp.max_abs_gap);
    }
}

#[test]
fn approximation_vanishes_outside_the_cone() {
    let model = LimitDensityModel::new(&InitialState::equal_superposition(), &grover()).unwrap();
    let t = 500;
    let frontier = (model.support().speed() * t as f64).floor() as i64;
    for x in [frontier + 3, -(frontier + 3), 2 * frontier, -(3 * frontier)] {
        assert_eq!(model.approximate_prob(x, t).unwrap(), 0.0, "x={x}");
    }
    assert!(model.approximate_prob(frontier - 2, t).unwrap() > 0.0);
}

#[test]
fn density_respects_initial_state_asymmetry() {
    // a left-leaning spin state pushes more continuous mass onto one side
    let left = InitialState::from_reals(1.0, 0.0, 0.0).unwrap();
    let model = LimitDensityModel::new(&left, &five_pi_six()).unwrap();
    let s = *model.support();
    let probe = 0.5 * (s.d1.0 + s.d1.1);
    let right_side = model.continuous_density(probe).unwrap();
    let left_side = model.continuous_density(-probe).unwrap();
    assert!(
        (right_side - left_side).abs() > 1e-3,
        "asymmetric state produced a symmetric density"
    );
    // while the mirrored state produces the mirrored density
    let right = InitialState::from_reals(0.0, 0.0, 1.0).unwrap();
    let mirrored = LimitDensityModel::new(&right, &five_pi_six()).unwrap();
    assert!(
        (mirrored.continuous_density(-probe).unwrap() - right_side).abs() < 1e-12
    );
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn prop_density_nonnegative_and_mass_closes(
        re in proptest::array::uniform3(-1.0f64..1.0),
        im in proptest::array::uniform3(-1.0f64..1.0),
        theta in prop_oneof![0.3f64..2.9, 3.4f64..6.0],
    ) {
        let norm_sqr: f64 = re.iter().zip(&im).map(|(r, i)| r * r + i * i).sum();
        prop_assume!(norm_sqr > 1e-4);
        let init = InitialState::normalized(
            Complex64::new(re[0], im[0]),
            Complex64::new(re[1], im[1]),
            Complex64::new(re[2], im[2]),
        ).unwrap();
        let params = CoinParameters::new(theta).unwrap();
        let model = LimitDensityModel::new(&init, &params).unwrap();
        prop_assert!((model.delta() + model.continuous_mass() - 1.0).abs() < 1e-6);
        let s = *model.support();
        for i in 0..40 {
            let x = s.d2.0 + (s.d1.1 - s.d2.0) * (i as f64 + 0.5) / 40.0;
            if let Ok(d) = model.continuous_density(x) {
                prop_assert!(d >= 0.0);
                prop_assert!(d.is_finite());
            }
        }
    }
}
