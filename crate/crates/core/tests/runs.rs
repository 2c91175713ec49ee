//! Whole-run behavior across retrieval schemes.

use cfo::{
    run_single, spec_of, FunctionId, KernelConfig64, KernelError, RepositionPolicy64, Scheme,
};

fn run(function: FunctionId, scheme: Scheme, probes_per_dim: usize, gamma: f64) -> cfo::RunResult64 {
    let space = spec_of::<f64>(function).space();
    run_single(
        function,
        &space,
        probes_per_dim,
        gamma,
        &RepositionPolicy64::new(scheme),
        &KernelConfig64::default(),
        None,
    )
    .unwrap()
}

#[test]
fn mixed_with_huge_interval_reduces_to_coordinate_only() {
    // No step of a finite run is divisible by the interval, so the
    // directional branch never fires.
    for gamma in [0.0, 0.4, 1.0] {
        let plain = run(FunctionId::F16, Scheme::CoordinateOnly, 6, gamma);
        let mixed = run(FunctionId::F16, Scheme::Mixed(1_000_003), 6, gamma);
        assert_eq!(plain, mixed);
    }
}

#[test]
fn every_step_equals_mixed_interval_one() {
    for gamma in [0.1, 0.7] {
        let every = run(FunctionId::F17, Scheme::DirectionalEveryStep, 4, gamma);
        let mixed = run(FunctionId::F17, Scheme::Mixed(1), 4, gamma);
        assert_eq!(every, mixed);
    }
}

#[test]
fn directional_runs_complete_on_a_high_dimensional_function() {
    // Schwefel 2.26 drives probes far outside the box, exercising the
    // directional and both-steps-outside branches; the in-run containment
    // assertion must hold throughout.
    let r = run(FunctionId::F8, Scheme::DirectionalEveryStep, 2, 0.5);
    assert!(r.best.fitness.is_finite());
    let r = run(FunctionId::F8, Scheme::Mixed(2), 2, 0.5);
    assert!(r.best.fitness.is_finite());
}

#[test]
fn zero_compat_mode_runs_and_differs_from_strict() {
    let space = spec_of::<f64>(FunctionId::F8).space();
    let config = KernelConfig64::default();
    let strict = run_single(
        FunctionId::F8,
        &space,
        2,
        0.5,
        &RepositionPolicy64::new(Scheme::DirectionalEveryStep),
        &config,
        None,
    )
    .unwrap();
    let compat = run_single(
        FunctionId::F8,
        &space,
        2,
        0.5,
        &RepositionPolicy64::new(Scheme::DirectionalEveryStep).with_eta_rule(cfo::EtaRule::ZeroCompat),
        &config,
        None,
    )
    .unwrap();
    assert!(compat.best.fitness.is_finite());
    // the zero-eta rule teleports probes back to their previous position,
    // so the trajectories genuinely diverge
    assert_ne!(strict.history, compat.history);
}

#[test]
fn missing_noise_source_is_reported_per_contract() {
    let space = spec_of::<f64>(FunctionId::F7).space();
    let err = run_single(
        FunctionId::F7,
        &space,
        2,
        0.0,
        &RepositionPolicy64::new(Scheme::CoordinateOnly),
        &KernelConfig64::default(),
        None,
    )
    .unwrap_err();
    assert!(matches!(err, KernelError::Eval(_)));
}

#[test]
fn gamma_outside_unit_interval_is_rejected() {
    let space = spec_of::<f64>(FunctionId::F16).space();
    let err = run_single(
        FunctionId::F16,
        &space,
        4,
        1.5,
        &RepositionPolicy64::new(Scheme::CoordinateOnly),
        &KernelConfig64::default(),
        None,
    )
    .unwrap_err();
    assert!(matches!(err, KernelError::InvalidConfig(_)));
}

#[test]
fn shrink_interval_setting_changes_the_cadence() {
    // The ten-step variant is one configuration away from the default.
    let space = spec_of::<f64>(FunctionId::F16).space();
    let mut config = KernelConfig64::default();
    config.shrink_interval = 10;
    let ten = run_single(
        FunctionId::F16,
        &space,
        4,
        0.5,
        &RepositionPolicy64::new(Scheme::CoordinateOnly),
        &config,
        None,
    )
    .unwrap();
    let twenty = run(FunctionId::F16, Scheme::CoordinateOnly, 4, 0.5);
    assert!(ten.best.fitness.is_finite());
    assert_ne!(ten, twenty);
}
