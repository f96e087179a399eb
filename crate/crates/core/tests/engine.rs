mod common;

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI, TAU};

use cabello::engine::partner_theta;
use cabello::{
    cabello_probs, check_conditions, nogo_verify, solve_constraints, witness_from_theta_e,
    witness_settings, Branch, Clause, ConditionTolerance, Error, SchmidtState, Verdict,
};
use common::spinor_probs;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;

fn entangled_beta() -> impl Strategy<Value = f64> {
    (1e-3..FRAC_PI_2 - 1e-3).prop_filter("not maximal", |b: &f64| (b - FRAC_PI_4).abs() > 1e-6)
}

fn branch() -> impl Strategy<Value = Branch> {
    prop_oneof![Just(Branch::Minus), Just(Branch::Plus)]
}

proptest! {
    #[test]
    fn solver_zeroes_q2_and_q3(
        beta in entangled_beta(),
        gamma in 0.0..TAU,
        td in -PI + 1e-6..PI - 1e-6,
        te in -PI + 1e-6..PI - 1e-6,
        br in branch(),
        free in 0.0..TAU,
    ) {
        let state = SchmidtState::new(beta, gamma).unwrap();
        let sol = solve_constraints(&state, td, te, br, free).unwrap();
        prop_assert!(sol.settings.is_valid());
        let q = cabello_probs(&state, &sol.settings);
        prop_assert!(q.q2 <= 1e-12 && q.q3 <= 1e-12, "{q:?}");
        let r = spinor_probs(beta, state.gamma(), &sol.settings);
        prop_assert!(r[1] <= 1e-12 && r[2] <= 1e-12, "{r:?}");
        let tb = beta.tan();
        let lhs = (0.5 * sol.settings.g.theta).tan();
        let rhs = tb * (0.5 * sol.settings.d.theta).tan();
        prop_assert!((lhs - rhs).abs() <= 1e-9 * (1.0 + rhs.abs()));
        if !sol.degenerate_phase {
            let c = (sol.settings.d.phi + sol.settings.e.phi - state.gamma()).cos();
            let expect = br.sign() * td.signum() * te.signum();
            prop_assert!((c - expect).abs() < 1e-9);
        }
    }

    #[test]
    fn probabilities_do_not_depend_on_the_free_phase(
        beta in entangled_beta(),
        gamma in 0.0..TAU,
        td in 0.0..PI - 1e-6,
        te in 0.0..PI - 1e-6,
        br in branch(),
        free in 0.0..TAU,
    ) {
        let state = SchmidtState::new(beta, gamma).unwrap();
        let base = cabello_probs(&state, &solve_constraints(&state, td, te, br, 0.0).unwrap().settings);
        let moved = cabello_probs(&state, &solve_constraints(&state, td, te, br, free).unwrap().settings);
        for (a, b) in base.as_array().iter().zip(moved.as_array()) {
            prop_assert!((a - b).abs() <= 1e-12);
        }
    }

    #[test]
    fn partner_angle_satisfies_the_tangent_relation(tb in 0.01..100.0f64, th in 0.0..PI - 1e-6) {
        let p = partner_theta(tb, th);
        prop_assert!((0.0..PI).contains(&p));
        prop_assert!(((0.5 * p).tan() - tb * (0.5 * th).tan()).abs() <= 1e-9 * (1.0 + (0.5 * p).tan()));
    }

    #[test]
    fn nogo_family_has_equal_q1_and_q4(
        gamma in 0.0..TAU, td in 0.0..=PI, te in 0.0..=PI, pd in 0.0..TAU, pe in 0.0..TAU,
    ) {
        let r = nogo_verify(gamma, td, te, pd, pe).unwrap();
        prop_assert!(r.gap.abs() <= 1e-12);
        prop_assert!((r.q1_reduced - r.probs.q1).abs() <= 1e-12);
        prop_assert!((r.q4_reduced - r.probs.q4).abs() <= 1e-12);
        let s = spinor_probs(FRAC_PI_4, gamma, &r.settings);
        prop_assert!(s[1] <= 1e-12 && s[2] <= 1e-12);
        prop_assert!((s[3] - s[0]).abs() <= 1e-12);
    }
}

#[test]
fn witnesses_hold_across_states() {
    for k in 1..100 {
        let beta = FRAC_PI_2 * k as f64 / 100.0;
        if (beta - FRAC_PI_4).abs() < 0.01 {
            continue;
        }
        let state = SchmidtState::new(beta, 0.37 * k as f64).unwrap();
        for &te in &[0.3, FRAC_PI_2, 2.5] {
            let s = witness_from_theta_e(&state, te).unwrap();
            let q = cabello_probs(&state, &s);
            assert_eq!(check_conditions(&q, ConditionTolerance::default()), Verdict::Holds, "beta {beta} te {te}: {q:?}");
            let r = spinor_probs(beta, state.gamma(), &s);
            assert!(r[1] <= 1e-12 && r[2] <= 1e-12 && r[0] > 1e-9 && r[3] - r[0] > 1e-9);
        }
    }
}

#[test]
fn witness_rejects_inconsistent_angles() {
    let state = SchmidtState::new(0.4, 0.0).unwrap();
    let te = 1.0;
    let tf = partner_theta(state.tan_beta(), te);
    assert!(witness_settings(&state, te, tf).is_ok());
    assert!(matches!(witness_settings(&state, te, tf + 1e-6), Err(Error::InvalidInput(_))));
    let maximal = SchmidtState::maximally_entangled(0.0).unwrap();
    assert!(matches!(witness_from_theta_e(&maximal, 1.0), Err(Error::MaximallyEntangled { .. })));
    let product = SchmidtState::new(0.0, 0.0).unwrap();
    assert!(matches!(witness_from_theta_e(&product, 1.0), Err(Error::ProductState { .. })));
}

#[test]
fn solver_rejects_product_states_and_bad_angles() {
    let product = SchmidtState::new(FRAC_PI_2, 0.0).unwrap();
    assert!(matches!(
        solve_constraints(&product, 1.0, 1.0, Branch::Minus, 0.0),
        Err(Error::ProductState { .. })
    ));
    let state = SchmidtState::new(0.5, 0.0).unwrap();
    assert!(solve_constraints(&state, PI, 1.0, Branch::Minus, 0.0).is_err());
    assert!(solve_constraints(&state, f64::NAN, 1.0, Branch::Minus, 0.0).is_err());
}

#[test]
fn condition_clauses_are_checked_in_order() {
    let tol = ConditionTolerance::default();
    let q = |q1, q2, q3, q4| cabello::CabelloProbs { q1, q2, q3, q4 };
    assert_eq!(check_conditions(&q(0.1, 1e-6, 1e-6, 0.0), tol), Verdict::Fails(Clause::Q2Nonzero));
    assert_eq!(check_conditions(&q(0.1, 0.0, 1e-6, 0.0), tol), Verdict::Fails(Clause::Q3Nonzero));
    assert_eq!(check_conditions(&q(0.0, 0.0, 0.0, 0.0), tol), Verdict::Fails(Clause::GapNotPositive));
    assert_eq!(check_conditions(&q(0.0, 0.0, 0.0, 0.1), tol), Verdict::Fails(Clause::Q1NotPositive));
    assert_eq!(check_conditions(&q(0.1, 0.0, 0.0, 0.2), tol), Verdict::Holds);
    assert_eq!(
        check_conditions(&q(0.1, 1e-10, 0.0, 0.2), ConditionTolerance::uniform(1e-9)),
        Verdict::Holds
    );
}

#[test]
fn seeded_nogo_sweep() {
    let mut rng = ChaCha20Rng::seed_from_u64(11);
    let mut worst: f64 = 0.0;
    for _ in 0..1000 {
        let r = nogo_verify(
            rng.random_range(0.0..TAU),
            rng.random_range(0.0..=PI),
            rng.random_range(0.0..=PI),
            rng.random_range(0.0..TAU),
            rng.random_range(0.0..TAU),
        )
        .unwrap();
        worst = worst.max(r.gap.abs());
    }
    assert!(worst <= 1e-12, "{worst}");
}
