mod common;

use std::f64::consts::{FRAC_PI_2, PI};

use common::{rk4_curvature, rng};
use elastica_core::elastica::{
    build_params, curvature_at, curvature_derivative, first_integral_residual, first_zero, theta_integral,
};
use elastica_core::shooting::{solve_mu, SolveOptions};
use elastica_core::special::complete_elliptic_k;
use elastica_core::{ElasticaParams, Error};
use rand::Rng;

fn solved(mu: f64) -> ElasticaParams {
    solve_mu(mu, &SolveOptions::default()).unwrap().params
}

#[test]
fn parameter_identities_at_mu_4() {
    let p = solved(4.0);
    let c = 0.25 * p.k_max.powi(4) + p.lambda * p.k_max.powi(2) - 2.0 * p.mu * p.k_max;
    assert!((p.c - c).abs() < 1e-12);
    assert!(p.quartic(p.k_max).abs() < 1e-10);
    assert!(p.quartic(p.k_min).abs() < 1e-10);
    let b = (3.0 * p.sigma.powi(2) + p.delta.powi(2) + 2.0 * p.lambda) / (p.sigma * p.delta);
    assert!((p.gamma * p.gamma + b * p.gamma + 1.0).abs() < 1e-10);
    assert!(p.gamma > -1.0 && p.gamma < 0.0);
    let g2 = p.gamma * p.gamma;
    assert!((p.omega.powi(2) - p.sigma * p.delta * (g2 - 1.0) / (2.0 * p.gamma)).abs() < 1e-10);
    assert!((p.m - (g2 + p.delta * p.gamma / (2.0 * p.sigma)) / (g2 - 1.0)).abs() < 1e-12);
    assert!(p.m > 0.0 && p.m < 1.0 && p.omega > 0.0);
    assert!((curvature_at(&p, 0.0) - p.k_max).abs() < 1e-12);
    let half = 2.0 * complete_elliptic_k(p.m).unwrap() / p.omega;
    assert!((curvature_at(&p, half) - p.k_min).abs() < 1e-9);
}

#[test]
fn first_integral_holds_on_solved_shape() {
    let p = solved(4.0);
    let mut r = rng(20);
    assert!(first_integral_residual(&p, 0.0).abs() < 1e-12);
    for _ in 0..100 {
        let s = r.gen_range(-10.0..10.0);
        assert!(first_integral_residual(&p, s).abs() <= 1e-8 * (1.0 + p.k_max.powi(4)));
    }
}

#[test]
fn closed_form_matches_direct_integration() {
    for mu in [3.2, 4.0, 8.0] {
        let p = solved(mu);
        for s in [0.2, 0.7, 1.5] {
            let direct = rk4_curvature(p.mu, p.lambda, p.k_max, s, 20_000);
            assert!((curvature_at(&p, s) - direct).abs() < 1e-9, "mu={mu} s={s}");
        }
    }
}

#[test]
fn second_derivative_solves_the_ode() {
    let h = 1e-4;
    for (mu, lambda, k_max) in [(4.0, 2.0, 2.2), (8.0, 2.26, 4.27), (3.2, 2.18, 1.87)] {
        let p = build_params(mu, lambda, k_max, 1).unwrap();
        for s in [0.05, 0.3, 0.9, 1.4] {
            let k = curvature_at(&p, s);
            let d2 = (curvature_at(&p, s + h) - 2.0 * k + curvature_at(&p, s - h)) / (h * h);
            assert!((d2 - p.acceleration(k)).abs() < 1e-5);
            let d1 = (curvature_at(&p, s + h) - curvature_at(&p, s - h)) / (2.0 * h);
            assert!((d1 - curvature_derivative(&p, s)).abs() < 1e-6);
        }
    }
}

#[test]
fn period_and_symmetry() {
    let p = build_params(5.0, 2.0, 3.0, 1).unwrap();
    let period = 4.0 * complete_elliptic_k(p.m).unwrap() / p.omega;
    let mut r = rng(21);
    for _ in 0..50 {
        let s = r.gen_range(0.0..5.0);
        assert!((curvature_at(&p, s + period) - curvature_at(&p, s)).abs() < 1e-8);
        assert!((curvature_at(&p, -s) - curvature_at(&p, s)).abs() < 1e-12);
    }
}

#[test]
fn radius_consistency() {
    for mu in [4.0, 8.0, 30.0] {
        let p = solved(mu);
        let lhs = mu * mu * (p.r0 * p.r0 - (p.lambda / mu).powi(2));
        assert!((lhs - p.c).abs() < 1e-9);
    }
}

#[test]
fn disk_branch() {
    let p = build_params(2.0, 1.5, 1.0, 1).unwrap();
    assert!(p.degenerate);
    assert_eq!(curvature_at(&p, 3.0), 1.0);
    assert!((theta_integral(&p, FRAC_PI_2).unwrap() - FRAC_PI_2).abs() < 1e-15);
    assert_eq!(first_zero(&p, 10.0), None);
    assert_eq!(first_integral_residual(&p, 1.0), 0.0);
}

#[test]
fn rejects_inconsistent_input() {
    assert!(matches!(build_params(4.0, 0.0, 0.1, 1), Err(Error::InconsistentParameters(_))));
    assert!(matches!(build_params(4.0, -1.0, 2.0, 1), Err(Error::Domain { .. })));
    assert!(matches!(build_params(0.0, 1.0, 2.0, 1), Err(Error::Domain { .. })));
    assert!(build_params(4.0, 1.0, 2.0, 0).is_err());
}

#[test]
fn strictly_convex_params_have_no_zero() {
    let p = solved(3.2);
    assert!(p.k_min > 0.0);
    assert_eq!(first_zero(&p, 10.0), None);
    let mut last = 0.0;
    for i in 1..=20 {
        let t = theta_integral(&p, i as f64 * 0.1).unwrap();
        assert!(t > last);
        last = t;
    }
}

#[test]
fn segment_endpoint_at_mu_8() {
    let p = solved(8.0);
    let s1 = first_zero(&p, FRAC_PI_2).expect("zero before π/2");
    assert!(s1 < FRAC_PI_2);
    assert!(curvature_at(&p, s1).abs() < 1e-11);
    assert!((theta_integral(&p, s1).unwrap() - FRAC_PI_2).abs() < 1e-8);
    assert!((curvature_derivative(&p, s1) + p.c.sqrt()).abs() < 1e-8);
    assert!(first_zero(&p, 0.5 * s1).is_none());
    assert!(s1 < PI);
}
