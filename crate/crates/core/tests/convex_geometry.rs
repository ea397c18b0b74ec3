mod common;

use std::f64::consts::PI;

use common::{fd_shape_derivatives, random_body, random_field, rel_err, rng};
use elastica_core::geometry::{
    apply_g, functionals_from_support, functionals_from_theta, minkowski_combine, reconstruct_polyline,
    shape_derivatives, support_to_theta, Harmonic, SupportBody, ThetaFunction, TrigSeries, VectorField, DEFAULT_NODES,
};
use elastica_core::Error;

#[test]
fn gage_and_isoperimetric_on_random_bodies() {
    let mut r = rng(1);
    for i in 0..1000 {
        let body = random_body(&mut r, 2 + (i % 6) as u32, 1.5, 1e-2, 1e-3);
        let f = functionals_from_support(&body, DEFAULT_NODES).unwrap();
        let (x, y) = f.diagram_coordinates();
        assert!(x <= 1.0 + 1e-9 && y >= 1.0 - 1e-9 && x * y >= 1.0 - 1e-9);
        assert!(f.elastic_energy * f.perimeter >= 2.0 * PI * PI - 1e-6);
        assert!(f.gage_ratio() >= PI / 2.0 - 1e-9);
        // Non-disks stay strictly away from equality.
        assert!(x * y - 1.0 > 1e-6, "body {i}: xy - 1 = {}", x * y - 1.0);
    }
}

#[test]
fn gage_equality_only_near_disk() {
    let f = functionals_from_support(&SupportBody::disk(2.5), DEFAULT_NODES).unwrap();
    let (x, y) = f.diagram_coordinates();
    assert!((x * y - 1.0).abs() < 1e-12);
    let tiny = SupportBody::new(1.0, [Harmonic::new(3, 1e-8, -1e-8)]).unwrap();
    let (x, y) = functionals_from_support(&tiny, DEFAULT_NODES).unwrap().diagram_coordinates();
    assert!((x * y - 1.0).abs() < 1e-6);
}

#[test]
fn perimeter_is_cauchy_formula() {
    let mut r = rng(2);
    for _ in 0..50 {
        let body = random_body(&mut r, 5, 0.5, 0.0, 1e-3);
        let f = functionals_from_support(&body, DEFAULT_NODES).unwrap();
        assert!((f.perimeter - 2.0 * PI * body.a0()).abs() < 1e-12);
    }
}

#[test]
fn family_examples() {
    let f =
        functionals_from_support(&SupportBody::new(1.0, [Harmonic::new(3, 0.1, 0.0)]).unwrap(), DEFAULT_NODES).unwrap();
    assert!((f.area - 0.96 * PI).abs() < 1e-12);
    assert!((f.elastic_energy - PI / 0.6).abs() < 1e-12);
}

#[test]
fn non_convex_body_is_rejected() {
    let body = SupportBody::new(1.0, [Harmonic::new(2, 0.4, 0.0)]).unwrap();
    assert!(matches!(functionals_from_support(&body, DEFAULT_NODES), Err(Error::NotStrictlyConvex { .. })));
}

#[test]
fn operator_g_examples() {
    let h = apply_g(&TrigSeries::constant(1.0)).unwrap();
    assert_eq!(h.a0(), 1.0);
    assert!(h.harmonics().is_empty());
    let h = apply_g(&TrigSeries::new(1.0, [Harmonic::new(2, 1.0, 0.0)]).unwrap()).unwrap();
    assert!((h.harmonics()[0].a + 1.0 / 3.0).abs() < 1e-15);
    assert!(matches!(
        apply_g(&TrigSeries::new(1.0, [Harmonic::new(1, 0.5, 0.0)]).unwrap()),
        Err(Error::Unsolvable { .. })
    ));
}

#[test]
fn operator_g_inverts_radius_of_curvature() {
    let phi = TrigSeries::new(1.0, [Harmonic::new(2, 0.2, -0.1), Harmonic::new(5, 0.03, 0.07)]).unwrap();
    let h = apply_g(&phi).unwrap();
    let back = h.radius_series();
    assert!((back.constant - 1.0).abs() < 1e-15);
    for k in [2, 5] {
        let (a, b) = back.coefficient(k);
        let (a0, b0) = phi.coefficient(k);
        assert!((a - a0).abs() < 1e-15 && (b - b0).abs() < 1e-15);
    }
}

#[test]
fn minkowski_endpoints_and_disks() {
    let mut r = rng(3);
    let b0 = random_body(&mut r, 4, 0.6, 0.0, 1e-2);
    let b1 = random_body(&mut r, 6, 0.6, 0.0, 1e-2);
    let at0 = minkowski_combine(&b0, &b1, 0.0).unwrap();
    let at1 = minkowski_combine(&b0, &b1, 1.0).unwrap();
    for i in 0..64 {
        let t = i as f64 * PI / 32.0;
        assert!((at0.support(t) - b0.support(t)).abs() < 1e-15);
        assert!((at1.support(t) - b1.support(t)).abs() < 1e-15);
    }
    let d = minkowski_combine(&SupportBody::disk(1.0), &SupportBody::disk(1.0), 0.37).unwrap();
    assert!((d.a0() - 1.0).abs() < 1e-15 && d.harmonics().is_empty());
}

#[test]
fn energy_is_convex_under_minkowski_sum() {
    let mut r = rng(4);
    for _ in 0..200 {
        let b0 = random_body(&mut r, 5, 0.8, 0.0, 1e-2);
        let b1 = random_body(&mut r, 5, 0.8, 0.0, 1e-2).scaled(rand::Rng::gen_range(&mut r, 0.5..2.0));
        let e0 = functionals_from_support(&b0, DEFAULT_NODES).unwrap().elastic_energy;
        let e1 = functionals_from_support(&b1, DEFAULT_NODES).unwrap().elastic_energy;
        for tau in [0.1, 0.3, 0.5, 0.7, 0.9] {
            let bt = minkowski_combine(&b0, &b1, tau).unwrap();
            let et = functionals_from_support(&bt, DEFAULT_NODES).unwrap().elastic_energy;
            assert!(et <= tau * e1 + (1.0 - tau) * e0 + 1e-9);
        }
    }
}

#[test]
fn theta_round_trip_matches_support() {
    let mut r = rng(5);
    for _ in 0..10 {
        let body = random_body(&mut r, 4, 0.5, 0.0, 0.2);
        let exact = functionals_from_support(&body, DEFAULT_NODES).unwrap();
        let tf = support_to_theta(&body, 4096).unwrap();
        tf.validate().unwrap();
        let f = functionals_from_theta(&tf).unwrap();
        assert!((f.area - exact.area).abs() < 1e-6);
        assert!((f.perimeter - exact.perimeter).abs() < 1e-6);
        assert!((f.elastic_energy - exact.elastic_energy).abs() < 1e-6);
    }
}

#[test]
fn circle_reconstruction() {
    let tf = ThetaFunction::from_fn(2.0 * PI, 2048, |s| s).unwrap();
    let (poly, residual) = reconstruct_polyline(&tf);
    assert!(residual <= 1e-10);
    let v = poly.vertices[1024];
    assert!(v[0].abs() < 1e-10 && (v[1] - 2.0).abs() < 1e-10);
    assert!((poly.length() - 2.0 * PI).abs() < 1e-5);
    let f = functionals_from_theta(&tf).unwrap();
    assert!((f.area - PI).abs() < 1e-9 && (f.elastic_energy - PI).abs() < 1e-9);
}

#[test]
fn double_cover_is_rejected() {
    let tf = ThetaFunction::from_fn(2.0 * PI, 512, |s| 2.0 * s).unwrap();
    assert!(matches!(functionals_from_theta(&tf), Err(Error::Constraint(_))));
}

#[test]
fn shape_derivatives_match_finite_differences() {
    let mut r = rng(6);
    let mut bodies = vec![SupportBody::new(1.0, [Harmonic::new(3, 0.05, 0.0)]).unwrap()];
    while bodies.len() < 20 {
        bodies.push(random_body(&mut r, 4, 0.4, 0.0, 0.3));
    }
    for body in &bodies {
        let field = random_field(&mut r);
        let d = shape_derivatives(body, &field, DEFAULT_NODES).unwrap();
        let (fa, fp, fe) = fd_shape_derivatives(body, &field, 1e-5);
        assert!(rel_err(d.area, fa) < 1e-4, "dA {} vs {}", d.area, fa);
        assert!(rel_err(d.perimeter, fp) < 1e-4, "dP {} vs {}", d.perimeter, fp);
        assert!(rel_err(d.energy, fe) < 1e-4, "dE {} vs {}", d.energy, fe);
    }
}

#[test]
fn translations_have_no_shape_derivative() {
    let mut r = rng(7);
    for _ in 0..20 {
        let body = random_body(&mut r, 5, 0.5, 0.0, 0.1);
        let v = [rand::Rng::gen_range(&mut r, -3.0..3.0), rand::Rng::gen_range(&mut r, -3.0..3.0)];
        let d = shape_derivatives(&body, &VectorField::translation(v), DEFAULT_NODES).unwrap();
        assert!(d.area.abs() < 1e-9 && d.perimeter.abs() < 1e-9 && d.energy.abs() < 1e-9);
    }
}
