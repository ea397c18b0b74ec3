//! Independent oracles and random generators shared by the integration tests.
#![allow(dead_code)]

use std::f64::consts::PI;

use elastica_core::geometry::{Harmonic, PlaneWave, SupportBody, VectorField, DEFAULT_NODES};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Periodic trapezoid rule for `∫₀^{2π} f`, spectrally accurate for smooth
/// periodic `f`.
pub fn periodic_trapezoid(f: impl Fn(f64) -> f64, n: usize) -> f64 {
    let h = 2.0 * PI / n as f64;
    (0..n).map(|i| f(i as f64 * h)).sum::<f64>() * h
}

/// `K(m)` from the defining integral after `t = sin θ`:
/// `∫₀^{π/2} dθ/√(1 − m sin²θ)`, a quarter of the full period.
pub fn k_oracle(m: f64) -> f64 {
    0.25 * periodic_trapezoid(|t| 1.0 / (1.0 - m * t.sin().powi(2)).sqrt(), 1 << 14)
}

/// `E(m) = ∫₀^{π/2} √(1 − m sin²θ) dθ`.
pub fn e_oracle(m: f64) -> f64 {
    0.25 * periodic_trapezoid(|t| (1.0 - m * t.sin().powi(2)).sqrt(), 1 << 14)
}

/// Random strictly convex body with `a0 = 1` and harmonics `2..=order`,
/// rejection-sampled for `min φ ≥ min_phi`. The coefficients are rescaled so
/// that `Σ(k²−1)|c_k|` is uniform in `(0, budget)`, which keeps the
/// acceptance rate reasonable at high order. At least one harmonic has
/// magnitude `≥ floor`.
pub fn random_body(rng: &mut impl Rng, order: u32, budget: f64, floor: f64, min_phi: f64) -> SupportBody {
    loop {
        let raw: Vec<(u32, f64, f64)> =
            (2..=order).map(|k| (k, rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))).collect();
        let total: f64 = raw.iter().map(|&(k, a, b)| ((k * k - 1) as f64) * a.hypot(b)).sum();
        let scale = rng.gen_range(0.0..budget) / total;
        let harmonics: Vec<Harmonic> = raw.iter().map(|&(k, a, b)| Harmonic::new(k, scale * a, scale * b)).collect();
        if harmonics.iter().all(|h| h.a.hypot(h.b) < floor) {
            continue;
        }
        let body = SupportBody::new(1.0, harmonics).unwrap();
        if body.min_radius_of_curvature(DEFAULT_NODES) >= min_phi {
            return body;
        }
    }
}

pub fn random_field(rng: &mut impl Rng) -> VectorField {
    let mut r = |s: f64| rng.gen_range(-s..s);
    let offset = [r(1.0), r(1.0)];
    let linear = [[r(0.5), r(0.5)], [r(0.5), r(0.5)]];
    let waves =
        (0..2).map(|_| PlaneWave { wave: [r(2.0), r(2.0)], cos: [r(0.3), r(0.3)], sin: [r(0.3), r(0.3)] }).collect();
    VectorField { offset, linear, waves }
}

/// `(A, P, E)` of the closed curve `X(t) + εV(X(t))`, `t ∈ [0, 2π)`, using
/// the general parametric formulas `A = ½∫(x y' − y x')`, `P = ∫|X'|` and
/// `E = ½∫κ²|X'|` with `κ = (x'y'' − y'x'')/|X'|³`.
pub fn perturbed_functionals(body: &SupportBody, field: &VectorField, eps: f64, nodes: usize) -> (f64, f64, f64) {
    let phi = body.radius_series();
    let h = 2.0 * PI / nodes as f64;
    let (mut a, mut p, mut e) = (0.0, 0.0, 0.0);
    for i in 0..nodes {
        let t = i as f64 * h;
        let (s, c) = t.sin_cos();
        let f = phi.eval(t);
        let df = phi.derivative(t, 1);
        let x0 = body.position(t);
        let d1 = [-f * s, f * c];
        let d2 = [-df * s - f * c, df * c - f * s];
        let v = field.eval(x0);
        let jac = field.jacobian(x0);
        let hess = field.hessian(x0);

        let x = [x0[0] + eps * v[0], x0[1] + eps * v[1]];
        let mut x1 = d1;
        let mut x2 = d2;
        for k in 0..2 {
            let jd1 = jac[k][0] * d1[0] + jac[k][1] * d1[1];
            let jd2 = jac[k][0] * d2[0] + jac[k][1] * d2[1];
            let mut hdd = 0.0;
            for j in 0..2 {
                for l in 0..2 {
                    hdd += hess[k][j][l] * d1[j] * d1[l];
                }
            }
            x1[k] += eps * jd1;
            x2[k] += eps * (jd2 + hdd);
        }
        let speed = x1[0].hypot(x1[1]);
        let kappa = (x1[0] * x2[1] - x1[1] * x2[0]) / speed.powi(3);
        a += 0.5 * (x[0] * x1[1] - x[1] * x1[0]);
        p += speed;
        e += 0.5 * kappa * kappa * speed;
    }
    (a * h, p * h, e * h)
}

/// Central differences of `(A, P, E)` along `V` with step `eps`.
pub fn fd_shape_derivatives(body: &SupportBody, field: &VectorField, eps: f64) -> (f64, f64, f64) {
    let nodes = 4096;
    let plus = perturbed_functionals(body, field, eps, nodes);
    let minus = perturbed_functionals(body, field, -eps, nodes);
    let d = |a: f64, b: f64| (a - b) / (2.0 * eps);
    (d(plus.0, minus.0), d(plus.1, minus.1), d(plus.2, minus.2))
}

/// Direct RK4 integration of `k'' = −½k³ − λk + μ` from `k(0) = k_M`,
/// `k'(0) = 0`, returning `k(s)`.
pub fn rk4_curvature(mu: f64, lambda: f64, k_max: f64, s: f64, steps: usize) -> f64 {
    let f = |y: [f64; 2]| [y[1], -0.5 * y[0].powi(3) - lambda * y[0] + mu];
    let h = s / steps as f64;
    let mut y = [k_max, 0.0];
    for _ in 0..steps {
        let k1 = f(y);
        let k2 = f([y[0] + 0.5 * h * k1[0], y[1] + 0.5 * h * k1[1]]);
        let k3 = f([y[0] + 0.5 * h * k2[0], y[1] + 0.5 * h * k2[1]]);
        let k4 = f([y[0] + h * k3[0], y[1] + h * k3[1]]);
        for j in 0..2 {
            y[j] += h / 6.0 * (k1[j] + 2.0 * k2[j] + 2.0 * k3[j] + k4[j]);
        }
    }
    y[0]
}

pub fn rel_err(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs().max(1e-12)
}
