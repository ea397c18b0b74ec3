//! The invariant suite behind `elastica verify`.
//!
//! Every check compares a library result against something computed a
//! different way: a quadrature of the defining integral, an exact identity,
//! a direct ODE integration, or a published constant.

use std::f64::consts::PI;
use std::fmt::Write as _;
use std::time::Instant;

use clap::ValueEnum;
use elastica_core::diagram::{family_point, find_segment_onset, interior_families};
use elastica_core::elastica::{curvature_at, first_integral_residual};
use elastica_core::geometry::{
    functionals_from_support, functionals_from_theta, shape_derivatives, support_to_theta, Harmonic, VectorField,
    DEFAULT_NODES,
};
use elastica_core::shooting::{check_bounds, solve_mu, SEGMENT_THRESHOLD_MU};
use elastica_core::special::{complete_elliptic_e, complete_elliptic_k, jacobi_elliptic, rho_constant};
use elastica_core::{OptimalShape, ShootingMode, SolveOptions, SupportBody};

pub const ONSET_TARGET: f64 = 3.3425;
pub const ONSET_TOLERANCE: f64 = 0.01;
pub const RHO_REFERENCE: f64 = 4.2473;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, ValueEnum)]
pub enum Group {
    SpecialFunctions,
    Geometry,
    ShapeDerivatives,
    Elastica,
    Bounds,
    Onset,
}

impl Group {
    pub const ALL: [Group; 6] = [
        Group::SpecialFunctions,
        Group::Geometry,
        Group::ShapeDerivatives,
        Group::Elastica,
        Group::Bounds,
        Group::Onset,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Group::SpecialFunctions => "special-functions",
            Group::Geometry => "geometry",
            Group::ShapeDerivatives => "shape-derivatives",
            Group::Elastica => "elastica",
            Group::Bounds => "bounds",
            Group::Onset => "onset",
        }
    }
}

#[derive(Debug, Clone)]
pub struct CheckResult {
    pub group: Group,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

type Check = Result<String, String>;
type NamedCheck = (&'static str, fn() -> Check);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn core<T>(r: elastica_core::Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

pub fn run(groups: &[Group]) -> Vec<CheckResult> {
    groups.iter().flat_map(|&g| run_group(g)).collect()
}

pub fn run_group(group: Group) -> Vec<CheckResult> {
    let checks: Vec<NamedCheck> = match group {
        Group::SpecialFunctions => vec![
            ("complete integrals vs quadrature", complete_integrals),
            ("jacobi identities", jacobi_identities),
            ("cn quarter-period zero", quarter_period_zero),
            ("asymptotic constant", asymptotic_constant),
        ],
        Group::Geometry => vec![
            ("gage inequality", gage),
            ("cauchy perimeter", cauchy_perimeter),
            ("family closed forms", families),
            ("support to theta", support_theta_round_trip),
        ],
        Group::ShapeDerivatives => vec![("translations", translations), ("dilation", dilation)],
        Group::Elastica => vec![
            ("first integral", first_integral),
            ("direct integration", direct_integration),
            ("cubic identity", cubic_identity),
        ],
        Group::Bounds => vec![("bound checks", bounds), ("disk regime", disk_regime)],
        Group::Onset => vec![("segment onset", onset)],
    };
    checks
        .into_iter()
        .map(|(name, f)| {
            let start = Instant::now();
            let outcome = f();
            let elapsed = start.elapsed();
            let (passed, detail) = match outcome {
                Ok(d) => (true, d),
                Err(d) => (false, d),
            };
            CheckResult { group, name, passed, detail: format!("{detail} [{:.2} s]", elapsed.as_secs_f64()) }
        })
        .collect()
}

pub fn render_table(results: &[CheckResult]) -> String {
    let width = results.iter().map(|r| r.group.name().len() + r.name.len() + 3).max().unwrap_or(0);
    let mut out = String::new();
    for r in results {
        let label = format!("{} / {}", r.group.name(), r.name);
        let status = if r.passed { "PASS" } else { "FAIL" };
        writeln!(out, "{status}  {label:<width$}  {}", r.detail).unwrap();
    }
    let failed = results.iter().filter(|r| !r.passed).count();
    writeln!(out, "{} checks, {failed} failed", results.len()).unwrap();
    out
}

fn trapezoid_quarter(f: impl Fn(f64) -> f64) -> f64 {
    let n = 1 << 14;
    let h = 2.0 * PI / n as f64;
    0.25 * (0..n).map(|i| f(i as f64 * h)).sum::<f64>() * h
}

fn complete_integrals() -> Check {
    let mut worst: f64 = 0.0;
    for i in 0..=10 {
        let m = if i == 10 { 0.99 } else { i as f64 / 10.0 };
        let k = core(complete_elliptic_k(m))?;
        let e = core(complete_elliptic_e(m))?;
        let k_ref = trapezoid_quarter(|t| 1.0 / (1.0 - m * t.sin().powi(2)).sqrt());
        let e_ref = trapezoid_quarter(|t| (1.0 - m * t.sin().powi(2)).sqrt());
        worst = worst.max((k - k_ref).abs()).max((e - e_ref).abs());
    }
    ensure(worst <= 1e-10, || format!("max error {worst:e}"))?;
    Ok(format!("max error {worst:.1e} on 11 parameters"))
}

/// Additive recurrence `frac(i·α)` with irrational `α`, a deterministic
/// stand-in for uniform samples.
fn weyl(i: usize, alpha: f64) -> f64 {
    (i as f64 * alpha).fract()
}

fn jacobi_identities() -> Check {
    let mut worst: f64 = 0.0;
    for i in 0..10_000 {
        let u = -50.0 + 100.0 * weyl(i, 0.618_033_988_749_895);
        let m = weyl(i, 0.414_213_562_373_095_1);
        let t = core(jacobi_elliptic(u, m))?;
        worst = worst.max((t.sn * t.sn + t.cn * t.cn - 1.0).abs()).max((t.dn * t.dn + m * t.sn * t.sn - 1.0).abs());
    }
    ensure(worst <= 1e-11, || format!("max identity error {worst:e}"))?;
    Ok(format!("10⁴ samples, max error {worst:.1e}"))
}

fn quarter_period_zero() -> Check {
    let k = core(complete_elliptic_k(0.5))?;
    let cn = core(jacobi_elliptic(k, 0.5))?.cn;
    ensure(cn.abs() <= 1e-10, || format!("cn(K) = {cn:e}"))?;
    Ok(format!("cn(K(½)|½) = {cn:.1e}"))
}

fn asymptotic_constant() -> Check {
    let rho = rho_constant();
    ensure((rho - RHO_REFERENCE).abs() <= 5e-4, || format!("ρ = {rho}"))?;
    Ok(format!("ρ = {rho:.6}"))
}

fn sample_bodies() -> Vec<SupportBody> {
    let mut bodies = vec![SupportBody::disk(1.0), SupportBody::disk(2.5)];
    for n in 2..=6u32 {
        let a_max = 1.0 / (n * n - 1) as f64;
        for j in 1..5 {
            let a = 0.9 * a_max * j as f64 / 4.0;
            bodies.push(SupportBody::new(1.0, [Harmonic::new(n, a, 0.3 * a)]).expect("valid harmonic"));
        }
    }
    bodies.push(
        SupportBody::new(
            2.0,
            [Harmonic::new(2, 0.1, -0.05), Harmonic::new(3, 0.02, 0.04), Harmonic::new(5, -0.01, 0.0)],
        )
        .expect("valid harmonics"),
    );
    bodies
}

fn gage() -> Check {
    let mut min_gap = f64::INFINITY;
    for body in sample_bodies() {
        let (x, y) = core(functionals_from_support(&body, DEFAULT_NODES))?.diagram_coordinates();
        ensure(x <= 1.0 + 1e-9 && y >= 1.0 - 1e-9 && x * y >= 1.0 - 1e-9, || {
            format!("({x}, {y}) violates the inequality")
        })?;
        min_gap = min_gap.min(x * y - 1.0);
    }
    Ok(format!("min xy − 1 = {min_gap:.1e}"))
}

fn cauchy_perimeter() -> Check {
    let mut worst: f64 = 0.0;
    for body in sample_bodies() {
        let p = core(functionals_from_support(&body, DEFAULT_NODES))?.perimeter;
        worst = worst.max((p - 2.0 * PI * body.a0()).abs());
    }
    ensure(worst <= 1e-10, || format!("max error {worst:e}"))?;
    Ok(format!("max error {worst:.1e}"))
}

fn families() -> Check {
    let points = core(interior_families(6, 10))?;
    for n in 2..=6 {
        let p = family_point(n, 0.0);
        ensure(p.x == 1.0 && p.y == 1.0, || format!("n = {n}: a = 0 gives ({}, {})", p.x, p.y))?;
    }
    Ok(format!("{} family points match the support quadrature", points.len()))
}

fn support_theta_round_trip() -> Check {
    let mut worst: f64 = 0.0;
    let resolved = sample_bodies().into_iter().skip(2).filter(|b| b.min_radius_of_curvature(DEFAULT_NODES) >= 0.2);
    for body in resolved {
        let direct = core(functionals_from_support(&body, DEFAULT_NODES))?;
        let theta = core(support_to_theta(&body, 4096))?;
        let via = core(functionals_from_theta(&theta))?;
        worst = worst
            .max((direct.area - via.area).abs() / direct.area)
            .max((direct.elastic_energy - via.elastic_energy).abs() / direct.elastic_energy);
    }
    ensure(worst <= 1e-6, || format!("max relative error {worst:e}"))?;
    Ok(format!("max relative error {worst:.1e}"))
}

fn translations() -> Check {
    let mut worst: f64 = 0.0;
    for (i, body) in sample_bodies().iter().enumerate() {
        let v = [(i as f64).cos(), (1.7 * i as f64).sin()];
        let d = core(shape_derivatives(body, &VectorField::translation(v), DEFAULT_NODES))?;
        worst = worst.max(d.area.abs()).max(d.perimeter.abs()).max(d.energy.abs());
    }
    ensure(worst <= 1e-9, || format!("max derivative {worst:e}"))?;
    Ok(format!("max derivative {worst:.1e}"))
}

/// Along `V(x) = x`: `A' = 2A`, `P' = P`, `E' = −E`.
fn dilation() -> Check {
    let mut worst: f64 = 0.0;
    for body in sample_bodies() {
        let f = core(functionals_from_support(&body, DEFAULT_NODES))?;
        let d = core(shape_derivatives(&body, &VectorField::identity(), DEFAULT_NODES))?;
        let rel = |a: f64, b: f64| (a - b).abs() / b.abs();
        worst = worst
            .max(rel(d.area, 2.0 * f.area))
            .max(rel(d.perimeter, f.perimeter))
            .max(rel(d.energy, -f.elastic_energy));
    }
    ensure(worst <= 1e-8, || format!("max relative error {worst:e}"))?;
    Ok(format!("max relative error {worst:.1e}"))
}

const BRANCH_MUS: [f64; 4] = [3.36, 4.0, 10.0, 60.0];

fn solved(mu: f64) -> Result<OptimalShape, String> {
    core(solve_mu(mu, &SolveOptions::default())).map_err(|e| format!("μ = {mu}: {e}"))
}

fn first_integral() -> Check {
    let mut worst: f64 = 0.0;
    for mu in BRANCH_MUS {
        let s = solved(mu)?;
        for i in 0..100 {
            let t = s.half_arc() * i as f64 / 99.0;
            worst = worst.max(first_integral_residual(&s.params, t).abs());
        }
    }
    ensure(worst <= 1e-8, || format!("max residual {worst:e}"))?;
    Ok(format!("max residual {worst:.1e}"))
}

fn rk4(mu: f64, lambda: f64, k_max: f64, s: f64, steps: usize) -> f64 {
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

fn direct_integration() -> Check {
    let mut worst: f64 = 0.0;
    for mu in BRANCH_MUS {
        let s = solved(mu)?;
        let p = &s.params;
        let end = s.half_arc();
        let scale = p.k_max.abs().max(1.0);
        let direct = rk4(p.mu, p.lambda, p.k_max, end, 20_000);
        worst = worst.max((direct - curvature_at(p, end)).abs() / scale);
    }
    ensure(worst <= 1e-8, || format!("max relative error {worst:e}"))?;
    Ok(format!("max relative error {worst:.1e}"))
}

/// `2πμ = 2πλ + ½∫k³`, from integrating the elastica equation against `k`.
fn cubic_identity() -> Check {
    let mut worst: f64 = 0.0;
    for mu in BRANCH_MUS {
        let s = solved(mu)?;
        let cubic = core(s.cubic_integral())?;
        worst = worst.max((2.0 * PI * mu - 2.0 * PI * s.params.lambda - 0.5 * cubic).abs());
    }
    ensure(worst <= 1e-6, || format!("max error {worst:e}"))?;
    Ok(format!("max error {worst:.1e}"))
}

fn bounds() -> Check {
    let mus = [0.5, 1.0, 2.0, 3.0, 3.5, 4.0, 10.0, 50.0, 100.0, 1000.0];
    for mu in mus {
        let s = solved(mu)?;
        let report = core(check_bounds(&s))?;
        let failed: Vec<_> = report.failures().map(|c| c.name).collect();
        ensure(failed.is_empty(), || format!("μ = {mu}: {}", failed.join(", ")))?;
        ensure(mu <= SEGMENT_THRESHOLD_MU || s.segment_count() == 2, || {
            format!("μ = {mu}: no segments above the threshold")
        })?;
    }
    Ok(format!("{} values of μ", mus.len()))
}

fn disk_regime() -> Check {
    for mu in [0.5, 1.0, 2.0, 3.0] {
        let s = solved(mu)?;
        ensure(s.mode == ShootingMode::DiskBranch, || format!("μ = {mu}: mode {}", s.mode.label()))?;
        ensure((s.diagram.x - 1.0).abs() <= 1e-8 && (s.diagram.y - 1.0).abs() <= 1e-8, || {
            format!("μ = {mu}: point ({}, {})", s.diagram.x, s.diagram.y)
        })?;
    }
    Ok("disk for μ ≤ 3".into())
}

pub fn onset_value() -> elastica_core::Result<f64> {
    find_segment_onset(3.0, 4.0, 1e-4, &SolveOptions::default())
}

fn onset() -> Check {
    let mu = core(onset_value())?;
    ensure((mu - ONSET_TARGET).abs() <= ONSET_TOLERANCE, || {
        format!("μ* = {mu:.5}, expected {ONSET_TARGET} ± {ONSET_TOLERANCE}")
    })?;
    Ok(format!("μ* = {mu:.5} (reference {ONSET_TARGET} ± {ONSET_TOLERANCE})"))
}
