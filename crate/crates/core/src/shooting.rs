//! Shooting systems for `(k_M, λ)`, boundary assembly and bound checks.
//!
//! The boundary of a solution is built from one half arc `H` on `[0, h]`
//! along which `k` decreases from `k_M`: `h = π/(2q)` for a strictly convex
//! shape, `h = s₁` (first zero of `k`) when straight segments are present.
//! A unit is `H`, then a segment of length `L` (possibly zero), then `H`
//! mirrored; it turns by `π/q` and the boundary is `2q` rotated copies.

use alloc::vec::Vec;
use core::f64::consts::PI;

#[allow(unused_imports)]
use num_traits::Float;

use crate::diagram::{DiagramPoint, PointSource};
use crate::elastica::{
    build_params, curvature_at, curvature_power_integral, first_zero, theta_integral, ElasticaParams,
};
use crate::geometry::{Functionals, Polyline, ThetaFunction, DEFAULT_NODES};
use crate::lm::{self, LmOptions};
use crate::quadrature::{gauss_legendre5, integrate, QuadOptions};
use crate::special::complete_elliptic_k;
use crate::{Error, Result};

const ASSEMBLY_TOL: f64 = 1e-4;
/// Relative step of the continuation ladder in `μ`.
const LADDER_RATIO: f64 = 1.15;
const MAX_LADDER_STEPS: usize = 400;
/// First ladder point, relative to the bifurcation.
const BIFURCATION_OFFSET: f64 = 1.01;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ShootingMode {
    /// Case a: `k > 0` everywhere.
    StrictlyConvex,
    /// Case b: arcs joined by `2q` straight segments.
    WithSegments,
    DiskBranch,
}

impl ShootingMode {
    pub fn label(self) -> &'static str {
        match self {
            ShootingMode::StrictlyConvex => "strict",
            ShootingMode::WithSegments => "segments",
            ShootingMode::DiskBranch => "disk",
        }
    }
}

/// Warm start for [`solve_mu`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Seed {
    pub mu: f64,
    pub k_max: f64,
    pub lambda: f64,
    pub mode: ShootingMode,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolveOptions {
    pub q: u32,
    /// Forces one mode instead of the automatic selection.
    pub mode: Option<ShootingMode>,
    /// Subintervals of the half arc used for assembly.
    pub grid: usize,
    pub tol: f64,
    pub max_iterations: usize,
    pub seed: Option<Seed>,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions { q: 1, mode: None, grid: DEFAULT_NODES, tol: 1e-10, max_iterations: 200, seed: None }
    }
}

/// A solved critical shape.
#[derive(Debug, Clone, PartialEq)]
pub struct OptimalShape {
    pub mu: f64,
    pub mode: ShootingMode,
    pub params: ElasticaParams,
    pub s1: Option<f64>,
    pub segment_length: Option<f64>,
    pub theta: ThetaFunction,
    pub polyline: Polyline,
    pub functionals: Functionals,
    pub objective: f64,
    pub diagram: DiagramPoint,
    pub residual_norm: f64,
    pub closure_residual: f64,
    pub iterations: usize,
}

impl OptimalShape {
    pub fn seed(&self) -> Seed {
        Seed { mu: self.mu, k_max: self.params.k_max, lambda: self.params.lambda, mode: self.mode }
    }

    /// Number of straight segments on the boundary.
    pub fn segment_count(&self) -> usize {
        match self.segment_length {
            Some(l) if l > 0.0 => 2 * self.params.q as usize,
            _ => 0,
        }
    }

    /// Length of the half arc between a curvature maximum and the next
    /// minimum or segment.
    pub fn half_arc(&self) -> f64 {
        self.s1.unwrap_or(PI / (2.0 * self.params.q as f64))
    }

    /// Curvature at arclength `s` along the boundary, measured from the
    /// curvature maximum the assembly starts at.
    pub fn curvature(&self, s: f64) -> f64 {
        let h = self.half_arc();
        let l = self.segment_length.unwrap_or(0.0);
        let unit = 2.0 * h + l;
        let u = s - unit * (s / unit).floor();
        if u <= h {
            curvature_at(&self.params, u)
        } else if u < h + l {
            0.0
        } else {
            curvature_at(&self.params, (unit - u).max(0.0))
        }
    }

    /// `λ` recomputed from the functionals, `(2μA − E)/(2π)`.
    pub fn lambda_from_functionals(&self) -> f64 {
        (2.0 * self.mu * self.functionals.area - self.functionals.elastic_energy) / (2.0 * PI)
    }

    /// `∫k³ ds` over the whole boundary.
    pub fn cubic_integral(&self) -> Result<f64> {
        let units = 4.0 * self.params.q as f64;
        Ok(units * curvature_power_integral(&self.params, self.half_arc(), 3)?)
    }
}

/// Residual of the shooting system in the given mode.
///
/// - strictly convex: `(2K(m) − ωπ/(2q), ∫₀^{π/2q} k − π/(2q))`;
/// - segments: `(∫₀^{s₁} k − π/(2q), 2√C/μ + 2s₁ − π/q)`;
/// - disk: `(−½k_M³ − λk_M + μ, k_M − 1)`.
pub fn shooting_residual(k_max: f64, lambda: f64, mu: f64, q: u32, mode: ShootingMode) -> Result<[f64; 2]> {
    if mode == ShootingMode::DiskBranch {
        if !(mu > 0.0) {
            return Err(Error::domain("mu", mu, "mu > 0"));
        }
        return Ok([-0.5 * k_max.powi(3) - lambda * k_max + mu, k_max - 1.0]);
    }
    let p = build_params(mu, lambda, k_max, q)?;
    if p.degenerate {
        return Err(Error::ModeMismatch("constant curvature has no shooting conditions"));
    }
    let quarter = PI / (2.0 * q as f64);
    match mode {
        ShootingMode::StrictlyConvex => {
            let k = complete_elliptic_k(p.m)?;
            Ok([2.0 * k - p.omega * quarter, theta_integral(&p, quarter)? - quarter])
        }
        ShootingMode::WithSegments => {
            let s1 = first_zero(&p, quarter).ok_or(Error::ModeMismatch("curvature has no zero before π/(2q)"))?;
            let c = p.c.max(0.0);
            Ok([theta_integral(&p, s1)? - quarter, 2.0 * c.sqrt() / mu + 2.0 * s1 - 2.0 * quarter])
        }
        ShootingMode::DiskBranch => unreachable!(),
    }
}

/// Boundary data produced by [`assemble_shape`].
#[derive(Debug, Clone, PartialEq)]
pub struct Assembly {
    pub theta: ThetaFunction,
    pub polyline: Polyline,
    pub segment_length: Option<f64>,
    pub functionals: Functionals,
    pub closure_residual: f64,
}

struct HalfArc<'a> {
    p: &'a ElasticaParams,
    nodes: Vec<f64>,
    theta: Vec<f64>,
}

impl HalfArc<'_> {
    fn theta_at(&self, s: f64) -> f64 {
        let n = self.nodes.len() - 1;
        let ds = self.nodes[1];
        let i = ((s / ds) as usize).min(n - 1);
        if s <= self.nodes[i] {
            return self.theta[i];
        }
        self.theta[i] + gauss_legendre5(|u| curvature_at(self.p, u), self.nodes[i], s)
    }
}

/// Builds the full boundary of a solution. `s1` is the first zero of `k`
/// for [`ShootingMode::WithSegments`] and ignored otherwise. `grid` is the
/// number of subintervals of the half arc; it must be even.
pub fn assemble_shape(p: &ElasticaParams, mode: ShootingMode, s1: Option<f64>, grid: usize) -> Result<Assembly> {
    if grid < 8 || !grid.is_multiple_of(2) {
        return Err(Error::Invalid("assembly grid must be even and at least 8"));
    }
    let q = p.q as f64;
    let quarter = PI / (2.0 * q);
    let (h, length) = match mode {
        ShootingMode::WithSegments => {
            let s1 = s1.ok_or(Error::ModeMismatch("segments require the first zero s₁"))?;
            (s1, 2.0 * p.c.max(0.0).sqrt() / p.mu)
        }
        _ => (quarter, 0.0),
    };

    let ds = h / grid as f64;
    let nodes: Vec<f64> = (0..=grid).map(|i| i as f64 * ds).collect();
    let k = |u: f64| curvature_at(p, u);
    let mut theta = Vec::with_capacity(grid + 1);
    theta.push(0.0);
    let mut increments = Vec::with_capacity(grid);
    for i in 0..grid {
        let (a, b) = (nodes[i], nodes[i + 1]);
        let t0 = theta[i];
        let half = 0.5 * (b - a);
        let mid = 0.5 * (a + b);
        let mut dz = [0.0, 0.0];
        for (x, w) in crate::quadrature::GL5_NODES.iter().zip(crate::quadrature::GL5_WEIGHTS.iter()) {
            let u = mid + half * x;
            let (sn, cs) = (t0 + gauss_legendre5(k, a, u)).sin_cos();
            dz[0] += w * half * cs;
            dz[1] += w * half * sn;
        }
        increments.push(dz);
        theta.push(t0 + gauss_legendre5(k, a, b));
    }
    let arc = HalfArc { p, nodes, theta };

    let coarse: Vec<[f64; 2]> = increments.chunks(2).map(|c| [c[0][0] + c[1][0], c[0][1] + c[1][1]]).collect();
    let (fine_poly, closure) = build_polygon(&increments, length, p.q);
    let (coarse_poly, _) = build_polygon(&coarse, length, p.q);
    if closure > ASSEMBLY_TOL || !closure.is_finite() {
        return Err(Error::Assembly { residual: closure });
    }
    let area = (4.0 * fine_poly.area() - coarse_poly.area()) / 3.0;

    let units = 2.0 * q;
    let perimeter = units * (2.0 * h + length);
    let energy = match mode {
        ShootingMode::DiskBranch => units * p.k_max * p.k_max * h,
        _ => units * integrate(|u| k(u) * k(u), 0.0, h, &QuadOptions::default())?.value,
    };

    let unit_length = 2.0 * h + length;
    let theta_fn = ThetaFunction::from_fn(perimeter, 4 * p.q as usize * grid, |s| {
        let j = ((s / unit_length) as usize).min(2 * p.q as usize - 1);
        let u = s - j as f64 * unit_length;
        let base = j as f64 * 2.0 * quarter;
        base + if u <= h {
            arc.theta_at(u)
        } else if u <= h + length {
            quarter
        } else {
            2.0 * quarter - arc.theta_at((unit_length - u).max(0.0))
        }
    })?;

    Ok(Assembly {
        theta: theta_fn,
        polyline: fine_poly,
        segment_length: (mode == ShootingMode::WithSegments).then_some(length),
        functionals: Functionals { area, perimeter, elastic_energy: energy },
        closure_residual: closure,
    })
}

fn rotate(z: [f64; 2], angle: f64) -> [f64; 2] {
    let (s, c) = angle.sin_cos();
    [c * z[0] - s * z[1], s * z[0] + c * z[1]]
}

/// Chains the half-arc increments into the closed polygon and returns it
/// with the closure residual.
fn build_polygon(increments: &[[f64; 2]], length: f64, q: u32) -> (Polyline, f64) {
    let step = PI / q as f64;
    let mut unit = Vec::with_capacity(2 * increments.len() + 1);
    unit.extend_from_slice(increments);
    if length > 0.0 {
        unit.push(rotate([length, 0.0], 0.5 * step));
    }
    // Mirror image through the normal at the end of the half arc.
    unit.extend(increments.iter().rev().map(|d| rotate([d[0], -d[1]], step)));

    let mut vertices = Vec::with_capacity(2 * q as usize * unit.len());
    let mut z = [0.0, 0.0];
    for j in 0..2 * q {
        let angle = j as f64 * step;
        for d in &unit {
            vertices.push(z);
            let r = rotate(*d, angle);
            z = [z[0] + r[0], z[1] + r[1]];
        }
    }
    let closure = z[0].hypot(z[1]);
    (Polyline { vertices, closed: true }, closure)
}

fn lm_options(opts: &SolveOptions) -> LmOptions {
    LmOptions { tol: opts.tol, max_iterations: opts.max_iterations, ..LmOptions::default() }
}

/// Runs LM in one mode and assembles the shape.
fn solve_in_mode(mu: f64, mode: ShootingMode, start: [f64; 2], opts: &SolveOptions) -> Result<OptimalShape> {
    let q = opts.q;
    let report = lm::solve(|x| shooting_residual(x[0], x[1], mu, q, mode), start, &lm_options(opts))
        .ok_or(Error::NoConvergence { iterations: 0, residual: f64::INFINITY, k_max: start[0], lambda: start[1] })?;
    if !report.converged {
        return Err(Error::NoConvergence {
            iterations: report.iterations,
            residual: report.norm,
            k_max: report.x[0],
            lambda: report.x[1],
        });
    }
    finish(mu, mode, report.x, report.norm, report.iterations, opts)
}

fn finish(
    mu: f64,
    mode: ShootingMode,
    x: [f64; 2],
    norm: f64,
    iterations: usize,
    opts: &SolveOptions,
) -> Result<OptimalShape> {
    let params = build_params(mu, x[1], x[0], opts.q)?;
    let quarter = PI / (2.0 * opts.q as f64);
    let s1 = match mode {
        ShootingMode::WithSegments => {
            Some(first_zero(&params, quarter).ok_or(Error::ModeMismatch("curvature has no zero"))?)
        }
        _ => None,
    };
    if mode == ShootingMode::DiskBranch && !params.degenerate {
        return Err(Error::ModeMismatch("disk solution is not of constant curvature"));
    }
    let assembly = assemble_shape(&params, mode, s1, opts.grid)?;
    let f = assembly.functionals;
    let (dx, dy) = f.diagram_coordinates();
    Ok(OptimalShape {
        mu,
        mode,
        params,
        s1,
        segment_length: assembly.segment_length,
        theta: assembly.theta,
        polyline: assembly.polyline,
        functionals: f,
        objective: f.elastic_energy + mu * f.area,
        diagram: DiagramPoint { x: dx, y: dy, source: PointSource::Solved { mu } },
        residual_norm: norm,
        closure_residual: assembly.closure_residual,
        iterations,
    })
}

fn solve_disk(mu: f64, opts: &SolveOptions) -> Result<OptimalShape> {
    let start =
        opts.seed.filter(|s| s.mode == ShootingMode::DiskBranch).map_or([1.0, mu - 0.5], |s| [s.k_max, s.lambda]);
    let report =
        lm::solve(|x| shooting_residual(x[0], x[1], mu, opts.q, ShootingMode::DiskBranch), start, &lm_options(opts))
            .filter(|r| r.converged)
            .ok_or(Error::NoConvergence {
                iterations: opts.max_iterations,
                residual: f64::NAN,
                k_max: start[0],
                lambda: start[1],
            })?;
    // The disk residual is linear in λ at k_M = 1, so the iterate is exact
    // up to rounding; snap it for a clean degenerate branch.
    finish(mu, ShootingMode::DiskBranch, report.x, report.norm, report.iterations, opts)
}

/// Penalization at which the non-trivial branch of index `q` bifurcates from
/// the disk: `μ = 4q² − 1`.
pub fn bifurcation_mu(q: u32) -> f64 {
    4.0 * (q as f64).powi(2) - 1.0
}

/// Solves for the optimal shape at `μ`.
///
/// With an explicit mode the system of that mode is solved from the seed
/// (or a cold start). Otherwise the candidates are the disk, the strictly
/// convex solution when it is strictly convex, and the solution with
/// segments; the one of least `E + μA` is returned, ties going to the
/// strictly convex one.
pub fn solve_mu(mu: f64, opts: &SolveOptions) -> Result<OptimalShape> {
    if !(mu > 0.0 && mu.is_finite()) {
        return Err(Error::domain("mu", mu, "mu > 0"));
    }
    if opts.q == 0 {
        return Err(Error::Invalid("periodicity index q must be at least 1"));
    }
    if !(opts.tol >= 1e3 * f64::EPSILON) {
        return Err(Error::domain("tol", opts.tol, "tol >= 1e3·machine epsilon"));
    }
    if let Some(mode) = opts.mode {
        if mode == ShootingMode::DiskBranch {
            return solve_disk(mu, opts);
        }
        let start = match opts.seed {
            Some(s) if s.mode != ShootingMode::DiskBranch => [s.k_max, s.lambda],
            _ => continue_branch(None, mu, opts)?.map_or([1.0, mu - 0.5], |s| [s.k_max, s.lambda]),
        };
        return solve_in_mode(mu, mode, start, opts);
    }

    let disk = solve_disk(mu, opts)?;
    let Some(seed) = continue_branch(opts.seed, mu, opts)? else {
        return Ok(disk);
    };
    let start = [seed.k_max, seed.lambda];
    let strict = solve_in_mode(mu, ShootingMode::StrictlyConvex, start, opts).ok().filter(|s| s.params.k_min > 0.0);
    let segments = solve_in_mode(mu, ShootingMode::WithSegments, start, opts).ok();
    if strict.is_none() && segments.is_none() {
        return Err(Error::NoConvergence {
            iterations: opts.max_iterations,
            residual: f64::NAN,
            k_max: seed.k_max,
            lambda: seed.lambda,
        });
    }

    let mut best = disk;
    for cand in [segments, strict].into_iter().flatten() {
        if cand.objective <= best.objective + 1e-12 * best.objective.abs() {
            best = cand;
        }
    }
    Ok(best)
}

/// Follows the non-trivial branch from `from` (or from the bifurcation when
/// `from` is absent or a disk) to `mu` with LM solves only. Returns `None`
/// at or below the bifurcation, where only the disk is available.
pub fn continue_branch(from: Option<Seed>, mu: f64, opts: &SolveOptions) -> Result<Option<Seed>> {
    let mu_q = bifurcation_mu(opts.q);
    if mu <= mu_q {
        return Ok(None);
    }
    if let Some(seed) = from.filter(|s| s.mode != ShootingMode::DiskBranch && s.mu > mu_q) {
        if seed.mu == mu {
            return Ok(Some(seed));
        }
        if let Some(next) = step_branch(mu, [seed.k_max, seed.lambda], seed.mode, opts) {
            return Ok(Some(next));
        }
        if let Ok(next) = ladder(seed, mu, opts) {
            return Ok(Some(next));
        }
    }
    let start = bifurcation_start(mu.min(mu_q * BIFURCATION_OFFSET), opts)?;
    ladder(start, mu, opts).map(Some)
}

/// Geometric continuation in `μ` from a branch point, shrinking the step on
/// failure and regrowing it on success.
fn ladder(from: Seed, mu: f64, opts: &SolveOptions) -> Result<Seed> {
    let mut current = from;
    let mut previous: Option<Seed> = None;
    let mut ratio = LADDER_RATIO;
    for _ in 0..MAX_LADDER_STEPS {
        if current.mu == mu {
            return Ok(current);
        }
        let next_mu = if mu > current.mu { (current.mu * ratio).min(mu) } else { (current.mu / ratio).max(mu) };
        let start = extrapolate(previous.as_ref(), &current, next_mu);
        match step_branch(next_mu, start, current.mode, opts) {
            Some(seed) => {
                previous = Some(current);
                current = seed;
                ratio = (ratio * ratio).min(LADDER_RATIO);
            }
            None => {
                ratio = ratio.sqrt();
                if ratio < 1.0 + 1e-6 {
                    break;
                }
            }
        }
    }
    Err(Error::NoConvergence {
        iterations: MAX_LADDER_STEPS,
        residual: f64::NAN,
        k_max: current.k_max,
        lambda: current.lambda,
    })
}

fn extrapolate(previous: Option<&Seed>, current: &Seed, mu: f64) -> [f64; 2] {
    match previous {
        Some(p) if p.mode == current.mode && current.mu != p.mu => {
            let t = (mu - current.mu) / (current.mu - p.mu);
            [current.k_max + t * (current.k_max - p.k_max), current.lambda + t * (current.lambda - p.lambda)]
        }
        _ => [current.k_max, current.lambda],
    }
}

/// Solves the LM system only (no assembly): `preferred` mode first, then the
/// other one. A strictly convex solution is kept only if `k_m > 0`.
fn step_branch(mu: f64, start: [f64; 2], preferred: ShootingMode, opts: &SolveOptions) -> Option<Seed> {
    let opts_lm = lm_options(opts);
    let attempt = |mode: ShootingMode| -> Option<Seed> {
        let r =
            lm::solve(|x| shooting_residual(x[0], x[1], mu, opts.q, mode), start, &opts_lm).filter(|r| r.converged)?;
        let p = build_params(mu, r.x[1], r.x[0], opts.q).ok()?;
        if p.degenerate || (mode == ShootingMode::StrictlyConvex && p.k_min <= 0.0) {
            return None;
        }
        Some(Seed { mu, k_max: r.x[0], lambda: r.x[1], mode })
    };
    let other = match preferred {
        ShootingMode::WithSegments => ShootingMode::StrictlyConvex,
        _ => ShootingMode::WithSegments,
    };
    let first = match preferred {
        ShootingMode::DiskBranch => ShootingMode::StrictlyConvex,
        m => m,
    };
    attempt(first).or_else(|| attempt(other))
}

/// First point of the non-trivial strictly convex branch just above the
/// bifurcation, found from small perturbations of the disk.
fn bifurcation_start(mu: f64, opts: &SolveOptions) -> Result<Seed> {
    for eps in [0.05, 0.1, 0.2, 0.4, 0.8] {
        let start = [1.0 + eps, mu - 0.5];
        if let Some(seed) = step_branch(mu, start, ShootingMode::StrictlyConvex, opts)
            .filter(|s| s.mode == ShootingMode::StrictlyConvex)
        {
            if seed.k_max > 1.0 + 1e-6 {
                return Ok(seed);
            }
        }
    }
    Err(Error::NoConvergence { iterations: opts.max_iterations, residual: f64::NAN, k_max: 1.0, lambda: mu - 0.5 })
}

/// One bound of [`check_bounds`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundCheck {
    pub name: &'static str,
    pub applicable: bool,
    pub passed: bool,
    /// Signed slack: non-negative when the bound holds.
    pub margin: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BoundsReport {
    pub checks: Vec<BoundCheck>,
}

impl BoundsReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| !c.applicable || c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &BoundCheck> {
        self.checks.iter().filter(|c| c.applicable && !c.passed)
    }
}

/// Segment threshold above which an optimal boundary must contain segments.
pub const SEGMENT_THRESHOLD_MU: f64 = 47.775;
const BOUND_SLACK: f64 = 1e-9;
const IDENTITY_TOL: f64 = 1e-6;

/// Evaluates the a priori bounds satisfied by optimal shapes.
pub fn check_bounds(shape: &OptimalShape) -> Result<BoundsReport> {
    let mu = shape.mu;
    let f = shape.functionals;
    let (e, a) = (f.elastic_energy, f.area);
    let j = shape.objective;
    let sq = mu.sqrt();
    let slack = |scale: f64| BOUND_SLACK * scale.abs().max(1.0);
    let mut checks = Vec::new();
    let mut push = |name, applicable, margin: f64, scale: f64| {
        checks.push(BoundCheck { name, applicable, passed: margin >= -slack(scale), margin });
    };

    let lower = 2.0 * PI * sq - j;
    let upper = j - (3.0 * PI * sq - PI);
    push("objective-bracket", mu > 1.0, (-lower).min(-upper), j);
    push("gage", true, e * a - PI * PI, e * a);
    let segs = shape.segment_count() > 0;
    push("segment-energy-ratio", segs, (mu * a - e).min(2.0 * e - mu * a), e);

    let cubic = shape.cubic_integral()?;
    let identity = 2.0 * PI * mu - (2.0 * PI * shape.params.lambda + 0.5 * cubic);
    checks.push(BoundCheck {
        name: "cubic-identity",
        applicable: true,
        passed: identity.abs() <= IDENTITY_TOL,
        margin: IDENTITY_TOL - identity.abs(),
    });
    let mut push = |name, applicable, margin: f64, scale: f64| {
        checks.push(BoundCheck { name, applicable, passed: margin >= -slack(scale), margin });
    };
    push("energy-upper", mu >= 1.0, PI * (2.0 * mu).sqrt() - e, e);
    push("area-lower", mu >= 1.0, mu * a - 0.25 * PI * ((1.0 + 16.0 * mu).sqrt() - 1.0), mu * a);
    push("segments-present", mu > SEGMENT_THRESHOLD_MU, if segs { 1.0 } else { -1.0 }, 1.0);
    Ok(BoundsReport { checks })
}
