//! The diagram of normalized pairs `(x, y) = (4πA/P², EP/(2π²))`.
//!
//! At perimeter `2π` the point of a body is `(A/π, E/π)`, so the minimizer
//! of `E + μA` is the point of the diagram touched by the line of slope
//! `−μ`. Sweeping `μ` traces the lower-left boundary.

use alloc::vec::Vec;
use core::f64::consts::PI;

#[allow(unused_imports)]
use num_traits::Float;

use crate::geometry::{functionals_from_support, Harmonic, SupportBody, DEFAULT_NODES};
use crate::shooting::{continue_branch, solve_mu, OptimalShape, Seed, ShootingMode, SolveOptions};
use crate::special::rho_constant;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum PointSource {
    Solved { mu: f64 },
    Family { n: u32, a: f64 },
    Reference,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiagramPoint {
    pub x: f64,
    pub y: f64,
    pub source: PointSource,
}

/// One row of a sweep. `mode` is `None` for a row that failed to converge;
/// its numeric fields are then NaN.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepRow {
    pub mu: f64,
    pub mode: Option<ShootingMode>,
    pub k_max: f64,
    pub lambda: f64,
    pub s1: Option<f64>,
    pub segment_length: Option<f64>,
    pub area: f64,
    pub energy: f64,
    pub objective: f64,
    pub x: f64,
    pub y: f64,
    pub residual_norm: f64,
}

impl SweepRow {
    pub fn from_shape(shape: &OptimalShape) -> Self {
        SweepRow {
            mu: shape.mu,
            mode: Some(shape.mode),
            k_max: shape.params.k_max,
            lambda: shape.params.lambda,
            s1: shape.s1,
            segment_length: shape.segment_length,
            area: shape.functionals.area,
            energy: shape.functionals.elastic_energy,
            objective: shape.objective,
            x: shape.diagram.x,
            y: shape.diagram.y,
            residual_norm: shape.residual_norm,
        }
    }

    pub fn failed(mu: f64) -> Self {
        SweepRow {
            mu,
            mode: None,
            k_max: f64::NAN,
            lambda: f64::NAN,
            s1: None,
            segment_length: None,
            area: f64::NAN,
            energy: f64::NAN,
            objective: f64::NAN,
            x: f64::NAN,
            y: f64::NAN,
            residual_norm: f64::NAN,
        }
    }

    pub fn converged(&self) -> bool {
        self.mode.is_some()
    }
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct SweepTable {
    pub rows: Vec<SweepRow>,
}

impl SweepTable {
    pub fn failed(&self) -> impl Iterator<Item = &SweepRow> {
        self.rows.iter().filter(|r| !r.converged())
    }

    pub fn is_complete(&self) -> bool {
        self.rows.iter().all(SweepRow::converged)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum MuGrid {
    #[default]
    Geometric,
    Uniform,
}

impl MuGrid {
    pub fn points(self, mu_min: f64, mu_max: f64, steps: usize) -> Result<Vec<f64>> {
        if !(mu_min > 0.0 && mu_min < mu_max && mu_max.is_finite()) {
            return Err(Error::Bracket { lo: mu_min, hi: mu_max, reason: "need 0 < mu_min < mu_max" });
        }
        if steps < 2 {
            return Err(Error::Invalid("a sweep needs at least two steps"));
        }
        let last = (steps - 1) as f64;
        let mut mus: Vec<f64> = (0..steps)
            .map(|i| {
                let t = i as f64 / last;
                match self {
                    MuGrid::Geometric => mu_min * (mu_max / mu_min).powf(t),
                    MuGrid::Uniform => mu_min + (mu_max - mu_min) * t,
                }
            })
            .collect();
        mus[steps - 1] = mu_max;
        Ok(mus)
    }
}

/// Serial continuation along increasing `μ`: one branch seed per grid point
/// (`Ok(None)` in the disk regime). A point whose step fails is retried
/// after a half step; a point that still fails is reported as an error and
/// the continuation resumes from the last good seed.
pub fn branch_seeds(mus: &[f64], opts: &SolveOptions) -> Vec<Result<Option<Seed>>> {
    let mut last: Option<Seed> = None;
    let mut prev_mu: Option<f64> = None;
    mus.iter()
        .map(|&mu| {
            let mut result = continue_branch(last, mu, opts);
            if result.is_err() {
                if let Some(p) = prev_mu {
                    let half = 0.5 * (p + mu);
                    if let Ok(mid) = continue_branch(last, half, opts) {
                        result = continue_branch(mid, mu, opts);
                    }
                }
            }
            if let Ok(Some(seed)) = result {
                last = Some(seed);
            }
            prev_mu = Some(mu);
            result
        })
        .collect()
}

/// Solves one row from its seed.
pub fn solve_row(mu: f64, seed: Option<Seed>, opts: &SolveOptions) -> Result<OptimalShape> {
    let row_opts = SolveOptions { seed, ..*opts };
    solve_mu(mu, &row_opts)
}

/// Sweep over a grid of `μ` with warm starts. Rows that fail are kept and
/// flagged; check [`SweepTable::is_complete`].
pub fn sweep(mu_min: f64, mu_max: f64, steps: usize, grid: MuGrid, opts: &SolveOptions) -> Result<SweepTable> {
    let mus = grid.points(mu_min, mu_max, steps)?;
    let seeds = branch_seeds(&mus, opts);
    let rows = mus
        .iter()
        .zip(seeds)
        .map(|(&mu, seed)| match seed {
            Ok(seed) => solve_row(mu, seed, opts).map_or(SweepRow::failed(mu), |s| SweepRow::from_shape(&s)),
            Err(_) => SweepRow::failed(mu),
        })
        .collect();
    Ok(SweepTable { rows })
}

/// `μ` at which the solved shape first contains segments, by bisection on
/// the solved mode until the bracket is narrower than `tol`.
pub fn find_segment_onset(lo: f64, hi: f64, tol: f64, opts: &SolveOptions) -> Result<f64> {
    if !(lo > 0.0 && lo < hi) {
        return Err(Error::Bracket { lo, hi, reason: "need 0 < lo < hi" });
    }
    if !(tol > 0.0) {
        return Err(Error::domain("tol", tol, "tol > 0"));
    }
    let auto = SolveOptions { mode: None, ..*opts };
    let lo_shape = solve_row(lo, None, &auto)?;
    if lo_shape.mode == ShootingMode::WithSegments {
        return Err(Error::Bracket { lo, hi, reason: "lower end already has segments" });
    }
    let hi_shape = solve_row(hi, None, &auto)?;
    if hi_shape.mode != ShootingMode::WithSegments {
        return Err(Error::Bracket { lo, hi, reason: "upper end has no segments" });
    }
    let (mut lo, mut hi) = (lo, hi);
    let mut lo_seed = Some(lo_shape.seed());
    let mut hi_seed = Some(hi_shape.seed());
    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        let seed = lo_seed.filter(|s| s.mode != ShootingMode::DiskBranch).or(hi_seed);
        let shape = solve_row(mid, seed, &auto)?;
        if shape.mode == ShootingMode::WithSegments {
            hi = mid;
            hi_seed = Some(shape.seed());
        } else {
            lo = mid;
            lo_seed = Some(shape.seed());
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Closed-form diagram point of `h = 1 + a·cos(nt)`:
/// `x = 1 − (n²−1)a²/2`, `y = 1/√(1 − (n²−1)²a²)`.
pub fn family_point(n: u32, a: f64) -> DiagramPoint {
    let w = (n * n - 1) as f64;
    DiagramPoint {
        x: 1.0 - w * a * a / 2.0,
        y: 1.0 / (1.0 - w * w * a * a).sqrt(),
        source: PointSource::Family { n, a },
    }
}

const FAMILY_TOL: f64 = 1e-8;

/// Points of the families `h = 1 + a·cos(nt)`, `n = 2..=n_max`, with
/// `samples_per_n` values `a = j/(samples_per_n·(n²−1))`. Each point is
/// cross-checked against the quadrature of the support function.
pub fn interior_families(n_max: u32, samples_per_n: usize) -> Result<Vec<DiagramPoint>> {
    if n_max < 2 {
        return Err(Error::Invalid("families start at n = 2"));
    }
    if samples_per_n == 0 {
        return Err(Error::Invalid("at least one sample per family"));
    }
    let mut points = Vec::with_capacity((n_max as usize - 1) * samples_per_n);
    for n in 2..=n_max {
        let a_max = 1.0 / (n * n - 1) as f64;
        for j in 0..samples_per_n {
            let a = a_max * j as f64 / samples_per_n as f64;
            let point = family_point(n, a);
            let body = SupportBody::new(1.0, [Harmonic::new(n, a, 0.0)])?;
            let nodes = DEFAULT_NODES.max(64 * n as usize);
            let (x, y) = functionals_from_support(&body, nodes)?.diagram_coordinates();
            if (x - point.x).abs() > FAMILY_TOL || (y - point.y).abs() > FAMILY_TOL * point.y.max(1.0) {
                return Err(Error::Invalid("family closed form disagrees with quadrature"));
            }
            points.push(point);
        }
    }
    Ok(points)
}

/// Smallest value of `y_f + μ(x_f − x) − y` over family points `f` and
/// converged rows. At perimeter `2π`, `(y + μx)·π` is the objective, so a
/// row that solves the minimization at its `μ` keeps every other body on or
/// above its supporting line; a non-negative result means every family
/// point lies above the swept boundary.
pub fn family_clearance(table: &SweepTable, families: &[DiagramPoint]) -> f64 {
    let mut worst = f64::INFINITY;
    for row in table.rows.iter().filter(|r| r.converged()) {
        for f in families {
            worst = worst.min(f.y + row.mu * (f.x - row.x) - row.y);
        }
    }
    worst
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AsymptoteMetrics {
    pub energy_over_sqrt_mu: f64,
    pub area_times_sqrt_mu: f64,
    pub xy_product: f64,
}

impl AsymptoteMetrics {
    /// Limits of the three metrics as `μ → ∞`: `(ρ, ρ, ρ²/π²)`.
    pub fn limits() -> (f64, f64, f64) {
        let rho = rho_constant();
        (rho, rho, rho * rho / (PI * PI))
    }
}

pub fn asymptote_metrics(mu: f64, opts: &SolveOptions) -> Result<AsymptoteMetrics> {
    let shape = solve_mu(mu, opts)?;
    Ok(metrics_of(&shape))
}

pub fn metrics_of(shape: &OptimalShape) -> AsymptoteMetrics {
    let sq = shape.mu.sqrt();
    AsymptoteMetrics {
        energy_over_sqrt_mu: shape.functionals.elastic_energy / sq,
        area_times_sqrt_mu: shape.functionals.area * sq,
        xy_product: shape.diagram.x * shape.diagram.y,
    }
}
