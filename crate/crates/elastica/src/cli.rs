//! Command-line interface.

use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use elastica_core::diagram::{find_segment_onset, interior_families, MuGrid};
use elastica_core::shooting::{check_bounds, solve_mu};
use elastica_core::{OptimalShape, ShootingMode, SolveOptions};

use crate::io::{diagram_csv, shape_csv, shape_json, write_file};
use crate::parallel::{parallel_sweep, worker_count};
use crate::verify::{self, Group};
use crate::{svg, CliError, Result};

#[derive(Debug, Parser)]
#[command(name = "elastica", version, about = "Optimal convex bodies for elastic energy plus μ·area at perimeter 2π")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Solve for one μ and write shape.csv and shape.json.
    Solve(SolveArgs),
    /// Solve along a μ grid and write diagram.csv.
    Sweep(SweepArgs),
    /// Locate the μ at which straight segments appear.
    Onset(OnsetArgs),
    /// Run the invariant suite and print a pass/fail table.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Auto,
    Strict,
    Segments,
    Disk,
}

impl ModeArg {
    pub fn mode(self) -> Option<ShootingMode> {
        match self {
            ModeArg::Auto => None,
            ModeArg::Strict => Some(ShootingMode::StrictlyConvex),
            ModeArg::Segments => Some(ShootingMode::WithSegments),
            ModeArg::Disk => Some(ShootingMode::DiskBranch),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Spacing {
    Geometric,
    Uniform,
}

#[derive(Debug, Clone, Args)]
pub struct SolverArgs {
    /// Periodicity index: the boundary repeats 2q times.
    #[arg(long, default_value_t = 1)]
    pub q: u32,
    #[arg(long, value_enum, default_value_t = ModeArg::Auto)]
    pub mode: ModeArg,
    /// Shooting residual tolerance, at least 1e3 machine epsilons.
    #[arg(long, default_value_t = 1e-10)]
    pub tol: f64,
    /// Subintervals of each half arc when assembling the boundary (even).
    #[arg(long, default_value_t = 2048)]
    pub grid: usize,
}

impl SolverArgs {
    pub fn options(&self) -> Result<SolveOptions> {
        if !(self.tol >= 1e3 * f64::EPSILON) {
            return Err(CliError::Config(format!("--tol {} is below 1e3 machine epsilons", self.tol)));
        }
        Ok(SolveOptions {
            q: self.q,
            mode: self.mode.mode(),
            grid: self.grid,
            tol: self.tol,
            ..SolveOptions::default()
        })
    }
}

#[derive(Debug, Clone, Args)]
pub struct SolveArgs {
    #[arg(long)]
    pub mu: f64,
    #[command(flatten)]
    pub solver: SolverArgs,
    /// Output directory.
    #[arg(long, default_value = ".")]
    pub out: PathBuf,
    /// Also render the boundary to this SVG file.
    #[arg(long)]
    pub svg: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct SweepArgs {
    #[arg(long, default_value_t = 1.0)]
    pub mu_min: f64,
    #[arg(long, default_value_t = 100.0)]
    pub mu_max: f64,
    #[arg(long, default_value_t = 60)]
    pub steps: usize,
    #[arg(long, value_enum, default_value_t = Spacing::Geometric)]
    pub spacing: Spacing,
    #[command(flatten)]
    pub solver: SolverArgs,
    #[arg(long, default_value = ".")]
    pub out: PathBuf,
    /// Also render the diagram to this SVG file.
    #[arg(long)]
    pub svg: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct OnsetArgs {
    #[arg(long, default_value_t = 3.0)]
    pub mu_min: f64,
    #[arg(long, default_value_t = 4.0)]
    pub mu_max: f64,
    /// Width of the final bisection bracket.
    #[arg(long, default_value_t = 1e-4)]
    pub bracket_tol: f64,
    #[command(flatten)]
    pub solver: SolverArgs,
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    /// Run only these groups.
    #[arg(long, value_enum)]
    pub only: Vec<Group>,
    /// Run the segment-onset bisection and compare it to the reference.
    #[arg(long)]
    pub onset: bool,
}

/// How a subcommand ended; maps to the process exit code.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Success,
    InvariantFailure,
    PartialConvergence,
}

impl Outcome {
    pub fn code(self) -> u8 {
        match self {
            Outcome::Success => 0,
            Outcome::InvariantFailure => 1,
            Outcome::PartialConvergence => 2,
        }
    }
}

pub fn run(cli: Cli) -> Result<Outcome> {
    match cli.command {
        Command::Solve(a) => cmd_solve(&a),
        Command::Sweep(a) => cmd_sweep(&a),
        Command::Onset(a) => cmd_onset(&a),
        Command::Verify(a) => cmd_verify(&a),
    }
}

pub fn summary_line(s: &OptimalShape) -> String {
    format!(
        "mu={} mode={} k_M={} lambda={} A={} E={} objective={} L={} x={} y={} residual={:e}",
        s.mu,
        s.mode.label(),
        s.params.k_max,
        s.params.lambda,
        s.functionals.area,
        s.functionals.elastic_energy,
        s.objective,
        s.segment_length.unwrap_or(0.0),
        s.diagram.x,
        s.diagram.y,
        s.residual_norm
    )
}

fn ensure_dir(dir: &Path) -> Result<()> {
    std::fs::create_dir_all(dir).map_err(|e| CliError::io(dir, e))
}

pub fn cmd_solve(a: &SolveArgs) -> Result<Outcome> {
    let opts = a.solver.options()?;
    let shape = solve_mu(a.mu, &opts)?;
    ensure_dir(&a.out)?;
    write_file(&a.out.join("shape.csv"), &shape_csv(&shape)?)?;
    write_file(&a.out.join("shape.json"), &shape_json(&shape)?)?;
    if let Some(path) = &a.svg {
        write_file(path, &svg::shape_svg(&shape))?;
    }
    println!("{}", summary_line(&shape));
    let report = check_bounds(&shape)?;
    let failed: Vec<_> = report.failures().map(|c| c.name).collect();
    if failed.is_empty() {
        Ok(Outcome::Success)
    } else {
        eprintln!("bound checks failed: {}", failed.join(", "));
        Ok(Outcome::InvariantFailure)
    }
}

pub fn cmd_sweep(a: &SweepArgs) -> Result<Outcome> {
    let opts = a.solver.options()?;
    let spacing = match a.spacing {
        Spacing::Geometric => MuGrid::Geometric,
        Spacing::Uniform => MuGrid::Uniform,
    };
    let start = Instant::now();
    let output = parallel_sweep(a.mu_min, a.mu_max, a.steps, spacing, &opts, worker_count())?;
    let table = output.table();
    ensure_dir(&a.out)?;
    write_file(&a.out.join("diagram.csv"), &diagram_csv(&table)?)?;
    if let Some(path) = &a.svg {
        let families = interior_families(6, 20)?;
        write_file(path, &svg::diagram_svg(&table, &families))?;
    }

    let failed: Vec<_> = output.failed_rows().collect();
    let violations = output.bound_violations();
    println!(
        "{} rows, {} failed, {} with bound violations, {:.2} s",
        table.rows.len(),
        failed.len(),
        violations.len(),
        start.elapsed().as_secs_f64()
    );
    for o in &failed {
        eprintln!("mu={}: {}", o.row.mu, o.error.as_deref().unwrap_or("no convergence"));
    }
    for (mu, names) in &violations {
        eprintln!("mu={mu}: bound checks failed: {}", names.join(", "));
    }
    for o in output.outcomes.iter().filter(|o| o.row.converged() && o.error.is_some()) {
        eprintln!("mu={}: {}", o.row.mu, o.error.as_deref().unwrap_or_default());
    }
    Ok(if !failed.is_empty() {
        Outcome::PartialConvergence
    } else if !violations.is_empty() || output.outcomes.iter().any(|o| o.error.is_some()) {
        Outcome::InvariantFailure
    } else {
        Outcome::Success
    })
}

pub fn cmd_onset(a: &OnsetArgs) -> Result<Outcome> {
    let opts = a.solver.options()?;
    let mu = find_segment_onset(a.mu_min, a.mu_max, a.bracket_tol, &opts)?;
    println!("onset mu*={mu:.6} (bracket width {:e})", a.bracket_tol);
    Ok(Outcome::Success)
}

pub fn cmd_verify(a: &VerifyArgs) -> Result<Outcome> {
    let mut groups: Vec<Group> = if a.only.is_empty() && !a.onset { Group::ALL.to_vec() } else { a.only.clone() };
    if a.onset {
        groups.push(Group::Onset);
    }
    groups.sort();
    groups.dedup();
    let results = verify::run(&groups);
    print!("{}", verify::render_table(&results));
    let failed: Vec<_> = results.iter().filter(|r| !r.passed).collect();
    for r in &failed {
        eprintln!("failed invariant: {} / {}", r.group.name(), r.name);
    }
    Ok(if failed.is_empty() { Outcome::Success } else { Outcome::InvariantFailure })
}
