//! Two-phase sweep: serial branch continuation produces one seed per `μ`,
//! then the rows are solved and checked on a worker pool. Each row depends
//! only on its seed, so the table does not depend on the worker count.

use elastica_core::diagram::{branch_seeds, solve_row, MuGrid};
use elastica_core::shooting::{check_bounds, BoundsReport};
use elastica_core::{SolveOptions, SweepRow, SweepTable};
use rayon::prelude::*;

use crate::{CliError, Result};

pub const THREADS_ENV: &str = "ELASTICA_THREADS";

/// Worker count: the available parallelism, capped by `ELASTICA_THREADS`
/// when it holds a positive integer.
pub fn worker_count() -> usize {
    let available = std::thread::available_parallelism().map_or(1, |n| n.get());
    let cap = std::env::var(THREADS_ENV).ok().and_then(|v| v.trim().parse::<usize>().ok());
    match cap {
        Some(c) if c > 0 => available.min(c),
        _ => available,
    }
}

#[derive(Debug, Clone)]
pub struct RowOutcome {
    pub row: SweepRow,
    /// `None` for rows that failed to converge.
    pub bounds: Option<BoundsReport>,
    /// Why the row failed, or why its bounds could not be evaluated.
    pub error: Option<String>,
}

#[derive(Debug, Clone)]
pub struct SweepOutput {
    pub outcomes: Vec<RowOutcome>,
}

impl SweepOutput {
    pub fn table(&self) -> SweepTable {
        SweepTable { rows: self.outcomes.iter().map(|o| o.row).collect() }
    }

    pub fn failed_rows(&self) -> impl Iterator<Item = &RowOutcome> {
        self.outcomes.iter().filter(|o| !o.row.converged())
    }

    /// Converged rows whose bound checks failed, with the failing names.
    pub fn bound_violations(&self) -> Vec<(f64, Vec<&'static str>)> {
        self.outcomes
            .iter()
            .filter_map(|o| {
                let report = o.bounds.as_ref()?;
                let names: Vec<_> = report.failures().map(|c| c.name).collect();
                (!names.is_empty()).then_some((o.row.mu, names))
            })
            .collect()
    }
}

pub fn parallel_sweep(
    mu_min: f64,
    mu_max: f64,
    steps: usize,
    grid: MuGrid,
    opts: &SolveOptions,
    threads: usize,
) -> Result<SweepOutput> {
    let mus = grid.points(mu_min, mu_max, steps)?;
    let seeds = branch_seeds(&mus, opts);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads.max(1))
        .build()
        .map_err(|e| CliError::Config(e.to_string()))?;
    let outcomes = pool
        .install(|| mus.par_iter().zip(seeds.into_par_iter()).map(|(&mu, seed)| solve_one(mu, seed, opts)).collect());
    Ok(SweepOutput { outcomes })
}

fn solve_one(
    mu: f64,
    seed: elastica_core::Result<Option<elastica_core::shooting::Seed>>,
    opts: &SolveOptions,
) -> RowOutcome {
    let shape = seed.and_then(|seed| solve_row(mu, seed, opts));
    match shape {
        Ok(shape) => {
            let (bounds, error) = match check_bounds(&shape) {
                Ok(b) => (Some(b), None),
                Err(e) => (None, Some(format!("bound checks failed to run: {e}"))),
            };
            RowOutcome { row: SweepRow::from_shape(&shape), bounds, error }
        }
        Err(e) => RowOutcome { row: SweepRow::failed(mu), bounds: None, error: Some(e.to_string()) },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use elastica_core::diagram::sweep;

    #[test]
    fn matches_the_serial_sweep() {
        let opts = SolveOptions::default();
        let serial = sweep(2.0, 12.0, 6, MuGrid::Geometric, &opts).unwrap();
        for threads in [1, 3] {
            let par = parallel_sweep(2.0, 12.0, 6, MuGrid::Geometric, &opts, threads).unwrap();
            assert_eq!(par.table(), serial);
            assert!(par.bound_violations().is_empty());
        }
    }

    #[test]
    fn worker_count_is_positive() {
        assert!(worker_count() >= 1);
    }
}
