use thiserror::Error;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("parameter {name} = {value} outside of its domain ({expected})")]
    Domain { name: &'static str, value: f64, expected: &'static str },

    #[error("body is not strictly convex: min radius of curvature {min_phi:e}")]
    NotStrictlyConvex { min_phi: f64 },

    #[error("first harmonic of the radius of curvature is {magnitude:e}, h'' + h = φ is not solvable")]
    Unsolvable { magnitude: f64 },

    #[error("tangent angle violates a constraint: {0}")]
    Constraint(&'static str),

    #[error("inconsistent elastica parameters: {0}")]
    InconsistentParameters(&'static str),

    #[error("shooting mode mismatch: {0}")]
    ModeMismatch(&'static str),

    #[error("solver did not converge after {iterations} iterations, best residual {residual:e} at k_M = {k_max}, λ = {lambda}")]
    NoConvergence { iterations: usize, residual: f64, k_max: f64, lambda: f64 },

    #[error("assembled boundary does not close: residual {residual:e}")]
    Assembly { residual: f64 },

    #[error("invalid bracket [{lo}, {hi}]: {reason}")]
    Bracket { lo: f64, hi: f64, reason: &'static str },

    #[error("quadrature failed to reach tolerance, error estimate {estimate:e}")]
    Quadrature { estimate: f64 },

    #[error("invalid input: {0}")]
    Invalid(&'static str),
}

impl Error {
    pub(crate) fn domain(name: &'static str, value: f64, expected: &'static str) -> Self {
        Error::Domain { name, value, expected }
    }
}
