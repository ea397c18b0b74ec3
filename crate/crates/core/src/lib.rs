//! Optimal planar convex bodies for the functional `E + μ·A` at fixed
//! perimeter `2π`, where `E` is the elastic energy (half the integral of the
//! squared curvature) and `A` the area.
//!
//! The optimal boundaries are elasticae whose curvature has a closed form in
//! terms of the Jacobi `cn` function. Two shooting conditions on the maximal
//! curvature `k_M` and the perimeter multiplier `λ` select the solution,
//! either strictly convex or with two straight segments. Solving for a range
//! of `μ` traces the lower-left boundary of the diagram of normalized pairs
//! `(4πA/P², EP/(2π²))`.
//!
//! The crate is `no_std` and only needs `alloc`.
//!
//! Module map:
//! - [`special`]: complete elliptic integrals and Jacobi elliptic functions.
//! - [`quadrature`]: adaptive Gauss–Kronrod and fixed Gauss–Legendre rules.
//! - [`geometry`]: support-function and tangent-angle representations of
//!   convex bodies, their functionals and shape derivatives.
//! - [`elastica`]: closed-form curvature from `(μ, λ, k_M)`.
//! - [`lm`]: a small dense Levenberg–Marquardt solver.
//! - [`shooting`]: the 2×2 shooting systems, shape assembly and bound checks.
//! - [`diagram`]: μ-sweeps, segment onset, interior families and asymptotics.

#![no_std]

extern crate alloc;

pub mod diagram;
pub mod elastica;
mod error;
pub mod geometry;
pub mod lm;
pub mod quadrature;
pub mod shooting;
pub mod special;

pub use crate::error::{Error, Result};

pub use crate::diagram::{DiagramPoint, PointSource, SweepRow, SweepTable};
pub use crate::elastica::ElasticaParams;
pub use crate::geometry::{Functionals, Polyline, SupportBody, ThetaFunction};
pub use crate::shooting::{OptimalShape, ShootingMode, SolveOptions};
