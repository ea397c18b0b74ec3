//! Convex bodies in the plane and the three functionals `A`, `P`, `E`.
//!
//! Two parametrizations are supported. A [`SupportBody`] stores the support
//! function `h(t)` as a trigonometric polynomial; its radius of curvature is
//! `φ = h'' + h` and `ds = φ dt`. A [`ThetaFunction`] samples the tangent
//! angle `θ(s)` against arclength; the boundary is recovered by integrating
//! `(cos θ, sin θ)`.

mod derivatives;
mod support;
mod theta;

use core::f64::consts::PI;

pub use self::derivatives::{shape_derivatives, PlaneWave, ShapeDerivatives, VectorField};
pub use self::support::{
    apply_g, functionals_from_support, minkowski_combine, Harmonic, SupportBody, TrigSeries, DEFAULT_NODES,
};
pub use self::theta::{
    functionals_from_theta, reconstruct_polyline, support_to_theta, Polyline, ThetaFunction, MONOTONE_STEP_TOL,
};

/// Area, perimeter and elastic energy of one body.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Functionals {
    pub area: f64,
    pub perimeter: f64,
    pub elastic_energy: f64,
}

impl Functionals {
    /// Normalized diagram coordinates `(4πA/P², EP/(2π²))`, both equal to 1
    /// for a disk.
    pub fn diagram_coordinates(&self) -> (f64, f64) {
        let x = 4.0 * PI * self.area / (self.perimeter * self.perimeter);
        let y = self.elastic_energy * self.perimeter / (2.0 * PI * PI);
        (x, y)
    }

    /// Gage ratio `E·A/P`, at least `π/2` for every convex body.
    pub fn gage_ratio(&self) -> f64 {
        self.elastic_energy * self.area / self.perimeter
    }
}
