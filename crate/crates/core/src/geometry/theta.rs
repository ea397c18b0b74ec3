use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::{FRAC_PI_2, PI};

#[allow(unused_imports)]
use num_traits::Float;

use super::{Functionals, SupportBody};
use crate::{Error, Result};

/// Largest decrease of `θ` tolerated between two consecutive samples.
pub const MONOTONE_STEP_TOL: f64 = 1e-10;
const TURNING_TOL: f64 = 1e-8;
const CLOSURE_TOL: f64 = 1e-6;

/// Tangent angle `θ` sampled on the uniform grid `s_i = i·P/n`, `i = 0..=n`.
#[derive(Debug, Clone, PartialEq)]
pub struct ThetaFunction {
    perimeter: f64,
    theta: Vec<f64>,
}

impl ThetaFunction {
    pub fn new(perimeter: f64, theta: Vec<f64>) -> Result<Self> {
        if !(perimeter > 0.0 && perimeter.is_finite()) {
            return Err(Error::domain("perimeter", perimeter, "finite and positive"));
        }
        if theta.len() < 5 {
            return Err(Error::Invalid("tangent angle needs at least 5 samples"));
        }
        if theta.iter().any(|t| !t.is_finite()) {
            return Err(Error::Invalid("tangent angle samples must be finite"));
        }
        Ok(ThetaFunction { perimeter, theta })
    }

    /// Samples `θ` at `intervals + 1` uniform points of `[0, perimeter]`.
    pub fn from_fn(perimeter: f64, intervals: usize, f: impl Fn(f64) -> f64) -> Result<Self> {
        let h = perimeter / intervals as f64;
        ThetaFunction::new(perimeter, (0..=intervals).map(|i| f(i as f64 * h)).collect())
    }

    pub fn perimeter(&self) -> f64 {
        self.perimeter
    }

    pub fn theta(&self) -> &[f64] {
        &self.theta
    }

    pub fn intervals(&self) -> usize {
        self.theta.len() - 1
    }

    pub fn step(&self) -> f64 {
        self.perimeter / self.intervals() as f64
    }

    pub fn arclength(&self, i: usize) -> f64 {
        i as f64 * self.step()
    }

    pub fn turning(&self) -> f64 {
        self.theta[self.theta.len() - 1] - self.theta[0]
    }

    /// Checks monotonicity, total turning `2π` and closure.
    pub fn validate(&self) -> Result<()> {
        if self.theta.windows(2).any(|w| w[1] - w[0] < -MONOTONE_STEP_TOL) {
            return Err(Error::Constraint("tangent angle is not non-decreasing"));
        }
        if (self.turning() - 2.0 * PI).abs() > TURNING_TOL {
            return Err(Error::Constraint("total turning differs from 2π"));
        }
        let (_, residual) = reconstruct_polyline(self);
        if residual > CLOSURE_TOL {
            return Err(Error::Constraint("boundary does not close"));
        }
        Ok(())
    }

    /// Curvature `θ'` at every node except the last, by fourth-order centred
    /// differences on the periodic extension `θ(s + P) = θ(s) + turning`.
    pub fn curvature(&self) -> Vec<f64> {
        let n = self.intervals();
        let h = self.step();
        let turn = self.turning();
        let at = |j: isize| -> f64 {
            let n = n as isize;
            let wraps = j.div_euclid(n);
            self.theta[j.rem_euclid(n) as usize] + wraps as f64 * turn
        };
        (0..n as isize).map(|i| (-at(i + 2) + 8.0 * at(i + 1) - 8.0 * at(i - 1) + at(i - 2)) / (12.0 * h)).collect()
    }
}

/// Closed polygonal boundary.
#[derive(Debug, Clone, PartialEq)]
pub struct Polyline {
    pub vertices: Vec<[f64; 2]>,
    pub closed: bool,
}

impl Polyline {
    pub fn segment_lengths(&self) -> impl Iterator<Item = f64> + '_ {
        let n = self.vertices.len();
        let count = if self.closed { n } else { n.saturating_sub(1) };
        (0..count).map(move |i| {
            let a = self.vertices[i];
            let b = self.vertices[(i + 1) % n];
            (b[0] - a[0]).hypot(b[1] - a[1])
        })
    }

    pub fn length(&self) -> f64 {
        self.segment_lengths().sum()
    }

    /// Signed shoelace area (positive for counter-clockwise order).
    pub fn area(&self) -> f64 {
        shoelace(self.vertices.iter().copied())
    }

    /// Shoelace area with one Richardson step against the polygon on every
    /// other vertex. For vertices sampled uniformly in arclength on a
    /// piecewise smooth curve this removes the `O(h²)` chord deficit.
    pub fn area_extrapolated(&self) -> f64 {
        let n = self.vertices.len();
        if !n.is_multiple_of(2) || n < 8 {
            return self.area();
        }
        let fine = self.area();
        let coarse = shoelace(self.vertices.iter().step_by(2).copied());
        (4.0 * fine - coarse) / 3.0
    }

    pub fn bounding_box(&self) -> ([f64; 2], [f64; 2]) {
        self.vertices.iter().fold(([f64::INFINITY; 2], [f64::NEG_INFINITY; 2]), |(lo, hi), v| {
            ([lo[0].min(v[0]), lo[1].min(v[1])], [hi[0].max(v[0]), hi[1].max(v[1])])
        })
    }
}

fn shoelace(points: impl Iterator<Item = [f64; 2]>) -> f64 {
    let mut first = None;
    let mut prev: Option<[f64; 2]> = None;
    let mut twice = 0.0;
    for p in points {
        if let Some(q) = prev {
            twice += q[0] * p[1] - p[0] * q[1];
        } else {
            first = Some(p);
        }
        prev = Some(p);
    }
    if let (Some(p), Some(q)) = (first, prev) {
        twice += q[0] * p[1] - p[0] * q[1];
    }
    0.5 * twice
}

/// Cumulative integral of uniformly sampled data: composite Simpson at even
/// nodes, a third-order single-panel rule at odd ones.
pub(crate) fn cumulative_simpson(f: &[f64], h: f64) -> Vec<f64> {
    let n = f.len() - 1;
    let mut out = vec![0.0; n + 1];
    for i in 1..=n {
        out[i] = if i % 2 == 0 {
            out[i - 2] + h / 3.0 * (f[i - 2] + 4.0 * f[i - 1] + f[i])
        } else if i < n {
            out[i - 1] + h / 12.0 * (5.0 * f[i - 1] + 8.0 * f[i] - f[i + 1])
        } else {
            out[i - 1] + h / 12.0 * (-f[i - 2] + 8.0 * f[i - 1] + 5.0 * f[i])
        };
    }
    out
}

/// Integrates `(cos θ, sin θ)` from the origin. Returns the polygon through
/// the nodes `0..n` (the final node duplicates the first for a closed curve)
/// and the closure residual `‖(x(P), y(P))‖`.
pub fn reconstruct_polyline(tf: &ThetaFunction) -> (Polyline, f64) {
    let h = tf.step();
    let (sin, cos): (Vec<f64>, Vec<f64>) = tf.theta.iter().map(|t| t.sin_cos()).unzip();
    let x = cumulative_simpson(&cos, h);
    let y = cumulative_simpson(&sin, h);
    let n = tf.intervals();
    let residual = x[n].hypot(y[n]);
    let vertices = x.iter().zip(y.iter()).take(n).map(|(&x, &y)| [x, y]).collect();
    (Polyline { vertices, closed: true }, residual)
}

/// `E = ½∫θ'²` and `A` by the shoelace formula on the reconstructed boundary.
pub fn functionals_from_theta(tf: &ThetaFunction) -> Result<Functionals> {
    tf.validate()?;
    let h = tf.step();
    let elastic_energy = 0.5 * h * tf.curvature().iter().map(|k| k * k).sum::<f64>();
    let (poly, _) = reconstruct_polyline(tf);
    Ok(Functionals { area: poly.area_extrapolated(), perimeter: tf.perimeter, elastic_energy })
}

/// Converts a strictly convex support body to its tangent-angle function on
/// `intervals` uniform arclength steps.
///
/// The boundary point with normal angle `t` has tangent angle `t + π/2` and
/// arclength `s(t) = ∫₀ᵗ φ`. `s ↦ t` is inverted with a monotone cubic
/// interpolant on an oversampled `t` grid, polished by Newton steps on the
/// exact `s(t)`.
pub fn support_to_theta(body: &SupportBody, intervals: usize) -> Result<ThetaFunction> {
    let samples = (16 * intervals).max(4096);
    let min_phi = body.min_radius_of_curvature(samples);
    if min_phi <= 0.0 {
        return Err(Error::NotStrictlyConvex { min_phi });
    }
    let perimeter = body.perimeter_exact();
    let ts: Vec<f64> = (0..=samples).map(|j| 2.0 * PI * j as f64 / samples as f64).collect();
    let ss: Vec<f64> = ts.iter().map(|&t| body.arclength(t)).collect();
    let interp = MonotoneCubic::new(&ss, &ts);
    let phi = body.radius_series();

    let step = perimeter / intervals as f64;
    let mut theta = Vec::with_capacity(intervals + 1);
    for i in 0..=intervals {
        let target = i as f64 * step;
        let mut t = interp.eval(target);
        for _ in 0..3 {
            t -= (body.arclength(t) - target) / phi.eval(t);
        }
        theta.push(t + FRAC_PI_2);
    }
    ThetaFunction::new(perimeter, theta)
}

/// Fritsch–Carlson monotone piecewise cubic Hermite interpolant.
struct MonotoneCubic<'a> {
    x: &'a [f64],
    y: &'a [f64],
    slopes: Vec<f64>,
}

impl<'a> MonotoneCubic<'a> {
    fn new(x: &'a [f64], y: &'a [f64]) -> Self {
        let n = x.len();
        let secant: Vec<f64> = (0..n - 1).map(|i| (y[i + 1] - y[i]) / (x[i + 1] - x[i])).collect();
        let mut slopes = vec![0.0; n];
        slopes[0] = secant[0];
        slopes[n - 1] = secant[n - 2];
        for i in 1..n - 1 {
            let (d0, d1) = (secant[i - 1], secant[i]);
            slopes[i] = if d0 * d1 <= 0.0 {
                0.0
            } else {
                let h0 = x[i] - x[i - 1];
                let h1 = x[i + 1] - x[i];
                let w0 = 2.0 * h1 + h0;
                let w1 = h1 + 2.0 * h0;
                (w0 + w1) / (w0 / d0 + w1 / d1)
            };
        }
        MonotoneCubic { x, y, slopes }
    }

    fn eval(&self, at: f64) -> f64 {
        let n = self.x.len();
        let i = match self.x.binary_search_by(|v| v.total_cmp(&at)) {
            Ok(i) => return self.y[i],
            Err(0) => 0,
            Err(i) if i >= n => n - 2,
            Err(i) => i - 1,
        };
        let h = self.x[i + 1] - self.x[i];
        let u = (at - self.x[i]) / h;
        let (u2, u3) = (u * u, u * u * u);
        let h00 = 2.0 * u3 - 3.0 * u2 + 1.0;
        let h10 = u3 - 2.0 * u2 + u;
        let h01 = -2.0 * u3 + 3.0 * u2;
        let h11 = u3 - u2;
        h00 * self.y[i] + h10 * h * self.slopes[i] + h01 * self.y[i + 1] + h11 * h * self.slopes[i + 1]
    }
}
