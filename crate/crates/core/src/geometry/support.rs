use alloc::vec::Vec;
use core::f64::consts::PI;

#[allow(unused_imports)]
use num_traits::Float;

use super::Functionals;
use crate::{Error, Result};

/// Default number of uniform nodes in `t` for quadrature over `[0, 2π)`.
pub const DEFAULT_NODES: usize = 2048;

const CROSS_CHECK_TOL: f64 = 1e-10;
const RESONANCE_TOL: f64 = 1e-10;

/// One Fourier mode `a·cos(kt) + b·sin(kt)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Harmonic {
    pub k: u32,
    pub a: f64,
    pub b: f64,
}

impl Harmonic {
    pub fn new(k: u32, a: f64, b: f64) -> Self {
        Harmonic { k, a, b }
    }
}

/// A real trigonometric polynomial `c + Σ a_k cos(kt) + b_k sin(kt)`.
#[derive(Debug, Clone, PartialEq)]
pub struct TrigSeries {
    pub constant: f64,
    harmonics: Vec<Harmonic>,
}

impl TrigSeries {
    /// Builds a series, merging repeated orders. Order 0 is rejected, use
    /// `constant` instead.
    pub fn new(constant: f64, harmonics: impl IntoIterator<Item = Harmonic>) -> Result<Self> {
        let mut merged: Vec<Harmonic> = Vec::new();
        for h in harmonics {
            if h.k == 0 {
                return Err(Error::Invalid("harmonic order must be at least 1"));
            }
            if !(h.a.is_finite() && h.b.is_finite()) {
                return Err(Error::Invalid("harmonic coefficients must be finite"));
            }
            match merged.iter_mut().find(|m| m.k == h.k) {
                Some(m) => {
                    m.a += h.a;
                    m.b += h.b;
                }
                None => merged.push(h),
            }
        }
        if !constant.is_finite() {
            return Err(Error::Invalid("constant term must be finite"));
        }
        merged.sort_by_key(|h| h.k);
        Ok(TrigSeries { constant, harmonics: merged })
    }

    pub fn constant(value: f64) -> Self {
        TrigSeries { constant: value, harmonics: Vec::new() }
    }

    pub fn harmonics(&self) -> &[Harmonic] {
        &self.harmonics
    }

    pub fn order(&self) -> u32 {
        self.harmonics.last().map_or(0, |h| h.k)
    }

    pub fn coefficient(&self, k: u32) -> (f64, f64) {
        if k == 0 {
            return (self.constant, 0.0);
        }
        self.harmonics.iter().find(|h| h.k == k).map_or((0.0, 0.0), |h| (h.a, h.b))
    }

    pub fn eval(&self, t: f64) -> f64 {
        self.constant
            + self
                .harmonics
                .iter()
                .map(|h| {
                    let (s, c) = (h.k as f64 * t).sin_cos();
                    h.a * c + h.b * s
                })
                .sum::<f64>()
    }

    /// `n`-th derivative in `t`.
    pub fn derivative(&self, t: f64, n: u32) -> f64 {
        if n == 0 {
            return self.eval(t);
        }
        self.harmonics
            .iter()
            .map(|h| {
                let k = h.k as f64;
                let (s, c) = (k * t).sin_cos();
                let scale = k.powi(n as i32);
                // d^n/dt^n of a cos + b sin cycles with period 4.
                let (dc, ds) = match n % 4 {
                    0 => (c, s),
                    1 => (-s, c),
                    2 => (-c, -s),
                    _ => (s, -c),
                };
                scale * (h.a * dc + h.b * ds)
            })
            .sum()
    }

    fn map(&self, f: impl Fn(u32, f64) -> f64) -> TrigSeries {
        TrigSeries {
            constant: f(0, self.constant),
            harmonics: self.harmonics.iter().map(|h| Harmonic::new(h.k, f(h.k, h.a), f(h.k, h.b))).collect(),
        }
    }
}

/// Convex body given by its support function `h(t)`.
#[derive(Debug, Clone, PartialEq)]
pub struct SupportBody {
    h: TrigSeries,
}

impl SupportBody {
    pub fn new(a0: f64, harmonics: impl IntoIterator<Item = Harmonic>) -> Result<Self> {
        Ok(SupportBody { h: TrigSeries::new(a0, harmonics)? })
    }

    pub fn from_series(h: TrigSeries) -> Self {
        SupportBody { h }
    }

    pub fn disk(radius: f64) -> Self {
        SupportBody { h: TrigSeries::constant(radius) }
    }

    pub fn a0(&self) -> f64 {
        self.h.constant
    }

    pub fn harmonics(&self) -> &[Harmonic] {
        self.h.harmonics()
    }

    pub fn series(&self) -> &TrigSeries {
        &self.h
    }

    pub fn order(&self) -> u32 {
        self.h.order()
    }

    pub fn support(&self, t: f64) -> f64 {
        self.h.eval(t)
    }

    /// Radius of curvature `φ = h'' + h`.
    pub fn radius_of_curvature(&self, t: f64) -> f64 {
        self.radius_series().eval(t)
    }

    /// `φ` as a trigonometric series: mode `k` is scaled by `1 − k²`.
    pub fn radius_series(&self) -> TrigSeries {
        self.h.map(|k, c| (1.0 - (k as f64).powi(2)) * c)
    }

    /// Boundary point with outward normal `(cos t, sin t)`.
    pub fn position(&self, t: f64) -> [f64; 2] {
        let h = self.h.eval(t);
        let dh = self.h.derivative(t, 1);
        let (s, c) = t.sin_cos();
        [h * c - dh * s, h * s + dh * c]
    }

    /// Smallest `φ` over `nodes` uniform samples.
    pub fn min_radius_of_curvature(&self, nodes: usize) -> f64 {
        let phi = self.radius_series();
        (0..nodes).map(|i| phi.eval(2.0 * PI * i as f64 / nodes as f64)).fold(f64::INFINITY, f64::min)
    }

    /// `P = 2π·a₀`.
    pub fn perimeter_exact(&self) -> f64 {
        2.0 * PI * self.h.constant
    }

    /// `A = π a₀² + (π/2) Σ (1 − k²)(a_k² + b_k²)`.
    pub fn area_exact(&self) -> f64 {
        PI * self.h.constant.powi(2)
            + 0.5
                * PI
                * self.h.harmonics().iter().map(|h| (1.0 - (h.k as f64).powi(2)) * (h.a * h.a + h.b * h.b)).sum::<f64>()
    }

    /// Arclength from `t = 0`, `s(t) = ∫₀ᵗ φ`, exact from the coefficients.
    pub fn arclength(&self, t: f64) -> f64 {
        self.h.constant * t
            + self
                .h
                .harmonics()
                .iter()
                .map(|h| {
                    let k = h.k as f64;
                    let (s, c) = (k * t).sin_cos();
                    (1.0 - k * k) * (h.a * s + h.b * (1.0 - c)) / k
                })
                .sum::<f64>()
    }

    /// Uniform scaling about the origin.
    pub fn scaled(&self, factor: f64) -> SupportBody {
        SupportBody { h: self.h.map(|_, c| factor * c) }
    }
}

/// `A`, `P` and `E` of a strictly convex body by trapezoidal quadrature on
/// `nodes` uniform points (spectrally accurate for trigonometric data).
///
/// `A` and `P` are cross-checked against their closed forms; a mismatch
/// means the grid cannot resolve the harmonics.
pub fn functionals_from_support(body: &SupportBody, nodes: usize) -> Result<Functionals> {
    if nodes < DEFAULT_NODES {
        return Err(Error::Invalid("at least 2048 quadrature nodes are required"));
    }
    if 2 * body.order() as usize >= nodes {
        return Err(Error::Invalid("quadrature grid too coarse for the harmonics"));
    }
    let phi_series = body.radius_series();
    let dt = 2.0 * PI / nodes as f64;
    let mut min_phi = f64::INFINITY;
    let (mut p, mut a, mut e) = (0.0, 0.0, 0.0);
    for i in 0..nodes {
        let t = i as f64 * dt;
        let h = body.support(t);
        let phi = phi_series.eval(t);
        min_phi = min_phi.min(phi);
        p += h;
        a += h * phi;
        e += 1.0 / phi;
    }
    if min_phi <= 0.0 {
        return Err(Error::NotStrictlyConvex { min_phi });
    }
    let perimeter = p * dt;
    let area = 0.5 * a * dt;
    let elastic_energy = 0.5 * e * dt;

    let scale = 1.0 + body.a0().abs().powi(2);
    if (perimeter - body.perimeter_exact()).abs() > CROSS_CHECK_TOL * scale
        || (area - body.area_exact()).abs() > CROSS_CHECK_TOL * scale
    {
        return Err(Error::Invalid("quadrature disagrees with the closed-form area or perimeter"));
    }
    Ok(Functionals { area, perimeter, elastic_energy })
}

/// Solves `h'' + h = φ` for a `2π`-periodic `h` orthogonal to `cos t` and
/// `sin t`. Mode `k ≠ 1` of `h` is mode `k` of `φ` divided by `1 − k²`.
pub fn apply_g(phi: &TrigSeries) -> Result<SupportBody> {
    let (a1, b1) = phi.coefficient(1);
    let magnitude = a1.hypot(b1);
    if magnitude > RESONANCE_TOL {
        return Err(Error::Unsolvable { magnitude });
    }
    let harmonics = phi.harmonics().iter().filter(|h| h.k != 1).map(|h| {
        let d = 1.0 - (h.k as f64).powi(2);
        Harmonic::new(h.k, h.a / d, h.b / d)
    });
    SupportBody::new(phi.constant, harmonics)
}

/// Support function of `τ·b1 + (1 − τ)·b0` (Minkowski combination).
pub fn minkowski_combine(b0: &SupportBody, b1: &SupportBody, tau: f64) -> Result<SupportBody> {
    if !(0.0..=1.0).contains(&tau) {
        return Err(Error::domain("tau", tau, "0 <= tau <= 1"));
    }
    let mut harmonics: Vec<Harmonic> =
        b0.harmonics().iter().map(|h| Harmonic::new(h.k, (1.0 - tau) * h.a, (1.0 - tau) * h.b)).collect();
    harmonics.extend(b1.harmonics().iter().map(|h| Harmonic::new(h.k, tau * h.a, tau * h.b)));
    SupportBody::new((1.0 - tau) * b0.a0() + tau * b1.a0(), harmonics)
}
