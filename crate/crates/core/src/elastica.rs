//! Closed-form solution of the elastica equation
//! `k'' = −½k³ − λk + μ`, `k(0) = k_M`, `k'(0) = 0`.
//!
//! One integration gives `(k')² = Q(k)` with the quartic
//! `Q(z) = −¼z⁴ − λz² + 2μz + C` and `C = ¼k_M⁴ + λk_M² − 2μk_M`. The
//! curvature oscillates between the two real roots `k_M` and `k_m` of `Q`,
//! and the Möbius substitution `k = (αy + β)/(γy + 1)` turns the equation
//! into the one solved by `y = cn(ωs | m)`:
//!
//! ```text
//! k(s) = (α cn(ωs|m) + β) / (γ cn(ωs|m) + 1)
//! ```
//!
//! with `σ = (k_M + k_m)/2`, `δ = (k_M − k_m)/2`, `γ ∈ (−1, 0)` the root of
//! `X² + (3σ² + δ² + 2λ)/(σδ)·X + 1`, `α = γσ + δ`, `β = γδ + σ`,
//! `ω² = σδ(γ² − 1)/(2γ)` and `m = (γ² + δγ/(2σ))/(γ² − 1)`.

#[allow(unused_imports)]
use num_traits::Float;

use crate::quadrature::{integrate, QuadOptions};
use crate::special::{complete_elliptic_k, jacobi_elliptic};
use crate::{Error, Result};

/// `|k_M − k_m|` below which the constant-curvature branch is used.
pub const DEGENERACY_TOL: f64 = 1e-9;
const EQUILIBRIUM_TOL: f64 = 1e-8;
const ZERO_TOL: f64 = 1e-12;

/// Parameters of one closed-form curvature profile.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ElasticaParams {
    pub mu: f64,
    pub lambda: f64,
    pub k_max: f64,
    /// First-integral constant `C = Q(0)`.
    pub c: f64,
    pub k_min: f64,
    pub sigma: f64,
    pub delta: f64,
    pub gamma: f64,
    pub alpha: f64,
    pub beta: f64,
    pub omega: f64,
    /// Elliptic parameter of `cn`.
    pub m: f64,
    /// Radius with `μ²(R₀² − (λ/μ)²) = C`; clamped at zero when
    /// `λ² + C < 0`.
    pub r0: f64,
    /// Periodicity index: the boundary repeats `2q` times.
    pub q: u32,
    /// Constant curvature `k ≡ k_M` (the disk).
    pub degenerate: bool,
}

impl ElasticaParams {
    /// `Q(z) = −¼z⁴ − λz² + 2μz + C` in Horner form.
    pub fn quartic(&self, z: f64) -> f64 {
        quartic(self.mu, self.lambda, self.c, z)
    }

    /// Right-hand side of the elastica equation, `−½k³ − λk + μ`.
    pub fn acceleration(&self, k: f64) -> f64 {
        -0.5 * k * k * k - self.lambda * k + self.mu
    }

    /// Distance from the maximum to the next minimum, `2K(m)/ω`.
    /// `None` on the degenerate branch.
    pub fn half_period(&self) -> Option<f64> {
        if self.degenerate {
            return None;
        }
        complete_elliptic_k(self.m).ok().map(|k| 2.0 * k / self.omega)
    }
}

fn quartic(mu: f64, lambda: f64, c: f64, z: f64) -> f64 {
    ((-0.25 * z * z - lambda) * z + 2.0 * mu) * z + c
}

/// Builds the closed-form parameters from `(μ, λ, k_M)`.
///
/// Dividing `Q` by `(z − k_M)` leaves the cubic
/// `z³ + k_M z² + (k_M² + 4λ)z + k_M³ + 4λk_M − 8μ` (up to the factor `−¼`),
/// which is strictly increasing for `λ ≥ 0` and negative at `−k_M`, so `k_m`
/// is its unique real root and lies in `(−k_M, k_M]` whenever `k_M` is a
/// maximum of the curvature.
pub fn build_params(mu: f64, lambda: f64, k_max: f64, q: u32) -> Result<ElasticaParams> {
    if !(mu > 0.0 && mu.is_finite()) {
        return Err(Error::domain("mu", mu, "mu > 0"));
    }
    if !(k_max > 0.0 && k_max.is_finite()) {
        return Err(Error::domain("k_max", k_max, "k_max > 0"));
    }
    if !(lambda >= 0.0 && lambda.is_finite()) {
        return Err(Error::domain("lambda", lambda, "lambda >= 0"));
    }
    if q == 0 {
        return Err(Error::Invalid("periodicity index q must be at least 1"));
    }

    let k = k_max;
    let c = 0.25 * k.powi(4) + lambda * k * k - 2.0 * mu * k;
    let cubic = |z: f64| ((z + k) * z + k * k + 4.0 * lambda) * z + k * k * k + 4.0 * lambda * k - 8.0 * mu;
    let slope = |z: f64| (3.0 * z + 2.0 * k) * z + k * k + 4.0 * lambda;

    let at_max = cubic(k);
    let scale = 8.0 * (k.powi(3) + lambda * k + mu);
    let k_min = if at_max < -EQUILIBRIUM_TOL * scale {
        return Err(Error::InconsistentParameters("k_M is a minimum of the curvature, Q has no second root below it"));
    } else if at_max <= 0.0 {
        k
    } else {
        safeguarded_newton(cubic, slope, -k, k)
    };

    let r0 = ((lambda * lambda + c) / (mu * mu)).max(0.0).sqrt();

    if (k - k_min).abs() <= DEGENERACY_TOL {
        let residual = -0.5 * k.powi(3) - lambda * k + mu;
        if residual.abs() > EQUILIBRIUM_TOL {
            return Err(Error::InconsistentParameters("double root of Q without the constant-curvature equilibrium"));
        }
        return Ok(ElasticaParams {
            mu,
            lambda,
            k_max: k,
            c,
            k_min: k,
            sigma: k,
            delta: 0.0,
            gamma: 0.0,
            alpha: 0.0,
            beta: k,
            // Frequency of small oscillations about the equilibrium.
            omega: (1.5 * k * k + lambda).sqrt(),
            m: 0.0,
            r0,
            q,
            degenerate: true,
        });
    }

    let sigma = 0.5 * (k + k_min);
    let delta = 0.5 * (k - k_min);
    if sigma <= 0.0 || delta <= 0.0 {
        return Err(Error::InconsistentParameters("σ and δ must be positive"));
    }
    let b = (3.0 * sigma * sigma + delta * delta + 2.0 * lambda) / (sigma * delta);
    let disc = b * b - 4.0;
    if disc <= 0.0 {
        return Err(Error::InconsistentParameters("γ has no real root in (−1, 0)"));
    }
    // Roots have product 1; this is the one of smaller magnitude.
    let gamma = -2.0 / (b + disc.sqrt());
    let alpha = gamma * sigma + delta;
    let beta = gamma * delta + sigma;
    let g2 = gamma * gamma;
    let omega2 = sigma * delta * (g2 - 1.0) / (2.0 * gamma);
    let m = (g2 + delta * gamma / (2.0 * sigma)) / (g2 - 1.0);
    if !(omega2 > 0.0) || !(m > 0.0 && m < 1.0) {
        return Err(Error::InconsistentParameters("ω² or the elliptic parameter out of range"));
    }
    Ok(ElasticaParams {
        mu,
        lambda,
        k_max: k,
        c,
        k_min,
        sigma,
        delta,
        gamma,
        alpha,
        beta,
        omega: omega2.sqrt(),
        m,
        r0,
        q,
        degenerate: false,
    })
}

fn safeguarded_newton(f: impl Fn(f64) -> f64, df: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64) -> f64 {
    // f(lo) < 0 < f(hi) and f is increasing.
    let mut x = 0.5 * (lo + hi);
    for _ in 0..200 {
        let fx = f(x);
        if fx == 0.0 {
            return x;
        }
        if fx < 0.0 {
            lo = x;
        } else {
            hi = x;
        }
        let d = df(x);
        let newton = x - fx / d;
        let next = if d > 0.0 && newton > lo && newton < hi { newton } else { 0.5 * (lo + hi) };
        if (next - x).abs() <= 4.0 * f64::EPSILON * x.abs().max(1.0) || hi - lo <= f64::EPSILON * hi.abs().max(1.0) {
            return next;
        }
        x = next;
    }
    x
}

/// Curvature `k(s)`; `k_M` on the degenerate branch.
pub fn curvature_at(p: &ElasticaParams, s: f64) -> f64 {
    if p.degenerate {
        return p.k_max;
    }
    let cn = jacobi_elliptic(p.omega * s, p.m).map_or(f64::NAN, |t| t.cn);
    (p.alpha * cn + p.beta) / (p.gamma * cn + 1.0)
}

/// `k'(s)` from `cn' = −sn·dn`.
pub fn curvature_derivative(p: &ElasticaParams, s: f64) -> f64 {
    if p.degenerate {
        return 0.0;
    }
    let Ok(t) = jacobi_elliptic(p.omega * s, p.m) else {
        return f64::NAN;
    };
    let denom = p.gamma * t.cn + 1.0;
    -p.omega * t.sn * t.dn * (p.alpha - p.gamma * p.beta) / (denom * denom)
}

/// `(k')² − Q(k)`; zero along an exact solution. Returns 0 on the degenerate
/// branch.
pub fn first_integral_residual(p: &ElasticaParams, s: f64) -> f64 {
    if p.degenerate {
        return 0.0;
    }
    let dk = curvature_derivative(p, s);
    dk * dk - p.quartic(curvature_at(p, s))
}

fn quad_options() -> QuadOptions {
    QuadOptions { abs_tol: 1e-13, rel_tol: 1e-14, max_intervals: 4000 }
}

/// `∫₀ˢ k(u)^power du` by adaptive Gauss–Kronrod.
pub fn curvature_power_integral(p: &ElasticaParams, s: f64, power: i32) -> Result<f64> {
    if p.degenerate {
        return Ok(p.k_max.powi(power) * s);
    }
    integrate(|u| curvature_at(p, u).powi(power), 0.0, s, &quad_options()).map(|e| e.value)
}

/// Tangent angle `θ(s) = ∫₀ˢ k`.
pub fn theta_integral(p: &ElasticaParams, s: f64) -> Result<f64> {
    if s < 0.0 {
        return Err(Error::domain("s", s, "s >= 0"));
    }
    curvature_power_integral(p, s, 1)
}

/// First zero of `k` in `(0, s_max]`.
///
/// `k` decreases from `k_M` to `k_m` over the first half period, so a zero
/// exists iff `k_m <= 0` and it lies in that half period. It is bracketed
/// there, bisected to `1e-12` and polished by one Newton step.
pub fn first_zero(p: &ElasticaParams, s_max: f64) -> Option<f64> {
    if p.degenerate || p.k_min > 0.0 {
        return None;
    }
    let half = p.half_period()?;
    let (mut lo, mut hi) = (0.0, half);
    if curvature_at(p, hi) > 0.0 {
        // k_m is only marginally non-positive; nothing to bracket.
        return None;
    }
    while hi - lo > ZERO_TOL {
        let mid = 0.5 * (lo + hi);
        if curvature_at(p, mid) > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let mut s1 = 0.5 * (lo + hi);
    let dk = curvature_derivative(p, s1);
    if dk < 0.0 {
        let polished = s1 - curvature_at(p, s1) / dk;
        if (polished - s1).abs() <= ZERO_TOL {
            s1 = polished;
        }
    }
    (s1 <= s_max).then_some(s1)
}
