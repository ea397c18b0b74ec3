//! Complete elliptic integrals and Jacobi elliptic functions.
//!
//! Everything here uses the *parameter* convention: `m` multiplies `t²` in
//! `K(m) = ∫₀¹ dt / √((1 − t²)(1 − m t²))`. The modulus `k = √m` never
//! appears in the public API.

use core::f64::consts::PI;

#[allow(unused_imports)]
use num_traits::Float;

use crate::{Error, Result};

const AGM_MAX_ITER: usize = 64;

/// Elliptic parameter `m`, validated to lie in `[0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct EllipticParameter(f64);

impl EllipticParameter {
    pub fn new(m: f64) -> Result<Self> {
        if (0.0..=1.0).contains(&m) {
            Ok(EllipticParameter(m))
        } else {
            Err(Error::domain("m", m, "0 <= m <= 1"))
        }
    }

    pub fn value(self) -> f64 {
        self.0
    }
}

/// `(sn, cn, dn)` evaluated at one point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JacobiTriple {
    pub sn: f64,
    pub cn: f64,
    pub dn: f64,
}

/// Complete elliptic integral of the first kind, `K(m)` for `0 <= m < 1`.
///
/// `K(m) = π / (2·agm(1, √(1 − m)))`. `m = 1` is rejected: the integral
/// diverges logarithmically there.
pub fn complete_elliptic_k(m: f64) -> Result<f64> {
    if !(0.0..1.0).contains(&m) {
        return Err(Error::domain("m", m, "0 <= m < 1"));
    }
    let (a, _) = agm(1.0, (1.0 - m).sqrt());
    Ok(PI / (2.0 * a))
}

/// Complete elliptic integral of the second kind, `E(m)` for `0 <= m <= 1`.
///
/// Uses `E = K·(1 − Σ 2ⁿ⁻¹ cₙ²)` with `c₀² = m` and `cₙ = (aₙ₋₁ − bₙ₋₁)/2`.
pub fn complete_elliptic_e(m: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&m) {
        return Err(Error::domain("m", m, "0 <= m <= 1"));
    }
    if m == 1.0 {
        return Ok(1.0);
    }
    let mut a = 1.0;
    let mut b = (1.0 - m).sqrt();
    let mut sum = 0.5 * m;
    let mut weight = 0.5;
    for _ in 0..AGM_MAX_ITER {
        let c = 0.5 * (a - b);
        weight *= 2.0;
        sum += weight * c * c;
        let next = 0.5 * (a + b);
        b = (a * b).sqrt();
        a = next;
        if c.abs() <= f64::EPSILON * a {
            break;
        }
    }
    Ok(PI / (2.0 * a) * (1.0 - sum))
}

/// Jacobi elliptic functions `(sn, cn, dn)(u | m)` for `0 <= m <= 1`.
///
/// The argument is first reduced modulo the real period `4K(m)`, then the
/// descending Landen sequence is built and the amplitude recovered by
/// back-substitution.
pub fn jacobi_elliptic(u: f64, m: f64) -> Result<JacobiTriple> {
    if !u.is_finite() {
        return Err(Error::domain("u", u, "finite"));
    }
    let m = EllipticParameter::new(m)?.value();
    if m == 1.0 {
        let sech = 1.0 / u.cosh();
        return Ok(JacobiTriple { sn: u.tanh(), cn: sech, dn: sech });
    }
    if m == 0.0 {
        let (sn, cn) = u.sin_cos();
        return Ok(JacobiTriple { sn, cn, dn: 1.0 });
    }

    // Landen sequence a_n, c_n with c_0 = sqrt(m).
    let mut a = [0.0f64; AGM_MAX_ITER + 1];
    let mut c = [0.0f64; AGM_MAX_ITER + 1];
    a[0] = 1.0;
    c[0] = m.sqrt();
    let mut b = (1.0 - m).sqrt();
    let mut n = 0;
    while n < AGM_MAX_ITER && c[n].abs() > f64::EPSILON * a[n] {
        a[n + 1] = 0.5 * (a[n] + b);
        c[n + 1] = 0.5 * (a[n] - b);
        b = (a[n] * b).sqrt();
        n += 1;
    }

    // K = π / (2 a_N); reduce u into (-2K, 2K].
    let period = 4.0 * (PI / (2.0 * a[n]));
    let mut u = u - period * (u / period).round();
    if u <= -0.5 * period {
        u += period;
    }

    let mut phi = (1u64 << n) as f64 * a[n] * u;
    for i in (1..=n).rev() {
        let s = (c[i] / a[i] * phi.sin()).clamp(-1.0, 1.0);
        phi = 0.5 * (phi + s.asin());
    }
    let (sn, cn) = phi.sin_cos();
    // 1 − m·sn² written without cancellation.
    let dn = ((1.0 - m) + m * cn * cn).sqrt();
    Ok(JacobiTriple { sn, cn, dn })
}

/// The asymptotic constant `ρ = 2√(2π)·(2E(½) − K(½)) ≈ 4.2473`.
///
/// For large `μ` the optimal bodies satisfy `E ~ ρ√μ` and `A ~ ρ/√μ`, so the
/// diagram boundary approaches the hyperbola `xy = ρ²/π²`.
pub fn rho_constant() -> f64 {
    let k = complete_elliptic_k(0.5).expect("0.5 is inside the domain of K");
    let e = complete_elliptic_e(0.5).expect("0.5 is inside the domain of E");
    2.0 * (2.0 * PI).sqrt() * (2.0 * e - k)
}

fn agm(mut a: f64, mut b: f64) -> (f64, usize) {
    for i in 0..AGM_MAX_ITER {
        if (a - b).abs() <= f64::EPSILON * a {
            return (a, i);
        }
        let next = 0.5 * (a + b);
        b = (a * b).sqrt();
        a = next;
    }
    (a, AGM_MAX_ITER)
}
