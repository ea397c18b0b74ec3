//! One-dimensional quadrature: globally adaptive Gauss–Kronrod (G7/K15) and
//! a fixed 5-point Gauss–Legendre rule for small smooth panels.

use alloc::vec::Vec;

#[allow(unused_imports)]
use num_traits::Float;

use crate::{Error, Result};

// Kronrod abscissae on [-1, 1]; the odd indices are the Gauss 7-point nodes.
const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_845_693_013,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.000_000_000_000_000_000_000_000_000_000_000,
];

const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];

const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

/// Gauss–Legendre 5-point nodes on [-1, 1].
pub const GL5_NODES: [f64; 5] = [
    -0.906_179_845_938_663_992_797_626_878_299_393,
    -0.538_469_310_105_683_091_036_314_420_700_208,
    0.0,
    0.538_469_310_105_683_091_036_314_420_700_208,
    0.906_179_845_938_663_992_797_626_878_299_393,
];

/// Gauss–Legendre 5-point weights on [-1, 1].
pub const GL5_WEIGHTS: [f64; 5] = [
    0.236_926_885_056_189_087_514_264_040_719_917,
    0.478_628_670_499_366_468_041_291_514_835_638,
    0.568_888_888_888_888_888_888_888_888_888_889,
    0.478_628_670_499_366_468_041_291_514_835_638,
    0.236_926_885_056_189_087_514_264_040_719_917,
];

/// Tolerances and limits for [`integrate`].
#[derive(Debug, Clone, Copy)]
pub struct QuadOptions {
    pub abs_tol: f64,
    pub rel_tol: f64,
    pub max_intervals: usize,
}

impl Default for QuadOptions {
    fn default() -> Self {
        QuadOptions { abs_tol: 1e-13, rel_tol: 1e-13, max_intervals: 2000 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Estimate {
    pub value: f64,
    pub error: f64,
    pub evaluations: usize,
}

#[derive(Debug, Clone, Copy)]
struct Panel {
    a: f64,
    b: f64,
    value: f64,
    error: f64,
}

fn kronrod15<F: FnMut(f64) -> f64>(f: &mut F, a: f64, b: f64) -> Panel {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = f(center);
    let mut kronrod = fc * WGK[7];
    let mut gauss = fc * WG[3];
    for (j, &x) in XGK.iter().take(7).enumerate() {
        let dx = half * x;
        let pair = f(center - dx) + f(center + dx);
        kronrod += WGK[j] * pair;
        if j % 2 == 1 {
            gauss += WG[j / 2] * pair;
        }
    }
    let value = kronrod * half;
    let diff = ((kronrod - gauss) * half).abs();
    // QUADPACK-style pessimistic error scaling.
    let error =
        if diff == 0.0 { 0.0 } else { diff * (200.0 * diff / value.abs().max(f64::MIN_POSITIVE)).powf(1.5).min(1.0) };
    let error = error.max(50.0 * f64::EPSILON * value.abs());
    Panel { a, b, value, error }
}

/// Adaptive integral of `f` over `[a, b]`.
///
/// The panel with the largest error estimate is bisected until the total
/// estimate is below `max(abs_tol, rel_tol·|I|)`.
pub fn integrate<F: FnMut(f64) -> f64>(mut f: F, a: f64, b: f64, opts: &QuadOptions) -> Result<Estimate> {
    if a == b {
        return Ok(Estimate { value: 0.0, error: 0.0, evaluations: 0 });
    }
    if !(a.is_finite() && b.is_finite()) {
        return Err(Error::Invalid("integration limits must be finite"));
    }
    if a > b {
        let est = integrate(f, b, a, opts)?;
        return Ok(Estimate { value: -est.value, ..est });
    }
    let mut panels: Vec<Panel> = Vec::with_capacity(64);
    panels.push(kronrod15(&mut f, a, b));
    let mut evaluations = 15;
    loop {
        let (value, error, magnitude) =
            panels.iter().fold((0.0, 0.0, 0.0), |(v, e, m), p| (v + p.value, e + p.error, m + p.value.abs()));
        if !value.is_finite() {
            return Err(Error::Quadrature { estimate: value });
        }
        // Below the rounding floor of the panel sums nothing more is gained.
        let floor = 100.0 * f64::EPSILON * magnitude;
        if error <= opts.abs_tol.max(opts.rel_tol * value.abs()).max(floor) {
            return Ok(Estimate { value, error, evaluations });
        }
        if panels.len() >= opts.max_intervals {
            return Err(Error::Quadrature { estimate: error });
        }
        let worst =
            panels.iter().enumerate().max_by(|x, y| x.1.error.total_cmp(&y.1.error)).map(|(i, _)| i).unwrap_or(0);
        let p = panels.swap_remove(worst);
        let mid = 0.5 * (p.a + p.b);
        if mid <= p.a || mid >= p.b {
            // Panel cannot be split further in floating point.
            return Ok(Estimate { value, error, evaluations });
        }
        panels.push(kronrod15(&mut f, p.a, mid));
        panels.push(kronrod15(&mut f, mid, p.b));
        evaluations += 30;
    }
}

/// Fixed 5-point Gauss–Legendre rule on `[a, b]`, exact for degree 9.
pub fn gauss_legendre5<F: FnMut(f64) -> f64>(mut f: F, a: f64, b: f64) -> f64 {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    GL5_NODES.iter().zip(GL5_WEIGHTS.iter()).map(|(&x, &w)| w * f(center + half * x)).sum::<f64>() * half
}

#[cfg(test)]
mod tests {
    use super::*;
    use core::f64::consts::PI;

    #[test]
    fn polynomial_is_exact() {
        let est = integrate(|x| x.powi(6) - 3.0 * x, 0.0, 2.0, &QuadOptions::default()).unwrap();
        assert!((est.value - (128.0 / 7.0 - 6.0)).abs() < 1e-13);
        let gl = gauss_legendre5(|x| x.powi(9), 0.0, 1.0);
        assert!((gl - 0.1).abs() < 1e-15);
    }

    #[test]
    fn adapts_to_a_peak() {
        let f = |x: f64| 1.0 / (1e-4 + x * x);
        let est = integrate(f, -1.0, 1.0, &QuadOptions::default()).unwrap();
        let exact = 2.0 * (1.0f64 / 1e-2).atan() / 1e-2;
        assert!((est.value - exact).abs() < 1e-10 * exact);
    }

    #[test]
    fn kink_is_resolved() {
        let est = integrate(|x: f64| x.abs(), -1.0, 2.0, &QuadOptions::default()).unwrap();
        assert!((est.value - 2.5).abs() < 1e-12);
        let est = integrate(|x: f64| x.sin(), 0.0, PI, &QuadOptions::default()).unwrap();
        assert!((est.value - 2.0).abs() < 1e-14);
    }

    #[test]
    fn reversed_limits_flip_sign() {
        let est = integrate(|x| x * x, 1.0, 0.0, &QuadOptions::default()).unwrap();
        assert!((est.value + 1.0 / 3.0).abs() < 1e-15);
    }
}
