use alloc::vec::Vec;
use core::f64::consts::PI;

#[allow(unused_imports)]
use num_traits::Float;

use super::SupportBody;
use crate::{Error, Result};

/// One plane-wave term `c·cos(w·p) + s·sin(w·p)` of a vector field.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PlaneWave {
    pub wave: [f64; 2],
    pub cos: [f64; 2],
    pub sin: [f64; 2],
}

/// Deformation field `V(p) = offset + linear·p + Σ waves`.
///
/// The affine part covers translations and dilations; the plane waves are a
/// truncated Fourier series in the position `p = (x, y)`.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct VectorField {
    pub offset: [f64; 2],
    pub linear: [[f64; 2]; 2],
    pub waves: Vec<PlaneWave>,
}

impl VectorField {
    pub fn translation(v: [f64; 2]) -> Self {
        VectorField { offset: v, ..Default::default() }
    }

    pub fn identity() -> Self {
        VectorField { linear: [[1.0, 0.0], [0.0, 1.0]], ..Default::default() }
    }

    pub fn eval(&self, p: [f64; 2]) -> [f64; 2] {
        let mut v = [
            self.offset[0] + self.linear[0][0] * p[0] + self.linear[0][1] * p[1],
            self.offset[1] + self.linear[1][0] * p[0] + self.linear[1][1] * p[1],
        ];
        for w in &self.waves {
            let (s, c) = (w.wave[0] * p[0] + w.wave[1] * p[1]).sin_cos();
            for (i, vi) in v.iter_mut().enumerate() {
                *vi += w.cos[i] * c + w.sin[i] * s;
            }
        }
        v
    }

    /// Jacobian `∂V_i/∂p_j`.
    pub fn jacobian(&self, p: [f64; 2]) -> [[f64; 2]; 2] {
        let mut jac = self.linear;
        for w in &self.waves {
            let (s, c) = (w.wave[0] * p[0] + w.wave[1] * p[1]).sin_cos();
            for (i, row) in jac.iter_mut().enumerate() {
                let d = -w.cos[i] * s + w.sin[i] * c;
                row[0] += d * w.wave[0];
                row[1] += d * w.wave[1];
            }
        }
        jac
    }

    /// Second derivatives `∂²V_i/∂p_j∂p_l`.
    pub fn hessian(&self, p: [f64; 2]) -> [[[f64; 2]; 2]; 2] {
        let mut hess = [[[0.0; 2]; 2]; 2];
        for w in &self.waves {
            let (s, c) = (w.wave[0] * p[0] + w.wave[1] * p[1]).sin_cos();
            for (i, block) in hess.iter_mut().enumerate() {
                let d = -(w.cos[i] * c + w.sin[i] * s);
                for (j, row) in block.iter_mut().enumerate() {
                    for (l, entry) in row.iter_mut().enumerate() {
                        *entry += d * w.wave[j] * w.wave[l];
                    }
                }
            }
        }
        hess
    }
}

/// First variations `dA`, `dP`, `dE` along a deformation field.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ShapeDerivatives {
    pub area: f64,
    pub perimeter: f64,
    pub energy: f64,
}

/// Shape derivatives of a strictly convex body:
///
/// `dA = ∫⟨V,n⟩ds`, `dP = ∫k⟨V,n⟩ds`, `dE = −∫(k_ss + ½k³)⟨V,n⟩ds`.
///
/// With `k = 1/φ` and `ds = φ dt`, `k_ss = −φ''/φ⁴ + 3φ'²/φ⁵` exactly from
/// the Fourier coefficients of `φ`.
pub fn shape_derivatives(body: &SupportBody, field: &VectorField, nodes: usize) -> Result<ShapeDerivatives> {
    if nodes < 16 || 2 * body.order() as usize >= nodes {
        return Err(Error::Invalid("quadrature grid too coarse for the harmonics"));
    }
    let phi_series = body.radius_series();
    let dt = 2.0 * PI / nodes as f64;
    let (mut da, mut dp, mut de) = (0.0, 0.0, 0.0);
    for i in 0..nodes {
        let t = i as f64 * dt;
        let phi = phi_series.eval(t);
        if phi <= 0.0 {
            return Err(Error::NotStrictlyConvex { min_phi: phi });
        }
        let dphi = phi_series.derivative(t, 1);
        let d2phi = phi_series.derivative(t, 2);
        let k = 1.0 / phi;
        let k_ss = -d2phi / phi.powi(4) + 3.0 * dphi * dphi / phi.powi(5);

        let v = field.eval(body.position(t));
        let (s, c) = t.sin_cos();
        let vn = v[0] * c + v[1] * s;

        da += vn * phi;
        dp += vn;
        de -= (k_ss + 0.5 * k * k * k) * vn * phi;
    }
    Ok(ShapeDerivatives { area: da * dt, perimeter: dp * dt, energy: de * dt })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{Harmonic, DEFAULT_NODES};

    #[test]
    fn translation_is_invisible() {
        let body = SupportBody::new(1.0, [Harmonic::new(3, 0.05, 0.0), Harmonic::new(2, 0.02, 0.03)]).unwrap();
        let d = shape_derivatives(&body, &VectorField::translation([0.7, -1.3]), DEFAULT_NODES).unwrap();
        assert!(d.area.abs() < 1e-9 && d.perimeter.abs() < 1e-9 && d.energy.abs() < 1e-9, "{d:?}");
    }

    #[test]
    fn dilation_of_unit_disk() {
        let d = shape_derivatives(&SupportBody::disk(1.0), &VectorField::identity(), DEFAULT_NODES).unwrap();
        assert!((d.area - 2.0 * PI).abs() < 1e-12);
        assert!((d.perimeter - 2.0 * PI).abs() < 1e-12);
        assert!((d.energy + PI).abs() < 1e-12);
    }

    #[test]
    fn field_derivatives_match_differences() {
        let field = VectorField {
            offset: [0.1, 0.0],
            linear: [[0.2, -0.1], [0.3, 0.0]],
            waves: alloc::vec![PlaneWave { wave: [1.3, -0.7], cos: [0.4, 0.1], sin: [-0.2, 0.5] }],
        };
        let p = [0.3, -0.8];
        let e = 1e-6;
        let jac = field.jacobian(p);
        let hess = field.hessian(p);
        for j in 0..2 {
            let mut up = p;
            let mut down = p;
            up[j] += e;
            down[j] -= e;
            let (vu, vd) = (field.eval(up), field.eval(down));
            let (ju, jd) = (field.jacobian(up), field.jacobian(down));
            for i in 0..2 {
                assert!(((vu[i] - vd[i]) / (2.0 * e) - jac[i][j]).abs() < 1e-8);
                for l in 0..2 {
                    assert!(((ju[i][l] - jd[i][l]) / (2.0 * e) - hess[i][l][j]).abs() < 1e-8);
                }
            }
        }
    }
}
