//! Levenberg–Marquardt for square two-dimensional systems.

#[allow(unused_imports)]
use num_traits::Float;

use crate::Result;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LmOptions {
    pub tol: f64,
    pub max_iterations: usize,
    pub initial_damping: f64,
}

impl Default for LmOptions {
    fn default() -> Self {
        LmOptions { tol: 1e-10, max_iterations: 200, initial_damping: 1e-3 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LmReport {
    pub x: [f64; 2],
    pub residual: [f64; 2],
    pub norm: f64,
    pub iterations: usize,
    pub converged: bool,
}

fn norm(r: [f64; 2]) -> f64 {
    r[0].hypot(r[1])
}

fn ok_residual(r: &Result<[f64; 2]>) -> Option<[f64; 2]> {
    match r {
        Ok(v) if v[0].is_finite() && v[1].is_finite() => Some(*v),
        _ => None,
    }
}

/// Minimizes `‖F(x)‖` from `x0`. Failed or non-finite evaluations count as
/// rejected steps. The Jacobian is a forward difference with step
/// `1e-7·max(|x_j|, 1)`.
pub fn solve(f: impl Fn([f64; 2]) -> Result<[f64; 2]>, x0: [f64; 2], opts: &LmOptions) -> Option<LmReport> {
    let mut x = x0;
    let mut r = ok_residual(&f(x))?;
    let mut n = norm(r);
    let mut damping = opts.initial_damping;
    let mut iterations = 0;

    while n > opts.tol && iterations < opts.max_iterations {
        iterations += 1;
        let mut jac = [[0.0; 2]; 2];
        let mut jac_ok = true;
        for j in 0..2 {
            let step = 1e-7 * x[j].abs().max(1.0);
            let mut xp = x;
            xp[j] += step;
            match ok_residual(&f(xp)) {
                Some(rp) => {
                    jac[0][j] = (rp[0] - r[0]) / step;
                    jac[1][j] = (rp[1] - r[1]) / step;
                }
                None => {
                    // Difference backwards when the forward point is outside
                    // the admissible region.
                    let mut xm = x;
                    xm[j] -= step;
                    match ok_residual(&f(xm)) {
                        Some(rm) => {
                            jac[0][j] = (r[0] - rm[0]) / step;
                            jac[1][j] = (r[1] - rm[1]) / step;
                        }
                        None => jac_ok = false,
                    }
                }
            }
        }
        if !jac_ok {
            break;
        }

        // Normal equations (JᵀJ + λ diag(JᵀJ)) δ = −Jᵀr.
        let a = [
            [jac[0][0] * jac[0][0] + jac[1][0] * jac[1][0], jac[0][0] * jac[0][1] + jac[1][0] * jac[1][1]],
            [0.0, jac[0][1] * jac[0][1] + jac[1][1] * jac[1][1]],
        ];
        let g = [-(jac[0][0] * r[0] + jac[1][0] * r[1]), -(jac[0][1] * r[0] + jac[1][1] * r[1])];

        let mut accepted = false;
        while damping < 1e16 {
            let a00 = a[0][0] * (1.0 + damping) + 1e-300;
            let a11 = a[1][1] * (1.0 + damping) + 1e-300;
            let a01 = a[0][1];
            let det = a00 * a11 - a01 * a01;
            if det == 0.0 || !det.is_finite() {
                damping *= 10.0;
                continue;
            }
            let dx = [(a11 * g[0] - a01 * g[1]) / det, (a00 * g[1] - a01 * g[0]) / det];
            let trial = [x[0] + dx[0], x[1] + dx[1]];
            if let Some(rt) = ok_residual(&f(trial)) {
                let nt = norm(rt);
                if nt < n {
                    x = trial;
                    r = rt;
                    n = nt;
                    damping = (damping / 10.0).max(1e-12);
                    accepted = true;
                    break;
                }
            }
            damping *= 10.0;
        }
        if !accepted {
            break;
        }
    }

    Some(LmReport { x, residual: r, norm: n, iterations, converged: n <= opts.tol })
}
