//! Spectral radius `λ1(A_α)` by two independent routes.
//!
//! [`spectral_radius_jacobi`] diagonalises the dense matrix with classical
//! cyclic Jacobi rotations; [`spectral_radius_power`] runs power iteration on
//! `A_α + s·I` where `s` is the largest absolute row sum (`Δ` on the unit
//! α domain). The shift moves the spectrum into `[0, 2s]`, so the bipartite
//! `±λ1` pair at `α = 0` cannot make the iteration oscillate.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::alpha_matrix::AlphaMatrix;
use crate::{Error, Result};

pub const JACOBI_MAX_SWEEPS: usize = 100;
pub const JACOBI_REL_TOL: f64 = 1e-12;
pub const POWER_TOL: f64 = 1e-10;
pub const POWER_MAX_ITER: usize = 100_000;
/// Above this dimension the dispatcher prefers power iteration.
pub const JACOBI_MAX_DIM: usize = 200;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Jacobi,
    Power,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Jacobi => "jacobi",
            Method::Power => "power",
        })
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "jacobi" => Ok(Method::Jacobi),
            "power" => Ok(Method::Power),
            other => Err(Error::input(format!(
                "unknown method {other:?} (expected jacobi or power)"
            ))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SpectralResult {
    pub lambda1: f64,
    pub method: Method,
    /// Off-diagonal Frobenius norm for Jacobi; `‖A v − λ1 v‖₂` for power.
    pub residual: f64,
    /// Sweeps for Jacobi, matrix–vector products for power.
    pub iterations: usize,
}

/// Dispatches to `method`, or picks Jacobi for `n <= 200` and power
/// iteration above that when `method` is `None`.
pub fn spectral_radius(m: &AlphaMatrix, method: Option<Method>) -> Result<SpectralResult> {
    let method = method.unwrap_or(if m.n() <= JACOBI_MAX_DIM {
        Method::Jacobi
    } else {
        Method::Power
    });
    match method {
        Method::Jacobi => spectral_radius_jacobi(m),
        Method::Power => spectral_radius_power(m, POWER_TOL, POWER_MAX_ITER),
    }
}

pub fn spectral_radius_jacobi(m: &AlphaMatrix) -> Result<SpectralResult> {
    let (diag, residual, sweeps) = jacobi_diagonalize(m.n(), m.to_dense())?;
    let lambda1 = diag.into_iter().fold(f64::NEG_INFINITY, f64::max);
    Ok(SpectralResult {
        lambda1,
        method: Method::Jacobi,
        residual,
        iterations: sweeps,
    })
}

fn off_diagonal_norm(n: usize, a: &[f64]) -> f64 {
    let mut sum = 0.0;
    for i in 0..n {
        for j in i + 1..n {
            sum += a[i * n + j] * a[i * n + j];
        }
    }
    (2.0 * sum).sqrt()
}

/// Cyclic Jacobi on a dense symmetric row-major matrix. Returns the
/// diagonal after convergence, the final off-diagonal norm and the number
/// of sweeps performed.
fn jacobi_diagonalize(n: usize, mut a: Vec<f64>) -> Result<(Vec<f64>, f64, usize)> {
    let frobenius = a.iter().map(|x| x * x).sum::<f64>().sqrt();
    let threshold = JACOBI_REL_TOL * (1.0 + frobenius);

    let mut sweeps = 0;
    loop {
        let off = off_diagonal_norm(n, &a);
        if off <= threshold {
            let diag = (0..n).map(|i| a[i * n + i]).collect();
            return Ok((diag, off, sweeps));
        }
        if sweeps == JACOBI_MAX_SWEEPS {
            let estimate = (0..n)
                .map(|i| a[i * n + i])
                .fold(f64::NEG_INFINITY, f64::max);
            return Err(Error::NoConvergence {
                method: "jacobi",
                iterations: sweeps,
                estimate,
                residual: off,
            });
        }
        sweeps += 1;

        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
                let t = if theta.abs() > 1e150 {
                    0.5 / theta
                } else {
                    theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
                };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;

                // A <- A J, then A <- J^T A, with J the (p, q) plane rotation
                for k in 0..n {
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p * n + k];
                    let aqk = a[q * n + k];
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
            }
        }
    }
}

/// Power iteration on the shifted matrix with a Rayleigh-quotient estimate.
///
/// Stops once two successive estimates differ by at most `tol` and the
/// residual of the current vector is at most `10 * tol`.
pub fn spectral_radius_power(m: &AlphaMatrix, tol: f64, max_iter: usize) -> Result<SpectralResult> {
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::input(format!(
            "tolerance must be positive, got {tol}"
        )));
    }
    let n = m.n();
    let shift = (0..n)
        .map(|i| m.row(i).iter().map(|x| x.abs()).sum::<f64>())
        .fold(0.0, f64::max);
    if shift == 0.0 {
        return Ok(SpectralResult {
            lambda1: 0.0,
            method: Method::Power,
            residual: 0.0,
            iterations: 0,
        });
    }

    let mut v: Vec<f64> = (0..n)
        .map(|i| 1.0 + 1e-3 * ((i + 1) as f64).sin())
        .collect();
    normalize(&mut v);

    let mut previous = f64::NAN;
    let mut estimate = f64::NAN;
    let mut residual = f64::INFINITY;
    for iteration in 1..=max_iter {
        let w = m.matvec_unchecked(&v);
        estimate = dot(&v, &w);
        residual = w
            .iter()
            .zip(&v)
            .map(|(wi, vi)| (wi - estimate * vi).powi(2))
            .sum::<f64>()
            .sqrt();
        if (estimate - previous).abs() <= tol && residual <= 10.0 * tol {
            return Ok(SpectralResult {
                lambda1: estimate,
                method: Method::Power,
                residual,
                iterations: iteration,
            });
        }
        previous = estimate;
        v = w.iter().zip(&v).map(|(wi, vi)| wi + shift * vi).collect();
        normalize(&mut v);
    }
    Err(Error::NoConvergence {
        method: "power",
        iterations: max_iter,
        estimate,
        residual,
    })
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn normalize(v: &mut [f64]) {
    let norm = dot(v, v).sqrt();
    v.iter_mut().for_each(|x| *x /= norm);
}
