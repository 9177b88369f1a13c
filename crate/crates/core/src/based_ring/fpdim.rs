//! Frobenius–Perron dimensions.
//!
//! The Perron–Frobenius eigenvalue of a non-negative integer matrix is first
//! estimated by power iteration; when the estimate rounds to an integer `d`
//! and `det(A - d I) = 0` holds exactly, `d` is returned as an exact value.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::BasedRing;
use crate::error::{invalid, Result};

const RELATIVE_TOLERANCE: f64 = 1e-12;
const MAX_ITERATIONS: usize = 100_000;
const INTEGER_SNAP: f64 = 1e-6;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FpDim {
    Exact(u64),
    Approx { value: f64, error_bound: f64 },
}

impl FpDim {
    pub fn value(&self) -> f64 {
        match *self {
            FpDim::Exact(d) => d as f64,
            FpDim::Approx { value, .. } => value,
        }
    }

    pub fn exact(&self) -> Option<u64> {
        match *self {
            FpDim::Exact(d) => Some(d),
            FpDim::Approx { .. } => None,
        }
    }
}

/// Frobenius–Perron dimension of the basis element `b_i`.
pub fn fp_dim(ring: &BasedRing, i: usize) -> Result<FpDim> {
    if i >= ring.rank() {
        return invalid(format!("basis index {i} out of range for rank {}", ring.rank()));
    }
    Ok(perron_eigenvalue(&ring.fusion_matrix(i)))
}

/// Frobenius–Perron dimension of a non-negative combination `Σ c_i b_i`.
pub fn fp_dim_of_element(ring: &BasedRing, coefficients: &[BigUint]) -> Result<FpDim> {
    if coefficients.len() != ring.rank() {
        return invalid(format!(
            "element has {} coefficients, expected {}",
            coefficients.len(),
            ring.rank()
        ));
    }
    let r = ring.rank();
    let mut m = vec![vec![BigUint::zero(); r]; r];
    for (i, c) in coefficients.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
        for (j, row) in m.iter_mut().enumerate() {
            for (k, slot) in row.iter_mut().enumerate() {
                *slot += c * ring.coefficient(i, j, k);
            }
        }
    }
    Ok(perron_eigenvalue(&m))
}

/// Perron–Frobenius eigenvalue of a square non-negative integer matrix.
pub fn perron_eigenvalue(matrix: &[Vec<BigUint>]) -> FpDim {
    let n = matrix.len();
    if n == 0 {
        return FpDim::Exact(0);
    }
    let a: Vec<Vec<f64>> = matrix
        .iter()
        .map(|row| row.iter().map(|x| x.to_f64().unwrap_or(f64::INFINITY)).collect())
        .collect();
    let (lambda, vector) = power_iteration(&a);
    let candidate = lambda.round();
    if candidate >= 0.0 && (lambda - candidate).abs() <= INTEGER_SNAP * lambda.abs().max(1.0) {
        let d = candidate as u64;
        if is_eigenvalue(matrix, d) {
            return FpDim::Exact(d);
        }
    }
    FpDim::Approx { value: lambda, error_bound: collatz_wielandt_width(&a, &vector, lambda) }
}

/// Power iteration on `A + I`; the shift makes periodic matrices (such as
/// `[[0, 1], [m, 0]]`) converge without changing the dominant eigenvector.
fn power_iteration(a: &[Vec<f64>]) -> (f64, Vec<f64>) {
    let n = a.len();
    let mut x = vec![1.0; n];
    let mut lambda = 0.0;
    for _ in 0..MAX_ITERATIONS {
        let y: Vec<f64> = (0..n)
            .map(|i| x[i] + a[i].iter().zip(&x).map(|(aij, xj)| aij * xj).sum::<f64>())
            .collect();
        let norm = y.iter().fold(0.0f64, |m, v| m.max(v.abs()));
        if norm == 0.0 {
            return (0.0, x);
        }
        let next: Vec<f64> = y.iter().map(|v| v / norm).collect();
        // x is normalized to max-norm 1, so norm estimates the shifted eigenvalue
        let estimate = norm - 1.0;
        let delta = next.iter().zip(&x).fold(0.0f64, |m, (u, v)| m.max((u - v).abs()));
        x = next;
        let converged = (estimate - lambda).abs() <= RELATIVE_TOLERANCE * estimate.abs().max(1.0)
            && delta <= RELATIVE_TOLERANCE.sqrt();
        lambda = estimate;
        if converged {
            break;
        }
    }
    (lambda, x)
}

/// Width of the Collatz–Wielandt bracket `min (Ax)_i/x_i <= ρ <= max (Ax)_i/x_i`
/// around `lambda`, falling back to the residual when `x` has zero entries.
fn collatz_wielandt_width(a: &[Vec<f64>], x: &[f64], lambda: f64) -> f64 {
    let ax: Vec<f64> = a.iter().map(|row| row.iter().zip(x).map(|(u, v)| u * v).sum()).collect();
    if x.iter().all(|&v| v > 0.0) {
        let ratios = ax.iter().zip(x).map(|(u, v)| u / v);
        let (lo, hi) = ratios.fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), r| (lo.min(r), hi.max(r)));
        (hi - lambda).max(lambda - lo).max(0.0)
    } else {
        let norm = x.iter().fold(0.0f64, |m, v| m.max(v.abs()));
        ax.iter().zip(x).fold(0.0f64, |m, (u, v)| m.max((u - lambda * v).abs())) / norm
    }
}

/// Exact test `det(A - d I) = 0` by fraction-free Gaussian elimination.
fn is_eigenvalue(matrix: &[Vec<BigUint>], d: u64) -> bool {
    let n = matrix.len();
    let d = BigInt::from(d);
    let mut m: Vec<Vec<BigInt>> = matrix
        .iter()
        .enumerate()
        .map(|(i, row)| {
            row.iter()
                .enumerate()
                .map(|(j, x)| {
                    let v = BigInt::from(x.clone());
                    if i == j {
                        v - &d
                    } else {
                        v
                    }
                })
                .collect()
        })
        .collect();
    bareiss_is_singular(&mut m, n)
}

fn bareiss_is_singular(m: &mut [Vec<BigInt>], n: usize) -> bool {
    let mut prev = BigInt::from(1);
    for k in 0..n {
        let Some(pivot) = (k..n).find(|&i| !m[i][k].is_zero()) else {
            return true;
        };
        m.swap(k, pivot);
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                let (q, r) = v.div_rem(&prev);
                debug_assert!(r.is_zero() || r.abs().is_zero());
                m[i][j] = q;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    m[n - 1][n - 1].is_zero()
}
