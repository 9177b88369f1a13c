//! The weak fusion rings `R_m`, `R_{p,r}`, `S_k`, `T_k` and `S_{a,b}`.

use num_bigint::BigUint;
use num_traits::Zero;

use super::BasedRing;
use crate::arith;
use crate::error::{invalid, Result};

fn rank2(a: u64, b: u64) -> BasedRing {
    // basis {1, X}, X* = X, X^2 = a*1 + b*X
    BasedRing::from_fn(2, 0, vec![0, 1], Some(vec!["1".into(), "X".into()]), |i, j, k| match (i, j) {
        (0, _) => BigUint::from(u8::from(j == k)),
        (_, 0) => BigUint::from(u8::from(i == k)),
        _ => BigUint::from(if k == 0 { a } else { b }),
    })
}

/// `R_m`: `X^2 = m * 1`, `X* = X`.
pub fn construct_r_m(m: u64) -> Result<BasedRing> {
    if m == 0 {
        return invalid("R_m requires m >= 1");
    }
    Ok(rank2(m, 0))
}

/// `S_k`: `X^2 = k * 1 + (k - 1) X`.
pub fn construct_s_k(k: u64) -> Result<BasedRing> {
    if k == 0 {
        return invalid("S_k requires k >= 1");
    }
    Ok(rank2(k, k - 1))
}

/// `S_{a,b}`: `X^2 = a * 1 + b X`.
pub fn construct_s_ab(a: u64, b: u64) -> Result<BasedRing> {
    if a == 0 {
        return invalid("S_{a,b} requires a >= 1");
    }
    Ok(rank2(a, b))
}

/// `R_{p,r}`: basis `1, X_1, ..., X_{p-1}` with `X_i* = X_{-i}`,
/// `X_i X_j = r X_{i+j}` for `i + j ≠ 0` and `X_i X_{-i} = r^2 * 1`.
pub fn construct_r_pr(p: u64, r: u64) -> Result<BasedRing> {
    if !arith::is_prime(p) {
        return invalid(format!("R_(p,r) requires p prime, got {p}"));
    }
    if r == 0 {
        return invalid("R_(p,r) requires r >= 1");
    }
    let rank = usize::try_from(p).map_err(|_| crate::Error::InvalidInput("p too large".into()))?;
    let involution = (0..rank).map(|i| (rank - i) % rank).collect();
    let labels = (0..rank)
        .map(|i| if i == 0 { "1".to_string() } else { format!("X{i}") })
        .collect();
    let r = BigUint::from(r);
    let r2 = &r * &r;
    Ok(BasedRing::from_fn(rank, 0, involution, Some(labels), |i, j, k| {
        if i == 0 || j == 0 {
            return BigUint::from(u8::from(i + j == k));
        }
        let sum = (i + j) % rank;
        match (sum == k, sum == 0) {
            (false, _) => BigUint::zero(),
            (true, true) => r2.clone(),
            (true, false) => r.clone(),
        }
    }))
}

/// `T_k`: basis `1, X, X*` with `X ⊗ X = (k-1) X ⊕ k X*` and
/// `X ⊗ X* = X* ⊗ X = (2k-1) 1 ⊕ (k-1)(X ⊕ X*)`.
pub fn construct_t_k(k: u64) -> Result<BasedRing> {
    if k == 0 {
        return invalid("T_k requires k >= 1");
    }
    let labels = vec!["1".to_string(), "X".to_string(), "X*".to_string()];
    Ok(BasedRing::from_fn(3, 0, vec![0, 2, 1], Some(labels), |i, j, k_| {
        let v = match (i, j) {
            (0, _) => u64::from(j == k_),
            (_, 0) => u64::from(i == k_),
            // X X or X* X*: (k-1) times itself, k times its dual
            (a, b) if a == b => {
                if k_ == a {
                    k - 1
                } else if k_ == 0 {
                    0
                } else {
                    k
                }
            }
            // X X* and X* X
            _ => {
                if k_ == 0 {
                    2 * k - 1
                } else {
                    k - 1
                }
            }
        };
        BigUint::from(v)
    }))
}
