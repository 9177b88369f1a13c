//! Number-theoretic primitives used by the decision procedures.
//!
//! All inputs are bounded by 64 bits. Primality is decided by Miller–Rabin
//! with a witness set that is deterministic on the whole `u64` range.

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};

/// `value = p^n` with `p` prime.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PrimePowerWitness {
    pub p: u64,
    pub n: u32,
}

/// `value = 2^m * r` with `r` odd.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TwoAdicSplit {
    pub m: u32,
    pub r: u64,
}

const MR_WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic primality test for 64-bit integers.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &MR_WITNESSES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &MR_WITNESSES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Largest `r` with `r^k <= x`.
pub fn integer_root(x: u64, k: u32) -> u64 {
    if k == 1 || x < 2 {
        return x;
    }
    let mut r = (x as f64).powf(1.0 / k as f64).round() as u64;
    // float estimate can be off by one in either direction
    while r > 0 && checked_pow(r, k).is_none_or(|v| v > x) {
        r -= 1;
    }
    while checked_pow(r + 1, k).is_some_and(|v| v <= x) {
        r += 1;
    }
    r
}

pub fn checked_pow(base: u64, exp: u32) -> Option<u64> {
    let mut acc: u64 = 1;
    for _ in 0..exp {
        acc = acc.checked_mul(base)?;
    }
    Some(acc)
}

/// Returns `(p, n)` with `x = p^n`, or `None` if `x` is not a prime power.
pub fn prime_power(x: u64) -> Result<Option<PrimePowerWitness>> {
    if x < 2 {
        return invalid(format!("prime_power requires x >= 2, got {x}"));
    }
    // x < 2^64 so the exponent is at most 63; the largest exponent wins.
    for n in (1..=63u32).rev() {
        let r = integer_root(x, n);
        if r >= 2 && checked_pow(r, n) == Some(x) && is_prime(r) {
            return Ok(Some(PrimePowerWitness { p: r, n }));
        }
    }
    Ok(None)
}

/// Prime power `p^n` with both `p` and `n` odd.
pub fn odd_prime_power(x: u64) -> Result<Option<PrimePowerWitness>> {
    Ok(prime_power(x)?.filter(|w| w.p % 2 == 1 && w.n % 2 == 1))
}

pub fn two_adic_split(x: u64) -> Result<TwoAdicSplit> {
    if x == 0 {
        return invalid("two_adic_split requires a positive integer");
    }
    let m = x.trailing_zeros();
    Ok(TwoAdicSplit { m, r: x >> m })
}

/// Prime factorization by trial division, stopping early once the cofactor is prime.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    if n < 2 {
        return out;
    }
    let mut d = 2u64;
    while n > 1 {
        if is_prime(n) {
            out.push((n, 1));
            break;
        }
        if d.saturating_mul(d) > n {
            out.push((n, 1));
            break;
        }
        if n.is_multiple_of(d) {
            let mut e = 0;
            while n.is_multiple_of(d) {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    // the early exit may emit a prime already collected; merge
    out.sort_unstable();
    let mut merged: Vec<(u64, u32)> = Vec::with_capacity(out.len());
    for (p, e) in out {
        match merged.last_mut() {
            Some((q, f)) if *q == p => *f += e,
            _ => merged.push((p, e)),
        }
    }
    merged
}

/// Primes of the form `2^(2^s) + 1`.
pub fn is_fermat_prime(p: u64) -> bool {
    if p < 3 || !is_prime(p) {
        return false;
    }
    let k = p - 1;
    if !k.is_power_of_two() {
        return false;
    }
    let exponent = k.trailing_zeros();
    exponent.is_power_of_two()
}

/// `n = 2^s * q` with `q` a product of distinct Fermat primes.
pub fn is_gauss_number(n: u64) -> bool {
    if n == 0 {
        return false;
    }
    let odd = n >> n.trailing_zeros();
    factorize(odd)
        .into_iter()
        .all(|(p, e)| e == 1 && is_fermat_prime(p))
}

pub fn euler_phi(n: u64) -> u64 {
    if n == 0 {
        return 0;
    }
    factorize(n)
        .into_iter()
        .map(|(p, e)| (p - 1) * p.pow(e - 1))
        .product()
}

pub fn mod_inverse(a: u64, m: u64) -> Option<u64> {
    let ext = (a as i128).extended_gcd(&(m as i128));
    if ext.gcd != 1 {
        return None;
    }
    Some(ext.x.rem_euclid(m as i128) as u64)
}

pub fn reduce_signed(a: i64, m: u64) -> u64 {
    (a as i128).rem_euclid(m as i128) as u64
}

/// Legendre symbol `(a | p)` for an odd prime `p`: 0, 1 or -1.
pub fn legendre(a: i64, p: u64) -> i8 {
    let a = reduce_signed(a, p);
    if a == 0 {
        return 0;
    }
    if pow_mod(a, (p - 1) / 2, p) == 1 {
        1
    } else {
        -1
    }
}

/// Whether `a` is a non-zero square modulo the prime `p`.
pub fn is_qr(a: i64, p: u64) -> Result<bool> {
    if !is_prime(p) {
        return invalid(format!("is_qr requires a prime modulus, got {p}"));
    }
    if p == 2 {
        return Ok(reduce_signed(a, 2) == 1);
    }
    Ok(legendre(a, p) == 1)
}

/// Square root homomorphism on the additive cyclic group `Z/r`, `r` odd:
/// `g -> g * (r + 1) / 2`, so that `2 * s(g) = g`.
pub fn sqrt_hom(g: u64, r: u64) -> Result<u64> {
    if r == 0 || r.is_multiple_of(2) {
        return invalid(format!(
            "square root homomorphism needs a group of odd order, got {r}"
        ));
    }
    Ok(mul_mod(g % r, r.div_ceil(2), r))
}

/// Square root homomorphism on a subgroup of odd order `r` inside `(Z/n)^x`:
/// `g -> g^((r + 1) / 2)`.
pub fn unit_sqrt_hom(g: u64, r: u64, n: u64) -> Result<u64> {
    if r == 0 || r.is_multiple_of(2) {
        return invalid(format!(
            "square root homomorphism needs a group of odd order, got {r}"
        ));
    }
    if pow_mod(g, r, n) != 1 % n {
        return invalid(format!("{g} does not have order dividing {r} modulo {n}"));
    }
    Ok(pow_mod(g, r.div_ceil(2), n))
}

/// Multiplicative order of a unit modulo `n`.
pub fn multiplicative_order(a: u64, n: u64) -> Option<u64> {
    if n < 2 || a.gcd(&n) != 1 {
        return None;
    }
    let phi = euler_phi(n);
    let mut order = phi;
    for (p, _) in factorize(phi) {
        while order.is_multiple_of(p) && pow_mod(a, order / p, n) == 1 {
            order /= p;
        }
    }
    Some(order)
}

/// Smallest primitive root modulo a prime.
pub fn primitive_root(p: u64) -> Result<u64> {
    if !is_prime(p) {
        return invalid(format!("primitive_root requires a prime, got {p}"));
    }
    if p == 2 {
        return Ok(1);
    }
    let factors = factorize(p - 1);
    (2..p)
        .find(|&g| factors.iter().all(|&(q, _)| pow_mod(g, (p - 1) / q, p) != 1))
        .ok_or_else(|| crate::Error::InvalidInput(format!("no primitive root mod {p}")))
}

/// Units of `Z/n`, ascending.
pub fn units(n: u64) -> Vec<u64> {
    (1..n.max(2)).filter(|a| a.gcd(&n) == 1).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_power_examples() {
        assert_eq!(prime_power(8).unwrap(), Some(PrimePowerWitness { p: 2, n: 3 }));
        assert_eq!(prime_power(6).unwrap(), None);
        assert_eq!(prime_power(343).unwrap(), Some(PrimePowerWitness { p: 7, n: 3 }));
        assert!(prime_power(1).is_err());
        assert!(prime_power(0).is_err());
    }

    #[test]
    fn prime_power_matches_trial_factorization() {
        // independent oracle: a prime power has exactly one prime divisor
        for x in 2..5000u64 {
            let mut primes = Vec::new();
            let mut m = x;
            let mut d = 2;
            while m > 1 {
                if m % d == 0 {
                    primes.push(d);
                    while m % d == 0 {
                        m /= d;
                    }
                }
                d += 1;
            }
            assert_eq!(prime_power(x).unwrap().is_some(), primes.len() == 1, "x={x}");
        }
    }

    #[test]
    fn odd_prime_power_examples() {
        assert_eq!(odd_prime_power(27).unwrap(), Some(PrimePowerWitness { p: 3, n: 3 }));
        assert_eq!(odd_prime_power(7).unwrap(), Some(PrimePowerWitness { p: 7, n: 1 }));
        assert_eq!(odd_prime_power(9).unwrap(), None);
        assert_eq!(odd_prime_power(8).unwrap(), None);
    }

    #[test]
    fn two_adic_examples() {
        assert_eq!(two_adic_split(12).unwrap(), TwoAdicSplit { m: 2, r: 3 });
        assert_eq!(two_adic_split(16).unwrap(), TwoAdicSplit { m: 4, r: 1 });
        assert_eq!(two_adic_split(6).unwrap(), TwoAdicSplit { m: 1, r: 3 });
        assert!(two_adic_split(0).is_err());
    }

    #[test]
    fn fermat_primes_known_list() {
        let known = [3u64, 5, 17, 257, 65537];
        for p in 2..70000u64 {
            assert_eq!(is_fermat_prime(p), known.contains(&p), "p={p}");
        }
        // 2^32 + 1 = 641 * 6700417
        assert!(!is_fermat_prime((1u64 << 32) + 1));
    }

    #[test]
    fn gauss_number_examples() {
        assert!(is_gauss_number(15));
        assert!(!is_gauss_number(9));
        assert!(is_gauss_number(1));
        assert!(is_gauss_number(2 * 3 * 5 * 17));
        assert!(!is_gauss_number(7));
    }

    #[test]
    fn quadratic_residue_examples() {
        assert!(is_qr(-1, 13).unwrap());
        assert!(!is_qr(-1, 7).unwrap());
        assert!(is_qr(-1, 2).unwrap());
        assert!(is_qr(-1, 12).is_err());
    }

    #[test]
    fn sqrt_hom_rejects_even_order() {
        assert!(sqrt_hom(1, 4).is_err());
        assert_eq!(sqrt_hom(1, 3).unwrap(), 2);
    }

    #[test]
    fn unit_sqrt_hom_in_squares_mod_7() {
        // squares mod 7 form the subgroup {1, 2, 4} of order 3
        for g in [1u64, 2, 4] {
            let s = unit_sqrt_hom(g, 3, 7).unwrap();
            assert_eq!(s * s % 7, g);
        }
        assert!(unit_sqrt_hom(3, 3, 7).is_err());
    }

    #[test]
    fn primality_spot_checks() {
        assert!(is_prime(2));
        assert!(is_prime(65537));
        assert!(is_prime(18446744073709551557));
        assert!(!is_prime(3215031751));
        assert!(!is_prime(1));
    }

    #[test]
    fn factorize_and_phi() {
        assert_eq!(factorize(360), vec![(2, 3), (3, 2), (5, 1)]);
        assert_eq!(euler_phi(360), 96);
        assert_eq!(euler_phi(1), 1);
        assert_eq!(factorize(2 * 1_000_000_007), vec![(2, 1), (1_000_000_007, 1)]);
    }

    #[test]
    fn primitive_roots() {
        assert_eq!(primitive_root(7).unwrap(), 3);
        assert_eq!(primitive_root(13).unwrap(), 2);
        assert_eq!(multiplicative_order(2, 7), Some(3));
    }
}
