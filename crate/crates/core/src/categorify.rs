//! Categorifiability of the rank-two families and of `R_{p,r}`, `T_k`.
//!
//! `R_m` and `R_{p,r}` are decided relative to a [`FieldClass`]; `S_k`,
//! `T_k` and `S_{a,b}` are decided over some field of characteristic zero.
//! For `R_{p,r}` the field is assumed to contain a primitive `p`-th root of
//! unity; this cannot be checked on a symbolic field.

use serde::{Deserialize, Serialize};

use crate::arith;
use crate::brauer::{quaternion_is_division, CyclicSymbol, QuaternionSymbol};
use crate::descent::local_division_symbol;
use crate::error::{invalid, Error, Result};
use crate::field::FieldClass;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Answer {
    Yes,
    No,
}

/// One categorification, or the parameters certifying that one exists.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub quaternion: Option<QuaternionSymbol>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cyclic: Option<CyclicSymbol>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub omega_class: Option<u64>,
    /// `+1` for `Vec_{Z/2}`, `-1` for `Vec_{Z/2}^ω`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sign: Option<i8>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub answer: Answer,
    pub witnesses: Vec<Witness>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub obstruction: Option<String>,
    /// The classification statement the verdict rests on.
    pub paper_ref: String,
}

impl Verdict {
    fn yes(witnesses: Vec<Witness>, reference: &str) -> Self {
        Verdict { answer: Answer::Yes, witnesses, obstruction: None, paper_ref: reference.into() }
    }

    fn no(obstruction: impl Into<String>, reference: &str) -> Self {
        Verdict { answer: Answer::No, witnesses: Vec::new(), obstruction: Some(obstruction.into()), paper_ref: reference.into() }
    }

    pub fn is_yes(&self) -> bool {
        self.answer == Answer::Yes
    }
}

const REF_R_M: &str = "categorifications of R_m are forms of Vec_{Z/2}^{±} with End(X) a central division algebra in Br_2(K) of dimension m; m = 4^n; over a number field or R exactly m = 1 or m = 4; R_{4^n} is categorifiable over C(a_1..a_n, b_1..b_n)";
const REF_R_PR: &str = "categorifications of R_{p,r} are forms of Vec_{Z/p}^ω with End(X_1) a central division algebra of dimension r^2 and period dividing p; r = p^n; over a number field exactly r = 1 or r = p; R_{p,p^n} is categorifiable over C(a_1..a_n, b_1..b_n)";
const REF_S_K: &str = "S_k is categorifiable over a field of characteristic zero if and only if k+1 is a prime power";
const REF_T_K: &str = "T_k is categorifiable if and only if 4k-1 is an odd power of a prime";
const REF_S_AB: &str = "S_{a,b} is categorifiable if and only if a = b = 1 or a = p^{2m}(p^n - 1), b = p^m(p^n - 2) for a prime p, m >= 0, n >= 1";

const BRAUER_DIMENSION: &str = "the dimension of a central division algebra and its order in the Brauer group have the same prime factors";

fn power_exponent(x: u64, base: u64) -> Option<u32> {
    let mut e = 0;
    let mut rest = x;
    while rest > 1 {
        if !rest.is_multiple_of(base) {
            return None;
        }
        rest /= base;
        e += 1;
    }
    Some(e)
}

fn omega_witnesses(count: u64) -> Vec<Witness> {
    (0..count).map(|w| Witness { omega_class: Some(w), ..Witness::default() }).collect()
}

/// Is `R_m` (`X^2 = m 1`) categorifiable over `K`?
pub fn categorify_r_m(m: u64, field: &FieldClass) -> Result<Verdict> {
    if m == 0 {
        return invalid("R_m requires m >= 1");
    }
    let Some(n) = power_exponent(m, 4) else {
        return Ok(Verdict::no(
            format!("{m} is not a power of 4: End(X) has dimension m = ℓ^2 and order 2 in Br(K), and {BRAUER_DIMENSION}"),
            REF_R_M,
        ));
    };
    if n == 0 {
        let mut witnesses = vec![Witness { sign: Some(1), omega_class: Some(0), note: Some("Vec_{Z/2}(K)".into()), ..Witness::default() }];
        if field.characteristic() != 2 {
            witnesses.push(Witness {
                sign: Some(-1),
                omega_class: Some(1),
                note: Some("Vec_{Z/2}^ω(K)".into()),
                ..Witness::default()
            });
        }
        return Ok(Verdict::yes(witnesses, REF_R_M));
    }
    let signs = |q: QuaternionSymbol, note: &str| -> Vec<Witness> {
        [1i8, -1]
            .into_iter()
            .map(|s| Witness {
                n: Some(1),
                quaternion: Some(q),
                sign: Some(s),
                omega_class: Some(u64::from(s < 0)),
                note: Some(note.to_string()),
                ..Witness::default()
            })
            .collect()
    };
    match field {
        FieldClass::Real | FieldClass::RationalQ if n == 1 => {
            let q = QuaternionSymbol::from_integers(-1, -1)?;
            debug_assert!(quaternion_is_division(&q)?);
            let note = if *field == FieldClass::Real { "End(X) = quaternions" } else { "End(X) = Q_{-1,-1}, ramified at 2 and ∞" };
            Ok(Verdict::yes(signs(q, note), REF_R_M))
        }
        FieldClass::Padic { p } if n == 1 => {
            let q = local_division_symbol(*p)?;
            Ok(Verdict::yes(signs(q, "End(X) = the quaternion division algebra over Q_p"), REF_R_M))
        }
        FieldClass::Real | FieldClass::RationalQ | FieldClass::Padic { .. } => Ok(Verdict::no(
            format!("m = 4^{n} with n >= 2: every element of order 2 in Br(K) is represented by a quaternion algebra, so End(X) has dimension at most 4"),
            REF_R_M,
        )),
        FieldClass::Finite { .. } | FieldClass::AlgClosedChar0 => Ok(Verdict::no(
            format!("Br(K) = 0, so End(X) = K and m = 1, not {m}"),
            REF_R_M,
        )),
        FieldClass::RationalFunctionOverC { pairs } => function_field(n, *pairs, REF_R_M, |i| {
            format!("End(X) = Q_{{a_1,b_1}} ⊗ ... ⊗ Q_{{a_{i},b_{i}}} over C(a_1..a_{i}, b_1..b_{i})")
        }),
    }
}

/// `C(a_1, .., a_k, b_1, .., b_k)` with `k = pairs` and a target exponent `n`.
fn function_field(n: u32, pairs: u32, reference: &str, note: impl Fn(u32) -> String) -> Result<Verdict> {
    if pairs == 0 {
        return Ok(Verdict::no("C is algebraically closed, so Br(C) = 0".to_string(), reference));
    }
    if u64::from(pairs) < u64::from(n) {
        return Err(Error::Unsupported(format!(
            "index bounds in Br(K) for K = C(a_1..a_{pairs}, b_1..b_{pairs}) and exponent {n}"
        )));
    }
    Ok(Verdict::yes(vec![Witness { n: Some(n), note: Some(note(n)), ..Witness::default() }], reference))
}

/// Is `R_{p,r}` categorifiable over `K`, assumed to contain `ζ_p`?
pub fn categorify_r_pr(p: u64, r: u64, field: &FieldClass) -> Result<Verdict> {
    if !arith::is_prime(p) {
        return invalid(format!("R_(p,r) requires p prime, got {p}"));
    }
    if r == 0 {
        return invalid("R_(p,r) requires r >= 1");
    }
    if p == 2 {
        // R_{2,r} = R_{r^2}
        let m = r.checked_mul(r).ok_or_else(|| Error::InvalidInput(format!("r = {r} too large")))?;
        return categorify_r_m(m, field);
    }
    let Some(n) = power_exponent(r, p) else {
        return Ok(Verdict::no(
            format!("{r} is not a power of {p}: End(X_1) has dimension r^2 and order dividing {p} in Br(K), and {BRAUER_DIMENSION}"),
            REF_R_PR,
        ));
    };
    if n == 0 {
        let count = if field.characteristic() == p || *field == FieldClass::Real { 1 } else { p };
        let mut witnesses = omega_witnesses(count);
        if count == 1 {
            witnesses[0].note = Some(if *field == FieldClass::Real {
                "ζ_p ∉ R: only ω = 0 has a real form".into()
            } else {
                "H^3(Z/p, K̄^×) = 0 in characteristic p".into()
            });
        }
        return Ok(Verdict::yes(witnesses, REF_R_PR));
    }
    match field {
        FieldClass::RationalQ | FieldClass::Padic { .. } if n == 1 => {
            let (cyclic, note) = match field {
                FieldClass::RationalQ => {
                    let (sym, ell) = cyclic_division_symbol(p)?;
                    (Some(sym), format!(
                        "Q_{{a,b,{p}}} over Q(ζ_{p}); b is not a {p}-th power mod {ell}, so the algebra is ramified above {ell}"
                    ))
                }
                _ => (None, format!("the cyclic division algebra of invariant 1/{p} over the local field")),
            };
            let witnesses = (0..p)
                .map(|w| Witness { p: Some(p), n: Some(1), cyclic, omega_class: Some(w), note: Some(note.clone()), ..Witness::default() })
                .collect();
            Ok(Verdict::yes(witnesses, REF_R_PR))
        }
        FieldClass::RationalQ | FieldClass::Padic { .. } => Ok(Verdict::no(
            format!("r = {p}^{n} with n >= 2: over a number field the period and index of a Brauer class agree, so End(X_1) has dimension at most {p}^2"),
            REF_R_PR,
        )),
        FieldClass::Real => Ok(Verdict::no(
            format!("Br(R) = Z/2 has no {p}-torsion, so End(X_1) = R and r = 1"),
            REF_R_PR,
        )),
        FieldClass::Finite { .. } | FieldClass::AlgClosedChar0 => Ok(Verdict::no(
            format!("Br(K) = 0, so End(X_1) = K and r = 1, not {r}"),
            REF_R_PR,
        )),
        FieldClass::RationalFunctionOverC { pairs } => function_field(n, *pairs, REF_R_PR, |i| {
            format!("End(X_1) = a tensor product of {i} cyclic algebras Q_{{a_j,b_j,{p}}} over C(a_1..a_{i}, b_1..b_{i})")
        }),
    }
}

/// `(ℓ, b)` with `ℓ ≡ 1 (mod p)` the least such prime and `b` the least
/// positive integer that is not a `p`-th power modulo `ℓ`.
fn cyclic_division_symbol(p: u64) -> Result<(CyclicSymbol, u64)> {
    let ell = (1..).map(|t| t * p + 1).find(|&l| arith::is_prime(l)).expect("Dirichlet");
    let b = (2..ell)
        .find(|&b| arith::pow_mod(b, (ell - 1) / p, ell) != 1)
        .expect("non-residue exists");
    let sym = CyclicSymbol::new((ell as i64).into(), (b as i64).into(), p)?;
    Ok((sym, ell))
}

/// Is `S_k` (`X^2 = k 1 + (k-1) X`) categorifiable?
pub fn categorify_s_k(k: u64) -> Result<Verdict> {
    if k == 0 {
        return invalid("S_k requires k >= 1");
    }
    let x = k.checked_add(1).ok_or_else(|| Error::InvalidInput("k too large".into()))?;
    match arith::prime_power(x)? {
        Some(w) => Ok(Verdict::yes(
            vec![Witness { p: Some(w.p), n: Some(w.n), note: Some(format!("Rep of the affine group of F_{x}")), ..Witness::default() }],
            REF_S_K,
        )),
        None => Ok(Verdict::no(
            format!("{x} is not a prime power: the group acting simply transitively on the other simple objects would have all non-identity elements of the same order"),
            REF_S_K,
        )),
    }
}

/// Is `T_k` categorifiable?
pub fn categorify_t_k(k: u64) -> Result<Verdict> {
    if k == 0 {
        return invalid("T_k requires k >= 1");
    }
    let x = k
        .checked_mul(4)
        .map(|v| v - 1)
        .ok_or_else(|| Error::InvalidInput("k too large".into()))?;
    match arith::odd_prime_power(x)? {
        Some(w) => Ok(Verdict::yes(vec![Witness { p: Some(w.p), n: Some(w.n), ..Witness::default() }], REF_T_K)),
        None => Ok(Verdict::no(format!("4k-1 = {x} is not an odd power of an odd prime"), REF_T_K)),
    }
}

/// Is `S_{a,b}` categorifiable? All `(p, m, n)` are returned, ordered by `p`, `m`, `n`.
pub fn categorify_s_ab(a: u64, b: u64) -> Result<Verdict> {
    if a == 0 {
        return invalid("S_{a,b} requires a >= 1");
    }
    if (a, b) == (1, 1) {
        return Ok(Verdict::yes(vec![Witness { note: Some("Yang–Lee".into()), ..Witness::default() }], REF_S_AB));
    }
    let witnesses: Vec<Witness> = s_ab_solutions(a, b)
        .into_iter()
        .map(|(p, m, n)| Witness { p: Some(p), m: Some(m), n: Some(n), ..Witness::default() })
        .collect();
    if witnesses.is_empty() {
        return Ok(Verdict::no(
            format!("no prime p and m >= 0, n >= 1 with {a} = p^(2m)(p^n - 1) and {b} = p^m(p^n - 2)"),
            REF_S_AB,
        ));
    }
    Ok(Verdict::yes(witnesses, REF_S_AB))
}

/// Solutions `(p, m, n)` of `a = p^{2m}(p^n - 1)`, `b = p^m(p^n - 2)`.
///
/// Since `p^n - 1 >= 1`, `p^{2m} <= a` and `p^n <= a + 1`, so every solution
/// is found among the primes dividing `a` or `a + 1`. As `p^n - 1` is prime
/// to `p`, `2m = v_p(a)` exactly, and then `p^n = a / p^{2m} + 1`. When
/// `m = 0` the prime divides `a + 1 = p^n` instead.
pub fn s_ab_solutions(a: u64, b: u64) -> Vec<(u64, u32, u32)> {
    let mut out = Vec::new();
    let mut candidates: Vec<(u64, u32)> = Vec::new();
    if let Some(a1) = a.checked_add(1) {
        if let Ok(Some(w)) = arith::prime_power(a1) {
            candidates.push((w.p, 0));
        }
    }
    for (p, v) in arith::factorize(a) {
        if v % 2 == 0 {
            candidates.push((p, v / 2));
        }
    }
    for (p, m) in candidates {
        let pm = p.pow(m);
        let Some(q) = (a / (pm * pm)).checked_add(1) else { continue };
        let Some(n) = power_exponent(q, p).filter(|&n| n >= 1) else { continue };
        if (pm as u128) * ((q - 2) as u128) == b as u128 {
            out.push((p, m, n));
        }
    }
    out.sort_unstable();
    out.dedup();
    out
}
