//! Weak unital based rings of finite rank.
//!
//! A based ring is stored through its structure constants `N[i][j][k]`,
//! the coefficient of `b_k` in `b_i b_j`, together with the unit index and
//! the duality involution `i -> i*`.

mod families;
mod fpdim;
mod orbit;

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub use families::{construct_r_m, construct_r_pr, construct_s_ab, construct_s_k, construct_t_k};
pub use fpdim::{fp_dim, fp_dim_of_element, perron_eigenvalue, FpDim};
pub use orbit::{orbit_ring, orbit_ring_via_action, unit_subgroup_generated_by, BasisAction};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasedRing {
    rank: usize,
    unit: usize,
    involution: Vec<usize>,
    /// Flat `rank^3` tensor, index `(i * rank + j) * rank + k`.
    n: Vec<BigUint>,
    labels: Option<Vec<String>>,
}

impl BasedRing {
    /// Builds a ring from raw data, checking only shapes and index ranges.
    ///
    /// Axioms are checked separately by [`verify_based_ring`] so that invalid
    /// rings can still be represented and diagnosed.
    pub fn new(
        rank: usize,
        unit: usize,
        involution: Vec<usize>,
        n: Vec<Vec<Vec<BigUint>>>,
        labels: Option<Vec<String>>,
    ) -> Result<Self> {
        if rank == 0 {
            return Err(Error::Structure("rank must be positive".into()));
        }
        if unit >= rank {
            return Err(Error::Structure(format!("unit index {unit} out of range for rank {rank}")));
        }
        if involution.len() != rank {
            return Err(Error::Structure(format!(
                "involution has length {}, expected {rank}",
                involution.len()
            )));
        }
        if let Some(&bad) = involution.iter().find(|&&i| i >= rank) {
            return Err(Error::Structure(format!("involution maps to {bad}, out of range")));
        }
        if let Some(labels) = &labels {
            if labels.len() != rank {
                return Err(Error::Structure(format!(
                    "{} labels given for rank {rank}",
                    labels.len()
                )));
            }
        }
        if n.len() != rank {
            return Err(Error::Structure(format!("N has {} slices, expected {rank}", n.len())));
        }
        let mut flat = Vec::with_capacity(rank * rank * rank);
        for (i, slice) in n.into_iter().enumerate() {
            if slice.len() != rank {
                return Err(Error::Structure(format!("N[{i}] has {} rows, expected {rank}", slice.len())));
            }
            for (j, row) in slice.into_iter().enumerate() {
                if row.len() != rank {
                    return Err(Error::Structure(format!(
                        "N[{i}][{j}] has {} entries, expected {rank}",
                        row.len()
                    )));
                }
                flat.extend(row);
            }
        }
        Ok(BasedRing { rank, unit, involution, n: flat, labels })
    }

    /// Builds a ring from a closure computing `N[i][j][k]`.
    pub(crate) fn from_fn(
        rank: usize,
        unit: usize,
        involution: Vec<usize>,
        labels: Option<Vec<String>>,
        mut f: impl FnMut(usize, usize, usize) -> BigUint,
    ) -> Self {
        let mut n = Vec::with_capacity(rank * rank * rank);
        for i in 0..rank {
            for j in 0..rank {
                for k in 0..rank {
                    n.push(f(i, j, k));
                }
            }
        }
        BasedRing { rank, unit, involution, n, labels }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn unit(&self) -> usize {
        self.unit
    }

    pub fn involution(&self) -> &[usize] {
        &self.involution
    }

    pub fn dual(&self, i: usize) -> usize {
        self.involution[i]
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, i: usize) -> String {
        match &self.labels {
            Some(labels) => labels[i].clone(),
            None if i == self.unit => "1".to_string(),
            None => format!("b{i}"),
        }
    }

    #[inline]
    pub fn coefficient(&self, i: usize, j: usize, k: usize) -> &BigUint {
        &self.n[(i * self.rank + j) * self.rank + k]
    }

    pub(crate) fn coefficient_mut(&mut self, i: usize, j: usize, k: usize) -> &mut BigUint {
        let r = self.rank;
        &mut self.n[(i * r + j) * r + k]
    }

    /// Sets one structure constant; meant for building deliberately broken test rings.
    pub fn with_coefficient(mut self, i: usize, j: usize, k: usize, value: impl Into<BigUint>) -> Self {
        *self.coefficient_mut(i, j, k) = value.into();
        self
    }

    /// Nested `N[i][j][k]` arrays.
    pub fn tensor(&self) -> Vec<Vec<Vec<BigUint>>> {
        (0..self.rank)
            .map(|i| {
                (0..self.rank)
                    .map(|j| (0..self.rank).map(|k| self.coefficient(i, j, k).clone()).collect())
                    .collect()
            })
            .collect()
    }

    /// Whether the structure constants agree, ignoring labels.
    pub fn same_tensor(&self, other: &BasedRing) -> bool {
        self.rank == other.rank
            && self.unit == other.unit
            && self.involution == other.involution
            && self.n == other.n
    }

    /// Fusion matrix of left multiplication: `(N_i)_{jk} = N[i][j][k]`.
    pub fn fusion_matrix(&self, i: usize) -> Vec<Vec<BigUint>> {
        (0..self.rank)
            .map(|j| (0..self.rank).map(|k| self.coefficient(i, j, k).clone()).collect())
            .collect()
    }

    /// Product of two elements given by coefficient vectors in the basis.
    pub fn multiply(&self, x: &[BigUint], y: &[BigUint]) -> Vec<BigUint> {
        let mut out = vec![BigUint::zero(); self.rank];
        for (i, xi) in x.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (j, yj) in y.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                let xy = xi * yj;
                for (k, slot) in out.iter_mut().enumerate() {
                    let c = self.coefficient(i, j, k);
                    if !c.is_zero() {
                        *slot += &xy * c;
                    }
                }
            }
        }
        out
    }

    /// Coefficient vector of the basis element `b_i`.
    pub fn basis_vector(&self, i: usize) -> Vec<BigUint> {
        let mut v = vec![BigUint::zero(); self.rank];
        v[i] = BigUint::one();
        v
    }
}

/// How strictly the unit coefficient of `b_i b_{i*}` is checked.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Strength {
    /// Weak unital based ring: the coefficient is positive.
    Weak,
    /// Unital based ring / fusion ring: the coefficient is exactly one.
    Strict,
}

/// One violated axiom, carrying the offending indices rendered with labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    LeftUnit { j: String, k: String, value: BigUint },
    RightUnit { j: String, k: String, value: BigUint },
    NotAnInvolution { i: String, image: String },
    UnitNotSelfDual { unit_dual: String },
    AntiInvolution { i: String, j: String, k: String, lhs: BigUint, rhs: BigUint },
    Associativity { i: String, j: String, k: String, l: String, lhs: BigUint, rhs: BigUint },
    UnitCoefficientNonzero { i: String, j: String, value: BigUint },
    UnitCoefficientZero { i: String, dual: String },
    UnitCoefficientNotOne { i: String, dual: String, unit: String, value: BigUint },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::LeftUnit { j, k, value } => {
                write!(f, "left unit: N[1][{j}][{k}]={value}, expected {}", u8::from(j == k))
            }
            Violation::RightUnit { j, k, value } => {
                write!(f, "right unit: N[{j}][1][{k}]={value}, expected {}", u8::from(j == k))
            }
            Violation::NotAnInvolution { i, image } => {
                write!(f, "involution: ({i}*)* = {image} ≠ {i}")
            }
            Violation::UnitNotSelfDual { unit_dual } => write!(f, "involution: 1* = {unit_dual} ≠ 1"),
            Violation::AntiInvolution { i, j, k, lhs, rhs } => write!(
                f,
                "anti-involution: N[{i}][{j}][{k}]={lhs} ≠ N[{j}*][{i}*][{k}*]={rhs}"
            ),
            Violation::Associativity { i, j, k, l, lhs, rhs } => write!(
                f,
                "associativity: coefficient of {l} in ({i}{j}){k} is {lhs}, in {i}({j}{k}) is {rhs}"
            ),
            Violation::UnitCoefficientNonzero { i, j, value } => write!(
                f,
                "unit coefficient: N[{i}][{j}][1]={value} ≠ 0 although {j} ≠ {i}*"
            ),
            Violation::UnitCoefficientZero { i, dual } => {
                write!(f, "unit coefficient: N[{i}][{dual}][1]=0, expected positive")
            }
            Violation::UnitCoefficientNotOne { i, dual, unit, value } => {
                write!(f, "N[{i}][{dual}][{unit}]={value}≠1")
            }
        }
    }
}

/// Every violated axiom; empty iff the ring is valid at the requested strength.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn messages(&self) -> Vec<String> {
        self.violations.iter().map(ToString::to_string).collect()
    }
}

impl Serialize for ValidationReport {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Wire {
            valid: bool,
            violations: Vec<String>,
        }
        Wire { valid: self.is_valid(), violations: self.messages() }.serialize(s)
    }
}

/// Checks the weak unital based ring axioms, plus the fusion-ring unit
/// coefficient condition when `strength` is [`Strength::Strict`].
pub fn verify_based_ring(ring: &BasedRing, strength: Strength) -> ValidationReport {
    let r = ring.rank;
    let u = ring.unit;
    let lab = |i: usize| ring.label(i);
    let mut violations = Vec::new();

    for j in 0..r {
        for k in 0..r {
            let expected = if j == k { BigUint::one() } else { BigUint::zero() };
            let left = ring.coefficient(u, j, k);
            if *left != expected {
                violations.push(Violation::LeftUnit { j: lab(j), k: lab(k), value: left.clone() });
            }
            let right = ring.coefficient(j, u, k);
            if *right != expected {
                violations.push(Violation::RightUnit { j: lab(j), k: lab(k), value: right.clone() });
            }
        }
    }

    let inv = &ring.involution;
    let mut involutive = true;
    for i in 0..r {
        if inv[inv[i]] != i {
            involutive = false;
            violations.push(Violation::NotAnInvolution { i: lab(i), image: lab(inv[inv[i]]) });
        }
    }
    if inv[u] != u {
        violations.push(Violation::UnitNotSelfDual { unit_dual: lab(inv[u]) });
    }
    if involutive {
        for i in 0..r {
            for j in 0..r {
                for k in 0..r {
                    let lhs = ring.coefficient(i, j, k);
                    let rhs = ring.coefficient(inv[j], inv[i], inv[k]);
                    if lhs != rhs {
                        violations.push(Violation::AntiInvolution {
                            i: lab(i),
                            j: lab(j),
                            k: lab(k),
                            lhs: lhs.clone(),
                            rhs: rhs.clone(),
                        });
                    }
                }
            }
        }
    }

    for (i, j, k, l, lhs, rhs) in associativity_defects(ring) {
        violations.push(Violation::Associativity { i: lab(i), j: lab(j), k: lab(k), l: lab(l), lhs, rhs });
    }

    for i in 0..r {
        for j in 0..r {
            let c = ring.coefficient(i, j, u);
            if j != inv[i] {
                if !c.is_zero() {
                    violations.push(Violation::UnitCoefficientNonzero { i: lab(i), j: lab(j), value: c.clone() });
                }
            } else if c.is_zero() {
                violations.push(Violation::UnitCoefficientZero { i: lab(i), dual: lab(j) });
            } else if strength == Strength::Strict && !c.is_one() {
                violations.push(Violation::UnitCoefficientNotOne {
                    i: lab(i),
                    dual: lab(j),
                    unit: lab(u),
                    value: c.clone(),
                });
            }
        }
    }

    ValidationReport { violations }
}

/// All `(i, j, k, l)` with `Σ_m N_ij^m N_mk^l ≠ Σ_m N_jk^m N_im^l`.
fn associativity_defects(ring: &BasedRing) -> Vec<(usize, usize, usize, usize, BigUint, BigUint)> {
    let r = ring.rank;
    let mut out = Vec::new();
    for i in 0..r {
        for j in 0..r {
            for k in 0..r {
                for l in 0..r {
                    let mut lhs = BigUint::zero();
                    let mut rhs = BigUint::zero();
                    for m in 0..r {
                        let a = ring.coefficient(i, j, m);
                        if !a.is_zero() {
                            let b = ring.coefficient(m, k, l);
                            if !b.is_zero() {
                                lhs += a * b;
                            }
                        }
                        let c = ring.coefficient(j, k, m);
                        if !c.is_zero() {
                            let d = ring.coefficient(i, m, l);
                            if !d.is_zero() {
                                rhs += c * d;
                            }
                        }
                    }
                    if lhs != rhs {
                        out.push((i, j, k, l, lhs, rhs));
                    }
                }
            }
        }
    }
    out
}

/// Structure constants in JSON: plain numbers when they fit in `u64`,
/// decimal strings beyond that.
#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum WireInt {
    Small(u64),
    Big(String),
}

impl From<&BigUint> for WireInt {
    fn from(v: &BigUint) -> Self {
        match v.to_u64() {
            Some(x) => WireInt::Small(x),
            None => WireInt::Big(v.to_str_radix(10)),
        }
    }
}

impl TryFrom<WireInt> for BigUint {
    type Error = String;
    fn try_from(w: WireInt) -> std::result::Result<Self, String> {
        match w {
            WireInt::Small(x) => Ok(BigUint::from(x)),
            WireInt::Big(s) => BigUint::parse_bytes(s.as_bytes(), 10)
                .ok_or_else(|| format!("'{s}' is not a non-negative integer")),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct WireRing {
    rank: usize,
    unit: usize,
    involution: Vec<usize>,
    #[serde(rename = "N")]
    n: Vec<Vec<Vec<WireInt>>>,
    labels: Option<Vec<String>>,
}

impl Serialize for BasedRing {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let n = (0..self.rank)
            .map(|i| {
                (0..self.rank)
                    .map(|j| (0..self.rank).map(|k| WireInt::from(self.coefficient(i, j, k))).collect())
                    .collect()
            })
            .collect();
        WireRing {
            rank: self.rank,
            unit: self.unit,
            involution: self.involution.clone(),
            n,
            labels: self.labels.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for BasedRing {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let w = WireRing::deserialize(d)?;
        let n = w
            .n
            .into_iter()
            .map(|slice| {
                slice
                    .into_iter()
                    .map(|row| row.into_iter().map(BigUint::try_from).collect::<std::result::Result<Vec<_>, _>>())
                    .collect::<std::result::Result<Vec<_>, _>>()
            })
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(D::Error::custom)?;
        BasedRing::new(w.rank, w.unit, w.involution, n, w.labels).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_ring_is_strict() {
        let ring = BasedRing::new(1, 0, vec![0], vec![vec![vec![BigUint::one()]]], None).unwrap();
        assert!(verify_based_ring(&ring, Strength::Strict).is_valid());
    }

    #[test]
    fn r4_weak_but_not_strict() {
        let ring = construct_r_m(4).unwrap();
        assert!(verify_based_ring(&ring, Strength::Weak).is_valid());
        let report = verify_based_ring(&ring, Strength::Strict);
        assert_eq!(report.messages(), vec!["N[X][X][1]=4≠1".to_string()]);
    }

    #[test]
    fn tampered_s3_stays_associative() {
        // Any rank-2 ring with basis {1, X} is Z[X]/(X^2 - bX - a): both
        // bracketings of XXX expand to aX + bX^2, so raising N[X][X][X] from
        // 2 to 3 yields S_{3,3}, which is still a valid weak based ring.
        let ring = construct_s_k(3).unwrap().with_coefficient(1, 1, 1, 3u32);
        let report = verify_based_ring(&ring, Strength::Weak);
        assert!(report.is_valid(), "{:?}", report.messages());
        assert!(ring.same_tensor(&construct_s_ab(3, 3).unwrap()));
    }

    #[test]
    fn tampered_t2_fails_associativity() {
        // T_2 with XX = X + 3X* (and dually X*X* = X* + 3X). The
        // coefficient of X in (XX)X* is 1 + 3*3 = 10, in X(XX*) it is 3 + 1 + 1 = 5.
        let ring = construct_t_k(2).unwrap().with_coefficient(1, 1, 2, 3u32).with_coefficient(2, 2, 1, 3u32);
        let report = verify_based_ring(&ring, Strength::Weak);
        assert!(!report.is_valid());
        assert!(report
            .violations
            .iter()
            .all(|v| matches!(v, Violation::Associativity { .. })));
    }

    #[test]
    fn dimension_mismatch_is_structural() {
        let err = BasedRing::new(2, 0, vec![0, 1], vec![vec![vec![BigUint::one()]]], None).unwrap_err();
        assert!(matches!(err, Error::Structure(_)));
        let err = BasedRing::new(2, 0, vec![0], vec![], None).unwrap_err();
        assert!(matches!(err, Error::Structure(_)));
    }

    #[test]
    fn json_round_trip_preserves_big_constants() {
        let big = BigUint::from(u64::MAX) * 7u32;
        let ring = construct_r_m(4).unwrap().with_coefficient(1, 1, 0, big.clone());
        let text = serde_json::to_string(&ring).unwrap();
        let back: BasedRing = serde_json::from_str(&text).unwrap();
        assert_eq!(back.coefficient(1, 1, 0), &big);
        assert_eq!(back, ring);
    }

    #[test]
    fn json_rejects_ragged_tensor() {
        let text = r#"{"rank":2,"unit":0,"involution":[0,1],"N":[[[1,0],[0,1]],[[0,1]]],"labels":null}"#;
        assert!(serde_json::from_str::<BasedRing>(text).is_err());
    }
}
