//! Brauer-group arithmetic: Hilbert symbols over `R` and `Q_p`, quaternion
//! algebras over `Q`, and the `n`-torsion `Br_n(K)` for the supported fields.
//!
//! Symbols only depend on square classes, so every rational is first reduced
//! to a sign and a square-free set of primes.

use std::fmt;
use std::str::FromStr;

use num_rational::Rational64;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::arith;
use crate::cohomology::CohomologyGroup;
use crate::error::{invalid, Error, Result};
use crate::field::FieldClass;

/// A place of `Q`. The real place sorts first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Place {
    Real,
    Finite(u64),
}

impl Place {
    pub fn finite(p: u64) -> Result<Self> {
        if !arith::is_prime(p) {
            return invalid(format!("a finite place needs a prime, got {p}"));
        }
        Ok(Place::Finite(p))
    }
}

impl fmt::Display for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Place::Real => write!(f, "real"),
            Place::Finite(p) => write!(f, "{p}"),
        }
    }
}

impl FromStr for Place {
    type Err = Error;

    /// `real`, or a prime `p`.
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "real" | "inf" => Ok(Place::Real),
            other => match other.parse::<u64>() {
                Ok(p) => Place::finite(p),
                Err(_) => invalid(format!("unrecognised place '{s}'")),
            },
        }
    }
}

/// JSON: `"real"` or `{"p": 5}`.
impl Serialize for Place {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct P {
            p: u64,
        }
        match *self {
            Place::Real => s.serialize_str("real"),
            Place::Finite(p) => P { p }.serialize(s),
        }
    }
}

impl<'de> Deserialize<'de> for Place {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Wire {
            Name(String),
            Prime { p: u64 },
        }
        let place = match Wire::deserialize(d)? {
            Wire::Name(s) => s.parse(),
            Wire::Prime { p } => Place::finite(p),
        };
        place.map_err(serde::de::Error::custom)
    }
}

/// Parses `n` or `n/d`.
pub fn parse_rational(s: &str) -> Result<Rational64> {
    let bad = || Error::InvalidInput(format!("'{s}' is not a rational number"));
    let t = s.trim();
    match t.split_once('/') {
        None => t.parse::<i64>().map(Rational64::from_integer).map_err(|_| bad()),
        Some((n, d)) => {
            let n = n.trim().parse::<i64>().map_err(|_| bad())?;
            let d = d.trim().parse::<i64>().map_err(|_| bad())?;
            if d == 0 {
                return Err(bad());
            }
            Ok(Rational64::new(n, d))
        }
    }
}

/// Serde for rationals as integers or `"n/d"` strings.
pub mod rational_serde {
    use num_rational::Rational64;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(q: &Rational64, s: S) -> Result<S::Ok, S::Error> {
        if q.is_integer() {
            s.serialize_i64(*q.numer())
        } else {
            s.serialize_str(&format!("{}/{}", q.numer(), q.denom()))
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational64, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Wire {
            Int(i64),
            Text(String),
        }
        match Wire::deserialize(d)? {
            Wire::Int(n) => Ok(Rational64::from_integer(n)),
            Wire::Text(t) => super::parse_rational(&t).map_err(serde::de::Error::custom),
        }
    }
}

/// Square class of a non-zero rational: a sign and a square-free set of primes.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SquareClass {
    pub negative: bool,
    pub primes: Vec<u64>,
}

impl SquareClass {
    pub fn of(q: Rational64) -> Result<Self> {
        if q.is_zero() {
            return invalid("square class of zero");
        }
        let mut primes: Vec<u64> = Vec::new();
        for part in [q.numer().unsigned_abs(), q.denom().unsigned_abs()] {
            for (p, e) in arith::factorize(part) {
                if e % 2 == 1 {
                    primes.push(p);
                }
            }
        }
        primes.sort_unstable();
        // a prime in both numerator and denominator with odd exponents cancels
        let mut reduced: Vec<u64> = Vec::new();
        for p in primes {
            if reduced.last() == Some(&p) {
                reduced.pop();
            } else {
                reduced.push(p);
            }
        }
        Ok(SquareClass { negative: q.is_negative(), primes: reduced })
    }

    /// `p`-adic valuation parity and the unit part `u` (as a signed integer).
    fn split_at(&self, p: u64) -> (u32, i128) {
        let alpha = u32::from(self.primes.contains(&p));
        let mut u: i128 = self.primes.iter().filter(|&&q| q != p).map(|&q| q as i128).product();
        if self.negative {
            u = -u;
        }
        (alpha, u)
    }
}

/// `(a, b)_v ∈ {+1, -1}`.
pub fn hilbert_symbol(a: Rational64, b: Rational64, v: Place) -> Result<i8> {
    if a.is_zero() || b.is_zero() {
        return invalid("Hilbert symbol arguments must be non-zero");
    }
    let p = match v {
        Place::Real => return Ok(if a.is_negative() && b.is_negative() { -1 } else { 1 }),
        Place::Finite(p) => p,
    };
    if !arith::is_prime(p) {
        return invalid(format!("{p} is not prime"));
    }
    let (alpha, u) = SquareClass::of(a)?.split_at(p);
    let (beta, w) = SquareClass::of(b)?.split_at(p);
    if p == 2 {
        let eps = |x: i128| (x.rem_euclid(4) == 3) as u32;
        let omega = |x: i128| matches!(x.rem_euclid(8), 3 | 5) as u32;
        let e = eps(u) * eps(w) + alpha * omega(w) + beta * omega(u);
        return Ok(if e % 2 == 0 { 1 } else { -1 });
    }
    let legendre = |x: i128| arith::legendre((x.rem_euclid(p as i128)) as i64, p);
    let mut sign: i8 = 1;
    if alpha * beta == 1 && p % 4 == 3 {
        sign = -sign;
    }
    if beta == 1 {
        sign *= legendre(u);
    }
    if alpha == 1 {
        sign *= legendre(w);
    }
    Ok(sign)
}

/// The quaternion algebra `(a, b)_Q`: `x^2 = a`, `y^2 = b`, `xy = -yx`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuaternionSymbol {
    #[serde(with = "rational_serde")]
    pub a: Rational64,
    #[serde(with = "rational_serde")]
    pub b: Rational64,
}

impl QuaternionSymbol {
    pub fn new(a: Rational64, b: Rational64) -> Result<Self> {
        if a.is_zero() || b.is_zero() {
            return invalid("quaternion symbol entries must be non-zero");
        }
        Ok(QuaternionSymbol { a, b })
    }

    pub fn from_integers(a: i64, b: i64) -> Result<Self> {
        Self::new(Rational64::from_integer(a), Rational64::from_integer(b))
    }
}

impl fmt::Display for QuaternionSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q_{{{},{}}}", self.a, self.b)
    }
}

/// The cyclic algebra `x^p = a`, `y^p = b`, `xy = ζ_p yx`. Symbolic only.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CyclicSymbol {
    #[serde(with = "rational_serde")]
    pub a: Rational64,
    #[serde(with = "rational_serde")]
    pub b: Rational64,
    pub p: u64,
}

impl CyclicSymbol {
    pub fn new(a: Rational64, b: Rational64, p: u64) -> Result<Self> {
        if a.is_zero() || b.is_zero() {
            return invalid("cyclic symbol entries must be non-zero");
        }
        if p == 2 || !arith::is_prime(p) {
            return invalid(format!("cyclic symbols need an odd prime, got {p}"));
        }
        Ok(CyclicSymbol { a, b, p })
    }
}

/// Places where `(a, b)_v = -1`, real place first, then primes ascending.
pub fn ramified_places(q: &QuaternionSymbol) -> Result<Vec<Place>> {
    let QuaternionSymbol { a, b } = *q;
    let mut candidates = vec![Place::Real, Place::Finite(2)];
    for x in [a, b] {
        for p in SquareClass::of(x)?.primes {
            if p != 2 {
                candidates.push(Place::Finite(p));
            }
        }
    }
    candidates.sort_unstable();
    candidates.dedup();
    let mut out = Vec::new();
    for v in candidates {
        if hilbert_symbol(a, b, v)? == -1 {
            out.push(v);
        }
    }
    Ok(out)
}

/// A quaternion algebra over `Q` is a division algebra iff it ramifies somewhere.
pub fn quaternion_is_division(q: &QuaternionSymbol) -> Result<bool> {
    Ok(!ramified_places(q)?.is_empty())
}

/// Equality of Brauer classes, by comparing ramification.
pub fn same_brauer_class(q1: &QuaternionSymbol, q2: &QuaternionSymbol) -> Result<bool> {
    Ok(ramified_places(q1)? == ramified_places(q2)?)
}

/// An abelian group: finite by invariant factors, or described in words.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum GroupDescriptor {
    Finite { invariant_factors: Vec<u64> },
    Infinite { description: String },
}

impl GroupDescriptor {
    pub fn trivial() -> Self {
        GroupDescriptor::Finite { invariant_factors: Vec::new() }
    }

    /// Number of elements, when finite.
    pub fn order(&self) -> Option<u64> {
        match self {
            GroupDescriptor::Finite { invariant_factors } => invariant_factors.iter().try_fold(1u64, |acc, &d| acc.checked_mul(d)),
            GroupDescriptor::Infinite { .. } => None,
        }
    }

    /// Normalises arbitrary cyclic orders into a divisibility chain.
    pub fn direct_sum_of_cyclic(orders: &[u64]) -> Result<Self> {
        let mut by_prime: Vec<(u64, Vec<u32>)> = Vec::new();
        for &n in orders.iter().filter(|&&n| n > 1) {
            for (p, e) in arith::factorize(n) {
                match by_prime.iter_mut().find(|(q, _)| *q == p) {
                    Some((_, exps)) => exps.push(e),
                    None => by_prime.push((p, vec![e])),
                }
            }
        }
        let chain = CohomologyGroup::from_primary_exponents(&by_prime)?;
        Ok(GroupDescriptor::Finite { invariant_factors: chain.invariant_factors })
    }
}

impl fmt::Display for GroupDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupDescriptor::Finite { invariant_factors } if invariant_factors.is_empty() => write!(f, "0"),
            GroupDescriptor::Finite { invariant_factors } => {
                let parts: Vec<String> = invariant_factors.iter().map(|d| format!("Z/{d}")).collect();
                write!(f, "{}", parts.join(" ⊕ "))
            }
            GroupDescriptor::Infinite { description } => write!(f, "{description}"),
        }
    }
}

/// `Br_n(K)`, the `n`-torsion of the Brauer group.
pub fn br_n(field: &FieldClass, n: u64) -> Result<GroupDescriptor> {
    if n < 2 {
        return invalid(format!("Br_n needs n >= 2, got {n}"));
    }
    match *field {
        FieldClass::Real => Ok(if n.is_multiple_of(2) {
            GroupDescriptor::Finite { invariant_factors: vec![2] }
        } else {
            GroupDescriptor::trivial()
        }),
        FieldClass::Padic { .. } => Ok(GroupDescriptor::Finite { invariant_factors: vec![n] }),
        FieldClass::Finite { .. } | FieldClass::AlgClosedChar0 => Ok(GroupDescriptor::trivial()),
        FieldClass::RationalQ => Ok(GroupDescriptor::Infinite {
            description: format!(
                "Br_{n}(Q): local invariants in (1/{n})Z/Z at the primes{}, almost all zero, with sum zero",
                if n.is_multiple_of(2) { " and in (1/2)Z/Z at the real place" } else { ", zero at the real place" }
            ),
        }),
        FieldClass::RationalFunctionOverC { .. } => Err(Error::Unsupported(format!(
            "Br_{n} of {field} is not computed"
        ))),
    }
}

/// `⊕_j Br_{n_j}(K)`, which parameterises the quasi-trivial forms of a
/// category whose universal grading group has cyclic factors `n_j`.
pub fn quasi_trivial_forms_group(grading_orders: &[u64], field: &FieldClass) -> Result<GroupDescriptor> {
    let mut cyclic = Vec::new();
    let mut infinite = Vec::new();
    for &n in grading_orders {
        match br_n(field, n)? {
            GroupDescriptor::Finite { invariant_factors } => cyclic.extend(invariant_factors),
            GroupDescriptor::Infinite { .. } => infinite.push(format!("Br_{n}({field})")),
        }
    }
    if infinite.is_empty() {
        return GroupDescriptor::direct_sum_of_cyclic(&cyclic);
    }
    let mut summands = infinite;
    if !cyclic.is_empty() {
        summands.push(GroupDescriptor::direct_sum_of_cyclic(&cyclic)?.to_string());
    }
    Ok(GroupDescriptor::Infinite { description: summands.join(" ⊕ ") })
}
