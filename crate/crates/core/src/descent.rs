//! Forms of pointed categories: real forms of `Vec_{Z/p}^ω`, minimal fields
//! of definition of `Vec_{Z/n}^ω` and their fusion rings, and the forms of
//! `Vec_{Z/2}^{(ω)}` over each supported field class.
//!
//! Fields are symbolic. A minimal field of definition is described by the
//! subgroup `Γ ⊂ Gal(Q(ζ_n)/Q) = (Z/n)^×` it is the fixed field of.

use serde::{Deserialize, Serialize};

use crate::arith;
use crate::based_ring::{construct_r_m, orbit_ring, unit_subgroup_generated_by, BasedRing};
use crate::brauer::{br_n, hilbert_symbol, GroupDescriptor, Place, QuaternionSymbol};
use crate::error::{invalid, Error, Result};
use crate::field::FieldClass;

/// The associator class of `Vec_{Z/n}^ω`, as a residue in `H^3(Z/n, μ_n) = Z/n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointedCategoryDescriptor {
    pub n: u64,
    pub omega_class: u64,
}

impl PointedCategoryDescriptor {
    pub fn new(n: u64, omega_class: u64) -> Result<Self> {
        if n < 2 {
            return invalid(format!("grading modulus must be at least 2, got {n}"));
        }
        Ok(PointedCategoryDescriptor { n, omega_class: omega_class % n })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Obstruction {
    None,
    /// Complex conjugation sends `ω` to `ω^{-1}`, which is not a pullback of
    /// `ω` by an automorphism of `Z/p` because `-1` is not a square mod `p`.
    FirstCondition,
    /// The functor `X_1 ↦ X_m` with `m^2 = -1` identifies `ω` with its
    /// conjugate, but its square sends `X_1` to `X_{-1} ≠ X_1`.
    SecondCondition,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RealFormReport {
    pub p: u64,
    pub omega_nontrivial: bool,
    pub exists: bool,
    pub obstruction: Obstruction,
    /// Smallest `m` with `m^2 ≡ -1 (mod p)`, when one exists.
    pub sqrt_minus_one: Option<u64>,
}

/// Whether `Vec_{Z/p}^ω` has a form over `R`.
pub fn real_form_exists(p: u64, omega_nontrivial: bool) -> Result<RealFormReport> {
    if p == 2 || !arith::is_prime(p) {
        return invalid(format!("real_form_exists needs an odd prime, got {p}"));
    }
    let sqrt_minus_one = if arith::is_qr(-1, p)? {
        (1..p).find(|&m| arith::mul_mod(m, m, p) == p - 1)
    } else {
        None
    };
    let (exists, obstruction) = match (omega_nontrivial, sqrt_minus_one) {
        (false, _) => (true, Obstruction::None),
        (true, None) => (false, Obstruction::FirstCondition),
        (true, Some(_)) => (false, Obstruction::SecondCondition),
    };
    Ok(RealFormReport { p, omega_nontrivial, exists, obstruction, sqrt_minus_one })
}

/// Largest `s² · rank` for which the form fusion ring is materialised.
const FORM_RING_BUDGET: u64 = 20_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinimalFieldReport {
    pub n: u64,
    /// `r`, the odd part of `φ(n)`: the order of `Γ = Gal(Q(ζ_n)/K)`.
    pub gamma_order: u64,
    /// `[K : Q] = 2^m`.
    #[serde(rename = "degree_over_Q")]
    pub degree_over_q: u64,
    pub cyclotomic_degree: u64,
    pub m: u32,
    pub is_cyclotomic_minimal: bool,
    /// A generator of `Γ ⊂ (Z/p)^×` when `n = p` is prime.
    pub gamma_generator: Option<u64>,
    /// Rank `1 + (p - 1)/r` of the form's fusion ring when `n = p` is prime.
    pub form_ring_rank: Option<u64>,
    /// The fusion ring of the form over `K`, when `n` is prime and the ring is small enough.
    pub form_ring: Option<BasedRing>,
    pub note: Option<String>,
}

/// Minimal field of definition `K ⊂ Q(ζ_n)` of `Vec_{Z/n}^ω` for a generator `ω`.
pub fn minimal_field(n: u64) -> Result<MinimalFieldReport> {
    if n < 2 {
        return invalid(format!("minimal_field needs n >= 2, got {n}"));
    }
    let phi = arith::euler_phi(n);
    let split = arith::two_adic_split(phi)?;
    let mut report = MinimalFieldReport {
        n,
        gamma_order: split.r,
        degree_over_q: 1 << split.m,
        cyclotomic_degree: phi,
        m: split.m,
        is_cyclotomic_minimal: split.r == 1,
        gamma_generator: None,
        form_ring_rank: None,
        form_ring: None,
        note: None,
    };
    if !arith::is_prime(n) {
        report.note = Some("form fusion ring is only computed for prime n".into());
        return Ok(report);
    }
    let p = n;
    let g = arith::primitive_root(p)?;
    let gamma = arith::pow_mod(g, 1 << split.m, p);
    let rank = 1 + (p - 1) / split.r;
    report.gamma_generator = Some(gamma);
    report.form_ring_rank = Some(rank);
    let cost = rank.saturating_mul(rank).saturating_mul(p);
    if cost > FORM_RING_BUDGET {
        report.note = Some(format!("form fusion ring of rank {rank} not materialised"));
        return Ok(report);
    }
    let subgroup = unit_subgroup_generated_by(p, &[gamma])?;
    report.form_ring = Some(orbit_ring(p, &subgroup)?);
    Ok(report)
}

/// Minimal field of definition of the braided category `Vec_{Z/p}` with a
/// non-degenerate quadratic form; the computation is that of [`minimal_field`].
pub fn braided_minimal_field(p: u64) -> Result<MinimalFieldReport> {
    if p == 2 || !arith::is_prime(p) {
        return invalid(format!("braided_minimal_field needs an odd prime, got {p}"));
    }
    minimal_field(p)
}

/// Brauer class attached to a form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum BrauerClass {
    Trivial,
    /// The element of local invariant `invariant` of `Br_2`, with a quaternion representative.
    LocalInvariant { invariant: String, representative: QuaternionSymbol },
    /// One class per quaternion division algebra, up to isomorphism.
    Family { description: String, example: QuaternionSymbol },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormDescriptor {
    pub brauer_class: BrauerClass,
    pub omega_class: u64,
    pub endo_algebra_note: String,
    /// Grothendieck ring of the form over `K`.
    pub grothendieck_ring: BasedRing,
}

/// Forms of `Vec_{Z/2}^{(ω)}` over `K`, one per element of `Br_2(K)`.
pub fn forms_of_pointed_rank2(field: &FieldClass, omega_nontrivial: bool) -> Result<Vec<FormDescriptor>> {
    let classes = br_n(field, 2)?;
    if omega_nontrivial && field.characteristic() == 2 {
        // μ_2 is trivial in characteristic 2, so there is no non-trivial ω
        return Ok(Vec::new());
    }
    let omega_class = u64::from(omega_nontrivial);
    let trivial = FormDescriptor {
        brauer_class: BrauerClass::Trivial,
        omega_class,
        endo_algebra_note: "End(1)=K, End(X)=K, X⊗X=1".into(),
        grothendieck_ring: construct_r_m(1)?,
    };
    let quaternionic = |brauer_class, note: &str| -> Result<FormDescriptor> {
        Ok(FormDescriptor {
            brauer_class,
            omega_class,
            endo_algebra_note: note.to_string(),
            grothendieck_ring: construct_r_m(4)?,
        })
    };
    let hamilton = QuaternionSymbol::from_integers(-1, -1)?;
    match (field, classes) {
        (FieldClass::Real, _) => Ok(vec![
            trivial,
            quaternionic(
                BrauerClass::LocalInvariant { invariant: "1/2".into(), representative: hamilton },
                "End(1)=ℝ, End(X)=quaternions, X⊗X=4·1",
            )?,
        ]),
        (FieldClass::Padic { p }, _) => Ok(vec![
            trivial,
            quaternionic(
                BrauerClass::LocalInvariant { invariant: "1/2".into(), representative: local_division_symbol(*p)? },
                "End(1)=Q_p, End(X)=quaternion division algebra over Q_p, X⊗X=4·1",
            )?,
        ]),
        (FieldClass::RationalQ, _) => Ok(vec![
            trivial,
            quaternionic(
                BrauerClass::Family {
                    description: "one form per quaternion division algebra over Q, determined by its even non-empty set of ramified places".into(),
                    example: hamilton,
                },
                "End(1)=Q, End(X)=quaternion division algebra over Q, X⊗X=4·1",
            )?,
        ]),
        (_, GroupDescriptor::Finite { invariant_factors }) if invariant_factors.is_empty() => Ok(vec![trivial]),
        (_, other) => Err(Error::Unsupported(format!("forms over {field} with Br_2 = {other}"))),
    }
}

/// A quaternion algebra over `Q` that stays division over `Q_p`.
pub fn local_division_symbol(p: u64) -> Result<QuaternionSymbol> {
    let place = Place::finite(p)?;
    for b in 1..=(p as i64).max(2) {
        for a in [-1, b] {
            for bb in [-b, b, p as i64] {
                let q = QuaternionSymbol::from_integers(a, bb)?;
                if hilbert_symbol(q.a, q.b, place)? == -1 {
                    return Ok(q);
                }
            }
        }
    }
    // a non-residue u gives (u, p)_p = -1 for odd p
    let u = (2..p).find(|&u| arith::legendre(u as i64, p) == -1).unwrap_or(2);
    QuaternionSymbol::from_integers(u as i64, p as i64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::based_ring::construct_t_k;

    #[test]
    fn real_forms() {
        assert_eq!(real_form_exists(7, true).unwrap().obstruction, Obstruction::FirstCondition);
        let five = real_form_exists(5, true).unwrap();
        assert_eq!((five.exists, five.obstruction, five.sqrt_minus_one), (false, Obstruction::SecondCondition, Some(2)));
        let trivial = real_form_exists(7, false).unwrap();
        assert_eq!((trivial.exists, trivial.obstruction), (true, Obstruction::None));
        assert!(real_form_exists(9, true).is_err());
        assert!(real_form_exists(2, true).is_err());
    }

    #[test]
    fn minimal_field_examples() {
        let five = minimal_field(5).unwrap();
        assert_eq!((five.degree_over_q, five.is_cyclotomic_minimal), (4, true));
        let seven = minimal_field(7).unwrap();
        assert_eq!((seven.gamma_order, seven.degree_over_q), (3, 2));
        assert!(seven.form_ring.unwrap().same_tensor(&construct_t_k(2).unwrap()));
        let nine = minimal_field(9).unwrap();
        assert_eq!((nine.degree_over_q, nine.is_cyclotomic_minimal, nine.form_ring), (2, false, None));
        assert_eq!(braided_minimal_field(13).unwrap().degree_over_q, 4);
    }

    #[test]
    fn forms_counts() {
        assert_eq!(forms_of_pointed_rank2(&FieldClass::Real, false).unwrap().len(), 2);
        assert_eq!(forms_of_pointed_rank2(&FieldClass::AlgClosedChar0, true).unwrap().len(), 1);
        assert_eq!(forms_of_pointed_rank2(&FieldClass::Padic { p: 3 }, true).unwrap().len(), 2);
        assert!(forms_of_pointed_rank2(&FieldClass::Finite { q: 4 }, true).unwrap().is_empty());
        let real = forms_of_pointed_rank2(&FieldClass::Real, false).unwrap();
        assert_eq!(real[1].endo_algebra_note, "End(1)=ℝ, End(X)=quaternions, X⊗X=4·1");
    }

    #[test]
    fn local_symbols_are_division() {
        for p in [2u64, 3, 5, 7, 11, 13, 97] {
            let q = local_division_symbol(p).unwrap();
            assert_eq!(hilbert_symbol(q.a, q.b, Place::Finite(p)).unwrap(), -1, "p = {p}");
        }
    }
}
