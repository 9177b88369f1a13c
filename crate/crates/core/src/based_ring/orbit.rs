//! Galois orbit rings.
//!
//! A finite abelian group acting on a based ring by automorphisms permutes
//! the basis; the orbit sums span a subring with non-negative structure
//! constants. For the cyclotomic action of `H ⊂ (Z/n)^×` on `Z[Z/n]` this is
//! the Grothendieck ring of the split form with simple objects `Y_O = ⊕_{x∈O} x`.

use std::collections::BTreeSet;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::Zero;

use super::BasedRing;
use crate::arith;
use crate::error::{invalid, Error, Result};

/// An abelian group acting on the basis of a based ring, given by one
/// permutation per generator together with the generator's order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisAction {
    orders: Vec<u64>,
    perms: Vec<Vec<usize>>,
}

impl BasisAction {
    /// Checks that every permutation is a based-ring automorphism of `ring`,
    /// that generators commute and that `perm^order` is the identity.
    pub fn new(ring: &BasedRing, orders: Vec<u64>, perms: Vec<Vec<usize>>) -> Result<Self> {
        let r = ring.rank();
        if orders.len() != perms.len() {
            return invalid(format!("{} orders given for {} generators", orders.len(), perms.len()));
        }
        for (g, (perm, &order)) in perms.iter().zip(&orders).enumerate() {
            if perm.len() != r {
                return invalid(format!("generator {g}: permutation of length {}, rank {r}", perm.len()));
            }
            let distinct: BTreeSet<_> = perm.iter().copied().collect();
            if distinct.len() != r || perm.iter().any(|&x| x >= r) {
                return invalid(format!("generator {g} is not a permutation"));
            }
            if perm[ring.unit()] != ring.unit() {
                return invalid(format!("generator {g} moves the unit"));
            }
            if (0..r).any(|i| perm[ring.dual(i)] != ring.dual(perm[i])) {
                return invalid(format!("generator {g} does not commute with the involution"));
            }
            for i in 0..r {
                for j in 0..r {
                    for k in 0..r {
                        if ring.coefficient(i, j, k) != ring.coefficient(perm[i], perm[j], perm[k]) {
                            return invalid(format!("generator {g} does not preserve the structure constants"));
                        }
                    }
                }
            }
            if order == 0 {
                return invalid(format!("generator {g} has order 0"));
            }
            let mut power: Vec<usize> = (0..r).collect();
            for _ in 0..order {
                power = power.iter().map(|&x| perm[x]).collect();
            }
            if power.iter().enumerate().any(|(i, &x)| i != x) {
                return invalid(format!("generator {g} does not have order dividing {order}"));
            }
        }
        for a in 0..perms.len() {
            for b in a + 1..perms.len() {
                if (0..r).any(|i| perms[a][perms[b][i]] != perms[b][perms[a][i]]) {
                    return invalid(format!("generators {a} and {b} do not commute"));
                }
            }
        }
        Ok(BasisAction { orders, perms })
    }

    pub fn orders(&self) -> &[u64] {
        &self.orders
    }

    pub fn perms(&self) -> &[Vec<usize>] {
        &self.perms
    }

    /// Orbits of the generated group, each sorted, ordered by smallest element.
    pub fn orbits(&self, rank: usize) -> Vec<Vec<usize>> {
        let mut seen = vec![false; rank];
        let mut orbits = Vec::new();
        for start in 0..rank {
            if seen[start] {
                continue;
            }
            let mut orbit = vec![start];
            seen[start] = true;
            let mut cursor = 0;
            while cursor < orbit.len() {
                let x = orbit[cursor];
                cursor += 1;
                for perm in &self.perms {
                    let y = perm[x];
                    if !seen[y] {
                        seen[y] = true;
                        orbit.push(y);
                    }
                }
            }
            orbit.sort_unstable();
            orbits.push(orbit);
        }
        orbits
    }

    /// The subring spanned by orbit sums, with basis labels `Y{rep}` where
    /// `rep` is the smallest basis index in the orbit.
    pub fn orbit_ring(&self, ring: &BasedRing) -> Result<BasedRing> {
        let orbits = self.orbits(ring.rank());
        let mut orbit_of = vec![0; ring.rank()];
        for (o, members) in orbits.iter().enumerate() {
            for &x in members {
                orbit_of[x] = o;
            }
        }
        let s = orbits.len();
        let mut n = vec![vec![vec![BigUint::zero(); s]; s]; s];
        for (a, oa) in orbits.iter().enumerate() {
            for (b, ob) in orbits.iter().enumerate() {
                for (c, oc) in orbits.iter().enumerate() {
                    let count = |c0: usize| -> BigUint {
                        let mut acc = BigUint::zero();
                        for &x in oa {
                            for &y in ob {
                                acc += ring.coefficient(x, y, c0);
                            }
                        }
                        acc
                    };
                    let value = count(oc[0]);
                    if let Some(&bad) = oc[1..].iter().find(|&&c0| count(c0) != value) {
                        return Err(Error::Structure(format!(
                            "orbit constant depends on the representative: {} vs {} at {bad}",
                            value,
                            count(bad)
                        )));
                    }
                    n[a][b][c] = value;
                }
            }
        }
        let involution = orbits.iter().map(|o| orbit_of[ring.dual(o[0])]).collect();
        let labels = orbits.iter().map(|o| format!("Y{}", o[0])).collect();
        BasedRing::new(s, orbit_of[ring.unit()], involution, n, Some(labels))
    }
}

/// Subgroup of `(Z/n)^×` generated by `generators`, ascending.
pub fn unit_subgroup_generated_by(n: u64, generators: &[u64]) -> Result<Vec<u64>> {
    if n < 2 {
        return invalid(format!("modulus must be at least 2, got {n}"));
    }
    let mut group = BTreeSet::from([1 % n]);
    let mut frontier = vec![1 % n];
    for &g in generators {
        if g.gcd(&n) != 1 {
            return invalid(format!("{g} is not a unit modulo {n}"));
        }
    }
    while let Some(x) = frontier.pop() {
        for &g in generators {
            let y = arith::mul_mod(x, g % n, n);
            if group.insert(y) {
                frontier.push(y);
            }
        }
    }
    Ok(group.into_iter().collect())
}

/// Orbit ring of the multiplicative action of `subgroup ⊂ (Z/n)^×` on the
/// group ring `Z[Z/n]`. The subgroup is given by its full element list.
pub fn orbit_ring(n: u64, subgroup: &[u64]) -> Result<BasedRing> {
    if n < 2 {
        return invalid(format!("modulus must be at least 2, got {n}"));
    }
    let rank = usize::try_from(n).map_err(|_| Error::InvalidInput(format!("modulus {n} too large")))?;
    let elements: BTreeSet<u64> = subgroup.iter().map(|&h| h % n).collect();
    if elements.is_empty() {
        return invalid("subgroup must be non-empty");
    }
    if let Some(&h) = elements.iter().find(|h| h.gcd(&n) != 1) {
        return invalid(format!("{h} is not a unit modulo {n}"));
    }
    for &a in &elements {
        for &b in &elements {
            let ab = arith::mul_mod(a, b, n);
            if !elements.contains(&ab) {
                return invalid(format!("{a}·{b} = {ab} mod {n} is not in the given set; not a subgroup"));
            }
        }
    }

    // orbits of x -> hx, ordered by smallest element
    let mut orbit_of = vec![usize::MAX; rank];
    let mut reps = Vec::new();
    for x in 0..rank {
        if orbit_of[x] == usize::MAX {
            for &h in &elements {
                orbit_of[arith::mul_mod(x as u64, h, n) as usize] = reps.len();
            }
            reps.push(x);
        }
    }
    let s = reps.len();
    // count[A][B][c] = #{(a, b) ∈ A × B : a + b = c}
    let mut count = vec![0u64; s * s * rank];
    for a in 0..rank {
        for b in 0..rank {
            let c = (a + b) % rank;
            count[(orbit_of[a] * s + orbit_of[b]) * rank + c] += 1;
        }
    }
    let mut tensor = vec![vec![vec![BigUint::zero(); s]; s]; s];
    for (oa, slice) in tensor.iter_mut().enumerate() {
        for (ob, row) in slice.iter_mut().enumerate() {
            let base = (oa * s + ob) * rank;
            for c in 0..rank {
                let oc = orbit_of[c];
                let value = count[base + c];
                let at_rep = count[base + reps[oc]];
                if value != at_rep {
                    return Err(Error::Structure(format!(
                        "orbit constant depends on the representative: {at_rep} at {} vs {value} at {c}",
                        reps[oc]
                    )));
                }
                row[oc] = BigUint::from(value);
            }
        }
    }
    let involution = reps.iter().map(|&x| orbit_of[(rank - x) % rank]).collect();
    let labels = reps.iter().map(|x| format!("Y{x}")).collect();
    BasedRing::new(s, 0, involution, tensor, Some(labels))
}

/// Orbit ring of `subgroup` acting on the group ring `Z[Z/n]` through the
/// generic [`BasisAction`] path; agrees with [`orbit_ring`].
pub fn orbit_ring_via_action(n: u64, subgroup: &[u64]) -> Result<BasedRing> {
    let elements = unit_subgroup_generated_by(n, subgroup)?;
    let rank = usize::try_from(n).map_err(|_| Error::InvalidInput(format!("modulus {n} too large")))?;
    let group_ring = BasedRing::from_fn(rank, 0, (0..rank).map(|i| (rank - i) % rank).collect(), None, |i, j, k| {
        BigUint::from(u8::from((i + j) % rank == k))
    });
    // a small generating set keeps the automorphism checks cheap
    let mut generators: Vec<u64> = Vec::new();
    let mut generated = BTreeSet::from([1 % n]);
    for &h in &elements {
        if !generated.contains(&h) {
            generators.push(h);
            generated = unit_subgroup_generated_by(n, &generators)?.into_iter().collect();
        }
    }
    let orders = generators
        .iter()
        .map(|&h| arith::multiplicative_order(h, n).unwrap_or(1))
        .collect();
    let perms = generators
        .iter()
        .map(|&h| (0..n).map(|x| arith::mul_mod(x, h, n) as usize).collect())
        .collect();
    BasisAction::new(&group_ring, orders, perms)?.orbit_ring(&group_ring)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::based_ring::{construct_r_pr, construct_t_k, fp_dim, verify_based_ring, FpDim, Strength};

    #[test]
    fn n7_quadratic_residues_give_t2() {
        let ring = orbit_ring(7, &[1, 2, 4]).unwrap();
        assert!(ring.same_tensor(&construct_t_k(2).unwrap()));
        assert_eq!(ring.labels().unwrap(), ["Y0", "Y1", "Y3"]);
    }

    #[test]
    fn trivial_subgroup_gives_group_ring() {
        let ring = orbit_ring(5, &[1]).unwrap();
        assert!(ring.same_tensor(&construct_r_pr(5, 1).unwrap()));
    }

    #[test]
    fn n13_order_three_subgroup() {
        let ring = orbit_ring(13, &[1, 3, 9]).unwrap();
        assert_eq!(ring.rank(), 5);
        assert!(verify_based_ring(&ring, Strength::Weak).is_valid());
        for i in 1..5 {
            assert_eq!(fp_dim(&ring, i).unwrap(), FpDim::Exact(3));
        }
    }

    #[test]
    fn direct_count_matches_generic_action() {
        for (n, h) in [(7u64, vec![1u64, 2, 4]), (12, vec![1, 5]), (13, vec![1, 3, 9]), (15, vec![1, 4])] {
            let direct = orbit_ring(n, &h).unwrap();
            let generic = orbit_ring_via_action(n, &h).unwrap();
            assert_eq!(direct, generic);
        }
    }

    #[test]
    fn non_subgroup_is_rejected() {
        assert!(matches!(orbit_ring(7, &[1, 2]), Err(Error::InvalidInput(_))));
        assert!(matches!(orbit_ring(8, &[1, 2]), Err(Error::InvalidInput(_))));
    }

    #[test]
    fn generated_subgroups() {
        assert_eq!(unit_subgroup_generated_by(7, &[2]).unwrap(), vec![1, 2, 4]);
        assert_eq!(unit_subgroup_generated_by(13, &[3]).unwrap(), vec![1, 3, 9]);
        assert_eq!(unit_subgroup_generated_by(8, &[]).unwrap(), vec![1]);
    }

    #[test]
    fn action_must_preserve_structure() {
        let ring = construct_t_k(2).unwrap();
        // swapping X and X* is an automorphism of T_2
        assert!(BasisAction::new(&ring, vec![2], vec![vec![0, 2, 1]]).is_ok());
        assert!(BasisAction::new(&ring, vec![2], vec![vec![1, 0, 2]]).is_err());
        assert!(BasisAction::new(&ring, vec![1], vec![vec![0, 2, 1]]).is_err());
    }
}
