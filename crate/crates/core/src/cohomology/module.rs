use serde::{Deserialize, Serialize};

use super::group::FiniteAbelianGroup;
use crate::arith;
use crate::error::{invalid, Result};

/// A finite `G`-module `M = Z/m_1 ⊕ ... ⊕ Z/m_d`, with generator `t` of `G`
/// acting by the integer matrix `action[t]` on column vectors.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GModule {
    orders: Vec<u64>,
    action: Vec<Vec<Vec<i64>>>,
}

/// Matrix acting on `M`, row `i` reduced modulo `m_i`.
pub(crate) type ModMatrix = Vec<Vec<u64>>;

impl GModule {
    /// Checks that each matrix induces a well-defined endomorphism of `M`,
    /// that generator `t` acts with order dividing `n_t`, and that the
    /// generator actions commute.
    pub fn new(group: &FiniteAbelianGroup, orders: Vec<u64>, action: Vec<Vec<Vec<i64>>>) -> Result<Self> {
        if let Some(&bad) = orders.iter().find(|&&m| m < 2) {
            return invalid(format!("module factor orders must be at least 2, got {bad}"));
        }
        if orders.iter().any(|&m| m > i64::MAX as u64) {
            return invalid("module factor orders must fit in 63 bits");
        }
        if action.len() != group.num_generators() {
            return invalid(format!(
                "{} action matrices given for {} group generators",
                action.len(),
                group.num_generators()
            ));
        }
        let d = orders.len();
        for (t, matrix) in action.iter().enumerate() {
            if matrix.len() != d || matrix.iter().any(|row| row.len() != d) {
                return invalid(format!("action matrix {t} must be {d}×{d}"));
            }
            for i in 0..d {
                for j in 0..d {
                    let image = (matrix[i][j].rem_euclid(orders[i] as i64) as u128 * orders[j] as u128) % orders[i] as u128;
                    if image != 0 {
                        return invalid(format!(
                            "action matrix {t}: entry ({i},{j}) does not respect the orders {} and {}",
                            orders[j], orders[i]
                        ));
                    }
                }
            }
        }
        let module = GModule { orders, action };
        let reduced: Vec<ModMatrix> = (0..module.action.len()).map(|t| module.generator_matrix(t)).collect();
        let identity = module.identity();
        for (t, m) in reduced.iter().enumerate() {
            if module.power(m, group.orders()[t]) != identity {
                return invalid(format!(
                    "generator {t} does not act with order dividing {}",
                    group.orders()[t]
                ));
            }
        }
        for a in 0..reduced.len() {
            for b in a + 1..reduced.len() {
                if module.compose(&reduced[a], &reduced[b]) != module.compose(&reduced[b], &reduced[a]) {
                    return invalid(format!("actions of generators {a} and {b} do not commute"));
                }
            }
        }
        Ok(module)
    }

    /// `M` with every group element acting as the identity.
    pub fn trivial(group: &FiniteAbelianGroup, orders: Vec<u64>) -> Result<Self> {
        let d = orders.len();
        let id: Vec<Vec<i64>> = (0..d).map(|i| (0..d).map(|j| i64::from(i == j)).collect()).collect();
        Self::new(group, orders, vec![id; group.num_generators()])
    }

    pub fn orders(&self) -> &[u64] {
        &self.orders
    }

    pub fn action(&self) -> &[Vec<Vec<i64>>] {
        &self.action
    }

    pub fn dim(&self) -> usize {
        self.orders.len()
    }

    pub fn is_trivial_action(&self) -> bool {
        let id = self.identity();
        (0..self.action.len()).all(|t| self.generator_matrix(t) == id)
    }

    fn identity(&self) -> ModMatrix {
        let d = self.dim();
        (0..d).map(|i| (0..d).map(|j| u64::from(i == j)).collect()).collect()
    }

    fn generator_matrix(&self, t: usize) -> ModMatrix {
        self.action[t]
            .iter()
            .zip(&self.orders)
            .map(|(row, &m)| row.iter().map(|&x| x.rem_euclid(m as i64) as u64).collect())
            .collect()
    }

    /// `a ∘ b`, well defined because both respect the orders.
    fn compose(&self, a: &ModMatrix, b: &ModMatrix) -> ModMatrix {
        let d = self.dim();
        (0..d)
            .map(|i| {
                let m = self.orders[i] as u128;
                (0..d)
                    .map(|j| ((0..d).map(|l| a[i][l] as u128 * b[l][j] as u128 % m).sum::<u128>() % m) as u64)
                    .collect()
            })
            .collect()
    }

    fn power(&self, a: &ModMatrix, mut e: u64) -> ModMatrix {
        let mut acc = self.identity();
        let mut base = a.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.compose(&acc, &base);
            }
            base = self.compose(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// Action matrix of every group element, indexed like the group.
    pub(crate) fn element_matrices(&self, group: &FiniteAbelianGroup) -> Vec<ModMatrix> {
        let gens: Vec<ModMatrix> = (0..self.action.len()).map(|t| self.generator_matrix(t)).collect();
        (0..group.order() as usize)
            .map(|g| {
                group
                    .element(g)
                    .iter()
                    .zip(&gens)
                    .fold(self.identity(), |acc, (&e, m)| self.compose(&acc, &self.power(m, e)))
            })
            .collect()
    }

    /// Primes dividing `|M|`, ascending.
    pub(crate) fn primes(&self) -> Vec<u64> {
        let mut ps: Vec<u64> = self.orders.iter().flat_map(|&m| arith::factorize(m)).map(|(p, _)| p).collect();
        ps.sort_unstable();
        ps.dedup();
        ps
    }

    /// The `p`-primary summand `M_p = ⊕ Z/p^{a_i}` over the coordinates with `a_i ≥ 1`.
    pub(crate) fn primary_part(&self, group: &FiniteAbelianGroup, p: u64) -> PrimaryPart {
        let mut coords = Vec::new();
        let mut exps = Vec::new();
        let mut idempotents = Vec::new();
        for (i, &m) in self.orders.iter().enumerate() {
            let mut a = 0;
            let mut rest = m;
            while rest % p == 0 {
                rest /= p;
                a += 1;
            }
            if a == 0 {
                continue;
            }
            let pa = m / rest;
            // ε ≡ 1 mod p^a, ε ≡ 0 mod rest
            let eps = if rest == 1 {
                1
            } else {
                let inv = arith::mod_inverse(rest % pa, pa).expect("coprime parts");
                arith::mul_mod(rest, inv, m)
            };
            coords.push(i);
            exps.push(a);
            idempotents.push(eps);
        }
        let e = exps.iter().copied().max().unwrap_or(0);
        let moduli: Vec<u64> = exps.iter().map(|&a| p.pow(a)).collect();
        let matrices = self
            .element_matrices(group)
            .into_iter()
            .map(|full| {
                coords
                    .iter()
                    .enumerate()
                    .map(|(jj, &j)| {
                        coords
                            .iter()
                            .enumerate()
                            .map(|(ii, &i)| arith::mul_mod(full[j][i] % moduli[jj], idempotents[ii] % moduli[jj], moduli[jj]))
                            .collect()
                    })
                    .collect()
            })
            .collect();
        PrimaryPart { p, e, coords, exps, moduli, idempotents, matrices }
    }
}

/// The `p`-primary summand of a module, with projection and inclusion data.
#[derive(Debug, Clone)]
pub(crate) struct PrimaryPart {
    pub p: u64,
    /// Largest exponent `E`.
    pub e: u32,
    /// Coordinates of `M` contributing to `M_p`.
    pub coords: Vec<usize>,
    pub exps: Vec<u32>,
    pub moduli: Vec<u64>,
    /// Idempotent lifting `Z/p^{a_i}` back into `Z/m_i`.
    pub idempotents: Vec<u64>,
    /// Action matrices of every group element on `M_p`.
    pub matrices: Vec<ModMatrix>,
}

impl PrimaryPart {
    pub fn dim(&self) -> usize {
        self.coords.len()
    }
}
