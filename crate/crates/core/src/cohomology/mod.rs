//! Cohomology of finite abelian groups with coefficients in finite modules.
//!
//! Cochains are functions `G^k -> M` (the inhomogeneous bar complex) with
//!
//! ```text
//! (dc)(g_0,…,g_k) = g_0·c(g_1,…,g_k) + Σ_{i=1..k} (-1)^i c(…,g_{i-1}g_i,…) + (-1)^{k+1} c(g_0,…,g_{k-1}).
//! ```
//!
//! `H^k` is computed one primary part `M_p` at a time by elimination over
//! `Z/p^E`, where `p^E` is the exponent of `M_p`. Two reductions keep the
//! systems small, both exact:
//!
//! * a cochain `c` is a cocycle iff `dc(g, …) = 0` for `g` ranging over the
//!   generators of `G`, because `d(dc) = 0` gives
//!   `dc(ab, …) = a·dc(b, …) + (terms dc(a, …))`;
//! * `Z/p^a` sits in `Z/p^E` as the lifts of its elements, so the cocycle
//!   condition modulo `p^a` becomes a condition modulo `p^E` after scaling the
//!   row by `p^{E-a}`, and the ambiguity of lifts joins the coboundaries.

mod chain_ring;
mod cochain;
mod group;
mod module;

use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::arith;
use crate::error::{invalid, Error, Result};
use chain_ring::{diagonalise, quotient_exponents, ChainRing};
use module::{ModMatrix, PrimaryPart};

pub use cochain::{Cochain, IntMatrix};
pub use group::FiniteAbelianGroup;
pub use module::GModule;

/// Default bound on `|G|^{k+1} · dim(M)`, the row count of `d^k`.
pub const DEFAULT_SIZE_CAP: u128 = 1_000_000;

/// `Z/d_1 ⊕ … ⊕ Z/d_r` with `d_1 | d_2 | … | d_r`, all `d_i ≥ 2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CohomologyGroup {
    pub invariant_factors: Vec<u64>,
}

impl CohomologyGroup {
    pub fn trivial() -> Self {
        CohomologyGroup { invariant_factors: Vec::new() }
    }

    pub fn is_trivial(&self) -> bool {
        self.invariant_factors.is_empty()
    }

    pub fn order(&self) -> BigUint {
        self.invariant_factors.iter().map(|&d| BigUint::from(d)).product()
    }

    /// Invariant factors of `⊕_p ⊕_i Z/p^{e_{p,i}}`.
    pub fn from_primary_exponents(parts: &[(u64, Vec<u32>)]) -> Result<Self> {
        let len = parts.iter().map(|(_, e)| e.len()).max().unwrap_or(0);
        let mut factors = vec![1u64; len];
        for (p, exps) in parts {
            let mut sorted = exps.clone();
            sorted.sort_unstable_by(|a, b| b.cmp(a));
            for (slot, &e) in factors.iter_mut().rev().zip(&sorted) {
                let pe = arith::checked_pow(*p, e).and_then(|pe| slot.checked_mul(pe));
                *slot = pe.ok_or_else(|| Error::InvalidInput("invariant factor exceeds 64 bits".into()))?;
            }
        }
        factors.retain(|&d| d > 1);
        Ok(CohomologyGroup { invariant_factors: factors })
    }
}

impl fmt::Display for CohomologyGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.invariant_factors.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.invariant_factors.iter().map(|d| format!("Z/{d}")).collect();
        write!(f, "{}", parts.join(" ⊕ "))
    }
}

fn check_cap(group: &FiniteAbelianGroup, dim: usize, k: u32, cap: u128) -> Result<()> {
    let needed = (group.order() as u128)
        .checked_pow(k + 1)
        .and_then(|t| t.checked_mul(dim.max(1) as u128))
        .unwrap_or(u128::MAX);
    if needed > cap {
        return Err(Error::SizeCap { needed, cap });
    }
    Ok(())
}

/// Shared combinatorics of the bar complex of `G`.
struct Bar {
    size: usize,
    add: Vec<Vec<u32>>,
}

impl Bar {
    fn new(group: &FiniteAbelianGroup, k: u32) -> Self {
        let size = group.order() as usize;
        // degree-0 differentials never multiply group elements
        let add = if k >= 1 { group.addition_table() } else { Vec::new() };
        Bar { size, add }
    }

    fn count(&self, k: u32) -> usize {
        self.size.pow(k)
    }

    /// Terms of `(dc)(tuple)` for a `(k+1)`-tuple: the acting element and the
    /// index of the `k`-tuple it acts on, followed by signed `k`-tuples.
    fn terms(&self, tuple: &[usize], scratch: &mut Vec<usize>) -> (usize, usize, Vec<(usize, i64)>) {
        let k = tuple.len() - 1;
        let action = cochain::encode(&tuple[1..], self.size);
        let mut signed = Vec::with_capacity(k + 1);
        for m in 1..=k {
            scratch.clear();
            scratch.extend_from_slice(&tuple[..m - 1]);
            scratch.push(self.add[tuple[m - 1]][tuple[m]] as usize);
            scratch.extend_from_slice(&tuple[m + 1..]);
            let sign = if m % 2 == 0 { 1 } else { -1 };
            signed.push((cochain::encode(scratch, self.size), sign));
        }
        let sign = if (k + 1).is_multiple_of(2) { 1 } else { -1 };
        signed.push((cochain::encode(&tuple[..k], self.size), sign));
        (tuple[0], action, signed)
    }
}

/// Integer matrix of `d^k : C^k(G, M) -> C^{k+1}(G, M)`, rows and columns
/// indexed like [`Cochain`] values. Action entries are reduced into
/// `[0, m_i)`, so the matrix is correct modulo the row's module order.
pub fn differential(group: &FiniteAbelianGroup, module: &GModule, k: u32) -> Result<IntMatrix> {
    differential_capped(group, module, k, DEFAULT_SIZE_CAP)
}

pub fn differential_capped(group: &FiniteAbelianGroup, module: &GModule, k: u32, cap: u128) -> Result<IntMatrix> {
    check_cap(group, module.dim(), k, cap)?;
    let bar = Bar::new(group, k);
    let mats = module.element_matrices(group);
    let d = module.dim();
    let mut tuple = vec![0; k as usize + 1];
    let mut scratch = Vec::new();
    let mut rows = Vec::with_capacity(bar.count(k + 1) * d);
    for idx in 0..bar.count(k + 1) {
        cochain::decode(idx, bar.size, &mut tuple);
        let (g0, acted, signed) = bar.terms(&tuple, &mut scratch);
        for i in 0..d {
            let mut row: Vec<(usize, i64)> = Vec::new();
            for j in 0..d {
                row.push((acted * d + j, mats[g0][i][j] as i64));
            }
            for &(t, s) in &signed {
                row.push((t * d + i, s));
            }
            rows.push(merge(row));
        }
    }
    Ok(IntMatrix::new(bar.count(k) * d, rows))
}

fn merge(mut row: Vec<(usize, i64)>) -> Vec<(usize, i64)> {
    row.sort_unstable_by_key(|&(c, _)| c);
    let mut out: Vec<(usize, i64)> = Vec::with_capacity(row.len());
    for (c, v) in row {
        match out.last_mut() {
            Some((lc, lv)) if *lc == c => *lv += v,
            _ => out.push((c, v)),
        }
    }
    out.retain(|&(_, v)| v != 0);
    out
}

/// `dc`, evaluated directly.
pub fn coboundary(group: &FiniteAbelianGroup, module: &GModule, c: &Cochain) -> Result<Cochain> {
    coboundary_capped(group, module, c, DEFAULT_SIZE_CAP)
}

pub fn coboundary_capped(group: &FiniteAbelianGroup, module: &GModule, c: &Cochain, cap: u128) -> Result<Cochain> {
    c.validate(group, module)?;
    let k = c.degree();
    check_cap(group, module.dim(), k, cap)?;
    let mats = module.element_matrices(group);
    Ok(apply_differential(group, module, &mats, &Bar::new(group, k), c))
}

fn apply_differential(group: &FiniteAbelianGroup, module: &GModule, mats: &[ModMatrix], bar: &Bar, c: &Cochain) -> Cochain {
    let k = c.degree();
    let d = module.dim();
    let orders = module.orders();
    let vals = c.values();
    let mut tuple = vec![0; k as usize + 1];
    let mut scratch = Vec::new();
    let mut out = Vec::with_capacity(bar.count(k + 1) * d);
    for idx in 0..bar.count(k + 1) {
        cochain::decode(idx, bar.size, &mut tuple);
        let (g0, acted, signed) = bar.terms(&tuple, &mut scratch);
        for i in 0..d {
            let m = orders[i] as u128;
            let mut acc: u128 = 0;
            for j in 0..d {
                acc = (acc + mats[g0][i][j] as u128 * vals[acted * d + j] as u128) % m;
            }
            for &(t, s) in &signed {
                let v = vals[t * d + i] as u128;
                acc = if s > 0 { (acc + v) % m } else { (acc + m - v) % m };
            }
            out.push(acc as u64);
        }
    }
    Cochain::from_reduced(group, module, k + 1, out)
}

/// Whether `dc = 0`.
pub fn is_cocycle(group: &FiniteAbelianGroup, module: &GModule, c: &Cochain) -> Result<bool> {
    is_cocycle_capped(group, module, c, DEFAULT_SIZE_CAP)
}

pub fn is_cocycle_capped(group: &FiniteAbelianGroup, module: &GModule, c: &Cochain, cap: u128) -> Result<bool> {
    Ok(coboundary_capped(group, module, c, cap)?.values().iter().all(|&x| x == 0))
}

/// `H^k(G, M)` as invariant factors.
pub fn cohomology_group(group: &FiniteAbelianGroup, module: &GModule, k: u32) -> Result<CohomologyGroup> {
    cohomology_group_capped(group, module, k, DEFAULT_SIZE_CAP)
}

pub fn cohomology_group_capped(
    group: &FiniteAbelianGroup,
    module: &GModule,
    k: u32,
    cap: u128,
) -> Result<CohomologyGroup> {
    check_cap(group, module.dim(), k, cap)?;
    let bar = Bar::new(group, k);
    let mut parts = Vec::new();
    for p in module.primes() {
        let part = module.primary_part(group, p);
        parts.push((p, primary_cohomology(group, &bar, &part, k)));
    }
    CohomologyGroup::from_primary_exponents(&parts)
}

/// Row `(tuple, i)` of `d^{k}` on `M_p`, entries reduced modulo `p^{a_i}`.
fn primary_row(bar: &Bar, part: &PrimaryPart, tuple: &[usize], i: usize, scratch: &mut Vec<usize>, row: &mut [u64]) {
    let d = part.dim();
    let m = part.moduli[i];
    let (g0, acted, signed) = bar.terms(tuple, scratch);
    for j in 0..d {
        let slot = &mut row[acted * d + j];
        *slot = (*slot + part.matrices[g0][i][j]) % m;
    }
    for &(t, s) in &signed {
        let slot = &mut row[t * d + i];
        *slot = if s > 0 { (*slot + 1) % m } else { (*slot + m - 1) % m };
    }
}

/// Exponents of the cyclic factors of `H^k(G, M_p)`.
fn primary_cohomology(group: &FiniteAbelianGroup, bar: &Bar, part: &PrimaryPart, k: u32) -> Vec<u32> {
    let ring = ChainRing::new(part.p, part.e);
    let d = part.dim();
    let n = bar.count(k) * d;
    let scale: Vec<u64> = part.exps.iter().map(|&a| ring.pow_p(part.e - a)).collect();

    // cocycle conditions at generators of G (at the identity for trivial G)
    let firsts: Vec<usize> = if group.num_generators() == 0 {
        vec![0]
    } else {
        (0..group.num_generators()).map(|t| group.generator(t)).collect()
    };
    let mut rows = Vec::new();
    let mut tuple = vec![0; k as usize + 1];
    let mut scratch = Vec::new();
    for &g0 in &firsts {
        for rest in 0..bar.count(k) {
            tuple[0] = g0;
            cochain::decode(rest, bar.size, &mut tuple[1..]);
            for i in 0..d {
                let mut row = vec![0u64; n];
                primary_row(bar, part, &tuple, i, &mut scratch, &mut row);
                if row.iter().any(|&x| x != 0) {
                    for x in row.iter_mut() {
                        *x = ring.mul(*x, scale[i]);
                    }
                    rows.push(row);
                }
            }
        }
    }
    let diag = diagonalise(&ring, &mut rows, n, true);
    drop(rows);

    // cocycles are Q z with p^{s_c} | z_c; y_c = z_c / p^{s_c} lives in Z/p^{E - s_c}
    let mut s = vec![0u32; n];
    for pv in &diag.pivots {
        s[pv.col] = part.e - pv.val;
    }
    let kept: Vec<usize> = (0..n).filter(|&c| s[c] < part.e).collect();
    if kept.is_empty() {
        return Vec::new();
    }

    // coboundaries: images of basis (k-1)-cochains, plus lift ambiguity p^{a} e_c
    let mut generators: Vec<Vec<u64>> = Vec::new();
    if k >= 1 {
        let ncols_prev = bar.count(k - 1) * d;
        let mut images = vec![vec![0u64; n]; ncols_prev];
        let mut lower = vec![0; k as usize];
        let mut one_row = vec![0u64; ncols_prev];
        for idx in 0..bar.count(k) {
            cochain::decode(idx, bar.size, &mut lower);
            for i in 0..d {
                one_row.iter_mut().for_each(|x| *x = 0);
                primary_row(bar, part, &lower, i, &mut scratch, &mut one_row);
                for (col, &x) in one_row.iter().enumerate() {
                    if x != 0 {
                        images[col][idx * d + i] = x;
                    }
                }
            }
        }
        generators.extend(images);
    }
    for c in 0..n {
        let a = part.exps[c % d];
        if a < part.e {
            let mut v = vec![0u64; n];
            v[c] = ring.pow_p(a);
            generators.push(v);
        }
    }

    let width = kept.len();
    let mut relations: Vec<Vec<u64>> = Vec::with_capacity(generators.len() + width);
    for mut b in generators {
        diag.apply_inverse(&ring, &mut b);
        let row: Vec<u64> = kept
            .iter()
            .map(|&c| {
                let pc = ring.pow_p(s[c]);
                debug_assert_eq!(b[c] % pc, 0, "coboundary outside the cocycle lattice");
                b[c] / pc
            })
            .collect();
        if row.iter().any(|&x| x != 0) {
            relations.push(row);
        }
    }
    for (pos, &c) in kept.iter().enumerate() {
        if s[c] > 0 {
            let mut row = vec![0u64; width];
            row[pos] = ring.pow_p(part.e - s[c]);
            relations.push(row);
        }
    }
    quotient_exponents(&ring, &mut relations, width)
}

/// A cochain `b` of degree `k-1` with `db = c1 - c2`, or `None` when the two
/// cochains are not cohomologous.
pub fn cohomologous(group: &FiniteAbelianGroup, module: &GModule, c1: &Cochain, c2: &Cochain) -> Result<Option<Cochain>> {
    cohomologous_capped(group, module, c1, c2, DEFAULT_SIZE_CAP)
}

pub fn cohomologous_capped(
    group: &FiniteAbelianGroup,
    module: &GModule,
    c1: &Cochain,
    c2: &Cochain,
    cap: u128,
) -> Result<Option<Cochain>> {
    c1.validate(group, module)?;
    c2.validate(group, module)?;
    if c1.degree() != c2.degree() {
        return invalid(format!("degree mismatch: {} vs {}", c1.degree(), c2.degree()));
    }
    let k = c1.degree();
    if k == 0 {
        return invalid("cohomologous needs cochains of degree at least 1");
    }
    check_cap(group, module.dim(), k, cap)?;
    let d = module.dim();
    let orders = module.orders();
    let diff: Vec<u64> = c1
        .values()
        .iter()
        .zip(c2.values())
        .enumerate()
        .map(|(idx, (&x, &y))| {
            let m = orders[idx % d];
            ((x as u128 + m as u128 - y as u128) % m as u128) as u64
        })
        .collect();

    let bar = Bar::new(group, k);
    let ncols = bar.count(k - 1) * d;
    let mut solution = vec![0u64; ncols];
    for p in module.primes() {
        let part = module.primary_part(group, p);
        let Some(b) = solve_primary(&bar, &part, k, &diff, d) else {
            return Ok(None);
        };
        let dp = part.dim();
        for (idx, &x) in b.iter().enumerate() {
            let coord = part.coords[idx % dp];
            let m = orders[coord];
            let slot = &mut solution[(idx / dp) * d + coord];
            *slot = ((*slot as u128 + arith::mul_mod(x, part.idempotents[idx % dp], m) as u128) % m as u128) as u64;
        }
    }
    let b = Cochain::from_reduced(group, module, k - 1, solution);
    let mats = module.element_matrices(group);
    let check = apply_differential(group, module, &mats, &Bar::new(group, k - 1), &b);
    assert_eq!(check.values(), diff.as_slice(), "cobounding cochain failed verification");
    Ok(Some(b))
}

/// Solves `d^{k-1} b = rhs` on `M_p`; `rhs` is given on all of `M`.
fn solve_primary(bar: &Bar, part: &PrimaryPart, k: u32, rhs: &[u64], d_full: usize) -> Option<Vec<u64>> {
    let ring = ChainRing::new(part.p, part.e);
    let d = part.dim();
    let n = bar.count(k - 1) * d;
    let mut rows = Vec::with_capacity(bar.count(k) * d);
    let mut tuple = vec![0; k as usize];
    let mut scratch = Vec::new();
    for idx in 0..bar.count(k) {
        cochain::decode(idx, bar.size, &mut tuple);
        for i in 0..d {
            let mut row = vec![0u64; n + 1];
            primary_row(bar, part, &tuple, i, &mut scratch, &mut row[..n]);
            row[n] = rhs[idx * d_full + part.coords[i]] % part.moduli[i];
            let scale = ring.pow_p(part.e - part.exps[i]);
            for x in row.iter_mut() {
                *x = ring.mul(*x, scale);
            }
            if row.iter().any(|&x| x != 0) {
                rows.push(row);
            }
        }
    }
    let diag = diagonalise(&ring, &mut rows, n, true);
    let mut pivot_row = vec![false; rows.len()];
    let mut z = vec![0u64; n];
    for pv in &diag.pivots {
        pivot_row[pv.row] = true;
        let r = rows[pv.row][n];
        if ring.val(r) < pv.val {
            return None;
        }
        let unit_inv = ring.inv(pv.unit % ring.q);
        z[pv.col] = ring.mul(r / ring.pow_p(pv.val), unit_inv);
    }
    if rows.iter().zip(&pivot_row).any(|(row, &used)| !used && row[n] != 0) {
        return None;
    }
    diag.apply(&ring, &mut z);
    Some(z.iter().enumerate().map(|(c, &x)| x % part.moduli[c % d]).collect())
}

/// The carry cocycle `ω_a(i, j, k) = a·i·⌊(j + k)/n⌋ mod n` on `Z/n` with
/// values in the trivial module `Z/n`.
pub fn cyclic_three_cocycle(n: u64, a: u64) -> Result<Cochain> {
    let (group, module) = cyclic_pair(n)?;
    let a = a % n;
    Cochain::from_fn(&group, &module, 3, |t| {
        let (i, j, k) = (t[0] as u64, t[1] as u64, t[2] as u64);
        let carry = (j + k) / n;
        vec![(arith::mul_mod(a, i, n) * carry) as i64]
    })
}

fn cyclic_pair(n: u64) -> Result<(FiniteAbelianGroup, GModule)> {
    if n < 2 {
        return invalid(format!("modulus must be at least 2, got {n}"));
    }
    let group = FiniteAbelianGroup::cyclic(n)?;
    let module = GModule::trivial(&group, vec![n])?;
    Ok((group, module))
}

/// Class of the pulled-back cocycle `(i, j, k) ↦ ω_a(si, sj, sk)` in
/// `H^3(Z/n, Z/n) = {[ω_c]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PullbackClass {
    pub n: u64,
    pub a: u64,
    pub s: u64,
    pub class: u64,
    /// `b` with `db = pullback - ω_class`.
    pub coboundary: Cochain,
    /// The exponents `e ∈ {2, -2}` with `s^e · a ≡ class (mod n)`.
    pub orientation_exponents: Vec<i32>,
}

pub fn pullback_class(n: u64, a: u64, s: u64) -> Result<PullbackClass> {
    pullback_class_capped(n, a, s, DEFAULT_SIZE_CAP)
}

pub fn pullback_class_capped(n: u64, a: u64, s: u64, cap: u128) -> Result<PullbackClass> {
    let (group, module) = cyclic_pair(n)?;
    check_cap(&group, 1, 3, cap)?;
    if s.gcd(&n) != 1 {
        return invalid(format!("{s} is not a unit modulo {n}"));
    }
    let a = a % n;
    let s = s % n;
    let omega = cyclic_three_cocycle(n, a)?;
    let pulled = Cochain::from_fn(&group, &module, 3, |t| {
        let sc: Vec<usize> = t.iter().map(|&x| arith::mul_mod(x as u64, s, n) as usize).collect();
        omega.value(&sc).iter().map(|&v| v as i64).collect()
    })?;
    for c in 0..n {
        if let Some(b) = cohomologous_capped(&group, &module, &pulled, &cyclic_three_cocycle(n, c)?, cap)? {
            let s2 = arith::mul_mod(s, s, n);
            let s2_inv = arith::mod_inverse(s2, n).expect("s is a unit");
            let mut orientation_exponents = Vec::new();
            if arith::mul_mod(s2, a, n) == c {
                orientation_exponents.push(2);
            }
            if arith::mul_mod(s2_inv, a, n) == c {
                orientation_exponents.push(-2);
            }
            return Ok(PullbackClass { n, a, s, class: c, coboundary: b, orientation_exponents });
        }
    }
    Err(Error::Structure(format!("pullback of ω_{a} by {s} matches no ω_c on Z/{n}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyclic_trivial(n: u64, m: u64) -> (FiniteAbelianGroup, GModule) {
        let g = FiniteAbelianGroup::cyclic(n).unwrap();
        let module = GModule::trivial(&g, vec![m]).unwrap();
        (g, module)
    }

    #[test]
    fn d1_on_z2() {
        let (g, m) = cyclic_trivial(2, 2);
        let d1 = differential(&g, &m, 1).unwrap();
        assert_eq!((d1.rows(), d1.cols()), (4, 2));
        // (dc)(1,1) = c(1) - c(0) + c(1)
        assert_eq!(d1.row(3), &[(0, -1), (1, 2)]);
    }

    #[test]
    fn h2_z2_z2() {
        let (g, m) = cyclic_trivial(2, 2);
        assert_eq!(cohomology_group(&g, &m, 2).unwrap().invariant_factors, vec![2]);
    }

    #[test]
    fn coprime_vanishing() {
        let (g, m) = cyclic_trivial(3, 5);
        assert!(cohomology_group(&g, &m, 3).unwrap().is_trivial());
    }

    #[test]
    fn h0_is_invariants() {
        let g = FiniteAbelianGroup::cyclic(2).unwrap();
        let m = GModule::new(&g, vec![4], vec![vec![vec![-1]]]).unwrap();
        // fixed points of x -> -x on Z/4 are {0, 2}
        assert_eq!(cohomology_group(&g, &m, 0).unwrap().invariant_factors, vec![2]);
    }

    #[test]
    fn mixed_module() {
        // H^1(Z/2, Z/2 ⊕ Z/4 trivial) = Hom(Z/2, M) = Z/2 ⊕ Z/2
        let g = FiniteAbelianGroup::cyclic(2).unwrap();
        let m = GModule::trivial(&g, vec![2, 4]).unwrap();
        assert_eq!(cohomology_group(&g, &m, 1).unwrap().invariant_factors, vec![2, 2]);
        assert_eq!(cohomology_group(&g, &m, 2).unwrap().invariant_factors, vec![2, 2]);
    }

    #[test]
    fn omega_on_z2() {
        let w = cyclic_three_cocycle(2, 1).unwrap();
        let nonzero: Vec<usize> = (0..8).filter(|&i| w.values()[i] != 0).collect();
        assert_eq!(nonzero, vec![7]);
    }

    #[test]
    fn omega_classes_differ() {
        let (g, m) = cyclic_trivial(5, 5);
        let w1 = cyclic_three_cocycle(5, 1).unwrap();
        let w2 = cyclic_three_cocycle(5, 2).unwrap();
        assert!(is_cocycle(&g, &m, &w1).unwrap());
        assert!(cohomologous(&g, &m, &w1, &w2).unwrap().is_none());
        assert!(cohomologous(&g, &m, &w1, &w1).unwrap().is_some());
    }

    #[test]
    fn pullback_examples() {
        assert_eq!(pullback_class(5, 1, 2).unwrap().class, 4);
        assert_eq!(pullback_class(7, 3, 2).unwrap().class, 5);
        assert_eq!(pullback_class(7, 3, 1).unwrap().class, 3);
        assert!(pullback_class(6, 1, 2).is_err());
    }

    #[test]
    fn size_cap_is_enforced() {
        let (g, m) = cyclic_trivial(16, 2);
        assert!(matches!(
            cohomology_group_capped(&g, &m, 3, 1000),
            Err(Error::SizeCap { needed: 65536, cap: 1000 })
        ));
    }

    #[test]
    fn invariant_factor_assembly() {
        let h = CohomologyGroup::from_primary_exponents(&[(2, vec![1, 2]), (3, vec![1])]).unwrap();
        assert_eq!(h.invariant_factors, vec![2, 12]);
        assert_eq!(h.to_string(), "Z/2 ⊕ Z/12");
    }
}
