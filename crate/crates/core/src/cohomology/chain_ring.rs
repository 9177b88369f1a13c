//! Linear algebra over the chain ring `Z/p^E`.
//!
//! Every ideal of `Z/p^E` is `(p^v)`, so a matrix is diagonalised by row and
//! column operations that always pivot on an entry of minimal valuation.
//! Row operations are not recorded; column operations are, so that kernels
//! and solutions can be pulled back to the original coordinates.

use crate::arith::{mod_inverse, mul_mod};

#[derive(Debug, Clone, Copy)]
pub(crate) struct ChainRing {
    pub p: u64,
    pub e: u32,
    pub q: u64,
}

impl ChainRing {
    pub fn new(p: u64, e: u32) -> Self {
        ChainRing { p, e, q: p.pow(e) }
    }

    /// `p`-adic valuation, `E` for zero.
    pub fn val(&self, x: u64) -> u32 {
        if x == 0 {
            return self.e;
        }
        let mut v = 0;
        let mut x = x;
        while x.is_multiple_of(self.p) {
            x /= self.p;
            v += 1;
        }
        v
    }

    pub fn pow_p(&self, v: u32) -> u64 {
        self.p.pow(v)
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        mul_mod(a, b, self.q)
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        ((a as u128 + b as u128) % self.q as u128) as u64
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        self.add(a, self.q - b % self.q)
    }

    /// Inverse of a unit.
    pub fn inv(&self, u: u64) -> u64 {
        mod_inverse(u, self.q).expect("pivot unit part must be invertible")
    }
}

/// Outcome of [`diagonalise`]: pivots `(row, col, valuation, unit)` such that
/// after the unrecorded row operations and the recorded column operations the
/// matrix has entry `unit * p^valuation` at each pivot and zeros elsewhere.
#[derive(Debug, Default)]
pub(crate) struct Diagonal {
    pub pivots: Vec<Pivot>,
    /// `(j, c, t)`: column `j` was replaced by `col_j - t * col_c`.
    pub ops: Vec<(usize, usize, u64)>,
}

#[derive(Debug, Clone, Copy)]
pub(crate) struct Pivot {
    pub row: usize,
    pub col: usize,
    pub val: u32,
    pub unit: u64,
}

impl Diagonal {
    /// `Q^{-1} b` where `Q` is the product of the recorded column operations.
    pub fn apply_inverse(&self, ring: &ChainRing, b: &mut [u64]) {
        for &(j, c, t) in &self.ops {
            if b[j] != 0 {
                b[c] = ring.add(b[c], ring.mul(t, b[j]));
            }
        }
    }

    /// `Q z`.
    pub fn apply(&self, ring: &ChainRing, z: &mut [u64]) {
        for &(j, c, t) in self.ops.iter().rev() {
            if z[j] != 0 {
                z[c] = ring.sub(z[c], ring.mul(t, z[j]));
            }
        }
    }
}

/// Diagonalises the first `ncols` columns of `rows` in place. Columns at index
/// `ncols` and beyond (right-hand sides) follow the row operations only.
pub(crate) fn diagonalise(ring: &ChainRing, rows: &mut [Vec<u64>], ncols: usize, record: bool) -> Diagonal {
    let nrows = rows.len();
    let mut row_used = vec![false; nrows];
    let mut col_used = vec![false; ncols];
    // rows that are zero on every unused column never need scanning again
    let mut row_dead = vec![false; nrows];
    let mut out = Diagonal::default();
    let mut floor = 0;

    loop {
        let mut best: Option<(usize, usize, u32)> = None;
        'scan: for r in 0..nrows {
            if row_used[r] || row_dead[r] {
                continue;
            }
            let mut any = false;
            for (c, &x) in rows[r][..ncols].iter().enumerate() {
                if x == 0 || col_used[c] {
                    continue;
                }
                any = true;
                let v = ring.val(x);
                if best.is_none_or(|(_, _, bv)| v < bv) {
                    best = Some((r, c, v));
                    if v <= floor {
                        break 'scan;
                    }
                }
            }
            if !any {
                row_dead[r] = true;
            }
        }
        let Some((r, c, v)) = best else { break };
        floor = v;
        let pv = ring.pow_p(v);
        let unit = rows[r][c] / pv;
        let unit_inv = ring.inv(unit % ring.q);

        let support: Vec<usize> = (0..rows[r].len()).filter(|&j| rows[r][j] != 0).collect();
        let pivot_row = rows[r].clone();
        for i in 0..nrows {
            if i == r || row_used[i] || rows[i][c] == 0 {
                continue;
            }
            let t = ring.mul(rows[i][c] / pv, unit_inv);
            let row = &mut rows[i];
            for &j in &support {
                row[j] = ring.sub(row[j], ring.mul(t, pivot_row[j]));
            }
            debug_assert_eq!(row[c], 0);
        }
        for j in support.into_iter().filter(|&j| j < ncols && j != c) {
            if col_used[j] {
                continue;
            }
            let t = ring.mul(rows[r][j] / pv, unit_inv);
            if record {
                out.ops.push((j, c, t));
            }
            rows[r][j] = 0;
        }
        row_used[r] = true;
        col_used[c] = true;
        out.pivots.push(Pivot { row: r, col: c, val: v, unit });
    }
    out
}

/// Exponents `v ≥ 1` of the cyclic factors `Z/p^v` of `(Z/p^E)^n / rowspan`.
pub(crate) fn quotient_exponents(ring: &ChainRing, rows: &mut [Vec<u64>], ncols: usize) -> Vec<u32> {
    let diag = diagonalise(ring, rows, ncols, false);
    let mut exps: Vec<u32> = diag.pivots.iter().map(|p| p.val).filter(|&v| v > 0).collect();
    exps.extend(std::iter::repeat_n(ring.e, ncols - diag.pivots.len()));
    exps.sort_unstable();
    exps
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quotient_of_z4_by_2() {
        let ring = ChainRing::new(2, 2);
        let mut rows = vec![vec![2]];
        assert_eq!(quotient_exponents(&ring, &mut rows, 1), vec![1]);
    }

    #[test]
    fn kernel_via_recorded_ops() {
        // x + 2y + 3z = 0 over Z/9
        let ring = ChainRing::new(3, 2);
        let original = vec![vec![1u64, 2, 3]];
        let mut rows = original.clone();
        let diag = diagonalise(&ring, &mut rows, 3, true);
        assert_eq!(diag.pivots.len(), 1);
        for free in 0..3 {
            if diag.pivots.iter().any(|p| p.col == free) {
                continue;
            }
            let mut z = vec![0; 3];
            z[free] = 1;
            diag.apply(&ring, &mut z);
            let dot = (0..3).fold(0, |acc, j| ring.add(acc, ring.mul(original[0][j], z[j])));
            assert_eq!(dot, 0);
        }
    }

    #[test]
    fn inverse_round_trip() {
        let ring = ChainRing::new(5, 1);
        let mut rows = vec![vec![1, 2, 3], vec![0, 4, 1]];
        let diag = diagonalise(&ring, &mut rows, 3, true);
        let mut v = vec![1, 3, 2];
        let orig = v.clone();
        diag.apply_inverse(&ring, &mut v);
        diag.apply(&ring, &mut v);
        assert_eq!(v, orig);
    }
}
