use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};

/// `Z/n_1 × ... × Z/n_r`. Elements are indexed in mixed radix with the last
/// factor varying fastest; the empty list is the trivial group.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u64>", into = "Vec<u64>")]
pub struct FiniteAbelianGroup {
    orders: Vec<u64>,
}

impl FiniteAbelianGroup {
    pub fn new(orders: Vec<u64>) -> Result<Self> {
        if let Some(&bad) = orders.iter().find(|&&n| n < 2) {
            return invalid(format!("cyclic factor orders must be at least 2, got {bad}"));
        }
        if orders.iter().try_fold(1u64, |acc, &n| acc.checked_mul(n)).is_none() {
            return invalid("group order exceeds 64 bits");
        }
        Ok(FiniteAbelianGroup { orders })
    }

    pub fn cyclic(n: u64) -> Result<Self> {
        Self::new(vec![n])
    }

    pub fn orders(&self) -> &[u64] {
        &self.orders
    }

    pub fn num_generators(&self) -> usize {
        self.orders.len()
    }

    pub fn order(&self) -> u64 {
        self.orders.iter().product()
    }

    /// Coordinates of the element with the given index.
    pub fn element(&self, mut index: usize) -> Vec<u64> {
        let mut out = vec![0; self.orders.len()];
        for (slot, &n) in out.iter_mut().zip(&self.orders).rev() {
            *slot = index as u64 % n;
            index /= n as usize;
        }
        out
    }

    pub fn index(&self, coords: &[u64]) -> usize {
        coords
            .iter()
            .zip(&self.orders)
            .fold(0usize, |acc, (&x, &n)| acc * n as usize + (x % n) as usize)
    }

    /// Index of the `t`-th generator.
    pub fn generator(&self, t: usize) -> usize {
        let mut coords = vec![0; self.orders.len()];
        coords[t] = 1;
        self.index(&coords)
    }

    /// Addition table on element indices.
    pub(crate) fn addition_table(&self) -> Vec<Vec<u32>> {
        let size = self.order() as usize;
        let elems: Vec<Vec<u64>> = (0..size).map(|i| self.element(i)).collect();
        elems
            .iter()
            .map(|a| {
                elems
                    .iter()
                    .map(|b| {
                        let sum: Vec<u64> = a.iter().zip(b).zip(&self.orders).map(|((x, y), n)| (x + y) % n).collect();
                        self.index(&sum) as u32
                    })
                    .collect()
            })
            .collect()
    }
}

impl TryFrom<Vec<u64>> for FiniteAbelianGroup {
    type Error = crate::Error;

    fn try_from(orders: Vec<u64>) -> Result<Self> {
        Self::new(orders)
    }
}

impl From<FiniteAbelianGroup> for Vec<u64> {
    fn from(g: FiniteAbelianGroup) -> Self {
        g.orders
    }
}
