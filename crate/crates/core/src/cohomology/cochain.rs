use serde::{Deserialize, Serialize};

use super::group::FiniteAbelianGroup;
use super::module::GModule;
use crate::error::{invalid, Result};

/// A function `G^k -> M`, stored densely: tuple-major (first argument most
/// significant, group elements in mixed-radix order), module coordinate minor.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cochain {
    group: Vec<u64>,
    module: Vec<u64>,
    degree: u32,
    values: Vec<u64>,
}

impl Cochain {
    pub fn new(group: &FiniteAbelianGroup, module: &GModule, degree: u32, values: Vec<i64>) -> Result<Self> {
        let expected = table_len(group, module.dim(), degree)?;
        if values.len() != expected {
            return invalid(format!(
                "a degree-{degree} cochain needs {expected} values, got {}",
                values.len()
            ));
        }
        let d = module.dim();
        let values = values
            .iter()
            .enumerate()
            .map(|(idx, &x)| x.rem_euclid(module.orders()[idx % d] as i64) as u64)
            .collect();
        Ok(Cochain { group: group.orders().to_vec(), module: module.orders().to_vec(), degree, values })
    }

    /// Builds a cochain from a function of the argument tuple (as group
    /// element indices) returning one integer per module coordinate.
    pub fn from_fn(
        group: &FiniteAbelianGroup,
        module: &GModule,
        degree: u32,
        mut f: impl FnMut(&[usize]) -> Vec<i64>,
    ) -> Result<Self> {
        let d = module.dim();
        let count = table_len(group, d, degree)? / d.max(1);
        let size = group.order() as usize;
        let mut tuple = vec![0usize; degree as usize];
        let mut values = Vec::with_capacity(count * d);
        for idx in 0..count {
            decode(idx, size, &mut tuple);
            let v = f(&tuple);
            if v.len() != d {
                return invalid(format!("cochain value has {} coordinates, module has {d}", v.len()));
            }
            values.extend(v);
        }
        Self::new(group, module, degree, values)
    }

    pub fn zero(group: &FiniteAbelianGroup, module: &GModule, degree: u32) -> Result<Self> {
        let len = table_len(group, module.dim(), degree)?;
        Ok(Cochain { group: group.orders().to_vec(), module: module.orders().to_vec(), degree, values: vec![0; len] })
    }

    pub(crate) fn from_reduced(group: &FiniteAbelianGroup, module: &GModule, degree: u32, values: Vec<u64>) -> Self {
        Cochain { group: group.orders().to_vec(), module: module.orders().to_vec(), degree, values }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }

    pub fn group_orders(&self) -> &[u64] {
        &self.group
    }

    pub fn module_orders(&self) -> &[u64] {
        &self.module
    }

    /// Value at the tuple of group element indices `args`.
    pub fn value(&self, args: &[usize]) -> &[u64] {
        let size: usize = self.group.iter().product::<u64>() as usize;
        let d = self.module.len();
        let idx = encode(args, size);
        &self.values[idx * d..(idx + 1) * d]
    }

    /// Checks that this cochain lives on `(group, module)` and is reduced.
    pub(crate) fn validate(&self, group: &FiniteAbelianGroup, module: &GModule) -> Result<()> {
        if self.group != group.orders() || self.module != module.orders() {
            return invalid("cochain does not match the given group and module");
        }
        let expected = table_len(group, module.dim(), self.degree)?;
        if self.values.len() != expected {
            return invalid(format!(
                "a degree-{} cochain needs {expected} values, got {}",
                self.degree,
                self.values.len()
            ));
        }
        let d = module.dim();
        if let Some((idx, _)) = self.values.iter().enumerate().find(|&(idx, &x)| x >= module.orders()[idx % d]) {
            return invalid(format!("cochain value at position {idx} is not reduced"));
        }
        Ok(())
    }
}

fn table_len(group: &FiniteAbelianGroup, dim: usize, degree: u32) -> Result<usize> {
    (group.order() as usize)
        .checked_pow(degree)
        .and_then(|t| t.checked_mul(dim))
        .ok_or_else(|| crate::Error::InvalidInput("cochain table too large".into()))
}

pub(crate) fn encode(args: &[usize], size: usize) -> usize {
    args.iter().fold(0, |acc, &g| acc * size + g)
}

pub(crate) fn decode(mut idx: usize, size: usize, out: &mut [usize]) {
    for slot in out.iter_mut().rev() {
        *slot = idx % size;
        idx /= size;
    }
}

/// Integer matrix with sparse rows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Vec<(usize, i64)>>,
}

impl IntMatrix {
    pub(crate) fn new(cols: usize, entries: Vec<Vec<(usize, i64)>>) -> Self {
        IntMatrix { rows: entries.len(), cols, entries }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Non-zero entries of row `i` as `(column, value)`, columns ascending.
    pub fn row(&self, i: usize) -> &[(usize, i64)] {
        &self.entries[i]
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i].iter().find(|&&(c, _)| c == j).map_or(0, |&(_, v)| v)
    }

    pub fn to_dense(&self) -> Vec<Vec<i64>> {
        self.entries
            .iter()
            .map(|row| {
                let mut dense = vec![0; self.cols];
                for &(c, v) in row {
                    dense[c] = v;
                }
                dense
            })
            .collect()
    }
}
