use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use super::Scalar;

/// Sparse row: strictly increasing column indices, no stored zeros.
pub type SparseRow = Vec<(usize, Scalar)>;

/// Incrementally built row echelon form over sparse rows.
///
/// Each stored row is normalised so its leading entry is one and every entry
/// sits at a column `>=` its pivot.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    cols: usize,
    pivots: BTreeMap<usize, SparseRow>,
}

/// `row - factor * other`, both sorted.
fn axpy(row: &[(usize, Scalar)], factor: &Scalar, other: &[(usize, Scalar)]) -> SparseRow {
    let mut out = Vec::with_capacity(row.len() + other.len());
    let (mut i, mut j) = (0, 0);
    while i < row.len() || j < other.len() {
        let take_row = j >= other.len() || (i < row.len() && row[i].0 < other[j].0);
        let take_other = i >= row.len() || (j < other.len() && other[j].0 < row[i].0);
        if take_row {
            out.push(row[i].clone());
            i += 1;
        } else if take_other {
            out.push((other[j].0, -(factor * &other[j].1)));
            j += 1;
        } else {
            let v = &row[i].1 - factor * &other[j].1;
            if !v.is_zero() {
                out.push((row[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

impl Echelon {
    pub fn new(cols: usize) -> Self {
        Echelon {
            cols,
            pivots: BTreeMap::new(),
        }
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn pivot_columns(&self) -> impl Iterator<Item = usize> + '_ {
        self.pivots.keys().copied()
    }

    /// Reduces `row` against the stored pivots.
    pub fn reduce(&self, mut row: SparseRow) -> SparseRow {
        let mut i = 0;
        while i < row.len() {
            let col = row[i].0;
            match self.pivots.get(&col) {
                Some(p) => {
                    let factor = row[i].1.clone();
                    row = axpy(&row, &factor, p);
                }
                None => i += 1,
            }
        }
        row
    }

    /// Adds a row; returns whether it enlarged the row space.
    pub fn insert(&mut self, row: SparseRow) -> bool {
        debug_assert!(row.iter().all(|(c, _)| *c < self.cols));
        let row = self.reduce(row);
        let Some((lead, lead_val)) = row.first().cloned() else {
            return false;
        };
        let inv = Scalar::one() / lead_val;
        let row: SparseRow = row.into_iter().map(|(c, v)| (c, v * &inv)).collect();
        self.pivots.insert(lead, row);
        true
    }

    pub fn insert_dense(&mut self, row: &[Scalar]) -> bool {
        let sparse = row
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(c, v)| (c, v.clone()))
            .collect();
        self.insert(sparse)
    }

    /// Fully reduced rows, ordered by pivot column.
    pub fn into_rref(mut self) -> Vec<(usize, SparseRow)> {
        let keys: Vec<usize> = self.pivots.keys().rev().copied().collect();
        for p in keys {
            let mut row = self.pivots.remove(&p).unwrap();
            // pivots with larger columns are already fully reduced
            let mut i = 1;
            while i < row.len() {
                let col = row[i].0;
                if self.pivots.contains_key(&col) {
                    let other = self.pivots.get(&col).unwrap();
                    let factor = row[i].1.clone();
                    row = axpy(&row, &factor, other);
                } else {
                    i += 1;
                }
            }
            self.pivots.insert(p, row);
        }
        self.pivots.into_iter().collect()
    }

    /// Basis of `{v : r·v = 0 for every stored row r}`, one vector per free column.
    pub fn null_space(self) -> Vec<Vec<Scalar>> {
        let cols = self.cols;
        let rref = self.into_rref();
        let mut is_pivot = alloc::vec![false; cols];
        for (p, _) in &rref {
            is_pivot[*p] = true;
        }
        let mut out = Vec::new();
        for free in (0..cols).filter(|c| !is_pivot[*c]) {
            let mut v = alloc::vec![Scalar::zero(); cols];
            v[free] = Scalar::one();
            for (p, row) in &rref {
                if let Ok(k) = row.binary_search_by_key(&free, |(c, _)| *c) {
                    v[*p] = -row[k].1.clone();
                }
            }
            out.push(v);
        }
        out
    }
}
