use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{Echelon, Scalar};

/// Dense matrix of exact scalars, row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            write!(f, "  ")?;
            for c in 0..self.cols {
                write!(f, "{} ", self[(r, c)])?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: alloc::vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Scalar::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { rows, cols, data }
    }

    /// Builds a matrix from integer rows. Panics on ragged input.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        Matrix::from_fn(rows.len(), cols, |r, c| {
            assert_eq!(rows[r].len(), cols, "ragged rows");
            super::int(rows[r][c])
        })
    }

    pub fn from_columns(rows: usize, columns: &[Vec<Scalar>]) -> Self {
        Matrix::from_fn(rows, columns.len(), |r, c| columns[c][r].clone())
    }

    pub fn from_row_vecs(cols: usize, rows: &[Vec<Scalar>]) -> Self {
        Matrix::from_fn(rows.len(), cols, |r, c| rows[r][c].clone())
    }

    /// Column vector.
    pub fn column_vector(v: &[Scalar]) -> Self {
        Matrix {
            rows: v.len(),
            cols: 1,
            data: v.to_vec(),
        }
    }

    /// Row vector.
    pub fn row_vector(v: &[Scalar]) -> Self {
        Matrix {
            rows: 1,
            cols: v.len(),
            data: v.to_vec(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn column(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self[(r, c)].clone()).collect()
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn columns(&self) -> Vec<Vec<Scalar>> {
        (0..self.cols).map(|c| self.column(c)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn nonzero_count(&self) -> usize {
        self.data.iter().filter(|v| !v.is_zero()).count()
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |r, c| self[(c, r)].clone())
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|v| v * s).collect(),
        }
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols, "apply: length mismatch");
        (0..self.rows)
            .map(|r| {
                let mut acc = Scalar::zero();
                for (a, b) in self.row(r).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += a * b;
                    }
                }
                acc
            })
            .collect()
    }

    /// Matrix product `self * rhs`, skipping zero entries on both sides.
    pub fn compose(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(
            self.cols, rhs.rows,
            "compose: {}x{} * {}x{}",
            self.rows, self.cols, rhs.rows, rhs.cols
        );
        let sparse_rhs: Vec<Vec<(usize, &Scalar)>> = (0..rhs.rows)
            .map(|k| {
                rhs.row(k)
                    .iter()
                    .enumerate()
                    .filter(|(_, v)| !v.is_zero())
                    .collect()
            })
            .collect();
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for (k, a) in self.row(i).iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for (j, b) in &sparse_rhs[k] {
                    out.data[i * rhs.cols + j] += a * *b;
                }
            }
        }
        out
    }

    /// Kronecker product `self ⊗ rhs`, left factor slowest.
    pub fn kron(&self, rhs: &Matrix) -> Matrix {
        let mut out = Matrix::zeros(self.rows * rhs.rows, self.cols * rhs.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = &self[(i, j)];
                if a.is_zero() {
                    continue;
                }
                for k in 0..rhs.rows {
                    for l in 0..rhs.cols {
                        let b = &rhs[(k, l)];
                        if !b.is_zero() {
                            out[(i * rhs.rows + k, j * rhs.cols + l)] = a * b;
                        }
                    }
                }
            }
        }
        out
    }

    /// Stacks `blocks` vertically.
    pub fn vstack(cols: usize, blocks: &[&Matrix]) -> Matrix {
        let mut data = Vec::new();
        let mut rows = 0;
        for b in blocks {
            assert_eq!(b.cols, cols, "vstack: column mismatch");
            data.extend_from_slice(&b.data);
            rows += b.rows;
        }
        Matrix { rows, cols, data }
    }

    /// Places `blocks` side by side.
    pub fn hstack(rows: usize, blocks: &[&Matrix]) -> Matrix {
        let cols: usize = blocks.iter().map(|b| b.cols).sum();
        let mut out = Matrix::zeros(rows, cols);
        let mut off = 0;
        for b in blocks {
            assert_eq!(b.rows, rows, "hstack: row mismatch");
            out.set_block(0, off, b);
            off += b.cols;
        }
        out
    }

    pub fn block(&self, row0: usize, col0: usize, rows: usize, cols: usize) -> Matrix {
        Matrix::from_fn(rows, cols, |r, c| self[(row0 + r, col0 + c)].clone())
    }

    pub fn set_block(&mut self, row0: usize, col0: usize, b: &Matrix) {
        for r in 0..b.rows {
            for c in 0..b.cols {
                self[(row0 + r, col0 + c)] = b[(r, c)].clone();
            }
        }
    }

    /// Output row `i` of `self` becomes row `map[i]`.
    pub fn permute_rows(&self, map: &[usize]) -> Matrix {
        assert_eq!(map.len(), self.rows);
        let mut out = Matrix::zeros(self.rows, self.cols);
        for (i, &t) in map.iter().enumerate() {
            out.data[t * self.cols..(t + 1) * self.cols].clone_from_slice(self.row(i));
        }
        out
    }

    /// Precomposes with the permutation sending basis vector `i` to `map[i]`:
    /// column `i` of the result is column `map[i]` of `self`.
    pub fn permute_cols(&self, map: &[usize]) -> Matrix {
        assert_eq!(map.len(), self.cols);
        Matrix::from_fn(self.rows, self.cols, |r, c| self[(r, map[c])].clone())
    }

    /// First column on which `self` and `other` differ, with the difference.
    pub fn first_difference(&self, other: &Matrix) -> Option<(usize, Vec<(usize, Scalar)>)> {
        assert_eq!(
            self.shape(),
            other.shape(),
            "first_difference: shape mismatch"
        );
        for c in 0..self.cols {
            let diff: Vec<(usize, Scalar)> = (0..self.rows)
                .filter_map(|r| {
                    let d = &self[(r, c)] - &other[(r, c)];
                    (!d.is_zero()).then_some((r, d))
                })
                .collect();
            if !diff.is_empty() {
                return Some((c, diff));
            }
        }
        None
    }

    pub fn echelon(&self) -> Echelon {
        let mut e = Echelon::new(self.cols);
        for r in 0..self.rows {
            e.insert_dense(self.row(r));
        }
        e
    }

    pub fn rank(&self) -> usize {
        self.echelon().rank()
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let solver = Solver::new(self);
        if solver.rank() != self.rows {
            return None;
        }
        solver.solve_matrix(&Matrix::identity(self.rows))
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Scalar;
    fn index(&self, (r, c): (usize, usize)) -> &Scalar {
        debug_assert!(r < self.rows && c < self.cols);
        &self.data[r * self.cols + c]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Scalar {
        debug_assert!(r < self.rows && c < self.cols);
        &mut self.data[r * self.cols + c]
    }
}

impl Add for &Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.shape(), rhs.shape(), "add: shape mismatch");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.shape(), rhs.shape(), "sub: shape mismatch");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Neg for &Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| -a).collect(),
        }
    }
}

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        self.compose(rhs)
    }
}

/// Gauss-Jordan factorisation `E·A = R` used to solve `A x = b` for many
/// right-hand sides.
#[derive(Clone, Debug)]
pub struct Solver {
    rows: usize,
    cols: usize,
    /// Pivot column of each of the first `rank` rows of `R`.
    pivots: Vec<usize>,
    /// The row operations `E`, `rows x rows`.
    ops: Matrix,
}

impl Solver {
    pub fn new(a: &Matrix) -> Self {
        let (rows, cols) = a.shape();
        let mut aug = Matrix::hstack(rows, &[a, &Matrix::identity(rows)]);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(p) = (r..rows).find(|&i| !aug[(i, c)].is_zero()) else {
                continue;
            };
            if p != r {
                for k in 0..aug.cols {
                    let tmp = aug[(p, k)].clone();
                    aug[(p, k)] = aug[(r, k)].clone();
                    aug[(r, k)] = tmp;
                }
            }
            let inv = Scalar::one() / &aug[(r, c)];
            for k in 0..aug.cols {
                if !aug[(r, k)].is_zero() {
                    aug[(r, k)] *= &inv;
                }
            }
            let pivot_row: Vec<(usize, Scalar)> = (0..aug.cols)
                .filter(|&k| !aug[(r, k)].is_zero())
                .map(|k| (k, aug[(r, k)].clone()))
                .collect();
            for i in 0..rows {
                if i == r || aug[(i, c)].is_zero() {
                    continue;
                }
                let f = aug[(i, c)].clone();
                for (k, v) in &pivot_row {
                    aug[(i, *k)] -= &f * v;
                }
            }
            pivots.push(c);
            r += 1;
        }
        let ops = aug.block(0, cols, rows, rows);
        Solver {
            rows,
            cols,
            pivots,
            ops,
        }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Some solution of `A x = b` (free variables zero), if one exists.
    pub fn solve(&self, b: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(b.len(), self.rows, "solve: rhs length mismatch");
        let c = self.ops.apply(b);
        if c[self.rank()..].iter().any(|v| !v.is_zero()) {
            return None;
        }
        let mut x = alloc::vec![Scalar::zero(); self.cols];
        for (i, &p) in self.pivots.iter().enumerate() {
            x[p] = c[i].clone();
        }
        Some(x)
    }

    pub fn solve_matrix(&self, b: &Matrix) -> Option<Matrix> {
        let cols: Option<Vec<Vec<Scalar>>> =
            (0..b.cols()).map(|j| self.solve(&b.column(j))).collect();
        Some(Matrix::from_columns(self.cols, &cols?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{frac, int};

    #[test]
    fn compose_matches_naive_product() {
        let a = Matrix::from_i64(&[&[1, 2, 0], &[0, -1, 3]]);
        let b = Matrix::from_i64(&[&[2, 0], &[1, 1], &[0, 4]]);
        let naive = Matrix::from_fn(2, 2, |i, j| (0..3).map(|k| &a[(i, k)] * &b[(k, j)]).sum());
        assert_eq!(a.compose(&b), naive);
    }

    #[test]
    fn kron_of_identities_is_identity() {
        assert_eq!(
            Matrix::identity(2).kron(&Matrix::identity(3)),
            Matrix::identity(6)
        );
    }

    #[test]
    fn kron_acts_on_pure_tensors() {
        let f = Matrix::from_i64(&[&[1, 2], &[3, 4]]);
        let g = Matrix::from_i64(&[&[0, 1], &[1, 1], &[2, 0]]);
        let fg = f.kron(&g);
        for i in 0..2 {
            for j in 0..2 {
                let col = fg.column(i * 2 + j);
                let fi = f.column(i);
                let gj = g.column(j);
                for (a, fa) in fi.iter().enumerate() {
                    for (b, gb) in gj.iter().enumerate() {
                        assert_eq!(col[a * 3 + b], fa * gb);
                    }
                }
            }
        }
    }

    #[test]
    fn inverse_of_rational_matrix() {
        let a = Matrix::from_i64(&[&[2, 1], &[1, 1]]);
        let inv = a.inverse().unwrap();
        assert_eq!(&a * &inv, Matrix::identity(2));
        assert!(Matrix::from_i64(&[&[1, 2], &[2, 4]]).inverse().is_none());
    }

    #[test]
    fn solver_detects_inconsistency() {
        let a = Matrix::from_i64(&[&[1, 1], &[2, 2]]);
        let s = Solver::new(&a);
        assert_eq!(s.rank(), 1);
        assert!(s.solve(&[int(1), int(3)]).is_none());
        let x = s.solve(&[int(1), int(2)]).unwrap();
        assert_eq!(a.apply(&x), [int(1), int(2)]);
        let half = Solver::new(&Matrix::from_i64(&[&[2]]))
            .solve(&[int(1)])
            .unwrap();
        assert_eq!(half, [frac(1, 2)]);
    }
}
