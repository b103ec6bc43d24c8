use alloc::vec::Vec;

use num_traits::{One, Zero};

use super::{Echelon, Matrix, Scalar};
use crate::Error;

/// A linear subspace of `Q^n`, stored as the nonzero rows of the reduced row
/// echelon form of any spanning set. Equal subspaces compare equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace::span(ambient, &Matrix::identity(ambient).columns())
    }

    pub fn span(ambient: usize, vectors: &[Vec<Scalar>]) -> Self {
        let mut e = Echelon::new(ambient);
        for v in vectors {
            assert_eq!(v.len(), ambient, "span: vector length mismatch");
            e.insert_dense(v);
        }
        Subspace::from_echelon(e)
    }

    /// Span of the columns of `m`.
    pub fn column_space(m: &Matrix) -> Self {
        Subspace::span(m.rows(), &m.columns())
    }

    pub(crate) fn from_echelon(e: Echelon) -> Self {
        let ambient = e.cols();
        let mut basis = Vec::new();
        let mut pivots = Vec::new();
        for (p, row) in e.into_rref() {
            let mut v = alloc::vec![Scalar::zero(); ambient];
            for (c, x) in row {
                v[c] = x;
            }
            pivots.push(p);
            basis.push(v);
        }
        Subspace {
            ambient,
            basis,
            pivots,
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// `ambient x dim` matrix whose columns are the canonical basis.
    pub fn basis_matrix(&self) -> Matrix {
        Matrix::from_columns(self.ambient, &self.basis)
    }

    /// Coordinates of `v` in the canonical basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(v.len(), self.ambient, "coordinates: length mismatch");
        let coords: Vec<Scalar> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut residual = v.to_vec();
        for (c, b) in coords.iter().zip(&self.basis) {
            if c.is_zero() {
                continue;
            }
            for (r, x) in residual.iter_mut().zip(b) {
                if !x.is_zero() {
                    *r -= c * x;
                }
            }
        }
        residual.iter().all(Zero::is_zero).then_some(coords)
    }

    /// Coordinates of every column of `m`; `None` if one falls outside.
    pub fn coordinate_matrix(&self, m: &Matrix) -> Option<Matrix> {
        let cols: Option<Vec<Vec<Scalar>>> =
            m.columns().iter().map(|c| self.coordinates(c)).collect();
        Some(Matrix::from_columns(self.dim(), &cols?))
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.coordinates(v).is_some()
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.ambient == other.ambient && self.basis.iter().all(|b| other.contains(b))
    }

    /// Vectors orthogonal (under the standard pairing) to the subspace.
    pub fn annihilator(&self) -> Subspace {
        let mut e = Echelon::new(self.ambient);
        for b in &self.basis {
            e.insert_dense(b);
        }
        Subspace::span(self.ambient, &e.null_space())
    }

    /// Matrix `Q` with `Q v = 0` exactly when `v` lies in the subspace.
    pub fn membership_matrix(&self) -> Matrix {
        Matrix::from_row_vecs(self.ambient, self.annihilator().basis())
    }

    /// Image under a linear map.
    pub fn image(&self, map: &Matrix) -> Subspace {
        assert_eq!(map.cols(), self.ambient, "image: dimension mismatch");
        let imgs: Vec<Vec<Scalar>> = self.basis.iter().map(|b| map.apply(b)).collect();
        Subspace::span(map.rows(), &imgs)
    }
}

/// Full solution space of `m·v = 0`.
pub fn kernel(m: &Matrix) -> Subspace {
    Subspace::span(m.cols(), &m.echelon().null_space())
}

/// Largest subspace contained in both arguments.
pub fn intersect(a: &Subspace, b: &Subspace) -> Result<Subspace, Error> {
    if a.ambient != b.ambient {
        return Err(Error::DimensionMismatch {
            context: "intersect",
            left: a.ambient,
            right: b.ambient,
        });
    }
    let mut e = Echelon::new(a.ambient);
    for v in a
        .annihilator()
        .basis
        .iter()
        .chain(b.annihilator().basis.iter())
    {
        e.insert_dense(v);
    }
    Ok(Subspace::span(a.ambient, &e.null_space()))
}

/// `Q^n / rel`, realised on the span of the standard basis vectors at the
/// non-pivot columns of `rel`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quotient {
    pub dim: usize,
    /// `dim x ambient`, kernel exactly `rel`.
    pub projector: Matrix,
    /// `ambient x dim`, `projector * section = id`.
    pub section: Matrix,
}

pub fn quotient(ambient: usize, rel: &Subspace) -> Result<Quotient, Error> {
    if rel.ambient != ambient {
        return Err(Error::DimensionMismatch {
            context: "quotient",
            left: ambient,
            right: rel.ambient,
        });
    }
    let free: Vec<usize> = (0..ambient).filter(|c| !rel.pivots.contains(c)).collect();
    let dim = free.len();
    let mut projector = Matrix::zeros(dim, ambient);
    let mut section = Matrix::zeros(ambient, dim);
    for (k, &j) in free.iter().enumerate() {
        projector[(k, j)] = Scalar::one();
        section[(j, k)] = Scalar::one();
        for (b, &p) in rel.basis.iter().zip(&rel.pivots) {
            if !b[j].is_zero() {
                projector[(k, p)] = -b[j].clone();
            }
        }
    }
    Ok(Quotient {
        dim,
        projector,
        section,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::int;

    fn v(xs: &[i64]) -> Vec<Scalar> {
        xs.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn kernel_of_identity_is_zero() {
        assert_eq!(kernel(&Matrix::identity(2)).dim(), 0);
    }

    #[test]
    fn kernel_of_difference_row() {
        let k = kernel(&Matrix::from_i64(&[&[1, -1]]));
        assert_eq!(k, Subspace::span(2, &[v(&[1, 1])]));
    }

    #[test]
    fn intersections() {
        let a = Subspace::span(2, &[v(&[1, 0])]);
        let b = Subspace::span(2, &[v(&[0, 1])]);
        assert_eq!(intersect(&a, &a).unwrap(), a);
        assert_eq!(intersect(&a, &b).unwrap().dim(), 0);
        assert!(matches!(
            intersect(&a, &Subspace::zero(3)),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn canonical_form_is_spanning_set_independent() {
        let a = Subspace::span(3, &[v(&[1, 2, 3]), v(&[0, 1, 1])]);
        let b = Subspace::span(3, &[v(&[1, 3, 4]), v(&[2, 5, 7]), v(&[1, 1, 2])]);
        assert_eq!(a, b);
    }

    #[test]
    fn quotient_extremes() {
        let q = quotient(3, &Subspace::zero(3)).unwrap();
        assert_eq!(q.dim, 3);
        assert_eq!(q.projector.rank(), 3);
        let q = quotient(3, &Subspace::full(3)).unwrap();
        assert_eq!(q.dim, 0);
    }

    #[test]
    fn quotient_kills_relations() {
        let rel = Subspace::span(3, &[v(&[1, 1, 0])]);
        let q = quotient(3, &rel).unwrap();
        assert_eq!(q.dim, 2);
        assert_eq!(&q.projector * &q.section, Matrix::identity(2));
        assert_eq!(kernel(&q.projector), rel);
    }
}
