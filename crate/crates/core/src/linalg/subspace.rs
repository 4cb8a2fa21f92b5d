//! Projective linear subspaces of P^n, stored as canonical RREF bases of
//! their affine cones. The empty subspace has dimension -1; a point has
//! dimension 0. Span, intersection and containment are exact.

use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::matrix::Matrix;

#[derive(Clone, Debug, PartialEq)]
pub struct ProjSubspace<F: Field> {
    ambient_dim: usize,
    basis: Matrix<F>,
}

impl<F: Field> ProjSubspace<F> {
    pub fn empty(field: F, ambient_dim: usize) -> Self {
        ProjSubspace {
            ambient_dim,
            basis: Matrix::zero(field, 0, ambient_dim + 1),
        }
    }

    /// Build from spanning rows (not necessarily independent).
    pub fn from_rows(field: F, ambient_dim: usize, rows: Vec<Vec<F::Elem>>) -> Result<Self> {
        for r in &rows {
            if r.len() != ambient_dim + 1 {
                return Err(Error::AmbientMismatch(r.len(), ambient_dim + 1));
            }
        }
        let m = Matrix::from_rows(field, rows)?;
        Ok(ProjSubspace {
            ambient_dim,
            basis: m.rref_nonzero(),
        })
    }

    pub fn from_matrix(ambient_dim: usize, m: &Matrix<F>) -> Result<Self> {
        if m.cols() != ambient_dim + 1 {
            return Err(Error::AmbientMismatch(m.cols(), ambient_dim + 1));
        }
        Ok(ProjSubspace {
            ambient_dim,
            basis: m.rref_nonzero(),
        })
    }

    pub fn from_i64_rows(field: F, ambient_dim: usize, rows: &[Vec<i64>]) -> Result<Self> {
        let m = Matrix::from_i64_rows(field, rows)?;
        Self::from_matrix(ambient_dim, &m)
    }

    /// A single projective point; errors on the zero vector.
    pub fn point(field: F, ambient_dim: usize, coords: Vec<F::Elem>) -> Result<Self> {
        if coords.iter().all(|c| field.is_zero(c)) {
            return Err(Error::InvalidModel("zero vector is not a point".into()));
        }
        Self::from_rows(field, ambient_dim, vec![coords])
    }

    pub fn field(&self) -> &F {
        self.basis.field()
    }
    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }
    /// Rank of the affine cone; projective dimension is `rank - 1`.
    pub fn rank(&self) -> usize {
        self.basis.rows()
    }
    pub fn dim(&self) -> i64 {
        self.basis.rows() as i64 - 1
    }
    pub fn is_empty(&self) -> bool {
        self.basis.rows() == 0
    }
    pub fn basis(&self) -> &Matrix<F> {
        &self.basis
    }

    fn check_ambient(&self, other: &ProjSubspace<F>) -> Result<()> {
        if self.ambient_dim != other.ambient_dim {
            return Err(Error::AmbientMismatch(self.ambient_dim, other.ambient_dim));
        }
        Ok(())
    }

    /// Smallest linear subspace containing every part.
    pub fn span(parts: &[&ProjSubspace<F>]) -> Result<ProjSubspace<F>> {
        let first = parts
            .first()
            .ok_or_else(|| Error::InvalidModel("span of an empty list".into()))?;
        let mut rows = Vec::new();
        for p in parts {
            first.check_ambient(p)?;
            rows.extend(p.basis.to_rows());
        }
        ProjSubspace::from_rows(first.field().clone(), first.ambient_dim, rows)
    }

    pub fn span2(&self, other: &ProjSubspace<F>) -> Result<ProjSubspace<F>> {
        ProjSubspace::span(&[self, other])
    }

    /// Exact intersection via the left kernel of the stacked bases: a
    /// relation u*A + v*B = 0 identifies the common vector u*A.
    pub fn intersect(&self, other: &ProjSubspace<F>) -> Result<ProjSubspace<F>> {
        self.check_ambient(other)?;
        let f = self.field().clone();
        let a = self.rank();
        if a == 0 || other.rank() == 0 {
            return Ok(ProjSubspace::empty(f, self.ambient_dim));
        }
        let stacked = self.basis.vstack(&other.basis)?;
        let lk = stacked.left_kernel();
        let mut rows = Vec::new();
        for i in 0..lk.rows() {
            let u = &lk.row(i)[..a];
            let vec = self.basis.row_vec_mul(u)?;
            rows.push(vec);
        }
        ProjSubspace::from_rows(f, self.ambient_dim, rows)
    }

    pub fn contains(&self, other: &ProjSubspace<F>) -> Result<bool> {
        self.check_ambient(other)?;
        if other.is_empty() {
            return Ok(true);
        }
        let stacked = self.basis.vstack(&other.basis)?;
        Ok(stacked.rank() == self.rank())
    }

    pub fn contains_point(&self, coords: &[F::Elem]) -> Result<bool> {
        let p = ProjSubspace::point(self.field().clone(), self.ambient_dim, coords.to_vec())?;
        self.contains(&p)
    }

    /// Projective equality of two coordinate vectors (proportionality).
    pub fn points_equal(field: &F, a: &[F::Elem], b: &[F::Elem]) -> bool {
        if a.len() != b.len() {
            return false;
        }
        for i in 0..a.len() {
            for j in (i + 1)..a.len() {
                let lhs = field.mul(&a[i], &b[j]);
                let rhs = field.mul(&a[j], &b[i]);
                if lhs != rhs {
                    return false;
                }
            }
        }
        true
    }
}
