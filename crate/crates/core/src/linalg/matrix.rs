//! Dense matrices over an exact field, with rank / RREF / kernel.

use crate::error::{Error, Result};
use crate::field::Field;

#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<F: Field> {
    field: F,
    rows: usize,
    cols: usize,
    data: Vec<F::Elem>,
}

impl<F: Field> Matrix<F> {
    pub fn zero(field: F, rows: usize, cols: usize) -> Self {
        let data = vec![field.zero(); rows * cols];
        Matrix {
            field,
            rows,
            cols,
            data,
        }
    }

    pub fn identity(field: F, n: usize) -> Self {
        let mut m = Matrix::zero(field, n, n);
        for i in 0..n {
            let one = m.field.one();
            m.set(i, i, one);
        }
        m
    }

    pub fn from_rows(field: F, rows: Vec<Vec<F::Elem>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        for r in &rows {
            if r.len() != ncols {
                return Err(Error::DomainMismatch("ragged matrix rows".into()));
            }
        }
        Ok(Matrix {
            field,
            rows: nrows,
            cols: ncols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_i64_rows(field: F, rows: &[Vec<i64>]) -> Result<Self> {
        let mapped = rows
            .iter()
            .map(|r| r.iter().map(|&v| field.from_i64(v)).collect())
            .collect();
        Matrix::from_rows(field, mapped)
    }

    pub fn field(&self) -> &F {
        &self.field
    }
    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &F::Elem {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: F::Elem) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[F::Elem] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<F::Elem>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Matrix<F> {
        let mut t = Matrix::zero(self.field.clone(), self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.at(i, j).clone());
            }
        }
        t
    }

    /// Stack `other` below `self`; column counts must agree.
    pub fn vstack(&self, other: &Matrix<F>) -> Result<Matrix<F>> {
        if self.cols != other.cols {
            return Err(Error::AmbientMismatch(self.cols, other.cols));
        }
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Ok(Matrix {
            field: self.field.clone(),
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        })
    }

    pub fn rank(&self) -> usize {
        let mut rows = self.to_rows();
        self.field.rref_rows(&mut rows).len()
    }

    /// Canonical reduced row-echelon form with zero rows dropped.
    pub fn rref_nonzero(&self) -> Matrix<F> {
        let mut rows = self.to_rows();
        let pivots = self.field.rref_rows(&mut rows);
        rows.truncate(pivots.len());
        Matrix {
            field: self.field.clone(),
            rows: pivots.len(),
            cols: self.cols,
            data: rows.into_iter().flatten().collect(),
        }
    }

    /// Basis of the right null space `{x : self * x = 0}`, one vector per row,
    /// in the canonical free-column order.
    pub fn kernel(&self) -> Matrix<F> {
        let f = &self.field;
        let mut rows = self.to_rows();
        let pivots = f.rref_rows(&mut rows);
        let pivot_set: std::collections::HashSet<usize> = pivots.iter().copied().collect();
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_set.contains(&free) {
                continue;
            }
            let mut v = vec![f.zero(); self.cols];
            v[free] = f.one();
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = f.neg(&rows[i][free]);
            }
            basis.push(v);
        }
        let nrows = basis.len();
        Matrix {
            field: f.clone(),
            rows: nrows,
            cols: self.cols,
            data: basis.into_iter().flatten().collect(),
        }
    }

    /// Basis of the left null space `{y : y * self = 0}`.
    pub fn left_kernel(&self) -> Matrix<F> {
        self.transpose().kernel()
    }

    /// Row vector times matrix.
    pub fn row_vec_mul(&self, v: &[F::Elem]) -> Result<Vec<F::Elem>> {
        if v.len() != self.rows {
            return Err(Error::AmbientMismatch(v.len(), self.rows));
        }
        let f = &self.field;
        let mut out = vec![f.zero(); self.cols];
        for (i, vi) in v.iter().enumerate() {
            if f.is_zero(vi) {
                continue;
            }
            for j in 0..self.cols {
                let t = f.mul(vi, self.at(i, j));
                out[j] = f.add(&out[j], &t);
            }
        }
        Ok(out)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| self.field.is_zero(x))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals, DEFAULT_PRIME};

    /// Independent rank oracle: largest k with a nonvanishing k x k minor,
    /// determinants by cofactor expansion. Only usable on small matrices.
    fn rank_by_minors(rows: &[Vec<i64>]) -> usize {
        fn det(m: &[Vec<i64>]) -> i64 {
            let n = m.len();
            if n == 1 {
                return m[0][0];
            }
            let mut acc = 0i64;
            for j in 0..n {
                if m[0][j] == 0 {
                    continue;
                }
                let minor: Vec<Vec<i64>> = m[1..]
                    .iter()
                    .map(|r| {
                        r.iter()
                            .enumerate()
                            .filter(|(k, _)| *k != j)
                            .map(|(_, &v)| v)
                            .collect()
                    })
                    .collect();
                let sign = if j % 2 == 0 { 1 } else { -1 };
                acc += sign * m[0][j] * det(&minor);
            }
            acc
        }
        fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
            if k == 0 {
                return vec![vec![]];
            }
            if n < k {
                return vec![];
            }
            let mut out = Vec::new();
            for first in 0..=(n - k) {
                for mut rest in combinations(n - first - 1, k - 1) {
                    for r in rest.iter_mut() {
                        *r += first + 1;
                    }
                    rest.insert(0, first);
                    out.push(rest);
                }
            }
            out
        }
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        for k in (1..=nrows.min(ncols)).rev() {
            for rsel in combinations(nrows, k) {
                for csel in combinations(ncols, k) {
                    let sub: Vec<Vec<i64>> = rsel
                        .iter()
                        .map(|&i| csel.iter().map(|&j| rows[i][j]).collect())
                        .collect();
                    if det(&sub) != 0 {
                        return k;
                    }
                }
            }
        }
        0
    }

    #[test]
    fn rank_matches_minor_oracle_on_fixed_cases() {
        let cases: Vec<Vec<Vec<i64>>> = vec![
            vec![vec![1, 2, 3], vec![2, 4, 6], vec![0, 1, 1]],
            vec![vec![1, 0], vec![0, 1], vec![1, 1]],
            vec![vec![0, 0, 0], vec![0, 0, 0]],
            vec![vec![2, 3, 5, 7], vec![11, 13, 17, 19], vec![23, 29, 31, 37]],
            vec![vec![1, 2], vec![2, 4]],
        ];
        for rows in cases {
            let expected = rank_by_minors(&rows);
            let mq = Matrix::from_i64_rows(Rationals, &rows).unwrap();
            assert_eq!(mq.rank(), expected, "rational rank on {rows:?}");
            let fp = PrimeField::new(DEFAULT_PRIME).unwrap();
            let mp = Matrix::from_i64_rows(fp, &rows).unwrap();
            assert_eq!(mp.rank(), expected, "prime rank on {rows:?}");
        }
    }

    #[test]
    fn rank_of_identity_and_zero() {
        let id = Matrix::identity(Rationals, 3);
        assert_eq!(id.rank(), 3);
        let z: Matrix<Rationals> = Matrix::zero(Rationals, 2, 5);
        assert_eq!(z.rank(), 0);
    }

    #[test]
    fn rref_is_canonical_across_fields() {
        let rows = vec![vec![2, 4, 1, 3], vec![6, 12, 4, 10], vec![1, 2, 0, 1]];
        let mq = Matrix::from_i64_rows(Rationals, &rows).unwrap().rref_nonzero();
        let fp = PrimeField::new(DEFAULT_PRIME).unwrap();
        let mp = Matrix::from_i64_rows(fp, &rows).unwrap().rref_nonzero();
        assert_eq!(mq.rows(), mp.rows());
        // Entries of this RREF are small integers, so they embed into Z/p and
        // the two canonical forms must agree entrywise.
        for i in 0..mq.rows() {
            for j in 0..mq.cols() {
                let q = mq.at(i, j);
                assert!(q.denom() == &num_bigint::BigInt::from(1));
                let as_i64: i64 = q.numer().try_into().unwrap();
                assert_eq!(*mp.at(i, j), fp.from_i64(as_i64));
            }
        }
    }

    #[test]
    fn kernel_vectors_annihilate() {
        let rows = vec![vec![1, 2, 3, 4], vec![0, 1, 1, 1]];
        let m = Matrix::from_i64_rows(Rationals, &rows).unwrap();
        let k = m.kernel();
        assert_eq!(k.rows(), 2);
        for i in 0..k.rows() {
            let prod = m.transpose().row_vec_mul(k.row(i)).unwrap();
            assert!(prod.iter().all(|x| Rationals.is_zero(x)));
        }
    }

    #[test]
    fn left_kernel_annihilates_from_the_left() {
        let rows = vec![vec![1, 2], vec![2, 4], vec![0, 1]];
        let m = Matrix::from_i64_rows(Rationals, &rows).unwrap();
        let lk = m.left_kernel();
        assert_eq!(lk.rows(), 1);
        let prod = m.row_vec_mul(lk.row(0)).unwrap();
        assert!(prod.iter().all(|x| Rationals.is_zero(x)));
    }
}
