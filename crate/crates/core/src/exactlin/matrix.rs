use std::fmt;
use std::ops::{Index, IndexMut};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{Echelon, Scalar, SparseVec, Subspace};

/// Dense row-major matrix over ℚ.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

/// Output of [`Matrix::rref`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub reduced: Matrix,
    pub pivots: Vec<usize>,
    pub rank: usize,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Scalar::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Scalar::one();
        }
        m
    }

    /// Panics if the rows are ragged.
    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&x| Scalar::from_int(x)).collect()).collect())
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> Scalar) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_sparse_rows(rows: &[SparseVec], cols: usize) -> Self {
        let mut m = Self::zeros(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            for (c, v) in r.iter() {
                m[(i, *c)] = v.clone();
            }
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_sparse(&self, i: usize) -> SparseVec {
        SparseVec::from_dense(self.row(i))
    }

    pub fn sparse_rows(&self) -> Vec<SparseVec> {
        (0..self.rows).map(|i| self.row_sparse(i)).collect()
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out.data[i * other.cols + j].add_mul(a, b);
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = Scalar::zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    acc.add_mul(a, b);
                }
                acc
            })
            .collect()
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| a * s).collect() }
    }

    pub fn trace(&self) -> Scalar {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)].clone()).sum()
    }

    /// Commutator `AB - BA` of square matrices.
    pub fn commutator(&self, other: &Matrix) -> Matrix {
        self.mul(other).add(&other.mul(self).scale(&-Scalar::one()))
    }

    /// Dense Gauss–Jordan elimination.
    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m[(r, c)].recip();
            for j in c..m.cols {
                m[(r, j)] = &m[(r, j)] * &inv;
            }
            for i in 0..m.rows {
                if i == r || m[(i, c)].is_zero() {
                    continue;
                }
                let f = -&m[(i, c)];
                for j in c..m.cols {
                    let rv = m[(r, j)].clone();
                    m.data[i * m.cols + j].add_mul(&f, &rv);
                }
            }
            pivots.push(c);
            r += 1;
        }
        let rank = pivots.len();
        Rref { reduced: m, pivots, rank }
    }

    pub fn rank(&self) -> usize {
        let mut e = Echelon::new(self.cols);
        for i in 0..self.rows {
            e.insert(&self.row_sparse(i));
        }
        e.rank()
    }

    /// `{v : Mv = 0}`.
    pub fn kernel_basis(&self) -> Subspace {
        let mut e = Echelon::new(self.cols);
        for i in 0..self.rows {
            e.insert(&self.row_sparse(i));
        }
        Subspace::from_vectors(self.cols, &e.null_space_vectors())
    }

    pub fn row_space(&self) -> Subspace {
        Subspace::from_vectors(self.cols, &self.sparse_rows())
    }

    pub fn column_space(&self) -> Subspace {
        self.transpose().row_space()
    }

    /// Inverse of a square matrix, `None` when singular.
    pub fn inverse(&self) -> Option<Matrix> {
        assert_eq!(self.rows, self.cols, "inverse of non-square matrix");
        let n = self.rows;
        let aug = Matrix::from_fn(n, 2 * n, |i, j| {
            if j < n {
                self[(i, j)].clone()
            } else if j - n == i {
                Scalar::one()
            } else {
                Scalar::zero()
            }
        });
        let r = aug.rref();
        if r.pivots.len() < n || r.pivots[n - 1] >= n {
            return None;
        }
        Some(Matrix::from_fn(n, n, |i, j| r.reduced[(i, j + n)].clone()))
    }

    pub fn determinant(&self) -> Scalar {
        assert_eq!(self.rows, self.cols, "determinant of non-square matrix");
        let mut m = self.clone();
        let n = self.rows;
        let mut det = Scalar::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m[(i, c)].is_zero()) else {
                return Scalar::zero();
            };
            if p != c {
                m.swap_rows(c, p);
                det = -det;
            }
            let piv = m[(c, c)].clone();
            det = &det * &piv;
            let inv = piv.recip();
            for i in c + 1..n {
                if m[(i, c)].is_zero() {
                    continue;
                }
                let f = -(&m[(i, c)] * &inv);
                for j in c..n {
                    let rv = m[(c, j)].clone();
                    m.data[i * n + j].add_mul(&f, &rv);
                }
            }
        }
        det
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

/// Fraction-free (Bareiss) determinant of an integer matrix.
pub fn bareiss_determinant(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(p) => {
                    m.swap(k, p);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = v / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}

impl Index<(usize, usize)> for Matrix {
    type Output = Scalar;
    fn index(&self, (i, j): (usize, usize)) -> &Scalar {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Scalar {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rref_identity() {
        let r = Matrix::identity(3).rref();
        assert_eq!(r.reduced, Matrix::identity(3));
        assert_eq!(r.rank, 3);
        assert_eq!(r.pivots, vec![0, 1, 2]);
    }

    #[test]
    fn rref_dependent_rows() {
        let r = Matrix::from_i64(&[&[1, 2], &[2, 4]]).rref();
        assert_eq!(r.reduced, Matrix::from_i64(&[&[1, 2], &[0, 0]]));
        assert_eq!(r.rank, 1);
        assert_eq!(r.pivots, vec![0]);
    }

    #[test]
    fn rref_permutation() {
        let r = Matrix::from_i64(&[&[0, 1], &[1, 0]]).rref();
        assert_eq!(r.reduced, Matrix::identity(2));
        assert_eq!(r.rank, 2);
    }

    #[test]
    fn kernel_of_zero_is_everything() {
        let k = Matrix::zeros(2, 3).kernel_basis();
        assert_eq!(k, Subspace::full(3));
    }

    #[test]
    fn kernel_of_identity_is_zero() {
        for n in 1..5 {
            assert_eq!(Matrix::identity(n).kernel_basis(), Subspace::zero(n));
        }
    }

    #[test]
    fn kernel_of_all_ones_row() {
        let m = Matrix::from_i64(&[&[1, 1, 1]]);
        let k = m.kernel_basis();
        assert_eq!(k.dim(), 2);
        for v in k.basis_vectors() {
            let dense = v.to_dense(3);
            assert!(m.mul_vec(&dense).iter().all(Scalar::is_zero));
        }
    }

    #[test]
    fn inverse_and_determinant() {
        let m = Matrix::from_i64(&[&[2, 1], &[7, 4]]);
        assert_eq!(m.determinant(), Scalar::one());
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Matrix::identity(2));
        assert!(Matrix::from_i64(&[&[1, 2], &[2, 4]]).inverse().is_none());
    }

    #[test]
    fn bareiss_matches_rational_determinant() {
        let rows: &[&[i64]] = &[&[3, -1, 4, 1], &[5, 9, -2, 6], &[5, 3, 5, -8], &[9, 7, 9, 3]];
        let m = Matrix::from_i64(rows);
        let big: Vec<Vec<BigInt>> = rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
        assert_eq!(Scalar::from(bareiss_determinant(big)), m.determinant());
    }
}
