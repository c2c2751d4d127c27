use serde::Serialize;

use super::{AssocAlgebra, LieAlgebra, ProductTable};
use crate::exactlin::{Matrix, Scalar, SparseVec};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SymmetryTag {
    Symmetric,
    Skew,
    None,
}

/// A bilinear form `φ(x_i, x_j) = matrix[(i, j)]` on a basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BilinearForm {
    matrix: Matrix,
    tag: SymmetryTag,
}

impl BilinearForm {
    /// Panics unless the matrix is square.
    pub fn new(matrix: Matrix) -> Self {
        assert_eq!(matrix.nrows(), matrix.ncols(), "form matrix must be square");
        let t = matrix.transpose();
        let tag = if t == matrix {
            SymmetryTag::Symmetric
        } else if t == matrix.scale(&-Scalar::one()) {
            SymmetryTag::Skew
        } else {
            SymmetryTag::None
        };
        BilinearForm { matrix, tag }
    }

    /// From row-major coordinates `φ(x_i, x_j)` at index `i * n + j`.
    pub fn from_coords(n: usize, coords: &SparseVec) -> Self {
        let mut m = Matrix::zeros(n, n);
        for (c, v) in coords.iter() {
            m[(c / n, c % n)] = v.clone();
        }
        Self::new(m)
    }

    pub fn coords(&self) -> SparseVec {
        let n = self.dim();
        let mut pairs = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let v = &self.matrix[(i, j)];
                if !v.is_zero() {
                    pairs.push((i * n + j, v.clone()));
                }
            }
        }
        SparseVec::from_pairs(pairs)
    }

    pub fn dim(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn tag(&self) -> SymmetryTag {
        self.tag
    }

    pub fn is_symmetric(&self) -> bool {
        self.tag == SymmetryTag::Symmetric
    }

    pub fn is_skew(&self) -> bool {
        self.tag == SymmetryTag::Skew
    }

    pub fn eval(&self, u: &SparseVec, v: &SparseVec) -> Scalar {
        let mut acc = Scalar::zero();
        for (i, a) in u.iter() {
            for (j, b) in v.iter() {
                let m = &self.matrix[(*i, *j)];
                if !m.is_zero() {
                    acc += &(&(a * b) * m);
                }
            }
        }
        acc
    }

    pub fn is_nondegenerate(&self) -> bool {
        !self.matrix.determinant().is_zero()
    }

    /// `φ([x,y],z) + φ(y,[x,z]) = 0` on all basis triples.
    pub fn is_invariant_lie(&self, lie: &LieAlgebra) -> bool {
        self.invariance_defect(lie.table(), |f, t, x, y, z| {
            f.eval(t.product(x, y), &SparseVec::unit(z)) + f.eval(&SparseVec::unit(y), t.product(x, z))
        })
    }

    /// `α(ab, c) = α(a, bc)` on all basis triples.
    pub fn is_invariant_assoc(&self, assoc: &AssocAlgebra) -> bool {
        self.invariance_defect(assoc.table(), |f, t, a, b, c| {
            f.eval(t.product(a, b), &SparseVec::unit(c)) - f.eval(&SparseVec::unit(a), t.product(b, c))
        })
    }

    fn invariance_defect(
        &self,
        table: &ProductTable,
        defect: impl Fn(&Self, &ProductTable, usize, usize, usize) -> Scalar,
    ) -> bool {
        let n = table.dim();
        assert_eq!(n, self.dim(), "form and algebra dimensions differ");
        (0..n).all(|x| (0..n).all(|y| (0..n).all(|z| defect(self, table, x, y, z).is_zero())))
    }
}
