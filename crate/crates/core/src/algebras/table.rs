use crate::exactlin::{Matrix, Scalar, SparseVec, Subspace};

/// Structure constants of a bilinear product on `K^dim`:
/// `x_i · x_j = Σ_k c[i][j][k] x_k`, stored as one sparse vector per pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductTable {
    dim: usize,
    products: Vec<SparseVec>,
}

impl ProductTable {
    pub fn zero(dim: usize) -> Self {
        ProductTable { dim, products: vec![SparseVec::new(); dim * dim] }
    }

    /// `products[i * dim + j]` is `x_i · x_j`.
    pub fn from_products(dim: usize, products: Vec<SparseVec>) -> Self {
        assert_eq!(products.len(), dim * dim, "product table has wrong size");
        assert!(products.iter().all(|p| p.max_col().map_or(true, |c| c < dim)), "product index out of range");
        ProductTable { dim, products }
    }

    pub fn from_fn(dim: usize, f: impl Fn(usize, usize) -> SparseVec) -> Self {
        let mut products = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                products.push(f(i, j));
            }
        }
        Self::from_products(dim, products)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn product(&self, i: usize, j: usize) -> &SparseVec {
        &self.products[i * self.dim + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: SparseVec) {
        self.products[i * self.dim + j] = v;
    }

    pub fn coefficient(&self, i: usize, j: usize, k: usize) -> Scalar {
        self.product(i, j).get(k)
    }

    pub fn is_zero(&self) -> bool {
        self.products.iter().all(SparseVec::is_zero)
    }

    /// Product of arbitrary elements, by bilinearity.
    pub fn mul(&self, u: &SparseVec, v: &SparseVec) -> SparseVec {
        let mut pairs = Vec::new();
        for (i, a) in u.iter() {
            for (j, b) in v.iter() {
                let ab = a * b;
                for (k, c) in self.product(*i, *j).iter() {
                    pairs.push((*k, &ab * c));
                }
            }
        }
        SparseVec::from_pairs(pairs)
    }

    /// `x_i · v`.
    pub fn mul_basis_left(&self, i: usize, v: &SparseVec) -> SparseVec {
        let mut pairs = Vec::new();
        for (j, b) in v.iter() {
            for (k, c) in self.product(i, *j).iter() {
                pairs.push((*k, b * c));
            }
        }
        SparseVec::from_pairs(pairs)
    }

    /// `v · x_j`.
    pub fn mul_basis_right(&self, v: &SparseVec, j: usize) -> SparseVec {
        let mut pairs = Vec::new();
        for (i, a) in v.iter() {
            for (k, c) in self.product(*i, j).iter() {
                pairs.push((*k, a * c));
            }
        }
        SparseVec::from_pairs(pairs)
    }

    /// Matrix of `x ↦ x_i · x` (columns are images of basis vectors).
    pub fn left_matrix(&self, i: usize) -> Matrix {
        let mut m = Matrix::zeros(self.dim, self.dim);
        for j in 0..self.dim {
            for (k, c) in self.product(i, j).iter() {
                m[(*k, j)] = c.clone();
            }
        }
        m
    }

    /// Span of all products `x_i · x_j`.
    pub fn square(&self) -> Subspace {
        Subspace::from_vectors(self.dim, &self.products)
    }

    /// `{a : a · x_j = 0 for all j}`.
    pub fn left_annihilator(&self) -> Subspace {
        let mut eqs = Vec::new();
        for j in 0..self.dim {
            // coordinate k of a·x_j is Σ_i a_i c[i][j][k]
            let mut per_k: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); self.dim];
            for i in 0..self.dim {
                for (k, c) in self.product(i, j).iter() {
                    per_k[*k].push((i, c.clone()));
                }
            }
            eqs.extend(per_k.into_iter().filter(|e| !e.is_empty()).map(SparseVec::from_pairs));
        }
        crate::exactlin::solve_homogeneous(self.dim, &eqs)
    }
}
