use std::fmt;

use super::{AlgebraError, BilinearForm, ProductTable};
use crate::exactlin::{Matrix, Scalar, SparseVec, Subspace};

/// Where a Lie algebra came from. Downstream code uses it to recognise
/// semisimple catalog algebras and count their `sl(2)` summands.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LieDescriptor {
    Sl(usize),
    Abelian(usize),
    Heisenberg3,
    DirectSum(Vec<LieDescriptor>),
    /// A current algebra viewed as a Lie algebra in its own right.
    Current { lie: Box<LieDescriptor>, assoc: String },
    Custom(String),
}

impl LieDescriptor {
    /// Number of `sl(2)` simple summands, or `None` if not a direct sum of
    /// `sl(n)`'s.
    pub fn sl2_summands(&self) -> Option<usize> {
        match self {
            LieDescriptor::Sl(2) => Some(1),
            LieDescriptor::Sl(n) if *n >= 3 => Some(0),
            LieDescriptor::DirectSum(parts) if !parts.is_empty() => {
                parts.iter().map(LieDescriptor::sl2_summands).sum()
            }
            _ => None,
        }
    }

    pub fn is_semisimple_catalog(&self) -> bool {
        self.sl2_summands().is_some()
    }
}

impl fmt::Display for LieDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LieDescriptor::Sl(n) => write!(f, "sl{n}"),
            LieDescriptor::Abelian(n) => write!(f, "abelian:{n}"),
            LieDescriptor::Heisenberg3 => write!(f, "heis3"),
            LieDescriptor::DirectSum(parts) => {
                let names: Vec<String> = parts.iter().map(|p| p.to_string()).collect();
                write!(f, "sum:{}", names.join("+"))
            }
            LieDescriptor::Current { lie, assoc } => write!(f, "{lie}⊗{assoc}"),
            LieDescriptor::Custom(name) => write!(f, "{name}"),
        }
    }
}

/// A finite-dimensional Lie algebra given by validated structure constants.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAlgebra {
    descriptor: LieDescriptor,
    labels: Vec<String>,
    table: ProductTable,
}

impl LieAlgebra {
    /// Validates anticommutativity and the Jacobi identity on all basis triples.
    pub fn new(descriptor: LieDescriptor, labels: Vec<String>, table: ProductTable) -> Result<Self, AlgebraError> {
        if labels.len() != table.dim() {
            return Err(AlgebraError::LabelCount { expected: table.dim(), found: labels.len() });
        }
        check_anticommutative(&table)?;
        check_jacobi(&table)?;
        Ok(LieAlgebra { descriptor, labels, table })
    }

    pub fn dim(&self) -> usize {
        self.table.dim()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn descriptor(&self) -> &LieDescriptor {
        &self.descriptor
    }

    pub fn name(&self) -> String {
        self.descriptor.to_string()
    }

    pub fn table(&self) -> &ProductTable {
        &self.table
    }

    /// `[x_i, x_j]`.
    pub fn bracket(&self, i: usize, j: usize) -> &SparseVec {
        self.table.product(i, j)
    }

    pub fn bracket_vectors(&self, u: &SparseVec, v: &SparseVec) -> SparseVec {
        self.table.mul(u, v)
    }

    pub fn is_abelian(&self) -> bool {
        self.table.is_zero()
    }

    /// Matrix of `ad x_i`.
    pub fn ad(&self, i: usize) -> Matrix {
        self.table.left_matrix(i)
    }

    /// `[L, L]`.
    pub fn derived_subalgebra(&self) -> Subspace {
        self.table.square()
    }

    /// `Z(L)`.
    pub fn center(&self) -> Subspace {
        self.table.left_annihilator()
    }

    /// `κ(x_i, x_j) = tr(ad x_i ∘ ad x_j)`.
    pub fn killing_form(&self) -> BilinearForm {
        let ads: Vec<Matrix> = (0..self.dim()).map(|i| self.ad(i)).collect();
        let n = self.dim();
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            for j in i..n {
                let t = ads[i].mul(&ads[j]).trace();
                m[(i, j)] = t.clone();
                m[(j, i)] = t;
            }
        }
        let form = BilinearForm::new(m);
        debug_assert!(form.is_invariant_lie(self));
        form
    }

    pub fn sl(n: usize) -> Result<Self, AlgebraError> {
        super::catalog::sl(n)
    }

    pub fn abelian(n: usize) -> Self {
        super::catalog::abelian(n)
    }

    pub fn heisenberg3() -> Self {
        super::catalog::heisenberg3()
    }

    pub fn direct_sum(parts: &[LieAlgebra]) -> Self {
        super::catalog::direct_sum(parts)
    }
}

fn check_anticommutative(table: &ProductTable) -> Result<(), AlgebraError> {
    let n = table.dim();
    for i in 0..n {
        for j in i..n {
            let sum = table.product(i, j).axpy(&Scalar::one(), table.product(j, i));
            if !sum.is_zero() {
                return Err(AlgebraError::Anticommutativity { i, j });
            }
        }
    }
    Ok(())
}

/// Jacobiator `[x_i,[x_j,x_k]] + [x_j,[x_k,x_i]] + [x_k,[x_i,x_j]]`.
pub fn jacobiator(table: &ProductTable, i: usize, j: usize, k: usize) -> SparseVec {
    let one = Scalar::one();
    table
        .mul_basis_left(i, table.product(j, k))
        .axpy(&one, &table.mul_basis_left(j, table.product(k, i)))
        .axpy(&one, &table.mul_basis_left(k, table.product(i, j)))
}

/// Given anticommutativity, the Jacobiator is alternating, so strictly
/// increasing triples suffice.
fn check_jacobi(table: &ProductTable) -> Result<(), AlgebraError> {
    let n = table.dim();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                if !jacobiator(table, i, j, k).is_zero() {
                    return Err(AlgebraError::Jacobi { i, j, k });
                }
            }
        }
    }
    Ok(())
}
