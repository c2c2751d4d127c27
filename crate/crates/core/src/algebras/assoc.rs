use std::fmt;

use super::{AlgebraError, BilinearForm, ProductTable};
use crate::exactlin::{solve_homogeneous, Matrix, Scalar, SparseVec, Subspace};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AssocDescriptor {
    /// `tK[t]/(t^n)` (basis `t..t^{n-1}`), or `K[t]/(t^n)` when unital.
    TruncatedPoly { n: usize, unital: bool },
    ZeroMult(usize),
    Custom(String),
}

impl fmt::Display for AssocDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AssocDescriptor::TruncatedPoly { n, unital: false } => write!(f, "tpoly:{n}"),
            AssocDescriptor::TruncatedPoly { n, unital: true } => write!(f, "tpoly1:{n}"),
            AssocDescriptor::ZeroMult(n) => write!(f, "zero:{n}"),
            AssocDescriptor::Custom(name) => write!(f, "{name}"),
        }
    }
}

/// A finite-dimensional commutative associative algebra, possibly without unit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AssocAlgebra {
    descriptor: AssocDescriptor,
    labels: Vec<String>,
    table: ProductTable,
    unit: Option<SparseVec>,
    degrees: Option<Vec<u32>>,
}

impl AssocAlgebra {
    /// Validates commutativity and associativity on all basis triples. When
    /// `unital` is set the identity element is solved for and must exist.
    pub fn new(
        descriptor: AssocDescriptor,
        labels: Vec<String>,
        table: ProductTable,
        unital: bool,
        degrees: Option<Vec<u32>>,
    ) -> Result<Self, AlgebraError> {
        let n = table.dim();
        if labels.len() != n {
            return Err(AlgebraError::LabelCount { expected: n, found: labels.len() });
        }
        if let Some(d) = &degrees {
            if d.len() != n {
                return Err(AlgebraError::LabelCount { expected: n, found: d.len() });
            }
        }
        check_commutative(&table)?;
        check_associative(&table)?;
        let unit = if unital { Some(find_unit(&table).ok_or(AlgebraError::NoUnit)?) } else { None };
        if let Some(d) = &degrees {
            check_grading(&table, d)?;
        }
        Ok(AssocAlgebra { descriptor, labels, table, unit, degrees })
    }

    pub fn dim(&self) -> usize {
        self.table.dim()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn descriptor(&self) -> &AssocDescriptor {
        &self.descriptor
    }

    pub fn name(&self) -> String {
        self.descriptor.to_string()
    }

    pub fn table(&self) -> &ProductTable {
        &self.table
    }

    pub fn product(&self, i: usize, j: usize) -> &SparseVec {
        self.table.product(i, j)
    }

    pub fn unit(&self) -> Option<&SparseVec> {
        self.unit.as_ref()
    }

    pub fn is_unital(&self) -> bool {
        self.unit.is_some()
    }

    pub fn degrees(&self) -> Option<&[u32]> {
        self.degrees.as_deref()
    }

    /// Matrix of multiplication by `a_i`.
    pub fn mult_matrix(&self, i: usize) -> Matrix {
        self.table.left_matrix(i)
    }

    /// `Z(A) = {a : Aa = 0}`.
    pub fn annihilator(&self) -> Subspace {
        self.table.left_annihilator()
    }

    /// `AA`.
    pub fn square(&self) -> Subspace {
        self.table.square()
    }

    pub fn truncated_poly(n: usize, unital: bool) -> Result<Self, AlgebraError> {
        super::catalog::truncated_poly(n, unital)
    }

    pub fn zero_mult(n: usize) -> Self {
        super::catalog::zero_mult(n)
    }

    /// `⟨t^i, t^j⟩ = δ_{i+j,n}` on `tK[t]/(t^n)`. Symmetry, invariance and
    /// nondegeneracy are checked.
    pub fn residue_form(&self) -> Result<BilinearForm, AlgebraError> {
        let AssocDescriptor::TruncatedPoly { n, unital: false } = self.descriptor else {
            return Err(AlgebraError::WrongKind {
                expected: "non-unital truncated polynomial algebra".into(),
                found: self.name(),
            });
        };
        let m = self.dim();
        // basis index p is t^{p+1}
        let matrix = Matrix::from_fn(m, m, |p, q| if p + q + 2 == n { Scalar::one() } else { Scalar::zero() });
        let form = BilinearForm::new(matrix);
        assert!(form.is_symmetric());
        assert!(form.is_invariant_assoc(self));
        assert!(form.is_nondegenerate());
        Ok(form)
    }
}

fn check_commutative(table: &ProductTable) -> Result<(), AlgebraError> {
    let n = table.dim();
    for i in 0..n {
        for j in i + 1..n {
            if table.product(i, j) != table.product(j, i) {
                return Err(AlgebraError::Commutativity { i, j });
            }
        }
    }
    Ok(())
}

/// `(x_i x_j) x_k - x_i (x_j x_k)`.
pub fn associator(table: &ProductTable, i: usize, j: usize, k: usize) -> SparseVec {
    table
        .mul_basis_right(table.product(i, j), k)
        .axpy(&-Scalar::one(), &table.mul_basis_left(i, table.product(j, k)))
}

fn check_associative(table: &ProductTable) -> Result<(), AlgebraError> {
    let n = table.dim();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                if !associator(table, i, j, k).is_zero() {
                    return Err(AlgebraError::Associativity { i, j, k });
                }
            }
        }
    }
    Ok(())
}

/// Solves `u · x_j = x_j` for all `j`.
fn find_unit(table: &ProductTable) -> Option<SparseVec> {
    let n = table.dim();
    // unknowns u_0..u_{n-1} plus a homogenising variable s at index n:
    // Σ_i u_i c[i][j][k] - s δ_{jk} = 0, then scale to s = 1.
    let mut eqs = Vec::new();
    for j in 0..n {
        for k in 0..n {
            let mut pairs: Vec<(usize, Scalar)> = (0..n).map(|i| (i, table.coefficient(i, j, k))).collect();
            if j == k {
                pairs.push((n, -Scalar::one()));
            }
            eqs.push(SparseVec::from_pairs(pairs));
        }
    }
    let sol = solve_homogeneous(n + 1, &eqs);
    let v = sol.basis_vectors().find(|v| !v.get(n).is_zero())?;
    let s = v.get(n);
    let u: Vec<(usize, Scalar)> = v.iter().filter(|(c, _)| *c < n).map(|(c, x)| (*c, x / &s)).collect();
    Some(SparseVec::from_pairs(u))
}

fn check_grading(table: &ProductTable, degrees: &[u32]) -> Result<(), AlgebraError> {
    let n = table.dim();
    for i in 0..n {
        for j in 0..n {
            for (k, _) in table.product(i, j).iter() {
                if degrees[*k] != degrees[i] + degrees[j] {
                    return Err(AlgebraError::Grading { i, j, k: *k });
                }
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn truncated_poly_products() {
        let a = AssocAlgebra::truncated_poly(4, false).unwrap();
        assert_eq!(a.dim(), 3);
        assert_eq!(a.labels(), &["t", "t^2", "t^3"]);
        assert_eq!(a.product(0, 1), &SparseVec::unit(2));
        assert!(a.product(1, 1).is_zero());
        assert_eq!(a.degrees(), Some(&[1, 2, 3][..]));
        assert!(!a.is_unital());
    }

    #[test]
    fn unital_truncated_poly_has_identity() {
        let a = AssocAlgebra::truncated_poly(3, true).unwrap();
        assert_eq!(a.dim(), 3);
        assert_eq!(a.unit(), Some(&SparseVec::unit(0)));
        assert!(a.annihilator().is_zero());
        assert!(a.square().is_full());
    }

    #[test]
    fn annihilator_and_square() {
        let a = AssocAlgebra::truncated_poly(4, false).unwrap();
        assert_eq!(a.annihilator(), Subspace::from_vectors(3, &[SparseVec::unit(2)]));
        assert_eq!(a.square(), Subspace::from_vectors(3, &[SparseVec::unit(1), SparseVec::unit(2)]));
        let z = AssocAlgebra::zero_mult(3);
        assert!(z.annihilator().is_full());
        assert!(z.square().is_zero());
    }

    #[test]
    fn residue_form_values() {
        let a3 = AssocAlgebra::truncated_poly(3, false).unwrap();
        assert_eq!(a3.residue_form().unwrap().matrix(), &Matrix::from_i64(&[&[0, 1], &[1, 0]]));
        let a2 = AssocAlgebra::truncated_poly(2, false).unwrap();
        assert_eq!(a2.residue_form().unwrap().matrix(), &Matrix::from_i64(&[&[1]]));
        // ⟨t·t, t⟩ = ⟨t, t·t⟩ = 1 for n = 3
        let f = a3.residue_form().unwrap();
        let tt = a3.product(0, 0);
        let t = SparseVec::unit(0);
        assert_eq!(f.eval(tt, &t), Scalar::one());
        assert_eq!(f.eval(&t, tt), Scalar::one());
    }

    #[test]
    fn residue_form_rejects_other_algebras() {
        assert!(matches!(AssocAlgebra::zero_mult(1).residue_form(), Err(AlgebraError::WrongKind { .. })));
        assert!(AssocAlgebra::truncated_poly(3, true).unwrap().residue_form().is_err());
    }

    #[test]
    fn zero_mult_products_vanish() {
        assert!(AssocAlgebra::zero_mult(2).table().is_zero());
    }
}
