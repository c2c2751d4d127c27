use super::{AssocAlgebra, LieAlgebra, LieDescriptor, ProductTable};
use crate::exactlin::{Scalar, SparseVec};

/// `L ⊗ A` with `[x⊗a, y⊗b] = [x,y] ⊗ ab`.
///
/// Basis element `x_i ⊗ a_p` has flat index `i * dim A + p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurrentAlgebra {
    algebra: LieAlgebra,
    lie: LieAlgebra,
    assoc: AssocAlgebra,
    degrees: Option<Vec<u32>>,
}

impl CurrentAlgebra {
    /// Panics if the tensor bracket fails Jacobi, which cannot happen for
    /// validated factors.
    pub fn new(lie: &LieAlgebra, assoc: &AssocAlgebra) -> Self {
        let (dl, da) = (lie.dim(), assoc.dim());
        let table = ProductTable::from_fn(dl * da, |f, g| {
            let (i, p) = (f / da, f % da);
            let (j, q) = (g / da, g % da);
            let mut pairs = Vec::new();
            for (k, c) in lie.bracket(i, j).iter() {
                for (r, m) in assoc.product(p, q).iter() {
                    pairs.push((k * da + r, c * m));
                }
            }
            SparseVec::from_pairs(pairs)
        });
        let mut labels = Vec::with_capacity(dl * da);
        for x in lie.labels() {
            for a in assoc.labels() {
                labels.push(format!("{x}⊗{a}"));
            }
        }
        let descriptor =
            LieDescriptor::Current { lie: Box::new(lie.descriptor().clone()), assoc: assoc.name() };
        let algebra = LieAlgebra::new(descriptor, labels, table).expect("current algebra violates Jacobi");
        let degrees = assoc.degrees().map(|d| (0..dl * da).map(|f| d[f % da]).collect());
        CurrentAlgebra { algebra, lie: lie.clone(), assoc: assoc.clone(), degrees }
    }

    /// The current algebra as a Lie algebra.
    pub fn algebra(&self) -> &LieAlgebra {
        &self.algebra
    }

    pub fn lie(&self) -> &LieAlgebra {
        &self.lie
    }

    pub fn assoc(&self) -> &AssocAlgebra {
        &self.assoc
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn index(&self, i: usize, p: usize) -> usize {
        i * self.assoc.dim() + p
    }

    pub fn split_index(&self, f: usize) -> (usize, usize) {
        (f / self.assoc.dim(), f % self.assoc.dim())
    }

    pub fn degrees(&self) -> Option<&[u32]> {
        self.degrees.as_deref()
    }

    /// Kronecker product of coordinate vectors: `(Σ u_i x_i) ⊗ (Σ v_p a_p)`.
    pub fn tensor(&self, u: &SparseVec, v: &SparseVec) -> SparseVec {
        let mut pairs = Vec::new();
        for (i, a) in u.iter() {
            for (p, b) in v.iter() {
                pairs.push((self.index(*i, *p), a * b));
            }
        }
        SparseVec::from_pairs(pairs)
    }
}

/// Coordinates of `φ ⊗ α` given both factors as row-major `n×n` coordinate
/// vectors; the result is a form on an algebra of dimension `dl * da`.
pub fn kron_coords(phi: &SparseVec, dl: usize, alpha: &SparseVec, da: usize) -> SparseVec {
    let n = dl * da;
    let mut pairs: Vec<(usize, Scalar)> = Vec::with_capacity(phi.nnz() * alpha.nnz());
    for (fc, fv) in phi.iter() {
        let (i, j) = (fc / dl, fc % dl);
        for (ac, av) in alpha.iter() {
            let (p, q) = (ac / da, ac % da);
            pairs.push(((i * da + p) * n + (j * da + q), fv * av));
        }
    }
    SparseVec::from_pairs(pairs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebras::AssocAlgebra;

    #[test]
    fn nilpotent_square_gives_abelian() {
        let c = CurrentAlgebra::new(&LieAlgebra::sl(2).unwrap(), &AssocAlgebra::truncated_poly(2, false).unwrap());
        assert_eq!(c.dim(), 3);
        assert!(c.algebra().is_abelian());
    }

    #[test]
    fn bracket_follows_defining_formula() {
        let l = LieAlgebra::sl(2).unwrap();
        let a = AssocAlgebra::truncated_poly(3, false).unwrap();
        let c = CurrentAlgebra::new(&l, &a);
        assert_eq!(c.dim(), 6);
        // [e-⊗t, e+⊗t] = h⊗t²
        assert_eq!(c.algebra().bracket(c.index(0, 0), c.index(2, 0)), &SparseVec::unit(c.index(1, 1)));
        for f in 0..6 {
            for g in 0..6 {
                let (i, p) = c.split_index(f);
                let (j, q) = c.split_index(g);
                let expected = c.tensor(l.bracket(i, j), a.product(p, q));
                assert_eq!(c.algebra().bracket(f, g), &expected);
            }
        }
        assert_eq!(c.degrees(), Some(&[1, 2, 1, 2, 1, 2][..]));
    }

    #[test]
    fn heisenberg_with_zero_mult_is_abelian() {
        let c = CurrentAlgebra::new(&LieAlgebra::heisenberg3(), &AssocAlgebra::zero_mult(1));
        assert_eq!(c.dim(), 3);
        assert!(c.algebra().is_abelian());
    }
}
