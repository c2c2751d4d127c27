//! Chevalley–Eilenberg cochains `Cⁿ(L, M)` for finite-dimensional modules.
//!
//! An `n`-cochain is stored by its values on strictly increasing basis tuples
//! `(i_1 < … < i_n)`; coordinate `(tuple, m)` has flat index
//! `tuple_index * dim M + m`. The differential is
//!
//! ```text
//! (dω)(x_0,…,x_n) = Σ_{a<b} (-1)^{a+b} ω([x_a,x_b], x_0,…x̂_a…x̂_b…,x_n)
//!                 + Σ_a (-1)^a ρ(x_a) ω(x_0,…x̂_a…,x_n)
//! ```

use std::collections::HashMap;

use serde::Serialize;

use crate::algebras::LieAlgebra;
use crate::exactlin::{Echelon, Matrix, Scalar, SparseVec, Subspace};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ModuleKind {
    Trivial,
    Adjoint,
    Coadjoint,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CochainError {
    #[error("representation axiom fails at basis pair ({}, {})", .i + 1, .j + 1)]
    NotARepresentation { i: usize, j: usize },
    #[error("module is for an algebra of dimension {module}, not {algebra}")]
    WrongAlgebra { module: usize, algebra: usize },
}

/// An `L`-module given by one action matrix per basis element of `L`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieModule {
    kind: Option<ModuleKind>,
    dim: usize,
    action: Vec<Matrix>,
}

impl LieModule {
    /// Checks `ρ([x_i,x_j]) = [ρ(x_i), ρ(x_j)]` for all pairs.
    pub fn new(lie: &LieAlgebra, dim: usize, action: Vec<Matrix>) -> Result<Self, CochainError> {
        if action.len() != lie.dim() {
            return Err(CochainError::WrongAlgebra { module: action.len(), algebra: lie.dim() });
        }
        let module = LieModule { kind: None, dim, action };
        module.check(lie)?;
        Ok(module)
    }

    pub fn build(kind: ModuleKind, lie: &LieAlgebra) -> Self {
        Self::build_trivial_or(kind, lie, 1)
    }

    /// `K^m` with zero action.
    pub fn trivial(lie: &LieAlgebra, m: usize) -> Self {
        Self::build_trivial_or(ModuleKind::Trivial, lie, m)
    }

    fn build_trivial_or(kind: ModuleKind, lie: &LieAlgebra, m: usize) -> Self {
        let n = lie.dim();
        let (dim, action) = match kind {
            ModuleKind::Trivial => (m, vec![Matrix::zeros(m, m); n]),
            ModuleKind::Adjoint => (n, (0..n).map(|i| lie.ad(i)).collect()),
            // (x·f)(y) = -f([x,y]), i.e. ρ(x) = -(ad x)ᵀ on the dual basis
            ModuleKind::Coadjoint => (n, (0..n).map(|i| lie.ad(i).transpose().scale(&-Scalar::one())).collect()),
        };
        let module = LieModule { kind: Some(kind), dim, action };
        debug_assert!(module.check(lie).is_ok());
        module
    }

    pub fn check(&self, lie: &LieAlgebra) -> Result<(), CochainError> {
        let n = lie.dim();
        for i in 0..n {
            for j in i + 1..n {
                let mut lhs = Matrix::zeros(self.dim, self.dim);
                for (k, c) in lie.bracket(i, j).iter() {
                    lhs = lhs.add(&self.action[*k].scale(c));
                }
                if lhs != self.action[i].commutator(&self.action[j]) {
                    return Err(CochainError::NotARepresentation { i, j });
                }
            }
        }
        Ok(())
    }

    pub fn kind(&self) -> Option<ModuleKind> {
        self.kind
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn action(&self, i: usize) -> &Matrix {
        &self.action[i]
    }

    pub fn is_trivial(&self) -> bool {
        self.action.iter().all(Matrix::is_zero)
    }
}

/// A set of increasing basis tuples of fixed arity, times a module basis.
#[derive(Clone, Debug)]
pub struct CochainBasis {
    arity: usize,
    module_dim: usize,
    tuples: Vec<Vec<usize>>,
    index: HashMap<Vec<usize>, usize>,
}

impl CochainBasis {
    fn from_tuples(arity: usize, module_dim: usize, tuples: Vec<Vec<usize>>) -> Self {
        let index = tuples.iter().enumerate().map(|(i, t)| (t.clone(), i)).collect();
        CochainBasis { arity, module_dim, tuples, index }
    }

    /// All increasing `arity`-tuples from `0..lie_dim`, lexicographic.
    pub fn full(lie_dim: usize, arity: usize, module_dim: usize) -> Self {
        let mut tuples = Vec::new();
        let mut cur = Vec::with_capacity(arity);
        fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if cur.len() == k {
                out.push(cur.clone());
                return;
            }
            for i in start..n {
                cur.push(i);
                rec(i + 1, n, k, cur, out);
                cur.pop();
            }
        }
        rec(0, lie_dim, arity, &mut cur, &mut tuples);
        Self::from_tuples(arity, module_dim, tuples)
    }

    /// Increasing tuples whose degrees sum to `total`.
    pub fn homogeneous(degrees: &[u32], arity: usize, total: u32, module_dim: usize) -> Self {
        let mut tuples = Vec::new();
        let mut cur = Vec::with_capacity(arity);
        #[allow(clippy::too_many_arguments)]
        fn rec(start: usize, degrees: &[u32], k: usize, left: u32, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if cur.len() == k {
                if left == 0 {
                    out.push(cur.clone());
                }
                return;
            }
            for i in start..degrees.len() {
                if degrees[i] <= left {
                    cur.push(i);
                    rec(i + 1, degrees, k, left - degrees[i], cur, out);
                    cur.pop();
                }
            }
        }
        rec(0, degrees, arity, total, &mut cur, &mut tuples);
        Self::from_tuples(arity, module_dim, tuples)
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn module_dim(&self) -> usize {
        self.module_dim
    }

    pub fn dim(&self) -> usize {
        self.tuples.len() * self.module_dim
    }

    pub fn tuples(&self) -> &[Vec<usize>] {
        &self.tuples
    }

    pub fn tuple_index(&self, tuple: &[usize]) -> Option<usize> {
        self.index.get(tuple).copied()
    }

    pub fn coord(&self, tuple_index: usize, m: usize) -> usize {
        tuple_index * self.module_dim + m
    }

    /// `(tuple, module index)` of a flat coordinate.
    pub fn split(&self, coord: usize) -> (&[usize], usize) {
        (&self.tuples[coord / self.module_dim], coord % self.module_dim)
    }

    fn lookup(&self, tuple: &[usize]) -> usize {
        match self.index.get(tuple) {
            Some(&i) => i,
            None => panic!("cochain tuple {tuple:?} missing from the domain basis"),
        }
    }
}

/// Inserts `k` into the increasing `rest`; returns the sorted tuple and the
/// sign of the sorting permutation, or `None` if `k` repeats.
fn insert_sorted(rest: &[usize], k: usize) -> Option<(Vec<usize>, bool)> {
    match rest.binary_search(&k) {
        Ok(_) => None,
        Err(p) => {
            let mut t = Vec::with_capacity(rest.len() + 1);
            t.extend_from_slice(&rest[..p]);
            t.push(k);
            t.extend_from_slice(&rest[p..]);
            Some((t, p % 2 == 1))
        }
    }
}

fn sign(neg: bool) -> Scalar {
    if neg {
        -Scalar::one()
    } else {
        Scalar::one()
    }
}

/// Rows of `d: C^{n}(domain) → C^{n+1}(codomain)`, one per codomain coordinate.
///
/// Panics if a term lands on a tuple outside `domain`; homogeneous bases of
/// the same total degree are closed under the differential.
pub fn differential_rows(
    lie: &LieAlgebra,
    module: &LieModule,
    domain: &CochainBasis,
    codomain: &CochainBasis,
) -> Vec<SparseVec> {
    assert_eq!(domain.arity + 1, codomain.arity, "differential changes arity by one");
    assert_eq!(domain.module_dim, module.dim);
    assert_eq!(codomain.module_dim, module.dim);
    let md = module.dim;
    let trivial = module.is_trivial();
    let mut rows = Vec::with_capacity(codomain.dim());
    for tau in &codomain.tuples {
        let mut bracket_terms: Vec<(usize, Scalar)> = Vec::new();
        for a in 0..tau.len() {
            for b in a + 1..tau.len() {
                let rest: Vec<usize> =
                    tau.iter().enumerate().filter(|&(p, _)| p != a && p != b).map(|(_, &x)| x).collect();
                let s = sign((a + b) % 2 == 1);
                for (k, c) in lie.bracket(tau[a], tau[b]).iter() {
                    if let Some((t, neg)) = insert_sorted(&rest, *k) {
                        let coef = &(&s * c) * &sign(neg);
                        bracket_terms.push((domain.lookup(&t), coef));
                    }
                }
            }
        }
        let mut action_terms: Vec<(usize, Vec<usize>, Scalar)> = Vec::new();
        if !trivial {
            for a in 0..tau.len() {
                let rest: Vec<usize> = tau.iter().enumerate().filter(|&(p, _)| p != a).map(|(_, &x)| x).collect();
                action_terms.push((tau[a], rest, sign(a % 2 == 1)));
            }
        }
        for m in 0..md {
            let mut pairs: Vec<(usize, Scalar)> =
                bracket_terms.iter().map(|(ti, c)| (domain.coord(*ti, m), c.clone())).collect();
            for (x, rest, s) in &action_terms {
                let ti = domain.lookup(rest);
                let rho = &module.action[*x];
                for mp in 0..md {
                    let r = &rho[(m, mp)];
                    if !r.is_zero() {
                        pairs.push((domain.coord(ti, mp), s * r));
                    }
                }
            }
            rows.push(SparseVec::from_pairs(pairs));
        }
    }
    rows
}

/// Dense matrix of `dⁿ: Cⁿ(L,M) → Cⁿ⁺¹(L,M)` in the lexicographic tuple order.
pub fn ce_differential(lie: &LieAlgebra, module: &LieModule, n: usize) -> Matrix {
    let domain = CochainBasis::full(lie.dim(), n, module.dim);
    let codomain = CochainBasis::full(lie.dim(), n + 1, module.dim);
    Matrix::from_sparse_rows(&differential_rows(lie, module, &domain, &codomain), domain.dim())
}

/// Columns of a sparse row matrix.
pub fn transpose_rows(rows: &[SparseVec], ncols: usize) -> Vec<SparseVec> {
    let mut cols: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); ncols];
    for (r, row) in rows.iter().enumerate() {
        for (c, v) in row.iter() {
            cols[*c].push((r, v.clone()));
        }
    }
    cols.into_iter().map(SparseVec::from_pairs).collect()
}

/// `dⁿ⁺¹ ∘ dⁿ = 0`, checked as an exact matrix identity.
pub fn d_squared_vanishes(lie: &LieAlgebra, module: &LieModule, n: usize) -> bool {
    let lower = ce_differential(lie, module, n);
    let upper = ce_differential(lie, module, n + 1);
    upper.mul(&lower).is_zero()
}

#[derive(Clone, Debug)]
pub struct CochainSpaceResult {
    pub degree: usize,
    pub cochain_dim: usize,
    pub z_space: Subspace,
    pub b_space: Subspace,
    pub h_dim: usize,
}

impl CochainSpaceResult {
    pub fn z_dim(&self) -> usize {
        self.z_space.dim()
    }

    pub fn b_dim(&self) -> usize {
        self.b_space.dim()
    }
}

/// `Zⁿ = ker dⁿ`, `Bⁿ = im dⁿ⁻¹` on the given bases of `Cⁿ⁻¹`, `Cⁿ`, `Cⁿ⁺¹`.
pub fn cohomology_on(
    lie: &LieAlgebra,
    module: &LieModule,
    lower: &CochainBasis,
    mid: &CochainBasis,
    upper: &CochainBasis,
) -> CochainSpaceResult {
    let d_up = differential_rows(lie, module, mid, upper);
    let mut e = Echelon::new(mid.dim());
    e.extend(&d_up);
    let z_space = Subspace::from_vectors(mid.dim(), &e.null_space_vectors());
    let b_space = if lower.dim() == 0 {
        Subspace::zero(mid.dim())
    } else {
        let d_low = differential_rows(lie, module, lower, mid);
        Subspace::from_vectors(mid.dim(), &transpose_rows(&d_low, lower.dim()))
    };
    debug_assert!(z_space.contains(&b_space).unwrap());
    let h_dim = z_space.dim() - b_space.dim();
    CochainSpaceResult { degree: mid.arity, cochain_dim: mid.dim(), z_space, b_space, h_dim }
}

/// `Hⁿ(L, M)` for `n ≥ 1`.
pub fn cohomology(lie: &LieAlgebra, module: &LieModule, n: usize) -> CochainSpaceResult {
    assert!(n >= 1, "cohomology degree starts at 1");
    let d = lie.dim();
    let m = module.dim;
    cohomology_on(
        lie,
        module,
        &CochainBasis::full(d, n - 1, m),
        &CochainBasis::full(d, n, m),
        &CochainBasis::full(d, n + 1, m),
    )
}

/// Row-major `dim×dim` form coordinates of a 2-cochain with trivial
/// one-dimensional coefficients: `Φ(x_i,x_j) = c`, `Φ(x_j,x_i) = -c`.
pub fn two_cochain_to_form(basis: &CochainBasis, v: &SparseVec, dim: usize) -> SparseVec {
    assert!(basis.arity == 2 && basis.module_dim == 1);
    let mut pairs = Vec::with_capacity(2 * v.nnz());
    for (c, x) in v.iter() {
        let t = &basis.tuples[*c];
        pairs.push((t[0] * dim + t[1], x.clone()));
        pairs.push((t[1] * dim + t[0], -x));
    }
    SparseVec::from_pairs(pairs)
}

/// Restriction of a form to the increasing pairs of `basis`.
pub fn form_to_two_cochain(basis: &CochainBasis, form: &SparseVec, dim: usize) -> SparseVec {
    assert!(basis.arity == 2 && basis.module_dim == 1);
    let pairs = form
        .iter()
        .filter_map(|(c, x)| {
            let (i, j) = (c / dim, c % dim);
            if i < j {
                basis.tuple_index(&[i, j]).map(|t| (t, x.clone()))
            } else {
                None
            }
        })
        .collect();
    SparseVec::from_pairs(pairs)
}
