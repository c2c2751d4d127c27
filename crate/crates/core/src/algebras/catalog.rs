//! Built-in algebras.

use super::{AlgebraError, AssocAlgebra, AssocDescriptor, LieAlgebra, LieDescriptor, ProductTable};
use crate::exactlin::{Scalar, SparseVec};

type SqMatrix = Vec<Vec<Scalar>>;

fn zero_sq(n: usize) -> SqMatrix {
    vec![vec![Scalar::zero(); n]; n]
}

fn commutator(a: &SqMatrix, b: &SqMatrix) -> SqMatrix {
    let n = a.len();
    let mut out = zero_sq(n);
    for i in 0..n {
        for j in 0..n {
            let mut acc = Scalar::zero();
            for k in 0..n {
                acc.add_mul(&a[i][k], &b[k][j]);
                acc.add_mul(&-&b[i][k], &a[k][j]);
            }
            out[i][j] = acc;
        }
    }
    out
}

/// `sl(n)` on trace-zero matrices.
///
/// For `n = 2` the basis is `(e-, h, e+)` with `[h,e-] = -e-`, `[h,e+] = e+`,
/// `[e-,e+] = h`, realised as `e- = -E21/2`, `h = (E11 - E22)/2`, `e+ = E12`.
/// For `n ≥ 3` the basis is `E_ij` (i > j), then `h_i = E_ii - E_{i+1,i+1}`,
/// then `E_ij` (i < j).
pub fn sl(n: usize) -> Result<LieAlgebra, AlgebraError> {
    if n < 2 {
        return Err(AlgebraError::Catalog(format!("sl({n}) needs n >= 2")));
    }
    let mut basis: Vec<SqMatrix> = Vec::new();
    let mut labels = Vec::new();
    let coords: Box<dyn Fn(&SqMatrix) -> SparseVec>;
    if n == 2 {
        let half = Scalar::new(1, 2);
        let mut em = zero_sq(2);
        em[1][0] = -&half;
        let mut h = zero_sq(2);
        h[0][0] = half.clone();
        h[1][1] = -&half;
        let mut ep = zero_sq(2);
        ep[0][1] = Scalar::one();
        basis.extend([em, h, ep]);
        labels.extend(["e-", "h", "e+"].map(String::from));
        coords = Box::new(|m: &SqMatrix| {
            let two = Scalar::from_int(2);
            SparseVec::from_pairs(vec![(0, -(&two * &m[1][0])), (1, &two * &m[0][0]), (2, m[0][1].clone())])
        });
    } else {
        let mut index_of = std::collections::HashMap::new();
        for i in 0..n {
            for j in 0..i {
                let mut e = zero_sq(n);
                e[i][j] = Scalar::one();
                index_of.insert((i, j), basis.len());
                basis.push(e);
                labels.push(format!("e{}{}", i + 1, j + 1));
            }
        }
        let h_start = basis.len();
        for i in 0..n - 1 {
            let mut h = zero_sq(n);
            h[i][i] = Scalar::one();
            h[i + 1][i + 1] = -Scalar::one();
            basis.push(h);
            labels.push(format!("h{}", i + 1));
        }
        for i in 0..n {
            for j in i + 1..n {
                let mut e = zero_sq(n);
                e[i][j] = Scalar::one();
                index_of.insert((i, j), basis.len());
                basis.push(e);
                labels.push(format!("e{}{}", i + 1, j + 1));
            }
        }
        coords = Box::new(move |m: &SqMatrix| {
            let mut pairs = Vec::new();
            for (&(i, j), &idx) in &index_of {
                pairs.push((idx, m[i][j].clone()));
            }
            // diagonal: Σ d_i E_ii = Σ c_i h_i with c_i = d_1 + ... + d_i
            let mut c = Scalar::zero();
            for i in 0..n - 1 {
                c += &m[i][i];
                pairs.push((h_start + i, c.clone()));
            }
            SparseVec::from_pairs(pairs)
        });
    }
    let dim = basis.len();
    let table = ProductTable::from_fn(dim, |a, b| coords(&commutator(&basis[a], &basis[b])));
    LieAlgebra::new(LieDescriptor::Sl(n), labels, table)
}

pub fn abelian(n: usize) -> LieAlgebra {
    let labels = (1..=n).map(|i| format!("x{i}")).collect();
    LieAlgebra::new(LieDescriptor::Abelian(n), labels, ProductTable::zero(n)).expect("abelian algebra is valid")
}

/// `[x, y] = z`.
pub fn heisenberg3() -> LieAlgebra {
    let mut t = ProductTable::zero(3);
    t.set(0, 1, SparseVec::unit(2));
    t.set(1, 0, SparseVec::unit(2).scale(&-Scalar::one()));
    let labels = ["x", "y", "z"].map(String::from).to_vec();
    LieAlgebra::new(LieDescriptor::Heisenberg3, labels, t).expect("heisenberg algebra is valid")
}

pub fn direct_sum(parts: &[LieAlgebra]) -> LieAlgebra {
    let dim: usize = parts.iter().map(LieAlgebra::dim).sum();
    let mut table = ProductTable::zero(dim);
    let mut labels = Vec::with_capacity(dim);
    let mut offset = 0;
    for (s, part) in parts.iter().enumerate() {
        for i in 0..part.dim() {
            labels.push(format!("s{}.{}", s + 1, part.labels()[i]));
            for j in 0..part.dim() {
                table.set(offset + i, offset + j, part.bracket(i, j).remap(|k| k + offset));
            }
        }
        offset += part.dim();
    }
    let descriptor = LieDescriptor::DirectSum(parts.iter().map(|p| p.descriptor().clone()).collect());
    LieAlgebra::new(descriptor, labels, table).expect("direct sum of Lie algebras is a Lie algebra")
}

/// `tK[t]/(t^n)` with basis `t, …, t^{n-1}`, or `K[t]/(t^n)` with basis
/// `1, t, …, t^{n-1}` when `unital`. Degree tags are the exponents.
pub fn truncated_poly(n: usize, unital: bool) -> Result<AssocAlgebra, AlgebraError> {
    if n < 2 {
        return Err(AlgebraError::Catalog(format!("truncated polynomial algebra needs n >= 2, got {n}")));
    }
    let low = if unital { 0 } else { 1 };
    let exps: Vec<usize> = (low..n).collect();
    let dim = exps.len();
    let table = ProductTable::from_fn(dim, |p, q| {
        let e = exps[p] + exps[q];
        if e < n {
            SparseVec::unit(e - low)
        } else {
            SparseVec::new()
        }
    });
    let labels = exps
        .iter()
        .map(|&e| match e {
            0 => "1".to_string(),
            1 => "t".to_string(),
            _ => format!("t^{e}"),
        })
        .collect();
    let degrees = exps.iter().map(|&e| e as u32).collect();
    AssocAlgebra::new(AssocDescriptor::TruncatedPoly { n, unital }, labels, table, unital, Some(degrees))
}

pub fn zero_mult(n: usize) -> AssocAlgebra {
    let labels = (1..=n).map(|i| format!("a{i}")).collect();
    AssocAlgebra::new(AssocDescriptor::ZeroMult(n), labels, ProductTable::zero(n), false, None)
        .expect("zero multiplication is associative")
}
