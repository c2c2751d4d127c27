//! Degree-by-degree cohomology of the periodization `g ⊗ tK[t]`.
//!
//! The differential preserves total `t`-degree, so each graded piece is
//! computed inside the truncation `g ⊗ tK[t]/(tⁿ)` with `n ≥ d + 1`, where
//! no product entering a degree-`d` constraint is cut off.

use indexmap::IndexMap;
use serde::Serialize;

use crate::algebras::{AssocAlgebra, CurrentAlgebra, LieAlgebra};
use crate::cochain::{cohomology, cohomology_on, two_cochain_to_form, CochainBasis, CochainSpaceResult, LieModule};
use crate::exactlin::{Matrix, Scalar, SparseVec, Subspace};
use crate::forms::{condition_space, FormCondition, SymmetryFilter};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GradedError {
    #[error("graded degree must be at least 2, got {0}")]
    Degree(u32),
    #[error("truncation order {order} is too small for degree {degree}; need at least {}", degree + 1)]
    Window { degree: u32, order: usize },
    #[error("{0} is not a direct sum of sl(n) summands")]
    NotSemisimple(String),
    #[error("maximum degree must be at least 3, got {0}")]
    MaxDegree(u32),
    #[error("condition `{0}` has no graded form count; use cyclic or jacobi_sum_zero")]
    Condition(FormCondition),
    #[error("symmetry filter must be symmetric or skew")]
    Symmetry,
}

/// `g ⊗ tK[t]/(tⁿ)` with its `t`-grading.
#[derive(Clone, Debug)]
pub struct GradedWindow {
    current: CurrentAlgebra,
    order: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct GradedDims {
    #[serde(rename = "Z")]
    pub z: usize,
    #[serde(rename = "B")]
    pub b: usize,
    #[serde(rename = "H")]
    pub h: usize,
}

impl GradedWindow {
    pub fn new(g: &LieAlgebra, order: usize) -> Result<Self, GradedError> {
        let assoc = AssocAlgebra::truncated_poly(order, false).map_err(|_| GradedError::Window { degree: 1, order })?;
        Ok(GradedWindow { current: CurrentAlgebra::new(g, &assoc), order })
    }

    pub fn current(&self) -> &CurrentAlgebra {
        &self.current
    }

    pub fn order(&self) -> usize {
        self.order
    }

    fn degrees(&self) -> &[u32] {
        self.current.degrees().expect("truncated polynomials are graded")
    }

    pub fn cochains(&self, arity: usize, degree: u32) -> CochainBasis {
        CochainBasis::homogeneous(self.degrees(), arity, degree, 1)
    }

    fn check(&self, degree: u32) -> Result<(), GradedError> {
        if degree < 2 {
            return Err(GradedError::Degree(degree));
        }
        if self.order < degree as usize + 1 {
            return Err(GradedError::Window { degree, order: self.order });
        }
        Ok(())
    }

    /// `Z²`, `B²` of degree `degree` on the basis `self.cochains(2, degree)`.
    pub fn h2_spaces(&self, degree: u32) -> Result<CochainSpaceResult, GradedError> {
        self.check(degree)?;
        let alg = self.current.algebra();
        let triv = LieModule::trivial(alg, 1);
        Ok(cohomology_on(
            alg,
            &triv,
            &self.cochains(1, degree),
            &self.cochains(2, degree),
            &self.cochains(3, degree),
        ))
    }

    pub fn h2(&self, degree: u32) -> Result<GradedDims, GradedError> {
        let r = self.h2_spaces(degree)?;
        Ok(GradedDims { z: r.z_dim(), b: r.b_dim(), h: r.h_dim })
    }
}

/// Degree-`d` piece of `H²(g ⊗ tK[t], K)`, computed in the window `n = d + 1`.
pub fn graded_h2(g: &LieAlgebra, degree: u32) -> Result<GradedDims, GradedError> {
    graded_h2_at(g, degree, degree as usize + 1)
}

pub fn graded_h2_at(g: &LieAlgebra, degree: u32, order: usize) -> Result<GradedDims, GradedError> {
    if degree < 2 {
        return Err(GradedError::Degree(degree));
    }
    GradedWindow::new(g, order)?.h2(degree)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LarssonReport {
    pub g: String,
    pub degrees: IndexMap<String, GradedDims>,
    pub expected: IndexMap<String, usize>,
    pub verdict: bool,
    pub quadratic_presentation: bool,
}

impl LarssonReport {
    pub fn h_dims(&self) -> Vec<usize> {
        self.degrees.values().map(|d| d.h).collect()
    }
}

/// Graded `H²` for `d = 2..=max_degree`, compared with `dim C²(g)/B²(g)` in
/// degree 2, five per `sl(2)` summand in degree 3 and zero above.
pub fn larsson_report(g: &LieAlgebra, max_degree: u32) -> Result<LarssonReport, GradedError> {
    let sl2 = g.descriptor().sl2_summands().ok_or_else(|| GradedError::NotSemisimple(g.name()))?;
    if max_degree < 3 {
        return Err(GradedError::MaxDegree(max_degree));
    }
    let triv = LieModule::trivial(g, 1);
    let h2g = cohomology(g, &triv, 2);
    let quotient = h2g.cochain_dim - h2g.b_dim();
    let window = GradedWindow::new(g, max_degree as usize + 1)?;
    let mut degrees = IndexMap::new();
    let mut expected = IndexMap::new();
    for d in 2..=max_degree {
        degrees.insert(d.to_string(), window.h2(d)?);
        let e = match d {
            2 => quotient,
            3 => 5 * sl2,
            _ => 0,
        };
        expected.insert(d.to_string(), e);
    }
    let verdict = degrees.iter().all(|(k, v)| expected[k] == v.h);
    let quadratic_presentation = degrees.iter().skip(1).all(|(_, v)| v.h == 0);
    Ok(LarssonReport { g: g.name(), degrees, expected, verdict, quadratic_presentation })
}

/// Forms on `tK[t]` supported on pairs `(tⁱ, tʲ)` with `i + j = d`.
pub fn graded_form_space(cond: FormCondition, sym: SymmetryFilter, degree: u32, order: usize) -> Result<Subspace, GradedError> {
    if !matches!(cond, FormCondition::Cyclic | FormCondition::JacobiSumZero) {
        return Err(GradedError::Condition(cond));
    }
    if sym == SymmetryFilter::Any {
        return Err(GradedError::Symmetry);
    }
    if degree < 2 {
        return Err(GradedError::Degree(degree));
    }
    if order < degree as usize + 1 {
        return Err(GradedError::Window { degree, order });
    }
    let a = AssocAlgebra::truncated_poly(order, false).expect("order >= 3");
    let n = a.dim();
    let all = condition_space(&a, cond, sym).expect("conditions apply to associative algebras").space;
    let support: Vec<SparseVec> = (0..n)
        .flat_map(|p| (0..n).map(move |q| (p, q)))
        .filter(|&(p, q)| (p + q + 2) as u32 == degree)
        .map(|(p, q)| SparseVec::unit(p * n + q))
        .collect();
    Ok(all.intersect(&Subspace::from_vectors(n * n, &support)).expect("same ambient"))
}

pub fn graded_form_dims(cond: FormCondition, sym: SymmetryFilter, degree: u32) -> Result<usize, GradedError> {
    Ok(graded_form_space(cond, sym, degree, degree as usize + 1)?.dim())
}

/// `Z²` of the whole truncation restricted to cochains of pure degree `d`.
pub fn whole_z2_in_degree(g: &LieAlgebra, order: usize, degree: u32) -> Result<usize, GradedError> {
    let w = GradedWindow::new(g, order)?;
    w.check(degree)?;
    let alg = w.current().algebra();
    let full = cohomology(alg, &LieModule::trivial(alg, 1), 2);
    let all = CochainBasis::full(alg.dim(), 2, 1);
    let pure: Vec<SparseVec> = w
        .cochains(2, degree)
        .tuples()
        .iter()
        .map(|t| SparseVec::unit(all.tuple_index(t).expect("increasing pair")))
        .collect();
    let coords = Subspace::from_vectors(all.dim(), &pure);
    Ok(full.z_space.intersect(&coords).expect("same ambient").dim())
}

/// Ranks of `{Φ_φ}` modulo `B²` in degree 2 and of `{φ}` modulo `B²(g)`, where
/// `Φ_φ(x ⊗ t, y ⊗ t) = φ(x, y)` for skew forms `φ` on `g`.
pub fn degree_two_ranks(g: &LieAlgebra, phis: &[SparseVec]) -> (usize, usize) {
    let n = g.dim();
    let w = GradedWindow::new(g, 3).expect("order 3");
    let sp = w.h2_spaces(2).expect("degree 2 fits");
    let c2 = w.cochains(2, 2);
    let c2g = CochainBasis::full(n, 2, 1);
    let cur = w.current();
    let lift = |phi: &SparseVec| -> SparseVec {
        let pairs = phi
            .iter()
            .filter(|(c, _)| c / n < c % n)
            .map(|(c, x)| {
                let (i, j) = (c / n, c % n);
                (c2.tuple_index(&[cur.index(i, 0), cur.index(j, 0)]).expect("degree-2 pair"), x.clone())
            })
            .collect();
        SparseVec::from_pairs(pairs)
    };
    let to_cochain = |phi: &SparseVec| -> SparseVec {
        SparseVec::from_pairs(
            phi.iter()
                .filter(|(c, _)| c / n < c % n)
                .map(|(c, x)| (c2g.tuple_index(&[c / n, c % n]).unwrap(), x.clone()))
                .collect(),
        )
    };
    let big: Vec<SparseVec> = phis.iter().map(lift).collect();
    for v in &big {
        assert!(sp.z_space.contains_vector(v).unwrap(), "degree-2 lift is not a cocycle");
    }
    let modulo = |b: &Subspace, vs: &[SparseVec], amb: usize| {
        b.sum(&Subspace::from_vectors(amb, vs)).unwrap().dim() - b.dim()
    };
    let bg = cohomology(g, &LieModule::trivial(g, 1), 2).b_space;
    let small: Vec<SparseVec> = phis.iter().map(to_cochain).collect();
    (modulo(&sp.b_space, &big, c2.dim()), modulo(&bg, &small, c2g.dim()))
}

/// `ψ(x, y) = Ψ(x ⊗ t, y ⊗ t²)` for the degree-3 cocycles `Ψ` of `g ⊗ tK[t]`
/// whose `ψ` is symmetric.
pub fn degree_three_symmetric_forms(g: &LieAlgebra) -> Vec<Matrix> {
    let n = g.dim();
    let w = GradedWindow::new(g, 4).expect("order 4");
    let sp = w.h2_spaces(3).expect("degree 3 fits");
    let c2 = w.cochains(2, 3);
    let cur = w.current();
    let psi_of = |v: &SparseVec| -> Matrix {
        let form = two_cochain_to_form(&c2, v, cur.dim());
        Matrix::from_fn(n, n, |i, j| form.get(cur.index(i, 0) * cur.dim() + cur.index(j, 1)))
    };
    // symmetric ψ: ψ(x_i, x_j) - ψ(x_j, x_i) = 0
    let skew_part: Vec<SparseVec> = sp
        .z_space
        .basis_vectors()
        .map(|v| {
            let p = psi_of(v);
            SparseVec::from_pairs(
                (0..n)
                    .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                    .map(|(i, j)| (i * n + j, &p[(i, j)] - &p[(j, i)]))
                    .collect(),
            )
        })
        .collect();
    let basis: Vec<&SparseVec> = sp.z_space.basis_vectors().collect();
    // coefficient vectors c with Σ c_k skew_part_k = 0
    let mut e = crate::exactlin::Echelon::new(basis.len());
    for row in 0..n * n {
        let eq = SparseVec::from_pairs(skew_part.iter().enumerate().map(|(k, s)| (k, s.get(row))).collect());
        e.insert(&eq);
    }
    e.null_space_vectors()
        .iter()
        .map(|c| {
            let mut v = SparseVec::new();
            for (k, x) in c.iter() {
                v = v.axpy(x, basis[*k]);
            }
            psi_of(&v)
        })
        .collect()
}

/// `ψ(e-, e+) - ψ(h, h)/2` in the basis `(e-, h, e+)`.
pub fn sl2_form_defect(psi: &Matrix) -> Scalar {
    &psi[(0, 2)] - &(&psi[(1, 1)] * &Scalar::new(1, 2))
}
