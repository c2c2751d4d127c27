//! Spaces of bilinear forms cut out by linear identities, tensor spans of
//! decomposable forms `φ ⊗ α`, and the two decomposition checks for current
//! algebras: 2-cocycles with trivial coefficients and symmetric invariant forms.
//!
//! A form on an `n`-dimensional algebra is stored by its full `n×n` matrix in
//! row-major order, coordinate `i * n + j` holding `φ(x_i, x_j)`.

use std::fmt;
use std::str::FromStr;

use indexmap::IndexMap;
use serde::Serialize;

use crate::algebras::{kron_coords, AssocAlgebra, BilinearForm, CurrentAlgebra, LieAlgebra, ProductTable};
use crate::cochain::{cohomology, two_cochain_to_form, CochainBasis, LieModule};
use crate::exactlin::{Echelon, Scalar, SparseVec, Subspace};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum AlgebraKind {
    Lie,
    Assoc,
}

/// Defining identity of a form space; `·` is the bracket or the product.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FormCondition {
    /// No identity.
    Any,
    /// `φ(x·y, z) + φ(z·x, y) + φ(y·z, x) = 0`.
    JacobiSumZero,
    /// `φ(x·y, z) = φ(z·x, y)`.
    Cyclic,
    /// `φ(L·L, L) = φ(L, L·L) = 0`.
    Radical,
    /// `φ([x,y], z) + φ(y, [x,z]) = 0`; Lie algebras only.
    Invariant,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SymmetryFilter {
    Symmetric,
    Skew,
    Any,
}

impl fmt::Display for FormCondition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FormCondition::Any => "any",
            FormCondition::JacobiSumZero => "jacobi_sum_zero",
            FormCondition::Cyclic => "cyclic",
            FormCondition::Radical => "radical",
            FormCondition::Invariant => "invariant",
        })
    }
}

impl FromStr for FormCondition {
    type Err = FormsError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "any" => FormCondition::Any,
            "jacobi_sum_zero" => FormCondition::JacobiSumZero,
            "cyclic" => FormCondition::Cyclic,
            "radical" => FormCondition::Radical,
            "invariant" => FormCondition::Invariant,
            _ => return Err(FormsError::UnknownName(s.to_string())),
        })
    }
}

impl fmt::Display for SymmetryFilter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SymmetryFilter::Symmetric => "symmetric",
            SymmetryFilter::Skew => "skew",
            SymmetryFilter::Any => "any",
        })
    }
}

impl FromStr for SymmetryFilter {
    type Err = FormsError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "symmetric" | "sym" => SymmetryFilter::Symmetric,
            "skew" => SymmetryFilter::Skew,
            "any" => SymmetryFilter::Any,
            _ => return Err(FormsError::UnknownName(s.to_string())),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FormsError {
    #[error("condition `{cond}` is not defined for {kind:?} algebras")]
    KindMismatch { cond: FormCondition, kind: AlgebraKind },
    #[error("form spaces do not match the current algebra factors")]
    FactorMismatch,
    #[error("unknown name `{0}`")]
    UnknownName(String),
}

/// An algebra seen only through its multiplication table.
#[derive(Clone, Copy, Debug)]
pub struct Operand<'a> {
    pub kind: AlgebraKind,
    pub table: &'a ProductTable,
}

impl<'a> From<&'a LieAlgebra> for Operand<'a> {
    fn from(l: &'a LieAlgebra) -> Self {
        Operand { kind: AlgebraKind::Lie, table: l.table() }
    }
}

impl<'a> From<&'a AssocAlgebra> for Operand<'a> {
    fn from(a: &'a AssocAlgebra) -> Self {
        Operand { kind: AlgebraKind::Assoc, table: a.table() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormSpace {
    pub kind: AlgebraKind,
    pub dim: usize,
    pub cond: FormCondition,
    pub sym: SymmetryFilter,
    pub space: Subspace,
}

impl FormSpace {
    pub fn forms(&self) -> impl Iterator<Item = BilinearForm> + '_ {
        self.space.basis_vectors().map(move |v| BilinearForm::from_coords(self.dim, v))
    }

    pub fn space_dim(&self) -> usize {
        self.space.dim()
    }
}

/// Linear functional `v ↦ φ(v, x_k)` (or `φ(x_k, v)` when `right`) on form coordinates.
fn pair_with(v: &SparseVec, k: usize, n: usize, right: bool) -> impl Iterator<Item = (usize, Scalar)> + '_ {
    v.iter().map(move |(m, c)| (if right { k * n + m } else { m * n + k }, c.clone()))
}

fn condition_rows(op: Operand<'_>, cond: FormCondition) -> Vec<SparseVec> {
    let t = op.table;
    let n = t.dim();
    let neg = |it: Vec<(usize, Scalar)>| it.into_iter().map(|(c, v)| (c, -v)).collect::<Vec<_>>();
    let mut rows = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let row = match cond {
                    FormCondition::Any => continue,
                    FormCondition::JacobiSumZero => {
                        let mut p: Vec<_> = pair_with(t.product(i, j), k, n, false).collect();
                        p.extend(pair_with(t.product(k, i), j, n, false));
                        p.extend(pair_with(t.product(j, k), i, n, false));
                        p
                    }
                    FormCondition::Cyclic => {
                        let mut p: Vec<_> = pair_with(t.product(i, j), k, n, false).collect();
                        p.extend(neg(pair_with(t.product(k, i), j, n, false).collect()));
                        p
                    }
                    FormCondition::Radical => {
                        rows.push(SparseVec::from_pairs(pair_with(t.product(i, j), k, n, true).collect()));
                        pair_with(t.product(i, j), k, n, false).collect()
                    }
                    FormCondition::Invariant => {
                        let mut p: Vec<_> = pair_with(t.product(i, j), k, n, false).collect();
                        p.extend(pair_with(t.product(i, k), j, n, true));
                        p
                    }
                };
                rows.push(SparseVec::from_pairs(row));
            }
        }
    }
    rows
}

fn symmetry_rows(n: usize, sym: SymmetryFilter) -> Vec<SparseVec> {
    let mut rows = Vec::new();
    for i in 0..n {
        for j in i..n {
            let (a, b) = (i * n + j, j * n + i);
            match sym {
                SymmetryFilter::Any => {}
                SymmetryFilter::Symmetric if i < j => {
                    rows.push(SparseVec::from_pairs(vec![(a, Scalar::one()), (b, -Scalar::one())]))
                }
                SymmetryFilter::Symmetric => {}
                SymmetryFilter::Skew => rows.push(SparseVec::from_pairs(vec![(a, Scalar::one()), (b, Scalar::one())])),
            }
        }
    }
    rows
}

/// Evaluates the defining identity of `cond` directly on every basis triple.
/// Returns the first failing triple.
pub fn check_condition(
    op: Operand<'_>,
    cond: FormCondition,
    form: &BilinearForm,
) -> Result<(), (usize, usize, usize)> {
    let t = op.table;
    let n = t.dim();
    let e = SparseVec::unit;
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let ok = match cond {
                    FormCondition::Any => true,
                    FormCondition::JacobiSumZero => {
                        let s = form.eval(t.product(i, j), &e(k))
                            + form.eval(t.product(k, i), &e(j))
                            + form.eval(t.product(j, k), &e(i));
                        s.is_zero()
                    }
                    FormCondition::Cyclic => form.eval(t.product(i, j), &e(k)) == form.eval(t.product(k, i), &e(j)),
                    FormCondition::Radical => {
                        form.eval(t.product(i, j), &e(k)).is_zero() && form.eval(&e(k), t.product(i, j)).is_zero()
                    }
                    FormCondition::Invariant => {
                        (form.eval(t.product(i, j), &e(k)) + form.eval(&e(j), t.product(i, k))).is_zero()
                    }
                };
                if !ok {
                    return Err((i, j, k));
                }
            }
        }
    }
    Ok(())
}

/// Solution space of `cond` intersected with the symmetry filter. Every basis
/// form is re-evaluated against the identity after the solve.
pub fn condition_space<'a>(
    op: impl Into<Operand<'a>>,
    cond: FormCondition,
    sym: SymmetryFilter,
) -> Result<FormSpace, FormsError> {
    let op = op.into();
    if cond == FormCondition::Invariant && op.kind != AlgebraKind::Lie {
        return Err(FormsError::KindMismatch { cond, kind: op.kind });
    }
    let n = op.table.dim();
    let mut e = Echelon::new(n * n);
    e.extend(&condition_rows(op, cond));
    e.extend(&symmetry_rows(n, sym));
    let space = Subspace::from_vectors(n * n, &e.null_space_vectors());
    let fs = FormSpace { kind: op.kind, dim: n, cond, sym, space };
    for form in fs.forms() {
        assert!(check_condition(op, cond, &form).is_ok(), "solved form fails `{cond}`");
        match sym {
            SymmetryFilter::Symmetric => assert!(form.is_symmetric()),
            SymmetryFilter::Skew => assert!(form.is_skew()),
            SymmetryFilter::Any => {}
        }
    }
    Ok(fs)
}

/// `B(L)`: symmetric invariant forms.
pub fn invariant_symmetric_forms(lie: &LieAlgebra) -> FormSpace {
    condition_space(lie, FormCondition::Invariant, SymmetryFilter::Symmetric).expect("invariance is a Lie condition")
}

/// Skew forms with `α(ab,c) + α(ca,b) + α(bc,a) = 0`.
pub fn hc1_space(assoc: &AssocAlgebra) -> FormSpace {
    condition_space(assoc, FormCondition::JacobiSumZero, SymmetryFilter::Skew).expect("defined for every algebra")
}

/// Span of `φ ⊗ α` over basis forms of both factors, as forms on `L ⊗ A`.
pub fn tensor_form_span(fl: &FormSpace, fa: &FormSpace, current: &CurrentAlgebra) -> Result<Subspace, FormsError> {
    let (dl, da) = (current.lie().dim(), current.assoc().dim());
    if fl.kind != AlgebraKind::Lie || fa.kind != AlgebraKind::Assoc || fl.dim != dl || fa.dim != da {
        return Err(FormsError::FactorMismatch);
    }
    let n = dl * da;
    let mut e = Echelon::new(n * n);
    for phi in fl.space.basis_vectors() {
        for alpha in fa.space.basis_vectors() {
            e.insert(&kron_coords(phi, dl, alpha, da));
        }
    }
    Ok(Subspace::from_echelon(e))
}

/// `Z²(L⊗A, K)` as skew forms in full matrix coordinates.
pub fn cocycle_forms(current: &CurrentAlgebra) -> Subspace {
    let lie = current.algebra();
    let n = lie.dim();
    let z = cohomology(lie, &LieModule::trivial(lie, 1), 2).z_space;
    let basis = CochainBasis::full(n, 2, 1);
    let forms: Vec<SparseVec> = z.basis_vectors().map(|v| two_cochain_to_form(&basis, v, n)).collect();
    Subspace::from_vectors(n * n, &forms)
}

/// `B²(L⊗A, K)` as skew forms in full matrix coordinates.
pub fn coboundary_forms(current: &CurrentAlgebra) -> Subspace {
    let lie = current.algebra();
    let n = lie.dim();
    let b = cohomology(lie, &LieModule::trivial(lie, 1), 2).b_space;
    let basis = CochainBasis::full(n, 2, 1);
    let forms: Vec<SparseVec> = b.basis_vectors().map(|v| two_cochain_to_form(&basis, v, n)).collect();
    Subspace::from_vectors(n * n, &forms)
}

/// Every coboundary `dΩ(x⊗a, y⊗b) = -Ω([x,y]⊗ab)` lies in the summand
/// `{skew on L} ⊗ {symmetric on A}`.
pub fn coboundaries_in_skew_sym_summand(lie: &LieAlgebra, assoc: &AssocAlgebra) -> bool {
    let current = CurrentAlgebra::new(lie, assoc);
    let fl = condition_space(lie, FormCondition::Any, SymmetryFilter::Skew).unwrap();
    let fa = condition_space(assoc, FormCondition::Any, SymmetryFilter::Symmetric).unwrap();
    let summand = tensor_form_span(&fl, &fa, &current).unwrap();
    summand.contains(&coboundary_forms(&current)).unwrap()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    /// Which inclusion fails.
    pub inclusion: &'static str,
    /// Row-major form coordinates `(index, value)` of a vector outside.
    pub vector: Vec<(usize, Scalar)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReportDims {
    #[serde(flatten)]
    pub target: IndexMap<String, usize>,
    pub span: usize,
    pub types: IndexMap<String, usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DecompositionReport {
    pub theorem: &'static str,
    #[serde(rename = "L")]
    pub lie: String,
    #[serde(rename = "A")]
    pub assoc: String,
    pub dims: ReportDims,
    #[serde(rename = "span_in_Z")]
    pub span_in_target: bool,
    #[serde(rename = "Z_in_span")]
    pub target_in_span: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl DecompositionReport {
    pub fn holds(&self) -> bool {
        self.span_in_target && self.target_in_span
    }
}

type TypeSpec = (&'static str, FormCondition, FormCondition);

const H2_TYPES: [TypeSpec; 4] = [
    ("i", FormCondition::JacobiSumZero, FormCondition::Cyclic),
    ("ii", FormCondition::Cyclic, FormCondition::JacobiSumZero),
    ("iii", FormCondition::Radical, FormCondition::Any),
    ("iv", FormCondition::Any, FormCondition::Radical),
];
const H2_SUBTYPES: [(SymmetryFilter, SymmetryFilter); 2] =
    [(SymmetryFilter::Skew, SymmetryFilter::Symmetric), (SymmetryFilter::Symmetric, SymmetryFilter::Skew)];

const FORM_TYPES: [TypeSpec; 3] = [
    ("i", FormCondition::Cyclic, FormCondition::Cyclic),
    ("ii", FormCondition::Radical, FormCondition::Any),
    ("iii", FormCondition::Any, FormCondition::Radical),
];
const FORM_SUBTYPES: [(SymmetryFilter, SymmetryFilter); 2] =
    [(SymmetryFilter::Symmetric, SymmetryFilter::Symmetric), (SymmetryFilter::Skew, SymmetryFilter::Skew)];

fn sym_short(s: SymmetryFilter) -> &'static str {
    match s {
        SymmetryFilter::Symmetric => "sym",
        SymmetryFilter::Skew => "skew",
        SymmetryFilter::Any => "any",
    }
}

/// Per-type spans and their sum.
fn type_spans(
    current: &CurrentAlgebra,
    types: &[TypeSpec],
    subtypes: &[(SymmetryFilter, SymmetryFilter)],
) -> (IndexMap<String, usize>, Subspace) {
    let n = current.dim();
    let mut dims = IndexMap::new();
    let mut total = Echelon::new(n * n);
    for &(name, cl, ca) in types {
        for &(sl, sa) in subtypes {
            let fl = condition_space(current.lie(), cl, sl).expect("Lie condition");
            let fa = condition_space(current.assoc(), ca, sa).expect("associative condition");
            let span = tensor_form_span(&fl, &fa, current).expect("factors match");
            dims.insert(format!("{name}:{},{}", sym_short(sl), sym_short(sa)), span.dim());
            total.extend(span.basis_vectors());
        }
    }
    (dims, Subspace::from_echelon(total))
}

fn compare(
    theorem: &'static str,
    current: &CurrentAlgebra,
    target_name: &str,
    target: Subspace,
    types: IndexMap<String, usize>,
    span: Subspace,
) -> DecompositionReport {
    let span_in_target = target.contains(&span).unwrap();
    let target_in_span = span.contains(&target).unwrap();
    let witness = if !target_in_span {
        span.first_outside(&target).unwrap().map(|v| ("Z_in_span", v))
    } else if !span_in_target {
        target.first_outside(&span).unwrap().map(|v| ("span_in_Z", v))
    } else {
        None
    }
    .map(|(inclusion, v)| Witness { inclusion, vector: v.entries().to_vec() });
    let mut target_dims = IndexMap::new();
    target_dims.insert(target_name.to_string(), target.dim());
    DecompositionReport {
        theorem,
        lie: current.lie().name(),
        assoc: current.assoc().name(),
        dims: ReportDims { target: target_dims, span: span.dim(), types },
        span_in_target,
        target_in_span,
        witness,
    }
}

/// Compares `Z²(L⊗A, K)` with the sum of the eight decomposable cocycle types.
pub fn verify_h2_decomposition(lie: &LieAlgebra, assoc: &AssocAlgebra) -> DecompositionReport {
    let current = CurrentAlgebra::new(lie, assoc);
    let (types, span) = type_spans(&current, &H2_TYPES, &H2_SUBTYPES);
    compare("h2", &current, "Z2", cocycle_forms(&current), types, span)
}

/// Compares `B(L⊗A)` with the sum of the six decomposable form types.
pub fn verify_forms_decomposition(lie: &LieAlgebra, assoc: &AssocAlgebra) -> DecompositionReport {
    let current = CurrentAlgebra::new(lie, assoc);
    let (types, span) = type_spans(&current, &FORM_TYPES, &FORM_SUBTYPES);
    let target = invariant_symmetric_forms(current.algebra()).space;
    compare("forms", &current, "B", target, types, span)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sl2() -> LieAlgebra {
        LieAlgebra::sl(2).unwrap()
    }

    fn tpoly(n: usize) -> AssocAlgebra {
        AssocAlgebra::truncated_poly(n, false).unwrap()
    }

    #[test]
    fn skew_jacobi_sum_zero_is_z2() {
        let l = sl2();
        let fs = condition_space(&l, FormCondition::JacobiSumZero, SymmetryFilter::Skew).unwrap();
        assert_eq!(fs.space_dim(), 3);
        let z = cohomology(&l, &LieModule::trivial(&l, 1), 2).z_space;
        let basis = CochainBasis::full(3, 2, 1);
        let zf: Vec<SparseVec> = z.basis_vectors().map(|v| two_cochain_to_form(&basis, v, 3)).collect();
        assert_eq!(Subspace::from_vectors(9, &zf), fs.space);
    }

    #[test]
    fn symmetric_jacobi_sum_zero_sl2() {
        let fs = condition_space(&sl2(), FormCondition::JacobiSumZero, SymmetryFilter::Symmetric).unwrap();
        assert_eq!(fs.space_dim(), 5);
        for f in fs.forms() {
            let m = f.matrix();
            assert_eq!(m[(0, 2)], &m[(1, 1)] * &Scalar::new(1, 2));
        }
    }

    #[test]
    fn semisimple_vanishing() {
        let sl3 = LieAlgebra::sl(3).unwrap();
        assert!(condition_space(&sl3, FormCondition::JacobiSumZero, SymmetryFilter::Symmetric).unwrap().space.is_zero());
        for l in [sl2(), sl3] {
            assert!(condition_space(&l, FormCondition::Cyclic, SymmetryFilter::Skew).unwrap().space.is_zero());
        }
    }

    #[test]
    fn radical_of_truncated_poly() {
        for n in 4..=6 {
            let fs = condition_space(&tpoly(n), FormCondition::Radical, SymmetryFilter::Any).unwrap();
            // only α(t, t) survives
            assert_eq!(fs.space_dim(), 1);
            assert_eq!(fs.space.basis_vectors().next().unwrap(), &SparseVec::unit(0));
        }
    }

    #[test]
    fn invariant_forms() {
        let b = invariant_symmetric_forms(&sl2());
        assert_eq!(b.space_dim(), 1);
        assert!(b.space.contains_vector(&sl2().killing_form().coords()).unwrap());
        assert_eq!(invariant_symmetric_forms(&LieAlgebra::abelian(4)).space_dim(), 10);
        let s = LieAlgebra::direct_sum(&[sl2(), LieAlgebra::sl(3).unwrap()]);
        assert_eq!(invariant_symmetric_forms(&s).space_dim(), 2);
    }

    #[test]
    fn invariance_needs_a_lie_algebra() {
        let err = condition_space(&tpoly(3), FormCondition::Invariant, SymmetryFilter::Any).unwrap_err();
        assert_eq!(err, FormsError::KindMismatch { cond: FormCondition::Invariant, kind: AlgebraKind::Assoc });
    }

    #[test]
    fn tensor_span_bounds() {
        let c = CurrentAlgebra::new(&sl2(), &tpoly(3));
        let zero = condition_space(&sl2(), FormCondition::Cyclic, SymmetryFilter::Skew).unwrap();
        let any_a = condition_space(&tpoly(3), FormCondition::Any, SymmetryFilter::Any).unwrap();
        assert!(tensor_form_span(&zero, &any_a, &c).unwrap().is_zero());
        let skew_l = condition_space(&sl2(), FormCondition::Any, SymmetryFilter::Skew).unwrap();
        let sym_a = condition_space(&tpoly(3), FormCondition::Any, SymmetryFilter::Symmetric).unwrap();
        let span = tensor_form_span(&skew_l, &sym_a, &c).unwrap();
        assert!(span.dim() <= skew_l.space_dim() * sym_a.space_dim());
        for v in span.basis_vectors() {
            assert!(BilinearForm::from_coords(6, v).is_skew());
        }
        assert_eq!(tensor_form_span(&sym_a, &skew_l, &c), Err(FormsError::FactorMismatch));
    }

    #[test]
    fn h2_decomposition_sl2_tpoly3() {
        let r = verify_h2_decomposition(&sl2(), &tpoly(3));
        assert!(r.holds(), "{r:?}");
        assert!(r.witness.is_none());
        assert_eq!(r.dims.types.len(), 8);
    }

    #[test]
    fn h2_abelian_is_type_iii() {
        let r = verify_h2_decomposition(&LieAlgebra::abelian(2), &tpoly(3));
        assert!(r.holds());
        let n = 4;
        assert_eq!(r.dims.target["Z2"], n * (n - 1) / 2);
        assert_eq!(r.dims.types["iii:skew,sym"] + r.dims.types["iii:sym,skew"], n * (n - 1) / 2);
    }

    #[test]
    fn forms_decomposition() {
        for (l, a) in [(sl2(), tpoly(4)), (sl2(), tpoly(2)), (LieAlgebra::heisenberg3(), tpoly(2))] {
            let r = verify_forms_decomposition(&l, &a);
            assert!(r.holds(), "{r:?}");
        }
    }

    #[test]
    fn heisenberg_forms_counterexample() {
        // Φ(x⊗t², z⊗t) = Φ(z⊗t, x⊗t²) = 1 is symmetric and invariant but not a
        // sum of the six decomposable types
        let heis = LieAlgebra::heisenberg3();
        let r = verify_forms_decomposition(&heis, &tpoly(3));
        assert!(r.span_in_target);
        assert!(!r.target_in_span);
        assert_eq!((r.dims.target["B"], r.dims.span), (15, 13));
        let w = r.witness.unwrap();
        assert_eq!(w.inclusion, "Z_in_span");
        let c = CurrentAlgebra::new(&heis, &tpoly(3));
        let phi = BilinearForm::from_coords(6, &SparseVec::from_pairs(w.vector));
        assert!(phi.is_symmetric());
        assert!(check_condition(c.algebra().into(), FormCondition::Invariant, &phi).is_ok());
    }

    #[test]
    fn heisenberg_h2_counterexample() {
        let heis = LieAlgebra::heisenberg3();
        assert!(verify_h2_decomposition(&heis, &tpoly(3)).holds());
        let r = verify_h2_decomposition(&heis, &tpoly(4));
        assert!(r.span_in_target && !r.target_in_span);
        assert_eq!((r.dims.target["Z2"], r.dims.span), (25, 23));
        let c = CurrentAlgebra::new(&heis, &tpoly(4));
        let phi = BilinearForm::from_coords(9, &SparseVec::from_pairs(r.witness.unwrap().vector));
        assert!(phi.is_skew());
        assert!(check_condition(c.algebra().into(), FormCondition::JacobiSumZero, &phi).is_ok());
    }

    #[test]
    fn coboundaries_sit_in_one_summand() {
        assert!(coboundaries_in_skew_sym_summand(&sl2(), &tpoly(3)));
        let c = CurrentAlgebra::new(&sl2(), &tpoly(3));
        let fl = condition_space(&sl2(), FormCondition::Any, SymmetryFilter::Symmetric).unwrap();
        let fa = condition_space(&tpoly(3), FormCondition::Any, SymmetryFilter::Skew).unwrap();
        let other = tensor_form_span(&fl, &fa, &c).unwrap();
        let b = coboundary_forms(&c);
        assert!(!b.is_zero());
        assert!(other.intersect(&b).unwrap().is_zero());
    }

    #[test]
    fn hc1_values() {
        assert_eq!(hc1_space(&AssocAlgebra::zero_mult(4)).space_dim(), 6);
        assert_eq!(hc1_space(&AssocAlgebra::truncated_poly(2, true).unwrap()).space_dim(), 0);
    }

    #[test]
    fn report_json_shape() {
        let r = verify_h2_decomposition(&sl2(), &tpoly(2));
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(v["theorem"], "h2");
        assert_eq!(v["L"], "sl2");
        assert_eq!(v["A"], "tpoly:2");
        assert!(v["dims"]["Z2"].is_u64());
        assert_eq!(v["span_in_Z"], true);
        assert!(v.get("witness").is_none());
    }
}
