//! Derivations, antiderivations and the linear map spaces appearing in the
//! decomposition of `Der(L ⊗ A)`, together with the exact sequence
//!
//! ```text
//! 0 → H²(L,K) →u H¹(L,L*) →v B(L) →w H³(L,K)
//! ```
//!
//! An endomorphism `D` with `D(x_j) = Σ_i D[i][j] x_i` has coordinate
//! `i * n + j`.

use std::fmt;

use indexmap::IndexMap;
use num_bigint::BigInt;
use num_integer::Integer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebras::{kron_coords, AssocAlgebra, BilinearForm, CurrentAlgebra, LieAlgebra, ProductTable};
use crate::cochain::{cohomology, two_cochain_to_form, CochainBasis, LieModule, ModuleKind};
use crate::exactlin::{modular, Echelon, Matrix, Poly, Scalar, SparseVec, Subspace};
use crate::forms::{condition_space, invariant_symmetric_forms, AlgebraKind, FormCondition, Operand, SymmetryFilter};

/// Linear conditions on a map `d: X → X`; `·` is the bracket or the product.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum MapCondition {
    Any,
    /// `d(x·y) = λ (d(x)·y + x·d(y))`.
    DerivationLike(Scalar),
    /// `d(x·y) = λ d(x)·y`.
    LeftMultiplier(Scalar),
    /// `[d(x),y] + [x,d(y)] = 0`.
    BracketSkew,
    /// `[d(x),y] = [x,d(y)]`.
    BracketSymmetric,
    /// `d([L,L]) = 0`.
    KillsDerived,
    /// `d(L) ⊆ Z(L)`.
    IntoCenter,
    /// `[d(x),x] = 0`.
    SelfCommuting,
    /// `β(a)b = aβ(b)`.
    ProductSymmetric,
    /// `β(AA) = 0`.
    KillsSquare,
    /// `β(A) ⊆ Z(A)`.
    IntoAnnihilator,
    /// `β(a)b + aβ(b) = 0`.
    ProductSkew,
}

impl MapCondition {
    pub fn derivation() -> Self {
        MapCondition::DerivationLike(Scalar::one())
    }

    pub fn antiderivation() -> Self {
        MapCondition::DerivationLike(-Scalar::one())
    }

    /// The algebra kind the condition is phrased for, `None` if both.
    pub fn kind(&self) -> Option<AlgebraKind> {
        use MapCondition::*;
        match self {
            Any | DerivationLike(_) | LeftMultiplier(_) => None,
            BracketSkew | BracketSymmetric | KillsDerived | IntoCenter | SelfCommuting => Some(AlgebraKind::Lie),
            ProductSymmetric | KillsSquare | IntoAnnihilator | ProductSkew => Some(AlgebraKind::Assoc),
        }
    }
}

impl fmt::Display for MapCondition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use MapCondition::*;
        match self {
            Any => write!(f, "any"),
            DerivationLike(l) => write!(f, "derivation_like({l})"),
            LeftMultiplier(l) => write!(f, "left_multiplier({l})"),
            BracketSkew => write!(f, "bracket_skew"),
            BracketSymmetric => write!(f, "bracket_symmetric"),
            KillsDerived => write!(f, "kills_derived"),
            IntoCenter => write!(f, "into_center"),
            SelfCommuting => write!(f, "self_commuting"),
            ProductSymmetric => write!(f, "product_symmetric"),
            KillsSquare => write!(f, "kills_square"),
            IntoAnnihilator => write!(f, "into_annihilator"),
            ProductSkew => write!(f, "product_skew"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DerivationsError {
    #[error("condition `{cond}` does not apply to {kind:?} algebras")]
    KindMismatch { cond: String, kind: AlgebraKind },
    #[error("{0} is not a symmetric invariant nondegenerate form")]
    DegenerateForm(String),
    #[error("no nondegenerate invariant form available: {0}")]
    NoInvariantForm(String),
    #[error("the Lie factor must be nonabelian")]
    AbelianLie,
    #[error("loop derivation needs N >= 3, got {0}")]
    LoopDegree(usize),
    #[error("random projections failed to separate the pencil")]
    ProjectionFailure,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MapSpace {
    pub kind: AlgebraKind,
    pub dim: usize,
    pub conds: Vec<MapCondition>,
    pub space: Subspace,
}

impl MapSpace {
    pub fn maps(&self) -> impl Iterator<Item = Matrix> + '_ {
        self.space.basis_vectors().map(move |v| coords_to_map(self.dim, v))
    }

    pub fn space_dim(&self) -> usize {
        self.space.dim()
    }
}

pub fn coords_to_map(n: usize, v: &SparseVec) -> Matrix {
    let mut m = Matrix::zeros(n, n);
    for (c, x) in v.iter() {
        m[(c / n, c % n)] = x.clone();
    }
    m
}

pub fn map_to_coords(m: &Matrix) -> SparseVec {
    let n = m.ncols();
    SparseVec::from_pairs((0..m.nrows()).flat_map(|i| (0..n).map(move |j| (i * n + j, m[(i, j)].clone()))).collect())
}

/// `D v` for a coordinate vector `v`.
pub fn apply_map(d: &Matrix, v: &SparseVec) -> SparseVec {
    let mut pairs = Vec::new();
    for (j, x) in v.iter() {
        for i in 0..d.nrows() {
            let c = &d[(i, *j)];
            if !c.is_zero() {
                pairs.push((i, c * x));
            }
        }
    }
    SparseVec::from_pairs(pairs)
}

/// Structure constants `c[i][j][k]` as a dense cube.
struct Cube {
    n: usize,
    c: Vec<Scalar>,
}

impl Cube {
    fn new(t: &ProductTable) -> Self {
        let n = t.dim();
        let mut c = vec![Scalar::zero(); n * n * n];
        for i in 0..n {
            for j in 0..n {
                for (k, v) in t.product(i, j).iter() {
                    c[(i * n + j) * n + k] = v.clone();
                }
            }
        }
        Cube { n, c }
    }

    fn at(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.c[(i * self.n + j) * self.n + k]
    }
}

/// Linear functionals on map coordinates, component `l` of each expression.
struct Functionals<'a> {
    t: &'a ProductTable,
    cube: Cube,
    n: usize,
}

impl<'a> Functionals<'a> {
    fn new(t: &'a ProductTable) -> Self {
        Functionals { t, cube: Cube::new(t), n: t.dim() }
    }

    /// `d(x_j · x_k)_l`.
    fn image(&self, j: usize, k: usize, l: usize, s: &Scalar, out: &mut Vec<(usize, Scalar)>) {
        for (m, c) in self.t.product(j, k).iter() {
            out.push((l * self.n + m, s * c));
        }
    }

    /// `(d(x_j) · x_k)_l`.
    fn left(&self, j: usize, k: usize, l: usize, s: &Scalar, out: &mut Vec<(usize, Scalar)>) {
        for m in 0..self.n {
            let c = self.cube.at(m, k, l);
            if !c.is_zero() {
                out.push((m * self.n + j, s * c));
            }
        }
    }

    /// `(x_j · d(x_k))_l`.
    fn right(&self, j: usize, k: usize, l: usize, s: &Scalar, out: &mut Vec<(usize, Scalar)>) {
        for m in 0..self.n {
            let c = self.cube.at(j, m, l);
            if !c.is_zero() {
                out.push((m * self.n + k, s * c));
            }
        }
    }
}

/// One equation per `(j, k, l)`; `all_pairs` also takes `j > k`.
fn equations(
    t: &ProductTable,
    all_pairs: bool,
    f: impl Fn(&Functionals<'_>, usize, usize, usize, &mut Vec<(usize, Scalar)>),
) -> Vec<SparseVec> {
    let fx = Functionals::new(t);
    let n = t.dim();
    let mut rows = Vec::new();
    for j in 0..n {
        for k in if all_pairs { 0 } else { j }..n {
            for l in 0..n {
                let mut p = Vec::new();
                f(&fx, j, k, l, &mut p);
                let row = SparseVec::from_pairs(p);
                if !row.is_zero() {
                    rows.push(row);
                }
            }
        }
    }
    rows
}

fn condition_rows(t: &ProductTable, cond: &MapCondition) -> Vec<SparseVec> {
    use MapCondition::*;
    let one = Scalar::one();
    let neg = -Scalar::one();
    match cond {
        Any => Vec::new(),
        DerivationLike(lam) => {
            let nl = -lam;
            equations(t, false, |f, j, k, l, p| {
                f.image(j, k, l, &one, p);
                f.left(j, k, l, &nl, p);
                f.right(j, k, l, &nl, p);
            })
        }
        LeftMultiplier(lam) => {
            let nl = -lam;
            equations(t, true, |f, j, k, l, p| {
                f.image(j, k, l, &one, p);
                f.left(j, k, l, &nl, p);
            })
        }
        BracketSkew | ProductSkew => equations(t, false, |f, j, k, l, p| {
            f.left(j, k, l, &one, p);
            f.right(j, k, l, &one, p);
        }),
        BracketSymmetric | ProductSymmetric => equations(t, false, |f, j, k, l, p| {
            f.left(j, k, l, &one, p);
            f.right(j, k, l, &neg, p);
        }),
        KillsDerived | KillsSquare => equations(t, false, |f, j, k, l, p| f.image(j, k, l, &one, p)),
        IntoCenter | IntoAnnihilator => equations(t, true, |f, j, k, l, p| f.left(j, k, l, &one, p)),
        SelfCommuting => equations(t, false, |f, j, k, l, p| {
            f.left(j, k, l, &one, p);
            f.left(k, j, l, &one, p);
        }),
    }
}

/// Evaluates `cond` for the map `d` directly on every basis pair; returns the
/// first failing pair.
pub fn check_map_condition(t: &ProductTable, cond: &MapCondition, d: &Matrix) -> Result<(), (usize, usize)> {
    use MapCondition::*;
    let n = t.dim();
    let e = SparseVec::unit;
    let img: Vec<SparseVec> = (0..n).map(|j| apply_map(d, &e(j))).collect();
    let one = Scalar::one();
    for j in 0..n {
        for k in 0..n {
            let dl = t.mul(&img[j], &e(k));
            let dr = t.mul(&e(j), &img[k]);
            let ok = match cond {
                Any => true,
                DerivationLike(lam) => apply_map(d, t.product(j, k)) == dl.axpy(&one, &dr).scale(lam),
                LeftMultiplier(lam) => apply_map(d, t.product(j, k)) == dl.scale(lam),
                BracketSkew | ProductSkew => dl.axpy(&one, &dr).is_zero(),
                BracketSymmetric | ProductSymmetric => dl == dr,
                KillsDerived | KillsSquare => apply_map(d, t.product(j, k)).is_zero(),
                IntoCenter | IntoAnnihilator => dl.is_zero(),
                SelfCommuting => dl.axpy(&one, &t.mul(&img[k], &e(j))).is_zero(),
            };
            if !ok {
                return Err((j, k));
            }
        }
    }
    Ok(())
}

fn solve(n: usize, rows: &[SparseVec]) -> Subspace {
    let mut e = Echelon::new(n * n);
    e.extend(rows);
    Subspace::from_vectors(n * n, &e.null_space_vectors())
}

/// Maps satisfying every condition in `conds`. Each basis map is re-checked
/// by direct evaluation.
pub fn map_condition_space<'a>(op: impl Into<Operand<'a>>, conds: &[MapCondition]) -> Result<MapSpace, DerivationsError> {
    let op = op.into();
    for c in conds {
        if c.kind().is_some_and(|k| k != op.kind) {
            return Err(DerivationsError::KindMismatch { cond: c.to_string(), kind: op.kind });
        }
    }
    let n = op.table.dim();
    let rows: Vec<SparseVec> = conds.iter().flat_map(|c| condition_rows(op.table, c)).collect();
    let ms = MapSpace { kind: op.kind, dim: n, conds: conds.to_vec(), space: solve(n, &rows) };
    for d in ms.maps() {
        for c in conds {
            assert!(check_map_condition(op.table, c, &d).is_ok(), "solved map fails `{c}`");
        }
    }
    Ok(ms)
}

pub fn derivation_space(lie: &LieAlgebra) -> MapSpace {
    map_condition_space(lie, &[MapCondition::derivation()]).expect("applies to Lie algebras")
}

/// `D([x,y]) = -[D(x),y] - [x,D(y)]`.
pub fn antiderivations(lie: &LieAlgebra) -> MapSpace {
    map_condition_space(lie, &[MapCondition::antiderivation()]).expect("applies to Lie algebras")
}

/// Span of `ad x_i`.
pub fn inner_derivations(lie: &LieAlgebra) -> MapSpace {
    let n = lie.dim();
    let ads: Vec<SparseVec> = (0..n).map(|i| map_to_coords(&lie.ad(i))).collect();
    MapSpace {
        kind: AlgebraKind::Lie,
        dim: n,
        conds: vec![MapCondition::derivation()],
        space: Subspace::from_vectors(n * n, &ads),
    }
}

/// The two one-parameter families of conditions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PencilFamily {
    DerivationLike,
    LeftMultiplier,
}

impl PencilFamily {
    pub fn at(self, lambda: Scalar) -> MapCondition {
        match self {
            PencilFamily::DerivationLike => MapCondition::DerivationLike(lambda),
            PencilFamily::LeftMultiplier => MapCondition::LeftMultiplier(lambda),
        }
    }

    /// `(M₁, M₂)` with the family at `λ` cut out by `M₁ d = λ M₂ d`.
    fn pencil_rows(self, t: &ProductTable) -> Vec<(SparseVec, SparseVec)> {
        let fx = Functionals::new(t);
        let n = t.dim();
        let one = Scalar::one();
        let mut out = Vec::new();
        for j in 0..n {
            let k0 = if self == PencilFamily::LeftMultiplier { 0 } else { j };
            for k in k0..n {
                for l in 0..n {
                    let (mut a, mut b) = (Vec::new(), Vec::new());
                    fx.image(j, k, l, &one, &mut a);
                    fx.left(j, k, l, &one, &mut b);
                    if self == PencilFamily::DerivationLike {
                        fx.right(j, k, l, &one, &mut b);
                    }
                    let (a, b) = (SparseVec::from_pairs(a), SparseVec::from_pairs(b));
                    if !a.is_zero() || !b.is_zero() {
                        out.push((a, b));
                    }
                }
            }
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LambdaSolution {
    pub lambda: Scalar,
    pub space: Subspace,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PencilCandidates {
    /// Every `λ` at which the solution space exceeds the common kernel
    /// `ker M₁ ∩ ker M₂`. `unresolved_degree` counts determinant roots that
    /// are not rational.
    Regular { common_kernel: usize, lambdas: Vec<LambdaSolution>, unresolved_degree: usize },
    /// The solution space exceeds the common kernel for every `λ`.
    Degenerate { common_kernel: usize },
}

impl PencilCandidates {
    pub fn lambdas(&self) -> &[LambdaSolution] {
        match self {
            PencilCandidates::Regular { lambdas, .. } => lambdas,
            PencilCandidates::Degenerate { .. } => &[],
        }
    }

    pub fn is_degenerate(&self) -> bool {
        matches!(self, PencilCandidates::Degenerate { .. })
    }
}

fn lcm_denominators<'a>(vals: impl Iterator<Item = &'a Scalar>) -> BigInt {
    vals.fold(BigInt::from(1), |acc, v| acc.lcm(&v.denom()))
}

fn to_int(v: &Scalar, scale: &BigInt) -> BigInt {
    v.numer() * (scale / v.denom())
}

const PROJECTIONS: usize = 3;
const MAX_DRAWS: usize = 4;

/// `det(R(A₁ - λA₂))` modulo `p` for `λ = 0..=r`, interpolated.
fn projected_pencil_mod(proj: &[Vec<i64>], a1: &[Vec<u64>], a2: &[Vec<u64>], p: u64) -> Vec<u64> {
    let r = proj.len();
    let project = |m: &[Vec<u64>]| -> Vec<Vec<u64>> {
        proj.iter()
            .map(|w| {
                let mut out = vec![0u64; r];
                for (e, &c) in w.iter().enumerate() {
                    if c == 0 {
                        continue;
                    }
                    let c = modular::reduce_i64(c, p);
                    for (q, &x) in m[e].iter().enumerate() {
                        if x != 0 {
                            out[q] = modular::add_mod(out[q], modular::mul_mod(c, x, p), p);
                        }
                    }
                }
                out
            })
            .collect()
    };
    let (p1, p2) = (project(a1), project(a2));
    let ys: Vec<u64> = (0..=r as u64)
        .map(|x| {
            let m = p1
                .iter()
                .zip(&p2)
                .map(|(u, v)| u.iter().zip(v).map(|(&s, &t)| modular::sub_mod(s, modular::mul_mod(t, x, p), p)).collect())
                .collect();
            modular::det_mod(m, p)
        })
        .collect();
    modular::interpolate_mod(&ys, p)
}

/// Rational monic polynomial from residues of its coefficients.
fn reconstruct(residues: &[BigInt], modulus: &BigInt) -> Option<Vec<Scalar>> {
    residues.iter().map(|a| modular::rational_reconstruct(a, modulus)).collect()
}

/// Rational `λ` at which `{d : M₁ d = λ M₂ d}` grows beyond the common kernel.
///
/// The pencil is restricted to a complement of the common kernel and
/// compressed to square systems by three seeded random integer projections.
/// The gcd of their determinant polynomials is computed modulo word-sized
/// primes and lifted to ℚ; its rational roots, together with `λ = 1` and
/// `λ = 1/2`, are kept when an exact solve confirms the larger kernel.
pub fn lambda_candidates<'a>(
    op: impl Into<Operand<'a>>,
    family: PencilFamily,
    seed: u64,
) -> Result<PencilCandidates, DerivationsError> {
    let op = op.into();
    let t = op.table;
    let n = t.dim();
    let pairs = family.pencil_rows(t);
    let mut stacked = Echelon::new(n * n);
    for (a, b) in &pairs {
        stacked.insert(a);
        stacked.insert(b);
    }
    let common_kernel = n * n - stacked.rank();
    let pivots: Vec<usize> = stacked.pivots().collect();
    let r = pivots.len();
    if r == 0 {
        return Ok(PencilCandidates::Degenerate { common_kernel });
    }
    let col_of = |c: usize| pivots.binary_search(&c).ok();
    // integer rows of (M₁, M₂) restricted to the pivot columns
    let mut m1: Vec<Vec<BigInt>> = Vec::new();
    let mut m2: Vec<Vec<BigInt>> = Vec::new();
    for (a, b) in &pairs {
        let scale = lcm_denominators(a.iter().chain(b.iter()).map(|(_, v)| v));
        let mut ra = vec![BigInt::from(0); r];
        let mut rb = vec![BigInt::from(0); r];
        for (c, v) in a.iter() {
            if let Some(q) = col_of(*c) {
                ra[q] = to_int(v, &scale);
            }
        }
        for (c, v) in b.iter() {
            if let Some(q) = col_of(*c) {
                rb[q] = to_int(v, &scale);
            }
        }
        m1.push(ra);
        m2.push(rb);
    }
    let rows = m1.len();
    let solve_at = |lam: &Scalar| {
        let eqs: Vec<SparseVec> = pairs.iter().map(|(a, b)| a.axpy(&-lam, b)).collect();
        solve(n, &eqs)
    };
    let reduce_rows = |m: &[Vec<BigInt>], p: u64| -> Vec<Vec<u64>> {
        m.iter().map(|row| row.iter().map(|x| modular::reduce(x, p)).collect()).collect()
    };

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut gcd_poly = None;
    'draws: for _ in 0..MAX_DRAWS {
        let projs: Vec<Vec<Vec<i64>>> = (0..PROJECTIONS)
            .map(|_| (0..r).map(|_| (0..rows).map(|_| rng.gen_range(-9..=9)).collect()).collect())
            .collect();
        let mut residues: Vec<BigInt> = Vec::new();
        let mut modulus = BigInt::from(1);
        let mut degree = usize::MAX;
        let mut previous: Option<Vec<Scalar>> = None;
        let mut all_zero = 0;
        for (step, &p) in modular::PRIMES.iter().enumerate() {
            let (a1, a2) = (reduce_rows(&m1, p), reduce_rows(&m2, p));
            let g = projs
                .iter()
                .map(|proj| projected_pencil_mod(proj, &a1, &a2, p))
                .fold(Vec::new(), |acc, q| modular::poly_gcd_mod(&acc, &q, p));
            if g.is_empty() {
                all_zero += 1;
                if all_zero == PROJECTIONS && step + 1 == PROJECTIONS {
                    if solve_at(&Scalar::new(7919, 3)).dim() > common_kernel {
                        return Ok(PencilCandidates::Degenerate { common_kernel });
                    }
                    continue 'draws;
                }
                continue;
            }
            let d = g.len() - 1;
            if d > degree {
                continue;
            }
            if d < degree {
                degree = d;
                residues = vec![BigInt::from(0); d + 1];
                modulus = BigInt::from(1);
                previous = None;
            }
            residues = residues.iter().zip(&g).map(|(a, &x)| modular::crt(a, &modulus, x, p)).collect();
            modulus *= p;
            let current = reconstruct(&residues, &modulus);
            if current.is_some() && current == previous {
                gcd_poly = current;
                break 'draws;
            }
            previous = current;
        }
    }
    let g = Poly::new(gcd_poly.ok_or(DerivationsError::ProjectionFailure)?);
    let (roots, unresolved_degree) = match g.rational_roots() {
        Some(x) => x,
        None => (Vec::new(), g.square_free().degree().unwrap_or(0)),
    };
    let mut cands = roots;
    for forced in [Scalar::one(), Scalar::new(1, 2)] {
        if !cands.contains(&forced) {
            cands.push(forced);
        }
    }
    cands.sort();
    let mut lambdas = Vec::new();
    for lam in cands {
        let space = solve_at(&lam);
        if space.dim() > common_kernel {
            lambdas.push(LambdaSolution { lambda: lam, space });
        }
    }
    Ok(PencilCandidates::Regular { common_kernel, lambdas, unresolved_degree })
}


/// Spans of the ten decomposable types and the inner derivations.
#[derive(Clone, Debug)]
pub struct DerTypeSpans {
    pub types: IndexMap<&'static str, Subspace>,
    pub lambdas: IndexMap<&'static str, Vec<Scalar>>,
    /// Set when neither side of a pencil type could be enumerated.
    pub unresolved: Vec<&'static str>,
    pub inner: Subspace,
    pub total: Subspace,
}

type SideConds = (&'static [MapCondition], &'static [MapCondition]);

const FIXED_TYPES: [(&str, SideConds); 8] = {
    use MapCondition::*;
    [
        ("iii", (&[BracketSkew], &[KillsSquare, ProductSymmetric])),
        ("iv", (&[KillsDerived, BracketSkew], &[ProductSymmetric])),
        ("v", (&[KillsDerived, SelfCommuting], &[ProductSkew])),
        ("vi", (&[SelfCommuting], &[KillsSquare, ProductSkew])),
        ("vii", (&[KillsDerived, IntoCenter], &[])),
        ("viii", (&[KillsDerived], &[IntoAnnihilator])),
        ("ix", (&[IntoCenter], &[KillsSquare])),
        ("x", (&[], &[KillsSquare, IntoAnnihilator])),
    ]
};

fn checked_form(form: &BilinearForm, ok: bool, what: &str) -> Result<(), DerivationsError> {
    if form.is_symmetric() && ok && form.is_nondegenerate() {
        Ok(())
    } else {
        Err(DerivationsError::DegenerateForm(what.to_string()))
    }
}

fn products(e: &mut Echelon, ls: &Subspace, asp: &Subspace, dl: usize, da: usize) {
    for d in ls.basis_vectors() {
        for b in asp.basis_vectors() {
            e.insert(&kron_coords(d, dl, b, da));
        }
    }
}

/// Pairs each `λ`-solution on one side with the `1/λ`-solution on the other.
#[allow(clippy::too_many_arguments)]
fn pencil_type(
    lie: &LieAlgebra,
    assoc: &AssocAlgebra,
    fam_l: PencilFamily,
    fam_a: PencilFamily,
    seed: u64,
    e: &mut Echelon,
) -> Result<(Vec<Scalar>, bool), DerivationsError> {
    let (dl, da) = (lie.dim(), assoc.dim());
    let lc = lambda_candidates(lie, fam_l, seed)?;
    if !lc.is_degenerate() {
        let mut used = Vec::new();
        for s in lc.lambdas() {
            if s.lambda.is_zero() {
                continue;
            }
            let a = map_condition_space(assoc, &[fam_a.at(s.lambda.recip())])?;
            products(e, &s.space, &a.space, dl, da);
            used.push(s.lambda.clone());
        }
        return Ok((used, false));
    }
    let ac = lambda_candidates(assoc, fam_a, seed)?;
    if ac.is_degenerate() {
        return Ok((Vec::new(), true));
    }
    let mut used = Vec::new();
    for s in ac.lambdas() {
        if s.lambda.is_zero() {
            continue;
        }
        let lam = s.lambda.recip();
        let l = map_condition_space(lie, &[fam_l.at(lam.clone())])?;
        products(e, &l.space, &s.space, dl, da);
        used.push(lam);
    }
    Ok((used, false))
}

/// Span inside `End(L⊗A)` of the decomposable maps `d ⊗ β` of the ten types,
/// plus the inner derivations.
pub fn theorem_der_span(
    lie: &LieAlgebra,
    assoc: &AssocAlgebra,
    form_l: &BilinearForm,
    form_a: &BilinearForm,
    seed: u64,
) -> Result<DerTypeSpans, DerivationsError> {
    checked_form(form_l, form_l.is_invariant_lie(lie), "form on L")?;
    checked_form(form_a, form_a.is_invariant_assoc(assoc), "form on A")?;
    if lie.is_abelian() {
        return Err(DerivationsError::AbelianLie);
    }
    let (dl, da) = (lie.dim(), assoc.dim());
    let nn = (dl * da) * (dl * da);
    let mut types = IndexMap::new();
    let mut lambdas = IndexMap::new();
    let mut unresolved = Vec::new();
    let mut total = Echelon::new(nn);
    for (name, fam_l, fam_a) in [
        ("i", PencilFamily::DerivationLike, PencilFamily::LeftMultiplier),
        ("ii", PencilFamily::LeftMultiplier, PencilFamily::DerivationLike),
    ] {
        let mut e = Echelon::new(nn);
        let (used, open) = pencil_type(lie, assoc, fam_l, fam_a, seed, &mut e)?;
        if open {
            unresolved.push(name);
        }
        lambdas.insert(name, used);
        total.extend(e.rows());
        types.insert(name, Subspace::from_echelon(e));
    }
    for (name, (cl, ca)) in FIXED_TYPES {
        let l = map_condition_space(lie, cl)?;
        let a = map_condition_space(assoc, ca)?;
        let mut e = Echelon::new(nn);
        products(&mut e, &l.space, &a.space, dl, da);
        total.extend(e.rows());
        types.insert(name, Subspace::from_echelon(e));
    }
    let current = CurrentAlgebra::new(lie, assoc);
    let inner = inner_derivations(current.algebra()).space;
    total.extend(inner.basis_vectors());
    Ok(DerTypeSpans { types, lambdas, unresolved, inner, total: Subspace::from_echelon(total) })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DerReport {
    pub theorem: &'static str,
    #[serde(rename = "L")]
    pub lie: String,
    #[serde(rename = "A")]
    pub assoc: String,
    pub types: IndexMap<&'static str, usize>,
    pub inner: usize,
    pub lambda: IndexMap<&'static str, Vec<Scalar>>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub unresolved: Vec<&'static str>,
    pub der_dim: usize,
    pub span_dim: usize,
    pub span_in_der: bool,
    pub equal: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<(usize, Scalar)>>,
}

/// Compares `Der(L⊗A)` with the ten-type span, using the Killing form of `L`
/// and the residue form of `A`.
pub fn verify_der_decomposition(lie: &LieAlgebra, assoc: &AssocAlgebra, seed: u64) -> Result<DerReport, DerivationsError> {
    let kl = lie.killing_form();
    if !kl.is_nondegenerate() {
        return Err(DerivationsError::NoInvariantForm(format!("Killing form of {} is degenerate", lie.name())));
    }
    let ra = assoc.residue_form().map_err(|e| DerivationsError::NoInvariantForm(e.to_string()))?;
    let spans = theorem_der_span(lie, assoc, &kl, &ra, seed)?;
    let current = CurrentAlgebra::new(lie, assoc);
    let der = derivation_space(current.algebra()).space;
    let span_in_der = der.contains(&spans.total).unwrap();
    let der_in_span = spans.total.contains(&der).unwrap();
    let witness = if !der_in_span {
        spans.total.first_outside(&der).unwrap()
    } else if !span_in_der {
        der.first_outside(&spans.total).unwrap()
    } else {
        None
    }
    .map(|v| v.entries().to_vec());
    Ok(DerReport {
        theorem: "der",
        lie: lie.name(),
        assoc: assoc.name(),
        types: spans.types.iter().map(|(k, s)| (*k, s.dim())).collect(),
        inner: spans.inner.dim(),
        lambda: spans.lambdas,
        unresolved: spans.unresolved,
        der_dim: der.dim(),
        span_dim: spans.total.dim(),
        span_in_der,
        equal: span_in_der && der_in_span,
        witness,
    })
}

/// `D` with `⟨D(x), y⟩ = φ(x, y)` for a nondegenerate Gram matrix `G`:
/// `D = G⁻¹ φᵀ`.
pub fn form_to_map(phi: &Matrix, gram: &Matrix) -> Matrix {
    gram.inverse().expect("nondegenerate form").mul(&phi.transpose())
}

/// The product of the Killing form of `L` and the residue form of `A`.
pub fn product_form(lie: &LieAlgebra, assoc: &AssocAlgebra) -> Result<BilinearForm, DerivationsError> {
    let kl = lie.killing_form();
    let ra = assoc.residue_form().map_err(|e| DerivationsError::NoInvariantForm(e.to_string()))?;
    let (dl, da) = (lie.dim(), assoc.dim());
    let v = kron_coords(&kl.coords(), dl, &ra.coords(), da);
    Ok(BilinearForm::from_coords(dl * da, &v))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub struct SequenceDims {
    pub h2: usize,
    pub h1: usize,
    pub b: usize,
    pub h3: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SequenceChecks {
    pub u_into_cocycles: bool,
    pub v_into_forms: bool,
    pub w_into_cocycles: bool,
    pub v_kills_coboundaries: bool,
    pub vu_zero: bool,
    pub wv_zero: bool,
    pub u_injective: bool,
    pub exact_at_h1: bool,
    pub exact_at_b: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SequenceReport {
    #[serde(rename = "L")]
    pub lie: String,
    pub module: ModuleKind,
    pub dims: SequenceDims,
    pub im_u: usize,
    pub ker_v: usize,
    pub im_v: usize,
    pub ker_w: usize,
    pub w_injective: bool,
    pub checks: SequenceChecks,
    pub exact: bool,
}

/// The maps `u`, `v`, `w` on representatives and the exactness of the
/// induced sequence. Without a form the middle term is `H¹(L, L*)`; with a
/// nondegenerate symmetric invariant form it is `H¹(L, L)` via `L ≅ L*`.
pub fn sequence_maps(lie: &LieAlgebra, form: Option<&BilinearForm>) -> Result<SequenceReport, DerivationsError> {
    let n = lie.dim();
    let (module, pairing) = match form {
        None => (LieModule::build(ModuleKind::Coadjoint, lie), Matrix::identity(n)),
        Some(f) => {
            checked_form(f, f.is_invariant_lie(lie), "supplied form")?;
            (LieModule::build(ModuleKind::Adjoint, lie), f.matrix().clone())
        }
    };
    let e_inv = pairing.inverse().expect("pairing is nondegenerate");
    let triv = LieModule::trivial(lie, 1);
    let c2 = CochainBasis::full(n, 2, 1);
    let c3 = CochainBasis::full(n, 3, 1);
    let h2 = cohomology(lie, &triv, 2);
    let h3 = cohomology(lie, &triv, 3);
    let h1 = cohomology(lie, &module, 1);
    let b_forms = invariant_symmetric_forms(lie).space;

    // u: Z²(L,K) → C¹(L,M), D_{i,·} = φ_{i,·} E⁻¹
    let u = |v: &SparseVec| {
        let phi = two_cochain_to_form(&c2, v, n);
        let mut pairs = Vec::new();
        for (c, x) in phi.iter() {
            let (i, l) = (c / n, c % n);
            for m in 0..n {
                let y = &e_inv[(l, m)];
                if !y.is_zero() {
                    pairs.push((i * n + m, x * y));
                }
            }
        }
        SparseVec::from_pairs(pairs)
    };
    // v: C¹(L,M) → forms, v(D)[i][l] = (D_i E)_l + (D_l E)_i
    let v = |d: &SparseVec| {
        let mut pairs = Vec::new();
        for (c, x) in d.iter() {
            let (i, m) = (c / n, c % n);
            for l in 0..n {
                let y = &pairing[(m, l)];
                if !y.is_zero() {
                    pairs.push((i * n + l, x * y));
                    pairs.push((l * n + i, x * y));
                }
            }
        }
        SparseVec::from_pairs(pairs)
    };
    // w: forms → C³(L,K), ω(x_i,x_j,x_k) = φ([x_i,x_j], x_k)
    let w = |phi: &SparseVec| {
        let mut pairs = Vec::new();
        for (ti, t) in c3.tuples().iter().enumerate() {
            let mut acc = Scalar::zero();
            for (m, c) in lie.bracket(t[0], t[1]).iter() {
                acc.add_mul(c, &phi.get(m * n + t[2]));
            }
            if !acc.is_zero() {
                pairs.push((ti, acc));
            }
        }
        SparseVec::from_pairs(pairs)
    };

    let nn = n * n;
    let u_z2 = h2.z_space.image_under(nn, u);
    let u_b2 = h2.b_space.image_under(nn, u);
    let v_z1 = h1.z_space.image_under(nn, v);
    let v_b1 = h1.b_space.image_under(nn, v);
    let w_b = b_forms.image_under(c3.dim(), w);
    let w_v_z1 = v_z1.image_under(c3.dim(), w);
    let v_u_z2 = u_z2.image_under(nn, v);
    let ker_v_z1 = h1.z_space.preimage_within(&Subspace::zero(nn), v);
    let ker_w_b = b_forms.preimage_within(&h3.b_space, w);

    let im_u_plus_b1 = u_z2.sum(&h1.b_space).unwrap();
    let ker_v_plus_b1 = ker_v_z1.sum(&h1.b_space).unwrap();
    let checks = SequenceChecks {
        u_into_cocycles: h1.z_space.contains(&u_z2).unwrap(),
        v_into_forms: b_forms.contains(&v_z1).unwrap(),
        w_into_cocycles: h3.z_space.contains(&w_b).unwrap(),
        v_kills_coboundaries: v_b1.is_zero(),
        vu_zero: v_u_z2.is_zero(),
        wv_zero: h3.b_space.contains(&w_v_z1).unwrap(),
        u_injective: u_z2.intersect(&h1.b_space).unwrap() == u_b2,
        exact_at_h1: ker_v_plus_b1 == im_u_plus_b1,
        exact_at_b: v_z1 == ker_w_b,
    };
    let exact = [
        checks.u_into_cocycles,
        checks.v_into_forms,
        checks.w_into_cocycles,
        checks.v_kills_coboundaries,
        checks.vu_zero,
        checks.wv_zero,
        checks.u_injective,
        checks.exact_at_h1,
        checks.exact_at_b,
    ]
    .iter()
    .all(|&b| b);
    Ok(SequenceReport {
        lie: lie.name(),
        module: module.kind().expect("catalog module"),
        dims: SequenceDims { h2: h2.h_dim, h1: h1.h_dim, b: b_forms.dim(), h3: h3.h_dim },
        im_u: im_u_plus_b1.dim() - h1.b_space.dim(),
        ker_v: ker_v_plus_b1.dim() - h1.b_space.dim(),
        im_v: v_z1.dim(),
        ker_w: ker_w_b.dim(),
        w_injective: ker_w_b.is_zero(),
        checks,
        exact,
    })
}

/// `D = id ⊗ t d/dt + ad(h ⊗ t)` on `sl(2) ⊗ tK[t]/(t^N)`:
///
/// ```text
/// e- ⊗ tⁿ ↦ e- ⊗ (n tⁿ - tⁿ⁺¹),  e+ ⊗ tⁿ ↦ e+ ⊗ (n tⁿ + tⁿ⁺¹),  h ⊗ tⁿ ↦ h ⊗ n tⁿ
/// ```
#[derive(Clone, Debug)]
pub struct LoopDerivation {
    pub current: CurrentAlgebra,
    pub map: Matrix,
}

pub fn sl2_loop_derivation(order: usize) -> Result<LoopDerivation, DerivationsError> {
    if order < 3 {
        return Err(DerivationsError::LoopDegree(order));
    }
    let lie = LieAlgebra::sl(2).expect("sl2");
    let assoc = AssocAlgebra::truncated_poly(order, false).expect("order >= 2");
    let current = CurrentAlgebra::new(&lie, &assoc);
    let da = assoc.dim();
    let mut map = Matrix::zeros(current.dim(), current.dim());
    for i in 0..3 {
        let shift = match i {
            0 => -Scalar::one(),
            1 => Scalar::zero(),
            _ => Scalar::one(),
        };
        for p in 0..da {
            let deg = (p + 1) as i64;
            let col = current.index(i, p);
            map[(col, col)] = Scalar::from_int(deg);
            if p + 1 < da {
                map[(current.index(i, p + 1), col)] = shift.clone();
            }
        }
    }
    Ok(LoopDerivation { current, map })
}

impl LoopDerivation {
    /// Checks `D[u,v] = [Du,v] + [u,Dv]` on basis pairs with total degree below
    /// the truncation order. Returns the first failing pair.
    pub fn check_window(&self) -> Result<(), (usize, usize)> {
        let c = &self.current;
        let alg = c.algebra();
        let order = c.assoc().dim() + 1;
        let n = c.dim();
        let deg = |f: usize| c.split_index(f).1 + 1;
        for f in 0..n {
            for g in 0..n {
                if deg(f) + deg(g) >= order {
                    continue;
                }
                let (u, v) = (SparseVec::unit(f), SparseVec::unit(g));
                let lhs = apply_map(&self.map, alg.bracket(f, g));
                let rhs = alg
                    .bracket_vectors(&apply_map(&self.map, &u), &v)
                    .axpy(&Scalar::one(), &alg.bracket_vectors(&u, &apply_map(&self.map, &v)));
                if lhs != rhs {
                    return Err((f, g));
                }
            }
        }
        Ok(())
    }

    /// Coefficient tensor flattened to rows `(i', i)` of `End(sl2)` and
    /// columns `(p', p)` of `End(A)`.
    pub fn flattening(&self) -> Matrix {
        let c = &self.current;
        let (dl, da) = (c.lie().dim(), c.assoc().dim());
        Matrix::from_fn(dl * dl, da * da, |r, s| {
            let (i2, i) = (r / dl, r % dl);
            let (p2, p) = (s / da, s % da);
            self.map[(c.index(i2, p2), c.index(i, p))].clone()
        })
    }

    /// A nonzero 2×2 minor of the flattening: rows, columns and its value.
    /// Its existence shows the map is not a single `d ⊗ β`.
    pub fn rank_certificate(&self) -> Option<([usize; 2], [usize; 2], Scalar)> {
        let m = self.flattening();
        let rows: Vec<usize> = (0..m.nrows()).filter(|&r| m.row(r).iter().any(|x| !x.is_zero())).collect();
        for (a, &r1) in rows.iter().enumerate() {
            for &r2 in &rows[a + 1..] {
                for c1 in 0..m.ncols() {
                    for c2 in c1 + 1..m.ncols() {
                        let det = &(&m[(r1, c1)] * &m[(r2, c2)]) - &(&m[(r1, c2)] * &m[(r2, c1)]);
                        if !det.is_zero() {
                            return Some(([r1, r2], [c1, c2], det));
                        }
                    }
                }
            }
        }
        None
    }
}

/// Self-adjoint and skew-adjoint antiderivations for a nondegenerate form `G`:
/// `⟨D(x),y⟩ = φ(x,y)` identifies the former with symmetric sum-zero forms and
/// the latter with skew forms vanishing on `[L,L] × L`.
pub fn transported_antiderivations(lie: &LieAlgebra, gram: &BilinearForm) -> (Subspace, Subspace) {
    let n = lie.dim();
    let sym = condition_space(lie, FormCondition::JacobiSumZero, SymmetryFilter::Symmetric).unwrap();
    let skew = condition_space(lie, FormCondition::Radical, SymmetryFilter::Skew).unwrap();
    let carry = |fs: &crate::forms::FormSpace| {
        let maps: Vec<SparseVec> = fs.forms().map(|f| map_to_coords(&form_to_map(f.matrix(), gram.matrix()))).collect();
        Subspace::from_vectors(n * n, &maps)
    };
    (carry(&sym), carry(&skew))
}
