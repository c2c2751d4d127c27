//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Criteria 1 and 2 fail on Heisenberg rows; the run succeeds only if the
//! failing rows are exactly the recorded ones and each carries a witness
//! that checks out by direct evaluation.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use current_lie::algebras::{
    AlgebraError, AssocAlgebra, AssocDescriptor, BilinearForm, CurrentAlgebra, LieAlgebra, LieDescriptor, ProductTable,
};
use current_lie::derivations::{antiderivations, derivation_space, inner_derivations, sequence_maps, sl2_loop_derivation, verify_der_decomposition};
use current_lie::exactlin::{Scalar, SparseVec};
use current_lie::forms::{condition_space, verify_forms_decomposition, verify_h2_decomposition, DecompositionReport, FormCondition, SymmetryFilter};
use current_lie::graded::{
    degree_three_symmetric_forms, graded_form_space, graded_h2_at, larsson_report, sl2_form_defect,
};

struct Outcome {
    pass: bool,
    detail: String,
}

fn sl(n: usize) -> LieAlgebra {
    LieAlgebra::sl(n).unwrap()
}

fn tpoly(n: usize) -> AssocAlgebra {
    AssocAlgebra::truncated_poly(n, false).unwrap()
}

fn grid() -> (Vec<LieAlgebra>, Vec<AssocAlgebra>) {
    (
        vec![sl(2), sl(3), LieAlgebra::heisenberg3(), LieAlgebra::abelian(4)],
        vec![tpoly(2), tpoly(3), tpoly(4), AssocAlgebra::truncated_poly(3, true).unwrap(), AssocAlgebra::zero_mult(2)],
    )
}

/// `Φ` is a skew 2-cocycle of `alg`, checked on every basis triple.
fn is_two_cocycle(alg: &LieAlgebra, phi: &BilinearForm) -> bool {
    let n = alg.dim();
    if !phi.is_skew() {
        return false;
    }
    let e = SparseVec::unit;
    (0..n).all(|i| {
        (0..n).all(|j| {
            (0..n).all(|k| {
                let s = phi.eval(alg.bracket(i, j), &e(k)) + phi.eval(alg.bracket(j, k), &e(i)) + phi.eval(alg.bracket(k, i), &e(j));
                s.is_zero()
            })
        })
    })
}

fn witness_checks(theorem: &str, lie: &LieAlgebra, assoc: &AssocAlgebra, r: &DecompositionReport) -> bool {
    let Some(w) = &r.witness else {
        return false;
    };
    let c = CurrentAlgebra::new(lie, assoc);
    let phi = BilinearForm::from_coords(c.dim(), &SparseVec::from_pairs(w.vector.clone()));
    match theorem {
        "h2" => is_two_cocycle(c.algebra(), &phi),
        _ => phi.is_symmetric() && phi.is_invariant_lie(c.algebra()),
    }
}

fn decomposition(theorem: &'static str, known: &[(&str, &str)]) -> Outcome {
    let (ls, as_) = grid();
    let mut failing = Vec::new();
    let mut genuine = true;
    let mut rows = 0;
    for l in &ls {
        for a in &as_ {
            rows += 1;
            let r = if theorem == "h2" { verify_h2_decomposition(l, a) } else { verify_forms_decomposition(l, a) };
            if !r.holds() {
                genuine &= witness_checks(theorem, l, a, &r);
                let target = r.dims.target.values().next().copied().unwrap_or(0);
                failing.push((l.name(), a.name(), target, r.dims.span));
            }
        }
    }
    let names: Vec<(&str, &str)> = failing.iter().map(|(l, a, _, _)| (l.as_str(), a.as_str())).collect();
    let as_recorded = names == known && genuine;
    let detail = if failing.is_empty() {
        format!("{rows}/{rows} pairs equal")
    } else {
        let rows_txt: Vec<String> = failing.iter().map(|(l, a, t, s)| format!("{l}⊗{a}: {t} vs span {s}")).collect();
        format!(
            "{}/{rows} pairs equal; {}; witnesses {}; {}",
            rows - failing.len(),
            rows_txt.join(", "),
            if genuine { "verified" } else { "NOT verified" },
            if as_recorded { "matches recorded counterexamples" } else { "UNRECORDED deviation" },
        )
    };
    Outcome { pass: failing.is_empty(), detail }
}

fn criterion_3() -> Outcome {
    let mut bad = Vec::new();
    let mut largest = 0;
    for l in [sl(2), sl(3)] {
        for n in 2..=4 {
            let r = verify_der_decomposition(&l, &tpoly(n), 0).unwrap();
            largest = largest.max((l.dim() * (n - 1)).pow(2));
            if !(r.equal && r.span_in_der) {
                bad.push(format!("{}⊗tpoly:{n}", l.name()));
            }
        }
    }
    Outcome { pass: bad.is_empty(), detail: format!("6 pairs, failing {bad:?}, largest system {largest} unknowns") }
}

fn criterion_4() -> Outcome {
    let sum = LieAlgebra::direct_sum(&[sl(2), sl(3)]);
    let cases: [(&LieAlgebra, u32, &[usize]); 3] =
        [(&sl(2), 6, &[0, 5, 0, 0, 0]), (&sl(3), 6, &[20, 0, 0, 0, 0]), (&sum, 5, &[44, 5, 0, 0])];
    let mut ok = true;
    let mut parts = Vec::new();
    for (g, d, want) in cases {
        let r = larsson_report(g, d).unwrap();
        ok &= r.h_dims() == want && r.verdict;
        parts.push(format!("{} {:?}", r.g, r.h_dims()));
    }
    let forms = degree_three_symmetric_forms(&sl(2));
    let relation = forms.len() == 5 && forms.iter().all(|p| sl2_form_defect(p).is_zero() && *p == p.transpose());
    ok &= relation;
    parts.push(format!("degree-3 ψ basis {} forms, ψ(e-,e+)=ψ(h,h)/2 {}", forms.len(), relation));
    Outcome { pass: ok, detail: parts.join("; ") }
}

fn hc1_dims(offset: usize) -> (Vec<usize>, Vec<usize>) {
    let dims = |cond| {
        (2..=8u32)
            .map(|d| graded_form_space(cond, SymmetryFilter::Skew, d, d as usize + offset).unwrap().dim())
            .collect::<Vec<_>>()
    };
    (dims(FormCondition::JacobiSumZero), dims(FormCondition::Cyclic))
}

fn criterion_5() -> Outcome {
    let (sz, cyc) = hc1_dims(1);
    let pass = sz.iter().all(|&x| x == 0) && cyc == [0, 1, 0, 0, 0, 0, 0];
    Outcome { pass, detail: format!("skew sum-zero d=2..8 {sz:?}; skew cyclic {cyc:?}") }
}

fn criterion_6() -> Outcome {
    let anti = antiderivations(&sl(3)).space_dim();
    let jsz = condition_space(&sl(2), FormCondition::JacobiSumZero, SymmetryFilter::Symmetric).unwrap().space_dim();
    let cyc2 = condition_space(&sl(2), FormCondition::Cyclic, SymmetryFilter::Skew).unwrap().space_dim();
    let cyc3 = condition_space(&sl(3), FormCondition::Cyclic, SymmetryFilter::Skew).unwrap().space_dim();
    Outcome {
        pass: anti == 0 && jsz == 5 && cyc2 == 0 && cyc3 == 0,
        detail: format!("antider(sl3)={anti}, sym sum-zero(sl2)={jsz}, skew cyclic sl2={cyc2} sl3={cyc3}"),
    }
}

fn criterion_7() -> Outcome {
    let c = CurrentAlgebra::new(&sl(2), &tpoly(3));
    let mut ok = true;
    let mut parts = Vec::new();
    for g in [sl(2), sl(3), c.algebra().clone()] {
        let r = sequence_maps(&g, None).unwrap();
        ok &= r.exact && r.checks.vu_zero && r.checks.wv_zero && r.ker_v == r.im_u && r.im_v == r.ker_w;
        parts.push(format!("{} exact={}", r.lie, r.exact));
        if g.name() == "sl2" {
            let d = &r.dims;
            let shape = (d.h2, d.h1, d.b, d.h3) == (0, 0, 1, 1) && r.w_injective;
            ok &= shape;
            parts.push(format!("sl2 dims ({},{},{},{}) w injective {}", d.h2, d.h1, d.b, d.h3, r.w_injective));
        }
    }
    let pf = current_lie::derivations::product_form(&sl(2), &tpoly(3)).unwrap();
    let r = sequence_maps(c.algebra(), Some(&pf)).unwrap();
    let outer = derivation_space(c.algebra()).space_dim() - inner_derivations(c.algebra()).space_dim();
    let split = r.exact && r.dims.h1 == r.im_u + r.im_v && r.dims.h1 == outer;
    ok &= split;
    parts.push(format!("product form: H¹={} = {}+{}, Der/inner={}", r.dims.h1, r.im_u, r.im_v, outer));
    Outcome { pass: ok, detail: parts.join("; ") }
}

fn criterion_8() -> Outcome {
    let d = sl2_loop_derivation(6).unwrap();
    let window = d.check_window();
    let cert = d.rank_certificate();
    Outcome {
        pass: window.is_ok() && cert.is_some(),
        detail: format!(
            "identity on degree<6 window {}, 2×2 minor {}",
            if window.is_ok() { "holds" } else { "fails" },
            cert.map_or("none".to_string(), |(r, c, v)| format!("rows {r:?} cols {c:?} = {v}")),
        ),
    }
}

fn criterion_9() -> Outcome {
    let sum = LieAlgebra::direct_sum(&[sl(2), sl(3)]);
    let mut changed = Vec::new();
    let mut count = 0;
    for (g, max) in [(sl(2), 6u32), (sl(3), 6), (sum, 5)] {
        for d in 2..=max {
            count += 1;
            if graded_h2_at(&g, d, d as usize + 1).unwrap() != graded_h2_at(&g, d, d as usize + 3).unwrap() {
                changed.push(format!("{} d={d}", g.name()));
            }
        }
    }
    let same_forms = hc1_dims(1) == hc1_dims(3);
    count += 14;
    Outcome {
        pass: changed.is_empty() && same_forms,
        detail: format!("{count} graded dimensions rechecked at n=d+3; changed {changed:?}; form dims stable {same_forms}"),
    }
}

fn jacobi_defect(t: &ProductTable, i: usize, j: usize, k: usize) -> bool {
    let e = SparseVec::unit;
    let a = t.mul(t.product(i, j), &e(k));
    let b = t.mul(t.product(j, k), &e(i));
    let c = t.mul(t.product(k, i), &e(j));
    !a.axpy(&Scalar::one(), &b).axpy(&Scalar::one(), &c).is_zero()
}

fn assoc_defect(t: &ProductTable, i: usize, j: usize, k: usize) -> bool {
    let e = SparseVec::unit;
    t.mul(t.product(i, j), &e(k)) != t.mul(&e(i), t.product(j, k))
}

fn any_defect(t: &ProductTable, f: fn(&ProductTable, usize, usize, usize) -> bool) -> bool {
    let n = t.dim();
    (0..n).any(|i| (0..n).any(|j| (0..n).any(|k| f(t, i, j, k))))
}

fn criterion_10() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let lies = [sl(2), sl(3), LieAlgebra::heisenberg3(), LieAlgebra::direct_sum(&[sl(2), LieAlgebra::abelian(1)])];
    let assocs = [tpoly(3), tpoly(4), AssocAlgebra::truncated_poly(3, true).unwrap(), tpoly(5)];
    let (mut rejected, mut trials, mut wrong) = (0, 0, Vec::new());
    while trials < 100 {
        let delta = Scalar::new(rng.gen_range(1..=5) * if rng.gen_bool(0.5) { 1 } else { -1 }, rng.gen_range(1..=3));
        if rng.gen_bool(0.5) {
            let base = &lies[rng.gen_range(0..lies.len())];
            let n = base.dim();
            let (i, j, k) = (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n));
            if i == j {
                continue;
            }
            let mut t = base.table().clone();
            t.set(i, j, t.product(i, j).axpy(&delta, &SparseVec::unit(k)));
            t.set(j, i, t.product(j, i).axpy(&-&delta, &SparseVec::unit(k)));
            if !any_defect(&t, jacobi_defect) {
                continue;
            }
            trials += 1;
            match LieAlgebra::new(LieDescriptor::Custom("perturbed".into()), base.labels().to_vec(), t.clone()) {
                Err(AlgebraError::Jacobi { i, j, k }) if jacobi_defect(&t, i, j, k) => rejected += 1,
                other => wrong.push(format!("{}: {:?}", base.name(), other.err())),
            }
        } else {
            let base = &assocs[rng.gen_range(0..assocs.len())];
            let n = base.dim();
            let (i, j, k) = (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n));
            let mut t = base.table().clone();
            t.set(i, j, t.product(i, j).axpy(&delta, &SparseVec::unit(k)));
            if i != j {
                t.set(j, i, t.product(j, i).axpy(&delta, &SparseVec::unit(k)));
            }
            if !any_defect(&t, assoc_defect) {
                continue;
            }
            trials += 1;
            let labels = base.labels().to_vec();
            match AssocAlgebra::new(AssocDescriptor::Custom("perturbed".into()), labels, t.clone(), false, None) {
                Err(AlgebraError::Associativity { i, j, k }) if assoc_defect(&t, i, j, k) => rejected += 1,
                other => wrong.push(format!("{}: {:?}", base.name(), other.err())),
            }
        }
    }
    Outcome { pass: rejected == 100, detail: format!("{rejected}/100 perturbations rejected with a failing witness triple; wrong {wrong:?}") }
}

fn main() -> ExitCode {
    type Run = Box<dyn Fn() -> Outcome>;
    let known_h2: &[(&str, &str)] = &[("heis3", "tpoly:4")];
    let known_forms: &[(&str, &str)] = &[("heis3", "tpoly:3"), ("heis3", "tpoly:4")];
    let criteria: Vec<(&str, u64, Run, Option<&[(&str, &str)]>)> = vec![
        ("h2 decomposition on the 4×5 grid", 60, Box::new(|| decomposition("h2", known_h2)), Some(known_h2)),
        ("forms decomposition on the 4×5 grid", 60, Box::new(|| decomposition("forms", known_forms)), Some(known_forms)),
        ("der decomposition with Killing and residue forms", 300, Box::new(criterion_3), None),
        ("graded H² of g⊗tK[t]", 120, Box::new(criterion_4), None),
        ("HC¹ vanishing on tK[t]", 10, Box::new(criterion_5), None),
        ("antiderivation and form lemmas", 10, Box::new(criterion_6), None),
        ("exact sequence", 30, Box::new(criterion_7), None),
        ("loop derivation of sl2⊗tK[t]", 5, Box::new(criterion_8), None),
        ("window stability", 120, Box::new(criterion_9), None),
        ("axiom perturbations", 10, Box::new(criterion_10), None),
    ];
    let mut as_expected = true;
    let mut passed = 0;
    for (idx, (title, budget, run, known)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let out = run();
        let elapsed = start.elapsed();
        let in_time = elapsed <= Duration::from_secs(*budget);
        let pass = out.pass && in_time;
        passed += usize::from(pass);
        let expected = match known {
            None => pass,
            Some(_) => !out.pass && in_time && out.detail.contains("matches recorded") && out.detail.contains("verified"),
        };
        as_expected &= expected;
        println!(
            "criterion {:>2} {}: {} ({}; {:.2?} of {}s)",
            idx + 1,
            title,
            if pass { "PASS" } else { "FAIL" },
            out.detail,
            elapsed,
            budget
        );
    }
    println!("{passed}/{} criteria pass", criteria.len());
    if as_expected {
        ExitCode::SUCCESS
    } else {
        println!("acceptance results differ from the recorded state");
        ExitCode::FAILURE
    }
}
