use current_lie::algebras::{AlgebraFile, AssocAlgebra, CurrentAlgebra, LieAlgebra, ParsedAlgebra};
use current_lie::cochain::{cohomology, LieModule, ModuleKind};
use current_lie::derivations::{
    antiderivations, derivation_space, inner_derivations, map_condition_space, product_form, sequence_maps,
    transported_antiderivations, verify_der_decomposition, MapCondition,
};
use current_lie::exactlin::Matrix;
use current_lie::forms::{condition_space, verify_forms_decomposition, verify_h2_decomposition, FormCondition, SymmetryFilter};
use current_lie::graded::{graded_form_dims, larsson_report};
use serde::Serialize;
use serde_json::{json, Value};

use crate::catalog::{resolve, resolve_assoc, resolve_lie, ResolveError};
use crate::{AlgebraVerb, Cli, Command, Factors, FormArg, ModuleArg, Theorem};

pub struct Report {
    pub value: Value,
    pub ok: bool,
}

#[derive(Debug)]
pub struct CliError {
    pub message: String,
    pub witness: Option<(&'static str, Vec<usize>)>,
}

impl CliError {
    fn msg(message: impl Into<String>) -> Self {
        CliError { message: message.into(), witness: None }
    }

    pub fn to_json(&self) -> Value {
        let mut v = json!({ "error": self.message });
        if let Some((axiom, w)) = &self.witness {
            v["axiom"] = json!(axiom);
            v["witness"] = json!(w);
        }
        v
    }
}

impl From<ResolveError> for CliError {
    fn from(e: ResolveError) -> Self {
        CliError { message: e.to_string(), witness: e.algebra_error().and_then(|a| a.witness()) }
    }
}

fn err(e: impl std::fmt::Display) -> CliError {
    CliError::msg(e.to_string())
}

fn to_value(x: &impl Serialize) -> Value {
    serde_json::to_value(x).expect("report serializes")
}

fn matrix_json(m: &Matrix) -> Value {
    Value::Array(
        (0..m.nrows())
            .map(|i| Value::Array((0..m.ncols()).map(|j| Value::String(m[(i, j)].to_string())).collect()))
            .collect(),
    )
}

enum Target {
    Lie(LieAlgebra),
    Assoc(AssocAlgebra),
}

impl Target {
    fn name(&self) -> String {
        match self {
            Target::Lie(l) => l.name(),
            Target::Assoc(a) => a.name(),
        }
    }
}

/// `L`, `A` or the current algebra `L ⊗ A` when both are given.
fn target(f: &Factors) -> Result<Target, CliError> {
    match (&f.lie, &f.assoc) {
        (Some(l), Some(a)) => {
            let c = CurrentAlgebra::new(&resolve_lie(l)?, &resolve_assoc(a)?);
            Ok(Target::Lie(c.algebra().clone()))
        }
        (Some(l), None) => Ok(Target::Lie(resolve_lie(l)?)),
        (None, Some(a)) => Ok(Target::Assoc(resolve_assoc(a)?)),
        (None, None) => Err(CliError::msg("an algebra is required: pass --L and/or --A")),
    }
}

fn lie_target(f: &Factors) -> Result<LieAlgebra, CliError> {
    match target(f)? {
        Target::Lie(l) => Ok(l),
        Target::Assoc(a) => Err(CliError::msg(format!("{} is associative; this command needs a Lie algebra", a.name()))),
    }
}

fn both(f: &Factors) -> Result<(LieAlgebra, AssocAlgebra), CliError> {
    match (&f.lie, &f.assoc) {
        (Some(l), Some(a)) => Ok((resolve_lie(l)?, resolve_assoc(a)?)),
        _ => Err(CliError::msg("both --L and --A are required")),
    }
}

pub fn run(cli: &Cli) -> Result<Report, CliError> {
    match &cli.command {
        Command::Algebra(verb) => algebra(verb),
        Command::Cohomology { factors, module, n } => cohomology_cmd(factors, *module, *n),
        Command::Forms { factors, cond, sym } => forms_cmd(factors, cond, sym),
        Command::Derivations { factors } => derivations_cmd(factors),
        Command::Antiderivations { factors } => antiderivations_cmd(factors),
        Command::Sequence { factors, form } => sequence_cmd(factors, *form),
        Command::Verify { theorem, factors } => verify_cmd(*theorem, factors, cli.seed),
        Command::Larsson { g, max_degree } => {
            let r = larsson_report(&resolve_lie(g)?, *max_degree).map_err(err)?;
            Ok(Report { ok: r.verdict, value: to_value(&r) })
        }
        Command::Hc1 { max_degree } => hc1_cmd(*max_degree),
    }
}

fn algebra(verb: &AlgebraVerb) -> Result<Report, CliError> {
    match verb {
        AlgebraVerb::Show { spec } => {
            let file = match resolve(spec)? {
                ParsedAlgebra::Lie(l) => AlgebraFile::from_lie(&l),
                ParsedAlgebra::Assoc(a) => AlgebraFile::from_assoc(&a),
            };
            Ok(Report { value: to_value(&file), ok: true })
        }
        AlgebraVerb::Validate { spec } => {
            let (kind, name, dim) = match resolve(spec)? {
                ParsedAlgebra::Lie(l) => ("lie", l.name(), l.dim()),
                ParsedAlgebra::Assoc(a) => ("assoc", a.name(), a.dim()),
            };
            Ok(Report { value: json!({ "valid": true, "name": name, "kind": kind, "dim": dim }), ok: true })
        }
    }
}

fn cohomology_cmd(f: &Factors, module: ModuleArg, n: usize) -> Result<Report, CliError> {
    if n == 0 {
        return Err(CliError::msg("--n must be at least 1"));
    }
    let lie = lie_target(f)?;
    let kind = match module {
        ModuleArg::Trivial => ModuleKind::Trivial,
        ModuleArg::Adjoint => ModuleKind::Adjoint,
        ModuleArg::Coadjoint => ModuleKind::Coadjoint,
    };
    let r = cohomology(&lie, &LieModule::build(kind, &lie), n);
    let value = json!({
        "algebra": lie.name(),
        "module": kind,
        "n": n,
        "C": r.cochain_dim,
        "Z": r.z_dim(),
        "B": r.b_dim(),
        "H": r.h_dim,
    });
    Ok(Report { value, ok: true })
}

fn forms_cmd(f: &Factors, cond: &str, sym: &str) -> Result<Report, CliError> {
    let cond: FormCondition = cond.parse().map_err(err)?;
    let sym: SymmetryFilter = sym.parse().map_err(err)?;
    let t = target(f)?;
    let fs = match &t {
        Target::Lie(l) => condition_space(l, cond, sym),
        Target::Assoc(a) => condition_space(a, cond, sym),
    }
    .map_err(err)?;
    let basis: Vec<Value> = fs.forms().map(|b| matrix_json(b.matrix())).collect();
    let value = json!({
        "algebra": t.name(),
        "kind": fs.kind,
        "cond": cond.to_string(),
        "sym": sym,
        "dim": fs.space_dim(),
        "basis": basis,
    });
    Ok(Report { value, ok: true })
}

fn derivations_cmd(f: &Factors) -> Result<Report, CliError> {
    let value = match target(f)? {
        Target::Lie(l) => {
            let der = derivation_space(&l).space_dim();
            let inner = inner_derivations(&l).space_dim();
            json!({ "algebra": l.name(), "dim": l.dim(), "derivations": der, "inner": inner, "outer": der - inner })
        }
        Target::Assoc(a) => {
            let der = map_condition_space(&a, &[MapCondition::derivation()]).map_err(err)?.space_dim();
            json!({ "algebra": a.name(), "dim": a.dim(), "derivations": der })
        }
    };
    Ok(Report { value, ok: true })
}

fn antiderivations_cmd(f: &Factors) -> Result<Report, CliError> {
    let lie = lie_target(f)?;
    let anti = antiderivations(&lie).space;
    let killing = lie.killing_form();
    let mut value = json!({ "algebra": lie.name(), "dim": lie.dim(), "antiderivations": anti.dim() });
    let mut ok = true;
    if killing.is_nondegenerate() {
        let (sym, skew) = transported_antiderivations(&lie, &killing);
        let sum = sym.sum(&skew).expect("same ambient");
        ok = sum == anti;
        value["self_adjoint"] = json!(sym.dim());
        value["skew_adjoint"] = json!(skew.dim());
        value["transport_matches"] = json!(ok);
    }
    Ok(Report { value, ok })
}

fn sequence_cmd(f: &Factors, form: FormArg) -> Result<Report, CliError> {
    let lie = lie_target(f)?;
    let chosen = match form {
        FormArg::None => None,
        FormArg::Killing => Some(lie.killing_form()),
        FormArg::Product => {
            let (l, a) = both(f)?;
            Some(product_form(&l, &a).map_err(err)?)
        }
    };
    let r = sequence_maps(&lie, chosen.as_ref()).map_err(err)?;
    Ok(Report { ok: r.exact, value: to_value(&r) })
}

fn verify_cmd(theorem: Theorem, f: &Factors, seed: u64) -> Result<Report, CliError> {
    let (l, a) = both(f)?;
    match theorem {
        Theorem::H2 => {
            let r = verify_h2_decomposition(&l, &a);
            Ok(Report { ok: r.holds(), value: to_value(&r) })
        }
        Theorem::Forms => {
            let r = verify_forms_decomposition(&l, &a);
            Ok(Report { ok: r.holds(), value: to_value(&r) })
        }
        Theorem::Der => {
            let r = verify_der_decomposition(&l, &a, seed).map_err(err)?;
            Ok(Report { ok: r.equal, value: to_value(&r) })
        }
    }
}

fn hc1_cmd(max_degree: u32) -> Result<Report, CliError> {
    if max_degree < 3 {
        return Err(CliError::msg("--max-degree must be at least 3"));
    }
    let mut degrees = serde_json::Map::new();
    let mut expected = serde_json::Map::new();
    let mut ok = true;
    let mut vanishes = true;
    for d in 2..=max_degree {
        let cyc = graded_form_dims(FormCondition::Cyclic, SymmetryFilter::Skew, d).map_err(err)?;
        let sz = graded_form_dims(FormCondition::JacobiSumZero, SymmetryFilter::Skew, d).map_err(err)?;
        let want_cyc = usize::from(d == 3);
        ok &= cyc == want_cyc && sz == 0;
        vanishes &= sz == 0;
        degrees.insert(d.to_string(), json!({ "cyclic_skew": cyc, "sum_zero_skew": sz }));
        expected.insert(d.to_string(), json!({ "cyclic_skew": want_cyc, "sum_zero_skew": 0 }));
    }
    let value = json!({ "algebra": "tK[t]", "degrees": degrees, "expected": expected, "hc1_vanishes": vanishes, "verdict": ok });
    Ok(Report { value, ok })
}
