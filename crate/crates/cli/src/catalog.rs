//! Algebra shorthand: `sl2`, `slN`, `abelian:N`, `heis3`, `sum:a+b` for Lie
//! algebras; `tpoly:N`, `tpoly1:N`, `zero:N` for associative ones. Anything
//! else is read as a path to a structure-constant file.

use std::fs;
use std::path::Path;

use current_lie::algebras::{parse_algebra_json, AlgebraError, AssocAlgebra, LieAlgebra, ParsedAlgebra};

#[derive(Debug)]
pub enum ResolveError {
    Unknown(String),
    Algebra { source: String, error: AlgebraError },
    Io { path: String, error: std::io::Error },
    Kind { source: String, expected: &'static str },
}

impl std::fmt::Display for ResolveError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ResolveError::Unknown(s) => write!(f, "`{s}` is neither a catalog algebra nor an existing file"),
            ResolveError::Algebra { source, error } => write!(f, "{source}: {error}"),
            ResolveError::Io { path, error } => write!(f, "{path}: {error}"),
            ResolveError::Kind { source, expected } => write!(f, "{source}: expected a {expected} algebra"),
        }
    }
}

impl ResolveError {
    pub fn algebra_error(&self) -> Option<&AlgebraError> {
        match self {
            ResolveError::Algebra { error, .. } => Some(error),
            _ => None,
        }
    }
}

fn number(s: &str, text: &str) -> Result<usize, ResolveError> {
    s.parse().map_err(|_| ResolveError::Unknown(text.to_string()))
}

fn wrap(text: &str) -> impl Fn(AlgebraError) -> ResolveError + '_ {
    move |error| ResolveError::Algebra { source: text.to_string(), error }
}

fn catalog_lie(text: &str) -> Option<Result<LieAlgebra, ResolveError>> {
    if text == "heis3" {
        return Some(Ok(LieAlgebra::heisenberg3()));
    }
    if let Some(n) = text.strip_prefix("abelian:") {
        return Some(number(n, text).map(LieAlgebra::abelian));
    }
    if let Some(rest) = text.strip_prefix("sum:") {
        let parts: Result<Vec<LieAlgebra>, ResolveError> = rest
            .split('+')
            .map(|p| catalog_lie(p).unwrap_or_else(|| Err(ResolveError::Unknown(p.to_string()))))
            .collect();
        return Some(parts.map(|ps| LieAlgebra::direct_sum(&ps)));
    }
    if let Some(n) = text.strip_prefix("sl") {
        if !n.is_empty() && n.bytes().all(|b| b.is_ascii_digit()) {
            return Some(number(n, text).and_then(|n| LieAlgebra::sl(n).map_err(wrap(text))));
        }
    }
    None
}

fn catalog_assoc(text: &str) -> Option<Result<AssocAlgebra, ResolveError>> {
    if let Some(n) = text.strip_prefix("tpoly1:") {
        return Some(number(n, text).and_then(|n| AssocAlgebra::truncated_poly(n, true).map_err(wrap(text))));
    }
    if let Some(n) = text.strip_prefix("tpoly:") {
        return Some(number(n, text).and_then(|n| AssocAlgebra::truncated_poly(n, false).map_err(wrap(text))));
    }
    if let Some(n) = text.strip_prefix("zero:") {
        return Some(number(n, text).map(AssocAlgebra::zero_mult));
    }
    None
}

fn read_file(text: &str) -> Result<ParsedAlgebra, ResolveError> {
    let path = Path::new(text);
    if !path.is_file() {
        return Err(ResolveError::Unknown(text.to_string()));
    }
    let body = fs::read_to_string(path).map_err(|error| ResolveError::Io { path: text.to_string(), error })?;
    let name = path.file_stem().map_or_else(|| text.to_string(), |s| s.to_string_lossy().into_owned());
    parse_algebra_json(&body, &name).map_err(wrap(text))
}

/// A catalog name or file of either kind.
pub fn resolve(text: &str) -> Result<ParsedAlgebra, ResolveError> {
    if let Some(r) = catalog_lie(text) {
        return r.map(ParsedAlgebra::Lie);
    }
    if let Some(r) = catalog_assoc(text) {
        return r.map(ParsedAlgebra::Assoc);
    }
    read_file(text)
}

pub fn resolve_lie(text: &str) -> Result<LieAlgebra, ResolveError> {
    match resolve(text)? {
        ParsedAlgebra::Lie(l) => Ok(l),
        ParsedAlgebra::Assoc(_) => Err(ResolveError::Kind { source: text.to_string(), expected: "Lie" }),
    }
}

pub fn resolve_assoc(text: &str) -> Result<AssocAlgebra, ResolveError> {
    match resolve(text)? {
        ParsedAlgebra::Assoc(a) => Ok(a),
        ParsedAlgebra::Lie(_) => Err(ResolveError::Kind { source: text.to_string(), expected: "commutative associative" }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shorthand() {
        assert_eq!(resolve_lie("sl3").unwrap().dim(), 8);
        assert_eq!(resolve_lie("sum:sl2+sl3").unwrap().dim(), 11);
        assert_eq!(resolve_lie("abelian:4").unwrap().dim(), 4);
        assert_eq!(resolve_assoc("tpoly:4").unwrap().dim(), 3);
        assert_eq!(resolve_assoc("tpoly1:3").unwrap().dim(), 3);
        assert_eq!(resolve_assoc("zero:2").unwrap().dim(), 2);
        assert!(matches!(resolve_lie("tpoly:3"), Err(ResolveError::Kind { .. })));
        assert!(matches!(resolve("sl"), Err(ResolveError::Unknown(_))));
        assert!(matches!(resolve("sl1"), Err(ResolveError::Algebra { .. })));
    }
}
