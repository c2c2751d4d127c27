//! JSON structure-constant files.
//!
//! ```json
//! {"kind": "lie", "dim": 3, "basis": ["x", "y", "z"],
//!  "table": [{"i": 1, "j": 2, "terms": [{"k": 3, "c": "1"}]}]}
//! ```
//!
//! Indices are 1-based positions in `basis`. Omitted pairs multiply to zero.
//! Lie files list `i < j` pairs; the `(j, i)` entry is filled in by
//! anticommutativity unless given explicitly. Associative files list every
//! nonzero pair and may carry `"unital"` and `"degrees"`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{AlgebraError, AssocAlgebra, AssocDescriptor, LieAlgebra, LieDescriptor, ProductTable};
use crate::exactlin::{Scalar, SparseVec};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FileKind {
    Lie,
    Assoc,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Term {
    pub k: usize,
    pub c: Scalar,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TableEntry {
    pub i: usize,
    pub j: usize,
    pub terms: Vec<Term>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub kind: FileKind,
    pub dim: usize,
    pub basis: Vec<String>,
    pub table: Vec<TableEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unital: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degrees: Option<Vec<u32>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParsedAlgebra {
    Lie(LieAlgebra),
    Assoc(AssocAlgebra),
}

impl AlgebraFile {
    pub fn from_json(text: &str) -> Result<Self, AlgebraError> {
        serde_json::from_str(text).map_err(|e| AlgebraError::Json(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("algebra file serializes")
    }

    fn schema(msg: impl Into<String>) -> AlgebraError {
        AlgebraError::Schema(msg.into())
    }

    fn build_table(&self) -> Result<(ProductTable, BTreeMap<(usize, usize), SparseVec>), AlgebraError> {
        let n = self.dim;
        if self.basis.len() != n {
            return Err(AlgebraError::LabelCount { expected: n, found: self.basis.len() });
        }
        let check = |x: usize, what: &str| {
            if x == 0 || x > n {
                Err(Self::schema(format!("{what} index {x} outside 1..={n}")))
            } else {
                Ok(x - 1)
            }
        };
        let mut listed = BTreeMap::new();
        for e in &self.table {
            let (i, j) = (check(e.i, "i")?, check(e.j, "j")?);
            let mut pairs = Vec::new();
            for t in &e.terms {
                pairs.push((check(t.k, "k")?, t.c.clone()));
            }
            if listed.insert((i, j), SparseVec::from_pairs(pairs)).is_some() {
                return Err(Self::schema(format!("pair ({}, {}) listed twice", e.i, e.j)));
            }
        }
        let mut table = ProductTable::zero(n);
        for ((i, j), v) in &listed {
            table.set(*i, *j, v.clone());
        }
        Ok((table, listed))
    }

    pub fn parse(&self, name: &str) -> Result<ParsedAlgebra, AlgebraError> {
        let (mut table, listed) = self.build_table()?;
        match self.kind {
            FileKind::Lie => {
                if self.unital.is_some() || self.degrees.is_some() {
                    return Err(Self::schema("\"unital\" and \"degrees\" apply to associative algebras only"));
                }
                for ((i, j), v) in &listed {
                    if i != j && !listed.contains_key(&(*j, *i)) {
                        table.set(*j, *i, v.scale(&-Scalar::one()));
                    }
                }
                let lie = LieAlgebra::new(LieDescriptor::Custom(name.to_string()), self.basis.clone(), table)?;
                Ok(ParsedAlgebra::Lie(lie))
            }
            FileKind::Assoc => {
                let assoc = AssocAlgebra::new(
                    AssocDescriptor::Custom(name.to_string()),
                    self.basis.clone(),
                    table,
                    self.unital.unwrap_or(false),
                    self.degrees.clone(),
                )?;
                Ok(ParsedAlgebra::Assoc(assoc))
            }
        }
    }

    fn entries(table: &ProductTable, upper_only: bool) -> Vec<TableEntry> {
        let n = table.dim();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if upper_only && j <= i {
                    continue;
                }
                let p = table.product(i, j);
                if !p.is_zero() {
                    out.push(TableEntry {
                        i: i + 1,
                        j: j + 1,
                        terms: p.iter().map(|(k, c)| Term { k: k + 1, c: c.clone() }).collect(),
                    });
                }
            }
        }
        out
    }

    pub fn from_lie(lie: &LieAlgebra) -> Self {
        AlgebraFile {
            kind: FileKind::Lie,
            dim: lie.dim(),
            basis: lie.labels().to_vec(),
            table: Self::entries(lie.table(), true),
            unital: None,
            degrees: None,
        }
    }

    pub fn from_assoc(assoc: &AssocAlgebra) -> Self {
        AlgebraFile {
            kind: FileKind::Assoc,
            dim: assoc.dim(),
            basis: assoc.labels().to_vec(),
            table: Self::entries(assoc.table(), false),
            unital: assoc.is_unital().then_some(true),
            degrees: assoc.degrees().map(<[u32]>::to_vec),
        }
    }
}

pub fn parse_algebra_json(text: &str, name: &str) -> Result<ParsedAlgebra, AlgebraError> {
    AlgebraFile::from_json(text)?.parse(name)
}
