//! Structure-constant algebras and the current-algebra construction.

mod assoc;
mod catalog;
mod current;
mod file;
mod form;
mod lie;
mod table;

pub use assoc::{associator, AssocAlgebra, AssocDescriptor};
pub use catalog::{abelian, direct_sum, heisenberg3, sl, truncated_poly, zero_mult};
pub use current::{kron_coords, CurrentAlgebra};
pub use file::{parse_algebra_json, AlgebraFile, FileKind, ParsedAlgebra, TableEntry, Term};
pub use form::{BilinearForm, SymmetryTag};
pub use lie::{jacobiator, LieAlgebra, LieDescriptor};
pub use table::ProductTable;

/// Validation failures. Indices are 0-based; messages print 1-based positions.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    #[error("anticommutativity violated at basis pair ({}, {})", .i + 1, .j + 1)]
    Anticommutativity { i: usize, j: usize },
    #[error("Jacobi identity violated at basis triple ({}, {}, {})", .i + 1, .j + 1, .k + 1)]
    Jacobi { i: usize, j: usize, k: usize },
    #[error("commutativity violated at basis pair ({}, {})", .i + 1, .j + 1)]
    Commutativity { i: usize, j: usize },
    #[error("associativity violated at basis triple ({}, {}, {})", .i + 1, .j + 1, .k + 1)]
    Associativity { i: usize, j: usize, k: usize },
    #[error("product of basis elements {} and {} has a component outside degree deg+deg (element {})", .i + 1, .j + 1, .k + 1)]
    Grading { i: usize, j: usize, k: usize },
    #[error("algebra is marked unital but has no identity element")]
    NoUnit,
    #[error("expected {expected} basis labels or degrees, found {found}")]
    LabelCount { expected: usize, found: usize },
    #[error("expected {expected}, found {found}")]
    WrongKind { expected: String, found: String },
    #[error("{0}")]
    Catalog(String),
    #[error("malformed JSON: {0}")]
    Json(String),
    #[error("schema violation: {0}")]
    Schema(String),
}

impl AlgebraError {
    /// Name of the violated axiom and the 1-based witness positions, if any.
    pub fn witness(&self) -> Option<(&'static str, Vec<usize>)> {
        match *self {
            AlgebraError::Anticommutativity { i, j } => Some(("anticommutativity", vec![i + 1, j + 1])),
            AlgebraError::Jacobi { i, j, k } => Some(("jacobi", vec![i + 1, j + 1, k + 1])),
            AlgebraError::Commutativity { i, j } => Some(("commutativity", vec![i + 1, j + 1])),
            AlgebraError::Associativity { i, j, k } => Some(("associativity", vec![i + 1, j + 1, k + 1])),
            AlgebraError::Grading { i, j, k } => Some(("grading", vec![i + 1, j + 1, k + 1])),
            _ => None,
        }
    }
}
