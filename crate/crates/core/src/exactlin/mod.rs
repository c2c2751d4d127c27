//! Exact rational linear algebra on coordinate spaces `K^N`, `K = ℚ`.

mod matrix;
pub mod modular;
mod poly;
mod scalar;
mod sparse;
mod subspace;

pub use matrix::{bareiss_determinant, Matrix, Rref};
pub use poly::Poly;
pub use scalar::{ParseScalarError, Scalar};
pub use sparse::{Echelon, SparseVec};
pub use subspace::Subspace;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinError {
    #[error("ambient dimension mismatch: {left} vs {right}")]
    AmbientMismatch { left: usize, right: usize },
}

/// Solution space of a homogeneous system given by sparse equations.
pub fn solve_homogeneous<'a>(unknowns: usize, equations: impl IntoIterator<Item = &'a SparseVec>) -> Subspace {
    let mut e = Echelon::new(unknowns);
    e.extend(equations);
    Subspace::from_vectors(unknowns, &e.null_space_vectors())
}
