//! Exact-arithmetic invariants of current Lie algebras `L ⊗ A` over ℚ.
//!
//! Builds Lie algebras and commutative associative algebras (possibly without
//! unit) from structure constants, forms their current algebras, and computes
//! second cohomology with trivial coefficients, symmetric invariant forms and
//! derivations as explicit subspaces, comparing them against spans of
//! decomposable `φ ⊗ α` and `d ⊗ β` generators.

pub mod algebras;
pub mod cochain;
pub mod derivations;
pub mod exactlin;
pub mod forms;
pub mod graded;
