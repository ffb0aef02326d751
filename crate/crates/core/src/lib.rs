//! Hamiltonicity and connectivity of digraphs.
//!
//! The crate provides a small dense digraph type, exact solvers for
//! Hamiltonian cycles and paths, vertex connectivity via Menger's theorem,
//! the Overbeck-Larisch pair reduction and its converse expansion, a family
//! of 2-strong non-Hamiltonian digraphs, checkers for the classical degree
//! conditions, and a harness that checks the related statements on
//! constructed and seeded random instances.

pub mod conditions;
pub mod connectivity;
pub mod constructions;
pub mod digraph;
mod error;
pub mod format;
pub mod harness;
pub mod random;
pub mod solver;

pub use digraph::{Cycle, DegreeReport, Digraph, Path, VertexSet, MAX_VERTICES};
pub use error::{Error, Result};
