//! Spectral graph analysis around the degree/adjacency matrix pencil
//! `alpha*D + (1-alpha)*A`: exact combinatorial invariants, a dense symmetric
//! eigensolver, eigenvalue-sum bounds with applicability gates, and
//! enumeration-driven searches over small graph universes.

pub mod bounds;
#[doc(hidden)]
pub mod canon;
pub mod cli;
pub mod graph;
pub mod graph6;
pub mod invariants;
pub mod linalg;
pub mod search;
pub mod spectra;
pub mod trees;

pub use bounds::{BoundRecord, CatalogId, Certificate, Tolerance};
pub use graph::{Family, Graph, VertexSubset};
pub use linalg::{Spectrum, SymMatrix};
pub use spectra::AlphaValue;
