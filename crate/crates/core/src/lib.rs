//! Isometric path numbers of complete multipartite graphs and of products
//! of two or three complete graphs, with explicit optimal covers and an
//! exact solver to check both on small graphs.

pub mod cli;
pub mod constructors;
pub mod cover;
pub mod error;
pub mod formulas;
pub mod graph;
pub mod solver;

pub use cover::{verify_cover, Cover, Path, Provenance, VerifyReport};
pub use error::{Error, Result};
pub use graph::{DistanceMatrix, Graph, HammingSpec, PartiteSpec};
