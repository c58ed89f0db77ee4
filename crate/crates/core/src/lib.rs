//! Recognition, decomposition and optimisation for graph classes defined by
//! excluding three-path configurations and wheels.

pub mod chi;
pub mod chordal;
pub mod classes;
pub mod decomposition;
pub mod detectors;
pub mod error;
pub mod format;
pub mod generators;
pub mod graph;
pub mod oracles;
pub mod rings;
pub mod set;

pub use error::{Error, Result};
pub use graph::{Coloring, Graph, WeightedGraph};
pub use set::VertexSet;
pub use classes::{ClassId, Recognition};
pub use detectors::{CertKind, Certificate};
pub use decomposition::DecompositionTree;
pub use rings::GoodPartition;
