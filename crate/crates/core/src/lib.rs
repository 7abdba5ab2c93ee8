//! Exact cycle and connectivity computations on small simple graphs, with a
//! claim checker and exhaustive corpus tools.

pub mod canon;
pub mod closure;
pub mod constructions;
pub mod cycles;
pub mod enumerate;
pub mod explorer;
pub mod graph;
pub mod graph6;
pub mod invariants;
pub mod theorems;

pub use cycles::{Budget, CyclabilityVerdict, CycleCertificate, CycleError};
pub use graph::{Graph, GraphError, MAX_VERTICES};
pub use graph6::{parse_graph6, write_graph6};
