//! Extended adjacency matrices of graphs, their energies, and a catalogue of
//! energy bounds that can be checked mechanically on single graphs or across
//! exhaustive and random sweeps.
//!
//! ```
//! use exen_core::{energy_report, generators};
//!
//! let p3 = generators::path(3).unwrap();
//! let report = energy_report(&p3).unwrap();
//! assert!((report.extended_energy - 2.5 * 2f64.sqrt()).abs() < 1e-12);
//! ```

pub mod bounds;
pub mod energy;
pub mod graph;
pub mod linalg;
pub mod oracle;
pub mod report;

pub use bounds::{
    catalog, evaluate, evaluate_all, lookup, resolve_filter, BoundCheck, BoundError, BoundSpec, Direction, Scope,
    Status, Subject, Subjects, Tolerances,
};
pub use energy::{
    adjacency_matrix, degree_matrix, energy_report, extended_adjacency_matrix, EnergyReport, GraphAnalysis,
    VertexEnergyDecomposition,
};
pub use graph::{
    generators, parse_edge_list, parse_graph6, serialize_graph6, DegreeProfile, EdgeListError, Graph, Graph6Error,
    GraphError,
};
pub use linalg::{EigenDecomposition, LinalgError, Matrix, SymmetricMatrix};
pub use oracle::{
    enumerate_labeled, find_equality_witnesses, identity_suite, run_sweep, run_sweep_with, IdentityConfig,
    IdentitySummary, OracleError, SweepConfig, SweepMode, SweepOptions, SweepSummary,
};
pub use report::{InputDescriptor, ReportDocument};
