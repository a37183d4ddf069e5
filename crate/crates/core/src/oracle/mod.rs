//! Brute-force verification: exhaustive labeled enumeration, random
//! `G(n, p)` samples and graph6 corpora, each streamed through every
//! selected bound and every consistency check.

mod enumerate;
mod identities;
mod sweep;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bounds::{BoundError, Scope, Tolerances};
use crate::graph::{Graph6Error, GraphError};

pub use enumerate::{enumerate_labeled, labeled_count, labeled_graph, EXHAUSTIVE_MAX_ORDER};
pub use identities::{
    identity_suite, AmQmResiduals, IdentityConfig, IdentitySummary, KroneckerResiduals, PolarResiduals,
    SIdentityResiduals, VonNeumannResiduals,
};
pub use sweep::{find_equality_witnesses, run_sweep, run_sweep_with, SweepOptions};

#[derive(Debug, Error)]
pub enum OracleError {
    #[error("exhaustive enumeration needs 1 <= n <= {max}, got {n}")]
    OrderOutOfRange { n: usize, max: usize },
    #[error("invalid sweep configuration: {0}")]
    Config(String),
    #[error("cannot read corpus {path}: {source}")]
    CorpusIo { path: String, source: std::io::Error },
    #[error("corpus {path}, line {line}: {source}")]
    CorpusParse { path: String, line: usize, source: Graph6Error },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Bound(#[from] BoundError),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum SweepMode {
    ExhaustiveLabeled,
    RandomGnp,
    CorpusFile {
        path: String,
    },
    /// A single graph given by a family specification such as `cycle:5`.
    Family {
        spec: String,
    },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepConfig {
    pub n_min: usize,
    pub n_max: usize,
    pub mode: SweepMode,
    /// Samples per `(n, p)` combination in random mode.
    pub samples: usize,
    pub p_grid: Vec<f64>,
    pub seed: u64,
    /// Catalogue ids, already expanded; see [`crate::bounds::resolve_filter`].
    pub bound_filter: Vec<String>,
    pub connected_only: bool,
    pub complement_pairs: bool,
    /// Cap on stored example graphs per list.
    pub witness_limit: usize,
    /// Every graph whose stream index is a multiple of this is also
    /// evaluated under a seeded random relabeling; 0 disables.
    pub relabel_every: u64,
    pub tolerances: Tolerances,
}

impl SweepConfig {
    pub fn exhaustive(n_min: usize, n_max: usize) -> Self {
        Self {
            n_min,
            n_max,
            mode: SweepMode::ExhaustiveLabeled,
            samples: 0,
            p_grid: Vec::new(),
            seed: 0,
            bound_filter: all_bounds(),
            connected_only: false,
            complement_pairs: true,
            witness_limit: 20,
            relabel_every: 16,
            tolerances: Tolerances::default(),
        }
    }

    pub fn random(n_values: (usize, usize), p_grid: Vec<f64>, samples: usize, seed: u64) -> Self {
        Self {
            n_min: n_values.0,
            n_max: n_values.1,
            mode: SweepMode::RandomGnp,
            samples,
            p_grid,
            seed,
            ..Self::exhaustive(1, 1)
        }
    }

    pub fn corpus(path: impl Into<String>) -> Self {
        Self { mode: SweepMode::CorpusFile { path: path.into() }, ..Self::exhaustive(1, 1) }
    }

    pub fn family(spec: impl Into<String>) -> Self {
        Self { mode: SweepMode::Family { spec: spec.into() }, ..Self::exhaustive(1, 1) }
    }

    pub fn with_bounds(mut self, ids: &[&str]) -> Self {
        self.bound_filter = ids.iter().map(|s| s.to_string()).collect();
        self
    }
}

fn all_bounds() -> Vec<String> {
    crate::bounds::catalog().iter().map(|s| s.id.to_string()).collect()
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct StatusTally {
    pub holds: u64,
    pub equality: u64,
    pub violated: u64,
    pub not_applicable: u64,
}

impl StatusTally {
    pub fn total(&self) -> u64 {
        self.holds + self.equality + self.violated + self.not_applicable
    }

    pub fn applicable(&self) -> u64 {
        self.holds + self.equality + self.violated
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Witness {
    pub graph6: String,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub vertices: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Violation {
    pub graph6: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub vertex: Option<usize>,
    pub lhs: f64,
    pub rhs: f64,
    pub slack: f64,
}

/// Agreement between detected equality and the stated equality family,
/// counted per check (per vertex for per-vertex bounds).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FamilySummary {
    pub name: String,
    pub equality_in_family: u64,
    pub equality_outside_family: u64,
    pub member_not_equal: u64,
    pub outside_examples: Vec<Witness>,
    pub missed_examples: Vec<Witness>,
}

impl FamilySummary {
    pub fn agrees(&self) -> bool {
        self.equality_outside_family == 0 && self.member_not_equal == 0
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundSummary {
    pub bound_id: String,
    pub scope: Scope,
    pub anchor: String,
    /// One entry per graph. A per-vertex bound counts as violated if any
    /// vertex is, otherwise as equality if any vertex attains it.
    pub tallies: StatusTally,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub vertex_tallies: Option<StatusTally>,
    pub worst_slack: Option<f64>,
    pub worst_witness: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub worst_vertex: Option<usize>,
    pub equality_witnesses: Vec<Witness>,
    pub violations: Vec<Violation>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub family: Option<FamilySummary>,
}

/// Worst slacks of a dominance pair's two bounds, both taken over the graphs
/// where both apply. The looser (older) bound must never be tighter.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DominanceSanity {
    pub pair_id: String,
    pub graphs: u64,
    pub newer_worst: Option<f64>,
    pub older_worst: Option<f64>,
    pub consistent: bool,
}

/// Largest residual of each self-consistency check over all processed
/// graphs (complements included).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConsistencySummary {
    /// `|sum_i E_i - E|`, ordinary and extended.
    pub vertex_sum: f64,
    /// Row and column sums of the weight matrix against 1.
    pub doubly_stochastic: f64,
    /// `|sum_r q_ir |eta_r| - E_ex_i|`.
    pub weighted_vertex_energy: f64,
    /// Per-component against whole-graph extended vertex energies.
    pub component_locality: f64,
    pub eigen_orthogonality: f64,
    pub eigen_reconstruction: f64,
    /// `max |A_ex - A|` and `|E_ex - E|` over regular graphs.
    pub regular_collapse: f64,
    pub min_vertex_energy: f64,
    pub relabel_checked: u64,
    pub relabel: f64,
    pub tolerance: f64,
    pub relabel_tolerance: f64,
    pub within_tolerance: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GraphFailure {
    pub graph6: String,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepSummary {
    pub config: SweepConfig,
    pub graphs_processed: u64,
    pub graphs_skipped: u64,
    pub bounds: Vec<BoundSummary>,
    pub dominance_sanity: Vec<DominanceSanity>,
    pub consistency: ConsistencySummary,
    pub failures: Vec<GraphFailure>,
    pub violated_total: u64,
    /// No violations, no numeric failures, all consistency residuals within
    /// tolerance and every dominance sanity check consistent.
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub runtime_seconds: Option<f64>,
}

impl SweepSummary {
    pub fn bound(&self, id: &str) -> Option<&BoundSummary> {
        self.bounds.iter().find(|b| b.bound_id == id)
    }
}

/// Every equality case of one bound over an exhaustive range.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EqualityWitnesses {
    pub bound_id: String,
    pub graphs: Vec<Witness>,
    pub family: Option<FamilySummary>,
}
