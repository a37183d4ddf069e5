//! Benchmark fixtures shared by the criterion targets.

use exen_core::generators;
use exen_core::Graph;

/// Deterministic `G(n, 1/2)` graphs of the given orders.
pub fn random_graphs(orders: &[usize]) -> Vec<(usize, Graph)> {
    orders.iter().map(|&n| (n, generators::random_gnp(n, 0.5, 0x5eed + n as u64).expect("valid parameters"))).collect()
}

/// Named graphs with known spectra, small to medium order.
pub fn named_graphs() -> Vec<(&'static str, Graph)> {
    ["path:20", "star:15", "complete_bipartite:6,9", "paley:13", "clebsch_complement"]
        .into_iter()
        .map(|s| (s, generators::from_spec(s).expect("valid family spec")))
        .collect()
}
