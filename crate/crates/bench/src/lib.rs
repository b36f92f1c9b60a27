//! Fixed instance sets shared by the benchmarks.

use sst_core::graph::random_weights;
use sst_core::instances::{copies_family, orbit_constant_weights, random_symmetric_tp_graph, synthetic_family};
use sst_core::Graph;

/// Symmetric instances with unit weights: the synthetic family plus a few
/// disjoint-copy graphs.
pub fn symmetric_instances() -> Vec<(String, Graph)> {
    let mut out = synthetic_family();
    out.extend(copies_family(17, 4));
    out
}

/// Trivially perfect graphs with orbit-constant weights.
pub fn weighted_tp_instances(count: u64, max_nodes: usize) -> Vec<(String, Graph)> {
    (0..count)
        .map(|s| {
            let g = random_symmetric_tp_graph(s, max_nodes);
            let w = orbit_constant_weights(&g, s, 1, 5).expect("generator output is valid");
            (format!("tp_{s}"), g.with_weights(w).expect("weights match"))
        })
        .collect()
}

/// Random weighted graphs without structure.
pub fn random_instances(count: u64, n: usize, p: f64) -> Vec<(String, Graph)> {
    (0..count)
        .map(|s| {
            let g = sst_core::graph::random_graph(s, n, p);
            let w = random_weights(s, n, 1, 9, true);
            (format!("random_{s}"), g.with_weights(w).expect("weights match"))
        })
        .collect()
}
