//! Seeded instance generators. All output is a deterministic function of
//! the seed.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::Graph;

/// Erdős–Rényi graph with edge probability `p`, unit weights.
pub fn random_graph(seed: u64, n: usize, p: f64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p.clamp(0.0, 1.0)) {
                g.add_edge(u, v).expect("valid pair");
            }
        }
    }
    g
}

/// Random parent pointers: node `v` either starts a new tree or hangs below a
/// uniformly chosen earlier node, then labels are shuffled.
pub fn random_forest(seed: u64, n: usize) -> Vec<Option<usize>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let root_prob = 0.15;
    let mut parent_in_order: Vec<Option<usize>> = Vec::with_capacity(n);
    for v in 0..n {
        if v == 0 || rng.gen_bool(root_prob) {
            parent_in_order.push(None);
        } else {
            parent_in_order.push(Some(rng.gen_range(0..v)));
        }
    }
    let mut label: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        let j = rng.gen_range(0..=i);
        label.swap(i, j);
    }
    let mut parents = vec![None; n];
    for v in 0..n {
        parents[label[v]] = parent_in_order[v].map(|u| label[u]);
    }
    parents
}

/// Trivially perfect graph: comparability graph of [`random_forest`].
pub fn random_tp_graph(seed: u64, n: usize) -> Graph {
    Graph::from_forest(&random_forest(seed, n)).expect("forest is acyclic")
}

/// Uniform weights in `lo..=hi`, skipping zero when `nonzero`.
pub fn random_weights(seed: u64, n: usize, lo: i64, hi: i64, nonzero: bool) -> Vec<i64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n)
        .map(|_| loop {
            let w = rng.gen_range(lo..=hi);
            if !(nonzero && w == 0) {
                break w;
            }
        })
        .collect()
}
