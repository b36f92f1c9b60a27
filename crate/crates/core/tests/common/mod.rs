#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use sst_core::graph::{random_forest, random_graph};
use sst_core::instances::{disjoint_copies, orbit_constant_weights, random_symmetric_forest, union_of_cliques};
use sst_core::{Graph, OrbitRule};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Unweighted graph on at most `max_n` nodes drawn from a mix of shapes,
/// most of them with nontrivial symmetry.
pub fn symmetric_shape(seed: u64, max_n: usize) -> Graph {
    let mut r = rng(seed ^ 0x5eed);
    match seed % 5 {
        0 => {
            let n = r.gen_range(1..=max_n);
            random_graph(seed, n, r.gen_range(0.1..0.7))
        }
        1 => {
            let k = r.gen_range(2..=3.min(max_n));
            let base_n = r.gen_range(1..=max_n / k);
            disjoint_copies(&random_graph(seed, base_n, r.gen_range(0.2..0.8)), k)
        }
        2 => Graph::from_forest(&random_symmetric_forest(seed, max_n)).expect("forest"),
        3 => {
            let mut sizes = Vec::new();
            let mut left = max_n;
            while left > 0 && (sizes.is_empty() || r.gen_bool(0.7)) {
                let s = r.gen_range(1..=left.min(4));
                sizes.push(s);
                left -= s;
            }
            let g = union_of_cliques(&sizes);
            if r.gen_bool(0.5) {
                g.complement()
            } else {
                g
            }
        }
        _ => {
            let k = r.gen_range(2..=3.min(max_n));
            let base_n = r.gen_range(1..=max_n / k);
            disjoint_copies(&random_graph(seed, base_n, r.gen_range(0.2..0.8)), k).complement()
        }
    }
}

/// [`symmetric_shape`] with nonzero weights in `[-3, 3]` that are constant
/// on the orbits of the unweighted automorphism group.
pub fn weighted_symmetric(seed: u64, max_n: usize) -> Graph {
    let g = symmetric_shape(seed, max_n);
    let w = orbit_constant_weights(&g, seed.wrapping_mul(31), -3, 3).expect("weights");
    g.with_weights(w).expect("matching length")
}

/// Random trivially perfect graph on at most `max_n` nodes, half of them
/// built from repeated subtrees.
pub fn tp_instance(seed: u64, max_n: usize) -> (Vec<Option<usize>>, Graph) {
    let parents = if seed.is_multiple_of(2) {
        random_symmetric_forest(seed, max_n)
    } else {
        let n = rng(seed).gen_range(1..=max_n);
        random_forest(seed, n)
    };
    let g = Graph::from_forest(&parents).expect("forest");
    (parents, g)
}

pub const VARIANTS: [(OrbitRule, bool); 4] = [
    (OrbitRule::Min, false),
    (OrbitRule::Max, false),
    (OrbitRule::Min, true),
    (OrbitRule::Max, true),
];

/// Random `{0, ±1}` matrix with the given shape and nonzero density.
pub fn random_matrix(r: &mut ChaCha8Rng, rows: usize, cols: usize, density: f64) -> Vec<Vec<i8>> {
    (0..rows)
        .map(|_| {
            (0..cols)
                .map(|_| {
                    if r.gen_bool(density) {
                        *[-1i8, 1].choose(r).unwrap()
                    } else {
                        0
                    }
                })
                .collect()
        })
        .collect()
}

/// All rooted forests on `n` nodes in preorder, as depth sequences turned
/// into parent pointers (ordered forests, so shapes repeat).
pub fn all_forests(n: usize) -> Vec<Vec<Option<usize>>> {
    fn rec(depths: &mut Vec<usize>, n: usize, out: &mut Vec<Vec<Option<usize>>>) {
        if depths.len() == n {
            let mut parents = vec![None; n];
            let mut stack: Vec<usize> = Vec::new();
            for (i, &d) in depths.iter().enumerate() {
                stack.truncate(d);
                parents[i] = stack.last().copied();
                stack.push(i);
            }
            out.push(parents);
            return;
        }
        let max_d = depths.last().map_or(0, |d| d + 1);
        for d in 0..=max_d {
            depths.push(d);
            rec(depths, n, out);
            depths.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        rec(&mut Vec::new(), n, &mut out);
    }
    out
}
