//! Structured instances: symmetric synthetic families and the two small
//! worked examples for stringency and for cuts on non-TP interval graphs.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::autom::automorphism_generators;
use crate::error::Result;
use crate::graph::{random_graph, Graph};

/// Disjoint union of complete graphs of the given sizes, numbered
/// consecutively.
pub fn union_of_cliques(sizes: &[usize]) -> Graph {
    let n = sizes.iter().sum();
    let mut g = Graph::new(n);
    let mut start = 0;
    for &s in sizes {
        for u in start..start + s {
            for v in u + 1..start + s {
                g.add_edge(u, v).expect("valid pair");
            }
        }
        start += s;
    }
    g
}

/// Parent pointers of a forest with `roots` trees in which every node on
/// level `i` has `branching[i]` children. Nodes are numbered level by level.
pub fn layered_forest(roots: usize, branching: &[usize]) -> Vec<Option<usize>> {
    let mut parents: Vec<Option<usize>> = vec![None; roots];
    let mut level: Vec<usize> = (0..roots).collect();
    for &b in branching {
        let mut next = Vec::new();
        for &p in &level {
            for _ in 0..b {
                next.push(parents.len());
                parents.push(Some(p));
            }
        }
        level = next;
    }
    parents
}

/// Comparability graph of [`layered_forest`].
pub fn layered_tp_graph(roots: usize, branching: &[usize]) -> Graph {
    Graph::from_forest(&layered_forest(roots, branching)).expect("forest is acyclic")
}

/// `k` disjoint copies of `g`; copy `i` occupies nodes `i*n..(i+1)*n`.
pub fn disjoint_copies(g: &Graph, k: usize) -> Graph {
    let n = g.n();
    let mut h = Graph::new(n * k);
    let mut weights = Vec::with_capacity(n * k);
    for i in 0..k {
        for (u, v) in g.edges() {
            h.add_edge(i * n + u, i * n + v).expect("valid pair");
        }
        weights.extend_from_slice(g.weights());
    }
    h.with_weights(weights).expect("matching length")
}

/// Random nonzero weights in `lo..=hi` that are constant on the orbits of
/// the unweighted automorphism group, so no symmetry is lost.
pub fn orbit_constant_weights(g: &Graph, seed: u64, lo: i64, hi: i64) -> Result<Vec<i64>> {
    let plain = g.clone().with_weights(vec![1; g.n()])?;
    let gens = automorphism_generators(&plain)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut w = vec![0; g.n()];
    for orbit in gens.orbits() {
        let value = loop {
            let x = rng.gen_range(lo..=hi);
            if x != 0 {
                break x;
            }
        };
        for &v in &orbit.members {
            w[v] = value;
        }
    }
    Ok(w)
}

/// Random rooted forest with repeated subtrees, at most `max_nodes` nodes,
/// labels shuffled. Repetition makes the comparability graph symmetric.
pub fn random_symmetric_forest(seed: u64, max_nodes: usize) -> Vec<Option<usize>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    // shapes as nested child lists
    #[derive(Clone)]
    struct Shape(Vec<Shape>);
    fn size(s: &Shape) -> usize {
        1 + s.0.iter().map(size).sum::<usize>()
    }
    fn grow(rng: &mut ChaCha8Rng, budget: usize, depth: usize) -> Shape {
        let mut kids = Vec::new();
        let mut left = budget.saturating_sub(1);
        if depth < 4 {
            let kinds = rng.gen_range(0..=2);
            for _ in 0..kinds {
                if left == 0 {
                    break;
                }
                let budget = rng.gen_range(1..=left.min(5));
                let child = grow(rng, budget, depth + 1);
                let s = size(&child);
                let copies = rng.gen_range(1..=3).min(left / s);
                for _ in 0..copies {
                    kids.push(child.clone());
                }
                left -= copies * s;
            }
        }
        Shape(kids)
    }
    let mut trees = Vec::new();
    let mut left = max_nodes;
    while left > 0 {
        let budget = rng.gen_range(1..=left);
        let t = grow(&mut rng, budget, 0);
        let s = size(&t);
        let copies = rng.gen_range(1..=2).min(left / s);
        for _ in 0..copies {
            trees.push(t.clone());
        }
        left -= copies * s;
        if rng.gen_bool(0.5) {
            break;
        }
    }
    fn emit(s: &Shape, parent: Option<usize>, out: &mut Vec<Option<usize>>) {
        let me = out.len();
        out.push(parent);
        for c in &s.0 {
            emit(c, Some(me), out);
        }
    }
    let mut parents = Vec::new();
    for t in &trees {
        emit(t, None, &mut parents);
    }
    let n = parents.len();
    let mut label: Vec<usize> = (0..n).collect();
    label.shuffle(&mut rng);
    let mut out = vec![None; n];
    for v in 0..n {
        out[label[v]] = parents[v].map(|p| label[p]);
    }
    out
}

pub fn random_symmetric_tp_graph(seed: u64, max_nodes: usize) -> Graph {
    Graph::from_forest(&random_symmetric_forest(seed, max_nodes)).expect("forest is acyclic")
}

/// Parent pointers of the 22-node stringency example: root 22 with children
/// 19, 20, 21; these carry 1, 2 / 3, 4 / 5, 6; leaves 15, 16 hang below 1,
/// 17, 18 below 2, and 7, 8 / 9, 10 / 11, 12 / 13, 14 below 3 / 4 / 5 / 6.
/// Returned 0-based.
pub fn stringency_example_forest() -> Vec<Option<usize>> {
    let one_based: [(usize, usize); 21] = [
        (19, 22),
        (20, 22),
        (21, 22),
        (1, 19),
        (2, 19),
        (3, 20),
        (4, 20),
        (5, 21),
        (6, 21),
        (15, 1),
        (16, 1),
        (17, 2),
        (18, 2),
        (7, 3),
        (8, 3),
        (9, 4),
        (10, 4),
        (11, 5),
        (12, 5),
        (13, 6),
        (14, 6),
    ];
    let mut parents = vec![None; 22];
    for (child, parent) in one_based {
        parents[child - 1] = Some(parent - 1);
    }
    parents
}

pub fn stringency_example() -> Graph {
    Graph::from_forest(&stringency_example_forest()).expect("forest is acyclic")
}

/// Interval graph that is not trivially perfect: triangle 1, 2, 3 with a
/// pendant 4 at 1 and a pendant 5 at 2. Nodes 4 and 5 are swapped by the
/// symmetry `(1,2)(4,5)`.
pub fn interval_cut_example() -> Graph {
    Graph::from_edges(5, &[(0, 1), (1, 2), (0, 2), (0, 3), (1, 4)]).expect("valid edges")
}

/// Named symmetric instances: unions of cliques and layered trivially
/// perfect graphs, all with unit weights.
pub fn synthetic_family() -> Vec<(String, Graph)> {
    let cliques: [&[usize]; 6] = [&[2, 2, 2], &[3, 3], &[3, 3, 2, 2], &[4, 4, 4], &[5, 3, 3, 1], &[6, 2, 2, 2]];
    let layers: [(usize, &[usize]); 6] = [
        (1, &[3]),
        (1, &[2, 2]),
        (2, &[2, 2]),
        (1, &[3, 2]),
        (3, &[2, 1]),
        (1, &[2, 2, 2]),
    ];
    let mut out = Vec::new();
    for sizes in cliques {
        let name = sizes.iter().map(|s| s.to_string()).collect::<Vec<_>>().join("-");
        out.push((format!("cliques_{name}"), union_of_cliques(sizes)));
    }
    for (roots, branching) in layers {
        let name = branching.iter().map(|s| s.to_string()).collect::<Vec<_>>().join("-");
        out.push((format!("layered_{roots}x{name}"), layered_tp_graph(roots, branching)));
    }
    out
}

/// Disjoint copies of small random graphs; symmetric but not trivially
/// perfect in general.
pub fn copies_family(seed: u64, count: usize) -> Vec<(String, Graph)> {
    (0..count)
        .map(|i| {
            let s = seed.wrapping_add(i as u64);
            let base = random_graph(s, 5 + i % 3, 0.4);
            (format!("copies_{s}"), disjoint_copies(&base, 2 + i % 2))
        })
        .collect()
}
