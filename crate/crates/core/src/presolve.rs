//! Symmetry-based stable set presolving.
//!
//! For a leader-follower pair `(l, f)`:
//! * deletion: if `{l, f}` is an edge, `f` can be dropped (`x_f <= x_l` and
//!   `x_f + x_l <= 1` force `x_f = 0`);
//! * addition: otherwise, `f` is joined to every neighbour of `l`, so that
//!   picking `f` excludes everything that would exclude `l`.
//!
//! Pairs are processed in table order against the graph as modified so far.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, NodeMap};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct PresolveOptions {
    pub use_addition: bool,
    /// Re-run the pass until nothing changes.
    pub fixpoint: bool,
}

/// Fractions of the original graph that remain.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct PresolveStats {
    pub nodes: f64,
    /// Edges after the deletion operation alone.
    pub edges: f64,
    /// Edges after deletion and addition.
    pub edges_plus: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct PresolveResult {
    pub reduced_graph: Graph,
    /// Original indices, ascending.
    pub removed_nodes: Vec<usize>,
    /// Original indices `(u, v)` with `u < v`, in insertion order.
    pub added_edges: Vec<(usize, usize)>,
    pub node_map: NodeMap,
    pub stats: PresolveStats,
}

struct Working {
    alive: Vec<bool>,
    adj: Vec<BTreeSet<usize>>,
    removed: Vec<usize>,
    added: Vec<(usize, usize)>,
}

impl Working {
    fn new(g: &Graph) -> Self {
        Working {
            alive: vec![true; g.n()],
            adj: (0..g.n()).map(|v| g.neighbors(v).iter().copied().collect()).collect(),
            removed: Vec::new(),
            added: Vec::new(),
        }
    }

    fn remove(&mut self, v: usize) {
        self.alive[v] = false;
        for w in std::mem::take(&mut self.adj[v]) {
            self.adj[w].remove(&v);
        }
        self.removed.push(v);
    }

    fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    /// One pass over the pairs; returns whether anything changed.
    fn pass(&mut self, pairs: &[(usize, usize)], deletion: bool, addition: bool) -> bool {
        let mut changed = false;
        for &(l, f) in pairs {
            if l == f || !self.alive[l] || !self.alive[f] {
                continue;
            }
            if self.adj[l].contains(&f) {
                if deletion {
                    self.remove(f);
                    changed = true;
                }
            } else if addition {
                let nbrs: Vec<usize> = self.adj[l].iter().copied().collect();
                for v in nbrs {
                    if v != f && self.adj[f].insert(v) {
                        self.adj[v].insert(f);
                        self.added.push((v.min(f), v.max(f)));
                        changed = true;
                    }
                }
            }
        }
        changed
    }

    fn run(g: &Graph, pairs: &[(usize, usize)], deletion: bool, addition: bool, fixpoint: bool) -> Self {
        let mut w = Working::new(g);
        while w.pass(pairs, deletion, addition) && fixpoint {}
        w
    }

    fn into_result(mut self, g: &Graph, stats: PresolveStats) -> PresolveResult {
        let keep: Vec<usize> = (0..g.n()).filter(|&v| self.alive[v]).collect();
        let mut old_to_new = vec![None; g.n()];
        for (i, &v) in keep.iter().enumerate() {
            old_to_new[v] = Some(i);
        }
        let mut h = Graph::new(keep.len());
        for (i, &v) in keep.iter().enumerate() {
            for &u in &self.adj[v] {
                let j = old_to_new[u].expect("neighbours of live nodes are live");
                if i < j {
                    h.add_edge(i, j).expect("valid pair");
                }
            }
        }
        let h = h
            .with_weights(keep.iter().map(|&v| g.weight(v)).collect())
            .expect("matching length");
        self.removed.sort_unstable();
        // edges touching a removed node no longer exist
        let alive = &self.alive;
        self.added.retain(|&(u, v)| alive[u] && alive[v]);
        PresolveResult {
            reduced_graph: h,
            removed_nodes: self.removed,
            added_edges: self.added,
            node_map: NodeMap {
                old_to_new,
                new_to_old: keep,
            },
            stats,
        }
    }
}

fn ratio(part: usize, whole: usize) -> f64 {
    if whole == 0 {
        1.0
    } else {
        part as f64 / whole as f64
    }
}

fn check_pairs(g: &Graph, pairs: &[(usize, usize)]) -> Result<()> {
    for &(l, f) in pairs {
        for p in [l, f] {
            if p >= g.n() {
                return Err(Error::PointOutOfRange {
                    point: p + 1,
                    n: g.n(),
                });
            }
        }
    }
    Ok(())
}

fn stats(g: &Graph, nodes_left: usize, deletion_edges: usize, plus_edges: usize) -> PresolveStats {
    PresolveStats {
        nodes: ratio(nodes_left, g.n()),
        edges: ratio(deletion_edges, g.edge_count()),
        edges_plus: ratio(plus_edges, g.edge_count()),
    }
}

/// Removes each follower adjacent to its leader.
pub fn deletion_operation(g: &Graph, pairs: &[(usize, usize)]) -> Result<PresolveResult> {
    check_pairs(g, pairs)?;
    let w = Working::run(g, pairs, true, false, false);
    let alive = w.alive.iter().filter(|&&a| a).count();
    let e = w.edge_count();
    Ok(w.into_result(g, stats(g, alive, e, e)))
}

/// Joins each follower to the neighbours of its non-adjacent leader.
pub fn addition_operation(g: &Graph, pairs: &[(usize, usize)]) -> Result<PresolveResult> {
    check_pairs(g, pairs)?;
    let w = Working::run(g, pairs, false, true, false);
    let e = w.edge_count();
    Ok(w.into_result(g, stats(g, g.n(), g.edge_count(), e)))
}

/// Deletion, and optionally addition, per pair in table order.
///
/// The addition operation is only sound when every weight is nonzero, so
/// that is checked up front.
pub fn sst_presolve(g: &Graph, pairs: &[(usize, usize)], opts: PresolveOptions) -> Result<PresolveResult> {
    check_pairs(g, pairs)?;
    if opts.use_addition {
        if let Some(v) = (0..g.n()).find(|&v| g.weight(v) == 0) {
            return Err(Error::ZeroWeight { node: v + 1 });
        }
    }
    let deletion_only = Working::run(g, pairs, true, false, opts.fixpoint);
    let combined = Working::run(g, pairs, true, true, opts.fixpoint);
    let deletion_edges = deletion_only.edge_count();
    let plus_edges = combined.edge_count();
    let chosen = if opts.use_addition { combined } else { deletion_only };
    let alive = chosen.alive.iter().filter(|&&a| a).count();
    Ok(chosen.into_result(g, stats(g, alive, deletion_edges, plus_edges)))
}

impl PresolveResult {
    /// Lifts a member set of the reduced graph back to original indices.
    pub fn lift(&self, members: &[usize]) -> Vec<usize> {
        let mut out: Vec<usize> = members.iter().map(|&i| self.node_map.new_to_old[i]).collect();
        out.sort_unstable();
        out
    }
}
