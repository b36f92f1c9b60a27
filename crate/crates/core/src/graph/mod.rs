//! Node-weighted undirected graphs: the stable set instances.

mod cliques;
mod dimacs;
mod random;

pub use cliques::{greedy_clique_cover, maximal_cliques, maximal_cliques_with_cap, CliqueMatrix, DEFAULT_CLIQUE_CAP};
pub use dimacs::{parse_dimacs, write_dimacs};
pub use random::{random_forest, random_graph, random_tp_graph, random_weights};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Simple undirected graph on nodes `0..n` with integer node weights.
///
/// Adjacency lists are kept sorted; there are no loops or parallel edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    weights: Vec<i64>,
    edge_count: usize,
}

/// Index bookkeeping for subgraphs: node identity is positional, so every
/// node removal is recorded here.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NodeMap {
    pub old_to_new: Vec<Option<usize>>,
    pub new_to_old: Vec<usize>,
}

impl NodeMap {
    pub fn identity(n: usize) -> Self {
        NodeMap {
            old_to_new: (0..n).map(Some).collect(),
            new_to_old: (0..n).collect(),
        }
    }
}

impl Graph {
    /// Edgeless graph with unit weights.
    pub fn new(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            weights: vec![1; n],
            edge_count: 0,
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn with_weights(mut self, weights: Vec<i64>) -> Result<Self> {
        self.set_weights(weights)?;
        Ok(self)
    }

    pub fn set_weights(&mut self, weights: Vec<i64>) -> Result<()> {
        if weights.len() != self.n() {
            return Err(Error::DimensionMismatch {
                expected: self.n(),
                found: weights.len(),
            });
        }
        self.weights = weights;
        Ok(())
    }

    /// Comparability graph of a rooted forest given by parent pointers:
    /// `{u, v}` is an edge iff one is a proper ancestor of the other.
    pub fn from_forest(parents: &[Option<usize>]) -> Result<Self> {
        let n = parents.len();
        let mut g = Graph::new(n);
        for v in 0..n {
            let mut steps = 0;
            let mut a = parents[v];
            while let Some(u) = a {
                if u >= n {
                    return Err(Error::PointOutOfRange { point: u + 1, n });
                }
                steps += 1;
                if steps > n {
                    return Err(Error::InvalidInput("parent pointers contain a cycle".into()));
                }
                g.add_edge(u, v)?;
                a = parents[u];
            }
        }
        Ok(g)
    }

    /// Inserts `{u, v}`; returns `false` if it was already present.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<bool> {
        let n = self.n();
        for x in [u, v] {
            if x >= n {
                return Err(Error::PointOutOfRange { point: x + 1, n });
            }
        }
        if u == v {
            return Err(Error::InvalidInput(format!("loop at node {}", u + 1)));
        }
        match self.adj[u].binary_search(&v) {
            Ok(_) => Ok(false),
            Err(pos) => {
                self.adj[u].insert(pos, v);
                let pos = self.adj[v].binary_search(&u).unwrap_err();
                self.adj[v].insert(pos, u);
                self.edge_count += 1;
                Ok(true)
            }
        }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn weights(&self) -> &[i64] {
        &self.weights
    }

    #[inline]
    pub fn weight(&self, v: usize) -> i64 {
        self.weights[v]
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count);
        for u in 0..self.n() {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn complement(&self) -> Graph {
        let n = self.n();
        let mut g = Graph::new(n);
        g.weights = self.weights.clone();
        for u in 0..n {
            for v in u + 1..n {
                if !self.has_edge(u, v) {
                    g.add_edge(u, v).expect("valid pair");
                }
            }
        }
        g
    }

    /// Subgraph induced by `nodes` (any order, duplicates ignored). New
    /// indices follow ascending old indices.
    pub fn induced_subgraph(&self, nodes: &[usize]) -> Result<(Graph, NodeMap)> {
        let n = self.n();
        let mut keep = vec![false; n];
        for &v in nodes {
            if v >= n {
                return Err(Error::PointOutOfRange { point: v + 1, n });
            }
            keep[v] = true;
        }
        let new_to_old: Vec<usize> = (0..n).filter(|&v| keep[v]).collect();
        let mut old_to_new = vec![None; n];
        for (i, &v) in new_to_old.iter().enumerate() {
            old_to_new[v] = Some(i);
        }
        let mut g = Graph::new(new_to_old.len());
        g.weights = new_to_old.iter().map(|&v| self.weights[v]).collect();
        for (i, &v) in new_to_old.iter().enumerate() {
            let row: Vec<usize> = self.adj[v].iter().filter_map(|&w| old_to_new[w]).collect();
            g.edge_count += row.iter().filter(|&&j| j > i).count();
            g.adj[i] = row;
        }
        Ok((
            g,
            NodeMap {
                old_to_new,
                new_to_old,
            },
        ))
    }

    pub fn is_clique(&self, nodes: &[usize]) -> bool {
        nodes
            .iter()
            .enumerate()
            .all(|(i, &u)| nodes[i + 1..].iter().all(|&v| u != v && self.has_edge(u, v)))
    }

    pub fn is_stable(&self, nodes: &[usize]) -> bool {
        nodes
            .iter()
            .enumerate()
            .all(|(i, &u)| nodes[i + 1..].iter().all(|&v| !self.has_edge(u, v)))
    }

    pub fn total_weight(&self, nodes: &[usize]) -> i64 {
        nodes.iter().map(|&v| self.weights[v]).sum()
    }
}
