use serde::Serialize;

use super::Graph;
use crate::error::{Error, Result};

pub const DEFAULT_CLIQUE_CAP: usize = 200;

/// Inclusionwise maximal cliques by Bron-Kerbosch with Tomita pivoting.
/// Each clique is sorted; the list is sorted lexicographically.
pub fn maximal_cliques(g: &Graph) -> Result<Vec<Vec<usize>>> {
    maximal_cliques_with_cap(g, DEFAULT_CLIQUE_CAP)
}

pub fn maximal_cliques_with_cap(g: &Graph, cap: usize) -> Result<Vec<Vec<usize>>> {
    if g.n() > cap {
        return Err(Error::CapExceeded {
            what: "maximal clique enumeration",
            size: g.n(),
            cap,
            hint: "; for trivially perfect graphs use the forest representation (root-leaf paths)",
        });
    }
    let mut out = Vec::new();
    let mut r = Vec::new();
    let p: Vec<usize> = (0..g.n()).collect();
    bron_kerbosch(g, &mut r, p, Vec::new(), &mut out);
    for c in &mut out {
        c.sort_unstable();
    }
    out.sort();
    Ok(out)
}

fn bron_kerbosch(
    g: &Graph,
    r: &mut Vec<usize>,
    p: Vec<usize>,
    mut x: Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if p.is_empty() {
        if x.is_empty() {
            out.push(r.clone());
        }
        return;
    }
    // pivot maximizing |P ∩ N(u)| over P ∪ X
    let pivot = p
        .iter()
        .chain(x.iter())
        .copied()
        .max_by_key(|&u| (p.iter().filter(|&&v| g.has_edge(u, v)).count(), std::cmp::Reverse(u)))
        .expect("p non-empty");
    let candidates: Vec<usize> = p.iter().copied().filter(|&v| !g.has_edge(pivot, v)).collect();
    let mut p = p;
    for v in candidates {
        let np: Vec<usize> = p.iter().copied().filter(|&w| g.has_edge(v, w)).collect();
        let nx: Vec<usize> = x.iter().copied().filter(|&w| g.has_edge(v, w)).collect();
        r.push(v);
        bron_kerbosch(g, r, np, nx, out);
        r.pop();
        p.retain(|&w| w != v);
        x.push(v);
    }
}

/// Partition of `subset` into disjoint cliques of `g`.
///
/// Repeatedly opens a clique at the smallest uncovered node and extends it by
/// the smallest-index uncovered nodes adjacent to every node chosen so far.
pub fn greedy_clique_cover(g: &Graph, subset: &[usize]) -> Vec<Vec<usize>> {
    let mut nodes: Vec<usize> = subset.to_vec();
    nodes.sort_unstable();
    nodes.dedup();
    let mut covered = vec![false; nodes.len()];
    let mut out = Vec::new();
    for i in 0..nodes.len() {
        if covered[i] {
            continue;
        }
        covered[i] = true;
        let mut clique = vec![nodes[i]];
        for j in i + 1..nodes.len() {
            if !covered[j] && clique.iter().all(|&c| g.has_edge(c, nodes[j])) {
                covered[j] = true;
                clique.push(nodes[j]);
            }
        }
        out.push(clique);
    }
    out
}

/// Maximal-clique by node 0/1 incidence matrix.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CliqueMatrix {
    pub rows: Vec<Vec<usize>>,
    pub n: usize,
}

impl CliqueMatrix {
    pub fn new(g: &Graph) -> Result<Self> {
        Ok(CliqueMatrix {
            rows: maximal_cliques(g)?,
            n: g.n(),
        })
    }

    pub fn entries(&self) -> Vec<Vec<i8>> {
        self.rows
            .iter()
            .map(|c| {
                let mut row = vec![0i8; self.n];
                for &v in c {
                    row[v] = 1;
                }
                row
            })
            .collect()
    }
}
