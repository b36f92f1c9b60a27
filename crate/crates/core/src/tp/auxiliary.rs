use super::forest::{chain_decomposition, forest_representation};
use crate::error::Result;
use crate::graph::{Graph, NodeMap};
use crate::sst::{Round, SstTable};

/// A trivially perfect graph with every orbit chain contracted to one node.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AuxiliaryGraph {
    pub graph: Graph,
    /// Simple cuts on the contracted nodes, in the original round order.
    pub table: SstTable,
    /// Contracted node `i` stands for original node `node_map.new_to_old[i]`.
    pub node_map: NodeMap,
    /// Original nodes merged into each contracted node, sorted.
    pub classes: Vec<Vec<usize>>,
}

fn find(parent: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while parent[r] != r {
        r = parent[r];
    }
    let mut y = x;
    while parent[y] != r {
        let next = parent[y];
        parent[y] = r;
        y = next;
    }
    r
}

/// Contracts the chains of every recorded orbit. A contracted node keeps the
/// label of the first leader (in round order) it contains, otherwise its
/// smallest label. Chain nodes have identical closed neighbourhoods, so the
/// result is the subgraph induced by the kept labels.
pub fn auxiliary_graph(g: &Graph, t: &SstTable) -> Result<AuxiliaryGraph> {
    let f = forest_representation(g)?;
    let n = g.n();
    let mut uf: Vec<usize> = (0..n).collect();
    for r in &t.rounds {
        for chain in chain_decomposition(&f, &r.orbit)? {
            for w in chain.windows(2) {
                let (a, b) = (find(&mut uf, w[0]), find(&mut uf, w[1]));
                if a != b {
                    uf[b] = a;
                }
            }
        }
    }
    let mut label: Vec<Option<usize>> = vec![None; n];
    for r in &t.rounds {
        let root = find(&mut uf, r.leader);
        label[root].get_or_insert(r.leader);
    }
    let mut class_of = vec![0; n];
    let mut reps = Vec::new();
    for (v, class) in class_of.iter_mut().enumerate() {
        let root = find(&mut uf, v);
        label[root].get_or_insert(v);
        *class = root;
    }
    for v in 0..n {
        if label[class_of[v]] == Some(v) {
            reps.push(v);
        }
    }
    let (graph, node_map) = g.induced_subgraph(&reps)?;
    let classes = reps
        .iter()
        .map(|&r| (0..n).filter(|&v| class_of[v] == class_of[r]).collect())
        .collect();
    let new = |v: usize| -> usize {
        let rep = label[class_of[v]].expect("every class is labelled");
        node_map.old_to_new[rep].expect("representatives are kept")
    };
    let mut rounds = Vec::new();
    for r in &t.rounds {
        let leader = new(r.leader);
        let mut followers: Vec<usize> = r.orbit.iter().map(|&v| new(v)).filter(|&v| v != leader).collect();
        followers.sort_unstable();
        followers.dedup();
        if followers.is_empty() {
            continue;
        }
        let mut orbit = followers.clone();
        orbit.push(leader);
        orbit.sort_unstable();
        rounds.push(Round {
            leader,
            orbit,
            followers,
            stabilized: Vec::new(),
        });
    }
    Ok(AuxiliaryGraph {
        table: SstTable {
            n: graph.n(),
            rounds,
        },
        graph,
        node_map,
        classes,
    })
}
