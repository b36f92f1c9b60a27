use crate::error::{Error, Result};
use crate::graph::Graph;

/// Rooted forest whose ancestor pairs are exactly the edges of a trivially
/// perfect graph. A root-leaf path is identified by its leaf.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ForestRep {
    parent: Vec<Option<usize>>,
    children: Vec<Vec<usize>>,
    roots: Vec<usize>,
}

impl ForestRep {
    /// Validates parent pointers (range, acyclicity).
    pub fn from_parents(parent: Vec<Option<usize>>) -> Result<Self> {
        let n = parent.len();
        let mut children = vec![Vec::new(); n];
        let mut roots = Vec::new();
        for (v, p) in parent.iter().enumerate() {
            match *p {
                Some(u) if u >= n => return Err(Error::PointOutOfRange { point: u + 1, n }),
                Some(u) if u == v => {
                    return Err(Error::InvalidInput(format!("node {} is its own parent", v + 1)))
                }
                Some(u) => children[u].push(v),
                None => roots.push(v),
            }
        }
        let f = ForestRep {
            parent,
            children,
            roots,
        };
        let mut seen = 0;
        let mut stack = f.roots.clone();
        while let Some(v) = stack.pop() {
            seen += 1;
            stack.extend(f.children[v].iter().copied());
        }
        if seen != n {
            return Err(Error::InvalidInput("parent pointers contain a cycle".into()));
        }
        Ok(f)
    }

    pub fn n(&self) -> usize {
        self.parent.len()
    }

    pub fn parent(&self, v: usize) -> Option<usize> {
        self.parent[v]
    }

    pub fn parents(&self) -> &[Option<usize>] {
        &self.parent
    }

    pub fn children(&self, v: usize) -> &[usize] {
        &self.children[v]
    }

    pub fn roots(&self) -> &[usize] {
        &self.roots
    }

    pub fn is_leaf(&self, v: usize) -> bool {
        self.children[v].is_empty()
    }

    pub fn leaves(&self) -> Vec<usize> {
        (0..self.n()).filter(|&v| self.is_leaf(v)).collect()
    }

    pub fn root_of(&self, mut v: usize) -> usize {
        while let Some(u) = self.parent[v] {
            v = u;
        }
        v
    }

    /// Whether `a` is `b` or an ancestor of `b`.
    pub fn is_ancestor_or_self(&self, a: usize, b: usize) -> bool {
        let mut cur = Some(b);
        while let Some(v) = cur {
            if v == a {
                return true;
            }
            cur = self.parent[v];
        }
        false
    }

    /// Nodes from the root down to `v`.
    pub fn path_from_root(&self, v: usize) -> Vec<usize> {
        let mut path = vec![v];
        let mut cur = v;
        while let Some(u) = self.parent[cur] {
            path.push(u);
            cur = u;
        }
        path.reverse();
        path
    }

    /// `v` and everything below it, in preorder.
    pub fn subtree(&self, v: usize) -> Vec<usize> {
        let mut out = Vec::new();
        let mut stack = vec![v];
        while let Some(u) = stack.pop() {
            out.push(u);
            stack.extend(self.children[u].iter().rev().copied());
        }
        out
    }

    /// Leaves below `v`: the root-leaf paths through `v`.
    pub fn paths_through(&self, v: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self.subtree(v).into_iter().filter(|&u| self.is_leaf(u)).collect();
        out.sort_unstable();
        out
    }

    /// Node sets of all root-leaf paths, each sorted, listed by leaf.
    pub fn root_leaf_paths(&self) -> Vec<Vec<usize>> {
        self.leaves()
            .into_iter()
            .map(|l| {
                let mut p = self.path_from_root(l);
                p.sort_unstable();
                p
            })
            .collect()
    }

    /// Whether no two nodes of `s` lie on a common root-leaf path.
    pub fn is_path_disjoint(&self, s: &[usize]) -> bool {
        s.iter().enumerate().all(|(i, &a)| {
            s[i + 1..]
                .iter()
                .all(|&b| !self.is_ancestor_or_self(a, b) && !self.is_ancestor_or_self(b, a))
        })
    }

    pub fn to_graph(&self) -> Graph {
        Graph::from_forest(&self.parent).expect("validated forest")
    }
}

/// Builds a forest representation by peeling universal vertices: each
/// connected piece must have a node adjacent to all others; those nodes form
/// a chain (smallest index on top) above the pieces left after removing them.
pub fn forest_representation(g: &Graph) -> Result<ForestRep> {
    let n = g.n();
    let mut parent = vec![None; n];
    // (piece, attachment point)
    let mut work: Vec<(Vec<usize>, Option<usize>)> = components(g, &(0..n).collect::<Vec<_>>())
        .into_iter()
        .map(|c| (c, None))
        .collect();
    let mut in_piece = vec![false; n];
    while let Some((piece, above)) = work.pop() {
        for &v in &piece {
            in_piece[v] = true;
        }
        let universal: Vec<usize> = piece
            .iter()
            .copied()
            .filter(|&v| g.neighbors(v).iter().filter(|&&w| in_piece[w]).count() == piece.len() - 1)
            .collect();
        for &v in &piece {
            in_piece[v] = false;
        }
        if universal.is_empty() {
            return Err(Error::NotTriviallyPerfect);
        }
        let mut last = above;
        for &u in &universal {
            parent[u] = last;
            last = Some(u);
        }
        let rest: Vec<usize> = piece.into_iter().filter(|v| !universal.contains(v)).collect();
        for c in components(g, &rest) {
            work.push((c, last));
        }
    }
    ForestRep::from_parents(parent)
}

pub fn is_trivially_perfect(g: &Graph) -> bool {
    forest_representation(g).is_ok()
}

/// Connected components of `g[nodes]`, each sorted, ordered by smallest node.
fn components(g: &Graph, nodes: &[usize]) -> Vec<Vec<usize>> {
    let mut member = vec![false; g.n()];
    for &v in nodes {
        member[v] = true;
    }
    let mut sorted = nodes.to_vec();
    sorted.sort_unstable();
    let mut seen = vec![false; g.n()];
    let mut out = Vec::new();
    for &s in &sorted {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut comp = vec![s];
        let mut i = 0;
        while i < comp.len() {
            let v = comp[i];
            i += 1;
            for &w in g.neighbors(v) {
                if member[w] && !seen[w] {
                    seen[w] = true;
                    comp.push(w);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// Top of the maximal chain through `v`: the highest ancestor reachable
/// through parents that have `v`'s branch as their only child.
fn chain_top(f: &ForestRep, v: usize) -> usize {
    let mut u = v;
    while let Some(p) = f.parent(u) {
        if f.children(p).len() != 1 {
            break;
        }
        u = p;
    }
    u
}

/// Splits `orbit` into chains: its intersections with the maximal chains of
/// the forest (runs `v1 -> v2 -> ...` where every node but the last has
/// exactly one child), each listed top-down. Nodes of one forest chain are
/// closed twins, so an orbit meets every chain it touches equally often.
pub fn chain_decomposition(f: &ForestRep, orbit: &[usize]) -> Result<Vec<Vec<usize>>> {
    for &v in orbit {
        if v >= f.n() {
            return Err(Error::PointOutOfRange {
                point: v + 1,
                n: f.n(),
            });
        }
    }
    let mut sorted = orbit.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    let mut chains: Vec<(usize, Vec<usize>)> = Vec::new();
    for &v in &sorted {
        let top = chain_top(f, v);
        match chains.iter_mut().find(|(t, _)| *t == top) {
            Some((_, c)) => c.push(v),
            None => chains.push((top, vec![v])),
        }
    }
    let mut chains: Vec<Vec<usize>> = chains
        .into_iter()
        .map(|(_, mut c)| {
            c.sort_by_key(|&v| f.path_from_root(v).len());
            c
        })
        .collect();
    chains.sort_by_key(|c| c[0]);
    let mut lengths: Vec<usize> = chains.iter().map(|c| c.len()).collect();
    lengths.dedup();
    if lengths.len() > 1 {
        return Err(Error::UnequalChains {
            lengths: chains.iter().map(|c| c.len()).collect(),
        });
    }
    Ok(chains)
}
