//! Constructive equicolorings of root-leaf path sets.
//!
//! A path is identified by its leaf. An equicoloring signs each chosen path
//! `+1` or `-1` so that every node sees a signed path count
//! `delta_v in {0, ±1}`.

use super::forest::ForestRep;
use super::recursion::{recursion_witnesses, reduced_components};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Equicoloring {
    /// Per node: the sign of the path ending there, `0` for non-chosen
    /// leaves and inner nodes.
    pub sign: Vec<i8>,
}

impl Equicoloring {
    /// Signed path count below every node.
    pub fn delta(&self, f: &ForestRep) -> Vec<i64> {
        let mut delta: Vec<i64> = self.sign.iter().map(|&s| s as i64).collect();
        let mut order: Vec<usize> = f.roots().iter().flat_map(|&r| f.subtree(r)).collect();
        order.reverse();
        for v in order {
            if let Some(p) = f.parent(v) {
                delta[p] += delta[v];
            }
        }
        delta
    }

    pub fn is_equicoloring(&self, f: &ForestRep) -> bool {
        self.delta(f).iter().all(|d| d.abs() <= 1)
    }

    pub fn set_sum(&self, f: &ForestRep, s: &[usize]) -> i64 {
        let delta = self.delta(f);
        s.iter().map(|&v| delta[v]).sum()
    }

    pub fn plus(&self) -> Vec<usize> {
        (0..self.sign.len()).filter(|&v| self.sign[v] > 0).collect()
    }

    pub fn minus(&self) -> Vec<usize> {
        (0..self.sign.len()).filter(|&v| self.sign[v] < 0).collect()
    }
}

/// Working tree that may carry extra grouping nodes above real ones.
struct Colorer {
    children: Vec<Vec<usize>>,
    chosen: Vec<bool>,
    sign: Vec<i8>,
}

impl Colorer {
    fn new(f: &ForestRep, paths: &[usize]) -> Self {
        let n = f.n();
        let mut chosen = vec![false; n];
        for &p in paths {
            chosen[p] = true;
        }
        Colorer {
            children: (0..n).map(|v| f.children(v).to_vec()).collect(),
            chosen,
            sign: vec![0; n],
        }
    }

    fn add_node(&mut self, children: Vec<usize>) -> usize {
        self.children.push(children);
        self.chosen.push(false);
        self.sign.push(0);
        self.children.len() - 1
    }

    fn flip(&mut self, v: usize) {
        let mut stack = vec![v];
        while let Some(u) = stack.pop() {
            self.sign[u] = -self.sign[u];
            stack.extend(self.children[u].iter().copied());
        }
    }

    fn delta(&self, v: usize) -> i64 {
        let mut stack = vec![v];
        let mut d = 0;
        while let Some(u) = stack.pop() {
            d += self.sign[u] as i64;
            stack.extend(self.children[u].iter().copied());
        }
        d
    }

    /// Recolors the paths below `v`; returns `(delta_v, sum over S below v)`
    /// in `{(-1,-1), (0,0), (0,1), (1,0), (1,1)}`.
    fn solve_node(&mut self, v: usize, in_s: &[bool]) -> (i64, i64) {
        let member = in_s.get(v).copied().unwrap_or(false);
        if self.children[v].is_empty() {
            if !self.chosen[v] {
                self.sign[v] = 0;
                return (0, 0);
            }
            self.sign[v] = -1;
            if member {
                return (-1, -1);
            }
            self.sign[v] = 1;
            return (1, 0);
        }
        let kids = self.children[v].clone();
        let (delta, sum) = self.solve_group(&kids, in_s);
        if member {
            // path-disjointness leaves nothing of S below v
            (delta, delta)
        } else {
            (delta, sum)
        }
    }

    /// Colors the subtrees below `tops` independently, then aligns them:
    /// components with `delta = sum = ±1` alternate starting with `+`;
    /// components with `delta = ±1, sum = 0` and those with
    /// `delta = 0, sum = ±1` alternate so that both totals stay in `{0, 1}`.
    fn solve_group(&mut self, tops: &[usize], in_s: &[bool]) -> (i64, i64) {
        let results: Vec<(usize, (i64, i64))> = tops.iter().map(|&t| (t, self.solve_node(t, in_s))).collect();
        let mut paired = Vec::new();
        let mut root_only = Vec::new();
        let mut sum_only = Vec::new();
        for (t, (d, s)) in results {
            match (d, s) {
                (0, 0) => {}
                (d, s) if d == s => paired.push((t, d)),
                (d, 0) => root_only.push((t, d)),
                (0, s) => sum_only.push((t, s)),
                _ => unreachable!("component result outside the allowed classes"),
            }
        }
        let mut delta = 0;
        let mut sum = 0;
        for (i, &(t, d)) in paired.iter().enumerate() {
            let want = if i % 2 == 0 { 1 } else { -1 };
            if d != want {
                self.flip(t);
            }
            delta += want;
            sum += want;
        }
        let mut want = if delta == 0 { 1 } else { -1 };
        for &(t, d) in &root_only {
            if d != want {
                self.flip(t);
            }
            delta += want;
            want = -want;
        }
        let mut want = if sum == 0 { 1 } else { -1 };
        for &(t, s) in &sum_only {
            if s != want {
                self.flip(t);
            }
            sum += want;
            want = -want;
        }
        debug_assert!((0..=1).contains(&delta) && (0..=1).contains(&sum));
        (delta, sum)
    }
}

fn validate_paths(f: &ForestRep, paths: &[usize]) -> Result<()> {
    for &p in paths {
        if p >= f.n() {
            return Err(Error::PointOutOfRange { point: p + 1, n: f.n() });
        }
        if !f.is_leaf(p) {
            return Err(Error::InvalidInput(format!("path end {} is not a leaf", p + 1)));
        }
    }
    Ok(())
}

fn require_paths_below(f: &ForestRep, paths: &[usize], s: &[usize]) -> Result<()> {
    for &v in s {
        if !paths.iter().any(|&p| f.is_ancestor_or_self(v, p)) {
            return Err(Error::InvalidInput(format!("no chosen path passes through node {}", v + 1)));
        }
    }
    Ok(())
}

fn membership(n: usize, s: &[usize]) -> Vec<bool> {
    let mut m = vec![false; n];
    for &v in s {
        m[v] = true;
    }
    m
}

/// Equicoloring of the chosen paths of the tree rooted at `root` such that
/// the signed counts over `s` sum to `-1` when `delta_root = -1` and to 0 or
/// 1 otherwise. `s` must be non-empty, path-disjoint, and every node of `s`
/// must lie on a chosen path.
pub fn equicolor_tree_paths(f: &ForestRep, root: usize, paths: &[usize], s: &[usize]) -> Result<Equicoloring> {
    if root >= f.n() || f.parent(root).is_some() {
        return Err(Error::InvalidInput(format!("node {} is not a root", root + 1)));
    }
    validate_paths(f, paths)?;
    if s.is_empty() {
        return Err(Error::InvalidInput("the node set must be non-empty".into()));
    }
    if !f.is_path_disjoint(s) {
        return Err(Error::NotPathDisjoint(format!("{:?}", s.iter().map(|v| v + 1).collect::<Vec<_>>())));
    }
    let in_tree: Vec<usize> = paths.iter().copied().filter(|&p| f.root_of(p) == root).collect();
    if s.iter().any(|&v| f.root_of(v) != root) {
        return Err(Error::InvalidInput("node set leaves the tree".into()));
    }
    require_paths_below(f, &in_tree, s)?;
    let mut c = Colorer::new(f, &in_tree);
    c.solve_node(root, &membership(f.n(), s));
    Ok(Equicoloring { sign: c.sign })
}

/// Equicoloring of the chosen paths with every `sum_{v in S_i} delta_v` in
/// `{0, ±1}`, for sets with the recursion property.
///
/// Colors for `S_1` first; each later set lives in a reduced forest
/// avoiding the earlier sets, which is recolored on its own and flipped if
/// needed so the signed count at its (grouping) top is unchanged.
pub fn equicolor_recursive(f: &ForestRep, sets: &[Vec<usize>], paths: &[usize]) -> Result<Equicoloring> {
    validate_paths(f, paths)?;
    let witnesses = recursion_witnesses(f, sets)?;
    for s in sets {
        require_paths_below(f, paths, s)?;
    }
    let n = f.n();
    let mut c = Colorer::new(f, paths);
    let top = c.add_node(f.roots().to_vec());
    let mut parent: Vec<usize> = (0..n).map(|v| f.parent(v).unwrap_or(top)).collect();
    parent.push(top);

    // one grouping node per later set, nested where they share an anchor
    let mut groups = Vec::new();
    let mut union: Vec<usize> = Vec::new();
    for (i, d) in witnesses.iter().enumerate() {
        union.extend(sets[i].iter().copied());
        let tops = reduced_components(f, *d, &union);
        if tops.is_empty() || sets[i + 1].is_empty() {
            groups.push(None);
            continue;
        }
        let anchor = parent[tops[0]];
        let g = c.add_node(tops.clone());
        parent.push(anchor);
        c.children[anchor].retain(|x| !tops.contains(x));
        c.children[anchor].push(g);
        for &t in &tops {
            parent[t] = g;
        }
        groups.push(Some(g));
    }

    let total = c.children.len();
    let first = sets.first().map_or(&[][..], |s| s.as_slice());
    c.solve_node(top, &membership(total, first));
    for (i, g) in groups.iter().enumerate() {
        let Some(g) = *g else { continue };
        let before = c.delta(g);
        let (after, _) = c.solve_node(g, &membership(total, &sets[i + 1]));
        if after != before {
            c.flip(g);
        }
        if c.delta(g) != before {
            return Err(Error::RecursionProperty(format!(
                "could not match the signed count above set {}",
                i + 2
            )));
        }
    }
    c.sign.truncate(n);
    Ok(Equicoloring { sign: c.sign })
}
