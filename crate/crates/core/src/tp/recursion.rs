use super::forest::ForestRep;
use crate::error::{Error, Result};
use crate::sst::is_laminar;

fn mask(n: usize, nodes: &[usize]) -> Vec<bool> {
    let mut m = vec![false; n];
    for &v in nodes {
        m[v] = true;
    }
    m
}

fn subtree_hits(f: &ForestRep, top: usize, m: &[bool]) -> bool {
    f.subtree(top).into_iter().any(|v| m[v])
}

/// Tops of the components of `T_d(U)`: children of `d` (of the forest's
/// virtual top when `d` is `None`) whose subtrees avoid `u`.
pub fn reduced_components(f: &ForestRep, d: Option<usize>, u: &[usize]) -> Vec<usize> {
    let m = mask(f.n(), u);
    let below: &[usize] = match d {
        Some(d) => f.children(d),
        None => f.roots(),
    };
    below.iter().copied().filter(|&c| !subtree_hits(f, c, &m)).collect()
}

fn covered_by(f: &ForestRep, tops: &[usize], s: &[usize]) -> bool {
    let mut under = vec![false; f.n()];
    for &t in tops {
        for v in f.subtree(t) {
            under[v] = true;
        }
    }
    s.iter().all(|&v| under[v])
}

fn validate_sets(f: &ForestRep, sets: &[Vec<usize>]) -> Result<()> {
    let mut seen = vec![false; f.n()];
    for (i, s) in sets.iter().enumerate() {
        for &v in s {
            if v >= f.n() {
                return Err(Error::PointOutOfRange {
                    point: v + 1,
                    n: f.n(),
                });
            }
            if seen[v] {
                return Err(Error::RecursionProperty(format!("node {} lies in two sets", v + 1)));
            }
            seen[v] = true;
        }
        if !f.is_path_disjoint(s) {
            return Err(Error::NotPathDisjoint(format!("set {}", i + 1)));
        }
    }
    Ok(())
}

/// Nodes `d^1, ..., d^{k-1}` certifying the recursion property: `S_{i+1}`
/// lies in `T_{d^i}(S_1 ∪ ... ∪ S_i)`, with `d^i` an ancestor (or member)
/// of that union. `None` stands for a virtual node above all roots.
pub fn recursion_witnesses(f: &ForestRep, sets: &[Vec<usize>]) -> Result<Vec<Option<usize>>> {
    validate_sets(f, sets)?;
    let mut out = Vec::new();
    let mut union: Vec<usize> = Vec::new();
    for (i, window) in sets.windows(2).enumerate() {
        union.extend(window[0].iter().copied());
        let next = &window[1];
        let um = mask(f.n(), &union);
        let candidates = (0..f.n())
            .filter(|&d| subtree_hits(f, d, &um))
            .map(Some)
            .chain(std::iter::once(None));
        let mut found = None;
        for d in candidates {
            if covered_by(f, &reduced_components(f, d, &union), next) {
                found = Some(d);
                break;
            }
        }
        match found {
            Some(d) => out.push(d),
            None => {
                return Err(Error::RecursionProperty(format!(
                    "set {} is not contained in any reduced forest of the earlier sets",
                    i + 2
                )))
            }
        }
    }
    Ok(out)
}

/// Pairwise disjoint, path-disjoint sets with the recursion property, in
/// the given order.
pub fn check_recursion_property(f: &ForestRep, sets: &[Vec<usize>]) -> bool {
    recursion_witnesses(f, sets).is_ok()
}

/// Laminar recursion property: each set keeps a node `u_S` outside all of
/// its proper subsets in the family, and the maximal sets (in order of first
/// appearance) have the recursion property. Returns the `u_S`, chosen as
/// the smallest eligible node, or `None` if the property fails.
pub fn check_laminar_recursion_property(f: &ForestRep, family: &[Vec<usize>]) -> Option<Vec<usize>> {
    let sorted: Vec<Vec<usize>> = family
        .iter()
        .map(|s| {
            let mut s = s.clone();
            s.sort_unstable();
            s.dedup();
            s
        })
        .collect();
    if !is_laminar(&sorted) || sorted.iter().any(|s| !f.is_path_disjoint(s)) {
        return None;
    }
    let subset = |a: &Vec<usize>, b: &Vec<usize>| a.iter().all(|x| b.binary_search(x).is_ok());
    let mut witnesses = Vec::new();
    for s in &sorted {
        let u = s.iter().copied().find(|&v| {
            !sorted
                .iter()
                .any(|t| t.len() < s.len() && subset(t, s) && t.binary_search(&v).is_ok())
        })?;
        witnesses.push(u);
    }
    let mut maximal: Vec<Vec<usize>> = Vec::new();
    for s in &sorted {
        let dominated = sorted.iter().any(|t| t.len() > s.len() && subset(s, t));
        if !dominated && !maximal.contains(s) {
            maximal.push(s.clone());
        }
    }
    check_recursion_property(f, &maximal).then_some(witnesses)
}
