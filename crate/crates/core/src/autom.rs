//! Weight-preserving automorphism groups of graphs.
//!
//! Colour refinement (initial colours from weights, then iterated sorted
//! multisets of neighbour colours) followed by an individualization search.
//! The search walks a stabilizer chain: at each level it first collects
//! generators of the stabilizer of the individualized vertex, then looks for
//! one coset representative per orbit of the current cell.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::perm::{GeneratorSet, Permutation};

pub const DEFAULT_AUTOM_CAP: usize = 500;
pub const DEFAULT_SEARCH_BUDGET: usize = 2_000_000;

#[derive(Clone, Copy, Debug)]
pub struct AutomOptions {
    pub node_cap: usize,
    pub search_budget: usize,
}

impl Default for AutomOptions {
    fn default() -> Self {
        AutomOptions {
            node_cap: DEFAULT_AUTOM_CAP,
            search_budget: DEFAULT_SEARCH_BUDGET,
        }
    }
}

/// Node colouring; automorphisms preserve it at every refinement stage.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoredPartition {
    pub color: Vec<usize>,
}

impl ColoredPartition {
    /// Colours by rank of weight.
    pub fn from_weights(g: &Graph) -> Self {
        let mut distinct: Vec<i64> = g.weights().to_vec();
        distinct.sort_unstable();
        distinct.dedup();
        ColoredPartition {
            color: g
                .weights()
                .iter()
                .map(|w| distinct.binary_search(w).expect("present"))
                .collect(),
        }
    }

    pub fn num_colors(&self) -> usize {
        self.color.iter().max().map_or(0, |m| m + 1)
    }

    pub fn is_discrete(&self) -> bool {
        self.num_colors() == self.color.len()
    }

    /// Members of each colour class, indexed by colour.
    pub fn cells(&self) -> Vec<Vec<usize>> {
        let mut cells = vec![Vec::new(); self.num_colors()];
        for (v, &c) in self.color.iter().enumerate() {
            cells[c].push(v);
        }
        cells
    }

    /// Gives `v` a fresh colour larger than all existing ones.
    fn individualize(&self, v: usize) -> Self {
        let mut color = self.color.clone();
        color[v] = self.num_colors();
        ColoredPartition { color }
    }
}

type Signature = (usize, Vec<usize>);

/// One refinement round; returns the new partition and its signature table
/// (the sorted distinct signatures, which define the new colours).
fn refine_step(g: &Graph, p: &ColoredPartition) -> (ColoredPartition, Vec<(Signature, usize)>) {
    let sigs: Vec<Signature> = (0..g.n())
        .map(|v| {
            let mut nb: Vec<usize> = g.neighbors(v).iter().map(|&w| p.color[w]).collect();
            nb.sort_unstable();
            (p.color[v], nb)
        })
        .collect();
    let mut table: Vec<(Signature, usize)> = Vec::new();
    let mut sorted = sigs.clone();
    sorted.sort();
    for s in sorted {
        match table.last_mut() {
            Some((last, count)) if *last == s => *count += 1,
            _ => table.push((s, 1)),
        }
    }
    let color = sigs
        .iter()
        .map(|s| table.binary_search_by(|(t, _)| t.cmp(s)).expect("present"))
        .collect();
    (ColoredPartition { color }, table)
}

/// Refines to the coarsest equitable partition below `p`.
pub fn refine(g: &Graph, p: &ColoredPartition) -> ColoredPartition {
    let mut cur = p.clone();
    loop {
        let (next, _) = refine_step(g, &cur);
        if next.num_colors() == cur.num_colors() {
            return next;
        }
        cur = next;
    }
}

/// Refines two partitions in lockstep; `None` as soon as their signature
/// tables differ (no colour-preserving isomorphism can exist).
fn refine_pair(
    g: &Graph,
    a: &ColoredPartition,
    b: &ColoredPartition,
) -> Option<(ColoredPartition, ColoredPartition)> {
    let (mut a, mut b) = (a.clone(), b.clone());
    loop {
        let (na, ta) = refine_step(g, &a);
        let (nb, tb) = refine_step(g, &b);
        if ta != tb {
            return None;
        }
        if na.num_colors() == a.num_colors() {
            return Some((na, nb));
        }
        a = na;
        b = nb;
    }
}

/// Whether `p` maps edges onto edges and preserves node weights.
pub fn is_automorphism(g: &Graph, p: &Permutation) -> bool {
    if p.degree() != g.n() {
        return false;
    }
    (0..g.n()).all(|v| g.weight(p.image(v)) == g.weight(v))
        && g.edges().iter().all(|&(u, v)| g.has_edge(p.image(u), p.image(v)))
}

/// Target cell for branching: smallest non-singleton cell, ties by colour.
fn branch_cell(p: &ColoredPartition) -> Option<usize> {
    p.cells()
        .iter()
        .enumerate()
        .filter(|(_, c)| c.len() > 1)
        .min_by_key(|(i, c)| (c.len(), *i))
        .map(|(i, _)| i)
}

struct Search<'a> {
    g: &'a Graph,
    budget: usize,
    visited: usize,
    gens: Vec<Permutation>,
}

impl Search<'_> {
    fn tick(&mut self) -> Result<()> {
        self.visited += 1;
        if self.visited > self.budget {
            Err(Error::SearchBudget {
                budget: self.budget,
            })
        } else {
            Ok(())
        }
    }

    /// Collects generators of the automorphisms preserving `left`.
    fn level(&mut self, left: &ColoredPartition) -> Result<()> {
        self.tick()?;
        let left = refine(self.g, left);
        let Some(cell_idx) = branch_cell(&left) else {
            return Ok(());
        };
        let cell = left.cells()[cell_idx].clone();
        let v = cell[0];
        self.level(&left.individualize(v))?;
        for &w in &cell[1..] {
            let n = self.g.n();
            let current = GeneratorSet::new(n, self.gens.clone()).expect("consistent degree");
            if current.orbit(v)?.contains(w) {
                continue;
            }
            if let Some(p) = self.find_iso(&left.individualize(v), &left.individualize(w))? {
                self.gens.push(p);
            }
        }
        Ok(())
    }

    /// Depth-first search for a colour-preserving automorphism mapping the
    /// classes of `a` onto the same-coloured classes of `b`.
    fn find_iso(
        &mut self,
        a: &ColoredPartition,
        b: &ColoredPartition,
    ) -> Result<Option<Permutation>> {
        self.tick()?;
        let Some((a, b)) = refine_pair(self.g, a, b) else {
            return Ok(None);
        };
        if a.is_discrete() {
            let mut images = vec![0; self.g.n()];
            let cells_b = b.cells();
            for (v, &c) in a.color.iter().enumerate() {
                images[v] = cells_b[c][0];
            }
            let p = Permutation::new(images).expect("discrete partitions give a bijection");
            return Ok(is_automorphism(self.g, &p).then_some(p));
        }
        let cell_idx = branch_cell(&a).expect("not discrete");
        let x = a.cells()[cell_idx][0];
        let targets = b.cells()[cell_idx].clone();
        let ax = a.individualize(x);
        for y in targets {
            if let Some(p) = self.find_iso(&ax, &b.individualize(y))? {
                return Ok(Some(p));
            }
        }
        Ok(None)
    }
}

/// Generators of the group of adjacency- and weight-preserving
/// permutations, with default caps.
pub fn automorphism_generators(g: &Graph) -> Result<GeneratorSet> {
    automorphism_generators_with(g, AutomOptions::default())
}

pub fn automorphism_generators_with(g: &Graph, opts: AutomOptions) -> Result<GeneratorSet> {
    if g.n() > opts.node_cap {
        return Err(Error::CapExceeded {
            what: "automorphism search",
            size: g.n(),
            cap: opts.node_cap,
            hint: "; supply a generator file instead",
        });
    }
    let mut search = Search {
        g,
        budget: opts.search_budget,
        visited: 0,
        gens: Vec::new(),
    };
    search.level(&ColoredPartition::from_weights(g))?;
    debug_assert!(search.gens.iter().all(|p| is_automorphism(g, p)));
    GeneratorSet::new(g.n(), search.gens)
}

/// Validates externally supplied generators; returns the index of the
/// first one that is not an automorphism.
pub fn validate_generators(g: &Graph, gens: &GeneratorSet) -> std::result::Result<(), usize> {
    match gens.generators().iter().position(|p| !is_automorphism(g, p)) {
        Some(i) => Err(i),
        None => Ok(()),
    }
}
