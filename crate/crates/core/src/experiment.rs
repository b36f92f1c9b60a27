//! Per-instance pipeline statistics: symmetry detection, table, presolve
//! ratios and solver comparisons.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::Serialize;

use crate::autom::automorphism_generators;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::perm::GeneratorSet;
use crate::presolve::{sst_presolve, PresolveOptions};
use crate::solver::branch_and_bound_max_stable;
use crate::sst::{
    build_sst_table, build_stringent_sst_table, sst_clique_cuts, OrbitRule, SstCliqueCut, SstTable,
    DEFAULT_MAX_ROUNDS,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CutKind {
    Plain,
    Clique,
}

impl FromStr for CutKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "plain" => Ok(CutKind::Plain),
            "clique" => Ok(CutKind::Clique),
            other => Err(Error::InvalidInput(format!("cut kind must be 'plain' or 'clique', got {other:?}"))),
        }
    }
}

impl fmt::Display for CutKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CutKind::Plain => "plain",
            CutKind::Clique => "clique",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PipelineConfig {
    pub orbit_rule: OrbitRule,
    pub stringent: bool,
    pub max_rounds: usize,
    pub use_addition: bool,
    pub fixpoint: bool,
    pub cut_kind: CutKind,
    /// Run the branch-and-bound comparisons.
    pub solve: bool,
}

impl Default for PipelineConfig {
    fn default() -> Self {
        PipelineConfig {
            orbit_rule: OrbitRule::Min,
            stringent: false,
            max_rounds: DEFAULT_MAX_ROUNDS,
            use_addition: false,
            fixpoint: false,
            cut_kind: CutKind::Plain,
            solve: true,
        }
    }
}

pub fn build_table(gens: &GeneratorSet, cfg: &PipelineConfig) -> Result<SstTable> {
    if cfg.stringent {
        build_stringent_sst_table(gens, cfg.orbit_rule, cfg.max_rounds)
    } else {
        build_sst_table(gens, cfg.orbit_rule, cfg.max_rounds)
    }
}

pub fn table_cuts(t: &SstTable, g: &Graph, kind: CutKind) -> Vec<SstCliqueCut> {
    match kind {
        CutKind::Plain => t.plain_cuts(),
        CutKind::Clique => sst_clique_cuts(t, g),
    }
}

/// Wall-clock milliseconds of the pipeline stages.
#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize)]
pub struct StageTimes {
    pub symmetry_ms: f64,
    pub presolve_ms: f64,
    pub solve_raw_ms: f64,
    pub solve_presolved_ms: f64,
    pub solve_cuts_ms: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct InstanceReport {
    pub instance: String,
    pub n: usize,
    pub m: usize,
    pub generators: usize,
    pub rounds: usize,
    pub cuts: usize,
    pub removed_nodes: usize,
    /// Remaining fraction of nodes.
    pub nodes: f64,
    /// Remaining fraction of edges after deletion.
    pub edges: f64,
    /// Remaining fraction of edges after deletion and addition.
    pub edges_plus: f64,
    pub value: Option<i64>,
    pub value_presolved: Option<i64>,
    pub value_cuts: Option<i64>,
    pub values_agree: Option<bool>,
    pub bb_nodes_raw: Option<u64>,
    pub bb_nodes_cuts: Option<u64>,
    pub times: StageTimes,
}

fn ms(start: Instant) -> f64 {
    start.elapsed().as_secs_f64() * 1e3
}

/// Runs the pipeline on one instance. Generators are computed when not
/// supplied.
pub fn run_instance(name: &str, g: &Graph, gens: Option<GeneratorSet>, cfg: &PipelineConfig) -> Result<InstanceReport> {
    let mut times = StageTimes::default();
    let t0 = Instant::now();
    let gens = match gens {
        Some(gs) => gs,
        None => automorphism_generators(g)?,
    };
    let table = build_table(&gens, cfg)?;
    times.symmetry_ms = ms(t0);

    let t0 = Instant::now();
    let pairs = table.pairs();
    let opts = PresolveOptions {
        use_addition: cfg.use_addition,
        fixpoint: cfg.fixpoint,
    };
    let pre = sst_presolve(g, &pairs, opts)?;
    times.presolve_ms = ms(t0);

    let cuts = table_cuts(&table, g, cfg.cut_kind);
    let mut report = InstanceReport {
        instance: name.to_string(),
        n: g.n(),
        m: g.edge_count(),
        generators: gens.generators().len(),
        rounds: table.rounds.len(),
        cuts: cuts.len(),
        removed_nodes: pre.removed_nodes.len(),
        nodes: pre.stats.nodes,
        edges: pre.stats.edges,
        edges_plus: pre.stats.edges_plus,
        value: None,
        value_presolved: None,
        value_cuts: None,
        values_agree: None,
        bb_nodes_raw: None,
        bb_nodes_cuts: None,
        times,
    };
    if cfg.solve {
        let t0 = Instant::now();
        let raw = branch_and_bound_max_stable(g, &[])?;
        report.times.solve_raw_ms = ms(t0);
        let t0 = Instant::now();
        let reduced = branch_and_bound_max_stable(&pre.reduced_graph, &[])?;
        report.times.solve_presolved_ms = ms(t0);
        let t0 = Instant::now();
        let with_cuts = branch_and_bound_max_stable(g, &cuts)?;
        report.times.solve_cuts_ms = ms(t0);
        report.value = Some(raw.value);
        report.value_presolved = Some(reduced.value);
        report.value_cuts = Some(with_cuts.value);
        report.values_agree = Some(raw.value == reduced.value && raw.value == with_cuts.value);
        report.bb_nodes_raw = Some(raw.nodes_explored);
        report.bb_nodes_cuts = Some(with_cuts.nodes_explored);
    }
    Ok(report)
}

/// Plain geometric mean of the positive entries; `None` if there are none.
pub fn geometric_mean(values: impl IntoIterator<Item = f64>) -> Option<f64> {
    let (sum, count) = values
        .into_iter()
        .filter(|v| *v > 0.0)
        .fold((0.0, 0usize), |(s, c), v| (s + v.ln(), c + 1));
    (count > 0).then(|| (sum / count as f64).exp())
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Summary {
    pub instances: usize,
    pub nodes: Option<f64>,
    pub edges: Option<f64>,
    pub edges_plus: Option<f64>,
    pub all_values_agree: bool,
    pub times: StageTimes,
}

pub fn summarize(reports: &[InstanceReport]) -> Summary {
    let gm = |f: &dyn Fn(&InstanceReport) -> f64| geometric_mean(reports.iter().map(f));
    let gm_time = |f: &dyn Fn(&StageTimes) -> f64| gm(&|r: &InstanceReport| f(&r.times)).unwrap_or(0.0);
    Summary {
        instances: reports.len(),
        nodes: gm(&|r| r.nodes),
        edges: gm(&|r| r.edges),
        edges_plus: gm(&|r| r.edges_plus),
        all_values_agree: reports.iter().all(|r| r.values_agree != Some(false)),
        times: StageTimes {
            symmetry_ms: gm_time(&|t| t.symmetry_ms),
            presolve_ms: gm_time(&|t| t.presolve_ms),
            solve_raw_ms: gm_time(&|t| t.solve_raw_ms),
            solve_presolved_ms: gm_time(&|t| t.solve_presolved_ms),
            solve_cuts_ms: gm_time(&|t| t.solve_cuts_ms),
        },
    }
}
