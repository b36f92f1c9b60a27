use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;
use sst_core::experiment::{build_table, run_instance, summarize, table_cuts, CutKind, InstanceReport, Summary};
use sst_core::graph::write_dimacs;
use sst_core::instances::{copies_family, random_symmetric_tp_graph, synthetic_family};
use sst_core::tp::{extended_clique_matrix, is_tu_determinant, is_tu_ghouila_houri, TuWitness};
use sst_core::{
    automorphism_generators, branch_and_bound_max_stable, is_automorphism, sst_presolve, ExtendedMatrix, GeneratorSet,
    Graph, Permutation, PresolveOptions, TuConfig, TuReport,
};

use crate::io::{emit, read_graph, read_text, to_json, write_atomic, CliError, CliResult, NEGATIVE};
use crate::{Command, Common, Family};

pub fn run(command: Command) -> CliResult<ExitCode> {
    match command {
        Command::Symmetries { graph, common } => symmetries(&graph, &common),
        Command::Table { graph, common, pipeline } => {
            let g = read_graph(&graph)?;
            let gens = generators(&g, &common)?;
            let cfg = pipeline.config(false);
            let t = build_table(&gens, &cfg)?;
            let clique_graph = (cfg.cut_kind == CutKind::Clique).then_some(&g);
            emit(common.output.as_deref(), &to_json(&t.to_json(clique_graph)))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Presolve { graph, common, pipeline } => presolve(&graph, &common, &pipeline.config(false)),
        Command::CheckTu {
            graph,
            matrix,
            no_cuts,
            deletion,
            det_cap,
            gh_cap,
            common,
            pipeline,
        } => {
            let m = match (graph, matrix) {
                (_, Some(path)) => ExtendedMatrix::parse(&read_text(&path)?)
                    .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?,
                (Some(path), None) => {
                    let g = read_graph(&path)?;
                    let cuts = if no_cuts {
                        Vec::new()
                    } else {
                        let cfg = pipeline.config(false);
                        let t = build_table(&generators(&g, &common)?, &cfg)?;
                        table_cuts(&t, &g, cfg.cut_kind)
                    };
                    extended_clique_matrix(&g, &cuts, deletion)?
                }
                (None, None) => return Err(CliError::Input("either a graph or --matrix is required".into())),
            };
            let cfg = TuConfig {
                det_cap,
                gh_cap,
                reduce: true,
            };
            check_tu(&m, &cfg, &common)
        }
        Command::Solve {
            graph,
            with_cuts,
            presolve,
            common,
            pipeline,
        } => solve(&graph, with_cuts, presolve, &common, &pipeline.config(true)),
        Command::Bench {
            dir,
            no_solve,
            common,
            pipeline,
        } => bench(&dir, &common, &pipeline.config(!no_solve)),
        Command::Generate {
            family,
            count,
            max_nodes,
            output,
            seed,
        } => generate(family, count, max_nodes, &output, seed),
    }
}

fn is_comment(line: &str) -> bool {
    line.is_empty() || line.starts_with('#') || line == "c" || line.starts_with("c ")
}

/// Reads generators from a cycle-notation file, rejecting the first line
/// that is not an automorphism of `g`.
fn read_generators(path: &Path, g: &Graph) -> CliResult<GeneratorSet> {
    let text = read_text(path)?;
    let mut gens = Vec::new();
    for (k, line) in text.lines().enumerate() {
        let t = line.trim();
        if is_comment(t) {
            continue;
        }
        let at = |msg: String| CliError::Input(format!("{}:{}: {msg}", path.display(), k + 1));
        let p = Permutation::parse_cycles(t, g.n()).map_err(|e| at(e.to_string()))?;
        if !is_automorphism(g, &p) {
            return Err(at(format!("{t} is not an automorphism of the graph")));
        }
        gens.push(p);
    }
    Ok(GeneratorSet::new(g.n(), gens)?)
}

fn generators(g: &Graph, common: &Common) -> CliResult<GeneratorSet> {
    match &common.symmetry_file {
        Some(path) => read_generators(path, g),
        None => Ok(automorphism_generators(g)?),
    }
}

fn one_based(v: &[usize]) -> Vec<usize> {
    v.iter().map(|x| x + 1).collect()
}

#[derive(Serialize)]
struct SymmetryReport {
    n: usize,
    generators: usize,
    /// Decimal string; absent when it overflows.
    #[serde(skip_serializing_if = "Option::is_none")]
    order: Option<String>,
    orbits: Vec<Vec<usize>>,
}

fn symmetries(graph: &Path, common: &Common) -> CliResult<ExitCode> {
    let g = read_graph(graph)?;
    let gens = generators(&g, common)?;
    let report = SymmetryReport {
        n: g.n(),
        generators: gens.generators().len(),
        order: gens.order().map(|o| o.to_string()),
        orbits: gens
            .orbits()
            .into_iter()
            .filter(|o| o.len() > 1)
            .map(|o| one_based(&o.members))
            .collect(),
    };
    emit(common.output.as_deref(), &gens.to_text())?;
    if let Some(path) = &common.json {
        write_atomic(path, to_json(&report).as_bytes())?;
    }
    Ok(ExitCode::SUCCESS)
}

#[derive(Serialize)]
struct PresolveReport {
    n: usize,
    m: usize,
    rounds: usize,
    pairs: usize,
    removed_nodes: Vec<usize>,
    added_edges: Vec<(usize, usize)>,
    reduced_n: usize,
    reduced_m: usize,
    nodes: f64,
    edges: f64,
    edges_plus: f64,
}

fn presolve(graph: &Path, common: &Common, cfg: &sst_core::experiment::PipelineConfig) -> CliResult<ExitCode> {
    let g = read_graph(graph)?;
    let t = build_table(&generators(&g, common)?, cfg)?;
    let pairs = t.pairs();
    let res = sst_presolve(
        &g,
        &pairs,
        PresolveOptions {
            use_addition: cfg.use_addition,
            fixpoint: cfg.fixpoint,
        },
    )?;
    let report = PresolveReport {
        n: g.n(),
        m: g.edge_count(),
        rounds: t.rounds.len(),
        pairs: pairs.len(),
        removed_nodes: one_based(&res.removed_nodes),
        added_edges: res.added_edges.iter().map(|&(u, v)| (u + 1, v + 1)).collect(),
        reduced_n: res.reduced_graph.n(),
        reduced_m: res.reduced_graph.edge_count(),
        nodes: res.stats.nodes,
        edges: res.stats.edges,
        edges_plus: res.stats.edges_plus,
    };
    if let Some(path) = &common.output {
        write_atomic(path, write_dimacs(&res.reduced_graph).as_bytes())?;
    }
    emit(common.json.as_deref(), &to_json(&report))?;
    Ok(ExitCode::SUCCESS)
}

fn one_based_witness(w: Option<TuWitness>) -> Option<TuWitness> {
    w.map(|w| match w {
        TuWitness::Submatrix { rows, cols, det } => TuWitness::Submatrix {
            rows: one_based(&rows),
            cols: one_based(&cols),
            det,
        },
        TuWitness::Unbalanced { axis, lines } => TuWitness::Unbalanced {
            axis,
            lines: one_based(&lines),
        },
    })
}

#[derive(Serialize)]
struct TuVerdict {
    rows: usize,
    cols: usize,
    is_tu: bool,
    determinant: TuReport,
    ghouila_houri: TuReport,
}

fn check_tu(m: &ExtendedMatrix, cfg: &TuConfig, common: &Common) -> CliResult<ExitCode> {
    let mut det = is_tu_determinant(m, cfg)?;
    let mut gh = is_tu_ghouila_houri(m, cfg)?;
    if det.is_tu != gh.is_tu {
        return Err(CliError::Internal(format!(
            "checkers disagree: determinant says {}, equicoloring says {}",
            det.is_tu, gh.is_tu
        )));
    }
    det.witness = one_based_witness(det.witness);
    gh.witness = one_based_witness(gh.witness);
    let verdict = TuVerdict {
        rows: m.rows(),
        cols: m.cols(),
        is_tu: det.is_tu,
        determinant: det,
        ghouila_houri: gh,
    };
    if let Some(path) = &common.output {
        write_atomic(path, to_json(m).as_bytes())?;
    }
    emit(common.json.as_deref(), &to_json(&verdict))?;
    Ok(if verdict.is_tu {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(NEGATIVE)
    })
}

#[derive(Serialize)]
struct SolveReport {
    value: i64,
    members: Vec<usize>,
    nodes_explored: u64,
    cuts: usize,
    removed_nodes: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    wall_ms: Option<f64>,
}

fn solve(
    graph: &Path,
    with_cuts: bool,
    presolve: bool,
    common: &Common,
    cfg: &sst_core::experiment::PipelineConfig,
) -> CliResult<ExitCode> {
    let g = read_graph(graph)?;
    let table = if with_cuts || presolve {
        Some(build_table(&generators(&g, common)?, cfg)?)
    } else {
        None
    };
    let start = Instant::now();
    let report = match (&table, presolve) {
        (Some(t), true) => {
            let opts = PresolveOptions {
                use_addition: cfg.use_addition,
                fixpoint: cfg.fixpoint,
            };
            let res = sst_presolve(&g, &t.pairs(), opts)?;
            let sol = branch_and_bound_max_stable(&res.reduced_graph, &[])?;
            SolveReport {
                value: sol.value,
                members: one_based(&res.lift(&sol.members)),
                nodes_explored: sol.nodes_explored,
                cuts: 0,
                removed_nodes: res.removed_nodes.len(),
                wall_ms: None,
            }
        }
        _ => {
            let cuts = table.as_ref().map(|t| table_cuts(t, &g, cfg.cut_kind)).unwrap_or_default();
            let sol = branch_and_bound_max_stable(&g, &cuts)?;
            SolveReport {
                value: sol.value,
                members: one_based(&sol.members),
                nodes_explored: sol.nodes_explored,
                cuts: cuts.len(),
                removed_nodes: 0,
                wall_ms: None,
            }
        }
    };
    let report = SolveReport {
        wall_ms: common.timing.then(|| start.elapsed().as_secs_f64() * 1e3),
        ..report
    };
    emit(common.json.as_deref(), &to_json(&report))?;
    Ok(ExitCode::SUCCESS)
}

fn graph_files(dir: &Path) -> CliResult<Vec<PathBuf>> {
    let entries = std::fs::read_dir(dir).map_err(|e| CliError::Io(dir.to_path_buf(), e))?;
    let mut files = Vec::new();
    for entry in entries {
        let path = entry.map_err(|e| CliError::Io(dir.to_path_buf(), e))?.path();
        let ext = path.extension().and_then(|e| e.to_str());
        if path.is_file() && matches!(ext, Some("col" | "dimacs")) {
            files.push(path);
        }
    }
    files.sort_by(|a, b| a.file_name().cmp(&b.file_name()));
    if files.is_empty() {
        return Err(CliError::Input(format!("{}: no .col or .dimacs files", dir.display())));
    }
    Ok(files)
}

fn bench_instance(path: &Path, cfg: &sst_core::experiment::PipelineConfig) -> CliResult<InstanceReport> {
    let g = read_graph(path)?;
    let sym = path.with_extension("sym");
    let gens = if sym.is_file() { Some(read_generators(&sym, &g)?) } else { None };
    let name = path.file_name().map(|n| n.to_string_lossy().into_owned()).unwrap_or_default();
    run_instance(&name, &g, gens, cfg).map_err(|e| match e {
        sst_core::Error::CapExceeded { .. } | sst_core::Error::SearchBudget { .. } => CliError::Core(e),
        other => CliError::Input(format!("{name}: {other}")),
    })
}

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

fn ratio(v: f64) -> String {
    format!("{v:.6}")
}

fn bench_csv(reports: &[InstanceReport], summary: &Summary, timing: bool) -> CliResult<String> {
    let mut header = vec![
        "instance",
        "n",
        "m",
        "generators",
        "rounds",
        "cuts",
        "removed_nodes",
        "nodes",
        "edges",
        "edges_plus",
        "value",
        "value_presolved",
        "value_cuts",
        "values_agree",
        "bb_nodes_raw",
        "bb_nodes_cuts",
    ];
    if timing {
        header.extend([
            "symmetry_ms",
            "presolve_ms",
            "solve_raw_ms",
            "solve_presolved_ms",
            "solve_cuts_ms",
        ]);
    }
    let times = |t: &sst_core::experiment::StageTimes| {
        [t.symmetry_ms, t.presolve_ms, t.solve_raw_ms, t.solve_presolved_ms, t.solve_cuts_ms].map(|x| format!("{x:.3}"))
    };
    let mut w = csv::Writer::from_writer(Vec::new());
    let fail = |e: csv::Error| CliError::Internal(e.to_string());
    w.write_record(&header).map_err(fail)?;
    for r in reports {
        let mut row = vec![
            r.instance.clone(),
            r.n.to_string(),
            r.m.to_string(),
            r.generators.to_string(),
            r.rounds.to_string(),
            r.cuts.to_string(),
            r.removed_nodes.to_string(),
            ratio(r.nodes),
            ratio(r.edges),
            ratio(r.edges_plus),
            opt(r.value),
            opt(r.value_presolved),
            opt(r.value_cuts),
            opt(r.values_agree),
            opt(r.bb_nodes_raw),
            opt(r.bb_nodes_cuts),
        ];
        if timing {
            row.extend(times(&r.times));
        }
        w.write_record(&row).map_err(fail)?;
    }
    let solved = reports.iter().any(|r| r.values_agree.is_some());
    let mut row = vec![
        "geomean".to_string(),
        String::new(),
        String::new(),
        String::new(),
        String::new(),
        String::new(),
        String::new(),
        opt(summary.nodes.map(ratio)),
        opt(summary.edges.map(ratio)),
        opt(summary.edges_plus.map(ratio)),
        String::new(),
        String::new(),
        String::new(),
        opt(solved.then_some(summary.all_values_agree)),
        String::new(),
        String::new(),
    ];
    if timing {
        row.extend(times(&summary.times));
    }
    w.write_record(&row).map_err(fail)?;
    let bytes = w.into_inner().map_err(|e| CliError::Internal(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| CliError::Internal(e.to_string()))
}

fn bench(dir: &Path, common: &Common, cfg: &sst_core::experiment::PipelineConfig) -> CliResult<ExitCode> {
    let files = graph_files(dir)?;
    let results: Vec<CliResult<InstanceReport>> = files.par_iter().map(|p| bench_instance(p, cfg)).collect();
    let mut reports = results.into_iter().collect::<CliResult<Vec<_>>>()?;
    if !common.timing {
        for r in &mut reports {
            r.times = Default::default();
        }
    }
    let summary = summarize(&reports);
    let csv = bench_csv(&reports, &summary, common.timing)?;
    emit(common.output.as_deref(), &csv)?;
    if let Some(path) = &common.json {
        write_atomic(path, to_json(&summary).as_bytes())?;
    }
    Ok(if summary.all_values_agree {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(NEGATIVE)
    })
}

fn generate(family: Family, count: usize, max_nodes: usize, out: &Path, seed: u64) -> CliResult<ExitCode> {
    let graphs: Vec<(String, Graph)> = match family {
        Family::Synthetic => synthetic_family(),
        Family::Copies => copies_family(seed, count),
        Family::Tp => (0..count as u64)
            .map(|i| {
                let s = seed.wrapping_add(i);
                (format!("tp_{s}"), random_symmetric_tp_graph(s, max_nodes))
            })
            .collect(),
    };
    std::fs::create_dir_all(out).map_err(|e| CliError::Io(out.to_path_buf(), e))?;
    for (name, g) in &graphs {
        write_atomic(&out.join(format!("{name}.col")), write_dimacs(g).as_bytes())?;
    }
    println!("wrote {} instances to {}", graphs.len(), out.display());
    Ok(ExitCode::SUCCESS)
}
