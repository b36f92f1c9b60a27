//! DIMACS `.col` reader and writer.
//!
//! Besides the standard `c`, `p edge n m` and `e u v` lines, a nonstandard
//! `w v c` line assigns integer weight `c` to node `v`. Nodes without a `w`
//! line have weight 1.

use std::fmt::Write;

use super::Graph;
use crate::error::{Error, Result};

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

pub fn parse_dimacs(text: &str) -> Result<Graph> {
    let mut graph: Option<Graph> = None;
    let mut weights: Vec<i64> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        let mut tok = line.split_whitespace();
        let kind = tok.next().expect("non-empty line");
        match kind {
            "c" => continue,
            "p" => {
                if graph.is_some() {
                    return Err(parse_err(line_no, "duplicate 'p' line"));
                }
                let format = tok.next().ok_or_else(|| parse_err(line_no, "missing format"))?;
                if format != "edge" && format != "col" {
                    return Err(parse_err(line_no, format!("unsupported format {format:?}")));
                }
                let n: usize = tok
                    .next()
                    .and_then(|t| t.parse().ok())
                    .ok_or_else(|| parse_err(line_no, "bad node count"))?;
                graph = Some(Graph::new(n));
                weights = vec![1; n];
            }
            "e" | "w" => {
                let g = graph
                    .as_mut()
                    .ok_or_else(|| parse_err(line_no, "data line before 'p' line"))?;
                let n = g.n();
                let a: i64 = tok
                    .next()
                    .and_then(|t| t.parse().ok())
                    .ok_or_else(|| parse_err(line_no, "bad first field"))?;
                let b: i64 = tok
                    .next()
                    .and_then(|t| t.parse().ok())
                    .ok_or_else(|| parse_err(line_no, "bad second field"))?;
                let node = |x: i64| -> Result<usize> {
                    if x < 1 || x as usize > n {
                        Err(parse_err(line_no, format!("node {x} out of range 1..={n}")))
                    } else {
                        Ok(x as usize - 1)
                    }
                };
                if kind == "e" {
                    let (u, v) = (node(a)?, node(b)?);
                    if u == v {
                        return Err(parse_err(line_no, format!("loop at node {a}")));
                    }
                    g.add_edge(u, v)?;
                } else {
                    weights[node(a)?] = b;
                }
            }
            other => return Err(parse_err(line_no, format!("unknown line type {other:?}"))),
        }
    }
    let g = graph.ok_or_else(|| parse_err(0, "missing 'p edge' line"))?;
    g.with_weights(weights)
}

/// Writes the graph; `w` lines are emitted only for non-unit weights.
pub fn write_dimacs(g: &Graph) -> String {
    let mut s = String::new();
    writeln!(s, "p edge {} {}", g.n(), g.edge_count()).unwrap();
    for v in 0..g.n() {
        if g.weight(v) != 1 {
            writeln!(s, "w {} {}", v + 1, g.weight(v)).unwrap();
        }
    }
    for (u, v) in g.edges() {
        writeln!(s, "e {} {}", u + 1, v + 1).unwrap();
    }
    s
}
