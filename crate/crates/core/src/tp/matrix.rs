use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{maximal_cliques, Graph};
use crate::presolve::deletion_operation;
use crate::sst::SstCliqueCut;

/// What a matrix row stands for. Node lists are 1-based in JSON.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum RowTag {
    Clique { nodes: Vec<usize> },
    Cut { leader: usize, followers: Vec<usize> },
    Row { index: usize },
}

/// A `{0, ±1}` matrix with row and column provenance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtendedMatrix {
    pub entries: Vec<Vec<i8>>,
    pub row_tags: Vec<RowTag>,
    /// Column labels; node numbers (1-based) for matrices built from graphs.
    pub col_tags: Vec<usize>,
}

impl ExtendedMatrix {
    /// Untagged matrix; rows and columns are labelled `1..`.
    pub fn from_entries(entries: Vec<Vec<i8>>) -> Result<Self> {
        let cols = entries.first().map_or(0, |r| r.len());
        for (i, row) in entries.iter().enumerate() {
            if row.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    found: row.len(),
                });
            }
            if let Some(&x) = row.iter().find(|x| !(-1..=1).contains(*x)) {
                return Err(Error::InvalidInput(format!("entry {x} in row {} is not in {{-1,0,1}}", i + 1)));
            }
        }
        Ok(ExtendedMatrix {
            row_tags: (1..=entries.len()).map(|index| RowTag::Row { index }).collect(),
            col_tags: (1..=cols).collect(),
            entries,
        })
    }

    pub fn rows(&self) -> usize {
        self.entries.len()
    }

    pub fn cols(&self) -> usize {
        self.col_tags.len()
    }

    pub fn transpose(&self) -> Vec<Vec<i8>> {
        transpose(&self.entries, self.cols())
    }

    /// Whitespace-separated rows; blank lines and lines starting with `#`
    /// are skipped.
    pub fn from_dense_text(text: &str) -> Result<Self> {
        let mut entries = Vec::new();
        for (i, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let row = line
                .split_whitespace()
                .map(|t| {
                    t.parse::<i8>().map_err(|_| Error::Parse {
                        line: i + 1,
                        message: format!("bad entry {t:?}"),
                    })
                })
                .collect::<Result<Vec<i8>>>()?;
            entries.push(row);
        }
        Self::from_entries(entries)
    }

    pub fn to_dense_text(&self) -> String {
        let mut out = String::new();
        for row in &self.entries {
            let line: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }

    /// Reads either the JSON form or dense text.
    pub fn parse(text: &str) -> Result<Self> {
        if text.trim_start().starts_with('{') {
            let m: ExtendedMatrix = serde_json::from_str(text).map_err(|e| Error::Parse {
                line: e.line(),
                message: e.to_string(),
            })?;
            let checked = Self::from_entries(m.entries.clone())?;
            if m.row_tags.len() != checked.rows() || m.col_tags.len() != checked.cols() {
                return Err(Error::InvalidInput("tag counts do not match the matrix shape".into()));
            }
            Ok(m)
        } else {
            Self::from_dense_text(text)
        }
    }
}

pub(crate) fn transpose(entries: &[Vec<i8>], cols: usize) -> Vec<Vec<i8>> {
    (0..cols).map(|j| entries.iter().map(|r| r[j]).collect()).collect()
}

fn one_based(v: &[usize]) -> Vec<usize> {
    v.iter().map(|x| x + 1).collect()
}

/// Clique matrix of `g` plus one row per cut (`-1` at the leader, `+1` on
/// the clique). With `apply_deletion`, columns of followers removed by the
/// deletion operation are dropped, and so are cut rows left empty.
pub fn extended_clique_matrix(g: &Graph, cuts: &[SstCliqueCut], apply_deletion: bool) -> Result<ExtendedMatrix> {
    let n = g.n();
    for c in cuts {
        for &v in std::iter::once(&c.leader).chain(&c.clique) {
            if v >= n {
                return Err(Error::PointOutOfRange { point: v + 1, n });
            }
        }
    }
    let keep: Vec<usize> = if apply_deletion {
        let pairs: Vec<(usize, usize)> = cuts
            .iter()
            .flat_map(|c| c.clique.iter().map(move |&f| (c.leader, f)))
            .collect();
        deletion_operation(g, &pairs)?.node_map.new_to_old
    } else {
        (0..n).collect()
    };
    let mut col_of = vec![None; n];
    for (j, &v) in keep.iter().enumerate() {
        col_of[v] = Some(j);
    }
    let mut entries = Vec::new();
    let mut row_tags = Vec::new();
    for clique in maximal_cliques(g)? {
        let mut row = vec![0i8; keep.len()];
        for &v in &clique {
            if let Some(j) = col_of[v] {
                row[j] = 1;
            }
        }
        entries.push(row);
        row_tags.push(RowTag::Clique {
            nodes: one_based(&clique),
        });
    }
    for c in cuts {
        let mut row = vec![0i8; keep.len()];
        for &f in &c.clique {
            if let Some(j) = col_of[f] {
                row[j] = 1;
            }
        }
        if let Some(j) = col_of[c.leader] {
            row[j] = -1;
        }
        if row.iter().all(|&x| x == 0) {
            continue;
        }
        entries.push(row);
        row_tags.push(RowTag::Cut {
            leader: c.leader + 1,
            followers: one_based(&c.clique),
        });
    }
    Ok(ExtendedMatrix {
        entries,
        row_tags,
        col_tags: one_based(&keep),
    })
}

/// Clique matrix extended by ordering rows `x_u >= x_v` for `v` in each
/// follower set: the same shape as cut rows, without any symmetry origin.
pub fn ordering_matrix(g: &Graph, rows: &[(usize, Vec<usize>)]) -> Result<ExtendedMatrix> {
    let cuts: Vec<SstCliqueCut> = rows
        .iter()
        .flat_map(|(u, vs)| vs.iter().map(move |&v| SstCliqueCut::plain(*u, v)))
        .collect();
    extended_clique_matrix(g, &cuts, false)
}
