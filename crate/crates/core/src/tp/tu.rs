//! Exhaustive total-unimodularity checks.
//!
//! Both checkers first strip rows and columns that cannot occur in a minimal
//! violating submatrix (zero lines, lines with a single nonzero, repeated
//! lines up to sign). This keeps the verdict and maps witnesses back to the
//! original indices.

use rayon::prelude::*;
use serde::Serialize;

use super::matrix::{transpose, ExtendedMatrix};
use crate::error::{Error, Result};

pub const DEFAULT_DET_CAP: usize = 16;
pub const DEFAULT_GH_CAP: usize = 24;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TuConfig {
    /// Largest `min(rows, cols)` the determinant checker will enumerate.
    pub det_cap: usize,
    /// Largest number of lines the equicoloring checker will enumerate.
    pub gh_cap: usize,
    /// Strip lines irrelevant to minimal witnesses before enumerating.
    pub reduce: bool,
}

impl Default for TuConfig {
    fn default() -> Self {
        TuConfig {
            det_cap: DEFAULT_DET_CAP,
            gh_cap: DEFAULT_GH_CAP,
            reduce: true,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Axis {
    Rows,
    Cols,
}

/// Evidence that a matrix is not totally unimodular. Indices are 0-based
/// positions in the checked matrix.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum TuWitness {
    /// Square submatrix with determinant outside `{0, ±1}`.
    Submatrix { rows: Vec<usize>, cols: Vec<usize>, det: i128 },
    /// Lines along `axis` with no ±1 signing whose sum lies in `{0, ±1}^m`.
    Unbalanced { axis: Axis, lines: Vec<usize> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TuReport {
    pub is_tu: bool,
    pub witness: Option<TuWitness>,
}

impl TuReport {
    fn from_witness(witness: Option<TuWitness>) -> Self {
        TuReport {
            is_tu: witness.is_none(),
            witness,
        }
    }
}

struct Reduced {
    a: Vec<Vec<i8>>,
    row_ids: Vec<usize>,
    col_ids: Vec<usize>,
}

fn nonzeros(line: &[i8]) -> usize {
    line.iter().filter(|&&x| x != 0).count()
}

/// Indices of lines to keep: at least two nonzeros, and not equal to an
/// earlier kept line up to sign.
fn keep_lines(lines: &[Vec<i8>]) -> Vec<usize> {
    let mut kept: Vec<usize> = Vec::new();
    for (i, l) in lines.iter().enumerate() {
        if nonzeros(l) < 2 {
            continue;
        }
        let neg: Vec<i8> = l.iter().map(|x| -x).collect();
        if kept.iter().any(|&k| lines[k] == *l || lines[k] == neg) {
            continue;
        }
        kept.push(i);
    }
    kept
}

fn reduce(m: &ExtendedMatrix, enabled: bool) -> Reduced {
    let mut r = Reduced {
        a: m.entries.clone(),
        row_ids: (0..m.rows()).collect(),
        col_ids: (0..m.cols()).collect(),
    };
    if !enabled {
        return r;
    }
    loop {
        let rows = keep_lines(&r.a);
        let a: Vec<Vec<i8>> = rows.iter().map(|&i| r.a[i].clone()).collect();
        let at = transpose(&a, r.col_ids.len());
        let cols = keep_lines(&at);
        let changed = rows.len() != r.row_ids.len() || cols.len() != r.col_ids.len();
        r.row_ids = rows.iter().map(|&i| r.row_ids[i]).collect();
        r.col_ids = cols.iter().map(|&j| r.col_ids[j]).collect();
        r.a = a.iter().map(|row| cols.iter().map(|&j| row[j]).collect()).collect();
        if !changed {
            return r;
        }
    }
}

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut b: u128 = 1;
    for i in 0..k {
        b = b * (n - i) as u128 / (i + 1) as u128;
    }
    b
}

/// The `idx`-th `k`-subset of `0..n` in lexicographic order.
fn unrank(mut idx: u128, n: usize, k: usize) -> Vec<usize> {
    let mut out = Vec::with_capacity(k);
    let mut x = 0;
    for remaining in (1..=k).rev() {
        loop {
            let c = binomial(n - x - 1, remaining - 1);
            if idx < c {
                break;
            }
            idx -= c;
            x += 1;
        }
        out.push(x);
        x += 1;
    }
    out
}

/// Determinant by fraction-free elimination.
pub fn determinant(m: &[Vec<i8>]) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut a: Vec<Vec<i128>> = m.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let mut sign = 1;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&i| a[i][k] != 0) {
                Some(i) => {
                    a.swap(i, k);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    sign * a[n - 1][n - 1]
}

/// First `k x k` submatrix on columns `cols` (in lexicographic row order)
/// with a determinant outside `{0, ±1}`; rows and columns of a minimal
/// violator each carry at least two nonzeros, so only those are tried.
fn bad_minor_on(a: &[Vec<i8>], cols: &[usize]) -> Option<(Vec<usize>, i128)> {
    let k = cols.len();
    let cand: Vec<usize> = (0..a.len())
        .filter(|&i| cols.iter().filter(|&&j| a[i][j] != 0).count() >= 2)
        .collect();
    if cand.len() < k {
        return None;
    }
    // suffix[p][c]: nonzeros of column c among cand[p..]
    let mut suffix = vec![vec![0usize; k]; cand.len() + 1];
    for p in (0..cand.len()).rev() {
        for c in 0..k {
            suffix[p][c] = suffix[p + 1][c] + (a[cand[p]][cols[c]] != 0) as usize;
        }
    }
    if suffix[0].iter().any(|&s| s < 2) {
        return None;
    }
    let mut chosen = Vec::with_capacity(k);
    let mut count = vec![0usize; k];
    dfs_rows(a, cols, &cand, &suffix, 0, &mut chosen, &mut count)
}

fn dfs_rows(
    a: &[Vec<i8>],
    cols: &[usize],
    cand: &[usize],
    suffix: &[Vec<usize>],
    start: usize,
    chosen: &mut Vec<usize>,
    count: &mut [usize],
) -> Option<(Vec<usize>, i128)> {
    let k = cols.len();
    if chosen.len() == k {
        if count.iter().any(|&c| c < 2) {
            return None;
        }
        let sub: Vec<Vec<i8>> = chosen.iter().map(|&i| cols.iter().map(|&j| a[i][j]).collect()).collect();
        let d = determinant(&sub);
        return (d.abs() > 1).then(|| (chosen.clone(), d));
    }
    let need = k - chosen.len();
    for p in start..=cand.len() - need {
        if (0..k).any(|c| count[c] + suffix[p][c] < 2) {
            break;
        }
        let i = cand[p];
        chosen.push(i);
        for c in 0..k {
            count[c] += (a[i][cols[c]] != 0) as usize;
        }
        let found = dfs_rows(a, cols, cand, suffix, p + 1, chosen, count);
        for c in 0..k {
            count[c] -= (a[i][cols[c]] != 0) as usize;
        }
        chosen.pop();
        if found.is_some() {
            return found;
        }
    }
    None
}

/// Smallest violating square submatrix, by size, then column set, then row
/// set (lexicographic). `a` must have at least as many rows as columns.
fn smallest_bad_minor(a: &[Vec<i8>], ncols: usize) -> Option<(Vec<usize>, Vec<usize>)> {
    for k in 2..=ncols {
        let total = binomial(ncols, k);
        let found = (0..total as u64).into_par_iter().find_map_first(|idx| {
            let cols = unrank(idx as u128, ncols, k);
            bad_minor_on(a, &cols).map(|(rows, _)| (rows, cols))
        });
        if found.is_some() {
            return found;
        }
    }
    None
}

/// Total unimodularity by enumerating square submatrices.
pub fn is_tu_determinant(m: &ExtendedMatrix, cfg: &TuConfig) -> Result<TuReport> {
    let r = reduce(m, cfg.reduce);
    let (nr, nc) = (r.row_ids.len(), r.col_ids.len());
    if nr.min(nc) > cfg.det_cap {
        return Err(Error::CapExceeded {
            what: "determinant TU check",
            size: nr.min(nc),
            cap: cfg.det_cap,
            hint: "; raise the cap or use the equicoloring checker",
        });
    }
    let witness = if nr >= nc {
        smallest_bad_minor(&r.a, nc)
    } else {
        smallest_bad_minor(&transpose(&r.a, nc), nr).map(|(cols, rows)| (rows, cols))
    };
    Ok(TuReport::from_witness(witness.map(|(rows, cols)| {
        let mut rows: Vec<usize> = rows.iter().map(|&i| r.row_ids[i]).collect();
        let mut cols: Vec<usize> = cols.iter().map(|&j| r.col_ids[j]).collect();
        // the witness is reported on sorted original indices
        let sub: Vec<Vec<i8>> = {
            rows.sort_unstable();
            cols.sort_unstable();
            rows.iter().map(|&i| cols.iter().map(|&j| m.entries[i][j]).collect()).collect()
        };
        let det = determinant(&sub);
        debug_assert!(det.abs() > 1);
        TuWitness::Submatrix { rows, cols, det }
    })))
}

/// Whether the lines `subset` of `a` admit signs `s` with every entry of
/// `sum_i s_i a_i` in `{0, ±1}`.
fn balanceable(a: &[Vec<i8>], subset: &[usize]) -> bool {
    let width = a.first().map_or(0, |r| r.len());
    // remaining[p][c]: nonzeros of column c among subset[p..]
    let mut remaining = vec![vec![0i32; width]; subset.len() + 1];
    for p in (0..subset.len()).rev() {
        for c in 0..width {
            remaining[p][c] = remaining[p + 1][c] + (a[subset[p]][c] != 0) as i32;
        }
    }
    let mut sum = vec![0i32; width];
    sign_lines(a, subset, &remaining, 0, &mut sum)
}

fn sign_lines(a: &[Vec<i8>], subset: &[usize], remaining: &[Vec<i32>], p: usize, sum: &mut [i32]) -> bool {
    if p == subset.len() {
        return true;
    }
    let line = &a[subset[p]];
    // the first line's sign is free by symmetry
    let signs: &[i32] = if p == 0 { &[1] } else { &[1, -1] };
    for &s in signs {
        let ok = (0..sum.len()).all(|c| {
            let v = sum[c] + s * line[c] as i32;
            v.abs() - remaining[p + 1][c] <= 1
        });
        if !ok {
            continue;
        }
        for c in 0..sum.len() {
            sum[c] += s * line[c] as i32;
        }
        let done = sign_lines(a, subset, remaining, p + 1, sum);
        for c in 0..sum.len() {
            sum[c] -= s * line[c] as i32;
        }
        if done {
            return true;
        }
    }
    false
}

fn smallest_unbalanced(a: &[Vec<i8>]) -> Option<Vec<usize>> {
    let m = a.len();
    for k in 2..=m {
        let total = binomial(m, k);
        let found = (0..total as u64).into_par_iter().find_map_first(|idx| {
            let subset = unrank(idx as u128, m, k);
            (!balanceable(a, &subset)).then_some(subset)
        });
        if found.is_some() {
            return found;
        }
    }
    None
}

/// Total unimodularity by the equicoloring criterion: every set of rows
/// (equivalently columns) can be split into two classes whose difference
/// is in `{0, ±1}` everywhere. Runs on the shorter axis.
pub fn is_tu_ghouila_houri(m: &ExtendedMatrix, cfg: &TuConfig) -> Result<TuReport> {
    let r = reduce(m, cfg.reduce);
    let (nr, nc) = (r.row_ids.len(), r.col_ids.len());
    let (axis, lines, ids) = if nr <= nc {
        (Axis::Rows, r.a.clone(), &r.row_ids)
    } else {
        (Axis::Cols, transpose(&r.a, nc), &r.col_ids)
    };
    if lines.len() > cfg.gh_cap {
        return Err(Error::CapExceeded {
            what: "equicoloring TU check",
            size: lines.len(),
            cap: cfg.gh_cap,
            hint: "; raise the cap",
        });
    }
    Ok(TuReport::from_witness(smallest_unbalanced(&lines).map(|subset| {
        TuWitness::Unbalanced {
            axis,
            lines: subset.iter().map(|&i| ids[i]).collect(),
        }
    })))
}
