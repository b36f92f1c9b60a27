use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn sstcuts(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sstcuts"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn stdout_json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| {
        panic!(
            "stdout is not JSON ({e}): {}\nstderr: {}",
            String::from_utf8_lossy(&o.stdout),
            String::from_utf8_lossy(&o.stderr)
        )
    })
}

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

const K3: &str = "p edge 3 3\ne 1 2\ne 2 3\ne 1 3\n";
const PATH3: &str = "p edge 3 2\ne 1 2\ne 2 3\n";

#[test]
fn symmetries_of_small_graphs() {
    let dir = TempDir::new().unwrap();
    let k3 = write(dir.path(), "k3.col", K3);
    let o = sstcuts(&["symmetries", s(&k3)]);
    assert_eq!(code(&o), 0);
    assert_eq!(String::from_utf8(o.stdout).unwrap().lines().count(), 2);

    // three branches of lengths 1, 2 and 3 hanging from node 3
    let asym = write(dir.path(), "asym.col", "p edge 7 6\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 6\ne 3 7\n");
    let out = dir.path().join("gens.txt");
    let json = dir.path().join("sym.json");
    let o = sstcuts(&["symmetries", s(&asym), "-o", s(&out), "--json", s(&json)]);
    assert_eq!(code(&o), 0);
    assert_eq!(std::fs::read_to_string(&out).unwrap(), "");
    let report: Value = serde_json::from_str(&std::fs::read_to_string(&json).unwrap()).unwrap();
    assert_eq!(report["generators"], 0);
    assert_eq!(report["order"], "1");
}

#[test]
fn invalid_symmetry_file_is_an_input_error() {
    let dir = TempDir::new().unwrap();
    let path = write(dir.path(), "p.col", PATH3);
    let bad = write(dir.path(), "bad.sym", "# comment\n(1,3)\n(1,2)\n");
    let out = dir.path().join("out.txt");
    let o = sstcuts(&["symmetries", s(&path), "--symmetry-file", s(&bad), "-o", s(&out)]);
    assert_eq!(code(&o), 2);
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains(":3:") && err.contains("(1,2)"), "{err}");
    assert!(!out.exists(), "no partial output on error");

    let good = write(dir.path(), "good.sym", "(1,3)\n");
    let o = sstcuts(&["symmetries", s(&path), "--symmetry-file", s(&good)]);
    assert_eq!(code(&o), 0);
    assert_eq!(String::from_utf8(o.stdout).unwrap(), "(1,3)\n");
}

#[test]
fn malformed_inputs_exit_with_code_two() {
    let dir = TempDir::new().unwrap();
    let bad = write(dir.path(), "bad.col", "p edge 2 1\ne 1 3\n");
    assert_eq!(code(&sstcuts(&["solve", s(&bad)])), 2);
    assert_eq!(code(&sstcuts(&["solve", s(&dir.path().join("missing.col"))])), 2);
    assert_eq!(code(&sstcuts(&["solve", "--orbit-rule", "median", s(&bad)])), 2);
}

#[test]
fn presolve_reports_ratios() {
    let dir = TempDir::new().unwrap();
    let k3 = write(dir.path(), "k3.col", K3);
    let reduced = dir.path().join("reduced.col");
    let o = sstcuts(&["presolve", s(&k3), "-o", s(&reduced)]);
    assert_eq!(code(&o), 0);
    let r = stdout_json(&o);
    assert!((r["nodes"].as_f64().unwrap() - 1.0 / 3.0).abs() < 1e-12);
    assert_eq!(r["removed_nodes"], serde_json::json!([2, 3]));
    assert!(std::fs::read_to_string(&reduced).unwrap().starts_with("p edge 1 0"));

    // no symmetry: nothing changes
    let empty = write(dir.path(), "e.sym", "");
    let o = sstcuts(&["presolve", s(&k3), "--symmetry-file", s(&empty)]);
    let r = stdout_json(&o);
    assert_eq!((r["nodes"].as_f64(), r["edges"].as_f64()), (Some(1.0), Some(1.0)));

    // zero weights with the addition operation
    let zero = write(dir.path(), "z.col", "p edge 2 0\nw 1 0\nw 2 0\n");
    assert_eq!(code(&sstcuts(&["presolve", s(&zero), "--addition"])), 2);
}

#[test]
fn solve_variants_agree() {
    let dir = TempDir::new().unwrap();
    let k3 = write(dir.path(), "k3.col", K3);
    for extra in [&[][..], &["--with-cuts"], &["--with-cuts", "--cuts", "clique"], &["--presolve", "--addition"]] {
        let mut args = vec!["solve", s(&k3)];
        args.extend_from_slice(extra);
        let o = sstcuts(&args);
        assert_eq!(code(&o), 0);
        let r = stdout_json(&o);
        assert_eq!(r["value"], 1, "{extra:?}");
        assert_eq!(r["members"].as_array().unwrap().len(), 1);
        assert!(r.get("wall_ms").is_none());
    }
    let r = stdout_json(&sstcuts(&["solve", s(&k3), "--timing"]));
    assert!(r["wall_ms"].as_f64().is_some());
}

#[test]
fn check_tu_verdicts() {
    let dir = TempDir::new().unwrap();
    // triangle 1-2-3 with pendants 4 (at 1) and 5 (at 2), plus the cut x5 <= x4
    let fig = write(
        dir.path(),
        "fig.txt",
        "1 1 1 0 0\n1 0 0 1 0\n0 1 0 0 1\n0 0 0 -1 1\n",
    );
    let o = sstcuts(&["check-tu", "--matrix", s(&fig)]);
    assert_eq!(code(&o), 3);
    let r = stdout_json(&o);
    assert_eq!(r["is_tu"], false);
    assert_eq!(r["determinant"]["witness"]["det"].as_i64().unwrap().abs(), 2);
    assert_eq!(r["ghouila_houri"]["is_tu"], false);

    let gen_dir = dir.path().join("tp");
    assert_eq!(code(&sstcuts(&["generate", "--family", "tp", "--count", "3", "--max-nodes", "12", "-o", s(&gen_dir)])), 0);
    for i in 0..3 {
        let g = gen_dir.join(format!("tp_{i}.col"));
        let args = ["check-tu", s(&g), "--stringent", "--cuts", "clique", "--deletion"];
        assert_eq!(code(&sstcuts(&args)), 0, "stringent clique cuts with deletion");
        assert_eq!(code(&sstcuts(&["check-tu", s(&g), "--no-cuts"])), 0, "bare clique matrix");
    }

    // caps are resource errors
    let dense = write(
        dir.path(),
        "dense.txt",
        concat!(
            "1 -1 1 0 1 0 0 0 -1 0 1 1\n",
            "0 1 0 0 -1 1 -1 0 0 -1 1 -1\n",
            "1 0 1 1 1 -1 -1 1 0 -1 1 0\n",
            "-1 1 -1 1 0 0 -1 1 0 1 -1 1\n",
            "0 0 1 0 -1 -1 1 1 -1 -1 0 1\n",
            "-1 0 -1 -1 -1 0 -1 -1 1 0 0 -1\n",
            "0 -1 0 -1 1 0 1 -1 0 0 -1 1\n",
            "0 -1 -1 -1 -1 0 1 0 -1 -1 1 1\n",
            "-1 0 0 0 -1 1 0 1 0 -1 -1 -1\n",
            "-1 0 -1 1 1 -1 1 1 1 -1 -1 1\n",
            "0 -1 0 -1 0 0 0 -1 -1 -1 -1 1\n",
            "0 -1 -1 1 -1 -1 1 0 1 0 0 -1\n",
        ),
    );
    let o = sstcuts(&["check-tu", "--matrix", s(&dense), "--det-cap", "3", "--gh-cap", "3"]);
    assert_eq!(code(&o), 4, "{}", String::from_utf8_lossy(&o.stderr));
}

#[test]
fn bench_writes_rows_and_summary() {
    let dir = TempDir::new().unwrap();
    let inst = dir.path().join("inst");
    std::fs::create_dir(&inst).unwrap();
    write(&inst, "b.col", K3);
    write(&inst, "a.col", PATH3);
    write(&inst, "c.col", "p edge 4 2\ne 1 2\ne 3 4\n");
    write(&inst, "notes.txt", "ignored");
    let out = dir.path().join("bench.csv");
    let json = dir.path().join("summary.json");
    let args = ["bench", s(&inst), "--orbit-rule", "max", "-o", s(&out), "--json", s(&json)];
    assert_eq!(code(&sstcuts(&args)), 0);
    let text = std::fs::read_to_string(&out).unwrap();
    let mut rdr = csv::Reader::from_reader(text.as_bytes());
    let headers = rdr.headers().unwrap().clone();
    let rows: Vec<csv::StringRecord> = rdr.records().map(|r| r.unwrap()).collect();
    assert_eq!(rows.len(), 4);
    let names: Vec<&str> = rows.iter().map(|r| &r[0]).collect();
    assert_eq!(names, ["a.col", "b.col", "c.col", "geomean"]);
    let agree = headers.iter().position(|h| h == "values_agree").unwrap();
    assert!(rows.iter().all(|r| &r[agree] == "true"));
    let summary: Value = serde_json::from_str(&std::fs::read_to_string(&json).unwrap()).unwrap();
    assert_eq!(summary["instances"], 3);

    // identical configuration, identical bytes
    let again = dir.path().join("again.csv");
    let args = ["bench", s(&inst), "--orbit-rule", "max", "-o", s(&again)];
    assert_eq!(code(&sstcuts(&args)), 0);
    assert_eq!(std::fs::read(&out).unwrap(), std::fs::read(&again).unwrap());
}

#[test]
fn outputs_are_reproducible() {
    let dir = TempDir::new().unwrap();
    let gen_dir = dir.path().join("g");
    assert_eq!(code(&sstcuts(&["generate", "--family", "copies", "--count", "4", "--seed", "9", "-o", s(&gen_dir)])), 0);
    let mut files: Vec<PathBuf> = std::fs::read_dir(&gen_dir).unwrap().map(|e| e.unwrap().path()).collect();
    files.sort();
    assert_eq!(files.len(), 4);
    for f in &files {
        for cmd in [
            &["table", "--cuts", "clique"][..],
            &["presolve", "--addition", "--stringent"],
            &["solve", "--with-cuts"],
        ] {
            let mut args = cmd.to_vec();
            args.push(s(f));
            let a = sstcuts(&args);
            let b = sstcuts(&args);
            assert_eq!(code(&a), 0, "{args:?}: {}", String::from_utf8_lossy(&a.stderr));
            assert_eq!(a.stdout, b.stdout);
        }
    }
}

#[test]
fn table_json_is_one_based() {
    let dir = TempDir::new().unwrap();
    let k3 = write(dir.path(), "k3.col", K3);
    let o = sstcuts(&["table", s(&k3), "--cuts", "clique"]);
    let t = stdout_json(&o);
    assert_eq!(t["rounds"][0]["leader"], 1);
    assert_eq!(t["rounds"][0]["followers"], serde_json::json!([2, 3]));
    assert_eq!(t["rounds"][0]["cliques"], serde_json::json!([[2, 3]]));
}
