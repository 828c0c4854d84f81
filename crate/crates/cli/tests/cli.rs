use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gapplanar"))
        .args(args)
        .current_dir(dir)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn gen_then_analyze_k8() {
    let dir = tempfile::tempdir().unwrap();
    assert!(run(&["gen", "squares", "--s", "2", "-o", "k8"], dir.path())
        .status
        .success());
    let manifest: Value =
        serde_json::from_str(&fs::read_to_string(dir.path().join("k8.manifest.json")).unwrap())
            .unwrap();
    assert_eq!(
        (manifest["n"].as_u64(), manifest["m"].as_u64()),
        (Some(8), Some(28))
    );
    let r = json(&run(&["analyze", "k8.json"], dir.path()));
    assert_eq!(r["k_star"], 1);
    assert_eq!(r["crossing_count"], 18);
    let text = run(
        &["analyze", "k8.json", "--format", "text", "--k", "0"],
        dir.path(),
    );
    let text = String::from_utf8(text.stdout).unwrap();
    assert!(text.contains("k* = 1") && text.contains("feasible at k = 0: false"));
}

#[test]
fn gen_families() {
    let dir = tempfile::tempdir().unwrap();
    let cases: [(&[&str], u64); 4] = [
        (&["gen", "dodecahedron", "--insertions", "0", "-o", "d"], 90),
        (
            &["gen", "zarankiewicz", "--p", "3", "--q", "12", "-o", "d"],
            36,
        ),
        (&["gen", "wheel", "--k", "1", "-o", "d"], 27),
        (&["gen", "multigraph", "--n0", "6", "-o", "d"], 30),
    ];
    for (args, m) in cases {
        assert!(run(args, dir.path()).status.success(), "{args:?}");
        let manifest: Value =
            serde_json::from_str(&fs::read_to_string(dir.path().join("d.manifest.json")).unwrap())
                .unwrap();
        assert_eq!(manifest["m"].as_u64(), Some(m), "{args:?}");
    }
    let r = json(&run(&["analyze", "d.json"], dir.path()));
    assert_eq!(r["density"]["verdict"], "possibly k-gap-planar");
}

#[test]
fn zarankiewicz_report() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(
        &["gen", "zarankiewicz", "--p", "3", "--q", "12"],
        dir.path(),
    );
    fs::write(dir.path().join("z.json"), &out.stdout).unwrap();
    let r = json(&run(&["analyze", "z.json"], dir.path()));
    assert_eq!(r["crossing_count"], 30);
    assert_eq!(r["gap_free_edges"].as_array().unwrap().len(), 6);
}

#[test]
fn render_with_assignment_file() {
    let dir = tempfile::tempdir().unwrap();
    run(&["gen", "squares", "--s", "2", "-o", "k8"], dir.path());
    let r = json(&run(&["analyze", "k8.json"], dir.path()));
    fs::write(dir.path().join("a.json"), r["assignment"].to_string()).unwrap();
    let out = run(
        &[
            "render",
            "k8.json",
            "--assignment",
            "a.json",
            "-o",
            "k8.svg",
        ],
        dir.path(),
    );
    assert!(out.status.success());
    let svg = fs::read_to_string(dir.path().join("k8.svg")).unwrap();
    assert_eq!(svg.matches("<path data-edge=").count(), 28);
    let gaps: usize = svg
        .lines()
        .filter_map(|l| l.split(" d=\"").nth(1))
        .map(|d| d.matches('M').count() - 1)
        .sum();
    assert_eq!(gaps, 18);
    let again = run(&["render", "k8.json", "--assignment", "a.json"], dir.path());
    assert_eq!(String::from_utf8(again.stdout).unwrap(), svg);
}

#[test]
fn reduce_and_three_partition() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(
        dir.path().join("i.json"),
        r#"{"m":3,"A":[7,7,7,8,8,8,8,9,10],"I":24}"#,
    )
    .unwrap();
    fs::write(dir.path().join("p.json"), "[[0,1,8],[2,3,7],[4,5,6]]").unwrap();
    let m = json(&run(&["reduce", "i.json", "--summary"], dir.path()));
    assert_eq!(m["beam_blobs"], 127);
    assert_eq!(m["transversal_path_edges"], 102);
    assert_eq!(
        json(&run(&["3p", "verify", "i.json", "p.json"], dir.path()))["valid"],
        true
    );
    let s = json(&run(&["3p", "solve", "i.json"], dir.path()));
    assert!(s["partition"].is_array());
    let full = json(&run(&["reduce", "i.json"], dir.path()));
    assert_eq!(
        full["edges"].as_array().unwrap().len() as u64,
        full["manifest"]["edges"].as_u64().unwrap()
    );
}

#[test]
fn oracle_and_guard() {
    let dir = tempfile::tempdir().unwrap();
    run(&["gen", "squares", "--s", "2", "-o", "k8"], dir.path());
    assert_eq!(json(&run(&["oracle", "k8.json"], dir.path()))["k_star"], 1);
    let out = run(&["oracle", "k8.json", "--guard", "3"], dir.path());
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).starts_with("error[E_GUARD]"));
}

#[test]
fn hard_errors_have_codes() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(
        dir.path().join("t.json"),
        r#"{"vertices":[{"id":"a","x":0,"y":0},{"id":"b","x":2,"y":2},{"id":"c","x":0,"y":2},{"id":"d","x":2,"y":0},
            {"id":"e","x":1,"y":0},{"id":"f","x":1,"y":2}],
           "edges":[{"id":"ab","source":"a","target":"b"},{"id":"cd","source":"c","target":"d"},{"id":"ef","source":"e","target":"f"}]}"#,
    )
    .unwrap();
    let out = run(&["analyze", "t.json"], dir.path());
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).starts_with("error[E_TRIPLE_POINT]"));
    let out = run(&["analyze", "missing.json"], dir.path());
    assert_eq!(out.status.code(), Some(74));
}
