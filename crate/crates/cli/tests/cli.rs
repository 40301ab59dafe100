use std::path::PathBuf;
use std::process::{Command, Output};

fn toughham(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_toughham")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn tmp(name: &str, contents: &str) -> String {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path.to_string_lossy().into_owned()
}

fn generated(name: &str, args: &[&str]) -> String {
    let o = toughham(&[&["gen"], args].concat());
    assert_eq!(o.status.code(), Some(0));
    tmp(name, &stdout(&o))
}

#[test]
fn gen_writes_graph6() {
    assert_eq!(stdout(&toughham(&["gen", "complete", "3"])), "Bw\n");
    let o = toughham(&["gen", "complete-bipartite", "8", "9"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 1);
    let a = toughham(&["gen", "gnp", "12", "1/2", "--seed", "3"]);
    let b = toughham(&["gen", "gnp", "12", "0.5", "--seed", "3"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn check_prints_exact_toughness() {
    let p = generated("petersen.g6", &["petersen"]);
    let o = toughham(&["check", "--k", "4", &p]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("toughness     4/3"));

    let o = toughham(&["check", "--format", "json", &p]);
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["schema"], "toughham/1");
    assert_eq!(v["toughness"], "4/3");
    assert_eq!(v["connectivity"], 3);

    let edges = tmp("triangle.txt", "# triangle\n3 3\n0 1\n1 2\n0 2\n");
    let o = toughham(&["check", &edges]);
    assert!(stdout(&o).contains("toughness     inf"));
}

#[test]
fn exit_codes() {
    let bad = tmp("bad.g6", "B$$\n");
    let o = toughham(&["check", &bad]);
    assert_eq!(o.status.code(), Some(2));
    assert!(!o.stderr.is_empty());

    let big = generated("k30.g6", &["complete", "30"]);
    assert_eq!(toughham(&["check", "--cap-n", "10", &big]).status.code(), Some(3));
    let o = Command::new(env!("CARGO_BIN_EXE_toughham"))
        .args(["check", &big])
        .env("TOUGHHAM_CAP_N", "10")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(3));

    let k10 = generated("k10.g6", &["complete", "10"]);
    assert_eq!(toughham(&["replay", "--k", "3", &k10]).status.code(), Some(1));
    assert_eq!(toughham(&["check", "--frobnicate", &k10]).status.code(), Some(1));
    assert_eq!(toughham(&["verify", "theorem", "--k", "4"]).status.code(), Some(1));
    assert_eq!(toughham(&["hunt", "--k", "4", "--n", "9..x"]).status.code(), Some(1));
    assert_eq!(toughham(&["check", "/nonexistent/graph.g6"]).status.code(), Some(6));
    assert_eq!(toughham(&["--help"]).status.code(), Some(0));
}

#[test]
fn replay_outcomes() {
    let k10 = generated("k10b.g6", &["complete", "10"]);
    let o = toughham(&["replay", "--k", "4", "--format", "json", &k10]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["outcome"], "hamiltonian");
    assert_eq!(v["cycle"].as_array().unwrap().len(), 10);

    let k89 = generated("k89.g6", &["complete-bipartite", "8", "9"]);
    let o = toughham(&["replay", "--k", "4", "--format", "json", &k89]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["hypothesis"], "not-4-tough");
    assert_eq!(v["ratio"], "9/8");

    // a supplied cycle that is not longest is extended
    let c6 = tmp("c6chord.txt", "7 8\n0 1\n1 2\n2 3\n3 4\n4 5\n5 0\n6 0\n6 1\n");
    let cyc = tmp("c6.cycle", "0 1 2 3 4 5\n");
    let o = toughham(&["replay", "--k", "4", "--cycle", &cyc, "--format", "json", &c6]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["outcome"], "longer-cycle");
    let bad_cycle = tmp("bad.cycle", "0 2 4\n");
    assert_eq!(toughham(&["replay", "--k", "4", "--cycle", &bad_cycle, &c6]).status.code(), Some(1));
}

#[test]
fn verify_writes_jsonl() {
    let out = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("theorem.jsonl");
    let corpus = concat!(env!("CARGO_MANIFEST_DIR"), "/../core/fixtures/upto7.g6");
    let o = toughham(&[
        "verify",
        "theorem",
        "--k",
        "4",
        "--corpus",
        corpus,
        "--family",
        "complete:9..12",
        "--format",
        "json",
        "--output",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let summary: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(summary["counts"]["scanned"], 1257);
    assert_eq!(summary["counts"]["hypothesis_satisfying"], 4);
    let text = std::fs::read_to_string(&out).unwrap();
    assert_eq!(text.lines().count(), 1258);

    let o = toughham(&["verify", "bauer", "--t", "3/2", "--family", "complete:3..6"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("satisfying    4"));
}
