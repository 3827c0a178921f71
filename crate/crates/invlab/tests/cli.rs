//! End-to-end checks of the binary: exit codes, output shapes, file
//! round-trips.

use invlab::digraph::{random_digraph, Digraph, Tournament};
use invlab::io::{emit_dg, emit_trn, parse_dg, parse_trn};
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn invlab(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_invlab"))
        .current_dir(dir)
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_json(out: &Output) -> serde_json::Value {
    assert!(
        out.stderr.is_empty(),
        "unexpected stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn write_trn(dir: &Path, name: &str, t: &Tournament) -> PathBuf {
    let path = dir.join(name);
    std::fs::write(&path, emit_trn(t)).unwrap();
    path
}

#[test]
fn verify_exit_codes_and_witnesses() {
    let dir = tempfile::tempdir().unwrap();
    write_trn(dir.path(), "r5.trn", &Tournament::rotative(2));
    write_trn(dir.path(), "tt5.trn", &Tournament::transitive(5));

    let out = invlab(
        dir.path(),
        &["verify", "r5.trn", "--property", "k-strong", "--k", "2"],
    );
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["holds"], true);
    assert_eq!(v["order"], 5);
    assert!(v["spec"].as_str().unwrap().contains("k-strong"));

    let out = invlab(
        dir.path(),
        &["verify", "tt5.trn", "--property", "k-strong", "--k", "1"],
    );
    assert_eq!(out.status.code(), Some(1));
    let v = stdout_json(&out);
    assert_eq!(v["holds"], false);
    assert!(v["witness"].is_object(), "failure carries a witness");

    let out = invlab(dir.path(), &["verify", "r5.trn", "--property", "eulerian"]);
    assert_eq!(out.status.code(), Some(0));

    std::fs::write(dir.path().join("bad.trn"), "5\n111\n").unwrap();
    let out = invlab(dir.path(), &["verify", "bad.trn", "--property", "acyclic"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(
        err.contains("line 2"),
        "parse errors carry line numbers: {err}"
    );

    let out = invlab(dir.path(), &["verify", "gone.trn", "--property", "acyclic"]);
    assert_eq!(out.status.code(), Some(2));

    // Bad usage is also exit 2.
    let out = invlab(dir.path(), &["verify", "r5.trn", "--property", "shiny"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_writes_dot_on_request() {
    let dir = tempfile::tempdir().unwrap();
    write_trn(dir.path(), "r5.trn", &Tournament::rotative(2));
    let out = invlab(
        dir.path(),
        &[
            "verify",
            "r5.trn",
            "--property",
            "acyclic",
            "--dot",
            "r5.dot",
        ],
    );
    assert_eq!(out.status.code(), Some(1), "rotative is not acyclic");
    let dot = std::fs::read_to_string(dir.path().join("r5.dot")).unwrap();
    assert!(dot.starts_with("digraph"));
}

#[test]
fn exact_reports_values_and_bounds() {
    let dir = tempfile::tempdir().unwrap();
    write_trn(dir.path(), "r5.trn", &Tournament::rotative(2));
    write_trn(dir.path(), "tt5.trn", &Tournament::transitive(5));

    let out = invlab(dir.path(), &["exact", "r5.trn", "--goal", "acyclic"]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["outcome"]["status"], "exact");
    assert_eq!(v["outcome"]["value"], 2);

    // A size cap that exhausts honestly is exit 1 with the proven bound.
    let out = invlab(
        dir.path(),
        &[
            "exact", "tt5.trn", "--goal", "k-strong", "--k", "2", "--max-t", "1",
        ],
    );
    assert_eq!(out.status.code(), Some(1));
    let v = stdout_json(&out);
    assert_eq!(v["outcome"]["status"], "unknown");
    assert_eq!(v["outcome"]["lower_bound"], 2);
    assert_eq!(v["outcome"]["capped"], false);
    assert!(v["summary"].as_str().unwrap().contains("fewer than 2"));

    // A node budget interruption reports as capped, distinctly.
    let out = Command::new(env!("CARGO_BIN_EXE_invlab"))
        .current_dir(dir.path())
        .env("INVLAB_NODE_CAP", "3")
        .args(["exact", "tt5.trn", "--goal", "k-strong", "--k", "2"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    let v = stdout_json(&out);
    assert_eq!(v["outcome"]["capped"], true);
    assert!(v["summary"].as_str().unwrap().contains("node budget"));

    let out = Command::new(env!("CARGO_BIN_EXE_invlab"))
        .current_dir(dir.path())
        .env("INVLAB_NODE_CAP", "plenty")
        .args(["exact", "tt5.trn", "--goal", "acyclic"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2), "malformed cap is an error");
}

#[test]
fn construct_emits_verified_certificates() {
    let dir = tempfile::tempdir().unwrap();
    write_trn(dir.path(), "tt9.trn", &Tournament::transitive(9));

    let out = invlab(dir.path(), &["construct", "tt9.trn", "--method", "k1"]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["certificate"]["verified"], true);
    assert_eq!(v["certificate"]["family_size"], 1);

    let out = invlab(
        dir.path(),
        &["construct", "--method", "tt", "--n", "6", "--k", "2"],
    );
    let v = stdout_json(&out);
    assert_eq!(v["certificate"]["family_size"], 1);

    // transform rewrites one tournament into another.
    write_trn(dir.path(), "a.trn", &Tournament::random(8, 1));
    write_trn(dir.path(), "b.trn", &Tournament::random(8, 2));
    let out = invlab(
        dir.path(),
        &[
            "construct",
            "a.trn",
            "--method",
            "transform",
            "--target",
            "b.trn",
        ],
    );
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["certificate"]["verified"], true);
    assert_eq!(v["certificate"]["property"]["kind"], "equals-target");

    // Missing input file for a method that needs one.
    let out = invlab(dir.path(), &["construct", "--method", "k1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn random_requires_seed_and_batches_to_csv() {
    let dir = tempfile::tempdir().unwrap();
    write_trn(dir.path(), "t.trn", &Tournament::random(13, 3));

    let out = invlab(dir.path(), &["random", "t.trn", "--method", "vectors"]);
    assert_eq!(out.status.code(), Some(2), "seed is mandatory");

    let out = invlab(
        dir.path(),
        &[
            "random", "t.trn", "--method", "vectors", "--k", "1", "--seed", "7",
        ],
    );
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["certificate"]["verified"], true);
    assert_eq!(v["seed"], 7);

    // Same seed, same stdout.
    let again = invlab(
        dir.path(),
        &[
            "random", "t.trn", "--method", "vectors", "--k", "1", "--seed", "7",
        ],
    );
    assert_eq!(out.stdout, again.stdout);

    let out = invlab(
        dir.path(),
        &[
            "random", "t.trn", "--method", "vectors", "--k", "1", "--seed", "7", "--trials", "4",
        ],
    );
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert!(
        lines.next().unwrap().starts_with("# "),
        "spec header comment"
    );
    assert_eq!(lines.next().unwrap(), "trial,outcome,family_size");
    assert_eq!(lines.clone().count(), 4);
    for (i, line) in lines.enumerate() {
        assert!(line.starts_with(&format!("{i},")), "line {line:?}");
    }
}

#[test]
fn gadget_writes_files_and_sidecar() {
    let dir = tempfile::tempdir().unwrap();

    let out = invlab(
        dir.path(),
        &["gadget", "--kind", "t1", "--k", "2", "--out", "w", "--dot"],
    );
    assert_eq!(out.status.code(), Some(0));
    let t = parse_trn(&std::fs::read_to_string(dir.path().join("w.trn")).unwrap()).unwrap();
    assert_eq!(t.n(), 7);
    let sidecar: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("w.json")).unwrap()).unwrap();
    assert_eq!(sidecar["order"], 7);
    assert!(sidecar["expected"]["claim"]
        .as_str()
        .unwrap()
        .contains("2-strong"));
    assert!(dir.path().join("w.dot").exists());

    let out = invlab(
        dir.path(),
        &[
            "gadget",
            "--kind",
            "meksat",
            "--k",
            "1",
            "--vars",
            "4",
            "--clauses",
            "3",
            "--seed",
            "5",
            "--out",
            "m",
        ],
    );
    assert_eq!(out.status.code(), Some(0));
    let d = parse_dg(&std::fs::read_to_string(dir.path().join("m.dg")).unwrap()).unwrap();
    assert_eq!(d.n(), 3 + 4 + 3);
    let sidecar: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("m.json")).unwrap()).unwrap();
    assert!(sidecar["expected"]["satisfiable"].is_boolean());

    // Randomized kinds refuse to run unseeded.
    let out = invlab(
        dir.path(),
        &[
            "gadget",
            "--kind",
            "meksat",
            "--k",
            "1",
            "--vars",
            "4",
            "--clauses",
            "3",
            "--out",
            "m2",
        ],
    );
    assert_eq!(out.status.code(), Some(2));
    let out = invlab(
        dir.path(),
        &[
            "gadget",
            "--kind",
            "cc-arc",
            "--graph",
            "gnp:6:0.5",
            "--out",
            "g",
        ],
    );
    assert_eq!(out.status.code(), Some(2));

    let out = invlab(
        dir.path(),
        &[
            "gadget",
            "--kind",
            "cc-vertex",
            "--graph",
            "complete:3",
            "--k",
            "1",
            "--out",
            "v",
        ],
    );
    assert_eq!(out.status.code(), Some(0));
    let sidecar: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("v.json")).unwrap()).unwrap();
    assert_eq!(sidecar["expected"]["minimum_family_size"], 2);
}

#[test]
fn tables_come_with_spec_header_and_provenance() {
    let dir = tempfile::tempdir().unwrap();

    let out = invlab(
        dir.path(),
        &[
            "table", "--kind", "tt", "--k", "2", "--n-from", "5", "--n-to", "8",
        ],
    );
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert!(lines[0].starts_with("# "));
    assert_eq!(lines[1], "k,n,value,source");
    let values: Vec<&str> = lines[2..]
        .iter()
        .map(|l| l.split(',').nth(2).unwrap())
        .collect();
    assert_eq!(values, ["2", "1", "1", "1"]);
    assert!(lines[2].ends_with("verified constructive family"));

    let out = invlab(
        dir.path(),
        &[
            "table", "--kind", "m-k", "--k", "1", "--n-from", "3", "--n-to", "7", "--jobs", "2",
        ],
    );
    let text = String::from_utf8(out.stdout).unwrap();
    for line in text.lines().skip(2) {
        let fields: Vec<&str> = line.split(',').collect();
        assert_eq!(fields[3], "1", "m_1 column in {line:?}");
        assert_eq!(fields[5], "1", "m'_1 column in {line:?}");
    }

    let out = invlab(dir.path(), &["table", "--kind", "thresholds", "--k", "3"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("3,one19k,55,1"));
    assert!(text.contains("3,three11k,31,3"));
    assert!(text.contains("3,sweep2k,7,6"));

    // Missing range is an error for ranged tables.
    let out = invlab(dir.path(), &["table", "--kind", "tt", "--k", "2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn census_reports_one_order() {
    let dir = tempfile::tempdir().unwrap();
    let out = invlab(
        dir.path(),
        &["census", "--n", "5", "--k", "2", "--jobs", "2"],
    );
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["row"]["classes"], 12);
    assert_eq!(v["row"]["m_k"], 2);
    assert_eq!(v["row"]["m_prime_k"], 2);
}

#[test]
fn formats_round_trip_over_seeded_inputs() {
    // 10,000 seeded digraphs and tournaments back through their formats.
    for seed in 0..10_000u64 {
        let n = 1 + (seed as usize % 12);
        let d = random_digraph(n, 0.1 + (seed % 9) as f64 / 10.0, seed);
        assert_eq!(parse_dg(&emit_dg(&d)).unwrap(), d, "dg seed {seed}");
        let t = Tournament::random(n, seed);
        assert_eq!(parse_trn(&emit_trn(&t)).unwrap(), t, "trn seed {seed}");
    }
    // Digons survive the trip.
    let d = Digraph::from_arcs(2, &[(0, 1), (1, 0)]).unwrap();
    assert_eq!(parse_dg(&emit_dg(&d)).unwrap(), d);
}

#[test]
fn table_survives_early_closed_pipe() {
    use std::io::Read;
    use std::process::Stdio;

    let mut child = Command::new(env!("CARGO_BIN_EXE_invlab"))
        .args([
            "table", "--kind", "m-k", "--k", "1", "--n-from", "3", "--n-to", "6",
        ])
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");

    // Read one byte, then hang up while rows are still being computed.
    let mut stdout = child.stdout.take().unwrap();
    let mut byte = [0u8; 1];
    stdout.read_exact(&mut byte).unwrap();
    drop(stdout);

    let status = child.wait().unwrap();
    let mut err = String::new();
    child
        .stderr
        .take()
        .unwrap()
        .read_to_string(&mut err)
        .unwrap();
    assert!(status.success(), "early hangup is not an error: {err}");
    assert!(!err.contains("panic"), "no panic on closed pipe: {err}");
}
