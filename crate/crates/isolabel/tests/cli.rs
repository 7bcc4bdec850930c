//! End-to-end tests of the `isolabel` binary: exit codes, determinism, and
//! the documented file formats.

use std::path::Path;
use std::process::{Command, Output};

use tempfile::tempdir;

fn isolabel(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_isolabel"))
        .args(args)
        .current_dir(dir)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

#[test]
fn encode_dist_decode_roundtrip() {
    let dir = tempdir().unwrap();
    std::fs::write(dir.path().join("p3.graph"), "3 2\n0 1\n1 2\n").unwrap();

    let out = isolabel(
        &["encode", "--scheme", "dv", "-i", "p3.graph", "-o", "p3.labels"],
        dir.path(),
    );
    assert!(out.status.success(), "{}", stderr(&out));

    let out = isolabel(&["dist", "--labels", "p3.labels", "0", "2"], dir.path());
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "2");

    let out = isolabel(&["dist", "--labels", "p3.labels", "1", "1"], dir.path());
    assert_eq!(stdout(&out).trim(), "0");

    let out = isolabel(&["decode", "--labels", "p3.labels"], dir.path());
    assert!(stdout(&out).contains("2: 2 1 0"));

    // Unknown vertex is an input error.
    let out = isolabel(&["dist", "--labels", "p3.labels", "0", "9"], dir.path());
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn encode_is_deterministic() {
    let dir = tempdir().unwrap();
    let out = isolabel(
        &["gen", "--family", "connected", "--n", "30", "--p", "0.2", "--seed", "11", "-o", "g.graph"],
        dir.path(),
    );
    assert!(out.status.success());
    for scheme in ["dv", "hdv", "sep"] {
        let a = format!("{scheme}-a.labels");
        let b = format!("{scheme}-b.labels");
        assert!(isolabel(&["encode", "--scheme", scheme, "-i", "g.graph", "-o", &a], dir.path())
            .status
            .success());
        assert!(isolabel(&["encode", "--scheme", scheme, "-i", "g.graph", "-o", &b], dir.path())
            .status
            .success());
        assert_eq!(
            std::fs::read(dir.path().join(&a)).unwrap(),
            std::fs::read(dir.path().join(&b)).unwrap(),
            "{scheme} label files must be byte-identical"
        );
    }
}

#[test]
fn exit_codes_distinguish_parse_and_connectivity() {
    let dir = tempdir().unwrap();
    std::fs::write(dir.path().join("split.graph"), "4 2\n0 1\n2 3\n").unwrap();
    std::fs::write(dir.path().join("junk.graph"), "not a graph\n").unwrap();

    let out = isolabel(
        &["encode", "--scheme", "dv", "-i", "split.graph", "-o", "x.labels"],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(3), "disconnected input");
    assert!(stderr(&out).contains("graph not connected"));

    let out = isolabel(
        &["encode", "--scheme", "dv", "-i", "junk.graph", "-o", "x.labels"],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(2), "parse failure");
}

#[test]
fn universal_verify_flow_and_guard() {
    let dir = tempdir().unwrap();
    let out = isolabel(
        &["universal", "--scheme", "dv", "--class-max-n", "2", "--out-prefix", "h"],
        dir.path(),
    );
    assert!(out.status.success(), "{}", stderr(&out));
    assert!(stdout(&out).contains("3 vertices"));
    assert!(stdout(&out).contains("all embeddings isometric"));

    let out = isolabel(
        &["verify", "--scheme", "dv", "--class-max-n", "2", "--graph", "h.graph", "--map", "h.map"],
        dir.path(),
    );
    assert!(out.status.success(), "{}", stderr(&out));

    // Tampering with the mapping flips verification to exit 3.
    let map = std::fs::read_to_string(dir.path().join("h.map")).unwrap();
    let mut lines: Vec<String> = map.lines().map(|l| l.to_string()).collect();
    // Swap the labels of vertices 1 and 2 while keeping the ids.
    let l1 = lines[1].split_whitespace().skip(1).collect::<Vec<_>>().join(" ");
    let l2 = lines[2].split_whitespace().skip(1).collect::<Vec<_>>().join(" ");
    lines[1] = format!("1 {l2}");
    lines[2] = format!("2 {l1}");
    std::fs::write(dir.path().join("h.map"), lines.join("\n")).unwrap();
    let out = isolabel(
        &["verify", "--scheme", "dv", "--class-max-n", "2", "--graph", "h.graph", "--map", "h.map"],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(3));

    // Class guard is an input error.
    let out = isolabel(
        &["universal", "--scheme", "dv", "--class-max-n", "7", "--out-prefix", "big"],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn bench_emits_csv_with_bounds() {
    let dir = tempdir().unwrap();
    let out = isolabel(
        &["bench", "--scheme", "sep", "--family", "tree", "--n", "16,64", "--seeds", "3"],
        dir.path(),
    );
    assert!(out.status.success(), "{}", stderr(&out));
    let csv = stdout(&out);
    let mut lines = csv.lines();
    assert_eq!(
        lines.next().unwrap(),
        "scheme,family,n,p,seeds,max_label_bits,bound_bits,ratio"
    );
    assert_eq!(lines.count(), 2);

    // sep over non-tree families is refused.
    let out = isolabel(
        &["bench", "--scheme", "sep", "--family", "random", "--n", "16", "--seeds", "2"],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn gen_is_deterministic_and_writes_parsable_files() {
    let dir = tempdir().unwrap();
    for family in ["random", "tree", "connected"] {
        let a = format!("{family}-a.graph");
        let b = format!("{family}-b.graph");
        for name in [&a, &b] {
            let out = isolabel(
                &["gen", "--family", family, "--n", "25", "--p", "0.3", "--seed", "9", "-o", name],
                dir.path(),
            );
            assert!(out.status.success(), "{}", stderr(&out));
        }
        assert_eq!(
            std::fs::read(dir.path().join(&a)).unwrap(),
            std::fs::read(dir.path().join(&b)).unwrap()
        );
    }
}
