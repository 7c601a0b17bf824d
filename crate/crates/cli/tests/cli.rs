use std::path::Path;

use hypercover_cli::{run, EXIT_FAILURE, EXIT_IO, EXIT_OK, EXIT_USAGE};

struct Run {
    code: i32,
    out: String,
    err: String,
}

fn hc(args: &[&str]) -> Run {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("hypercover").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    Run {
        code,
        out: String::from_utf8(out).unwrap(),
        err: String::from_utf8(err).unwrap(),
    }
}

fn p(path: &Path) -> &str {
    path.to_str().unwrap()
}

#[test]
fn verify_h1_reports_delta2() {
    let r = hc(&["verify", "--family", "H1", "--m", "2"]);
    assert_eq!(r.code, EXIT_OK, "{}", r.err);
    assert!(r.out.contains("measured_delta2: 4\n"), "{}", r.out);
    assert!(r.out.ends_with("result: PASS\n"));
}

#[test]
fn verify_json_matches_golden() {
    let r = hc(&["verify", "--family", "H1", "--m", "1", "--format", "json"]);
    assert_eq!(r.code, EXIT_OK);
    let golden = include_str!("golden/verify_h1_m1.json");
    assert_eq!(r.out, golden);
}

#[test]
fn h4_x_is_not_covered_by_k5_minus() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("h.hg");
    assert_eq!(
        hc(&["construct", "--family", "H4", "--n", "7", "--out", p(&path)]).code,
        EXIT_OK
    );
    let r = hc(&["covering", "--in", p(&path), "--pattern", "K5-", "--vertex", "x"]);
    assert_eq!(r.code, EXIT_FAILURE);
    assert!(r.out.contains("vertex x (0): uncovered"), "{}", r.out);

    // With parts of size 3 every vertex other than x lies in a K5-.
    assert_eq!(
        hc(&["construct", "--family", "H4", "--n", "10", "--out", p(&path)]).code,
        EXIT_OK
    );
    let r = hc(&[
        "covering",
        "--in",
        p(&path),
        "--pattern",
        "K5-",
        "--all",
        "--format",
        "json",
    ]);
    assert_eq!(r.code, EXIT_FAILURE);
    let v: serde_json::Value = serde_json::from_str(&r.out).unwrap();
    assert_eq!(v["uncovered"], serde_json::json!([0]));
    assert_eq!(v["witness_embeddings"].as_object().unwrap().len(), 9);
}

#[test]
fn covering_succeeds_on_complete_graph() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("k6.hg");
    let edges: Vec<String> = (0..6)
        .flat_map(|a| (a + 1..6).flat_map(move |b| (b + 1..6).map(move |c| format!("{a} {b} {c}\n"))))
        .collect();
    std::fs::write(&path, format!("HG 3 6 20\n{}", edges.concat())).unwrap();
    for pattern in ["K4", "K5-", "Kt:6"] {
        let r = hc(&["covering", "--in", p(&path), "--pattern", pattern]);
        assert_eq!(r.code, EXIT_OK, "{pattern}: {}", r.out);
    }
    let r = hc(&[
        "covering",
        "--in",
        p(&path),
        "--pattern",
        "K5",
        "--vertex",
        "3",
        "--format",
        "json",
    ]);
    assert_eq!(r.code, EXIT_OK);
    assert!(r.out.contains("\"covered\": true"));
}

#[test]
fn oracle_small_case_is_exhaustive() {
    let r = hc(&["oracle", "--n", "6", "--pattern", "K4-"]);
    assert_eq!(r.code, EXIT_OK, "{}", r.err);
    assert!(
        r.out.contains("value: 2\n") && r.out.contains("exhaustive: true\n"),
        "{}",
        r.out
    );
    let r = hc(&[
        "oracle",
        "--n",
        "6",
        "--pattern",
        "K4-",
        "--threads",
        "2",
        "--format",
        "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&r.out).unwrap();
    assert_eq!(v["value"], 2);
    assert!(v["witness"].as_str().unwrap().starts_with("HG 3 6 "));
}

#[test]
fn oracle_budget_exhaustion_exits_nonzero() {
    let r = hc(&["oracle", "--n", "8", "--pattern", "K5-", "--budget-nodes", "100"]);
    assert_eq!(r.code, EXIT_FAILURE);
    assert!(r.out.contains("exhaustive: false"));
    let r = hc(&["oracle", "--n", "12", "--pattern", "K4-"]);
    assert_eq!(r.code, EXIT_USAGE, "{}", r.err);
}

#[test]
fn koenig_emits_matching_sections() {
    let dir = tempfile::tempdir().unwrap();
    let g = dir.path().join("g.hg");
    let sides = dir.path().join("sides");
    std::fs::write(&g, "HG 2 5 4\n0 3\n0 4\n1 3\n2 4\n").unwrap();
    std::fs::write(&sides, "# parts\nA 0 1 2\nB 3 4\n").unwrap();
    let r = hc(&["koenig", "--in", p(&g), "--sides", p(&sides)]);
    assert_eq!(r.code, EXIT_OK, "{}", r.err);
    let lines: Vec<&str> = r.out.lines().collect();
    assert_eq!(lines[0], "HG 2 5 4");
    assert_eq!(lines.iter().filter(|l| l.starts_with("M ")).count(), 2);
    assert_eq!(lines.len(), 1 + 2 + 4);

    std::fs::write(&sides, "A 0 1\nB 2 3 4\n").unwrap();
    let r = hc(&["koenig", "--in", p(&g), "--sides", p(&sides)]);
    assert_eq!(r.code, EXIT_USAGE);
    assert!(r.err.contains("2-4"), "{}", r.err);
}

#[test]
fn export_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let hg = dir.path().join("t.hg");
    let json = dir.path().join("t.json");
    assert_eq!(
        hc(&["construct", "--family", "T", "--sizes", "2,2,3", "--out", p(&hg)]).code,
        EXIT_OK
    );
    assert_eq!(
        hc(&["export", "--in", p(&hg), "--format", "json", "--out", p(&json)]).code,
        EXIT_OK
    );
    let back = hc(&["export", "--in", p(&json), "--format", "hg"]);
    assert_eq!(back.out, std::fs::read_to_string(&hg).unwrap());
}

#[test]
fn spotcheck_reports_seed() {
    let r = hc(&[
        "spotcheck",
        "--n",
        "7",
        "--pattern",
        "K5-",
        "--t",
        "4",
        "--samples",
        "50",
    ]);
    assert_eq!(r.code, EXIT_OK, "{}", r.err);
    assert!(r.out.contains(&format!("seed: {}\n", hypercover::oracle::DEFAULT_SEED)));
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["frobnicate"][..],
        &["verify", "--family", "H1"],
        &["verify", "--family", "H1", "--m", "2", "--n", "3"],
        &["verify", "--family", "H5", "--m", "1"],
        &["verify", "--family", "T", "--sizes", "1,2"],
        &["verify", "--family", "H1", "--m", "0"],
        &["verify", "--family", "H1", "--m", "2", "--bogus"],
        &["oracle", "--n", "6", "--pattern", "K9-"],
        &["oracle", "--n", "6", "--pattern", "K4-", "--budget-seconds", "-1"],
    ] {
        let r = hc(args);
        assert_eq!(r.code, EXIT_USAGE, "{args:?}: {}", r.err);
        assert!(r.out.is_empty() && !r.err.is_empty(), "{args:?}");
    }
}

#[test]
fn io_and_parse_errors_exit_3() {
    let dir = tempfile::tempdir().unwrap();
    let missing = dir.path().join("nope.hg");
    let r = hc(&["covering", "--in", p(&missing), "--pattern", "K4-", "--all"]);
    assert_eq!(r.code, EXIT_IO);
    let bad = dir.path().join("bad.hg");
    std::fs::write(&bad, "HG 3 4 1\n0 1 7\n").unwrap();
    let r = hc(&["covering", "--in", p(&bad), "--pattern", "K4-", "--all"]);
    assert_eq!(r.code, EXIT_IO);
    assert!(r.err.contains("line 2"), "{}", r.err);
    let r = hc(&[
        "construct",
        "--family",
        "G1",
        "--out",
        p(&dir.path().join("no/such/dir/g.hg")),
    ]);
    assert_eq!(r.code, EXIT_IO);
}

#[test]
fn vertex_x_needs_header() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("h.hg");
    std::fs::write(&path, "HG 3 4 1\n0 1 2\n").unwrap();
    let r = hc(&["covering", "--in", p(&path), "--pattern", "K4-", "--vertex", "x"]);
    assert_eq!(r.code, EXIT_USAGE);
}

#[test]
fn help_exits_zero() {
    let r = hc(&["--help"]);
    assert_eq!(r.code, EXIT_OK);
    for sub in ["construct", "verify", "covering", "koenig", "oracle", "export"] {
        assert!(r.out.contains(sub), "{sub}");
    }
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_hypercover");
    let status = |args: &[&str]| {
        std::process::Command::new(bin)
            .args(args)
            .output()
            .unwrap()
            .status
            .code()
    };
    assert_eq!(status(&["verify", "--family", "G2"]), Some(0));
    assert_eq!(status(&["verify"]), Some(2));
    assert_eq!(
        status(&["export", "--in", "/nonexistent/file", "--format", "json"]),
        Some(3)
    );
}
