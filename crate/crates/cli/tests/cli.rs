use std::path::Path;
use std::process::{Command, Output};

fn gsslab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gsslab"))
        .args(args)
        .env_remove("GSSLAB_MAX_L")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

fn golden(name: &str) -> String {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

#[test]
fn generate_examples() {
    let out = gsslab(&["generate", "--poly", "x^3+x+1", "--shift", "4"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "1010\n");
    let out = gsslab(&["generate", "--poly", "x^5+x^2+1", "--shift", "27"]);
    assert_eq!(stdout(&out), "0000110011001111\n");
    let out = gsslab(&["generate", "--poly", "x^3+x+1", "--index", "zero"]);
    assert_eq!(stdout(&out), "0000\n");
}

#[test]
fn generate_index_forms() {
    let by_index = |spec: &str| stdout(&gsslab(&["generate", "--poly", "x^4+x+1", "--index", spec]));
    assert_eq!(by_index("ss"), by_index("s=8"));
    assert_eq!(by_index("s=8"), stdout(&gsslab(&["generate", "--poly", "x^4+x+1", "--shift", "8"])));
    // G = coordinates of α^s, here α^3 = (0,0,0,1)
    assert_eq!(by_index("G=0001"), by_index("s=3"));
}

#[test]
fn analyze_examples() {
    let out = gsslab(&["analyze", "--poly", "x^5+x^2+1", "--family", "--format", "csv"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let rows: Vec<&str> = text.lines().skip(1).collect();
    assert_eq!(rows.len(), 32);
    assert_eq!(rows.iter().filter(|r| r.split(',').nth(1) == Some("16")).count(), 28);

    let out = gsslab(&["analyze", "--poly", "x^4+x+1", "--shift", "8", "--format", "csv"]);
    let row = stdout(&out).lines().nth(1).unwrap().to_string();
    assert!(row.starts_with("8,8,"), "{row}");

    let out = gsslab(&["analyze", "--poly", "x^3+x+1", "--shift", "0", "--format", "csv"]);
    assert!(stdout(&out).lines().nth(1).unwrap().starts_with("0,1,1,"));
}

#[test]
fn verify_examples() {
    let out = gsslab(&["verify", "--poly", "x^4+x+1", "periods"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("periods: CONFIRMED [periods={1,2,8}]"));

    let out = gsslab(&["verify", "--poly", "x^4+x+1", "--all"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).matches(": CONFIRMED").count(), 9);

    let out = gsslab(&["verify", "--poly", "x^4+x^2+1", "--all"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("NotIrreducible"));
}

#[test]
fn verify_reports_counterexample_with_exit_1() {
    // the self-shrinking member of x^5+x^2+1 meets the strict upper LC bound with equality
    let out = gsslab(&["verify", "--poly", "x^5+x^2+1", "--all"]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert_eq!(text.matches(": CONFIRMED").count(), 8);
    assert!(text.contains("lc_bounds: COUNTEREXAMPLE index=16"));
}

#[test]
fn scan_examples() {
    let out = gsslab(&["scan", "--degrees", "3..3"]);
    assert!(stdout(&out).contains("degree 3: 2 primitive polynomials"));
    assert!(stdout(&out).contains("x^3+x+1") && stdout(&out).contains("x^3+x^2+1"));
    let out = gsslab(&["scan", "--degrees", "4..4"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("degree 4: 2 primitive polynomials, 2 fully confirmed"));
}

#[test]
fn input_errors_exit_2() {
    let cases: [&[&str]; 8] = [
        &["generate", "--poly", "x^3+x+1", "--shift", "7"],
        &["generate", "--poly", "x^3+x+q", "--shift", "1"],
        &["generate", "--shift", "1"],
        &["generate", "--poly", "x^3+x+1", "--index", "bogus"],
        &["verify", "--poly", "x^3+x+1"],
        &["verify", "--poly", "x^3+x+1", "nope"],
        &["scan", "--degrees", "1..3"],
        &["scan", "--degrees", "5..3"],
    ];
    for args in cases {
        let out = gsslab(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}: {}", stderr(&out));
        assert!(!stderr(&out).is_empty());
    }
    let out = gsslab(&["generate", "--poly", "x^4+x^2+1", "--shift", "1"]);
    assert!(stderr(&out).contains("poly: NotIrreducible"));
}

#[test]
fn degree_caps() {
    // whole-family commands stop at 16, single members at 24
    let out = gsslab(&["verify", "--poly", "x^17+x^3+1", "periods"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("DegreeOutOfRange"));
    let out = gsslab(&["generate", "--poly", "x^17+x^3+1", "--shift", "5"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim().len(), 1 << 16);

    let env_capped = Command::new(env!("CARGO_BIN_EXE_gsslab"))
        .args(["generate", "--poly", "x^5+x^2+1", "--shift", "1"])
        .env("GSSLAB_MAX_L", "4")
        .output()
        .unwrap();
    assert_eq!(env_capped.status.code(), Some(2));
    let flag_wins = Command::new(env!("CARGO_BIN_EXE_gsslab"))
        .args(["generate", "--poly", "x^5+x^2+1", "--shift", "1", "--max-l", "5"])
        .env("GSSLAB_MAX_L", "4")
        .output()
        .unwrap();
    assert_eq!(flag_wins.status.code(), Some(0));
}

#[test]
fn out_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("family.csv");
    let out = gsslab(&[
        "generate", "--poly", "x^4+x+1", "--family", "--format", "csv", "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), golden("generate_family_x4.csv"));
}

#[test]
fn hex_and_symbolic_inputs_agree() {
    for (sym, hex) in [("x^5+x^2+1", "0x25"), ("x^4+x+1", "0x13")] {
        for cmd in [&["verify", "--all"][..], &["analyze", "--family"][..], &["generate", "--family"][..]] {
            let a = gsslab(&[cmd, &["--poly", sym]].concat());
            let b = gsslab(&[cmd, &["--poly", hex]].concat());
            assert_eq!(a.stdout, b.stdout, "{cmd:?}");
            assert_eq!(a.status, b.status);
        }
    }
}

#[test]
fn reruns_are_byte_identical() {
    let args = ["scan", "--degrees", "2..6", "--format", "stext"];
    assert_eq!(gsslab(&args).stdout, gsslab(&args).stdout);
}

#[test]
fn golden_outputs() {
    let cases: [(&[&str], &str); 9] = [
        (&["generate", "--poly", "x^3+x+1", "--family"], "generate_family_x3.txt"),
        (&["generate", "--poly", "x^4+x+1", "--family", "--format", "csv"], "generate_family_x4.csv"),
        (&["analyze", "--poly", "x^4+x+1", "--family"], "analyze_family_x4.txt"),
        (&["analyze", "--poly", "x^5+x^2+1", "--family", "--format", "csv"], "analyze_family_x5.csv"),
        (&["analyze", "--poly", "x^4+x+1", "--shift", "8", "--format", "stext"], "analyze_x4_s8.jsonl"),
        (&["verify", "--poly", "x^4+x+1", "--all"], "verify_x4_all.txt"),
        (&["verify", "--poly", "x^5+x^2+1", "--all", "--format", "csv"], "verify_x5_all.csv"),
        (&["verify", "--poly", "x^5+x^2+1", "--all", "--format", "stext"], "verify_x5_all.jsonl"),
        (&["scan", "--degrees", "2..5"], "scan_2_5.txt"),
    ];
    for (args, file) in cases {
        assert_eq!(stdout(&gsslab(args)), golden(file), "{file}");
    }
    let out = gsslab(&["generate", "--poly", "x^3+x+1", "--shift", "4", "--trace"]);
    assert_eq!(stderr(&out), golden("trace_x3_s4.txt"));
}

#[test]
fn stext_lines_are_json_objects() {
    let out = gsslab(&["analyze", "--poly", "x^4+x+1", "--family", "--format", "stext"]);
    let lines: Vec<serde_json::Value> = stdout(&out)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(lines.len(), 16);
    assert_eq!(lines[12]["index"], "11");
    assert_eq!(lines[12]["period"], 2);
}
