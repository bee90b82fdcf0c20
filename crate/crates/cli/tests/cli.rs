use std::path::PathBuf;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_facemodel"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn diagram(name: &str, text: &str) -> PathBuf {
    let p = std::env::temp_dir().join(format!("facemodel-cli-{}-{name}.lnk", std::process::id()));
    std::fs::write(&p, text).unwrap();
    p
}

fn rows(out: &str) -> Vec<Vec<String>> {
    out.lines()
        .map(|l| l.split('\t').map(String::from).collect())
        .collect()
}

fn value(out: &str, key: &str) -> String {
    rows(out)
        .into_iter()
        .find(|r| r[0] == key)
        .map(|r| r[1..].join("\t"))
        .unwrap()
}

#[test]
fn verify_all_pass() {
    let o = run(&[
        "verify",
        "--N",
        "2",
        "--L",
        "2",
        "--eps",
        "1",
        "--zeta-exp",
        "1",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let s = stdout(&o);
    assert!(s.contains("PASS all"));
    assert!(!s.contains("FAIL"));
    for suite in [
        "ybe/",
        "inversion/",
        "frt/",
        "det/",
        "omega/",
        "braiding-scalars/",
        "modular/",
        "su2/",
        "statesum-invariance/",
    ] {
        assert!(s.contains(suite), "{suite}");
    }
}

#[test]
fn verify_det_negative_control() {
    let o = run(&[
        "verify",
        "--N",
        "2",
        "--L",
        "2",
        "--zeta-exp",
        "1",
        "--t-exp",
        "3",
        "--suite",
        "det",
    ]);
    assert_eq!(o.status.code(), Some(1));
    let s = stdout(&o);
    assert!(s.contains("FAIL det/"));
    assert!(s.contains("ζ^N = ε^{N−1} t"));
}

#[test]
fn verify_ybe_n3() {
    let o = run(&["verify", "--suite", "ybe", "--N", "3", "--L", "3"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn config_errors_exit_2() {
    assert_eq!(run(&["verify", "--suite", "nope"]).status.code(), Some(2));
    assert_eq!(
        run(&["verify", "--N", "2", "--L", "2", "--zeta-exp", "2"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["verify", "--N", "3", "--iota", "-1"]).status.code(),
        Some(2)
    );
    assert_eq!(
        run(&["verify", "--suite", "su2", "--N", "3", "--L", "2"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(run(&["dims", "--bogus"]).status.code(), Some(2));
}

#[test]
fn machine_output_is_reproducible() {
    let args = [
        "verify", "--N", "2", "--L", "1", "--format", "machine", "--seed", "17",
    ];
    let a = run(&args);
    let b = Command::new(env!("CARGO_BIN_EXE_facemodel"))
        .args(args)
        .env("FACEMODEL_THREADS", "1")
        .output()
        .unwrap();
    assert_eq!(a.stdout, b.stdout);
    let s = stdout(&a);
    assert_eq!(value(&s, "seed"), "17");
    assert_eq!(value(&s, "result"), "PASS");
}

#[test]
fn dims_n2_l2() {
    let o = run(&["dims", "--N", "2", "--L", "2", "--format", "machine"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    let floats: Vec<f64> = rows(&s)
        .iter()
        .filter(|r| r[0].starts_with("dim["))
        .map(|r| r[2].split(['+', 'i']).next().unwrap().parse().unwrap())
        .collect();
    let r2 = 2f64.sqrt();
    assert_eq!(floats.len(), 3);
    for (x, e) in floats.iter().zip([1.0, r2, 1.0]) {
        assert!((x - e).abs() < 1e-9, "{x} vs {e}");
    }
    assert_eq!(rows(&s).iter().filter(|r| r[0] == "B").count(), 10);
}

#[test]
fn fusion_n2_l1() {
    let o = run(&["fusion", "--N", "2", "--L", "1", "--format", "machine"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    let n: Vec<u32> = rows(&s)
        .iter()
        .filter(|r| r[0].starts_with("N["))
        .map(|r| r[1].parse().unwrap())
        .collect();
    // 1 x 1 = 1 and 1 x 1 = 0 in the two-object table
    assert_eq!(n, vec![1, 0, 0, 1, 0, 1, 1, 0]);
}

#[test]
fn smatrix_n3_l1() {
    let o = run(&["smatrix", "--N", "3", "--L", "1", "--format", "machine"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    let entries: Vec<Vec<String>> = rows(&s)
        .into_iter()
        .filter(|r| r[0].starts_with("S["))
        .collect();
    assert_eq!(entries.len(), 9);
    assert_eq!(entries[0][1], "1");
}

#[test]
fn tau_s3_presentations() {
    let files = [
        diagram("empty", "# nothing\n"),
        diagram("hopf", "cap 0\ncap 2\nx+ 1\nx+ 1\ncup 0\ncup 0\n"),
        diagram("curl", "cap 0\ncap 2\nx+ 1\ncup 2\ncup 0\n"),
    ];
    let mut vals = Vec::new();
    for f in &files {
        let o = run(&["tau", "--file", f.to_str().unwrap(), "--L", "2", "--embed"]);
        assert_eq!(
            o.status.code(),
            Some(0),
            "{}",
            String::from_utf8_lossy(&o.stderr)
        );
        vals.push(value(&stdout(&o), "tau"));
    }
    assert_eq!(vals[0], "(0) + (1/4)*Delta");
    assert!(vals.iter().all(|v| *v == vals[0]));
    for f in files {
        let _ = std::fs::remove_file(f);
    }
}

#[test]
fn tau_parse_error_has_location() {
    let f = diagram("bad", "cap 0\ncup 1\n");
    let o = run(&["tau", "--file", f.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains(":2:5:"));
    let _ = std::fs::remove_file(f);
}
