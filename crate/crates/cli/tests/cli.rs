use std::io::Write;
use std::process::{Command, Stdio};

fn run(args: &[&str], stdin: &str) -> (i32, String, String) {
    run_env(args, stdin, None)
}

fn run_env(args: &[&str], stdin: &str, format: Option<&str>) -> (i32, String, String) {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_cobweb"));
    cmd.args(args)
        .env_remove("COBWEB_FORMAT")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped());
    if let Some(f) = format {
        cmd.env("COBWEB_FORMAT", f);
    }
    let mut child = cmd.spawn().unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    let out = child.wait_with_output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn check() {
    assert_eq!(
        run(&["check", "-"], "1\n2\n3\n4"),
        (0, "admissible\n".into(), String::new())
    );
    let (code, out, _) = run(&["check", "-"], "2\n3");
    assert_eq!(code, 1);
    assert_eq!(out, "not admissible at (n=2,k=1), value 3/2\n");
    let (code, out, err) = run(&["check", "-"], "abc");
    assert_eq!(code, 2);
    assert!(out.is_empty());
    assert!(err.contains("line 1: not an integer"), "{err}");
    assert_eq!(run(&["check", "-"], "# nothing\n").0, 0);
    assert_eq!(run(&["check", "-"], "1\r\n2\r\n3\r\n").0, 0);
}

#[test]
fn binomial() {
    assert_eq!(
        run(&["binomial", "-", "-n", "4", "-k", "2"], "1\n2\n3\n4\n5").1,
        "6\n"
    );
    assert_eq!(
        run(&["binomial", "-", "-n", "2", "-k", "1"], "2\n3").1,
        "3/2\n"
    );
    assert_eq!(
        run(&["binomial", "-", "-n", "2", "-k", "5"], "2\n3").1,
        "0\n"
    );
    assert_eq!(
        run(&["binomial", "-", "-n", "9", "-k", "2"], "1\n2\n3\n4\n5").0,
        2
    );
}

#[test]
fn factor() {
    assert_eq!(
        run(&["factor", "-"], "2\n6\n4").1,
        "2: [1,1,2]\n3: [0,1,0]\n"
    );
    assert_eq!(run(&["factor", "-"], "1\n1").1, "(empty decomposition)\n");
    assert_eq!(run(&["factor", "-"], "8").1, "2: [3]\n");
    let (_, out, _) = run(&["--format", "json", "factor", "-"], "2\n6\n4");
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["result"]["2"], serde_json::json!([1, 1, 2]));
    assert_eq!(v["result"]["3"], serde_json::json!([0, 1, 0]));
}

#[test]
fn enumerate() {
    assert_eq!(
        run(&["enumerate", "--depth", "2", "--cap", "1"], "").1,
        "0,0\n0,1\n1,1\n"
    );
    assert_eq!(
        run(
            &["enumerate", "--depth", "2", "--cap", "1", "--prime", "2"],
            ""
        )
        .1,
        "1,1\n1,2\n2,2\n"
    );
    assert_eq!(
        run(
            &["enumerate", "--depth", "3", "--cap", "1", "--count-only"],
            ""
        )
        .1,
        "5\n"
    );
    assert_eq!(
        run(&["enumerate", "--depth", "0", "--cap", "4"], "").1,
        "\n"
    );
}

#[test]
fn sample() {
    assert_eq!(
        run(&["sample", "--depth", "0"], ""),
        (0, "\n".into(), String::new())
    );
    let a = run(
        &["sample", "--depth", "10", "--seed", "42", "--mean", "3/2"],
        "",
    );
    let b = run(
        &["sample", "--depth", "10", "--seed", "42", "--mean", "3/2"],
        "",
    );
    assert_eq!(a, b);
    assert_eq!(a.1.trim().split(',').count(), 10);
    let seq = run(
        &["sample", "--depth", "10", "--seed", "42", "--prime", "3"],
        "",
    )
    .1;
    assert_eq!(run(&["check", "-"], &seq.trim().replace(',', "\n")).0, 0);
}

#[test]
fn verify() {
    let (code, out, _) = run(&["verify", "--max-depth", "6", "--max-cap", "2"], "");
    assert_eq!(code, 0);
    assert!(out.trim_end().ends_with("5/5 suites passed"), "{out}");
    let (code, out, _) = run(&["verify", "--trials", "0"], "");
    assert_eq!(code, 0);
    assert!(out.contains("SKIP roundtrip"));
    let (code, out, _) = run(&["verify", "--mutant", "successor-off-by-one"], "");
    assert_eq!(code, 1);
    assert!(out.contains("FAIL successor-exactness: path ["), "{out}");
}

#[test]
fn triangle() {
    let (code, out, _) = run(&["triangle", "-", "--depth", "4"], "1\n1\n2\n3\n5");
    assert_eq!(code, 0);
    assert_eq!(out.lines().nth(4), Some("1 3 6 3 1"));
}

#[test]
fn format_from_environment() {
    let (_, out, _) = run_env(&["check", "-"], "1\n2", Some("json"));
    assert!(out.starts_with("{\"command\":\"check\""), "{out}");
    // the flag wins over the environment
    let (_, out, _) = run_env(&["--format", "text", "check", "-"], "1\n2", Some("json"));
    assert_eq!(out, "admissible\n");
    assert_eq!(run_env(&["check", "-"], "1", Some("yaml")).0, 2);
}

#[test]
fn json_check_fields() {
    let (_, out, _) = run(&["--format", "json", "check", "-"], "1\n2\n3");
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["result"]["admissible"], true);
    assert!(v["first_failure"].is_null() && v["witness"].is_null());
    assert_eq!(v["input"]["length"], 3);
    assert_eq!(v["version"], env!("CARGO_PKG_VERSION"));
}
