use std::io::Write;
use std::process::{Command, Output, Stdio};

fn run(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_mixedmult"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary starts");
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

#[test]
fn milnor_text_report() {
    let out = run(&["milnor", "--format", "text"], r#"{"command":"milnor","exponents":[3,3,3]}"#);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8(out.stdout).unwrap().contains("μ* = (8, 4, 2, 1)"));
}

#[test]
fn bezout_bound() {
    let job = r#"{"command":"bernstein","supports":[[[0,0],[2,0],[0,2]],[[0,0],[3,0],[0,3]],[[1,1]]]}"#;
    assert_eq!(run(&["bernstein"], job).status.code(), Some(1));
    let job = r#"{"command":"bernstein","supports":[[[0,0],[2,0],[0,2],[1,1]],[[0,0],[3,0],[0,3]]]}"#;
    let out = run(&["bernstein", "--format", "text"], job);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("bound = 6"), "{text}");
    assert!(text.contains("[pass] MV(d_1Δ, ..., d_nΔ)"), "{text}");
}

#[test]
fn input_errors_exit_one_and_name_the_field() {
    let out = run(&["mixedvolume"], r#"{"command":"mixedvolume","polytopes":[{"dim":3,"points":[[0,0,0],[1,0,0]]},{"dim":3,"points":[[0,0,0],[0,1,0]]}]}"#);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("polytopes"));
    let out = run(&["milnor"], r#"{"command":"hilbert","ring":{"vars":2}}"#);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("command"));
    assert_eq!(run(&["milnor"], "not json").status.code(), Some(1));
}

#[test]
fn box_cap_too_small_is_inconclusive() {
    let job = r#"{"command":"mixedmult","ring":{"vars":2},"I":"ideal(x1,x2)","J":["ideal(x1^6,x2^6)"]}"#;
    let out = run(&["mixedmult", "--box", "3"], job);
    assert_eq!(out.status.code(), Some(2), "{}", String::from_utf8_lossy(&out.stderr));
}

#[test]
fn json_reports_are_deterministic() {
    let job = r#"{"command":"rees","ring":{"vars":3},"I":"ideal(x1^2,x2^3)","c":7,"e":1}"#;
    let a = run(&["rees"], job);
    let b = run(&["rees"], job);
    assert_eq!(a.status.code(), Some(0), "{}", String::from_utf8_lossy(&a.stderr));
    assert_eq!(a.stdout, b.stdout);
}

/// Every `tests/golden/*.job.json` reproduces its frozen report byte for byte.
#[test]
fn golden_reports() {
    let dir = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("../../tests/golden");
    let mut seen = 0;
    for entry in std::fs::read_dir(&dir).unwrap() {
        let path = entry.unwrap().path();
        let Some(stem) = path.file_name().and_then(|n| n.to_str()).and_then(|n| n.strip_suffix(".job.json")) else { continue };
        let job = std::fs::read_to_string(&path).unwrap();
        let command: serde_json::Value = serde_json::from_str(&job).unwrap();
        let out = run(&[command["command"].as_str().unwrap()], &job);
        let expected = std::fs::read(dir.join(format!("{stem}.report.json"))).unwrap();
        assert_eq!(out.stdout, expected, "{stem}");
        seen += 1;
    }
    assert!(seen >= 8);
}
