use std::io::Write;
use std::process::{Command, Output};

fn cobord(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cobord"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap().trim_end().to_string()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn matrix_file(contents: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(contents.as_bytes()).unwrap();
    f
}

const LOOP_2_1: &str = "(coev ; (a^2 * id(-)) ; swap(+,-) ; ev) * (coev ; (a^1 * id(-)) ; swap(+,-) ; ev)";

#[test]
fn normalize_examples() {
    let o = cobord(&["normalize", "--term", "a^2 ; a^3"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "src=+; tgt=+; arcs=[(s0,t0,5)]; circles=[]");

    let o = cobord(&["normalize", "--term", "(coev * id(+)) ; (id(+) * ev)"]);
    assert_eq!(stdout(&o), "src=+; tgt=+; arcs=[(s0,t0,0)]; circles=[]");
}

#[test]
fn user_errors_exit_one() {
    let o = cobord(&["normalize", "--term", "ev ; ev"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("type"), "{}", stderr(&o));

    let o = cobord(&["normalize", "--term", "ev ;; id(1)"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains('4'), "{}", stderr(&o));

    assert_eq!(cobord(&["check", "nonsense"]).status.code(), Some(1));
    assert_eq!(cobord(&["trace", "--term", "a^1", "--theta", "theta[x]"]).status.code(), Some(1));
    assert_eq!(cobord(&["classify", "--theta", "theta[1]", "--target", "{1}", "--bound", "0"]).status.code(), Some(1));
    assert_eq!(cobord(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(cobord(&["--help"]).status.code(), Some(0));
}

#[test]
fn trace_examples() {
    for (term, spec, want) in [
        ("a^1", "theta[3,0,-2]", "{-2,0,3}"),
        ("id(+)", "theta[1]", "{0}"),
        ("a^2 * a^5", "theta[1]", "{2,5}"),
    ] {
        let o = cobord(&["trace", "--term", term, "--theta", spec]);
        assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
        assert_eq!(stdout(&o), want);
    }
    let o = cobord(&["trace", "--term", "ev", "--theta", "theta[1]"]);
    assert_eq!(o.status.code(), Some(1));
    let o = cobord(&["trace", "--term", "swap(+,-) ; ev ; coev", "--theta", "theta[-1]"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn eval_examples() {
    let diag = matrix_file(r#"{"dim": 2, "entries": [["1", "0"], ["0", "3/2"]]}"#);
    let path = diag.path().to_str().unwrap();
    let o = cobord(&["eval", "--term", LOOP_2_1, "--matrix", path]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert_eq!(stdout(&o), "rows=1; cols=1; entries=[[65/8]]");

    let d12 = matrix_file(r#"{"dim": 2, "entries": [["1", "0"], ["0", "2"]]}"#);
    let o = cobord(&["eval", "--term", "a^1", "--matrix", d12.path().to_str().unwrap()]);
    assert_eq!(stdout(&o), "rows=2; cols=2; entries=[[1,0],[0,2]]");

    let m3 = matrix_file(r#"{"dim": 3, "entries": [["2","1","0"],["0","1","-1/3"],["1","0","1"]]}"#);
    let o = cobord(&["eval", "--term", "id(+)", "--matrix", m3.path().to_str().unwrap()]);
    assert_eq!(stdout(&o), "rows=3; cols=3; entries=[[1,0,0],[0,1,0],[0,0,1]]");
}

#[test]
fn bad_matrix_files_exit_one() {
    for bad in [
        "{\"dim\": 2,\n \"entries\": [[\"1\", \"0\"], [\"0\", \"1/0\"]]}",
        r#"{"dim": 2, "entries": [["1", "0"], ["0", "0.5"]]}"#,
        r#"{"dim": 2, "entries": [["1", "0"]]}"#,
        r#"{"dim": 2, "entries": [["1", "2"], ["2", "4"]]}"#,
        "not json",
    ] {
        let f = matrix_file(bad);
        let o = cobord(&["eval", "--term", "a^1", "--matrix", f.path().to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(1), "{bad}");
        assert!(stderr(&o).starts_with("error:"), "{}", stderr(&o));
    }
    let f = matrix_file("{\"dim\": 2,\n \"entries\": [[\"1\", \"0\"], [\"0\", \"1/0\"]]}");
    let o = cobord(&["eval", "--term", "a^1", "--matrix", f.path().to_str().unwrap()]);
    assert!(stderr(&o).contains("line 2"), "{}", stderr(&o));
    let o = cobord(&["eval", "--term", "a^1", "--matrix", "/nonexistent/m.json"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn classify_examples() {
    let o = cobord(&["classify", "--theta", "theta[2]", "--target", "{1}"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("none") && stdout(&o).contains("divisib"), "{}", stdout(&o));

    let o = cobord(&["classify", "--theta", "theta[1,1]", "--target", "{3}"]);
    assert!(stdout(&o).starts_with("none"), "{}", stdout(&o));

    let o = cobord(&["classify", "--theta", "theta[-1]", "--target", "{2,-5,0}"]);
    assert!(stdout(&o).starts_with("witness"), "{}", stdout(&o));

    let o = cobord(&["classify", "--term", LOOP_2_1]);
    assert_eq!(stdout(&o), "{1,2}");
}

#[test]
fn check_suites_pass_and_are_deterministic() {
    let a = cobord(&["check", "cyclicity", "--cases", "200", "--seed", "7"]);
    assert_eq!(a.status.code(), Some(0), "{}", stdout(&a));
    assert!(stdout(&a).ends_with("result: pass"));
    let b = cobord(&["check", "cyclicity", "--cases", "200", "--seed", "7"]);
    assert_eq!(a.stdout, b.stdout);

    for suite in ["laws", "roundtrip", "naturality"] {
        let o = cobord(&["check", suite, "--cases", "50"]);
        assert_eq!(o.status.code(), Some(0), "{suite}: {}", stdout(&o));
    }
    let o = cobord(&["check", "classify", "--bound", "4"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("divisibility") && stdout(&o).contains("component-count"));
}

#[test]
fn structured_output() {
    let o = cobord(&["--format", "structured", "normalize", "--term", "a^2 ; a^3"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["src"], "+");
    assert_eq!(v["tgt"], "+");

    let o = cobord(&["trace", "--format", "structured", "--term", "a^1", "--theta", "theta[3,0,-2]"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["circles"], serde_json::json!(["-2", "0", "3"]));

    let o = cobord(&["--format", "structured", "classify", "--theta", "theta[2]", "--target", "{1}"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["result"], "none");
    assert_eq!(v["obstruction"], "divisibility");

    let o = cobord(&["--format", "structured", "check", "laws", "--cases", "10"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(v.is_object());
}

#[test]
fn no_floating_point_in_output() {
    let d = matrix_file(r#"{"dim": 2, "entries": [["1/3", "0"], ["0", "-7/2"]]}"#);
    let o = cobord(&["eval", "--term", "a^-1", "--matrix", d.path().to_str().unwrap()]);
    assert_eq!(stdout(&o), "rows=2; cols=2; entries=[[3,0],[0,-2/7]]");
}
