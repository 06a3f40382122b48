use std::io::Write;
use std::process::{Command, Output, Stdio};

const EXAMPLE: &str = r#"{"board":[8,8,8,8,8,6,5,3],"markers":[[1,4],[2,5],[3,8],[4,6],[5,7],[6,3],[7,1],[8,2]]}"#;

fn ferrers(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_ferrers"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn phi_star_on_the_example() {
    let o = ferrers(&["phi", "--k", "3", "--star"], EXAMPLE);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).ends_with("rows: 3 4 8 6 7 1 2 5\n"));
    let o = ferrers(&["--json", "phi", "--k", "3"], EXAMPLE);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["rows"], serde_json::json!([3, 5, 8, 6, 7, 1, 4, 2]));
}

#[test]
fn gda_3_diagram_and_border() {
    let o = ferrers(&["gda", "--k", "3"], EXAMPLE);
    assert_eq!(o.status.code(), Some(0));
    let lines: Vec<String> = stdout(&o).lines().map(str::to_string).collect();
    // Top line is corner row 8; corner row 5 is the fourth line.
    assert_eq!(lines[3].split_whitespace().last(), Some("32"));
    let o = ferrers(&["gda", "--k", "3", "--border"], EXAMPLE);
    assert_eq!(stdout(&o), "(∅,1,2,21,22,32,22,21,31,3,4,3,2,3,2,1,∅)\n");
    let o = ferrers(&["gda", "--border"], EXAMPLE);
    assert!(stdout(&o).contains(",221,"));
}

#[test]
fn rendering_is_byte_stable() {
    let a = ferrers(&["render", "--what", "gda"], EXAMPLE);
    let b = ferrers(&["render", "--what", "gda"], EXAMPLE);
    assert_eq!(a.stdout, b.stdout);
    let empty = ferrers(&["render"], r#"{"board":[2,2],"markers":[]}"#);
    assert_eq!(stdout(&empty), "2 | . .\n1 | . .\n");
    let rs = ferrers(
        &["--json", "rs"],
        r#"{"board":[9,9,9,9,9,9,9,9,9],"markers":[[1,2],[3,9],[4,7],[6,5],[7,1],[8,4],[9,8]]}"#,
    );
    let v: serde_json::Value = serde_json::from_str(&stdout(&rs)).unwrap();
    assert_eq!(v["insertion"], serde_json::json!([[1, 4, 8], [2, 5], [7], [9]]));
}

#[test]
fn pivots_and_knuth() {
    let fig1 = r#"{"board":[9,9,9,9,9,9,9,9,9],"markers":[[1,8],[2,4],[3,1],[4,5],[6,7],[7,9],[9,2]]}"#;
    let o = ferrers(&["pivots", "--side", "left", "--coords"], fig1);
    let text = stdout(&o);
    assert!(text.contains("pivots: (2,5) (3,2) (4,7) (6,9)\n"));
    assert!(text.contains("(9,2) rho=inf kappa=3\n"));
    assert_eq!(stdout(&ferrers(&["knuth", "--neighbors", "213"], "")), "231\n");
    assert_eq!(stdout(&ferrers(&["knuth", "--equivalent", "213", "231"], "")), "true\n");
    let spaced = r#"{"board":[9,9,9,9,9,9,9,9],"markers":[[1,5],[2,3],[3,4],[4,7],[5,6],[7,2],[8,8],[9,1]]}"#;
    let o = ferrers(&["knuth", "--kind", "ds-left", "--a", "6", "--b", "9"], spaced);
    assert!(stdout(&o).ends_with("rows: 5 3 4 7 6 2 1 8\n"));
    let o = ferrers(&["knuth", "--kind", "DL-right", "--a", "6", "--b", "9"], spaced);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn count_and_verify() {
    assert_eq!(stdout(&ferrers(&["count", "--board", "4,4,4,4", "--pattern", "321"], "")), "14\n");
    assert_eq!(stdout(&ferrers(&["count", "--board", "2,1", "--pattern", "21"], "")), "1\n");
    let o = ferrers(&["verify", "--suite", "gda-roundtrip", "--max-cols", "3", "--max-rows", "3"], "");
    assert_eq!(o.status.code(), Some(0));
    let o = ferrers(&["--json", "verify", "--suite", "main-theorem", "--max-cols", "3", "--max-rows", "3", "--k", "2,3"], "");
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    for key in ["suite", "params", "cases", "violations", "seconds"] {
        assert!(v.get(key).is_some(), "{key}");
    }
    assert_eq!(v["params"]["ks"], serde_json::json!([2, 3]));
    let o = ferrers(&["verify", "--suite", "lemma1-shape", "--shards", "4", "--shard", "2"], "");
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn usage_errors_exit_2() {
    let cases: &[(&[&str], &str, &str)] = &[
        (&["gda", "--k", "1"], EXAMPLE, "at least 2"),
        (&["phi", "--k", "0"], EXAMPLE, "at least 2"),
        (&["rs"], r#"{"board":[2,1],"markers":[[2,2]]}"#, "marker off board"),
        (&["rs"], r#"{"board":[2,2],"markers":[[1,1],[2,1]]}"#, "row 1"),
        (&["rs"], "{not json", "malformed JSON"),
        (&["rs"], r#"{"board":[1,3],"markers":[]}"#, "invalid placement"),
        (&["pivots"], EXAMPLE, "rectangular"),
        (&["verify", "--suite", "nope"], "", "unknown suite"),
        (&["verify", "--suite", "gke", "--shards", "2", "--shard", "2"], "", "--shard"),
        (&["knuth", "--neighbors", "2213"], "", "not a permutation"),
        (&["gda"], r#"{"board":[100000],"markers":[]}"#, "input limit"),
        (&["bogus"], "", ""),
    ];
    for (args, input, needle) in cases {
        let o = ferrers(args, input);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(stderr(&o).contains(needle), "{args:?}: {}", stderr(&o));
    }
    assert_eq!(ferrers(&["--help"], "").status.code(), Some(0));
}

#[test]
fn dispatch_survives_garbage() {
    let inputs = [
        "",
        "null",
        "[]",
        r#"{"board":[0],"markers":[]}"#,
        r#"{"board":[2],"markers":[[0,1]]}"#,
        r#"{"board":[2],"markers":[[1]]}"#,
        r#"{"board":[2],"markers":[[1,1]],"extra":1}"#,
        r#"{"board":[18446744073709551615],"markers":[]}"#,
        r#"{"board":[3],"markers":[[-1,1]]}"#,
    ];
    let verbs: &[&[&str]] = &[&["rs"], &["gda"], &["phi", "--k", "2", "--star"], &["pivots"], &["render", "--what", "gda"]];
    for input in inputs {
        for verb in verbs {
            let mut out = Vec::new();
            let mut err = Vec::new();
            let code = ferrers::cli::run(
                std::iter::once("ferrers").chain(verb.iter().copied()),
                &mut input.as_bytes(),
                &mut out,
                &mut err,
            );
            assert_eq!(code, 2, "{verb:?} on {input}");
        }
    }
}
