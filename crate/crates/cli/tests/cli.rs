use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::{Command, Stdio};

use serde_json::Value;

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn data(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
        .display()
        .to_string()
}

fn run_with(args: &[&str], stdin: &str) -> Run {
    let mut argv = vec!["laperm"];
    argv.extend_from_slice(args);
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = laperm::run(argv, &mut stdin.as_bytes(), &mut out, &mut err, None);
    Run {
        code,
        stdout: String::from_utf8(out).unwrap(),
        stderr: String::from_utf8(err).unwrap(),
    }
}

fn run(args: &[&str]) -> Run {
    run_with(args, "")
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut argv = vec!["--json"];
    argv.extend_from_slice(args);
    let r = run(&argv);
    let doc = serde_json::from_str(&r.stdout).unwrap_or_else(|e| panic!("{args:?}: {e}\n{}", r.stdout));
    (r.code, doc)
}

/// Every leaf is a string, a boolean or null: numbers travel as strings.
fn assert_no_numbers(v: &Value, path: &str) {
    match v {
        Value::Number(n) => panic!("{path} is the JSON number {n}"),
        Value::Array(xs) => xs
            .iter()
            .enumerate()
            .for_each(|(i, x)| assert_no_numbers(x, &format!("{path}[{i}]"))),
        Value::Object(m) => m.iter().for_each(|(k, x)| assert_no_numbers(x, &format!("{path}.{k}"))),
        _ => {}
    }
}

fn golden_path(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(format!("{name}.json"))
}

/// Compares against `tests/golden/<name>.json`; `LAPERM_BLESS=1` rewrites it.
fn golden(name: &str, args: &[&str], expected_code: i32) {
    let (code, doc) = json(args);
    assert_eq!(code, expected_code, "{args:?}");
    assert_eq!(doc["schema"], "laperm.report/1");
    assert_no_numbers(&doc, "$");
    let path = golden_path(name);
    let rendered = serde_json::to_string_pretty(&doc).unwrap() + "\n";
    if std::env::var_os("LAPERM_BLESS").is_some() {
        fs::write(&path, &rendered).unwrap();
        return;
    }
    let stored = fs::read_to_string(&path).unwrap_or_else(|_| panic!("missing {}", path.display()));
    let stored: Value = serde_json::from_str(&stored).unwrap();
    assert_eq!(doc, stored, "{name} differs from its golden file");
}

#[test]
fn golden_family_perm() {
    golden("family_d35", &["family", "D(3,5)", "--emit", "perm"], 0);
}

#[test]
fn golden_verify_confirmed() {
    golden("verify_t39_n6", &["verify", "T39", "--n", "6"], 0);
}

#[test]
fn golden_verify_refuted() {
    golden("verify_r1_n10_p4", &["verify", "R1", "--n", "10", "--p", "4"], 1);
}

#[test]
fn golden_enumerate_rank() {
    golden(
        "enumerate_trees8_p3",
        &["enumerate", "--class", "trees", "--n", "8", "--p", "3", "--rank", "3"],
        0,
    );
}

#[test]
fn golden_formula() {
    golden("formula_broom", &["formula", "Broom(10,4)"], 0);
}

#[test]
fn golden_error() {
    golden("error_unknown_theorem", &["verify", "T99", "--n", "6"], 2);
}

#[test]
fn text_output_pairs_closed_form_and_engine() {
    let r = run(&["family", "D(3,5)"]);
    assert_eq!(r.code, 0);
    assert_eq!(r.stdout, "D(3,5): closed form 46, engine 46 [equal]\n");
    let r = run(&["enumerate", "--class", "trees", "--n", "8", "--p", "3", "--rank", "3"]);
    let values: Vec<&str> = r
        .stdout
        .lines()
        .skip(1)
        .filter_map(|l| l.split_whitespace().last())
        .collect();
    assert_eq!(values, ["46", "78", "94"]);
}

#[test]
fn permanents_of_small_inputs() {
    let perm = |file: &str, extra: &[&str]| {
        let path = data(file);
        let mut args = vec!["--json", "perm", path.as_str()];
        args.extend_from_slice(extra);
        let r = run(&args);
        assert_eq!(r.code, 0, "{file}: {}", r.stderr);
        let doc: Value = serde_json::from_str(&r.stdout).unwrap();
        doc["permanent"].as_str().unwrap().to_string()
    };
    assert_eq!(perm("p5.txt", &[]), "24");
    assert_eq!(perm("s5.txt", &[]), "8");
    assert_eq!(perm("c4.g6", &["--format", "graph6"]), "36");
    let r = run_with(&["perm"], "4\n0 1\n1 2\n2 3\n3 0\n");
    assert!(r.stdout.contains("per L = 36"), "{}", r.stdout);
}

#[test]
fn compare_modes() {
    let (p5, s5) = (data("p5.txt"), data("s5.txt"));
    let r = run(&["compare", &s5, &p5]);
    assert!(r.stdout.contains("first < second"), "{}", r.stdout);
    let (code, doc) = json(&["compare", &s5, &p5, "--mode", "dominance"]);
    assert_eq!(code, 0);
    assert_no_numbers(&doc, "$");
    assert_eq!(doc["relation"], "first strictly dominated");
}

#[test]
fn transform_reports_decrease() {
    let path = data("p5.txt");
    let r = run(&["transform", &path, "--move", "op1(u=0,v=1,w=2)", "--emit", "perm"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert!(
        r.stdout.ends_with("decreased\n") && !r.stdout.contains("NOT"),
        "{}",
        r.stdout
    );
    let r = run(&["transform", &path, "--move", "op1(u=2,v=1,w=3)"]);
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("pendant"), "{}", r.stderr);
}

#[test]
fn exit_codes() {
    let cases: &[(&[&str], i32)] = &[
        (&["verify", "T32", "--n", "7"], 0),
        (&["verify", "L34", "--n", "50"], 0),
        (&["verify", "R3", "--n", "10"], 1),
        (&["verify", "T38", "--n", "10", "--p", "3"], 0),
        (&["verify", "T99", "--n", "6"], 2),
        (&["verify", "T32", "--n", "7", "--d", "3"], 2),
        (&["verify", "T32", "--n", "7", "--p", "3", "--q", "5"], 2),
        (&["enumerate", "--class", "trees", "--n", "40"], 2),
        (&["family", "D(0,3)"], 2),
        (&["family", "Nonsense(1)"], 2),
        (&["formula", "Broom(10,4)"], 0),
        (&["perm", "/nonexistent/graph.txt"], 2),
        (&["--threads", "0", "verify", "T32", "--n", "6"], 2),
        (&["bogus"], 2),
        (&["--help"], 0),
    ];
    for (args, expected) in cases {
        let r = run(args);
        assert_eq!(r.code, *expected, "{args:?}: {}{}", r.stdout, r.stderr);
        if *expected == 2 {
            assert!(!r.stderr.is_empty(), "{args:?} gave no diagnostic");
        }
    }
}

#[test]
fn input_errors_name_the_line() {
    let r = run(&["perm", &data("bad_range.txt")]);
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("line 3"), "{}", r.stderr);
    let (code, doc) = json(&["perm", &data("bad_range.txt")]);
    assert_eq!(code, 2);
    assert_eq!(doc["error"]["kind"], "input");
}

#[test]
fn threads_do_not_change_results() {
    let one = json(&["verify", "T37", "--n", "9"]).1;
    let four = json(&["--threads", "4", "verify", "T37", "--n", "9"]).1;
    assert_eq!(one, four);
    let one = json(&["enumerate", "--class", "unicyclic", "--n", "9", "--rank", "12"]).1;
    let four = json(&[
        "--threads",
        "4",
        "enumerate",
        "--class",
        "unicyclic",
        "--n",
        "9",
        "--rank",
        "12",
    ])
    .1;
    assert_eq!(one, four);
}

#[test]
fn verification_document_shape() {
    let (_, doc) = json(&["verify", "T33", "--n", "8"]);
    for key in ["theorem", "params", "status", "class_size", "minimizers", "mismatches"] {
        assert!(doc.get(key).is_some(), "missing {key}");
    }
    let first = &doc["minimizers"][0];
    assert!(first["family"].is_string() && first["value"].is_string());
    assert_no_numbers(&doc, "$");
}

#[test]
fn max_n_environment_bound() {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let args = ["laperm", "enumerate", "--class", "trees", "--n", "10"];
    let code = laperm::run(args, &mut "".as_bytes(), &mut out, &mut err, Some("8"));
    assert_eq!(code, 2);
    let code = laperm::run(args, &mut "".as_bytes(), &mut out, &mut err, Some("eight"));
    assert_eq!(code, 2);
}

fn binary() -> Command {
    Command::new(env!("CARGO_BIN_EXE_laperm"))
}

fn pipe(args: &[&str], input: &str) -> (i32, String) {
    let mut child = binary()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap())
}

#[test]
fn emitted_graphs_round_trip_through_perm() {
    for spec in [
        "D(3,5)",
        "B(3,7)",
        "T(n=9,d=4,i=2)",
        "C4(1^2 0, 1^0 2, 1^0 0, 1^1 0)",
        "Ghat(4,n=12)",
    ] {
        let (code, graph) = pipe(&["family", spec, "--emit", "graph"], "");
        assert_eq!(code, 0, "{spec}");
        let (code, via_pipe) = pipe(&["--json", "perm", "-"], &graph);
        assert_eq!(code, 0, "{spec}");
        let (_, direct) = json(&["family", spec, "--emit", "perm"]);
        let piped: Value = serde_json::from_str(&via_pipe).unwrap();
        assert_eq!(piped["permanent"], direct["permanent"], "{spec}");
    }
}

#[test]
fn binary_exit_statuses() {
    assert_eq!(
        binary()
            .args(["verify", "T39", "--n", "6"])
            .output()
            .unwrap()
            .status
            .code(),
        Some(0)
    );
    assert_eq!(
        binary()
            .args(["verify", "R1", "--n", "10"])
            .output()
            .unwrap()
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        binary()
            .args(["verify", "T99", "--n", "6"])
            .output()
            .unwrap()
            .status
            .code(),
        Some(2)
    );
    let out = binary()
        .env("LAPERM_MAX_N", "6")
        .args(["verify", "T32", "--n", "8"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}
