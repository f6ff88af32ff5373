use std::io::Write;
use std::process::{Command, Output, Stdio};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pseudoshape")).args(args).output().unwrap()
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str]) -> serde_json::Value {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    serde_json::from_str(&stdout(&all)).unwrap()
}

#[test]
fn series_prints_coefficients() {
    let out = stdout(&["series", "--which", "I", "--k", "2", "--order", "3"]);
    assert_eq!(out, "exponent\tcoefficient\n0\t1\n1\t1\n2\t1\n3\t2\n");
}

#[test]
fn series_json_uses_decimal_strings() {
    let v = json(&["series", "--which", "F", "--k", "2", "--order", "60"]);
    assert_eq!(v["command"], "series");
    assert_eq!(v["params"]["order"], 60);
    let c60 = v["payload"][60].as_str().unwrap();
    assert_eq!(c60, "1583850964596120042686772779038896");
    assert!(v["version"].is_string());
}

#[test]
fn default_orders_depend_on_arity() {
    let uni = json(&["series", "--which", "T", "--k", "2"]);
    assert_eq!(uni["params"]["order"], 40);
    assert_eq!(uni["payload"].as_array().unwrap().len(), 41);
    let bi = json(&["series", "--which", "Jbi", "--k", "2"]);
    assert_eq!(bi["params"]["order"], 24);
}

#[test]
fn structure_count_matches_secondary_structures() {
    let out = stdout(&["count", "--family", "structures", "--k", "2", "--sigma", "1", "--n", "7"]);
    assert_eq!(out, "family\tn\tcount\nstructures\t7\t37\n");
}

#[test]
fn table_entry() {
    let out = stdout(&["tables", "--which", "lv5", "--digits", "5"]);
    let row = out.lines().find(|l| l.starts_with("sigma=2")).unwrap();
    assert_eq!(row.split('\t').nth(4), Some("2.80275"));
}

#[test]
fn empty_shape() {
    assert_eq!(stdout(&["shape", "0;"]), "0;\n");
}

#[test]
fn shape_from_stdin() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_pseudoshape"))
        .args(["shape", "-", "--level", "1", "--sigma", "2"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(b"11; 2-10, 3-9, 4-8\n").unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success());
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "5; 2-4\n");
}

#[test]
fn non_structure_is_a_user_error() {
    let out = run(&["shape", "5; 1-2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not a structure: 1-arc at (1,2)"));
}

#[test]
fn user_errors_exit_two() {
    for args in [
        &["series", "--which", "Q"][..],
        &["count", "--n", "30"],
        &["count", "--k", "1", "--n", "4"],
        &["shape", "4; 1-"],
        &["growth", "--equation", "omega"],
        &["verify", "--suite", "none"],
        &["tables", "--which", "lv9"],
        &["frobnicate"],
    ] {
        assert_eq!(run(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn matching_routes_agree() {
    let a = stdout(&["matchings", "--k", "4", "--order", "12", "--route", "chamber-walk"]);
    let b = stdout(&["matchings", "--k", "4", "--order", "12", "--route", "determinant"]);
    assert_eq!(a, b);
}

#[test]
fn census_counts_and_lists() {
    let counts = stdout(&["census", "--level", "5", "--k", "2", "--n", "8"]);
    let last = counts.lines().last().unwrap();
    let listed = stdout(&["census", "--level", "5", "--k", "2", "--n", "8", "--list"]);
    assert_eq!(last.split('\t').nth(1).unwrap().parse::<usize>().unwrap(), listed.lines().count() - 1);
}

#[test]
fn enumerate_lists_family() {
    let out = stdout(&["enumerate", "--family", "matchings", "--k", "2", "--n", "6"]);
    assert_eq!(out.lines().count(), 1 + 5);
}

#[test]
fn growth_record_is_certified() {
    let v = json(&["growth", "--equation", "mu", "--k", "2"]);
    assert_eq!(v["payload"]["root"], "0.33333");
    assert_eq!(v["payload"]["certified"], true);
}

#[test]
fn verify_suites_report() {
    let out = run(&["verify", "--suite", "lemma1"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).lines().last().unwrap().starts_with("PASS"));
    let out = run(&["verify", "--suite", "determinant"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn output_is_deterministic() {
    let args = ["census", "--level", "1", "--k", "3", "--sigma", "2", "--n", "10", "--list"];
    assert_eq!(stdout(&args), stdout(&args));
}
