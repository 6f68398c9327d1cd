use std::path::PathBuf;
use std::process::Command;

use cdga::cli::run;
use serde_json::Value;

struct Output {
    code: i32,
    stdout: String,
    stderr: String,
}

fn cdga(args: &[&str]) -> Output {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("cdga").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    Output {
        code,
        stdout: String::from_utf8(out).unwrap(),
        stderr: String::from_utf8(err).unwrap(),
    }
}

fn json(args: &[&str]) -> Value {
    let o = cdga(args);
    assert_eq!(o.code, 0, "{}", o.stderr);
    serde_json::from_str(&o.stdout).unwrap()
}

fn temp_file(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("cdga-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

const OMEGA: &str = "2*x1*x6+x2*x5-x3*x4";

#[test]
fn cohomology_report() {
    let v = json(&["cohomology", "g6_15_m1", "--max-degree", "6"]);
    assert_eq!(v["betti"], serde_json::json!([1, 1, 2, 4, 2, 1, 1]));
    assert_eq!(v["algebra"], "g6_15_m1");
    assert_eq!(v["representatives"][1], serde_json::json!(["x6"]));
    assert_eq!(v["engine"]["name"], "cdga");
    assert!(v["ordering"].is_string());

    let text = cdga(&["--text", "cohomology", "g6_15_m1", "--max-degree", "6"]);
    assert_eq!(text.code, 0);
    assert!(text.stdout.contains("betti: 1,1,2,4,2,1,1"));
}

#[test]
fn massey_report() {
    let v = json(&["massey", "g6_15_m1", "x6", "x6", OMEGA]);
    let m = &v["massey"];
    assert_eq!(m["representative"], "x4*x5*x6");
    assert_eq!(m["reduced_class"], "x4*x5*x6");
    assert_eq!(m["indeterminacy_dimension"], 1);
    assert_eq!(m["indeterminacy_basis"].as_array().unwrap().len(), 1);
    assert_eq!(m["vanishes"], false);
    assert_eq!(m["primitives"]["xi12"], "0");
    assert_eq!(m["primitives"]["xi23"], "x4*x5");
}

#[test]
fn scan_on_formal_algebra_is_empty() {
    let o = cdga(&["scan", "abelian3", "--degrees", "1,1,1", "--max-degree", "3"]);
    assert_eq!(o.code, 0, "{}", o.stderr);
    let v: Value = serde_json::from_str(&o.stdout).unwrap();
    assert_eq!(v["scan"]["findings"], serde_json::json!([]));
}

#[test]
fn scan_finds_products_on_g6() {
    let v = json(&["scan", "g6_15_m1", "--degrees", "1,1,2"]);
    assert!(!v["scan"]["findings"].as_array().unwrap().is_empty());
}

#[test]
fn gysin_report() {
    let v = json(&["gysin", "g6_15_m1", "--omega", OMEGA]);
    let g = &v["gysin"];
    assert_eq!(g["consistent"], true);
    assert_eq!(g["extension_generator"], "t");
    assert_eq!(g["extension_betti"], serde_json::json!([1, 1, 2, 4, 4, 2, 1, 1]));
    assert_eq!(g["cup_ranks"], serde_json::json!([1, 0, 2, 0, 1, 0, 0, 0]));
}

#[test]
fn tensor_report() {
    let v = json(&["tensor", "g6_15_m1", "s2_model", "--max-degree", "5"]);
    assert_eq!(v["betti"], serde_json::json!([1, 1, 3, 5, 4, 5]));
    assert_eq!(v["tensor"]["consistent"], true);
}

#[test]
fn amassey_on_formal_algebra() {
    let v = json(&["amassey", "abelian8", "x1*x2", "x1*x3", "x1*x4", "x2*x3"]);
    assert_eq!(v["amassey"]["vanishes"], true);
}

#[test]
fn catalog_round_trip() {
    let o = cdga(&["catalog", "g6_15_m1"]);
    assert_eq!(o.code, 0);
    let path = temp_file("g6.alg", &o.stdout);
    let from_file = json(&["cohomology", path.to_str().unwrap()]);
    assert_eq!(from_file["betti"], serde_json::json!([1, 1, 2, 4, 2, 1, 1]));
    assert_eq!(cdga(&["catalog", "nope"]).code, 2);
}

#[test]
fn validate_only() {
    let v = json(&["--validate-only", "cohomology", "heisenberg3"]);
    assert_eq!(v["valid"], true);
    assert!(v.get("betti").is_none());
}

#[test]
fn exit_codes() {
    // Not closed.
    assert_eq!(cdga(&["massey", "g6_15_m1", "x1", "x6", OMEGA]).code, 1);
    // Products do not vanish.
    assert_eq!(cdga(&["massey", "g6_15_m1", OMEGA, OMEGA, "x6"]).code, 1);
    // Unknown generator.
    let o = cdga(&["massey", "g6_15_m1", "x7", "x6", OMEGA]);
    assert_eq!(o.code, 2);
    assert!(o.stderr.contains("x7"));
    // Missing file.
    assert_eq!(cdga(&["cohomology", "/nonexistent/file.alg"]).code, 2);
    // Bad arguments.
    assert_eq!(cdga(&["cohomology"]).code, 2);
    assert_eq!(cdga(&["--help"]).code, 0);
    assert_eq!(cdga(&["gysin", "g6_15_m1", "--omega", "x1*x2"]).code, 1);
}

#[test]
fn parse_errors_report_positions() {
    let path = temp_file(
        "bad.alg",
        "algebra bad {\n  generators: x:1\n  d y = x*x\n}\n",
    );
    let o = cdga(&["cohomology", path.to_str().unwrap()]);
    assert_eq!(o.code, 2);
    assert!(o.stderr.contains("3:5"), "{}", o.stderr);
    assert!(o.stdout.is_empty());
}

#[test]
fn invalid_differential_exits_one() {
    let path = temp_file(
        "notsquarezero.alg",
        "algebra broken {\n  generators: a:1, b:2, c:3\n  d a = b\n  d b = c\n}\n",
    );
    let o = cdga(&["cohomology", path.to_str().unwrap()]);
    assert_eq!(o.code, 1, "{}", o.stderr);
}

#[test]
fn identical_runs_are_byte_identical() {
    for args in [
        vec!["massey", "g6_15_m1", "x6", "x6", OMEGA],
        vec!["gysin", "g6_15_m1", "--omega", OMEGA],
        vec!["scan", "g6_15_m1", "--degrees", "1,1,2"],
    ] {
        assert_eq!(cdga(&args).stdout, cdga(&args).stdout);
    }
}

#[test]
fn binary_exit_codes_and_streams() {
    let exe = env!("CARGO_BIN_EXE_cdga");
    let ok = Command::new(exe)
        .args(["cohomology", "g6_15_m1", "--max-degree", "6"])
        .output()
        .unwrap();
    assert_eq!(ok.status.code(), Some(0));
    assert!(ok.stderr.is_empty());

    let bad = Command::new(exe)
        .env("NO_COLOR", "1")
        .args(["massey", "g6_15_m1", "x7", "x6", "x6"])
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
    assert!(bad.stdout.is_empty());
    assert!(!String::from_utf8_lossy(&bad.stderr).contains('\x1b'));
}
