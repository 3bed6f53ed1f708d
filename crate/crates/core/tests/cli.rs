use std::process::Command;

use serde_json::Value;

fn trop2(args: &[&str]) -> (i32, Value) {
    let out = Command::new(env!("CARGO_BIN_EXE_trop2"))
        .args(args)
        .output()
        .expect("binary runs");
    let stdout = String::from_utf8(out.stdout).expect("utf-8 output");
    let v = serde_json::from_str(stdout.trim()).unwrap_or_else(|_| panic!("not JSON: {stdout}"));
    (out.status.code().expect("exit code"), v)
}

#[test]
fn classify_prints_spaces() {
    let (code, v) = trop2(&["classify", r#"[["0","0"],["1","2"]]"#]);
    assert_eq!(code, 0);
    assert_eq!(v["pc"], "[1,2]");
    assert_eq!(v["rclass"], "interval");
    assert_eq!(v["idempotent"], false);
}

#[test]
fn relate_j_holds() {
    let (code, v) = trop2(&[
        "relate",
        "J",
        r#"[["0","0"],["1","2"]]"#,
        r#"[["0","0"],["5","6"]]"#,
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["holds"], true);
}

#[test]
fn verify_duality_suite() {
    let (code, v) = trop2(&[
        "verify",
        "--samples",
        "1000",
        "--seed",
        "42",
        "--suite",
        "duality",
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["passed"], 1000);
    assert_eq!(v["failed"], 0);
    assert_eq!(v["rng"], "ChaCha8");
}

#[test]
fn invalid_input_exits_one_with_json_error() {
    let (code, v) = trop2(&["classify", r#"[["0","zz"],["1","2"]]"#]);
    assert_eq!(code, 1);
    assert!(v["error"].as_str().unwrap().contains("position"));
    let (code, v) = trop2(&["frobnicate"]);
    assert_eq!(code, 1);
    assert!(v["error"].is_string());
    let (code, _) = trop2(&[
        "verify",
        "--samples",
        "10",
        "--seed",
        "1",
        "--suite",
        "nope",
    ]);
    assert_eq!(code, 1);
}

#[test]
fn printed_values_reparse() {
    let (_, v) = trop2(&["classify", r#"[["1/2","-inf"],["3","-7/3"]]"#]);
    for key in ["pc", "pr"] {
        let s = v[key].as_str().unwrap();
        let (code, w) = trop2(&["witness", "--M", s, "--N", s]);
        assert_eq!(code, 0, "{s}");
        let z = w["z"].to_string();
        let (_, again) = trop2(&["classify", &z]);
        assert_eq!(again["pc"], s);
    }
    let (_, d) = trop2(&["ideal", "principal", r#"[["1/2","-inf"],["3","-7/3"]]"#]);
    let desc = d["descriptor"].as_str().unwrap();
    let (_, c) = trop2(&["ideal", "compare", desc, desc]);
    assert_eq!(c["order"], "equal");
}
