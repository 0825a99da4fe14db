use std::process::Command;

use serde_json::Value;

fn g2(args: &[&str]) -> (i32, Value) {
    let out = Command::new(env!("CARGO_BIN_EXE_g2")).args(args).output().unwrap();
    let code = out.status.code().unwrap();
    let text = String::from_utf8(out.stdout).unwrap();
    (code, serde_json::from_str(&text).unwrap_or(Value::Null))
}

#[test]
fn invariants_from_either_shape() {
    let (c1, a) = g2(&["invariants", "--curve", "[0,-1,0,0,0,1]"]);
    let (c2, b) = g2(&["invariants", "--curve", r#"{"f": ["0", "-1", "0", "0", "0", "1"]}"#]);
    assert_eq!((c1, c2), (0, 0));
    assert_eq!(a["payload"], b["payload"]);
    assert_eq!(a["payload"]["J2"], "-5");
}

#[test]
fn generic_family_matches_oracle() {
    let (code, v) = g2(&["deg3", "generic", "--a", "4", "--c", "1"]);
    assert_eq!(code, 0);
    assert_eq!(v["payload"]["match"], true);
    assert_eq!(v["payload"]["j1"], v["payload"]["oracle_j1"]);
}

#[test]
fn negative_arguments() {
    let (code, v) = g2(&["deg3", "generic", "--a", "-3/2", "--c", "-5"]);
    assert_eq!(code, 0, "{v}");
    let (code, v) = g2(&["j", "--model", "weierstrass", "--a", "-668644200", "--b", "6788828143125"]);
    assert_eq!(code, 0);
    assert_eq!(v["payload"]["j"], "-1213857792/28561");
}

#[test]
fn degenerate_at_two() {
    let (code, v) = g2(&["deg3", "degenerate", "--w1", "2"]);
    assert_eq!(code, 0);
    assert_eq!(v["payload"]["j"], "54000");
    assert_eq!(v["payload"]["j1"], "1728");
    assert_eq!(v["payload"]["points"].as_array().unwrap().len(), 2);
}

#[test]
fn table_and_lemma_cover() {
    let (code, v) = g2(&["deg3", "table1"]);
    assert_eq!(code, 0);
    assert_eq!(v["payload"]["rows_isomorphic"], false);
    let (code, v) = g2(&["deg3", "lemma53", "--t", "1/3"]);
    assert_eq!(code, 0);
    assert_eq!(v["payload"]["cover"]["matches"], true);
}

#[test]
fn absolutes_at_origin() {
    let (code, v) = g2(&["deg3", "absolutes", "--i1", "0", "--i2", "0"]);
    assert_eq!(code, 0);
    assert_eq!(v["payload"]["j"], "1728");
}

#[test]
fn degree_five_and_seven() {
    let (code, v) = g2(&["deg5", "--u", "43/16", "--v-branch", "1"]);
    assert_eq!(code, 0);
    assert_eq!(v["payload"]["membership"], true);
    let (code, v) = g2(&["deg7", "--d", "2"]);
    assert_eq!(code, 0);
    assert_eq!(v["payload"]["J10_nonzero"], true);
    let (code, _) = g2(&["deg7", "--d", "2", "--t-branch", "3"]);
    assert_eq!(code, 2);
}

#[test]
fn verify_cover_against_case() {
    let map = r#"{"num": ["0", "9", "-24", "16"], "den": ["1"]}"#;
    let (code, v) = g2(&["verify-cover", "--map", map, "--branch-points", r#"[0, 1, "inf"]"#, "--claimed",
        r#"{"degree": 3, "fibers": [[2], [2], [3]]}"#]);
    assert_eq!(code, 0, "{v}");
    assert_eq!(v["payload"]["report"]["matches"], true);
    let (code, _) = g2(&["verify-cover", "--map", map, "--branch-points", r#"[0, 1, "inf"]"#, "--claimed",
        r#"{"degree": 3, "fibers": [[3], [2], [3]]}"#]);
    assert_eq!(code, 1);
}

#[test]
fn errors_and_exit_codes() {
    let (code, v) = g2(&["deg5", "--u", "1"]);
    assert_eq!(code, 1);
    assert_eq!(v["payload"]["kind"], "vanishing");
    let (code, v) = g2(&["verify-cover", "--map", "{", "--branch-points", "[]"]);
    assert_eq!(code, 2);
    assert_eq!(v["payload"]["kind"], "input");
    let (code, _) = g2(&["deg3", "generic", "--a", "x", "--c", "1"]);
    assert_eq!(code, 2);
    let (code, _) = g2(&["nope"]);
    assert_eq!(code, 2);
}

#[test]
fn pretty_output() {
    let out = Command::new(env!("CARGO_BIN_EXE_g2"))
        .args(["--output", "pretty", "ramification", "--degree", "3"])
        .output()
        .unwrap();
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("\n  \"payload\""));
}

#[test]
fn selftest_reports_known_failures() {
    let (code, v) = g2(&["selftest"]);
    assert_eq!(code, 1);
    let failed: Vec<u64> = v["payload"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|o| o["passed"] == false)
        .map(|o| o["id"].as_u64().unwrap())
        .collect();
    assert_eq!(failed, vec![2, 7]);
    let (code, _) = g2(&["selftest", "--criterion", "3"]);
    assert_eq!(code, 0);
}
