use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_schubert")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> (Value, i32) {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let out = run(&full);
    let value: Value = serde_json::from_slice(&out.stdout).expect("valid JSON");
    let schema: Value =
        serde_json::from_str(include_str!("../../../docs/command-result.schema.json")).expect("schema parses");
    let validator = jsonschema::validator_for(&schema).expect("schema compiles");
    let errors: Vec<String> = validator.iter_errors(&value).map(|e| e.to_string()).collect();
    assert!(errors.is_empty(), "{args:?} violates the schema: {errors:?}\n{value:#}");
    (value, out.status.code().unwrap())
}

#[test]
fn eval_examples() {
    let (v, code) = json(&["eval", "--space", "G", "g^4"]);
    assert_eq!(code, 0);
    assert_eq!(v["normal_form"], "2*c2^2");
    assert_eq!(v["count"], "2");
    assert_eq!(v["space"], "GR");

    let (v, _) = json(&["eval", "--space", "PS", "p*g_p"]);
    let (w, _) = json(&["eval", "--space", "PS", "p^3 + g_s"]);
    assert_eq!(v["normal_form"], w["normal_form"]);

    let (v, code) = json(&["eval", "--space", "P3", "t^5"]);
    assert_eq!((v["normal_form"].as_str(), v["count"].as_str(), code), (Some("0"), Some("0"), 0));

    let out = run(&["eval", "--space", "G", "g^4"]);
    assert!(stdout(&out).contains("count:          2"));
}

#[test]
fn check_examples() {
    let (v, code) = json(&["check", "--space", "G", "g*g_p == g_s"]);
    assert_eq!((v["pass"].as_bool(), code), (Some(true), 0));
    let (v, code) = json(&["check", "--space", "PS", "p*g == p^2 + g_e"]);
    assert_eq!((v["pass"].as_bool(), code), (Some(true), 0));
    let (v, code) = json(&["check", "--space", "G", "g^2 == g_e"]);
    assert_eq!((v["pass"].as_bool(), code), (Some(false), 1));
    assert_eq!(v["normal_form"], "c1^2 - c2");
    let (v, code) = json(&["check", "--space", "PS", "p*g_s == p^2*g_p == G + p^3*g"]);
    assert_eq!((v["pass"].as_bool(), code), (Some(true), 0));
    assert_eq!(v["sides"].as_array().unwrap().len(), 3);
}

#[test]
fn exit_codes() {
    let (v, code) = json(&["eval", "--space", "G", "g^"]);
    assert_eq!(code, 2);
    assert_eq!(v["error"]["kind"], "parse");
    assert_eq!(v["error"]["offset"], 2);

    let (v, code) = json(&["eval", "--space", "P3", "g_e"]);
    assert_eq!(code, 3);
    assert!(v["error"]["message"].as_str().unwrap().contains("p_g"));

    let (_, code) = json(&["eval", "--space", "GR", "p1*g"]);
    assert_eq!(code, 3);
    let (_, code) = json(&["check", "--space", "G", "g^2"]);
    assert_eq!(code, 2);
    let (_, code) = json(&["tangency", "--pairs", "2", "--extra", "g"]);
    assert_eq!(code, 4);
    let (_, code) = json(&["tangency", "--pairs", "1", "--extra", "p1*g_p"]);
    assert_eq!(code, 3);
    assert_eq!(run(&["eval", "--space", "NOPE", "g"]).status.code(), Some(2));
    assert_eq!(run(&["tangency", "--pairs", "5"]).status.code(), Some(2));
    let text = run(&["eval", "--space", "P3", "p + * 2"]);
    assert!(String::from_utf8_lossy(&text.stderr).contains("    ^"));
}

#[test]
fn formulas_all_pass_and_tampering_is_reported() {
    let (v, code) = json(&["formulas"]);
    assert_eq!(code, 0);
    let rows = v["formulas"].as_array().unwrap();
    assert_eq!(rows.len(), 17);
    assert!(rows.iter().all(|r| r["pass"] == true));
    assert_eq!(v["count"], "17/17");
    assert!(stdout(&run(&["formulas"])).contains("17/17 pass"));

    let (v, code) = json(&["formulas", "--tamper", "GR:g_s=c1*c2"]);
    assert_eq!(code, 1);
    let failed: Vec<&str> = v["formulas"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|r| r["pass"] == false)
        .map(|r| r["id"].as_str().unwrap())
        .collect();
    assert_eq!(failed, ["10", "11", "12", "13", "14"]);

    let (v, _) = json(&["formulas", "--tamper", "P3:P=0"]);
    let failed: Vec<&str> = v["formulas"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|r| r["pass"] == false)
        .map(|r| r["id"].as_str().unwrap())
        .collect();
    assert_eq!(failed, ["3", "4"]);
}

#[test]
fn tangency_examples() {
    let (v, code) = json(&["tangency", "--pairs", "4"]);
    assert_eq!(code, 0);
    assert_eq!(v["count"], "(1/12)*n*(n-4)*(n-5)*(n-6)*(n-7)*(n^3+6*n^2+7*n-30)");
    assert_eq!(v["tangency"]["reduced_symmetric"], "16*p1*p2*p3*p4 - 32*p1^2*p2*p3 - 8*g_e*p1*p2 + 10*G");
    assert_eq!(v["tangency"]["denominator"], "12");

    let (v, _) = json(&["tangency", "--pairs", "2", "--extra", "g_e", "--at", "4"]);
    assert_eq!(v["tangency"]["at"]["value"], "28");
    assert_eq!(v["count"], "(1/2)*n*(n-2)*(n-3)*(n+3)");

    let (v, _) = json(&["tangency", "--pairs", "1", "--extra", "g_s", "--at", "2"]);
    assert_eq!(v["tangency"]["at"]["value"], "2");
    assert_eq!(v["count"], "n*(n-1)");

    let (v, _) = json(&["tangency", "--pairs", "3", "--extra", "g"]);
    assert_eq!(v["diagnostics"].as_array().unwrap().len(), 1);
}

#[test]
fn csv_table() {
    let out = run(&["tangency", "--pairs", "2", "--extra", "g_e", "--table", "n=1..5"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "n,count\n1,4\n2,0\n3,0\n4,28\n5,120\n");
    let mut reader = csv::Reader::from_reader(out.stdout.as_slice());
    assert_eq!(reader.records().count(), 5);
    assert_eq!(run(&["tangency", "--pairs", "4", "--table", "n=5..1"]).status.code(), Some(2));
    let (v, _) = json(&["tangency", "--pairs", "4", "--table", "n=0..8"]);
    let values: Vec<&str> =
        v["tangency"]["table"].as_array().unwrap().iter().map(|r| r["value"].as_str().unwrap()).collect();
    assert_eq!(values, ["0", "-480", "320", "432", "0", "0", "0", "0", "14752"]);
}

#[test]
fn oracle_examples() {
    let (v, code) = json(&["oracle", "four-lines", "--trials", "100", "--seed", "7"]);
    assert_eq!(code, 0);
    assert_eq!(v["oracle"]["aggregate"]["Finite(2)"], 100);
    assert_eq!(v["pass"], true);

    let (v, _) = json(&["oracle", "four-lines-ruling"]);
    assert_eq!(v["oracle"]["results"][0]["outcome"], "Infinite");
    let (v, _) = json(&["oracle", "four-lines-ruling", "--seed", "3", "--trials", "5"]);
    assert_eq!(v["oracle"]["aggregate"]["Infinite"], 5);

    let (v, _) = json(&["oracle", "chasles", "--p", "3", "--q", "4", "--seed", "1"]);
    assert_eq!(v["oracle"]["results"][0]["outcome"], "Finite(7)");
    assert_eq!(v["oracle"]["results"][0]["coefficients"].as_array().unwrap().len(), 4);
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["--json", "oracle", "four-lines", "--trials", "20", "--seed", "11"][..],
        &["--json", "formulas"][..],
        &["--json", "tangency", "--pairs", "4", "--table", "n=1..12"][..],
        &["eval", "--space", "PS", "(p + g)^5"][..],
    ] {
        assert_eq!(run(args).stdout, run(args).stdout, "{args:?}");
    }
    let (v, _) = json(&["eval", "--space", "G", "g^4"]);
    assert!(v["elapsed_us"].is_null());
    let (v, _) = json(&["--timing", "eval", "--space", "G", "g^4"]);
    assert!(v["elapsed_us"].is_u64());
}
