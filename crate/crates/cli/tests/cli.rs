use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gtsuper")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let mut a = args.to_vec();
    a.push("--json");
    let out = run(&a);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid json")
}

fn code(args: &[&str]) -> i32 {
    run(args).status.code().expect("exit code")
}

#[test]
fn patterns_counts() {
    let v = json(&["patterns", "--m", "1", "--n", "1", "--weight", "1|0"]);
    assert_eq!(v["result"]["count"], 2);
    let v = json(&["patterns", "--m", "1", "--n", "1", "--weight", "0|0"]);
    assert_eq!(v["result"]["count"], 1);
    let v = json(&["patterns", "--m", "2", "--n", "1", "--weight", "1,0|0"]);
    assert_eq!(v["result"]["count"], 3);
    assert_eq!(code(&["patterns", "--m", "1", "--n", "1", "--weight", "0|1"]), 2);
    assert_eq!(code(&["patterns", "--m", "1", "--n", "1", "--weight", "1,0|0"]), 2);
}

#[test]
fn tame_verdicts() {
    let base = ["tame", "--m", "1", "--n", "1", "--weight", "1|0", "--weight", "1|0"];
    fn with<'a>(base: &[&'a str], a: &'a str, b: &'a str) -> Vec<&'a str> {
        let mut v = base.to_vec();
        v.extend(["--shift", a, "--shift", b]);
        v
    }
    assert_eq!(json(&with(&base, "0", "1/2"))["result"]["verdict"], "tame");
    let nt = json(&with(&base, "0", "0"));
    assert_eq!(nt["result"]["verdict"], "not_tame");
    assert!(nt["result"]["witness"].is_object());
    assert_eq!(code(&with(&base, "0", "1/x")), 2);
    assert_eq!(code(&with(&base, "0", "1/0")), 2);
    assert_eq!(json(&with(&base, "-1/3", "1/6"))["result"]["verdict"], "tame");
}

#[test]
fn verify_suites() {
    let v =
        json(&["verify", "defrel", "--m", "2", "--n", "1", "--weight", "1,0|0", "--weight", "1,1|0", "--shift", "1/2"]);
    assert_eq!(v["result"]["clean"], true);
    assert_eq!(v["result"]["reports"][0]["violations"].as_array().unwrap().len(), 0);
    assert!(v["result"]["reports"][0]["checked"].as_u64().unwrap() > 0);
    let v = json(&["verify", "all", "--m", "1", "--n", "1", "--weight", "2,1|0", "--mu", "1"]);
    assert_eq!(v["result"]["clean"], true);
    assert_eq!(v["result"]["reports"].as_array().unwrap().len(), 5);
    assert_eq!(code(&["verify", "nosuch", "--weight", "1|0"]), 2);
}

#[test]
fn drinfeld_reports() {
    let v = json(&["drinfeld", "--m", "1", "--n", "1", "--weight", "0|0"]);
    assert_eq!(v["result"]["drinfeld"]["P"], serde_json::json!({}));
    let v = json(&["drinfeld", "--m", "2", "--n", "1", "--weight", "1,0|0", "--shift", "1/3"]);
    let d = &v["result"]["drinfeld"];
    assert_eq!(d["P"]["1"], serde_json::json!(["-1/3"]));
    assert_eq!(d["Q0"], serde_json::json!([]));
    assert_eq!(v["result"]["closed_form_agrees"], true);
}

#[test]
fn skew_commands() {
    assert_eq!(code(&["skew", "--m", "1", "--n", "1", "--weight", "1,1|0", "--mu", "2"]), 2);
    let v = json(&["skew", "--m", "1", "--n", "1", "--weight", "2,1|0", "--mu", "1"]);
    assert_eq!(v["result"]["dim"], 4);
    assert_eq!(v["result"]["invariance"]["violations"].as_array().unwrap().len(), 0);
    let v = json(&["skew", "--m", "1", "--n", "1", "--weight", "2,1|0", "--r", "1"]);
    assert_eq!(v["result"]["admissible_mu"], serde_json::json!(["1", "2"]));
    assert_eq!(code(&["skew", "--weight", "1|0"]), 2);
}

#[test]
fn noncross_and_xi() {
    let v = json(&["noncross", "--weight", "3|1", "--weight", "1|0"]);
    assert_eq!(v["result"]["strong"], true);
    assert_eq!(v["result"]["skew_presentation"]["lambda"], "1,1,1|0");
    let v = json(&["noncross", "--weight", "1|0", "--weight", "1|0"]);
    assert_eq!(v["result"]["strong"], false);
    assert!(v["result"]["collision"].is_array());
    assert_eq!(code(&["noncross", "--weight", "1|0", "--weight", "1|0", "--shift", "0", "--shift", "1"]), 2);
    let v = json(&["xi", "--weight", "1|0", "--weight", "1|0", "--shift", "0", "--shift", "1/2"]);
    let vs = v["result"]["vectors"].as_array().unwrap();
    assert_eq!(vs.len(), 4);
    assert!(vs.iter().all(|e| e["zero"] == false));
}

#[test]
fn reports_are_deterministic() {
    let dir = std::env::temp_dir().join(format!("gtsuper-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("a.json");
    let p = path.to_str().unwrap();
    let args = [
        "spectrum", "--m", "2", "--n", "1", "--weight", "1,0|0", "--weight", "1,0|0", "--shift", "0", "--shift", "1/2",
        "--json",
    ];
    let a = run(&args).stdout;
    let b = run(&args).stdout;
    assert_eq!(a, b);
    let mut with_out = args.to_vec();
    with_out.extend(["--out", p]);
    assert!(run(&with_out).status.success());
    let c = std::fs::read(&path).unwrap();
    let v: Value = serde_json::from_slice(&c).unwrap();
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["job"]["command"], "spectrum");
    assert_eq!(v["job"]["shifts"], serde_json::json!(["0", "1/2"]));
    assert!(run(&with_out).status.success());
    assert_eq!(std::fs::read(&path).unwrap(), c);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn module_and_tensor() {
    let v = json(&["module", "--m", "2", "--n", "1", "--weight", "1,1|0"]);
    assert_eq!(v["result"]["dim"], 4);
    let v = json(&["tensor", "--m", "1", "--n", "1", "--weight", "1|0", "--weight", "2,1|0", "--mu", "", "--mu", "1"]);
    assert_eq!(v["result"]["dim"], 8);
    assert_eq!(
        code(&["tensor", "--weight", "1|0", "--weight", "1|0", "--shift", "0", "--shift", "1", "--shift", "2"]),
        2
    );
}
