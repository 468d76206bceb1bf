use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_a4witt")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn galois_reports_a4() {
    let out = run(&["galois", "[1,0,0,8,12]"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["result"]["label"], "A4");
    assert_eq!(v["result"]["certificate"]["disc"], "331776");
    assert_eq!(v["result"]["certificate"]["rechecked"], true);
}

#[test]
fn galois_accepts_expressions() {
    let v = json(&run(&["galois", "X^4 + X^3 + X^2 + X + 1"]));
    assert_eq!(v["result"]["label"], "C4");
    let v = json(&run(&["galois", "X^3 - 3*X - 1"]));
    assert_eq!(v["result"]["label"], "C3");
}

#[test]
fn non_embeddable_point_exits_one() {
    let out = run(&["embeddable", "--U", "1", "--V", "1"]);
    assert_eq!(out.status.code(), Some(1));
    let v = json(&out);
    assert_eq!(v["result"]["embeddable"], false);
    assert_eq!(v["result"]["class"], serde_json::json!(["2", "real"]));
}

#[test]
fn parametrized_point_is_embeddable() {
    let v = json(&run(&["param", "--A", "1", "--B", "1", "--C", "1", "--D", "1", "--E", "1"]));
    assert_eq!(v["result"]["U"], "-12/5");
    assert_eq!(v["result"]["V"], "-463/162");
    let out = run(&["embeddable", "--U", "-12/5", "--V", "-463/162"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["result"]["embeddable"], true);
    assert_eq!(v["result"]["class"], serde_json::json!([]));
}

#[test]
fn plus_sign_is_accepted() {
    let v = json(&run(&["param", "--A", "1", "--B", "1", "--C", "1", "--D", "1", "--E", "1", "--sign", "+"]));
    assert_eq!(v["result"]["U"], "-15/4");
    assert_eq!(v["result"]["V"], "137/81");
}

#[test]
fn resolvent_coefficients() {
    let out = run(&["resolvent", "[1,1,1,1,1]"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["result"]["b"], serde_json::json!(["-5", "-15", "-5", "0"]));
    assert_eq!(v["result"]["disc_relation"]["holds"], true);
}

#[test]
fn input_errors_exit_two() {
    assert_eq!(run(&["verify", "bogus"]).status.code(), Some(2));
    let out = run(&["galois", "X^4 +"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("position"));
    assert_eq!(run(&["galois", "X^5 + 1"]).status.code(), Some(2));
    assert_eq!(run(&["embeddable", "--U", "3", "--V", "1"]).status.code(), Some(2));
    assert_eq!(run(&["param", "--A", "1", "--B", "1", "--C", "1", "--D", "0", "--E", "1"]).status.code(), Some(2));
}

#[test]
fn verify_is_deterministic() {
    let strip = |out: &Output| {
        let mut v = json(out);
        v.as_object_mut().unwrap().remove("elapsed_ms");
        v
    };
    let args = ["verify", "criterion", "--samples", "10", "--seed", "7"];
    let (a, b) = (run(&args), run(&args));
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(strip(&a), strip(&b));
    assert_eq!(json(&a)["seed"], 7);
}

#[test]
fn factor_ceiling_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_a4witt"))
        .args(["embeddable", "--U", "1", "--V", "1"])
        .env("A4WITT_FACTOR_CEILING", "not a number")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}
