use std::process::Command;

use serde_json::Value;

fn run(args: &[&str]) -> (Value, String, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_loccalc")).args(args).output().unwrap();
    let text = String::from_utf8(out.stdout).unwrap();
    let json = serde_json::from_str(&text).unwrap_or(Value::Null);
    (json, text, out.status.code().unwrap())
}

fn ok(args: &[&str]) -> Value {
    let (json, text, code) = run(args);
    assert_eq!(code, 0, "{args:?}: {text}");
    json
}

fn fails_with(args: &[&str], code: i32) -> Value {
    let (json, text, got) = run(args);
    assert_eq!(got, code, "{args:?}: {text}");
    let err = &json["error"];
    assert_eq!(err["code"], code);
    assert!(err["message"].is_string());
    assert!(err["position"].is_null() || err["position"].is_u64());
    assert_eq!(json.as_object().unwrap().len(), 1);
    json
}

fn without_timing(mut v: Value) -> Value {
    v.as_object_mut().unwrap().remove("elapsed_ms");
    v
}

#[test]
fn projective_plane() {
    let v = ok(&["grassmann", "--n", "3", "--k", "1", "--exponents", "2"]);
    assert_eq!(v["command"], "grassmann");
    assert_eq!(v["value"], "1");
    assert_eq!(v["integer"], true);
    assert_eq!(v["fixed_points"], 3);
    assert_eq!(v["cross_checks"]["evaluation"], true);
    assert!(v["cross_checks"]["oracle"].is_null());
    assert!(v["elapsed_ms"].is_number());
}

#[test]
fn oracle_check_on_four_planes() {
    for (e, want) in [("4,0", "2"), ("2,1", "1"), ("0,2", "1")] {
        let v = ok(&["grassmann", "--n", "4", "--k", "2", "--exponents", e, "--oracle-check"]);
        assert_eq!(v["value"], want, "{e}");
        assert_eq!(v["cross_checks"]["oracle"], true);
    }
}

#[test]
fn euler_characteristic() {
    for (kind, rank, order) in [("A", "2", "6"), ("B", "2", "8"), ("C", "3", "48"), ("D", "4", "192")] {
        let v = ok(&["euler-char", "--type", kind, "--rank", rank]);
        assert_eq!(v["value"], order);
        assert_eq!(v["fixed_points"].to_string(), order);
    }
}

#[test]
fn gysin_outputs() {
    let v = ok(&["gysin-flag", "--rank", "2", "--poly", "a1"]);
    assert_eq!(v["symmetric"], "1");
    assert_eq!(v["chern_basis"], "1");
    let v = ok(&["gysin-flag", "--rank", "2", "--poly", "a1^3"]);
    assert_eq!(v["chern_basis"], "e1^2 - e2");
    let v = ok(&["gysin-flag", "--rank", "2", "--poly", "a1^2", "--dual-roots"]);
    assert_eq!(v["chern_basis"], "-e1");
}

#[test]
fn over_degree_flag_integral_is_a_polynomial() {
    let v = ok(&["flag-integral", "--type", "A", "--rank", "1", "--poly", "y1^3"]);
    assert_eq!(v["polynomial"], "u1^2 + u1*u2 + u2^2");
    assert!(v.get("value").is_none() && v.get("integer").is_none());
}

#[test]
fn usage_and_parse_errors_exit_2() {
    let v = fails_with(&["flag-integral", "--type", "A", "--rank", "2", "--poly", "y1^y2"], 2);
    assert_eq!(v["error"]["position"], 3);
    fails_with(&["flag-integral", "--type", "A", "--rank", "2", "--poly", "u1"], 2);
    fails_with(&["flag-integral", "--type", "A", "--rank", "2", "--poly", "y7"], 2);
    fails_with(&["bogus"], 2);
    fails_with(&["--threads", "0", "euler-char", "--type", "A", "--rank", "2"], 2);
    fails_with(&["grassmann", "--n", "3"], 2);
}

#[test]
fn precondition_errors_exit_3() {
    fails_with(&["grassmann", "--n", "3", "--k", "5", "--exponents", "2"], 3);
    fails_with(&["grassmann", "--n", "4", "--k", "2", "--exponents", "1"], 3);
    fails_with(&["euler-char", "--type", "D", "--rank", "1"], 3);
    fails_with(&["euler-char", "--type", "A", "--rank", "40"], 3);
}

#[test]
fn output_is_deterministic_up_to_timing() {
    let args =
        ["--seed", "7", "flag-integral", "--type", "B", "--rank", "2", "--poly", "y1^3*y2 - 2*y2^4 + y1^5"];
    let (a, text_a, _) = run(&args);
    let (b, text_b, _) = run(&args);
    assert_eq!(without_timing(a.clone()), without_timing(b));
    // keys are emitted sorted, so only the timing field differs
    let strip = |s: &str| s.split(",\"fixed_points\"").nth(1).unwrap().to_string();
    assert_eq!(strip(&text_a), strip(&text_b));
    let threaded_args: Vec<&str> = ["--threads", "3"].into_iter().chain(args).collect();
    let threaded = run(&threaded_args).0;
    assert_eq!(without_timing(threaded), without_timing(a));
}

#[test]
fn pretty_output_is_the_same_document() {
    let args = ["grassmann", "--n", "5", "--k", "2", "--exponents", "6,0"];
    let plain = ok(&args);
    let mut pretty_args = vec!["--pretty"];
    pretty_args.extend(args);
    let (pretty, text, _) = run(&pretty_args);
    assert!(text.contains("\n  \"command\""));
    assert_eq!(without_timing(pretty), without_timing(plain));
}

#[test]
fn help_exits_zero() {
    let out = Command::new(env!("CARGO_BIN_EXE_loccalc")).arg("--help").output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("grassmann"));
}
