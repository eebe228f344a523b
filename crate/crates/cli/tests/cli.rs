use std::process::{Command, Output};

use serde_json::Value;

fn braidlift(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_braidlift")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8")
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut all = vec!["--json"];
    all.extend_from_slice(args);
    let out = braidlift(&all);
    (
        out.status.code().expect("exit code"),
        serde_json::from_str(&stdout(&out)).expect("json document"),
    )
}

#[test]
fn diagonal_element_lifts_by_both_methods() {
    let (code, v) =
        json(&["check-element", "--group", "G(3,3,2)", "--element", "perm=[1,2];exp=[1,2]"]);
    assert_eq!(code, 0);
    assert_eq!(v["lifts"], true);
    assert_eq!(v["agree"], true);
    let methods: Vec<_> =
        v["reports"].as_array().unwrap().iter().map(|r| r["method"].clone()).collect();
    assert_eq!(methods, ["oracle", "fast"]);
}

#[test]
fn transposition_reports_witness() {
    let (code, v) =
        json(&["check-element", "--group", "S(4)", "--element", "perm=[2,1,3,4];exp=[0,0,0,0]"]);
    assert_eq!(code, 3);
    assert_eq!(v["lifts"], false);
    let oracle = &v["reports"][0];
    assert_eq!(oracle["witness"]["hyperplane"], "H[1,2;0]");
    assert_eq!(oracle["witness"]["power"], 1);
}

#[test]
fn text_output_names_witness() {
    let out = braidlift(&[
        "check-element",
        "--group",
        "S(4)",
        "--element",
        "perm=[2,1,3,4];exp=[0,0,0,0]",
        "--method",
        "oracle",
    ]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stdout(&out).contains("witness H[1,2;0] power 1"));
}

#[test]
fn json_strings_round_trip() {
    let (_, v) =
        json(&["check-element", "--group", "G(6,3,2)", "--element", "perm=[2,1];exp=[5,1]"]);
    let desc: braidlift::GroupDescriptor = v["group"].as_str().unwrap().parse().unwrap();
    assert_eq!(desc.to_string(), "G(6,3,2)");
    let w = braidlift::MonomialElement::parse(desc, v["element"].as_str().unwrap()).unwrap();
    assert_eq!(w.to_string(), "perm=[2,1];exp=[5,1]");
    if let Some(h) = v["reports"][0]["witness"]["hyperplane"].as_str() {
        let parsed: braidlift::Hyperplane = h.parse().unwrap();
        assert_eq!(parsed.to_string(), h);
    }
}

#[test]
fn parse_errors_exit_2() {
    for args in [
        ["check-element", "--group", "G(5,2,2)", "--element", "perm=[1,2];exp=[0,0]"],
        ["check-element", "--group", "G(3,3,2)", "--element", "perm=[1,1];exp=[0,0]"],
        ["check-element", "--group", "G(3,3,2)", "--element", "perm=[1,2];exp=[1,1]"],
        ["check-element", "--group", "nonsense", "--element", "perm=[1,2];exp=[0,0]"],
    ] {
        assert_eq!(braidlift(&args).status.code(), Some(2), "{args:?}");
    }
    assert_eq!(braidlift(&["survey", "--grid", "d<=2"]).status.code(), Some(2));
    assert_eq!(braidlift(&["frobenius", "--p", "7", "--q", "2"]).status.code(), Some(2));
}

#[test]
fn guard_exceeded_exits_4() {
    let gens =
        "perm=[2,1,3,4,5,6,7,8];exp=[0,0,0,0,0,0,0,0]|perm=[2,3,4,5,6,7,8,1];exp=[0,0,0,0,0,0,0,0]";
    let out =
        braidlift(&["check-subgroup", "--group", "S(8)", "--generators", gens, "--guard", "100"]);
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn classify_bieberbach() {
    let (code, v) = json(&["classify", "--group", "G(4,4,2)"]);
    assert_eq!(code, 0);
    assert_eq!(v["bieberbach_formula"], true);
    assert_eq!(v["bieberbach_bruteforce"], true);
    let (_, v) = json(&["classify", "--group", "G(3,3,2)"]);
    assert_eq!(v["bieberbach_formula"], false);
    assert_eq!(v["bieberbach_bruteforce"], false);
}

#[test]
fn check_subgroup_reports_structure() {
    let (code, v) = json(&[
        "check-subgroup",
        "--group",
        "S(3)",
        "--generators",
        "perm=[2,3,1];exp=[0,0,0];perm=[2,1,3];exp=[0,0,0]",
    ]);
    assert_eq!(code, 3);
    assert_eq!(v["order"], 6);
    assert_eq!(v["orbits"], 1);
    assert_eq!(v["faithful"], true);
    assert_eq!(v["report"]["lifts"], false);

    let (code, v) =
        json(&["check-subgroup", "--group", "S(3)", "--generators", "perm=[2,3,1];exp=[0,0,0]"]);
    assert_eq!(code, 0);
    assert_eq!(v["order"], 3);
}

#[test]
fn survey_accepts_both_spellings() {
    let (code, a) = json(&["survey", "--grid", "d≤2,e≤2,r≤2"]);
    let (_, b) = json(&["survey", "--grid", "d<=2,e<=2,r<=2"]);
    assert_eq!(code, 0);
    assert_eq!(a, b);
    assert_eq!(a["rows"].as_array().unwrap().len(), 8);
    assert_eq!(a["consistent"], true);
}

#[test]
fn frobenius_summary() {
    let (code, v) = json(&["frobenius", "--p", "31", "--q", "5"]);
    assert_eq!(code, 0);
    assert_eq!(v["order"], 155);
    assert_eq!(v["cycle_types_ok"], true);
    assert_eq!(v["all_in_f_p"], true);
}

#[test]
fn cocycle_round_trips_all_succeed() {
    let (code, v) = json(&[
        "cocycle",
        "--group",
        "S(4)",
        "--generators",
        "perm=[2,3,1,4];exp=[0,0,0,0]",
        "--random",
        "25",
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["solved"], 25);
}

#[test]
fn verify_is_deterministic_and_passes() {
    let strip = |v: &Value| {
        v["criteria"]
            .as_array()
            .unwrap()
            .iter()
            .map(|c| (c["id"].clone(), c["passed"].clone(), c["detail"].clone()))
            .collect::<Vec<_>>()
    };
    let (code, a) = json(&["verify"]);
    let (_, b) = json(&["verify"]);
    assert_eq!(code, 0);
    assert_eq!(a["passed"], true);
    assert_eq!(strip(&a), strip(&b));
}
