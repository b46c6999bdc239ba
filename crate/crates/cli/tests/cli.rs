use std::process::{Command, Output};

fn uinf(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_uinf")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn star_zero_of_alpha() {
    let o = uinf(&["star", "--n", "0", "a(-1)|0>", "a(-1)|0>"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "a(-1)a(-1)|0>\n");
}

#[test]
fn circ_of_vacuum_is_zero() {
    let o = uinf(&["circ", "--n", "0", "|0>", "a(-1)|0>"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "0\n");
}

#[test]
fn diamond_on_diagonal_matches_star_one() {
    let d = uinf(&["diamond", "[a(-1)|0>]{1,1}", "[a(-1)|0>]{1,1}"]);
    let s = uinf(&["star", "--n", "1", "a(-1)|0>", "a(-1)|0>"]);
    assert_eq!(d.status.code(), Some(0));
    assert_eq!(stdout(&d), format!("[{}]{{1,1}}\n", stdout(&s).trim_end()));
    assert_eq!(stdout(&s), "-3 * a(-2)a(-1)|0> - 2 * a(-3)a(-1)|0>\n");
}

#[test]
fn printed_output_reparses() {
    let d = uinf(&["diamond", "[a(-2)|0> + a(-1)|0>]{2,1}", "[a(-1)a(-1)|0>]{1,2}"]);
    let printed = stdout(&d);
    let again = uinf(&["check-qinf", printed.trim_end()]);
    let echoed = stdout(&again).lines().next().unwrap().to_string();
    assert_eq!(format!("{echoed}\n"), format!("element: {printed}"));
}

#[test]
fn counterexample_lines() {
    let o = uinf(&["counterexample", "--n-max", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let pass: Vec<&str> = out.lines().filter(|l| l.starts_with("PASS")).collect();
    assert_eq!(pass.len(), 2);
    for l in pass {
        assert!(l.contains("member / shifted non-member / witness factor 2"), "{l}");
    }
}

#[test]
fn check_qinf_reports() {
    let o = uinf(&["check-qinf", "[a(-1)|0>]{2,2}"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("not member: column 2 class (1,1)"));

    let o = uinf(&["--json", "check-qinf", "[|0>]{0,1}"]);
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["member"], true);
    assert_eq!(v["checked_columns"], serde_json::json!([1]));
}

#[test]
fn lambda_flag_evaluates_witness() {
    let o = uinf(&["--json", "--lambda", "3/2", "check-qinf", "[a(-1)|0>]{1,1}"]);
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["witness"]["image"], "3/2 * a(-1)|0>");
}

#[test]
fn json_records_have_stable_fields() {
    let o = uinf(&["verify", "--suite", "a1-heis", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    for line in stdout(&o).lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        for field in ["name", "params", "passed", "witness"] {
            assert!(v.get(field).is_some(), "{line}");
        }
    }
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(uinf(&["verify", "--suite", "nope"]).status.code(), Some(2));
    assert_eq!(uinf(&["star", "--n", "0", "a(-1|0>", "|0>"]).status.code(), Some(2));
    assert_eq!(uinf(&["diamond", "[|0>]{1,1}"]).status.code(), Some(2));
    assert_eq!(uinf(&["--lambda", "x", "circ", "--n", "0", "|0>", "|0>"]).status.code(), Some(2));
}

#[test]
fn output_is_deterministic() {
    let args = ["verify", "--suite", "homomorphism", "--json"];
    assert_eq!(uinf(&args).stdout, uinf(&args).stdout);
}

#[test]
fn verify_all_passes() {
    let o = uinf(&["verify", "--suite", "all"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).trim_end().ends_with(" 0 failed"));
}
