use std::process::{Command, Output};

use prelie::verify::{Check, Report};

fn prelie(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_prelie")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn lists_every_check() {
    let out = prelie(&["list"]);
    assert!(out.status.success());
    let text = stdout(&out);
    for c in Check::ALL {
        assert!(text.contains(c.id()), "{c}");
    }
}

#[test]
fn json_series_table_round_trips() {
    let out = prelie(&["verify", "egf", "--order", "8", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let report = Report::from_json(&stdout(&out)).unwrap();
    assert_eq!(report.config.egf_order, 8);
    assert_eq!(report.results.len(), 8);
    assert_eq!(report.results[7].actual, "2097152");
    assert_eq!(Report::from_json(&report.to_json()).unwrap(), report);
}

#[test]
fn failing_check_exits_with_one() {
    let out = prelie(&["verify", "orbit-rank"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("FAIL n=3   orbit of the symmetrized relator: expected 2, got 3"));
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(prelie(&["verify", "no-such-check"]).status.code(), Some(2));
    assert_eq!(prelie(&["verify", "egf", "--format", "yaml"]).status.code(), Some(2));
    assert_eq!(prelie(&["verify", "egf", "--max-arity", "1"]).status.code(), Some(2));
    assert_eq!(prelie(&["verify"]).status.code(), Some(2));
}

#[test]
fn resource_cap_is_a_failed_entry() {
    let out = prelie(&["verify", "quotient-dims", "egf", "--quotient-max-arity", "9", "--format", "json"]);
    assert_eq!(out.status.code(), Some(1));
    let report = Report::from_json(&stdout(&out)).unwrap();
    let capped: Vec<_> = report.for_check(Check::QuotientDims).collect();
    assert_eq!(capped.len(), 1);
    assert!(capped[0].actual.contains("resource cap"));
    // The run continues past the capped check.
    assert!(report.for_check(Check::Egf).all(|r| r.passed));
}

#[test]
fn text_report_names_checks_by_content() {
    let out = prelie(&["verify", "factorization", "--max-arity", "4", "--parallel", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.starts_with("factorization: tree tensors factor"));
    assert!(text.contains("PASS n=4   recomposition failures over 120 tensors"));
}
