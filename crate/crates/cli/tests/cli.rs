use std::process::{Command, Output};

use clifford_cli::report::AnalysisReport;
use clifford_cli::sweep::SweepSummary;

fn clifford(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_clifford")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn analyze_snapshot() {
    let o = clifford(&["analyze", "3", "5"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), include_str!("snapshots/analyze_3_5.json"));
    let r: AnalysisReport = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!((r.genus, r.restricted.argmax.clone()), (4, vec![3, 5]));
    assert_eq!(r.restricted.defect.decimal, "0.5");
}

#[test]
fn analysis_report_round_trips() {
    for gens in [vec![1u64], vec![3, 5], vec![6, 7, 8, 9, 10, 11], vec![15, 16, 17], vec![23, 29, 31]] {
        let s = clifford_core::NumericalSemigroup::from_generators(&gens).unwrap();
        let r = AnalysisReport::new(&s);
        let json = serde_json::to_string(&r).unwrap();
        let back: AnalysisReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back, r);
        assert_eq!(serde_json::to_string(&back).unwrap(), json);
    }
}

#[test]
fn analyze_edge_cases_and_exit_codes() {
    let o = clifford(&["analyze", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let r: AnalysisReport = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!((r.genus, r.restricted.defect.twice), (0, 0));

    let o = clifford(&["analyze", "2", "4"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("not a numerical semigroup (gcd 2)"));

    assert_eq!(clifford(&["analyze", "three"]).status.code(), Some(1));
    assert_eq!(clifford(&["analyze"]).status.code(), Some(1));
    assert_eq!(clifford(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(clifford(&["analyze", "0", "3"]).status.code(), Some(1));
    assert_eq!(clifford(&["--conductor-cap", "100", "analyze", "20", "21"]).status.code(), Some(1));
    assert_eq!(clifford(&["--help"]).status.code(), Some(0));
}

#[test]
fn table_format_from_either_position() {
    let a = clifford(&["--format", "table", "analyze", "3", "5"]);
    let b = clifford(&["analyze", "3", "5", "--format", "table"]);
    assert_eq!(stdout(&a), stdout(&b));
    assert!(stdout(&a).contains("clifford defect      0.5 at [3, 5]"));
}

#[test]
fn family_command() {
    let o = clifford(&["family", "suzuki", "--q0", "2", "--verify", "--format", "table"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("argmax       10") && text.contains("defect       3") && text.contains("verify:      OK"));

    let o = clifford(&["family", "norm-trace", "--q", "2", "--r", "3", "--verify", "--format", "table"]);
    assert!(stdout(&o).contains("defect       1.5"));
    assert_eq!(o.status.code(), Some(0));

    assert_eq!(clifford(&["family", "pedersen-sorensen", "--q0", "4", "--t", "3"]).status.code(), Some(2));
    assert_eq!(clifford(&["family", "moebius", "--m", "3"]).status.code(), Some(1));
    assert_eq!(clifford(&["family", "interval", "--m", "3"]).status.code(), Some(1));

    // Above the cap: closed forms only, with a warning.
    let o = clifford(&["family", "suzuki", "--q0", "32", "--verify"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&o.stderr).contains("not verified"));
}

#[test]
fn sweeps() {
    let o = clifford(&["sweep", "interval", "--m", "2..20"]);
    assert_eq!(o.status.code(), Some(0));
    let s: SweepSummary = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!((s.instances, s.passed), (190, 190));

    let o = clifford(&["sweep", "interval", "--m", "2..20", "--corrupt-closed-form"]);
    assert_eq!(o.status.code(), Some(3));

    for args in [
        &["sweep", "interval", "--m", "2..40", "--h", "1..m-1"][..],
        &["sweep", "hermitian-quotient", "--q", "3..50"],
        &["sweep", "suzuki", "--q0", "2,4,8"],
    ] {
        assert_eq!(clifford(args).status.code(), Some(0), "{args:?}");
    }

    let o = clifford(&["--conductor-cap", "1000", "sweep", "suzuki", "--q0", "2,4,8"]);
    assert_eq!(o.status.code(), Some(0));
    let s: SweepSummary = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!((s.passed, s.skipped), (2, 1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("warning: skipped suzuki q0=8"));
}

#[test]
fn sweep_output_is_independent_of_jobs() {
    let args = |jobs: &'static str| ["sweep", "hermitian-quotient", "--q", "3..40", "--jobs", jobs, "--corrupt-closed-form"];
    let one = clifford(&args("1"));
    let many = clifford(&args("4"));
    assert_eq!(one.status.code(), Some(3));
    assert_eq!(one.stdout, many.stdout);
}

#[test]
fn plots() {
    let o = clifford(&["plot", "--family", "hermitian-quotient", "--m", "7", "--q", "13", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let row39 = text.lines().find(|l| l.starts_with("39,")).unwrap();
    assert!(row39.ends_with(",1"), "{row39}");

    let text = stdout(&clifford(&["plot", "3", "5", "--format", "csv"]));
    let marked: Vec<&str> = text.lines().skip(1).filter(|l| l.ends_with(",1")).map(|l| l.split(',').next().unwrap()).collect();
    assert_eq!(marked, ["3", "5"]);

    let o = clifford(&["plot", "1", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 2);

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("klein.svg");
    let o = clifford(&["plot", "--family", "klein", "--m", "10", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let first = std::fs::read(&path).unwrap();
    clifford(&["plot", "--family", "klein", "--m", "10", "--out", path.to_str().unwrap()]);
    assert_eq!(first, std::fs::read(&path).unwrap());
    assert!(String::from_utf8(first).unwrap().contains("<!-- clifford-cli "));

    let bad = dir.path().join("missing").join("x.svg");
    assert_eq!(clifford(&["plot", "3", "5", "--out", bad.to_str().unwrap()]).status.code(), Some(1));
    assert_eq!(clifford(&["plot"]).status.code(), Some(1));
}

#[test]
fn delta_and_code_bounds() {
    let o = clifford(&["delta", "3", "5", "--a", "3"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["points"][0]["delta"], 9);
    assert_eq!(v["members_below_conductor"], 4);

    let o = clifford(&["code-bounds", "3", "5", "--m", "4", "--d", "5"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["rr_bound_raw"], 1);
    assert_eq!(v["clifford_bound_raw"], 2);
    assert_eq!(v["exact_dimension"], 2);
    assert_eq!(v["winner"], "Clifford");
    assert_eq!(v["ma"]["errors"], 1);

    let o = clifford(&["code-bounds", "3", "5", "--m", "6"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!((v["rr_bound_raw"].as_i64(), v["clifford_bound_raw"].as_i64()), (Some(3), Some(3)));
    assert_eq!(v["winner"], "Tie");

    assert_eq!(clifford(&["code-bounds", "3", "5", "--m", "4", "--d", "0"]).status.code(), Some(1));
    assert_eq!(clifford(&["delta", "3", "5", "--a", "9"]).status.code(), Some(1));
}
