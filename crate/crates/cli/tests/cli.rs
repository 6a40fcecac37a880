use std::path::PathBuf;
use std::process::{Command, Output};

use qcoact::Report;

fn qcoact(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qcoact")).args(args).output().expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn fixture(name: &str) -> String {
    let root = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../core/fixtures").join(name);
    root.to_string_lossy().into_owned()
}

fn temp(name: &str) -> PathBuf {
    std::env::temp_dir().join(format!("qcoact-cli-{}-{name}", std::process::id()))
}

#[test]
fn appendix_suite_passes() {
    let o = qcoact(&["verify", "appendix"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
}

#[test]
fn seven_sphere_has_no_first_degree_coaction() {
    let o = qcoact(&["classify", "--preset", "vs", "--m", "3", "--t", "3/4", "--u", "3/4"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("families: 0"));
}

#[test]
fn first_quaternionic_family_verifies_at_a_unit() {
    let o = qcoact(&["verify", "coaction", "--family", "bl-a", "--omega", "3/5+4/5i"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
}

#[test]
fn failing_family_exits_one() {
    let o = qcoact(&["verify", "coaction", "--family", "vs3-two"]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("FAIL homomorphism/"));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["verify", "nonsense"][..],
        &["verify", "coaction", "--family", "bl-a", "--omega", "2"],
        &["verify", "coaction", "--family", "no-such-family"],
        &["verify", "hopf", "--t", "1/2"],
        &["classify", "--preset", "vs", "--t", "3/4"],
        &["classify", "--preset", "vs", "--t", "3/2", "--u", "3/4"],
        &["parse", "/nonexistent/file.qalg"],
    ] {
        assert_eq!(code(&qcoact(args)), 2, "{args:?}");
    }
}

#[test]
fn parse_errors_exit_two() {
    let path = temp("bad.qalg");
    std::fs::write(&path, "algebra X\ngenerators a\nrelation a a = = a\n").unwrap();
    assert_eq!(code(&qcoact(&["parse", path.to_str().unwrap()])), 2);
    assert_eq!(code(&qcoact(&["parse", &fixture("vs3-misoriented.qalg")])), 2);
    std::fs::remove_file(path).ok();
}

#[test]
fn resource_limits_exit_three() {
    let o = qcoact(&["classify", "--preset", "vs", "--m", "1", "--t", "3/4", "--u", "3/4", "--nodes", "2"]);
    assert_eq!(code(&o), 3);
    assert_eq!(code(&qcoact(&["verify", "presentations", "--fuel", "2"])), 3);
}

#[test]
fn fixtures_parse() {
    for name in ["suq2.qalg", "vs3.qalg", "vs5.qalg", "vs7.qalg"] {
        assert_eq!(code(&qcoact(&["parse", &fixture(name)])), 0, "{name}");
    }
    // the quaternionic sphere parses but is not confluent
    assert_eq!(code(&qcoact(&["parse", &fixture("bl7.qalg")])), 1);
    assert_eq!(code(&qcoact(&["parse", &fixture("bl7.qalg"), "--complete"])), 1);
    assert_eq!(code(&qcoact(&["parse", &fixture("vs3-misoriented.qalg"), "--unchecked"])), 1);
}

#[test]
fn json_report_round_trips_byte_identically() {
    let path = temp("hopf.json");
    assert_eq!(code(&qcoact(&["verify", "hopf", "--json", path.to_str().unwrap()])), 0);
    let text = std::fs::read_to_string(&path).unwrap();
    let report: Report = serde_json::from_str(&text).unwrap();
    assert_eq!(serde_json::to_string_pretty(&report).unwrap() + "\n", text);
    let value: serde_json::Value = serde_json::from_str(&text).unwrap();
    for key in ["suite", "params", "checks", "exit"] {
        assert!(value.get(key).is_some(), "missing {key}");
    }
    for key in ["t", "u", "omega"] {
        assert!(value["params"].get(key).is_some(), "missing params.{key}");
    }
    for key in ["id", "status", "residual_terms"] {
        assert!(value["checks"][0].get(key).is_some(), "missing checks[].{key}");
    }
    std::fs::remove_file(path).ok();
}

#[test]
fn json_to_stdout_records_omega_and_exit() {
    let o = qcoact(&["verify", "coaction", "--family", "vs3-two", "--omega", "i", "--json", "-"]);
    assert_eq!(code(&o), 1);
    let report: Report = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(report.exit, 1);
    assert_eq!(report.params.omega.as_deref(), Some("i"));
}

#[test]
fn classification_json_is_reproducible() {
    let args = ["classify", "--preset", "vs", "--m", "1", "--t", "1/2", "--u", "1/2", "--json", "-"];
    let (a, b) = (qcoact(&args), qcoact(&args));
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["families"].as_array().unwrap().len(), 2);
    assert_eq!(serde_json::to_string_pretty(&v).unwrap() + "\n", stdout(&a));
}

#[test]
fn comparison_reports_the_missing_family() {
    let o = qcoact(&["classify", "--preset", "bl", "--ansatz", "--t", "3/4", "--u", "3/4", "--compare"]);
    assert_eq!(code(&o), 1);
    let out = stdout(&o);
    assert!(out.contains("families: 1"));
    assert!(out.contains("FAIL expected/bl-b/found"));
}

#[test]
fn spec_file_is_accepted() {
    let path = temp("spec.json");
    let spec = qcoact::coaction::families::bl_a().to_json();
    std::fs::write(&path, serde_json::to_string(&spec).unwrap()).unwrap();
    let o = qcoact(&["verify", "coaction", "--spec", path.to_str().unwrap()]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    std::fs::remove_file(path).ok();
}
