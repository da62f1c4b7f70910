//! The `conecalc` binary: exit codes, stdout reports and replay files.

use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn conecalc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_conecalc")).args(args).output().unwrap()
}

fn write_job(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.display().to_string()
}

fn report(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn a_vfc_job_reports_on_stdout() {
    let dir = tempfile::tempdir().unwrap();
    let job = write_job(dir.path(), "vfc.json", r#"{"schema":1,"task":"vfc","params":{"fixture":"conic"}}"#);
    let saved = dir.path().join("report.json");
    let out = conecalc(&["run", &job, "--out", saved.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    assert_eq!(r["status"], "ok");
    assert_eq!(r["result"]["display"], "2[P1]");
    assert_eq!(r["result"]["rank"], 1);
    let on_disk: Value = serde_json::from_str(&std::fs::read_to_string(saved).unwrap()).unwrap();
    assert_eq!(on_disk, r);
    assert!(String::from_utf8_lossy(&out.stderr).contains("vfc [ok]"));
}

#[test]
fn reports_are_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let job = write_job(
        dir.path(),
        "segre.json",
        r#"{"schema":1,"task":"segre","params":{"scheme":{"ambient":"projective","vars":["x","y","z"],"ideal":["x*z - y^2"]}}}"#,
    );
    let strip = |mut v: Value| {
        v.as_object_mut().unwrap().remove("elapsed_ms");
        v
    };
    let a = conecalc(&["run", &job, "--seed", "7"]);
    let b = conecalc(&["run", &job, "--seed", "7"]);
    assert_eq!(a.status.code(), Some(0), "{}", String::from_utf8_lossy(&a.stderr));
    let (a, b) = (strip(report(&a)), strip(report(&b)));
    assert_eq!(a, b);
    assert_eq!(a["seed"], 7);
    assert_eq!(a["result"]["display"], "2[P1] - 4[P0]");
}

#[test]
fn input_errors_exit_with_two() {
    let dir = tempfile::tempdir().unwrap();
    let cases = [
        ("garbage.json", "not json"),
        ("schema.json", r#"{"schema":9,"task":"segre"}"#),
        ("task.json", r#"{"schema":1,"task":"integrate"}"#),
        ("poly.json", r#"{"schema":1,"task":"normal-cone","params":{"vars":["x"],"ideal":["x^^2"]}}"#),
    ];
    for (name, text) in cases {
        let job = write_job(dir.path(), name, text);
        assert_eq!(conecalc(&["run", &job]).status.code(), Some(2), "{name}");
    }
    let missing = dir.path().join("absent.json");
    assert_eq!(conecalc(&["run", missing.to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(conecalc(&["check", "--suite", "no-such-suite"]).status.code(), Some(2));
}

#[test]
fn smooth_identity_without_tangent_class_is_not_applicable() {
    let dir = tempfile::tempdir().unwrap();
    let job = write_job(
        dir.path(),
        "closed.json",
        r#"{"schema":1,"task":"vfc","params":{
            "scheme":{"ambient":"projective","vars":["x0","x1","x2"],"ideal":["x0"]},
            "normal_space":{"kind":"smooth-identity"},
            "method":"closed"}}"#,
    );
    let out = conecalc(&["run", &job]);
    let r = report(&out);
    assert_eq!(out.status.code(), Some(3), "{r}");
    assert_eq!(r["status"], "error");
}

#[test]
fn fixtures_are_listed() {
    let out = conecalc(&["fixtures"]);
    assert_eq!(out.status.code(), Some(0));
    let all = report(&out);
    let names: Vec<&str> = all.as_array().unwrap().iter().map(|f| f["name"].as_str().unwrap()).collect();
    for want in ["fat-point", "conic", "twisted-cubic", "double-line", "p2-smooth"] {
        assert!(names.contains(&want), "{want} missing from {names:?}");
    }
}

#[test]
fn failing_instances_leave_replayable_jobs() {
    let dir = tempfile::tempdir().unwrap();
    let dump = dir.path().join("dump");
    let out = conecalc(&[
        "check",
        "--suite",
        "left-inverse",
        "--count",
        "2",
        "--seed",
        "5",
        "--mutate",
        "--dump-dir",
        dump.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(3));
    let r = report(&out);
    let failures = r["result"]["suites"][0]["failures"].as_array().unwrap().clone();
    assert_eq!(failures.len(), 2);
    for f in failures {
        let path = f["dump"].as_str().unwrap();
        let saved: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
        assert_eq!(saved, f["replay"]);
        // the replay is the honest instance, so it passes
        let again = conecalc(&["run", path]);
        assert_eq!(again.status.code(), Some(0));
        let s = &report(&again)["result"]["suites"][0];
        assert_eq!((s["passed"].as_u64(), s["total"].as_u64()), (Some(1), Some(1)));
    }
}
