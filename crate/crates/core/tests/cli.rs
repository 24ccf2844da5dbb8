use std::path::PathBuf;
use std::process::{Command, Output};

use leibkit::report::{Report, Verdict};

fn leibkit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_leibkit")).args(args).output().expect("spawn leibkit")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("cli");
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn passing_builtins_exit_zero() {
    for args in [
        &["check", "--kind", "leibniz", "so3-standard"][..],
        &["check", "--kind", "rack", "s3-conjugation"],
        &["check", "--kind", "digroup", "order24-standard"],
        &["check", "--kind", "dialgebra", "ex2.3"],
        &["analyze", "ex2.1-n2"],
        &["digroup", "suite", "order6-standard"],
        &["enumerate", "4"],
        &["list"],
    ] {
        let out = leibkit(args);
        assert_eq!(code(&out), 0, "{args:?}\n{}", stdout(&out));
        assert!(stdout(&out).trim_end().ends_with("verdict: pass"), "{args:?}");
    }
}

#[test]
fn failing_checks_exit_one_with_witness() {
    for (kind, name) in [
        ("leibniz", "ex2.2-mutated"),
        ("rack", "z2-mut-axiom2"),
        ("digroup", "mut-g6"),
        ("dialgebra", "ex2.3-n1-mut-d2"),
    ] {
        let out = leibkit(&["check", "--kind", kind, name]);
        assert_eq!(code(&out), 1, "{name}");
        let text = stdout(&out);
        assert!(text.contains("witness"), "{name}\n{text}");
        assert!(text.trim_end().ends_with("verdict: fail"));
    }
}

#[test]
fn bad_input_exits_two() {
    let empty = scratch("empty.json");
    std::fs::write(&empty, "").unwrap();
    let garbage = scratch("garbage.json");
    std::fs::write(&garbage, "{\"size\": 2, \"point\": 0").unwrap();
    let wrong_shape = scratch("shape.json");
    std::fs::write(&wrong_shape, r#"{"size": 2, "point": 0, "table": [[0, 1]]}"#).unwrap();
    for args in [
        vec!["check", "--kind", "rack", empty.to_str().unwrap()],
        vec!["check", "--kind", "rack", garbage.to_str().unwrap()],
        vec!["check", "--kind", "rack", wrong_shape.to_str().unwrap()],
        vec!["check", "--kind", "digroup", "no-such-builtin"],
        vec!["enumerate", "99"],
    ] {
        let out = leibkit(&args);
        assert_eq!(code(&out), 2, "{args:?}");
        assert!(String::from_utf8_lossy(&out.stderr).starts_with("error:"));
    }
    // clap usage errors also exit 2
    assert_eq!(code(&leibkit(&["--step=-1", "diff", "so3-standard"])), 2);
    assert_eq!(code(&leibkit(&["check", "ex2.2"])), 2);
}

#[test]
fn json_reports_parse() {
    let out = leibkit(&["--json", "check", "--kind", "digroup", "mut-g2"]);
    assert_eq!(code(&out), 1);
    let r = Report::from_json(&stdout(&out)).unwrap();
    assert_eq!(r.verdict, Verdict::Fail);
    assert!(r.checks.iter().any(|c| !c.passed && !c.witnesses.is_empty()));

    let out = leibkit(&["--json", "diff", "so3-standard"]);
    assert_eq!(code(&out), 0);
    let r = Report::from_json(&stdout(&out)).unwrap();
    assert!(r.checks.iter().all(|c| c.residual.is_some()));
}

#[test]
fn seed_makes_sampled_output_reproducible() {
    let a = leibkit(&["--json", "--seed", "7", "expad", "heisenberg-dtwist"]);
    let b = leibkit(&["--json", "--seed", "7", "expad", "heisenberg-dtwist"]);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn induced_rack_file_round_trips() {
    let path = scratch("order6-rack.json");
    let out = leibkit(&["digroup", "rack", "order6-standard", "--out", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0, "{}", stdout(&out));
    let out = leibkit(&["check", "--kind", "rack", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0, "{}", stdout(&out));
}

#[test]
fn extra_ideal_is_reported() {
    // span(v1) is S for ex2.2, so the sandwich holds and no splitting exists.
    let s = scratch("ideal-s.json");
    std::fs::write(&s, r#"{"ambient_dim": 3, "basis": [["1", "0", "0"]]}"#).unwrap();
    let out = leibkit(&["--ideal", s.to_str().unwrap(), "analyze", "ex2.2"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("ideal: {v1}"), "{text}");
    assert!(text.contains("split over ideal: no splitting"), "{text}");

    let n = scratch("ideal-n.json");
    std::fs::write(&n, r#"{"ambient_dim": 3, "basis": [["0", "0", "1"]]}"#).unwrap();
    let text = stdout(&leibkit(&["--ideal", n.to_str().unwrap(), "analyze", "ex2.2"]));
    assert!(text.contains("not attempted, E is not an ideal"), "{text}");

    let bad = scratch("ideal-bad.json");
    std::fs::write(&bad, r#"{"ambient_dim": 4, "basis": []}"#).unwrap();
    assert_eq!(code(&leibkit(&["--ideal", bad.to_str().unwrap(), "analyze", "ex2.2"])), 2);
}
