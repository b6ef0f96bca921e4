use std::fs;
use std::process::{Command, Output};

fn unavoid(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_unavoid")).args(args).env_remove("UNAVOID_MAX_NODES").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write(dir: &tempfile::TempDir, name: &str, text: &str) -> String {
    let p = dir.path().join(name);
    fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn decide_exit_codes_follow_the_verdict() {
    let dir = tempfile::tempdir().unwrap();
    let x0 = write(&dir, "x0.txt", "k=2\na--a\nb--b\na--b\n");
    let o = unavoid(&["decide", &x0, "--exact"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("Unavoidable (window-graph)\n"));

    let two = write(&dir, "two.txt", "a--a\nbb\n");
    let o = unavoid(&["decide", &two]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("Avoidable period 2: ab\n"));

    let unary = write(&dir, "unary.txt", "a--a\n");
    assert_eq!(unavoid(&["decide", &unary]).status.code(), Some(1));
    let binary = write(&dir, "binary.txt", "k=2\na--a\n");
    let o = unavoid(&["decide", &binary]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("Avoidable period 1: b\n"));
}

#[test]
fn unknown_when_period_bound_is_too_small() {
    let dir = tempfile::tempdir().unwrap();
    let x = write(&dir, "x.txt", "k=2\naa\nbb\n");
    let o = unavoid(&["decide", &x, "--period-max", "1", "--max-nodes", "1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).starts_with("Unknown"));
    let o = Command::new(env!("CARGO_BIN_EXE_unavoid")).args(["decide", &x, "--exact"]).env("UNAVOID_MAX_NODES", "1").output().unwrap();
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).starts_with("Unknown"));
}

#[test]
fn usage_and_io_errors() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write(&dir, "bad.txt", "k=2\nab\nac\n");
    let o = unavoid(&["decide", &bad]);
    assert_eq!(o.status.code(), Some(64));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 3"));
    assert_eq!(unavoid(&["decide", "/nonexistent/set.txt"]).status.code(), Some(74));
    assert_eq!(unavoid(&["frobnicate"]).status.code(), Some(64));
    assert_eq!(unavoid(&["x2", "--m", "5", "--x1", "9"]).status.code(), Some(64));
    assert_eq!(unavoid(&["verify", "no-such-suite"]).status.code(), Some(64));
    assert_eq!(unavoid(&["--help"]).status.code(), Some(0));
}

#[test]
fn x2_prints_a_parseable_set_with_preview() {
    let o = unavoid(&["x2", "--m", "12", "--x1", "6", "--y1", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("# region=true\n"));
    assert!(text.contains("# match ab-alt-bc (p=0, q=2): abcbc\n"));
    let x = unavoid::parse_set(&text).unwrap();
    assert_eq!(x.len(), 6);
    assert!(x.same_words(&unavoid_core::theory::conjecture_set(12, 6, 3).unwrap()));

    let o = unavoid(&["x2", "--m", "5", "--x1", "0", "--y1", "1", "--eq2"]);
    let x = unavoid::parse_set(&stdout(&o)).unwrap();
    assert!(x.same_words(&unavoid_core::theory::top_bottom_set(5, 0, 1).unwrap()));
    assert_eq!(stdout(&o), stdout(&unavoid(&["x2eq2", "--m", "5", "--x1", "0", "--y1", "1"])));
}

#[test]
fn holes_and_reduce() {
    assert_eq!(stdout(&unavoid(&["holes", "--k", "3", "--m", "7"])), "H = 23 (conditional on the conjecture-region conjecture), max_fill = 7\n");
    assert!(stdout(&unavoid(&["holes", "--k", "2", "--m", "6"])).starts_with("H = 7,"));
    let dir = tempfile::tempdir().unwrap();
    let f = write(&dir, "r.txt", "ab--\nc\n");
    let o = unavoid(&["reduce", &f, "--ops", "hole-truncation"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "k=3\nab\nc\n# trace: 1 steps\n# hole-truncation: -ab-- +ab\n");
    let f = write(&dir, "e.txt", "k=2\na--a\nb--b\na--b\n");
    let o = unavoid(&["reduce", &f, "--ops", "expansion:a--b@1,factoring"]);
    assert!(stdout(&o).starts_with("k=2\na--a\nb--b\naa-b\nab-b\n"));
}

#[test]
fn output_is_stable_across_runs() {
    for args in [&["x2", "--m", "20", "--x1", "9", "--y1", "2"][..], &["verify", "gap-swap", "--m-max", "6"]] {
        assert_eq!(stdout(&unavoid(args)), stdout(&unavoid(args)));
    }
}

#[test]
fn sweep_and_summarize() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("s.tsv");
    let o = unavoid(&["sweep", "--m-max", "20", "--out", out.to_str().unwrap(), "--jobs", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let report = stdout(&o);
    assert!(report.contains("unknown: 0\n"));
    let o = unavoid(&["sweep", "--summarize", out.to_str().unwrap(), "--sample", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), report);
    let entries: Vec<_> = fs::read_dir(dir.path()).unwrap().collect();
    assert_eq!(entries.len(), 1);
}
