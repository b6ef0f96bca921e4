use std::fs;
use std::path::Path;

use unavoid::sweep::{run_sweep, summarize, SweepConfig, SweepError};

fn config(out: &Path, m_hi: usize, jobs: usize, resume: bool) -> SweepConfig {
    SweepConfig {
        m_lo: 3,
        m_hi,
        out: out.to_path_buf(),
        resume,
        jobs,
        timings: false,
    }
}

#[test]
fn output_does_not_depend_on_thread_count() {
    let dir = tempfile::tempdir().unwrap();
    let (a, b) = (dir.path().join("a.tsv"), dir.path().join("b.tsv"));
    let ra = run_sweep(&config(&a, 30, 1, false)).unwrap();
    let rb = run_sweep(&config(&b, 30, 4, false)).unwrap();
    assert_eq!(ra, rb);
    assert_eq!(fs::read(&a).unwrap(), fs::read(&b).unwrap());
    assert_eq!(ra.total as u64, unavoid_core::theory::conjecture_region_count(3, 30));
    assert_eq!(ra.unknown, 0);
}

#[test]
fn resume_after_interruption_is_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let full = dir.path().join("full.tsv");
    let cut = dir.path().join("cut.tsv");
    let report = run_sweep(&config(&full, 35, 2, false)).unwrap();
    let bytes = fs::read(&full).unwrap();
    for at in [bytes.len() / 3, bytes.len() / 2 + 7, bytes.len() - 1] {
        fs::write(&cut, &bytes[..at]).unwrap();
        let resumed = run_sweep(&config(&cut, 35, 3, true)).unwrap();
        assert_eq!(fs::read(&cut).unwrap(), bytes, "cut at {at}");
        assert_eq!(resumed, report);
    }
    let again = run_sweep(&config(&cut, 35, 1, true)).unwrap();
    assert_eq!(again, report);
    assert_eq!(fs::read(&cut).unwrap(), bytes);
}

#[test]
fn resume_refuses_a_different_range() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("r.tsv");
    run_sweep(&config(&out, 12, 1, false)).unwrap();
    assert!(matches!(run_sweep(&config(&out, 13, 1, true)), Err(SweepError::HeaderMismatch { .. })));
}

#[test]
fn summarize_recounts_and_detects_tampering() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("s.tsv");
    let report = run_sweep(&config(&out, 25, 2, false)).unwrap();
    let summary = summarize(&out, 1.0, 0).unwrap();
    assert_eq!(summary.total, report.total);
    assert_eq!(summary.uncovered, report.uncovered);
    assert_eq!(summary.verified, report.total);

    let text = fs::read_to_string(&out).unwrap();
    let mut lines: Vec<String> = text.lines().map(String::from).collect();
    let victim = lines.len() / 2;
    let fields: Vec<&str> = lines[victim].split('\t').collect();
    let flipped: String = fields[5].chars().map(|c| if c == 'a' { 'b' } else { c }).collect();
    lines[victim] = lines[victim].replacen(&format!("\t{}\t", fields[5]), &format!("\t{flipped}\t"), 1);
    fs::write(&out, lines.join("\n") + "\n").unwrap();
    match summarize(&out, 1.0, 0) {
        Err(SweepError::Corrupt { line, .. }) => assert_eq!(line, victim + 1),
        other => panic!("expected a checksum failure, got {other:?}"),
    }
}
