//! The twelve acceptance criteria, each reported on one line.
//!
//! Criteria 1-11 run through the library with seed 7. Criterion 12 runs the
//! binary twice and compares the bytes. This target has its own `main`, so
//! the lines print without `--nocapture` and a failure exits nonzero.

use std::process::Command;
use std::time::Instant;

use mixedmult_core::suite::{run_criterion, SuiteOptions, CRITERIA};

const SEED: u64 = 7;

fn suite_bytes() -> Vec<u8> {
    let out = Command::new(env!("CARGO_BIN_EXE_mixedmult"))
        .args(["suite", "--seed", &SEED.to_string()])
        .output()
        .expect("binary runs");
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    out.stdout
}

fn main() {
    let opts = SuiteOptions::new(SEED);
    let mut failed = Vec::new();
    for (id, title) in CRITERIA {
        let start = Instant::now();
        let report = run_criterion(id, &opts);
        let secs = start.elapsed().as_secs_f64();
        let mark = if report.pass() { "PASS" } else { "FAIL" };
        println!("criterion {id:>2} {mark} {title} ({} checks, {secs:.1}s)", report.checks.len());
        for f in report.failures() {
            println!("    {} on {}: {}", f.anchor, f.instance, f.detail);
        }
        if !report.pass() {
            failed.push(id);
        }
    }
    let start = Instant::now();
    let (a, b) = (suite_bytes(), suite_bytes());
    let same = a == b;
    println!(
        "criterion 12 {} suite --seed {SEED} twice gives byte-identical reports ({} bytes, {:.1}s)",
        if same { "PASS" } else { "FAIL" },
        a.len(),
        start.elapsed().as_secs_f64()
    );
    if !same {
        failed.push(12);
    }
    if !failed.is_empty() {
        eprintln!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
}
