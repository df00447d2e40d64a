//! One PASS/FAIL line per acceptance criterion. Exits nonzero on any failure outside the
//! documented list of discrepancies with published values.

use std::process::ExitCode;
use std::time::Instant;

use klmov_core::verify::{is_known_discrepancy, run, CRITERIA};

const SEED: u64 = 42;

fn main() -> ExitCode {
    let start = Instant::now();
    let mut failed = 0;
    let mut unexpected = 0;
    for &(id, _, _) in CRITERIA {
        let t = Instant::now();
        let report = match run(id, SEED) {
            Ok(r) => r,
            Err(e) => {
                println!("FAIL {id:>2} could not run: {e}");
                failed += 1;
                continue;
            }
        };
        let verdict = if report.passed() { "PASS" } else { "FAIL" };
        let n = report.checks.len();
        let bad = report.failures().count();
        println!(
            "{verdict} {id:>2} {}: {} ({}/{n} checks, {:.1}s)",
            report.key,
            report.title,
            n - bad,
            t.elapsed().as_secs_f64()
        );
        for c in report.failures() {
            let known = if is_known_discrepancy(&c.name) { " [known discrepancy]" } else { "" };
            println!("       - {}{known}{}", c.name, c.detail.as_deref().map(|d| format!(": {d}")).unwrap_or_default());
        }
        failed += (!report.passed()) as usize;
        unexpected += report.unexpected_failures().count();
    }
    println!(
        "{} of {} criteria passed in {:.1}s",
        CRITERIA.len() - failed,
        CRITERIA.len(),
        start.elapsed().as_secs_f64()
    );
    // Known discrepancies with published values stay FAIL above but do not fail the target.
    if unexpected == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
