//! Exit criteria. Runs without the libtest harness so every criterion prints
//! its PASS/FAIL line; exits nonzero if any fails.

use std::process::ExitCode;
use std::time::Duration;

use braidlift::suite::{run_all, DEFAULT_SEED};

fn main() -> ExitCode {
    let results = run_all(DEFAULT_SEED);
    for r in &results {
        println!("{r}");
    }
    let within_budget =
        results.iter().find(|r| r.id == 1).is_some_and(|r| r.elapsed < Duration::from_secs(120));
    if !within_budget {
        println!("[FAIL] oracle/fast equivalence exceeded 120 s");
    }
    let failed = results.iter().filter(|r| !r.passed).count();
    println!("acceptance: {} passed, {failed} failed", results.len() - failed);
    if failed == 0 && within_budget {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
