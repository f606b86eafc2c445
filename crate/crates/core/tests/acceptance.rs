//! Acceptance criteria 1 to 10, one line each. Runs without the libtest harness
//! so the lines always reach the terminal.

use std::process::ExitCode;

use slice_burnside::verify::{run_one, VerifyOptions};

fn main() -> ExitCode {
    let opts = VerifyOptions::default();
    let only: Option<usize> = std::env::args().skip(1).find_map(|a| a.parse().ok());
    let mut ok = true;
    for id in 1..=10 {
        if only.is_some_and(|k| k != id) {
            continue;
        }
        let r = run_one(id, &opts).expect("criterion id in range");
        let within = r.within_budget();
        println!("{}{}", r.line(), if within { "" } else { " OVER BUDGET" });
        for f in &r.failures {
            println!("    failure: {f}");
        }
        for n in &r.notes {
            println!("    note: {n}");
        }
        ok &= r.passed && within;
    }
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
