//! Runs every verification suite and prints a JSON report per suite.
//!
//! ```text
//! cargo run --release --example verify -- 5
//! ```

use sp2n::harness::{run_suite, Limits, SUITES};

fn main() {
    let max_n: Option<usize> = std::env::args().nth(1).and_then(|s| s.parse().ok());
    let limits = Limits::default();
    let mut ok = true;
    for &(name, _) in SUITES {
        let report = run_suite(name, max_n, &limits).expect("listed suite");
        ok &= report.pass;
        println!("{}", report.to_json());
        for note in &report.notes {
            eprintln!("{name}: {note}");
        }
    }
    std::process::exit(if ok { 0 } else { 1 });
}
