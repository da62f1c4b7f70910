//! Runs every transfer-law suite on seeded random instances and prints pass counts.

use conecalc::cli::suites::{run_suites, SuiteOptions};

fn main() {
    let count = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(20);
    let opts = SuiteOptions { count, ..Default::default() };
    for o in run_suites(&[], &opts).expect("suite selection") {
        println!("{:<26} {}/{}", o.suite, o.passed, o.total);
        for f in o.failures.iter().take(3) {
            println!("    #{}: {}", f.index, f.message);
        }
    }
}
