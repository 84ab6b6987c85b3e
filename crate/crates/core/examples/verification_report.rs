//! Run a verification suite from code and inspect the report.
//!
//! ```text
//! cargo run --release --example verification_report -- padic
//! ```

use eulerzeta::cli::{coverage, run_suite, Suite, VerifyConfig};

fn main() {
    let suite: Suite = std::env::args().nth(1).unwrap_or_else(|| "exact".into()).parse().unwrap();
    let config = VerifyConfig { max_index: 16, depth: 3, ..VerifyConfig::default() };
    let report = run_suite(suite, &config).unwrap();

    for case in report.cases.iter().take(8) {
        println!("{:<48} {:<6} {}", case.id, case.pass, case.residual);
    }
    println!("...");
    println!(
        "{}: {} cases, {} failed, {} operations exercised",
        report.suite,
        report.summary.total,
        report.summary.failed,
        coverage(&report).len()
    );
    for d in &report.diagnostics {
        println!("diagnostic {}: {}", d.id, d.note);
    }
}
