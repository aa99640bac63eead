//! A seeded battery of random pairs through every oracle check.

use quiver_moduli::p1::InstanceLimits;
use quiver_moduli::report::{oracle_random_report, Report};

pub fn run_example() -> quiver_moduli::Result<()> {
    let report = oracle_random_report(0, 25, InstanceLimits::default())?;
    for line in report.render().lines().take(3) {
        println!("{line}");
    }
    println!("...");
    println!("{}/{} instances pass", report.passed, report.total);
    assert!(report.passed());
    Ok(())
}

#[allow(dead_code)]
fn main() -> quiver_moduli::Result<()> {
    run_example()
}
