//! The minimal two-dimensional insertion: five points, five edges, one
//! filling triangle. The k = 1 spectrum jumps from all zeros to {0,0,0,0,3},
//! and the over-strict two-sided trailing clause fails (3 > √3) — recorded
//! as a finding, not an error.
//!
//! Run with: cargo run --example pentagon

use uplap::pentagon_example;

fn main() {
    let report = pentagon_example();
    let (before, after) = &report.spectra[0];
    println!("k = 1 spectrum before: {:?}", before.values());
    println!("k = 1 spectrum after : {:?}", after.values());
    println!();
    println!("{}", report.certificates[0]);
    println!();
    for finding in &report.findings {
        println!("finding: {finding}");
    }
    println!(
        "certificates gate on interlacing/weyl/lipschitz only: {}",
        if report.all_passed() { "PASS" } else { "FAIL" }
    );
}
