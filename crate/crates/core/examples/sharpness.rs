//! The duplicate-edge sharpness witness: spectra move {0,2} -> {0,4}, an
//! exact eigenvalue shift of 2 that saturates the Weyl bound ‖u‖² = 2.
//!
//! Run with: cargo run --example sharpness

use uplap::sharpness_example;

fn main() {
    let report = sharpness_example();
    let (before, after) = &report.spectra[0];
    println!("before duplication : {:?}", before.values());
    println!("after duplication  : {:?}", after.values());
    println!("per-index shift    : {:?}", report.certificates[0].deltas);
    println!();
    println!("{}", report.certificates[0]);
}
