//! Randomized validation of the rank-one update machinery: 200 trials of
//! PSD-plus-spike matrices checked for reconstruction, monotone growth,
//! interlacing, and the Weyl bound.
//!
//! Run with: cargo run --example campaign

use uplap::property_campaign;

fn main() {
    let summary = property_campaign(200, 1, 6).unwrap();
    println!("{summary}");
}
