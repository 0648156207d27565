//! The canonical seeded experiment: 20 random points in the unit square,
//! Vietoris-Rips up to radius 1.5, the first 50 two-simplices revealed one at
//! a time with the k = 1 up-Laplacian fully recertified after each insertion.
//!
//! Run with: cargo run --release --example rips_experiment

use std::fs;

use uplap::{run_rips_insertion_experiment, ExperimentConfig};

fn main() {
    let cfg = ExperimentConfig::default();
    println!(
        "seed {}, {} points, radius {}, {} insertions at k = {}",
        cfg.seed, cfg.n_points, cfg.max_radius, cfg.n_insertions, cfg.k
    );

    let report = run_rips_insertion_experiment(&cfg).unwrap();
    let mut summary = Vec::new();
    report.write_summary(&mut summary).unwrap();
    print!("{}", String::from_utf8_lossy(&summary));

    let dir = std::path::Path::new("uplap-report");
    fs::create_dir_all(dir).unwrap();
    let mut certs = Vec::new();
    report.write_certificates_csv(&mut certs).unwrap();
    fs::write(dir.join("certificates.csv"), certs).unwrap();
    let mut scatter = Vec::new();
    report.write_scatter_csv(&mut scatter).unwrap();
    fs::write(dir.join("scatter.csv"), scatter).unwrap();
    println!("\ncertificates.csv and scatter.csv written to {}/", dir.display());
}
