//! Render the drift scatter of a small experiment as a self-contained SVG
//! with the dashed y = 2x bound line.
//!
//! Run with: cargo run --example drift_plot

use uplap::plot::{scatter_svg, ScatterStyle};
use uplap::{run_rips_insertion_experiment, ExperimentConfig};

fn main() {
    let cfg = ExperimentConfig {
        n_points: 12,
        n_insertions: 15,
        ..Default::default()
    };
    let report = run_rips_insertion_experiment(&cfg).unwrap();
    let points: Vec<(f64, f64)> = report
        .scatter
        .iter()
        .map(|p| (p.spike_norm, p.delta))
        .collect();

    let svg = scatter_svg(&points, &ScatterStyle::default());
    std::fs::write("drift_scatter.svg", svg).unwrap();
    println!(
        "{} drift points plotted to drift_scatter.svg (max ratio {:.4})",
        points.len(),
        report.max_ratio
    );
}
