//! Build a Vietoris-Rips filtration from a point cloud and print its events.
//!
//! Run with: cargo run --example rips_filtration

use uplap::{vietoris_rips, PointCloud};

fn main() {
    // four points: a unit square
    let cloud = PointCloud::new(vec![
        vec![0.0, 0.0],
        vec![1.0, 0.0],
        vec![1.0, 1.0],
        vec![0.0, 1.0],
    ])
    .unwrap();

    let filtration = vietoris_rips(&cloud, 1.5, 2).unwrap();
    println!("value     dim  simplex");
    for (value, simplex) in filtration.events() {
        println!("{value:<9.6} {:<4} {simplex}", simplex.dim());
    }

    // edges enter at side length 1, diagonals at sqrt(2), and triangles at
    // their largest edge
    let at_one = filtration.complex_at(1.0);
    println!(
        "\nat r = 1.0: {} vertices, {} edges, {} triangles",
        at_one.simplex_count(0),
        at_one.simplex_count(1),
        at_one.simplex_count(2),
    );
    let full = filtration.full_complex();
    println!(
        "at r = 1.5: {} vertices, {} edges, {} triangles",
        full.simplex_count(0),
        full.simplex_count(1),
        full.simplex_count(2),
    );
}
