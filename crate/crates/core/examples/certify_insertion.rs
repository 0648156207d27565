//! Certify a single simplex insertion: decompose it into a rank-one update,
//! compare spectra, and print the bound verdicts.
//!
//! Run with: cargo run --example certify_insertion

use uplap::{
    certify_insertion, decompose_insertion, Simplex, SimplicialComplex,
};

fn main() {
    // an octahedron boundary minus one face
    let mut complex = SimplicialComplex::new();
    for v in 0..6 {
        complex = complex.insert_simplex(&Simplex::vertex(v)).unwrap();
    }
    let edges = [
        [0, 2], [0, 3], [0, 4], [0, 5],
        [1, 2], [1, 3], [1, 4], [1, 5],
        [2, 4], [2, 5], [3, 4], [3, 5],
    ];
    for e in edges {
        complex = complex.insert_simplex(&Simplex::new(e.to_vec()).unwrap()).unwrap();
    }
    let faces = [
        [0, 2, 4], [0, 2, 5], [0, 3, 4], [0, 3, 5],
        [1, 2, 4], [1, 2, 5], [1, 3, 4],
    ];
    for t in faces {
        complex = complex.insert_simplex(&Simplex::new(t.to_vec()).unwrap()).unwrap();
    }

    // the missing face closes the sphere
    let missing = Simplex::new(vec![1, 3, 5]).unwrap();
    let decomposition = decompose_insertion(&complex, 1, &missing, 1e-9).unwrap();
    println!(
        "inserting {missing}: ‖∂σ‖ = {:.6}, dimension jump: {}",
        decomposition.spike_norm, decomposition.dimension_jump,
    );

    let cert = certify_insertion(&complex, 1, &missing, 1e-9).unwrap();
    println!("{cert}");
    println!(
        "\nverdict: {}",
        if cert.all_ok() { "all bounds hold" } else { "a bound failed" }
    );
}
