//! Assemble up-Laplacians of a complex and compute their spectra.
//!
//! Run with: cargo run --example laplacian_spectrum

use uplap::{eigenvalues, numerical_rank, up_laplacian, vietoris_rips, PointCloud};

fn main() {
    let cloud = PointCloud::new(vec![
        vec![0.0, 0.0],
        vec![1.0, 0.0],
        vec![0.5, 0.866],
        vec![1.5, 0.866],
    ])
    .unwrap();
    let complex = vietoris_rips(&cloud, 1.1, 2).unwrap().full_complex();

    for k in 0..=2usize {
        let laplacian = up_laplacian(&complex, k);
        let spectrum = eigenvalues(&laplacian, 1e-9).unwrap();
        let rank = numerical_rank(&laplacian, 1e-9).unwrap();
        println!(
            "k = {k}: {n}x{n} matrix, rank {rank}, spectrum {:?}",
            spectrum.values(),
            n = laplacian.n(),
        );
    }
}
