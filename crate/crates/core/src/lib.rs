//! # uplap
//!
//! Up-persistent Laplacian spectra of filtered simplicial complexes, with
//! certified one-simplex insertions.
//!
//! The crate builds Vietoris–Rips filtrations from point clouds, assembles
//! signed boundary matrices, forms the up-Laplacian `Δ_k = B_{k+1} B_{k+1}ᵀ`
//! on the full k-chain space, and certifies every single-simplex insertion
//! against spectral drift bounds. Inserting a `(k+1)`-simplex σ appends one
//! column `u = ∂σ` to `B_{k+1}`, so the updated Laplacian is the rank-one
//! update `Δ_k' = Δ_k + uuᵀ`. Each insertion yields a [`DriftCertificate`]
//! recording the per-index eigenvalue drift `δ_j` together with verdicts
//! for three bounds:
//!
//! | check | statement |
//! |-------|-----------|
//! | interlacing | `λ_j(old) - tol ≤ λ_j(new) ≤ λ_{j+1}(old) + tol` |
//! | rank-one Weyl | `max_j δ_j ≤ ‖∂σ‖₂² + tol` |
//! | Lipschitz | `max_j δ_j ≤ 2‖∂σ‖₂ + tol` |
//!
//! Both headline bounds are always reported side by side; neither is trusted
//! silently. A stricter two-sided estimate (drift ≤ `2‖u‖₂` plus a trailing
//! eigenvalue ≤ `‖u‖₂`) is checked separately by [`check_two_sided`]; where
//! its trailing clause fails, the harness records a finding instead of
//! suppressing it.
//!
//! ## Quick start
//!
//! ```
//! use uplap::{certify_insertion, Simplex, SimplicialComplex};
//!
//! // Five points, five edges, the first three of which bound a triangle.
//! let mut c = SimplicialComplex::new();
//! for v in 0..5 {
//!     c = c.insert_simplex(&Simplex::vertex(v)).unwrap();
//! }
//! for e in [[0, 1], [0, 2], [1, 2], [2, 3], [3, 4]] {
//!     c = c.insert_simplex(&Simplex::new(e.to_vec()).unwrap()).unwrap();
//! }
//!
//! let triangle = Simplex::new(vec![0, 1, 2]).unwrap();
//! let cert = certify_insertion(&c, 1, &triangle, 1e-9).unwrap();
//! assert!(cert.lipschitz_ok && cert.interlacing_ok && cert.weyl_ok);
//! assert!((cert.max_ratio - 3f64.sqrt() / 2.0).abs() < 1e-9);
//! ```
//!
//! See the `examples/` directory for one runnable example per capability
//! (filtration construction, Laplacian assembly, certification, the two
//! reference experiments, the randomized campaign, and SVG plot emission).

pub mod boundary;
pub mod complex;
pub mod harness;
pub mod perturbation;
pub mod plot;
pub mod spectra;

use thiserror::Error;

pub use boundary::{boundary_chain, boundary_matrix, BoundaryMatrix, Chain};
pub use complex::{
    vietoris_rips, Filtration, PointCloud, SimplicialComplex, Simplex, VertexId,
};
pub use harness::{
    pentagon_example, property_campaign, run_rips_insertion_experiment, sharpness_example,
    CampaignSummary, ExperimentConfig, ExperimentReport, ScatterPoint, SplitMix64,
};
pub use perturbation::{
    certificate_from_spectra, certify_insertion, check_interlacing, check_lipschitz,
    check_two_sided, check_weyl, decompose_insertion, drift, two_sided_for_insertion,
    DriftCertificate, InsertionDecomposition, InterlacingCheck, TwoSidedCheck,
};
pub use spectra::{eigenvalues, numerical_rank, up_laplacian, Spectrum, SymMatrix};

/// Default relative tolerance used by the CLI and the reference experiments.
///
/// Matrices here are small and integer-entried, so double precision leaves
/// ample headroom at 1e-9.
pub const DEFAULT_TOL: f64 = 1e-9;

/// Environment variable overriding the CLI's default tolerance.
/// Holds a decimal float, e.g. `UPLAP_TOL=1e-7`.
pub const TOL_ENV_VAR: &str = "UPLAP_TOL";

/// Tolerances must be positive finite reals (NaN fails this too).
pub(crate) fn tol_is_valid(tol: f64) -> bool {
    tol.is_finite() && tol > 0.0
}


/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid simplex: {0}")]
    InvalidSimplex(String),

    #[error("missing face {face} of simplex {simplex}")]
    MissingFace { simplex: Simplex, face: Simplex },

    #[error("simplex {0} is already present")]
    DuplicateSimplex(Simplex),

    #[error("a vertex has no boundary faces")]
    EmptyBoundary,

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("chain index {index} out of range for {rows} rows")]
    IndexOutOfRange { index: usize, rows: usize },

    #[error("chain has two entries at index {0}")]
    DuplicateChainIndex(usize),

    #[error("point cloud is empty")]
    EmptyInput,

    #[error("invalid point cloud: {0}")]
    InvalidPointCloud(String),

    #[error("invalid filtration: {0}")]
    InvalidFiltration(String),

    #[error("matrix contains non-finite entries")]
    InvalidMatrix,

    #[error("tolerance must be positive, got {0}")]
    InvalidTolerance(f64),

    #[error("eigensolver did not converge (off-diagonal norm {0:.3e})")]
    NoConvergence(f64),

    #[error("spectrum shrank from {from} to {to} entries; insertions never shrink a spectrum")]
    ShrinkingSpectrum { from: usize, to: usize },

    #[error("spectrum lengths {base} and {updated} differ by more than one entry")]
    LengthMismatch { base: usize, updated: usize },

    #[error("need {needed} simplices of dimension {dim}, found only {found}")]
    InsufficientSimplices {
        dim: usize,
        needed: usize,
        found: usize,
    },

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
