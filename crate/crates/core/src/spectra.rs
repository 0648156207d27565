//! Up-persistent Laplacians and symmetric spectra.
//!
//! The up-Laplacian is computed on the full k-chain space, `Δ_k = B_{k+1}
//! B_{k+1}ᵀ`, which is what makes before/after spectra directly comparable
//! after zero-padding. Callers who want the restricted (nonzero) spectrum can
//! recover it through [`numerical_rank`]. All operations are pure functions of
//! immutable inputs; independent eigendecompositions may run in parallel with
//! identical results.

use std::io::Write;

use crate::boundary::boundary_matrix;
use crate::complex::SimplicialComplex;
use crate::{Error, Result};

/// A dense symmetric real matrix. Symmetry is exact by construction: every
/// write lands on both mirrored entries.
#[derive(Clone, Debug, PartialEq)]
pub struct SymMatrix {
    n: usize,
    data: Vec<f64>,
}

impl SymMatrix {
    pub fn zeros(n: usize) -> Self {
        Self { n, data: vec![0.0; n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.set(i, i, 1.0);
        }
        m
    }

    /// Builds from a function of `(row, col)`; only the lower triangle is
    /// consulted and the upper triangle is mirrored.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            for j in 0..=i {
                m.set(i, j, f(i, j));
            }
        }
        m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        self.data[i * self.n + j] = v;
        self.data[j * self.n + i] = v;
    }

    pub fn add(&mut self, i: usize, j: usize, dv: f64) {
        self.data[i * self.n + j] += dv;
        if i != j {
            self.data[j * self.n + i] += dv;
        }
    }

    /// Adds the rank-one term `uuᵀ`.
    pub fn add_outer(&mut self, u: &[f64]) {
        assert_eq!(u.len(), self.n, "outer-product length must match");
        for i in 0..self.n {
            for j in 0..=i {
                self.add(i, j, u[i] * u[j]);
            }
        }
    }

    /// The block matrix `diag(self, 0)`, one row and column larger.
    pub fn embed_with_zero(&self) -> SymMatrix {
        let mut m = SymMatrix::zeros(self.n + 1);
        for i in 0..self.n {
            for j in 0..=i {
                m.set(i, j, self.get(i, j));
            }
        }
        m
    }

    pub fn trace(&self) -> f64 {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|v| v * v).sum::<f64>().sqrt()
    }

    pub fn is_finite(&self) -> bool {
        self.data.iter().all(|v| v.is_finite())
    }

    /// Largest absolute entrywise difference to another matrix of equal size.
    pub fn max_abs_diff(&self, other: &SymMatrix) -> f64 {
        assert_eq!(self.n, other.n, "matrix sizes must match");
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }

    /// Writes dense rows of comma-separated values.
    pub fn write_csv<W: Write>(&self, mut w: W) -> Result<()> {
        for i in 0..self.n {
            for j in 0..self.n {
                if j > 0 {
                    write!(w, ",")?;
                }
                write!(w, "{}", self.get(i, j))?;
            }
            writeln!(w)?;
        }
        Ok(())
    }
}

/// A nondecreasing eigenvalue list together with the resolution tolerance it
/// was computed at.
#[derive(Clone, Debug, PartialEq)]
pub struct Spectrum {
    values: Vec<f64>,
    tol: f64,
}

impl Spectrum {
    /// Sorts `values` ascending and records `tol`.
    pub fn new(mut values: Vec<f64>, tol: f64) -> Result<Self> {
        if values.iter().any(|v| !v.is_finite()) {
            return Err(Error::InvalidMatrix);
        }
        if !crate::tol_is_valid(tol) {
            return Err(Error::InvalidTolerance(tol));
        }
        values.sort_by(f64::total_cmp);
        Ok(Self { values, tol })
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn tol(&self) -> f64 {
        self.tol
    }

    pub fn min(&self) -> Option<f64> {
        self.values.first().copied()
    }

    pub fn max(&self) -> Option<f64> {
        self.values.last().copied()
    }

    /// Merges `count` zeros into the sorted list; length grows by `count`.
    pub fn pad_with_zeros(&self, count: usize) -> Spectrum {
        let mut values = self.values.clone();
        values.extend(std::iter::repeat_n(0.0, count));
        values.sort_by(f64::total_cmp);
        Spectrum { values, tol: self.tol }
    }

    /// Writes `index,value` rows with a header.
    pub fn write_csv<W: Write>(&self, mut w: W) -> Result<()> {
        writeln!(w, "index,value")?;
        for (i, v) in self.values.iter().enumerate() {
            writeln!(w, "{i},{v}")?;
        }
        Ok(())
    }
}

/// The up-persistent Laplacian `Δ_k = B_{k+1} B_{k+1}ᵀ` on the full k-chain
/// space: a positive semidefinite `n_k × n_k` Gram matrix. With no
/// `(k+1)`-simplices it is the zero matrix.
pub fn up_laplacian(c: &SimplicialComplex, k: usize) -> SymMatrix {
    boundary_matrix(c, k + 1).gram()
}

/// All eigenvalues of a symmetric matrix, sorted nondecreasing, via cyclic
/// Jacobi rotations.
///
/// Every eigenpair the sweep produces internally satisfies
/// `‖Mv − λv‖₂ ≤ tol · max(1, ‖M‖₂)`; the off-diagonal Frobenius norm at
/// termination bounds all residuals at once. Jacobi is quadratically
/// convergent and essentially foolproof at the dense desk scale this crate
/// targets.
pub fn eigenvalues(m: &SymMatrix, tol: f64) -> Result<Spectrum> {
    let (values, _) = jacobi(m, tol, false)?;
    Spectrum::new(values, tol)
}

/// Eigenvalues and an orthonormal eigenvector per column, same contract as
/// [`eigenvalues`]. Roughly half again as expensive, so the spectrum-only path
/// skips the accumulation.
pub fn eigen_decomposition(m: &SymMatrix, tol: f64) -> Result<(Spectrum, Vec<Vec<f64>>)> {
    let (values, vectors) = jacobi(m, tol, true)?;
    Ok((
        Spectrum::new(values, tol)?,
        vectors.expect("vectors were requested"),
    ))
}

/// Count of eigenvalues above `tol · max(1, λ_max)`.
///
/// For an up-Laplacian this equals `dim im B_{k+1}`, the dimension of the
/// restricted operator's space.
pub fn numerical_rank(m: &SymMatrix, tol: f64) -> Result<usize> {
    let spec = eigenvalues(m, tol)?;
    let largest = spec.max().unwrap_or(0.0);
    let threshold = tol * largest.max(1.0);
    Ok(spec.values().iter().filter(|&&v| v > threshold).count())
}

const MAX_SWEEPS: usize = 64;

/// Sorted eigenvalues plus, when requested, one orthonormal column per value.
type EigenPairs = (Vec<f64>, Option<Vec<Vec<f64>>>);

fn off_diagonal_norm(a: &[f64], n: usize) -> f64 {
    let mut sum = 0.0;
    for i in 0..n {
        for j in (i + 1)..n {
            let v = a[i * n + j];
            sum += v * v;
        }
    }
    sum.sqrt()
}

fn jacobi(m: &SymMatrix, tol: f64, want_vectors: bool) -> Result<EigenPairs> {
    if !m.is_finite() {
        return Err(Error::InvalidMatrix);
    }
    if !crate::tol_is_valid(tol) {
        return Err(Error::InvalidTolerance(tol));
    }
    let n = m.n;
    if n == 0 {
        return Ok((Vec::new(), want_vectors.then(Vec::new)));
    }

    let mut a = m.data.clone();
    let mut v = if want_vectors {
        let mut id = vec![0.0; n * n];
        for i in 0..n {
            id[i * n + i] = 1.0;
        }
        Some(id)
    } else {
        None
    };

    // ‖M‖_F / √n is a lower bound for ‖M‖₂, so stopping once the off-diagonal
    // Frobenius norm drops below tol · max(1, ‖M‖_F/√n) meets the residual
    // contract: ‖Mv_j − λ_j v_j‖₂ ≤ off(A_final) for every column j.
    let scale = (m.frobenius_norm() / (n as f64).sqrt()).max(1.0);
    let threshold = tol * scale;

    let mut off = off_diagonal_norm(&a, n);
    let mut sweeps = 0;
    while off > threshold {
        if sweeps >= MAX_SWEEPS {
            return Err(Error::NoConvergence(off));
        }
        for p in 0..(n - 1) {
            for q in (p + 1)..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let app = a[p * n + p];
                let aqq = a[q * n + q];
                let theta = (aqq - app) / (2.0 * apq);
                let t = if theta >= 0.0 {
                    1.0 / (theta + (1.0 + theta * theta).sqrt())
                } else {
                    -1.0 / (-theta + (1.0 + theta * theta).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                let tau = s / (1.0 + c);

                for i in 0..n {
                    if i == p || i == q {
                        continue;
                    }
                    let aip = a[i * n + p];
                    let aiq = a[i * n + q];
                    let new_ip = aip - s * (aiq + tau * aip);
                    let new_iq = aiq + s * (aip - tau * aiq);
                    a[i * n + p] = new_ip;
                    a[p * n + i] = new_ip;
                    a[i * n + q] = new_iq;
                    a[q * n + i] = new_iq;
                }
                a[p * n + p] = app - t * apq;
                a[q * n + q] = aqq + t * apq;
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;

                if let Some(vecs) = v.as_mut() {
                    for i in 0..n {
                        let vip = vecs[i * n + p];
                        let viq = vecs[i * n + q];
                        vecs[i * n + p] = vip - s * (viq + tau * vip);
                        vecs[i * n + q] = viq + s * (vip - tau * viq);
                    }
                }
            }
        }
        sweeps += 1;
        off = off_diagonal_norm(&a, n);
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[i * n + i].total_cmp(&a[j * n + j]));
    let values: Vec<f64> = order.iter().map(|&i| a[i * n + i]).collect();
    let vectors = v.map(|vecs| {
        order
            .iter()
            .map(|&col| (0..n).map(|row| vecs[row * n + col]).collect())
            .collect()
    });
    Ok((values, vectors))
}
