//! Signed incidence (boundary) matrices and boundary chains.
//!
//! Columns are the unit of insertion: adding a `(k+1)`-simplex appends one
//! column to `B_{k+1}` and leaves every existing column untouched. Matrices
//! are stored column-major sparse and are immutable after construction;
//! [`BoundaryMatrix::append_column`] returns a new value.

use std::io::Write;

use crate::complex::{Simplex, SimplicialComplex};
use crate::spectra::SymMatrix;
use crate::{Error, Result};

/// A sparse chain: real coefficients indexed by simplex position within one
/// dimension of a host complex.
#[derive(Clone, Debug, PartialEq)]
pub struct Chain {
    dim: usize,
    entries: Vec<(usize, f64)>,
}

impl Chain {
    /// Builds a chain of dimension `dim` from `(position, coefficient)` pairs.
    /// Positions must be distinct and coefficients finite.
    pub fn new(dim: usize, entries: Vec<(usize, f64)>) -> Result<Self> {
        if entries.iter().any(|(_, v)| !v.is_finite()) {
            return Err(Error::InvalidMatrix);
        }
        if let Some(index) = first_duplicate_index(&entries) {
            return Err(Error::DuplicateChainIndex(index));
        }
        Ok(Self { dim, entries })
    }

    pub fn zero(dim: usize) -> Self {
        Self { dim, entries: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entries(&self) -> &[(usize, f64)] {
        &self.entries
    }

    /// Euclidean (ℓ²) norm of the coefficient vector.
    ///
    /// For the boundary of an unweighted k-simplex this is exactly `√(k+1)`.
    pub fn norm(&self) -> f64 {
        self.entries
            .iter()
            .map(|(_, v)| v * v)
            .sum::<f64>()
            .sqrt()
    }

    /// Densifies into a column of length `len`.
    pub fn to_dense(&self, len: usize) -> Result<Vec<f64>> {
        let mut col = vec![0.0; len];
        for &(i, v) in &self.entries {
            if i >= len {
                return Err(Error::IndexOutOfRange { index: i, rows: len });
            }
            col[i] = v;
        }
        Ok(col)
    }
}

fn first_duplicate_index(entries: &[(usize, f64)]) -> Option<usize> {
    let mut seen = std::collections::HashSet::new();
    entries.iter().find(|(i, _)| !seen.insert(*i)).map(|(i, _)| *i)
}

/// Boundary chain of `s` relative to `c`: coefficient `(-1)^i` at the
/// position of the i-th face.
///
/// `s` itself need not belong to `c`, but all of its faces must.
pub fn boundary_chain(c: &SimplicialComplex, s: &Simplex) -> Result<Chain> {
    let faces = s.faces()?;
    let mut entries = Vec::with_capacity(faces.len());
    for (face, sign) in faces {
        let (_, pos) = c.position(&face).ok_or_else(|| Error::MissingFace {
            simplex: s.clone(),
            face: face.clone(),
        })?;
        entries.push((pos, f64::from(sign)));
    }
    Chain::new(s.dim() - 1, entries)
}

/// The signed incidence matrix `B_q` of a complex, with one column per
/// q-simplex in registry order.
///
/// Incidence entries are the exact signs ±1 (stored in `f64`, where small
/// integers are exact); appended columns may hold arbitrary real values so the
/// same machinery covers both genuine simplex insertion and raw spike
/// injection.
#[derive(Clone, Debug, PartialEq)]
pub struct BoundaryMatrix {
    rows: usize,
    row_dim: usize,
    columns: Vec<Vec<(usize, f64)>>,
}

/// Builds `B_q` for `q ≥ 1`; shape `n_{q-1} × n_q`, empty dimensions give
/// empty matrices.
///
/// # Panics
/// If `q == 0`: vertices have no boundary in this artifact.
pub fn boundary_matrix(c: &SimplicialComplex, q: usize) -> BoundaryMatrix {
    assert!(q >= 1, "boundary_matrix requires q >= 1");
    let rows = c.simplex_count(q - 1);
    let columns = c
        .simplices(q)
        .iter()
        .map(|s| {
            boundary_chain(c, s)
                .expect("complexes are closed under faces")
                .entries()
                .to_vec()
        })
        .collect();
    BoundaryMatrix { rows, row_dim: q - 1, columns }
}

impl BoundaryMatrix {
    /// Assembles a matrix from raw sparse columns (mostly for tests and
    /// hand-built fixtures).
    pub fn from_columns(
        rows: usize,
        row_dim: usize,
        columns: Vec<Vec<(usize, f64)>>,
    ) -> Result<Self> {
        for col in &columns {
            for &(i, v) in col {
                if i >= rows {
                    return Err(Error::IndexOutOfRange { index: i, rows });
                }
                if !v.is_finite() {
                    return Err(Error::InvalidMatrix);
                }
            }
            if let Some(index) = first_duplicate_index(col) {
                return Err(Error::DuplicateChainIndex(index));
            }
        }
        Ok(Self { rows, row_dim, columns })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.columns.len()
    }

    /// Dimension of the chain space indexing the rows (`q - 1` for `B_q`).
    pub fn row_dim(&self) -> usize {
        self.row_dim
    }

    pub fn column(&self, j: usize) -> &[(usize, f64)] {
        &self.columns[j]
    }

    pub fn column_dense(&self, j: usize) -> Vec<f64> {
        let mut col = vec![0.0; self.rows];
        for &(i, v) in &self.columns[j] {
            col[i] += v;
        }
        col
    }

    /// Returns `[B | ch]` with all prior columns unchanged.
    ///
    /// The chain must live in the row space: same dimension, indices within
    /// range.
    pub fn append_column(&self, ch: &Chain) -> Result<Self> {
        if ch.dim() != self.row_dim {
            return Err(Error::DimensionMismatch {
                expected: self.row_dim,
                found: ch.dim(),
            });
        }
        for &(i, _) in ch.entries() {
            if i >= self.rows {
                return Err(Error::IndexOutOfRange { index: i, rows: self.rows });
            }
        }
        let mut next = self.clone();
        next.columns.push(ch.entries().to_vec());
        Ok(next)
    }

    /// The Gram matrix `B Bᵀ` of shape `rows × rows`, accumulated column by
    /// column — exactly the up-Laplacian when `B = B_{k+1}`.
    pub fn gram(&self) -> SymMatrix {
        let mut m = SymMatrix::zeros(self.rows);
        for col in &self.columns {
            for (a, &(i, vi)) in col.iter().enumerate() {
                for &(j, vj) in &col[a..] {
                    if i <= j {
                        m.add(i, j, vi * vj);
                    } else {
                        m.add(j, i, vj * vi);
                    }
                }
            }
        }
        m
    }

    /// Dense product `self · next`, used to verify `B_{q-1} B_q = 0`.
    ///
    /// `next`'s rows must be indexed by `self`'s columns.
    pub fn compose(&self, next: &BoundaryMatrix) -> Result<Vec<Vec<f64>>> {
        if next.rows != self.cols() {
            return Err(Error::DimensionMismatch {
                expected: self.cols(),
                found: next.rows,
            });
        }
        let mut out = vec![vec![0.0; next.cols()]; self.rows];
        for (j, col) in next.columns.iter().enumerate() {
            for &(r, v) in col {
                for &(i, w) in &self.columns[r] {
                    out[i][j] += w * v;
                }
            }
        }
        Ok(out)
    }

    /// Writes coordinate triplets `row,col,value`, one nonzero per line.
    pub fn write_coord_csv<W: Write>(&self, mut w: W) -> Result<()> {
        writeln!(w, "row,col,value")?;
        for (j, col) in self.columns.iter().enumerate() {
            for &(i, v) in col {
                writeln!(w, "{i},{j},{v}")?;
            }
        }
        Ok(())
    }
}
