//! Finite simplicial complexes, filtrations, and Vietoris–Rips construction.
//!
//! Complexes and filtrations are immutable after construction;
//! [`SimplicialComplex::insert_simplex`] returns a new value, so both are
//! freely shareable across threads.

use std::collections::HashMap;
use std::fmt;
use std::io::Write;

use crate::{Error, Result};

/// Index of a vertex within a complex.
///
/// Ids are dense `0..n` when a complex is built from a point cloud; hand-built
/// complexes may use any labels, which the boundary machinery treats opaquely.
pub type VertexId = usize;

/// An oriented simplex: a strictly increasing list of vertex ids.
///
/// Ascending vertex order is the canonical orientation; boundary signs come
/// from the alternating-sum rule alone, so any consistent labelling yields the
/// same Laplacian spectrum.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Simplex {
    vertices: Vec<VertexId>,
}

impl Simplex {
    /// Builds a simplex from a strictly increasing, non-empty vertex list.
    pub fn new(vertices: Vec<VertexId>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::InvalidSimplex("vertex list is empty".into()));
        }
        if vertices.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidSimplex(format!(
                "vertices must be strictly increasing, got {vertices:?}"
            )));
        }
        Ok(Self { vertices })
    }

    /// The 0-simplex on a single vertex.
    pub fn vertex(v: VertexId) -> Self {
        Self { vertices: vec![v] }
    }

    /// Parses the dash-joined syntax used on the command line, e.g. `"0-1-2"`.
    pub fn parse(text: &str) -> Result<Self> {
        let vertices = text
            .split('-')
            .map(|part| {
                part.trim().parse::<VertexId>().map_err(|_| {
                    Error::InvalidSimplex(format!("bad vertex id {part:?} in {text:?}"))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(vertices)
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    /// Dimension `k`, one less than the number of vertices.
    pub fn dim(&self) -> usize {
        self.vertices.len() - 1
    }

    /// The `k+1` boundary faces with alternating signs.
    ///
    /// The i-th face deletes vertex i and carries sign `(-1)^i`; the returned
    /// order follows the deletion index. A vertex has no boundary faces and
    /// yields [`Error::EmptyBoundary`].
    pub fn faces(&self) -> Result<Vec<(Simplex, i32)>> {
        if self.dim() == 0 {
            return Err(Error::EmptyBoundary);
        }
        let faces = (0..self.vertices.len())
            .map(|i| {
                let mut vs = self.vertices.clone();
                vs.remove(i);
                let sign = if i % 2 == 0 { 1 } else { -1 };
                (Simplex { vertices: vs }, sign)
            })
            .collect();
        Ok(faces)
    }
}

impl fmt::Display for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.vertices.iter().enumerate() {
            if i > 0 {
                write!(f, "-")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// A finite simplicial complex: per-dimension ordered registries of simplices,
/// closed under taking faces.
///
/// Each simplex has a stable `(dim, position)` index; insertions append at the
/// end of a registry and never move pre-existing simplices, which is what
/// makes the rank-one update story work.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct SimplicialComplex {
    by_dim: Vec<Vec<Simplex>>,
    index: HashMap<Simplex, (usize, usize)>,
}

impl SimplicialComplex {
    pub fn new() -> Self {
        Self::default()
    }

    /// Returns a new complex with `s` appended to its dimension registry.
    ///
    /// Fails with [`Error::DuplicateSimplex`] if `s` is already present and
    /// with [`Error::MissingFace`] if any face of `s` is absent (closure
    /// violation). All pre-existing indices are unchanged.
    pub fn insert_simplex(&self, s: &Simplex) -> Result<Self> {
        let mut next = self.clone();
        next.insert_in_place(s.clone())?;
        Ok(next)
    }

    pub(crate) fn insert_in_place(&mut self, s: Simplex) -> Result<()> {
        if self.contains(&s) {
            return Err(Error::DuplicateSimplex(s));
        }
        if s.dim() > 0 {
            for (face, _) in s.faces()? {
                if !self.contains(&face) {
                    return Err(Error::MissingFace { simplex: s, face });
                }
            }
        }
        let dim = s.dim();
        while self.by_dim.len() <= dim {
            self.by_dim.push(Vec::new());
        }
        let pos = self.by_dim[dim].len();
        self.index.insert(s.clone(), (dim, pos));
        self.by_dim[dim].push(s);
        Ok(())
    }

    pub fn contains(&self, s: &Simplex) -> bool {
        self.index.contains_key(s)
    }

    /// The `(dim, position)` index of `s`, if present.
    pub fn position(&self, s: &Simplex) -> Option<(usize, usize)> {
        self.index.get(s).copied()
    }

    /// Number of simplices of dimension `dim` (`n_q`).
    pub fn simplex_count(&self, dim: usize) -> usize {
        self.by_dim.get(dim).map_or(0, Vec::len)
    }

    /// The ordered registry for one dimension; empty slice if none exist.
    pub fn simplices(&self, dim: usize) -> &[Simplex] {
        self.by_dim.get(dim).map_or(&[], Vec::as_slice)
    }

    /// Largest dimension with at least one simplex.
    pub fn max_dim(&self) -> Option<usize> {
        self.by_dim.iter().rposition(|reg| !reg.is_empty())
    }

    pub fn is_empty(&self) -> bool {
        self.index.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Simplex> {
        self.by_dim.iter().flatten()
    }
}

/// A filtration: an ordered list of `(value, simplex)` events with
/// nondecreasing values in which every simplex enters no earlier than all of
/// its faces.
#[derive(Clone, Debug, PartialEq)]
pub struct Filtration {
    events: Vec<(f64, Simplex)>,
}

impl Filtration {
    /// Validates and wraps an event list.
    ///
    /// Checks: finite nonnegative values, nondecreasing along the list, no
    /// duplicate simplices, and each event's faces appearing strictly earlier
    /// in the list (so every prefix is a complex).
    pub fn new(events: Vec<(f64, Simplex)>) -> Result<Self> {
        let mut seen: HashMap<Simplex, usize> = HashMap::with_capacity(events.len());
        let mut prev = 0.0_f64;
        for (i, (value, s)) in events.iter().enumerate() {
            if !value.is_finite() || *value < 0.0 {
                return Err(Error::InvalidFiltration(format!(
                    "event {i} ({s}) has value {value}, expected a finite nonnegative real"
                )));
            }
            if *value < prev {
                return Err(Error::InvalidFiltration(format!(
                    "values decrease at event {i} ({s}): {value} < {prev}"
                )));
            }
            prev = *value;
            if seen.contains_key(s) {
                return Err(Error::InvalidFiltration(format!(
                    "simplex {s} appears twice"
                )));
            }
            if s.dim() > 0 {
                for (face, _) in s.faces()? {
                    if !seen.contains_key(&face) {
                        return Err(Error::InvalidFiltration(format!(
                            "face {face} of {s} does not enter earlier"
                        )));
                    }
                }
            }
            seen.insert(s.clone(), i);
        }
        Ok(Self { events })
    }

    pub fn events(&self) -> &[(f64, Simplex)] {
        &self.events
    }

    pub fn len(&self) -> usize {
        self.events.len()
    }

    pub fn is_empty(&self) -> bool {
        self.events.is_empty()
    }

    /// Largest event value, if any.
    pub fn max_value(&self) -> Option<f64> {
        self.events.last().map(|(v, _)| *v)
    }

    /// The complex at scale `r`: exactly the events with value ≤ `r`, in
    /// event order.
    pub fn complex_at(&self, r: f64) -> SimplicialComplex {
        let mut c = SimplicialComplex::new();
        for (value, s) in &self.events {
            if *value > r {
                break;
            }
            c.insert_in_place(s.clone())
                .expect("validated filtration prefixes are complexes");
        }
        c
    }

    /// The complex containing every event.
    pub fn full_complex(&self) -> SimplicialComplex {
        self.complex_at(f64::INFINITY)
    }

    /// Writes the CSV schema `value,dim,vertices` with dash-joined vertices.
    pub fn write_csv<W: Write>(&self, mut w: W) -> Result<()> {
        for (value, s) in &self.events {
            writeln!(w, "{},{},{}", value, s.dim(), s)?;
        }
        Ok(())
    }

    /// Parses the CSV schema written by [`Filtration::write_csv`].
    ///
    /// Blank lines are ignored; errors carry 1-based line numbers.
    pub fn parse_csv(text: &str) -> Result<Self> {
        let mut events = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = lineno + 1;
            let row = raw.trim();
            if row.is_empty() {
                continue;
            }
            let fields: Vec<&str> = row.split(',').map(str::trim).collect();
            if fields.len() != 3 {
                return Err(Error::Parse {
                    line,
                    message: format!("expected 3 fields (value,dim,vertices), got {}", fields.len()),
                });
            }
            let value: f64 = fields[0]
                .parse()
                .ok()
                .filter(|v: &f64| v.is_finite() && *v >= 0.0)
                .ok_or_else(|| Error::Parse {
                    line,
                    message: format!(
                        "bad filtration value {:?}, expected a finite nonnegative real",
                        fields[0]
                    ),
                })?;
            let dim: usize = fields[1].parse().map_err(|_| Error::Parse {
                line,
                message: format!("bad dimension {:?}", fields[1]),
            })?;
            let simplex = Simplex::parse(fields[2]).map_err(|e| Error::Parse {
                line,
                message: e.to_string(),
            })?;
            if simplex.dim() != dim {
                return Err(Error::Parse {
                    line,
                    message: format!(
                        "declared dimension {dim} does not match simplex {simplex}"
                    ),
                });
            }
            events.push((value, simplex));
        }
        Self::new(events)
    }
}

/// A point cloud in Euclidean space: equally-dimensioned coordinate rows.
#[derive(Clone, Debug, PartialEq)]
pub struct PointCloud {
    points: Vec<Vec<f64>>,
}

impl PointCloud {
    pub fn new(points: Vec<Vec<f64>>) -> Result<Self> {
        if let Some(first) = points.first() {
            let d = first.len();
            if d == 0 {
                return Err(Error::InvalidPointCloud(
                    "points must have dimension at least 1".into(),
                ));
            }
            for (i, p) in points.iter().enumerate() {
                if p.len() != d {
                    return Err(Error::InvalidPointCloud(format!(
                        "point {i} has dimension {}, expected {d}",
                        p.len()
                    )));
                }
                if p.iter().any(|x| !x.is_finite()) {
                    return Err(Error::InvalidPointCloud(format!(
                        "point {i} has a non-finite coordinate"
                    )));
                }
            }
        }
        Ok(Self { points })
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Coordinate dimension; 0 for an empty cloud.
    pub fn dim(&self) -> usize {
        self.points.first().map_or(0, Vec::len)
    }

    pub fn point(&self, i: usize) -> &[f64] {
        &self.points[i]
    }

    pub fn distance(&self, i: usize, j: usize) -> f64 {
        self.points[i]
            .iter()
            .zip(&self.points[j])
            .map(|(a, b)| (a - b) * (a - b))
            .sum::<f64>()
            .sqrt()
    }

    /// Parses one point per row, `d` comma-separated decimal floats.
    /// Blank lines are ignored; errors carry 1-based line numbers.
    pub fn parse_csv(text: &str) -> Result<Self> {
        let mut points: Vec<Vec<f64>> = Vec::new();
        let mut expected_dim = None;
        for (lineno, raw) in text.lines().enumerate() {
            let line = lineno + 1;
            let row = raw.trim();
            if row.is_empty() {
                continue;
            }
            let coords = row
                .split(',')
                .map(|field| {
                    field
                        .trim()
                        .parse::<f64>()
                        .ok()
                        .filter(|v| v.is_finite())
                        .ok_or_else(|| Error::Parse {
                            line,
                            message: format!("bad coordinate {:?}", field.trim()),
                        })
                })
                .collect::<Result<Vec<f64>>>()?;
            let d = *expected_dim.get_or_insert(coords.len());
            if coords.len() != d {
                return Err(Error::Parse {
                    line,
                    message: format!("point has {} coordinates, expected {d}", coords.len()),
                });
            }
            points.push(coords);
        }
        Self::new(points)
    }
}

/// Builds the Vietoris–Rips filtration of a point cloud.
///
/// Diameter convention: a simplex enters at the maximum pairwise distance
/// among its vertices, so an edge appears once its endpoints are within
/// `max_radius` of each other. (For the alternative radius convention, where
/// balls of radius r touch at distance 2r, halve all thresholds; the CLI
/// exposes a flag for this.) Vertices enter at value 0. Only simplices with
/// entry value ≤ `max_radius` and dimension ≤ `max_dim` appear.
///
/// Ties are broken by `(value, dim, lexicographic vertex list)`, which keeps
/// faces ahead of cofaces and makes the event order deterministic.
pub fn vietoris_rips(
    points: &PointCloud,
    max_radius: f64,
    max_dim: usize,
) -> Result<Filtration> {
    if points.is_empty() {
        return Err(Error::EmptyInput);
    }
    if !max_radius.is_finite() || max_radius < 0.0 {
        return Err(Error::InvalidConfig(format!(
            "max_radius must be a finite nonnegative real, got {max_radius}"
        )));
    }
    let n = points.len();

    let mut events: Vec<(f64, Simplex)> = (0..n).map(|v| (0.0, Simplex::vertex(v))).collect();

    // Cliques of each size, grown by appending a vertex above the current
    // maximum; the running diameter only needs the distances to the new vertex.
    let mut level: Vec<(Vec<VertexId>, f64)> = Vec::new();
    if max_dim >= 1 {
        for i in 0..n {
            for j in (i + 1)..n {
                let d = points.distance(i, j);
                if d <= max_radius {
                    level.push((vec![i, j], d));
                }
            }
        }
        for (clique, diam) in &level {
            events.push((*diam, Simplex::new(clique.clone())?));
        }
    }
    for _dim in 2..=max_dim {
        let mut next: Vec<(Vec<VertexId>, f64)> = Vec::new();
        for (clique, diam) in &level {
            let last = *clique.last().expect("cliques are non-empty");
            'candidate: for v in (last + 1)..n {
                let mut grown = *diam;
                for &u in clique {
                    let d = points.distance(u, v);
                    if d > max_radius {
                        continue 'candidate;
                    }
                    grown = grown.max(d);
                }
                let mut vs = clique.clone();
                vs.push(v);
                next.push((vs, grown));
            }
        }
        for (clique, diam) in &next {
            events.push((*diam, Simplex::new(clique.clone())?));
        }
        if next.is_empty() {
            break;
        }
        level = next;
    }

    events.sort_by(|(va, sa), (vb, sb)| {
        va.total_cmp(vb)
            .then_with(|| sa.dim().cmp(&sb.dim()))
            .then_with(|| sa.vertices().cmp(sb.vertices()))
    });
    Filtration::new(events)
}
