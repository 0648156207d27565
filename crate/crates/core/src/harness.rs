//! Reference experiments and randomized property campaigns.
//!
//! Everything here is reproducible by construction: point clouds come from a
//! fixed, documented 64-bit generator seeded by the config, insertions follow
//! filtration order, and an identical [`ExperimentConfig`] yields a
//! bit-identical [`ExperimentReport`].

use std::io::Write;

use serde::{Deserialize, Serialize};

use crate::boundary::{boundary_chain, boundary_matrix, Chain};
use crate::complex::{vietoris_rips, Filtration, PointCloud, Simplex, SimplicialComplex};
use crate::perturbation::{
    certificate_from_spectra, check_interlacing, check_two_sided, check_weyl,
    decompose_insertion, two_sided_for_insertion, DriftCertificate, TwoSidedCheck,
};
use crate::spectra::{eigenvalues, up_laplacian, Spectrum};
use crate::{Error, Result, DEFAULT_TOL};

/// SplitMix64, the 64-bit generator of Steele, Lea & Flanagan (OOPSLA 2014).
///
/// State advances by the golden-ratio increment `0x9E3779B97F4A7C15` and the
/// output is finalized by two xor-shift multiplications with constants
/// `0xBF58476D1CE4E5B9` and `0x94D049BB133111EB`. The algorithm is trivially
/// portable, so reports can be reproduced from the seed in any language.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        Self { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform in `[0, 1)`: the top 53 bits divided by 2⁵³.
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Uniform in `[-1, 1)`.
    pub fn next_signed(&mut self) -> f64 {
        2.0 * self.next_f64() - 1.0
    }

    /// Uniform in `lo..hi` (half-open, `hi > lo`).
    pub fn next_range(&mut self, lo: usize, hi: usize) -> usize {
        lo + (self.next_u64() % (hi - lo) as u64) as usize
    }
}

/// The repo's canonical experiment seed; its reference `max_ratio` is quoted
/// in the README.
pub const CANONICAL_SEED: u64 = 42;

/// Parameters of the random-cloud insertion experiment. Points are drawn
/// uniformly in the unit square.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExperimentConfig {
    pub seed: u64,
    pub n_points: usize,
    pub max_radius: f64,
    pub max_dim: usize,
    pub n_insertions: usize,
    pub k: usize,
    pub tol: f64,
}

impl Default for ExperimentConfig {
    /// The canonical run: 20 points, radius 1.5, the first 50 two-simplices
    /// revealed one at a time against the k = 1 up-Laplacian.
    fn default() -> Self {
        Self {
            seed: CANONICAL_SEED,
            n_points: 20,
            max_radius: 1.5,
            max_dim: 2,
            n_insertions: 50,
            k: 1,
            tol: DEFAULT_TOL,
        }
    }
}

impl ExperimentConfig {
    pub fn validate(&self) -> Result<()> {
        if self.n_points < 1 {
            return Err(Error::InvalidConfig("n_points must be at least 1".into()));
        }
        if !self.max_radius.is_finite() || self.max_radius <= 0.0 {
            return Err(Error::InvalidConfig(format!(
                "max_radius must be a positive finite real, got {}",
                self.max_radius
            )));
        }
        if !crate::tol_is_valid(self.tol) {
            return Err(Error::InvalidTolerance(self.tol));
        }
        Ok(())
    }

    /// The seeded point cloud this config's experiment runs on: `n_points`
    /// draws of (x, y) from [`SplitMix64`], in that coordinate order.
    pub fn sample_points(&self) -> PointCloud {
        let mut rng = SplitMix64::new(self.seed);
        let points = (0..self.n_points)
            .map(|_| {
                let x = rng.next_f64();
                let y = rng.next_f64();
                vec![x, y]
            })
            .collect();
        PointCloud::new(points).expect("unit-square samples are a valid cloud")
    }
}

/// One `(‖∂σ‖₂, δ_j)` pair of the drift scatter.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ScatterPoint {
    pub spike_norm: f64,
    pub delta: f64,
}

/// Per-checker pass/fail counts over an experiment.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CheckerSummary {
    pub insertions: usize,
    pub lipschitz_failures: usize,
    pub interlacing_failures: usize,
    pub weyl_failures: usize,
    pub two_sided_failures: usize,
}

/// Everything one experiment produced: certificates, before/after spectra,
/// the drift scatter behind the plots, and any findings. Immutable once
/// produced.
#[derive(Clone, Debug, PartialEq)]
pub struct ExperimentReport {
    pub k: usize,
    pub certificates: Vec<DriftCertificate>,
    pub two_sided: Vec<TwoSidedCheck>,
    /// Before/after spectra per insertion, for plotting and cross-checking.
    pub spectra: Vec<(Spectrum, Spectrum)>,
    /// One point per aligned drift entry per insertion.
    pub scatter: Vec<ScatterPoint>,
    /// Largest `max_j δ_j / (2‖u‖₂)` across insertions.
    pub max_ratio: f64,
    /// Human-readable anomalies, e.g. two-sided trailing-clause failures.
    pub findings: Vec<String>,
}

impl ExperimentReport {
    /// True iff every certificate passed interlacing, Weyl, and Lipschitz.
    /// Two-sided failures are findings, not gates.
    pub fn all_passed(&self) -> bool {
        self.certificates.iter().all(DriftCertificate::all_ok)
    }

    pub fn summary(&self) -> CheckerSummary {
        CheckerSummary {
            insertions: self.certificates.len(),
            lipschitz_failures: self.certificates.iter().filter(|c| !c.lipschitz_ok).count(),
            interlacing_failures: self
                .certificates
                .iter()
                .filter(|c| !c.interlacing_ok)
                .count(),
            weyl_failures: self.certificates.iter().filter(|c| !c.weyl_ok).count(),
            two_sided_failures: self.two_sided.iter().filter(|t| !t.passed()).count(),
        }
    }

    /// One flat row per insertion, `DriftCertificate::CSV_HEADER` schema.
    pub fn write_certificates_csv<W: Write>(&self, mut w: W) -> Result<()> {
        writeln!(w, "{}", DriftCertificate::CSV_HEADER)?;
        for (i, cert) in self.certificates.iter().enumerate() {
            writeln!(w, "{}", cert.csv_row(i, self.k))?;
        }
        Ok(())
    }

    /// The data behind the drift plot: `spike_norm,delta,bound` with
    /// `bound = 2·spike_norm`.
    pub fn write_scatter_csv<W: Write>(&self, mut w: W) -> Result<()> {
        writeln!(w, "spike_norm,delta,bound")?;
        for p in &self.scatter {
            writeln!(w, "{},{},{}", p.spike_norm, p.delta, 2.0 * p.spike_norm)?;
        }
        Ok(())
    }

    pub fn write_summary<W: Write>(&self, mut w: W) -> Result<()> {
        let s = self.summary();
        let ok = |failures: usize| s.insertions - failures;
        writeln!(w, "insertion experiment (k = {})", self.k)?;
        writeln!(w, "  insertions         : {}", s.insertions)?;
        writeln!(w, "  drift pairs logged : {}", self.scatter.len())?;
        writeln!(w, "  lipschitz ok       : {}/{}", ok(s.lipschitz_failures), s.insertions)?;
        writeln!(w, "  interlacing ok     : {}/{}", ok(s.interlacing_failures), s.insertions)?;
        writeln!(w, "  weyl ok            : {}/{}", ok(s.weyl_failures), s.insertions)?;
        writeln!(w, "  two-sided ok       : {}/{}", ok(s.two_sided_failures), s.insertions)?;
        writeln!(w, "  global max ratio   : {:.12}", self.max_ratio)?;
        writeln!(w, "  verdict            : {}", if self.all_passed() { "PASS" } else { "FAIL" })?;
        if !self.findings.is_empty() {
            writeln!(w, "findings ({}):", self.findings.len())?;
            for finding in &self.findings {
                writeln!(w, "  - {finding}")?;
            }
        }
        Ok(())
    }
}

/// Runs the insertion experiment on an explicit filtration: starting from the
/// complex of all simplices of dimension ≤ k, the first `n_insertions`
/// `(k+1)`-simplices are inserted one at a time in filtration order, each
/// fully recertified against the recomputed Laplacian.
pub fn run_insertion_experiment_on(
    filtration: &Filtration,
    k: usize,
    n_insertions: usize,
    tol: f64,
) -> Result<ExperimentReport> {
    let targets: Vec<&Simplex> = filtration
        .events()
        .iter()
        .filter(|(_, s)| s.dim() == k + 1)
        .map(|(_, s)| s)
        .collect();
    if targets.len() < n_insertions {
        return Err(Error::InsufficientSimplices {
            dim: k + 1,
            needed: n_insertions,
            found: targets.len(),
        });
    }

    let mut complex = SimplicialComplex::new();
    for (_, s) in filtration.events().iter().filter(|(_, s)| s.dim() <= k) {
        complex
            .insert_in_place(s.clone())
            .expect("low-dimensional filtration prefix is a complex");
    }

    let mut report = ExperimentReport {
        k,
        certificates: Vec::with_capacity(n_insertions),
        two_sided: Vec::with_capacity(n_insertions),
        spectra: Vec::with_capacity(n_insertions),
        scatter: Vec::new(),
        max_ratio: 0.0,
        findings: Vec::new(),
    };

    // Chain the spectra: each insertion's "after" is the next one's "before",
    // so the whole run costs n_insertions + 1 eigendecompositions.
    let mut old = eigenvalues(&up_laplacian(&complex, k), tol)?;
    for (i, s) in targets.into_iter().take(n_insertions).enumerate() {
        let decomposition = decompose_insertion(&complex, k, s, tol)?;
        let updated = complex.insert_simplex(s)?;
        let new = eigenvalues(&up_laplacian(&updated, k), tol)?;
        let cert = certificate_from_spectra(&old, &new, decomposition.spike_norm, tol)?;

        for &delta in &cert.deltas {
            report.scatter.push(ScatterPoint { spike_norm: cert.spike_norm, delta });
        }
        report.max_ratio = report.max_ratio.max(cert.max_ratio);

        let two_sided = two_sided_for_insertion(&old, &new, &decomposition, tol)?;
        log_two_sided_findings(&mut report.findings, i, s, &new, &decomposition, two_sided);

        report.spectra.push((old.clone(), new.clone()));
        report.certificates.push(cert);
        report.two_sided.push(two_sided);
        complex = updated;
        old = new;
    }
    Ok(report)
}

fn log_two_sided_findings(
    findings: &mut Vec<String>,
    insertion: usize,
    s: &Simplex,
    new: &Spectrum,
    decomposition: &crate::perturbation::InsertionDecomposition,
    check: TwoSidedCheck,
) {
    if !check.drift_clause_ok {
        findings.push(format!(
            "insertion {insertion} ({s}): two-sided drift clause violated: a drift exceeds 2‖u‖ = {:.6}",
            2.0 * decomposition.spike_norm
        ));
    }
    if check.trailing_clause_ok == Some(false) {
        findings.push(format!(
            "insertion {insertion} ({s}): two-sided trailing clause violated: |λ_top| = {:.6} > ‖u‖ = {:.6}",
            new.max().unwrap_or(0.0),
            decomposition.spike_norm
        ));
    }
}

/// Samples a point cloud from the config's seed, builds its Vietoris–Rips
/// filtration, and runs the insertion experiment.
pub fn run_rips_insertion_experiment(cfg: &ExperimentConfig) -> Result<ExperimentReport> {
    cfg.validate()?;
    let points = cfg.sample_points();
    let filtration = vietoris_rips(&points, cfg.max_radius, cfg.max_dim)?;
    run_insertion_experiment_on(&filtration, cfg.k, cfg.n_insertions, cfg.tol)
}

/// The sharpness witness: a two-vertex graph whose single edge is duplicated
/// by appending a second copy of its boundary column. Spectra move from
/// {0, 2} to {0, 4} — an exact eigenvalue shift of 2, which saturates the
/// Weyl bound `‖u‖₂² = 2`.
pub fn sharpness_example() -> ExperimentReport {
    let tol = DEFAULT_TOL;
    let mut c = SimplicialComplex::new();
    for v in 0..2 {
        c = c.insert_simplex(&Simplex::vertex(v)).expect("fresh vertices");
    }
    let edge = Simplex::new(vec![0, 1]).expect("valid edge");
    c = c.insert_simplex(&edge).expect("vertices are present");

    let b1 = boundary_matrix(&c, 1);
    let duplicate = boundary_chain(&c, &edge).expect("edge endpoints are present");
    let spike_norm = duplicate.norm();
    let doubled = b1.append_column(&duplicate).expect("column fits the row space");

    let before = eigenvalues(&b1.gram(), tol).expect("finite 2x2 gram");
    let after = eigenvalues(&doubled.gram(), tol).expect("finite 2x2 gram");
    let cert = certificate_from_spectra(&before, &after, spike_norm, tol)
        .expect("aligned spectra");
    // The duplicate column lies in the image of B_1: no dimension jump.
    let two_sided =
        check_two_sided(&before, &after, spike_norm, tol).expect("equal lengths");

    let scatter = cert
        .deltas
        .iter()
        .map(|&delta| ScatterPoint { spike_norm, delta })
        .collect();
    ExperimentReport {
        k: 0,
        max_ratio: cert.max_ratio,
        scatter,
        spectra: vec![(before, after)],
        two_sided: vec![two_sided],
        certificates: vec![cert],
        findings: Vec::new(),
    }
}

/// The five-point complex behind [`pentagon_example`], as a filtration:
/// vertices at 0, four sides at 1, and the chord closing triangle {0,1,2}
/// at 1.5. The filling triangle itself is left out so it can be inserted
/// and certified.
pub fn pentagon_filtration() -> Filtration {
    let mut events: Vec<(f64, Simplex)> =
        (0..5).map(|v| (0.0, Simplex::vertex(v))).collect();
    for e in [[0usize, 1], [1, 2], [2, 3], [3, 4]] {
        events.push((1.0, Simplex::new(e.to_vec()).expect("valid edge")));
    }
    events.push((1.5, Simplex::new(vec![0, 2]).expect("valid edge")));
    Filtration::new(events).expect("hand-built events are ordered")
}

/// The minimal two-dimensional insertion: five points, five edges, and one
/// filling 2-simplex.
///
/// Before the insertion there are no 2-simplices, so the k = 1 up-Laplacian
/// is the 5×5 zero matrix; after it, the spectrum is {0,0,0,0,3} with
/// `‖∂σ‖₂ = √3`. The two-sided trailing clause fails here (3 > √3) and is
/// recorded as a finding.
pub fn pentagon_example() -> ExperimentReport {
    let tol = DEFAULT_TOL;
    let complex = pentagon_filtration().full_complex();
    let triangle = Simplex::new(vec![0, 1, 2]).expect("valid triangle");

    let decomposition =
        decompose_insertion(&complex, 1, &triangle, tol).expect("faces are present");
    let before = eigenvalues(&up_laplacian(&complex, 1), tol).expect("finite laplacian");
    let updated = complex.insert_simplex(&triangle).expect("faces are present");
    let after = eigenvalues(&up_laplacian(&updated, 1), tol).expect("finite laplacian");
    let cert = certificate_from_spectra(&before, &after, decomposition.spike_norm, tol)
        .expect("aligned spectra");
    let two_sided =
        two_sided_for_insertion(&before, &after, &decomposition, tol).expect("lengths match");

    let mut findings = Vec::new();
    log_two_sided_findings(&mut findings, 0, &triangle, &after, &decomposition, two_sided);

    let scatter = cert
        .deltas
        .iter()
        .map(|&delta| ScatterPoint { spike_norm: cert.spike_norm, delta })
        .collect();
    ExperimentReport {
        k: 1,
        max_ratio: cert.max_ratio,
        scatter,
        spectra: vec![(before, after)],
        two_sided: vec![two_sided],
        certificates: vec![cert],
        findings,
    }
}

/// Assertion tolerance of the randomized campaign.
pub const CAMPAIGN_TOL: f64 = 1e-8;
const CAMPAIGN_EIG_TOL: f64 = 1e-12;

/// Outcome counts of [`property_campaign`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CampaignSummary {
    pub trials: usize,
    pub reconstruction_failures: usize,
    pub monotone_failures: usize,
    pub interlacing_failures: usize,
    pub weyl_failures: usize,
}

impl CampaignSummary {
    pub fn all_passed(&self) -> bool {
        self.reconstruction_failures == 0
            && self.monotone_failures == 0
            && self.interlacing_failures == 0
            && self.weyl_failures == 0
    }
}

impl std::fmt::Display for CampaignSummary {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "property campaign: {} trials", self.trials)?;
        writeln!(f, "  reconstruction failures : {}", self.reconstruction_failures)?;
        writeln!(f, "  monotone-growth failures: {}", self.monotone_failures)?;
        writeln!(f, "  interlacing failures    : {}", self.interlacing_failures)?;
        writeln!(f, "  weyl failures           : {}", self.weyl_failures)?;
        write!(f, "  verdict                 : {}", if self.all_passed() { "PASS" } else { "FAIL" })
    }
}

/// Randomized validation of the rank-one update machinery.
///
/// Each trial draws a PSD matrix `A = GGᵀ` (size 2..=`max_n`) plus a random
/// spike `u` and asserts, within [`CAMPAIGN_TOL`]:
///
/// * reconstruction — `A + uuᵀ` and the Gram matrix of `[G | u]` have the
///   same spectrum (the append-a-column identity, computed two ways);
/// * monotone growth — no eigenvalue decreases under a PSD rank-one update;
/// * interlacing — `λ_j(A) ≤ λ_j(B) ≤ λ_{j+1}(A)`;
/// * Weyl — `max_j δ_j ≤ ‖u‖₂²`.
pub fn property_campaign(n_trials: usize, seed: u64, max_n: usize) -> Result<CampaignSummary> {
    if n_trials < 1 {
        return Err(Error::InvalidConfig("n_trials must be at least 1".into()));
    }
    if max_n < 2 {
        return Err(Error::InvalidConfig("max_n must be at least 2".into()));
    }
    let mut rng = SplitMix64::new(seed);
    let mut summary = CampaignSummary {
        trials: n_trials,
        reconstruction_failures: 0,
        monotone_failures: 0,
        interlacing_failures: 0,
        weyl_failures: 0,
    };

    for _ in 0..n_trials {
        let n = rng.next_range(2, max_n + 1);
        let cols = rng.next_range(1, n + 1);
        let factor_columns: Vec<Vec<(usize, f64)>> = (0..cols)
            .map(|_| (0..n).map(|i| (i, rng.next_signed())).collect())
            .collect();
        let spike: Vec<f64> = (0..n).map(|_| rng.next_signed()).collect();

        let factor = crate::boundary::BoundaryMatrix::from_columns(n, 0, factor_columns)?;
        let spike_chain = Chain::new(0, spike.iter().copied().enumerate().collect())?;
        let extended = factor.append_column(&spike_chain)?;

        let base = factor.gram();
        let mut updated_direct = base.clone();
        updated_direct.add_outer(&spike);

        let spec_base = eigenvalues(&base, CAMPAIGN_EIG_TOL)?;
        let spec_updated = eigenvalues(&updated_direct, CAMPAIGN_EIG_TOL)?;
        let spec_via_gram = eigenvalues(&extended.gram(), CAMPAIGN_EIG_TOL)?;

        let reconstruction_ok = spec_updated
            .values()
            .iter()
            .zip(spec_via_gram.values())
            .all(|(a, b)| (a - b).abs() <= CAMPAIGN_TOL);
        if !reconstruction_ok {
            summary.reconstruction_failures += 1;
        }

        let monotone_ok = spec_base
            .values()
            .iter()
            .zip(spec_updated.values())
            .all(|(a, b)| *b >= *a - CAMPAIGN_TOL);
        if !monotone_ok {
            summary.monotone_failures += 1;
        }

        if !check_interlacing(&spec_base, &spec_updated, CAMPAIGN_TOL).ok {
            summary.interlacing_failures += 1;
        }

        let spike_norm = spike.iter().map(|v| v * v).sum::<f64>().sqrt();
        if !check_weyl(&spec_base, &spec_updated, spike_norm, CAMPAIGN_TOL) {
            summary.weyl_failures += 1;
        }
    }
    Ok(summary)
}
