//! Thin command-line front end over the `uplap` library.
//!
//! Exit codes: 0 when every requested check passes, 1 when a certified check
//! fails (outputs are still written), 2 on usage or input errors.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Deserialize;

use uplap::{
    certificate_from_spectra, decompose_insertion, eigenvalues, numerical_rank,
    pentagon_example, plot::{scatter_svg, ScatterStyle}, property_campaign,
    run_rips_insertion_experiment, sharpness_example, two_sided_for_insertion, up_laplacian,
    vietoris_rips, Error, ExperimentConfig, ExperimentReport, Filtration, PointCloud, Simplex,
    DEFAULT_TOL, TOL_ENV_VAR,
};

#[derive(Parser)]
#[command(
    name = "uplap",
    version,
    about = "Up-persistent Laplacian spectra with certified one-simplex insertions",
    after_help = "The default tolerance is 1e-9; override it with --tol or the UPLAP_TOL \
                  environment variable (a decimal float)."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a Vietoris-Rips filtration from a point-cloud CSV
    Rips(RipsArgs),
    /// Assemble the up-Laplacian of a filtration and export it
    Laplacian(LaplacianArgs),
    /// Append one simplex to a filtration
    Insert(InsertArgs),
    /// Certify a single simplex insertion against the drift bounds
    Certify(CertifyArgs),
    /// Run the seeded random-cloud insertion experiment
    Experiment(ExperimentArgs),
    /// Two-vertex duplicate-edge sharpness example
    Sharpness(ExampleArgs),
    /// Five-point filling-triangle example
    Pentagon(ExampleArgs),
    /// Randomized rank-one update property campaign
    Campaign(CampaignArgs),
    /// Render a drift scatter CSV as a self-contained SVG
    Plot(PlotArgs),
}

#[derive(Args)]
struct RipsArgs {
    /// Point-cloud CSV: one point per row, d comma-separated coordinates
    #[arg(long)]
    points: PathBuf,
    /// Largest entry value kept in the filtration
    #[arg(long)]
    max_radius: f64,
    /// Largest simplex dimension kept
    #[arg(long, default_value_t = 2)]
    max_dim: usize,
    /// Interpret distances in the radius convention (balls of radius r touch
    /// at distance 2r): entry values are halved relative to the default
    /// diameter convention
    #[arg(long)]
    radius_convention: bool,
    /// Output filtration CSV (value,dim,vertices)
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct LaplacianArgs {
    /// Filtration CSV as written by `rips`
    #[arg(long)]
    filtration: PathBuf,
    /// Chain dimension k of the up-Laplacian
    #[arg(long)]
    k: usize,
    /// Scale at which to take the complex (default: the full filtration)
    #[arg(long)]
    at: Option<f64>,
    /// Output dense matrix CSV
    #[arg(long)]
    out: PathBuf,
    /// Optional spectrum CSV (index,value)
    #[arg(long)]
    spectrum: Option<PathBuf>,
    /// Optional coordinate-triplet CSV (row,col,value) of B_{k+1}, for
    /// cross-checking against other tools
    #[arg(long)]
    boundary: Option<PathBuf>,
    #[arg(long)]
    tol: Option<f64>,
}

#[derive(Args)]
struct InsertArgs {
    /// Filtration CSV to extend
    #[arg(long)]
    filtration: PathBuf,
    /// Simplex as dash-joined ascending vertex ids, e.g. 0-1-2
    #[arg(long)]
    simplex: String,
    /// Entry value of the new simplex (default: the last event's value)
    #[arg(long)]
    value: Option<f64>,
    /// Output filtration CSV
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct CertifyArgs {
    /// Filtration CSV providing the base complex
    #[arg(long)]
    filtration: PathBuf,
    /// Laplacian dimension k; the inserted simplex must have dimension k+1
    #[arg(long)]
    k: usize,
    /// Simplex to insert, dash-joined ascending vertex ids
    #[arg(long)]
    simplex: String,
    /// Scale at which to take the base complex (default: full filtration)
    #[arg(long)]
    at: Option<f64>,
    /// Output certificate text block
    #[arg(long)]
    out: PathBuf,
    /// Also write the certificate as a one-row CSV
    #[arg(long)]
    csv: Option<PathBuf>,
    /// Additionally gate the exit code on the sharp two-sided estimate
    #[arg(long)]
    two_sided: bool,
    #[arg(long)]
    tol: Option<f64>,
}

#[derive(Args)]
struct ExperimentArgs {
    /// TOML config file; flags override file values, file values override
    /// defaults
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    points: Option<usize>,
    #[arg(long)]
    radius: Option<f64>,
    #[arg(long)]
    max_dim: Option<usize>,
    #[arg(long)]
    insertions: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    tol: Option<f64>,
    /// Directory receiving certificates.csv, scatter.csv, and summary.txt
    #[arg(long)]
    out_dir: PathBuf,
}

#[derive(Args)]
struct ExampleArgs {
    /// Optional directory receiving the report files
    #[arg(long)]
    out_dir: Option<PathBuf>,
}

#[derive(Args)]
struct CampaignArgs {
    #[arg(long, default_value_t = 200)]
    trials: usize,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    #[arg(long, default_value_t = 6)]
    max_n: usize,
}

#[derive(Args)]
struct PlotArgs {
    /// Scatter CSV as written by `experiment` (spike_norm,delta,bound)
    #[arg(long)]
    scatter: PathBuf,
    /// Output SVG path
    #[arg(long)]
    out: PathBuf,
    #[arg(long)]
    title: Option<String>,
}

enum Outcome {
    Pass,
    CheckFailed(String),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(Outcome::Pass) => ExitCode::SUCCESS,
        Ok(Outcome::CheckFailed(msg)) => {
            eprintln!("FAIL: {msg}");
            ExitCode::from(1)
        }
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

type CliResult<T> = Result<T, String>;

fn run(command: Command) -> CliResult<Outcome> {
    match command {
        Command::Rips(args) => cmd_rips(args),
        Command::Laplacian(args) => cmd_laplacian(args),
        Command::Insert(args) => cmd_insert(args),
        Command::Certify(args) => cmd_certify(args),
        Command::Experiment(args) => cmd_experiment(args),
        Command::Sharpness(args) => cmd_example(sharpness_example(), args),
        Command::Pentagon(args) => cmd_pentagon(args),
        Command::Campaign(args) => cmd_campaign(args),
        Command::Plot(args) => cmd_plot(args),
    }
}

fn read_file(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn write_file(path: &Path, contents: &[u8]) -> CliResult<()> {
    fs::write(path, contents).map_err(|e| format!("{}: {e}", path.display()))
}

fn resolve_tol(flag: Option<f64>) -> CliResult<f64> {
    let tol = match flag {
        Some(t) => t,
        None => match std::env::var(TOL_ENV_VAR) {
            Ok(text) => text
                .trim()
                .parse::<f64>()
                .map_err(|_| format!("{TOL_ENV_VAR} must hold a decimal float, got {text:?}"))?,
            Err(_) => DEFAULT_TOL,
        },
    };
    if !tol.is_finite() || tol <= 0.0 {
        return Err(format!("tolerance must be a positive finite real, got {tol}"));
    }
    Ok(tol)
}

fn cmd_rips(args: RipsArgs) -> CliResult<Outcome> {
    let cloud = PointCloud::parse_csv(&read_file(&args.points)?).map_err(|e| e.to_string())?;
    let filtration = if args.radius_convention {
        let at_diameter = vietoris_rips(&cloud, 2.0 * args.max_radius, args.max_dim)
            .map_err(|e| e.to_string())?;
        let halved = at_diameter
            .events()
            .iter()
            .map(|(v, s)| (v / 2.0, s.clone()))
            .collect();
        Filtration::new(halved).map_err(|e| e.to_string())?
    } else {
        vietoris_rips(&cloud, args.max_radius, args.max_dim).map_err(|e| e.to_string())?
    };
    let mut buf = Vec::new();
    filtration.write_csv(&mut buf).map_err(|e| e.to_string())?;
    write_file(&args.out, &buf)?;
    println!(
        "wrote {} events ({} points, max_dim {}) to {}",
        filtration.len(),
        cloud.len(),
        args.max_dim,
        args.out.display()
    );
    Ok(Outcome::Pass)
}

fn cmd_laplacian(args: LaplacianArgs) -> CliResult<Outcome> {
    let tol = resolve_tol(args.tol)?;
    let filtration =
        Filtration::parse_csv(&read_file(&args.filtration)?).map_err(|e| e.to_string())?;
    let complex = match args.at {
        Some(r) => filtration.complex_at(r),
        None => filtration.full_complex(),
    };
    let laplacian = up_laplacian(&complex, args.k);
    let rank = numerical_rank(&laplacian, tol).map_err(|e| e.to_string())?;

    let mut buf = Vec::new();
    laplacian.write_csv(&mut buf).map_err(|e| e.to_string())?;
    write_file(&args.out, &buf)?;
    if let Some(spectrum_path) = &args.spectrum {
        let spectrum = eigenvalues(&laplacian, tol).map_err(|e| e.to_string())?;
        let mut buf = Vec::new();
        spectrum.write_csv(&mut buf).map_err(|e| e.to_string())?;
        write_file(spectrum_path, &buf)?;
    }
    if let Some(boundary_path) = &args.boundary {
        let mut buf = Vec::new();
        uplap::boundary_matrix(&complex, args.k + 1)
            .write_coord_csv(&mut buf)
            .map_err(|e| e.to_string())?;
        write_file(boundary_path, &buf)?;
    }
    println!(
        "up-laplacian k={} is {n}x{n}, numerical rank {rank}",
        args.k,
        n = laplacian.n()
    );
    Ok(Outcome::Pass)
}

fn cmd_insert(args: InsertArgs) -> CliResult<Outcome> {
    let filtration =
        Filtration::parse_csv(&read_file(&args.filtration)?).map_err(|e| e.to_string())?;
    let simplex = Simplex::parse(&args.simplex).map_err(|e| e.to_string())?;
    let value = args.value.unwrap_or_else(|| filtration.max_value().unwrap_or(0.0));
    let mut events = filtration.events().to_vec();
    events.push((value, simplex.clone()));
    let extended = Filtration::new(events).map_err(|e| e.to_string())?;
    let mut buf = Vec::new();
    extended.write_csv(&mut buf).map_err(|e| e.to_string())?;
    write_file(&args.out, &buf)?;
    println!(
        "appended {simplex} at value {value}; {} events written to {}",
        extended.len(),
        args.out.display()
    );
    Ok(Outcome::Pass)
}

fn cmd_certify(args: CertifyArgs) -> CliResult<Outcome> {
    let tol = resolve_tol(args.tol)?;
    let filtration =
        Filtration::parse_csv(&read_file(&args.filtration)?).map_err(|e| e.to_string())?;
    let complex = match args.at {
        Some(r) => filtration.complex_at(r),
        None => filtration.full_complex(),
    };
    let simplex = Simplex::parse(&args.simplex).map_err(|e| e.to_string())?;

    let decomposition =
        decompose_insertion(&complex, args.k, &simplex, tol).map_err(|e| e.to_string())?;
    let old = eigenvalues(&up_laplacian(&complex, args.k), tol).map_err(|e| e.to_string())?;
    let updated = complex.insert_simplex(&simplex).map_err(|e| e.to_string())?;
    let new = eigenvalues(&up_laplacian(&updated, args.k), tol).map_err(|e| e.to_string())?;
    let cert = certificate_from_spectra(&old, &new, decomposition.spike_norm, tol)
        .map_err(|e| e.to_string())?;
    let two_sided =
        two_sided_for_insertion(&old, &new, &decomposition, tol).map_err(|e| e.to_string())?;

    let trailing = match two_sided.trailing_clause_ok {
        None => "n/a (no dimension jump)".to_string(),
        Some(true) => "ok".to_string(),
        Some(false) => "VIOLATED".to_string(),
    };
    let text = format!(
        "{cert}\n  two-sided drift   : {}\n  two-sided trailing: {trailing}\n",
        if two_sided.drift_clause_ok { "ok" } else { "VIOLATED" },
    );
    write_file(&args.out, text.as_bytes())?;
    if let Some(csv_path) = &args.csv {
        let csv = format!("{}\n{}\n", uplap::DriftCertificate::CSV_HEADER, cert.csv_row(0, args.k));
        write_file(csv_path, csv.as_bytes())?;
    }
    print!("{text}");

    let mut failures = Vec::new();
    if !cert.lipschitz_ok {
        failures.push("lipschitz bound");
    }
    if !cert.interlacing_ok {
        failures.push("interlacing");
    }
    if !cert.weyl_ok {
        failures.push("weyl bound");
    }
    if args.two_sided && !two_sided.drift_clause_ok {
        failures.push("sharp two-sided estimate (drift clause)");
    }
    if args.two_sided && two_sided.trailing_clause_ok == Some(false) {
        failures.push("sharp two-sided estimate (trailing clause)");
    }
    if failures.is_empty() {
        Ok(Outcome::Pass)
    } else {
        Ok(Outcome::CheckFailed(failures.join(", ")))
    }
}

/// Optional config-file counterpart of [`ExperimentConfig`]; every field may
/// be omitted.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct PartialConfig {
    seed: Option<u64>,
    n_points: Option<usize>,
    max_radius: Option<f64>,
    max_dim: Option<usize>,
    n_insertions: Option<usize>,
    k: Option<usize>,
    tol: Option<f64>,
}

fn cmd_experiment(args: ExperimentArgs) -> CliResult<Outcome> {
    let file: PartialConfig = match &args.config {
        Some(path) => toml::from_str(&read_file(path)?)
            .map_err(|e| format!("{}: {e}", path.display()))?,
        None => PartialConfig::default(),
    };
    let defaults = ExperimentConfig::default();
    let cfg = ExperimentConfig {
        seed: args.seed.or(file.seed).unwrap_or(defaults.seed),
        n_points: args.points.or(file.n_points).unwrap_or(defaults.n_points),
        max_radius: args.radius.or(file.max_radius).unwrap_or(defaults.max_radius),
        max_dim: args.max_dim.or(file.max_dim).unwrap_or(defaults.max_dim),
        n_insertions: args
            .insertions
            .or(file.n_insertions)
            .unwrap_or(defaults.n_insertions),
        k: args.k.or(file.k).unwrap_or(defaults.k),
        tol: resolve_tol(args.tol.or(file.tol))?,
    };
    let report = run_rips_insertion_experiment(&cfg).map_err(|e| e.to_string())?;
    write_report(&report, &args.out_dir)?;
    let mut summary = Vec::new();
    report.write_summary(&mut summary).map_err(|e| e.to_string())?;
    print!("{}", String::from_utf8_lossy(&summary));
    println!("reports written to {}", args.out_dir.display());
    if report.all_passed() {
        Ok(Outcome::Pass)
    } else {
        Ok(Outcome::CheckFailed("a drift certificate failed; see summary.txt".into()))
    }
}

fn write_report(report: &ExperimentReport, dir: &Path) -> CliResult<()> {
    fs::create_dir_all(dir).map_err(|e| format!("{}: {e}", dir.display()))?;
    let mut buf = Vec::new();
    report.write_certificates_csv(&mut buf).map_err(|e| e.to_string())?;
    write_file(&dir.join("certificates.csv"), &buf)?;

    let mut buf = Vec::new();
    report.write_scatter_csv(&mut buf).map_err(|e| e.to_string())?;
    write_file(&dir.join("scatter.csv"), &buf)?;

    let mut buf = Vec::new();
    report.write_summary(&mut buf).map_err(|e| e.to_string())?;
    write_file(&dir.join("summary.txt"), &buf)?;
    Ok(())
}

fn cmd_example(report: ExperimentReport, args: ExampleArgs) -> CliResult<Outcome> {
    let mut summary = Vec::new();
    report.write_summary(&mut summary).map_err(|e| e.to_string())?;
    print!("{}", String::from_utf8_lossy(&summary));
    for cert in &report.certificates {
        println!("{cert}");
    }
    if let Some((before, after)) = report.spectra.first() {
        println!("before: {:?}", before.values());
        println!("after : {:?}", after.values());
    }
    if let Some(dir) = &args.out_dir {
        write_report(&report, dir)?;
        if let Some((before, after)) = report.spectra.first() {
            let mut buf = Vec::new();
            before.write_csv(&mut buf).map_err(|e| e.to_string())?;
            write_file(&dir.join("spectrum_before.csv"), &buf)?;
            let mut buf = Vec::new();
            after.write_csv(&mut buf).map_err(|e| e.to_string())?;
            write_file(&dir.join("spectrum_after.csv"), &buf)?;
        }
        println!("reports written to {}", dir.display());
    }
    if report.all_passed() {
        Ok(Outcome::Pass)
    } else {
        Ok(Outcome::CheckFailed("a drift certificate failed".into()))
    }
}

fn cmd_pentagon(args: ExampleArgs) -> CliResult<Outcome> {
    // Also emit the pentagon filtration so the run can be replayed through
    // `certify --filtration pentagon.csv --k 1 --simplex 0-1-2`.
    if let Some(dir) = &args.out_dir {
        fs::create_dir_all(dir).map_err(|e| format!("{}: {e}", dir.display()))?;
        let mut buf = Vec::new();
        uplap::harness::pentagon_filtration()
            .write_csv(&mut buf)
            .map_err(|e| e.to_string())?;
        write_file(&dir.join("pentagon.csv"), &buf)?;
    }
    cmd_example(pentagon_example(), args)
}

fn cmd_campaign(args: CampaignArgs) -> CliResult<Outcome> {
    let summary =
        property_campaign(args.trials, args.seed, args.max_n).map_err(|e| e.to_string())?;
    println!("{summary}");
    if summary.all_passed() {
        Ok(Outcome::Pass)
    } else {
        Ok(Outcome::CheckFailed("property campaign recorded failures".into()))
    }
}

fn parse_scatter(text: &str) -> Result<Vec<(f64, f64)>, Error> {
    let mut points = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = lineno + 1;
        let row = raw.trim();
        if row.is_empty() {
            continue;
        }
        let fields: Vec<&str> = row.split(',').map(str::trim).collect();
        if fields.len() < 2 {
            return Err(Error::Parse {
                line,
                message: format!("expected at least 2 fields, got {}", fields.len()),
            });
        }
        let x = fields[0].parse::<f64>();
        let y = fields[1].parse::<f64>();
        match (x, y) {
            (Ok(x), Ok(y)) => points.push((x, y)),
            _ if line == 1 => continue, // header row
            _ => {
                return Err(Error::Parse {
                    line,
                    message: format!("bad scatter row {row:?}"),
                })
            }
        }
    }
    Ok(points)
}

fn cmd_plot(args: PlotArgs) -> CliResult<Outcome> {
    let points = parse_scatter(&read_file(&args.scatter)?).map_err(|e| e.to_string())?;
    let mut style = ScatterStyle::default();
    if let Some(title) = args.title {
        style.title = title;
    }
    let svg = scatter_svg(&points, &style);
    write_file(&args.out, svg.as_bytes())?;
    println!("{} points plotted to {}", points.len(), args.out.display());
    Ok(Outcome::Pass)
}
