//! End-to-end tests of the command-line interface: every verb, the exit-code
//! contract (0 pass, 1 failed check, 2 input error), and the file formats.

use std::path::Path;
use std::process::{Command, Output};

use uplap::{harness::pentagon_filtration, vietoris_rips, Filtration, PointCloud};

fn uplap(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_uplap"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn uplap_env(args: &[&str], key: &str, value: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_uplap"))
        .args(args)
        .env(key, value)
        .output()
        .expect("binary runs")
}

fn exit_code(output: &Output) -> i32 {
    output.status.code().expect("no signal")
}

fn stdout(output: &Output) -> String {
    String::from_utf8_lossy(&output.stdout).into_owned()
}

fn stderr(output: &Output) -> String {
    String::from_utf8_lossy(&output.stderr).into_owned()
}

fn write(path: &Path, contents: &str) {
    std::fs::write(path, contents).expect("writable temp dir");
}

fn pentagon_csv(dir: &Path) -> String {
    let path = dir.join("pentagon.csv");
    let mut buf = Vec::new();
    pentagon_filtration().write_csv(&mut buf).unwrap();
    write(&path, std::str::from_utf8(&buf).unwrap());
    path.display().to_string()
}

#[test]
fn rips_builds_a_two_point_filtration() {
    let dir = tempfile::tempdir().unwrap();
    let points = dir.path().join("points.csv");
    write(&points, "0,0\n0.7,0\n");
    let out = dir.path().join("filtration.csv");

    let run = uplap(&[
        "rips",
        "--points", points.to_str().unwrap(),
        "--max-radius", "1.0",
        "--max-dim", "1",
        "--out", out.to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&run), 0, "{}", stderr(&run));

    let filtration =
        Filtration::parse_csv(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(filtration.len(), 3);
    let complex = filtration.full_complex();
    assert_eq!((complex.simplex_count(0), complex.simplex_count(1)), (2, 1));
}

#[test]
fn rips_output_reconstructs_the_in_process_complex() {
    let dir = tempfile::tempdir().unwrap();
    let points = dir.path().join("points.csv");
    write(&points, "0.1,0.2\n0.9,0.3\n0.5,0.8\n0.2,0.9\n");
    let out = dir.path().join("filtration.csv");
    let run = uplap(&[
        "rips",
        "--points", points.to_str().unwrap(),
        "--max-radius", "1.5",
        "--max-dim", "2",
        "--out", out.to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&run), 0);

    let cloud =
        PointCloud::parse_csv(&std::fs::read_to_string(&points).unwrap()).unwrap();
    let direct = vietoris_rips(&cloud, 1.5, 2).unwrap();
    let via_csv = Filtration::parse_csv(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(via_csv, direct);
    assert_eq!(via_csv.full_complex(), direct.full_complex());
}

#[test]
fn rips_radius_convention_halves_entry_values() {
    let dir = tempfile::tempdir().unwrap();
    let points = dir.path().join("points.csv");
    write(&points, "0,0\n0.8,0\n");
    let out = dir.path().join("filtration.csv");
    let run = uplap(&[
        "rips",
        "--points", points.to_str().unwrap(),
        "--max-radius", "0.5",
        "--max-dim", "1",
        "--radius-convention",
        "--out", out.to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&run), 0);
    let filtration =
        Filtration::parse_csv(&std::fs::read_to_string(&out).unwrap()).unwrap();
    // the edge at distance 0.8 enters at r = 0.4 under the radius convention
    let edge = filtration.events().iter().find(|(_, s)| s.dim() == 1).unwrap();
    assert!((edge.0 - 0.4).abs() < 1e-12);
}

#[test]
fn rips_rejects_empty_and_malformed_input() {
    let dir = tempfile::tempdir().unwrap();
    let empty = dir.path().join("empty.csv");
    write(&empty, "");
    let out = dir.path().join("out.csv");
    let run = uplap(&[
        "rips",
        "--points", empty.to_str().unwrap(),
        "--max-radius", "1.0",
        "--out", out.to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&run), 2);

    let bad = dir.path().join("bad.csv");
    write(&bad, "0,0\n0.5,oops\n");
    let run = uplap(&[
        "rips",
        "--points", bad.to_str().unwrap(),
        "--max-radius", "1.0",
        "--out", out.to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&run), 2);
    assert!(stderr(&run).contains("line 2"), "{}", stderr(&run));
}

#[test]
fn laplacian_exports_matrix_spectrum_and_boundary() {
    let dir = tempfile::tempdir().unwrap();
    let filtration = pentagon_csv(dir.path());
    let matrix = dir.path().join("lap.csv");
    let spectrum = dir.path().join("spec.csv");
    let boundary = dir.path().join("b1.csv");
    let run = uplap(&[
        "laplacian",
        "--filtration", &filtration,
        "--k", "0",
        "--out", matrix.to_str().unwrap(),
        "--spectrum", spectrum.to_str().unwrap(),
        "--boundary", boundary.to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&run), 0, "{}", stderr(&run));
    assert!(stdout(&run).contains("5x5"));

    let rows: Vec<String> = std::fs::read_to_string(&matrix)
        .unwrap()
        .lines()
        .map(String::from)
        .collect();
    assert_eq!(rows.len(), 5);
    assert_eq!(rows[0].split(',').count(), 5);
    let spec_text = std::fs::read_to_string(&spectrum).unwrap();
    assert!(spec_text.starts_with("index,value"));
    assert_eq!(spec_text.lines().count(), 6);
    // B_1 has two signed entries per edge
    let boundary_text = std::fs::read_to_string(&boundary).unwrap();
    assert!(boundary_text.starts_with("row,col,value"));
    assert_eq!(boundary_text.lines().count(), 1 + 10);
}

#[test]
fn insert_appends_and_validates_closure() {
    let dir = tempfile::tempdir().unwrap();
    let filtration = pentagon_csv(dir.path());
    let out = dir.path().join("extended.csv");

    let run = uplap(&[
        "insert",
        "--filtration", &filtration,
        "--simplex", "0-1-2",
        "--out", out.to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&run), 0, "{}", stderr(&run));
    let extended =
        Filtration::parse_csv(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(extended.full_complex().simplex_count(2), 1);

    // triangle 1-3-4 is missing edges, so closure fails
    let run = uplap(&[
        "insert",
        "--filtration", &filtration,
        "--simplex", "1-3-4",
        "--out", out.to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&run), 2);
}

#[test]
fn certify_pentagon_passes_and_writes_certificate() {
    let dir = tempfile::tempdir().unwrap();
    let filtration = pentagon_csv(dir.path());
    let cert = dir.path().join("cert.txt");
    let csv = dir.path().join("cert.csv");
    let run = uplap(&[
        "certify",
        "--filtration", &filtration,
        "--k", "1",
        "--simplex", "0-1-2",
        "--out", cert.to_str().unwrap(),
        "--csv", csv.to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&run), 0, "{}", stderr(&run));
    let text = std::fs::read_to_string(&cert).unwrap();
    assert!(text.contains("0.866025403784"), "{text}");
    assert!(text.contains("two-sided trailing: VIOLATED"), "{text}");
    let csv_text = std::fs::read_to_string(&csv).unwrap();
    assert!(csv_text.lines().nth(1).unwrap().starts_with("0,1,"));
}

#[test]
fn certify_two_sided_gate_fails_on_pentagon() {
    let dir = tempfile::tempdir().unwrap();
    let filtration = pentagon_csv(dir.path());
    let cert = dir.path().join("cert.txt");
    let run = uplap(&[
        "certify",
        "--filtration", &filtration,
        "--k", "1",
        "--simplex", "0-1-2",
        "--two-sided",
        "--out", cert.to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&run), 1);
    assert!(stderr(&run).contains("trailing clause"), "{}", stderr(&run));
    // the certificate is still written
    assert!(cert.exists());
}

#[test]
fn certify_rejects_missing_faces_and_bad_simplices() {
    let dir = tempfile::tempdir().unwrap();
    let filtration = pentagon_csv(dir.path());
    let cert = dir.path().join("cert.txt");
    let run = uplap(&[
        "certify",
        "--filtration", &filtration,
        "--k", "1",
        "--simplex", "1-3-4",
        "--out", cert.to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&run), 2);
    assert!(stderr(&run).contains("missing face"), "{}", stderr(&run));

    let run = uplap(&[
        "certify",
        "--filtration", &filtration,
        "--k", "1",
        "--simplex", "2-1",
        "--out", cert.to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&run), 2);
}

#[test]
fn experiment_writes_reports_and_respects_precedence() {
    let dir = tempfile::tempdir().unwrap();
    let config = dir.path().join("config.toml");
    write(&config, "n_points = 10\nn_insertions = 3\nseed = 7\n");
    let out_dir = dir.path().join("report");

    // the flag overrides the config file's n_insertions = 3
    let run = uplap(&[
        "experiment",
        "--config", config.to_str().unwrap(),
        "--insertions", "2",
        "--out-dir", out_dir.to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&run), 0, "{}", stderr(&run));

    let certs = std::fs::read_to_string(out_dir.join("certificates.csv")).unwrap();
    assert_eq!(certs.lines().count(), 1 + 2, "{certs}");
    assert!(out_dir.join("scatter.csv").exists());
    let summary = std::fs::read_to_string(out_dir.join("summary.txt")).unwrap();
    assert!(summary.contains("verdict            : PASS"), "{summary}");
}

#[test]
fn experiment_errors_include_the_available_count() {
    let dir = tempfile::tempdir().unwrap();
    let out_dir = dir.path().join("report");
    let run = uplap(&[
        "experiment",
        "--points", "4",
        "--insertions", "500",
        "--out-dir", out_dir.to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&run), 2);
    assert!(stderr(&run).contains("found only"), "{}", stderr(&run));
}

#[test]
fn experiment_with_zero_insertions_passes_vacuously() {
    let dir = tempfile::tempdir().unwrap();
    let out_dir = dir.path().join("report");
    let run = uplap(&[
        "experiment",
        "--points", "5",
        "--insertions", "0",
        "--out-dir", out_dir.to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&run), 0, "{}", stderr(&run));
    let scatter = std::fs::read_to_string(out_dir.join("scatter.csv")).unwrap();
    assert_eq!(scatter.lines().count(), 1); // header only
}

#[test]
fn experiment_rejects_unknown_config_keys() {
    let dir = tempfile::tempdir().unwrap();
    let config = dir.path().join("config.toml");
    write(&config, "points = 10\n"); // wrong key name
    let run = uplap(&[
        "experiment",
        "--config", config.to_str().unwrap(),
        "--out-dir", dir.path().join("r").to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&run), 2);
}

#[test]
fn sharpness_and_pentagon_examples_exit_zero() {
    let run = uplap(&["sharpness"]);
    assert_eq!(exit_code(&run), 0, "{}", stderr(&run));
    assert!(stdout(&run).contains("[0.0, 2.0]"), "{}", stdout(&run));
    assert!(stdout(&run).contains("[0.0, 4.0]"), "{}", stdout(&run));

    let dir = tempfile::tempdir().unwrap();
    let out_dir = dir.path().join("pentagon");
    let run = uplap(&["pentagon", "--out-dir", out_dir.to_str().unwrap()]);
    assert_eq!(exit_code(&run), 0, "{}", stderr(&run));
    assert!(stdout(&run).contains("trailing clause"), "{}", stdout(&run));
    assert!(out_dir.join("spectrum_after.csv").exists());

    // the emitted filtration replays through certify
    let cert = dir.path().join("cert.txt");
    let run = uplap(&[
        "certify",
        "--filtration", out_dir.join("pentagon.csv").to_str().unwrap(),
        "--k", "1",
        "--simplex", "0-1-2",
        "--out", cert.to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&run), 0, "{}", stderr(&run));
}

#[test]
fn campaign_passes_and_honors_flags() {
    let run = uplap(&["campaign", "--trials", "25", "--seed", "3", "--max-n", "5"]);
    assert_eq!(exit_code(&run), 0, "{}", stderr(&run));
    assert!(stdout(&run).contains("25 trials"));

    let run = uplap(&["campaign", "--trials", "0"]);
    assert_eq!(exit_code(&run), 2);
}

#[test]
fn plot_renders_deterministic_svg() {
    let dir = tempfile::tempdir().unwrap();
    let scatter = dir.path().join("scatter.csv");
    write(
        &scatter,
        "spike_norm,delta,bound\n1.7320508,3,3.4641016\n1.7320508,0.5,3.4641016\n",
    );
    let svg_a = dir.path().join("a.svg");
    let svg_b = dir.path().join("b.svg");
    for out in [&svg_a, &svg_b] {
        let run = uplap(&[
            "plot",
            "--scatter", scatter.to_str().unwrap(),
            "--out", out.to_str().unwrap(),
        ]);
        assert_eq!(exit_code(&run), 0, "{}", stderr(&run));
    }
    let a = std::fs::read(&svg_a).unwrap();
    let b = std::fs::read(&svg_b).unwrap();
    assert_eq!(a, b);
    let text = String::from_utf8(a).unwrap();
    assert!(text.starts_with("<svg"));
    assert_eq!(text.matches("<circle").count(), 2);
    assert!(text.contains("stroke-dasharray"));
}

#[test]
fn plot_handles_empty_and_rejects_malformed_scatter() {
    let dir = tempfile::tempdir().unwrap();
    let empty = dir.path().join("empty.csv");
    write(&empty, "spike_norm,delta,bound\n");
    let svg = dir.path().join("empty.svg");
    let run = uplap(&[
        "plot",
        "--scatter", empty.to_str().unwrap(),
        "--out", svg.to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&run), 0, "{}", stderr(&run));
    let text = std::fs::read_to_string(&svg).unwrap();
    assert!(text.starts_with("<svg") && !text.contains("<circle"));

    let bad = dir.path().join("bad.csv");
    write(&bad, "spike_norm,delta\n1.0,ok\n");
    let run = uplap(&[
        "plot",
        "--scatter", bad.to_str().unwrap(),
        "--out", svg.to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&run), 2);
    assert!(stderr(&run).contains("line 2"), "{}", stderr(&run));
}

#[test]
fn unknown_flags_are_usage_errors() {
    let run = uplap(&["sharpness", "--no-such-flag"]);
    assert_eq!(exit_code(&run), 2);

    let run = uplap(&["no-such-verb"]);
    assert_eq!(exit_code(&run), 2);
}

#[test]
fn tolerance_env_var_is_honored_and_validated() {
    let dir = tempfile::tempdir().unwrap();
    let filtration = pentagon_csv(dir.path());
    let cert = dir.path().join("cert.txt");

    let run = uplap_env(
        &[
            "certify",
            "--filtration", &filtration,
            "--k", "1",
            "--simplex", "0-1-2",
            "--out", cert.to_str().unwrap(),
        ],
        "UPLAP_TOL",
        "1e-7",
    );
    assert_eq!(exit_code(&run), 0, "{}", stderr(&run));
    assert!(std::fs::read_to_string(&cert).unwrap().contains("1e-7"));

    let run = uplap_env(
        &[
            "certify",
            "--filtration", &filtration,
            "--k", "1",
            "--simplex", "0-1-2",
            "--out", cert.to_str().unwrap(),
        ],
        "UPLAP_TOL",
        "not-a-number",
    );
    assert_eq!(exit_code(&run), 2);
}
