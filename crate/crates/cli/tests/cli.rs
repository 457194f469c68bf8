use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn spinstar(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_spinstar")).args(args).output().expect("binary runs")
}

fn experiment(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../experiments").join(format!("{name}.ini"))
}

fn write_spec(dir: &Path, body: &str) -> PathBuf {
    let path = dir.join("spec.ini");
    std::fs::write(&path, body).unwrap();
    path
}

const SMALL_SIGMA_Z: &str = "kind = sigma_z\nbath = interacting\nomega0 = 2\nomega = 2\nepsilon = 1\nn_bath = 4\ntemperature = 1\n\
                             grid_start = 0\ngrid_stop = 1\ngrid_points = 3\n";

#[test]
fn list_experiments_names_every_kind() {
    let out = spinstar(&["list-experiments"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    for kind in spinstar::ExperimentKind::ALL {
        assert!(text.contains(kind.name()), "{}", kind.name());
    }
}

#[test]
fn checked_in_specs_validate() {
    for entry in std::fs::read_dir(experiment("x").parent().unwrap()).unwrap() {
        let path = entry.unwrap().path();
        let out = spinstar(&["validate", path.to_str().unwrap()]);
        assert!(out.status.success(), "{}: {}", path.display(), String::from_utf8_lossy(&out.stderr));
    }
}

#[test]
fn config_errors_exit_with_two() {
    let dir = tempfile::tempdir().unwrap();
    let typo = write_spec(dir.path(), &format!("{SMALL_SIGMA_Z}epsilom = 3\n"));
    assert_eq!(spinstar(&["validate", typo.to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(spinstar(&["run", dir.path().join("missing.ini").to_str().unwrap()]).status.code(), Some(2));
    let spec = experiment("sigma_z_single_qubit");
    let bad = spinstar(&["validate", spec.to_str().unwrap(), "--override", "temperature=-1"]);
    assert_eq!(bad.status.code(), Some(2));
    let kind = spinstar(&["validate", spec.to_str().unwrap(), "--override", "kind=nonsense"]);
    assert_eq!(kind.status.code(), Some(2));
}

#[test]
fn size_caps_exit_with_three() {
    let single = experiment("sigma_z_single_qubit");
    let out = spinstar(&["validate", single.to_str().unwrap(), "--override", "n_bath=201"]);
    assert_eq!(out.status.code(), Some(3));
    let global = experiment("trace_distance_two_qubit_global");
    let out = spinstar(&["run", global.to_str().unwrap(), "--override", "m_bath=21"]);
    assert_eq!(out.status.code(), Some(3));
    let local = experiment("trace_distance_two_qubit_local");
    assert!(spinstar(&["validate", local.to_str().unwrap(), "--override", "n_bath=200"]).status.success());
}

#[test]
fn run_writes_csv_and_overrides_win() {
    let dir = tempfile::tempdir().unwrap();
    let spec = write_spec(dir.path(), SMALL_SIGMA_Z);
    let out = dir.path().join("nested/sz.csv");
    let status = spinstar(&[
        "run",
        spec.to_str().unwrap(),
        "--out",
        out.to_str().unwrap(),
        "--threads",
        "2",
        "--override",
        "grid_points=4",
        "--override",
        "grid_points=6",
    ]);
    assert!(status.status.success(), "{}", String::from_utf8_lossy(&status.stderr));
    let text = std::fs::read_to_string(&out).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "t,sigma_z");
    assert_eq!(lines.len(), 7);
    let first: Vec<f64> = lines[1].split(',').map(|v| v.parse().unwrap()).collect();
    assert_eq!(first[0], 0.0);
    assert!((first[1] + 1.0).abs() < 1e-12);

    let flipped = dir.path().join("flip.csv");
    let status = spinstar(&["run", spec.to_str().unwrap(), "--out", flipped.to_str().unwrap(), "--flip-sigma-z"]);
    assert!(status.status.success());
    let line = std::fs::read_to_string(&flipped).unwrap().lines().nth(1).unwrap().to_string();
    let v: f64 = line.split(',').nth(1).unwrap().parse().unwrap();
    assert!((v - 1.0).abs() < 1e-12);
}

#[test]
fn zero_threads_is_a_config_error() {
    let dir = tempfile::tempdir().unwrap();
    let spec = write_spec(dir.path(), SMALL_SIGMA_Z);
    let out = spinstar(&["run", spec.to_str().unwrap(), "--out", dir.path().join("o.csv").to_str().unwrap(), "--threads", "0"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn numerical_diagnostics_map_to_four() {
    assert_eq!(spinstar::CliError::Numerical("x".into()).exit_code(), 4);
}
