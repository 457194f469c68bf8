//! Experiment runner behind the `spinstar` binary: flat config files in,
//! CSV tables out.

pub mod config;
pub mod csv;
pub mod run;
pub mod spec;

use std::path::{Path, PathBuf};

use thiserror::Error;

pub use config::RawConfig;
pub use run::{run, Table};
pub use spec::{ExperimentKind, ExperimentSpec};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("config error: {0}")]
    Config(String),
    #[error("size cap exceeded: {0}")]
    CapExceeded(String),
    #[error("numerical diagnostic: {0}")]
    Numerical(String),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Config(_) => 2,
            CliError::CapExceeded(_) => 3,
            CliError::Numerical(_) => 4,
            CliError::Io(_) => 1,
        }
    }
}

/// Reads a spec file and applies overrides.
pub fn load_spec<S: AsRef<str>>(path: &Path, overrides: &[S]) -> Result<ExperimentSpec, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Config(format!("cannot read {}: {e}", path.display())))?;
    let mut cfg = RawConfig::parse(&text)?;
    cfg.apply_overrides(overrides)?;
    ExperimentSpec::from_config(&cfg)
}

/// Output base path: `--out`, then the spec's `output`, then `<kind>.csv`.
pub fn output_base(spec: &ExperimentSpec, out: Option<&Path>) -> PathBuf {
    out.map(Path::to_path_buf)
        .or_else(|| spec.output.clone())
        .unwrap_or_else(|| PathBuf::from(format!("{}.csv", spec.kind.name())))
}

/// Runs a spec and writes its CSV files, returning their paths.
pub fn run_to_files(spec: &ExperimentSpec, out: Option<&Path>) -> Result<Vec<PathBuf>, CliError> {
    let tables = run(spec)?;
    Ok(csv::write_tables(&output_base(spec, out), &tables)?)
}
