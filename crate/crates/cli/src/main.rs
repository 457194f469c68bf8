use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use spinstar::{load_spec, output_base, run_to_files, CliError, ExperimentKind};

#[derive(Parser)]
#[command(name = "spinstar", version, about = "Central spin model experiments to CSV")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run an experiment spec and write its CSV output.
    Run {
        spec: PathBuf,
        /// Output path (a suffix is added per variant when a run writes several files).
        #[arg(long)]
        out: Option<PathBuf>,
        /// Worker threads; defaults to all cores.
        #[arg(long)]
        threads: Option<usize>,
        /// Replace or add a spec entry, `key=value`; may be repeated.
        #[arg(long = "override", value_name = "KEY=VALUE")]
        overrides: Vec<String>,
        /// Report -<sigma_z> instead of <sigma_z> (sigma_z experiments only).
        #[arg(long)]
        flip_sigma_z: bool,
    },
    /// List the experiment kinds a spec can name.
    ListExperiments,
    /// Parse and check a spec without running it.
    Validate {
        spec: PathBuf,
        #[arg(long = "override", value_name = "KEY=VALUE")]
        overrides: Vec<String>,
    },
}

fn with_threads<R: Send>(threads: Option<usize>, f: impl FnOnce() -> R + Send) -> Result<R, CliError> {
    match threads {
        None => Ok(f()),
        Some(0) => Err(CliError::Config("--threads must be at least 1".into())),
        #[cfg(feature = "parallel")]
        Some(k) => rayon::ThreadPoolBuilder::new()
            .num_threads(k)
            .build()
            .map(|pool| pool.install(f))
            .map_err(|e| CliError::Config(format!("cannot start thread pool: {e}"))),
        #[cfg(not(feature = "parallel"))]
        Some(_) => Ok(f()),
    }
}

fn execute(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Run { spec, out, threads, mut overrides, flip_sigma_z } => {
            if flip_sigma_z {
                overrides.push("flip_sigma_z=true".into());
            }
            let spec = load_spec(&spec, &overrides)?;
            let paths = with_threads(threads, || run_to_files(&spec, out.as_deref()))??;
            for p in paths {
                eprintln!("wrote {}", p.display());
            }
            Ok(())
        }
        Command::ListExperiments => {
            for k in ExperimentKind::ALL {
                println!("{:<28}{}", k.name(), k.description());
            }
            Ok(())
        }
        Command::Validate { spec, overrides } => {
            let s = load_spec(&spec, &overrides)?;
            println!("ok: {} -> {}", s.kind.name(), output_base(&s, None).display());
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    match execute(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("spinstar: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
