use spinstar_core::dynamics::{evolve_single, evolve_two_qubit, DynamicsError, Trajectory};
use spinstar_core::measures::{
    concurrence, qsl_profile, qsl_time, quantum_discord, sigma_z_expectation, trace_distance,
    von_neumann_entropy, MeasureError, QslResult,
};
use spinstar_core::models::{ModelConfig, TwoQubitConfig};
use spinstar_core::numerics::C64;
use spinstar_core::par;

use crate::spec::{bath_label, ExperimentKind, ExperimentSpec, ModelParams};
use crate::CliError;

/// One CSV's worth of output. `label` distinguishes sibling files.
#[derive(Clone, Debug, PartialEq)]
pub struct Table {
    pub label: String,
    pub header: Vec<String>,
    pub rows: Vec<Vec<f64>>,
}

impl Table {
    fn new(label: impl Into<String>, header: &[&str]) -> Self {
        Table { label: label.into(), header: header.iter().map(|s| s.to_string()).collect(), rows: Vec::new() }
    }
}

impl From<DynamicsError> for CliError {
    fn from(e: DynamicsError) -> Self {
        match e {
            DynamicsError::PositivityViolation { .. } => CliError::Numerical(e.to_string()),
            other => CliError::Config(other.to_string()),
        }
    }
}

impl From<MeasureError> for CliError {
    fn from(e: MeasureError) -> Self {
        CliError::Numerical(e.to_string())
    }
}

const QSL_COLUMNS: [&str; 5] = ["tau_qsl", "bures_angle", "lambda_op", "lambda_hs", "lambda_tr"];

fn qsl_row(q: &QslResult) -> [f64; 5] {
    [q.tau_qsl, q.bures_angle, q.lambda_op, q.lambda_hs, q.lambda_tr]
}

/// Uniform grid `0..=stop` with `intervals` steps.
fn uniform(stop: f64, intervals: usize) -> Vec<f64> {
    (0..=intervals)
        .map(|k| if k == intervals { stop } else { stop * k as f64 / intervals as f64 })
        .collect()
}

/// Fine quadrature grid from 0 containing every output point of `spec.grid`
/// (which starts at 0), and the stride between output points on it.
fn profile_grid(spec: &ExperimentSpec) -> (Vec<f64>, usize) {
    let g = &spec.grid;
    let per_interval = ((spec.quadrature_intervals as f64 * (g.stop - g.start) / (g.points - 1) as f64).ceil() as usize).max(1);
    (uniform(g.stop, per_interval * (g.points - 1)), per_interval)
}

fn evolve_two(cfg: &TwoQubitConfig, spec: &ExperimentSpec, times: &[f64], gens: bool) -> Result<Trajectory, CliError> {
    Ok(evolve_two_qubit(cfg, &spec.initial_state.matrix(), times, gens)?)
}

fn evolve_one(cfg: &ModelConfig, spec: &ExperimentSpec, times: &[f64], gens: bool) -> Result<Trajectory, CliError> {
    Ok(evolve_single(cfg, &spec.initial_state.matrix(), times, gens)?)
}

fn map_rows<F>(times: &[f64], states: &[spinstar_core::numerics::DenseMatrix], f: F) -> Result<Vec<Vec<f64>>, CliError>
where
    F: Fn(&spinstar_core::numerics::DenseMatrix) -> Result<Vec<f64>, CliError> + Sync + Send,
{
    let rows = par::try_map_range(times.len(), |k| {
        let mut row = vec![times[k]];
        row.extend(f(&states[k])?);
        Ok::<_, CliError>(row)
    })?;
    Ok(rows)
}

/// Runs an experiment and returns its tables in a fixed order.
pub fn run(spec: &ExperimentSpec) -> Result<Vec<Table>, CliError> {
    spec.validate()?;
    use ExperimentKind::*;
    let axis = spec.kind.axis_name();
    let grid = spec.grid.values();
    match spec.kind {
        SigmaZ | EntropySingle => {
            let col = if spec.kind == SigmaZ { "sigma_z" } else { "entropy" };
            let sign = if spec.flip_sigma_z { -1.0 } else { 1.0 };
            let mut tables = Vec::new();
            for cfg in spec.single_configs(0.0) {
                let traj = evolve_one(&cfg, spec, &grid, false)?;
                let mut t = Table::new(label_if(spec.bath_variants.len() > 1, bath_label(cfg.bath_interacting)), &[axis, col]);
                t.rows = map_rows(&grid, &traj.states, |rho| {
                    Ok(vec![if spec.kind == SigmaZ {
                        sign * sigma_z_expectation(rho)
                    } else {
                        von_neumann_entropy(rho, spec.entropy_base)?
                    }])
                })?;
                tables.push(t);
            }
            Ok(tables)
        }
        TraceDistanceSingle => {
            let cfgs = spec.single_configs(0.0);
            let a = evolve_one(&cfgs[0], spec, &grid, false)?;
            let b = evolve_one(&cfgs[1], spec, &grid, false)?;
            Ok(vec![distance_table(&grid, &a, &b)?])
        }
        TraceDistanceTwoGlobal | TraceDistanceTwoLocal => {
            let cfgs = spec.two_configs(None);
            let a = evolve_two(&cfgs[0].1, spec, &grid, false)?;
            let b = evolve_two(&cfgs[1].1, spec, &grid, false)?;
            Ok(vec![distance_table(&grid, &a, &b)?])
        }
        EntropyTwo => {
            let mut tables = Vec::new();
            for (label, cfg) in spec.two_configs(None) {
                let traj = evolve_two(&cfg, spec, &grid, false)?;
                let mut t = Table::new(label, &[axis, "entropy"]);
                t.rows = map_rows(&grid, &traj.states, |rho| Ok(vec![von_neumann_entropy(rho, spec.entropy_base)?]))?;
                tables.push(t);
            }
            Ok(tables)
        }
        ConcurrenceCouplingAxis => {
            let mut tables = Vec::new();
            for (label, cfg) in spec.two_configs(None) {
                let traj = evolve_two(&cfg, spec, &grid, false)?;
                let mut t = Table::new(label, &[axis, "concurrence"]);
                t.rows = map_rows(&grid, &traj.states, |rho| Ok(vec![concurrence(rho)?]))?;
                tables.push(t);
            }
            Ok(tables)
        }
        QslSweepEpsilon => qsl_sweep_epsilon(spec, &grid),
        QslSweepTau => qsl_sweep_tau(spec),
        CorrelationsTimeLocal | CorrelationsTimeGlobal => correlations_time(spec),
        CorrelationsSweepDelta => correlations_sweep_delta(spec, &grid),
    }
}

fn label_if(cond: bool, label: &str) -> String {
    if cond { label.to_string() } else { String::new() }
}

fn distance_table(grid: &[f64], a: &Trajectory, b: &Trajectory) -> Result<Table, CliError> {
    let mut t = Table::new("", &["t", "trace_distance"]);
    t.rows = par::try_map_range(grid.len(), |k| Ok::<_, CliError>(vec![grid[k], trace_distance(&a.states[k], &b.states[k])?]))?;
    Ok(t)
}

fn single_n_list(spec: &ExperimentSpec) -> &[u32] {
    match &spec.model {
        ModelParams::Single { n_bath, .. } => n_bath,
        ModelParams::Two { .. } => &[],
    }
}

fn qsl_header(axis: &str) -> Vec<&str> {
    let mut h = vec![axis, "n_bath"];
    h.extend(QSL_COLUMNS);
    h
}

fn qsl_sweep_epsilon(spec: &ExperimentSpec, grid: &[f64]) -> Result<Vec<Table>, CliError> {
    let tau = spec.tau.expect("validated");
    let times = uniform(tau, spec.quadrature_intervals);
    let psi0 = spec.initial_state.pure_vector().expect("validated");
    let n_list = single_n_list(spec);
    let mut tables = Vec::new();
    for &interacting in &spec.bath_variants {
        let mut t = Table::new(label_if(spec.bath_variants.len() > 1, bath_label(interacting)), &qsl_header("epsilon"));
        for &n in n_list {
            let rows = par::try_map_range(grid.len(), |k| {
                let cfg = spec
                    .single_configs(grid[k])
                    .into_iter()
                    .find(|c| c.bath_interacting == interacting && c.n_bath == n)
                    .expect("variant exists");
                let traj = evolve_one(&cfg, spec, &times, true)?;
                let q = qsl_time(&traj, &psi0, tau)?;
                let mut row = vec![grid[k], n as f64];
                row.extend(qsl_row(&q));
                Ok::<_, CliError>(row)
            })?;
            t.rows.extend(rows);
        }
        tables.push(t);
    }
    Ok(tables)
}

fn qsl_sweep_tau(spec: &ExperimentSpec) -> Result<Vec<Table>, CliError> {
    let (fine, stride) = profile_grid(spec);
    let psi0 = spec.initial_state.pure_vector().expect("validated");
    let mut tables = Vec::new();
    let variants = spec.bath_variants.len();
    let cfgs = spec.single_configs(0.0);
    for &interacting in &spec.bath_variants {
        let mut t = Table::new(label_if(variants > 1, bath_label(interacting)), &qsl_header("tau"));
        for cfg in cfgs.iter().filter(|c| c.bath_interacting == interacting) {
            let traj = evolve_one(cfg, spec, &fine, true)?;
            let profile = qsl_profile(&traj, &psi0)?;
            for q in profile.iter().step_by(stride) {
                let mut row = vec![q.tau, cfg.n_bath as f64];
                row.extend(qsl_row(q));
                t.rows.push(row);
            }
        }
        tables.push(t);
    }
    Ok(tables)
}

const CORRELATION_COLUMNS: [&str; 7] =
    ["tau_qsl", "concurrence", "discord", "bures_angle", "lambda_op", "lambda_hs", "lambda_tr"];

fn correlation_header(axis: &str) -> Vec<&str> {
    let mut h = vec![axis];
    h.extend(CORRELATION_COLUMNS);
    h
}

fn correlation_row(lead: f64, q: &QslResult, rho: &spinstar_core::numerics::DenseMatrix) -> Result<Vec<f64>, CliError> {
    Ok(vec![
        lead,
        q.tau_qsl,
        concurrence(rho)?,
        quantum_discord(rho)?.discord,
        q.bures_angle,
        q.lambda_op,
        q.lambda_hs,
        q.lambda_tr,
    ])
}

fn correlations_time(spec: &ExperimentSpec) -> Result<Vec<Table>, CliError> {
    let (fine, stride) = profile_grid(spec);
    let psi0: Vec<C64> = spec.initial_state.pure_vector().expect("validated");
    let mut tables = Vec::new();
    for (label, cfg) in spec.two_configs(None) {
        let traj = evolve_two(&cfg, spec, &fine, true)?;
        let profile = qsl_profile(&traj, &psi0)?;
        let picks: Vec<usize> = (0..fine.len()).step_by(stride).collect();
        let mut t = Table::new(label, &correlation_header("t"));
        t.rows = par::try_map_range(picks.len(), |i| {
            let k = picks[i];
            correlation_row(profile[k].tau, &profile[k], &traj.states[k])
        })?;
        tables.push(t);
    }
    Ok(tables)
}

fn correlations_sweep_delta(spec: &ExperimentSpec, grid: &[f64]) -> Result<Vec<Table>, CliError> {
    let tau = spec.tau.expect("validated");
    let times = uniform(tau, spec.quadrature_intervals);
    let psi0 = spec.initial_state.pure_vector().expect("validated");
    let labels = spec.two_configs(None);
    let mut tables = Vec::new();
    for (idx, (label, _)) in labels.iter().enumerate() {
        let mut t = Table::new(label.clone(), &correlation_header("delta"));
        t.rows = par::try_map_range(grid.len(), |k| {
            let cfg = spec.two_configs(Some(grid[k]))[idx].1;
            let traj = evolve_two(&cfg, spec, &times, true)?;
            let q = qsl_time(&traj, &psi0, tau)?;
            correlation_row(grid[k], &q, traj.states.last().unwrap())
        })?;
        tables.push(t);
    }
    Ok(tables)
}
