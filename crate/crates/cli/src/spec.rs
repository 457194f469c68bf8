use std::path::PathBuf;
use std::str::FromStr;

use num_complex::Complex64;
use spinstar_core::measures::LogBase;
use spinstar_core::models::{CouplingAxis, ModelConfig, Scenario, TwoQubitConfig};
use spinstar_core::numerics::{hermitian_eig, DenseMatrix, C64};

use crate::config::RawConfig;
use crate::CliError;

/// Largest single-qubit bath.
pub const CAP_SINGLE_BATH: u32 = 200;
/// Largest bath per qubit in the global two-qubit model.
pub const CAP_GLOBAL_BATH: u32 = 20;
/// Largest bath per qubit in the local two-qubit model.
pub const CAP_LOCAL_BATH: u32 = 200;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum ExperimentKind {
    SigmaZ,
    TraceDistanceSingle,
    TraceDistanceTwoGlobal,
    TraceDistanceTwoLocal,
    EntropySingle,
    EntropyTwo,
    QslSweepEpsilon,
    QslSweepTau,
    CorrelationsTimeLocal,
    CorrelationsTimeGlobal,
    CorrelationsSweepDelta,
    ConcurrenceCouplingAxis,
}

impl ExperimentKind {
    pub const ALL: [ExperimentKind; 12] = [
        ExperimentKind::SigmaZ,
        ExperimentKind::TraceDistanceSingle,
        ExperimentKind::TraceDistanceTwoGlobal,
        ExperimentKind::TraceDistanceTwoLocal,
        ExperimentKind::EntropySingle,
        ExperimentKind::EntropyTwo,
        ExperimentKind::QslSweepEpsilon,
        ExperimentKind::QslSweepTau,
        ExperimentKind::CorrelationsTimeLocal,
        ExperimentKind::CorrelationsTimeGlobal,
        ExperimentKind::CorrelationsSweepDelta,
        ExperimentKind::ConcurrenceCouplingAxis,
    ];

    pub fn name(self) -> &'static str {
        use ExperimentKind::*;
        match self {
            SigmaZ => "sigma_z",
            TraceDistanceSingle => "trace_distance_single",
            TraceDistanceTwoGlobal => "trace_distance_two_global",
            TraceDistanceTwoLocal => "trace_distance_two_local",
            EntropySingle => "entropy_single",
            EntropyTwo => "entropy_two",
            QslSweepEpsilon => "qsl_sweep_epsilon",
            QslSweepTau => "qsl_sweep_tau",
            CorrelationsTimeLocal => "correlations_time_local",
            CorrelationsTimeGlobal => "correlations_time_global",
            CorrelationsSweepDelta => "correlations_sweep_delta",
            ConcurrenceCouplingAxis => "concurrence_coupling_axis",
        }
    }

    pub fn description(self) -> &'static str {
        use ExperimentKind::*;
        match self {
            SigmaZ => "single qubit <sigma_z>(t), one file per bath variant",
            TraceDistanceSingle => "single qubit: trace distance between interacting and free bath states vs t",
            TraceDistanceTwoGlobal => "two qubits, global bath: interacting vs free bath trace distance vs t",
            TraceDistanceTwoLocal => "two qubits, local baths: interacting vs free bath trace distance vs t",
            EntropySingle => "single qubit von Neumann entropy vs t, one file per bath variant",
            EntropyTwo => "two-qubit von Neumann entropy vs t (scenario = local|global), per bath variant",
            QslSweepEpsilon => "single qubit QSL time vs coupling epsilon at fixed tau, for each n_bath",
            QslSweepTau => "single qubit QSL time vs driving time tau, for each n_bath",
            CorrelationsTimeLocal => "local baths: QSL time, concurrence, discord vs t from Bell state",
            CorrelationsTimeGlobal => "global bath: QSL time, concurrence, discord vs t from Bell state",
            CorrelationsSweepDelta => "global bath: QSL time, concurrence, discord at fixed tau vs delta",
            ConcurrenceCouplingAxis => "global bath: concurrence vs t for xx and zz central coupling",
        }
    }

    pub fn is_single_qubit(self) -> bool {
        use ExperimentKind::*;
        matches!(self, SigmaZ | TraceDistanceSingle | EntropySingle | QslSweepEpsilon | QslSweepTau)
    }

    /// Kinds whose output grid is a time axis sampled from one trajectory
    /// starting at t = 0 and integrated with the QSL quadrature.
    pub fn uses_time_profile(self) -> bool {
        use ExperimentKind::*;
        matches!(self, QslSweepTau | CorrelationsTimeLocal | CorrelationsTimeGlobal)
    }

    fn needs_tau(self) -> bool {
        matches!(self, ExperimentKind::QslSweepEpsilon | ExperimentKind::CorrelationsSweepDelta)
    }

    /// Kinds comparing the interacting and free bath inside one output.
    fn compares_baths(self) -> bool {
        use ExperimentKind::*;
        matches!(self, TraceDistanceSingle | TraceDistanceTwoGlobal | TraceDistanceTwoLocal)
    }

    fn default_grid(self) -> GridSpec {
        use ExperimentKind::*;
        let (start, stop, points) = match self {
            SigmaZ => (0.0, 25.0, 500),
            QslSweepEpsilon => (0.0, 5.0, 200),
            QslSweepTau => (0.0, 10.0, 200),
            CorrelationsSweepDelta => (0.0, 10.0, 200),
            _ => (0.0, 20.0, 500),
        };
        GridSpec { start, stop, points }
    }

    fn default_initial_state(self) -> InitialState {
        use ExperimentKind::*;
        match self {
            CorrelationsTimeLocal | CorrelationsTimeGlobal | CorrelationsSweepDelta => InitialState::BellPhiPlus,
            k if k.is_single_qubit() => InitialState::Ket1,
            _ => InitialState::Ket11,
        }
    }

    /// Axis label of the first CSV column.
    pub fn axis_name(self) -> &'static str {
        match self {
            ExperimentKind::QslSweepEpsilon => "epsilon",
            ExperimentKind::QslSweepTau => "tau",
            ExperimentKind::CorrelationsSweepDelta => "delta",
            _ => "t",
        }
    }
}

impl FromStr for ExperimentKind {
    type Err = CliError;
    fn from_str(s: &str) -> Result<Self, CliError> {
        ExperimentKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| CliError::Config(format!("unknown experiment kind `{s}` (see list-experiments)")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GridSpec {
    pub start: f64,
    pub stop: f64,
    pub points: usize,
}

impl GridSpec {
    pub fn values(&self) -> Vec<f64> {
        let n = self.points - 1;
        (0..self.points)
            .map(|k| if k == n { self.stop } else { self.start + (self.stop - self.start) * k as f64 / n as f64 })
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum InitialState {
    Ket0,
    Ket1,
    Plus,
    Ket00,
    Ket11,
    BellPhiPlus,
    Explicit(DenseMatrix),
}

impl InitialState {
    fn parse(name: &str, matrix: Option<&str>) -> Result<Self, CliError> {
        let state = match name {
            "ket0" => InitialState::Ket0,
            "ket1" => InitialState::Ket1,
            "plus" => InitialState::Plus,
            "ket00" => InitialState::Ket00,
            "ket11" => InitialState::Ket11,
            "bell_phi_plus" => InitialState::BellPhiPlus,
            "explicit" => {
                let text = matrix.ok_or_else(|| CliError::Config("initial_state = explicit needs initial_matrix".into()))?;
                let entries = text
                    .split(',')
                    .map(|s| {
                        Complex64::from_str(s.trim())
                            .map_err(|_| CliError::Config(format!("initial_matrix: cannot parse `{}`", s.trim())))
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                let m = DenseMatrix::from_vec(entries)
                    .map_err(|_| CliError::Config("initial_matrix must have 4 or 16 entries".into()))?;
                InitialState::Explicit(m)
            }
            other => return Err(CliError::Config(format!("unknown initial_state `{other}`"))),
        };
        if matrix.is_some() && !matches!(state, InitialState::Explicit(_)) {
            return Err(CliError::Config("initial_matrix is only used with initial_state = explicit".into()));
        }
        Ok(state)
    }

    fn ket(&self) -> Option<Vec<C64>> {
        let r = |x: f64| C64::new(x, 0.0);
        let s = std::f64::consts::FRAC_1_SQRT_2;
        Some(match self {
            InitialState::Ket0 => vec![r(1.0), r(0.0)],
            InitialState::Ket1 => vec![r(0.0), r(1.0)],
            InitialState::Plus => vec![r(s), r(s)],
            InitialState::Ket00 => vec![r(1.0), r(0.0), r(0.0), r(0.0)],
            InitialState::Ket11 => vec![r(0.0), r(0.0), r(0.0), r(1.0)],
            InitialState::BellPhiPlus => vec![r(s), r(0.0), r(0.0), r(s)],
            InitialState::Explicit(_) => return None,
        })
    }

    pub fn matrix(&self) -> DenseMatrix {
        match self {
            InitialState::Explicit(m) => m.clone(),
            other => DenseMatrix::outer(&other.ket().unwrap()),
        }
    }

    pub fn dim(&self) -> usize {
        self.matrix().dim()
    }

    /// State vector when the state is pure.
    pub fn pure_vector(&self) -> Option<Vec<C64>> {
        if let Some(k) = self.ket() {
            return Some(k);
        }
        let eig = hermitian_eig(&self.matrix().hermitian_part()).ok()?;
        let d = eig.eigenvalues.len();
        if (eig.eigenvalues[d - 1] - 1.0).abs() > 1e-10 {
            return None;
        }
        Some((0..d).map(|r| eig.eigenvectors[(r, d - 1)]).collect())
    }
}

/// Parameters of the central-spin model an experiment runs on.
#[derive(Clone, Debug, PartialEq)]
pub enum ModelParams {
    Single {
        omega0: f64,
        omega: f64,
        epsilon: f64,
        n_bath: Vec<u32>,
        temperature: f64,
    },
    Two {
        omega1: f64,
        omega2: f64,
        omega_a: f64,
        omega_b: f64,
        eps1: f64,
        eps2: f64,
        delta: f64,
        m_bath: u32,
        n_bath: u32,
        temperature: f64,
    },
}

#[derive(Clone, Debug, PartialEq)]
pub struct ExperimentSpec {
    pub kind: ExperimentKind,
    pub model: ModelParams,
    /// Bath variants to run: `true` for interacting bath spins.
    pub bath_variants: Vec<bool>,
    pub scenario: Scenario,
    pub coupling_axes: Vec<CouplingAxis>,
    pub grid: GridSpec,
    pub tau: Option<f64>,
    pub initial_state: InitialState,
    /// Trapezoid intervals per QSL evaluation (per unit time for time-axis kinds).
    pub quadrature_intervals: usize,
    pub entropy_base: LogBase,
    pub flip_sigma_z: bool,
    pub output: Option<PathBuf>,
}

fn parse_bath_variants(v: &str) -> Result<Vec<bool>, CliError> {
    match v {
        "both" => Ok(vec![true, false]),
        "interacting" => Ok(vec![true]),
        "non_interacting" => Ok(vec![false]),
        _ => Err(CliError::Config(format!("bath: expected both|interacting|non_interacting, got `{v}`"))),
    }
}

fn parse_axes(v: &str) -> Result<Vec<CouplingAxis>, CliError> {
    match v {
        "both" => Ok(vec![CouplingAxis::XX, CouplingAxis::ZZ]),
        "xx" => Ok(vec![CouplingAxis::XX]),
        "zz" => Ok(vec![CouplingAxis::ZZ]),
        _ => Err(CliError::Config(format!("coupling_axis: expected xx|zz|both, got `{v}`"))),
    }
}

impl ExperimentSpec {
    pub fn from_config(cfg: &RawConfig) -> Result<Self, CliError> {
        let kind: ExperimentKind = cfg.require::<String>("kind")?.parse()?;
        use ExperimentKind::*;

        let model = if kind.is_single_qubit() {
            let n_bath = cfg
                .get_list::<u32>("n_bath")?
                .ok_or_else(|| CliError::Config("missing required key `n_bath`".into()))?;
            if n_bath.len() > 1 && !matches!(kind, QslSweepEpsilon | QslSweepTau) {
                return Err(CliError::Config(format!("{} takes a single n_bath", kind.name())));
            }
            ModelParams::Single {
                omega0: cfg.require("omega0")?,
                omega: cfg.require("omega")?,
                // the epsilon sweep supplies the coupling itself
                epsilon: if kind == QslSweepEpsilon { 0.0 } else { cfg.require("epsilon")? },
                n_bath,
                temperature: cfg.require("temperature")?,
            }
        } else {
            let uses_delta = !matches!(kind, TraceDistanceTwoLocal | CorrelationsTimeLocal | CorrelationsSweepDelta);
            ModelParams::Two {
                omega1: cfg.require("omega1")?,
                omega2: cfg.require("omega2")?,
                omega_a: cfg.require("omega_a")?,
                omega_b: cfg.require("omega_b")?,
                eps1: cfg.require("eps1")?,
                eps2: cfg.require("eps2")?,
                delta: if uses_delta { cfg.get_or("delta", 0.0)? } else { 0.0 },
                m_bath: cfg.require("m_bath")?,
                n_bath: cfg.require("n_bath")?,
                temperature: cfg.require("temperature")?,
            }
        };

        let bath_variants = if kind.compares_baths() {
            vec![true, false]
        } else {
            let default = if kind == ConcurrenceCouplingAxis { "interacting" } else { "both" };
            parse_bath_variants(&cfg.get_or("bath", default.to_string())?)?
        };

        let scenario = match kind {
            TraceDistanceTwoLocal | CorrelationsTimeLocal => Scenario::Local,
            EntropyTwo => match cfg.require::<String>("scenario")?.as_str() {
                "local" => Scenario::Local,
                "global" => Scenario::Global,
                other => return Err(CliError::Config(format!("scenario: expected local|global, got `{other}`"))),
            },
            _ => Scenario::Global,
        };
        if scenario == Scenario::Local && kind == EntropyTwo && cfg.contains("delta") {
            // read so it is not reported as unused; it has no effect locally
            let d: f64 = cfg.require("delta")?;
            if d != 0.0 {
                return Err(CliError::Config("delta must be 0 (or absent) in the local scenario".into()));
            }
        }

        let coupling_axes = if kind == ConcurrenceCouplingAxis {
            parse_axes(&cfg.get_or("coupling_axis", "both".to_string())?)?
        } else if !kind.is_single_qubit() && scenario == Scenario::Global {
            let axes = parse_axes(&cfg.get_or("coupling_axis", "zz".to_string())?)?;
            if axes.len() != 1 {
                return Err(CliError::Config("coupling_axis = both is only valid for concurrence_coupling_axis".into()));
            }
            axes
        } else {
            vec![CouplingAxis::ZZ]
        };

        let dg = kind.default_grid();
        let grid = GridSpec {
            start: cfg.get_or("grid_start", dg.start)?,
            stop: cfg.get_or("grid_stop", dg.stop)?,
            points: cfg.get_or("grid_points", dg.points)?,
        };
        let tau = if kind.needs_tau() { Some(cfg.require("tau")?) } else { None };

        let initial_state = match cfg.raw("initial_state") {
            Some(name) => InitialState::parse(name, cfg.raw("initial_matrix"))?,
            None => {
                if cfg.contains("initial_matrix") {
                    return Err(CliError::Config("initial_matrix is only used with initial_state = explicit".into()));
                }
                kind.default_initial_state()
            }
        };

        let quadrature_intervals = cfg.get_or("quadrature_intervals", 1000usize)?;
        let entropy_base = match cfg.get_or("entropy_base", "natural".to_string())?.as_str() {
            "natural" => LogBase::Natural,
            "two" => LogBase::Two,
            other => return Err(CliError::Config(format!("entropy_base: expected natural|two, got `{other}`"))),
        };
        let flip_sigma_z = if kind == SigmaZ { cfg.get_bool("flip_sigma_z", false)? } else { false };
        let output = cfg.raw("output").map(PathBuf::from);

        let spec = ExperimentSpec {
            kind,
            model,
            bath_variants,
            scenario,
            coupling_axes,
            grid,
            tau,
            initial_state,
            quadrature_intervals,
            entropy_base,
            flip_sigma_z,
            output,
        };
        cfg.finish()?;
        spec.validate()?;
        Ok(spec)
    }

    /// Structural checks, size caps and model validation for every variant.
    pub fn validate(&self) -> Result<(), CliError> {
        let g = &self.grid;
        if g.points < 2 || !(g.start < g.stop) || !g.start.is_finite() || !g.stop.is_finite() {
            return Err(CliError::Config("grid needs points >= 2 and finite start < stop".into()));
        }
        if self.kind.uses_time_profile() && g.start != 0.0 {
            return Err(CliError::Config(format!("{} needs grid_start = 0", self.kind.name())));
        }
        if self.kind.axis_name() == "t" && g.start < 0.0 {
            return Err(CliError::Config("times must be non-negative".into()));
        }
        if self.kind == ExperimentKind::QslSweepEpsilon && g.start < 0.0 {
            return Err(CliError::Config("epsilon sweep must be non-negative".into()));
        }
        if let Some(tau) = self.tau {
            if !(tau > 0.0 && tau.is_finite()) {
                return Err(CliError::Config("tau must be positive".into()));
            }
        }
        if self.quadrature_intervals == 0 {
            return Err(CliError::Config("quadrature_intervals must be positive".into()));
        }
        let want_dim = if self.kind.is_single_qubit() { 2 } else { 4 };
        let rho0 = self.initial_state.matrix();
        if rho0.dim() != want_dim {
            return Err(CliError::Config(format!(
                "{} needs a {want_dim}-dimensional initial state",
                self.kind.name()
            )));
        }
        spinstar_core::dynamics::validate_density(&rho0, want_dim)
            .map_err(|e| CliError::Config(e.to_string()))?;
        let needs_pure = matches!(
            self.kind,
            ExperimentKind::QslSweepEpsilon
                | ExperimentKind::QslSweepTau
                | ExperimentKind::CorrelationsTimeLocal
                | ExperimentKind::CorrelationsTimeGlobal
                | ExperimentKind::CorrelationsSweepDelta
        );
        if needs_pure && self.initial_state.pure_vector().is_none() {
            return Err(CliError::Config("QSL experiments need a pure initial state".into()));
        }

        match &self.model {
            ModelParams::Single { n_bath, .. } => {
                for &n in n_bath {
                    if n > CAP_SINGLE_BATH {
                        return Err(CliError::CapExceeded(format!("n_bath = {n} exceeds {CAP_SINGLE_BATH}")));
                    }
                }
                for cfg in self.single_configs(0.0) {
                    cfg.validate().map_err(|e| CliError::Config(e.to_string()))?;
                }
            }
            ModelParams::Two { m_bath, n_bath, .. } => {
                let cap = if self.scenario == Scenario::Local { CAP_LOCAL_BATH } else { CAP_GLOBAL_BATH };
                for n in [m_bath, n_bath] {
                    if *n > cap {
                        return Err(CliError::CapExceeded(format!(
                            "bath size {n} exceeds {cap} for the {:?} scenario",
                            self.scenario
                        )));
                    }
                }
                for (_, cfg) in self.two_configs(None) {
                    cfg.validate().map_err(|e| CliError::Config(e.to_string()))?;
                }
            }
        }
        Ok(())
    }

    /// Single-qubit configurations for every (bath variant, n_bath), with
    /// `epsilon_override` replacing the coupling when the sweep supplies it.
    pub fn single_configs(&self, epsilon_override: f64) -> Vec<ModelConfig> {
        let ModelParams::Single { omega0, omega, epsilon, n_bath, temperature } = &self.model else {
            return Vec::new();
        };
        let eps = if self.kind == ExperimentKind::QslSweepEpsilon { epsilon_override } else { *epsilon };
        let mut out = Vec::new();
        for &interacting in &self.bath_variants {
            for &n in n_bath {
                out.push(ModelConfig {
                    omega0: *omega0,
                    omega: *omega,
                    epsilon: eps,
                    n_bath: n,
                    temperature: *temperature,
                    bath_interacting: interacting,
                });
            }
        }
        out
    }

    /// Two-qubit configurations for every (axis, bath variant), labelled.
    pub fn two_configs(&self, delta_override: Option<f64>) -> Vec<(String, TwoQubitConfig)> {
        let ModelParams::Two { omega1, omega2, omega_a, omega_b, eps1, eps2, delta, m_bath, n_bath, temperature } =
            &self.model
        else {
            return Vec::new();
        };
        let mut out = Vec::new();
        for &axis in &self.coupling_axes {
            for &interacting in &self.bath_variants {
                let mut label = Vec::new();
                if self.coupling_axes.len() > 1 {
                    label.push(match axis {
                        CouplingAxis::XX => "xx",
                        CouplingAxis::ZZ => "zz",
                    });
                }
                if self.bath_variants.len() > 1 && !self.kind.compares_baths() {
                    label.push(bath_label(interacting));
                }
                out.push((
                    label.join("_"),
                    TwoQubitConfig {
                        omega1: *omega1,
                        omega2: *omega2,
                        omega_a: *omega_a,
                        omega_b: *omega_b,
                        eps1: *eps1,
                        eps2: *eps2,
                        delta: delta_override.unwrap_or(*delta),
                        m_bath: *m_bath,
                        n_bath: *n_bath,
                        temperature: *temperature,
                        bath_interacting: interacting,
                        scenario: self.scenario,
                        coupling_axis: axis,
                    },
                ));
            }
        }
        out
    }
}

pub fn bath_label(interacting: bool) -> &'static str {
    if interacting {
        "interacting"
    } else {
        "noninteracting"
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(text: &str) -> Result<ExperimentSpec, CliError> {
        ExperimentSpec::from_config(&RawConfig::parse(text).unwrap())
    }

    const SIGMA: &str = "kind = sigma_z\nomega0 = 2\nomega = 2\nepsilon = 1\nn_bath = 100\ntemperature = 1\n";

    #[test]
    fn sigma_z_defaults() {
        let s = spec(SIGMA).unwrap();
        assert_eq!(s.bath_variants, vec![true, false]);
        assert_eq!(s.initial_state, InitialState::Ket1);
        assert_eq!(s.grid, GridSpec { start: 0.0, stop: 25.0, points: 500 });
        assert_eq!(s.single_configs(0.0).len(), 2);
    }

    #[test]
    fn missing_and_unknown_keys_are_config_errors() {
        let err = spec("kind = sigma_z\nomega0 = 2\n").unwrap_err();
        assert_eq!(err.exit_code(), 2);
        let err = spec(&format!("{SIGMA}detla = 3\n")).unwrap_err();
        assert!(err.to_string().contains("detla"));
        assert_eq!(spec("kind = nonsense").unwrap_err().exit_code(), 2);
    }

    #[test]
    fn caps_are_enforced() {
        let err = spec(&SIGMA.replace("n_bath = 100", "n_bath = 201")).unwrap_err();
        assert_eq!(err.exit_code(), 3);
        let two = "kind = trace_distance_two_global\nomega1 = 3\nomega2 = 3.1\nomega_a = 2\nomega_b = 2.1\n\
                   eps1 = 2.4\neps2 = 2.5\ndelta = 4\nm_bath = 21\nn_bath = 15\ntemperature = 1\n";
        assert_eq!(spec(two).unwrap_err().exit_code(), 3);
        let local = two.replace("trace_distance_two_global", "trace_distance_two_local").replace("delta = 4\n", "");
        assert!(spec(&local).is_ok());
    }

    #[test]
    fn grid_and_state_validation() {
        assert!(spec(&format!("{SIGMA}grid_points = 1\n")).is_err());
        assert!(spec(&format!("{SIGMA}grid_start = 5\ngrid_stop = 1\n")).is_err());
        assert!(spec(&format!("{SIGMA}initial_state = ket11\n")).is_err());
        let explicit = format!("{SIGMA}initial_state = explicit\ninitial_matrix = 0.5, 0.5i, -0.5i, 0.5\n");
        let s = spec(&explicit).unwrap();
        assert_eq!(s.initial_state.matrix()[(0, 1)], C64::new(0.0, 0.5));
        assert!(s.initial_state.pure_vector().is_some());
        assert!(spec(&format!("{SIGMA}initial_state = explicit\ninitial_matrix = 0.7, 0, 0, 0.7\n")).is_err());
    }

    #[test]
    fn grid_values_hit_endpoints() {
        let g = GridSpec { start: 0.0, stop: 25.0, points: 500 };
        let v = g.values();
        assert_eq!((v[0], v[499], v.len()), (0.0, 25.0, 500));
    }

    #[test]
    fn every_kind_round_trips_its_name() {
        for k in ExperimentKind::ALL {
            assert_eq!(k.name().parse::<ExperimentKind>().unwrap(), k);
        }
    }
}
