//! Exact reduced dynamics of the central qubit(s).
//!
//! The joint Hamiltonian commutes with every bath's total spin, so the
//! evolution splits into one independent problem per bath sector (or pair of
//! sectors). Each sector Hamiltonian is diagonalized once; any requested time
//! is then a phase multiplication in its eigenbasis followed by the partial
//! trace over the bath, accumulated with the sector's thermal weight.
//!
//! Reduction over sectors always runs in sector order, so trajectories are
//! bit-identical for any number of worker threads.

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use crate::collective::{sectors, SectorSpec};
use crate::models::{
    single_qubit_sector_h, two_qubit_sector_h, BathSpec, ModelConfig, ModelError, Scenario,
    TwoQubitConfig,
};
use crate::numerics::{
    hermitian_block_eig, hermitian_eigenvalues, DenseMatrix, NumericsError, SpectralBlock, C64, I,
    ZERO,
};
use crate::par;

/// Tolerance on Hermiticity, trace and positivity for initial states.
pub const STATE_TOL: f64 = 1e-10;
/// Most negative eigenvalue tolerated in an evolved state.
pub const POSITIVITY_TOL: f64 = 1e-9;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum DynamicsError {
    #[error("invalid initial state: {0}")]
    InvalidState(String),
    #[error("time grid is empty")]
    EmptyTimeGrid,
    #[error("invalid time grid: {0}")]
    InvalidTimeGrid(String),
    #[error("temperature must be positive, got {0}")]
    NonPositiveTemperature(f64),
    #[error("state at t = {time} has eigenvalue {min_eigenvalue:e} below -{POSITIVITY_TOL:e}")]
    PositivityViolation { time: f64, min_eigenvalue: f64 },
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error(transparent)]
    Numerics(#[from] NumericsError),
}

/// Thermal populations of one bath sector, |j, m⟩ with m descending.
#[derive(Clone, Debug)]
pub struct SectorWeights {
    pub sector: SectorSpec,
    pub energies: Vec<f64>,
    /// `exp(-(E - E_ground) / T)`; see [`ThermalWeights::boltzmann_factor`]
    /// for the unshifted factor.
    pub relative_boltzmann: Vec<f64>,
}

/// Gibbs state of a bath expressed per sector.
#[derive(Clone, Debug)]
pub struct ThermalWeights {
    pub temperature: f64,
    pub sectors: Vec<SectorWeights>,
    /// Lowest energy over all sectors, used as the shift of `relative_boltzmann`.
    pub ground_energy: f64,
    /// `Σ mult · Σ relative_boltzmann`.
    pub relative_partition_function: f64,
}

impl ThermalWeights {
    pub fn boltzmann_factor(&self, sector: usize, state: usize) -> f64 {
        (-self.sectors[sector].energies[state] / self.temperature).exp()
    }

    pub fn log_partition_function(&self) -> f64 {
        self.relative_partition_function.ln() - self.ground_energy / self.temperature
    }

    /// `Z = Tr exp(-H_E / T)`, multiplicities included.
    pub fn partition_function(&self) -> f64 {
        self.log_partition_function().exp()
    }

    /// Probability of one copy of |j, m⟩ times the sector multiplicity, i.e.
    /// the total weight the sector's m-th state carries in the bath.
    pub fn sector_probabilities(&self, sector: usize) -> Vec<f64> {
        let s = &self.sectors[sector];
        let scale = s.sector.multiplicity_f64() / self.relative_partition_function;
        s.relative_boltzmann.iter().map(|w| w * scale).collect()
    }
}

/// Sector-resolved Boltzmann weights from the analytic bath spectrum.
pub fn thermal_weights(bath: &BathSpec) -> Result<ThermalWeights, DynamicsError> {
    if !(bath.temperature > 0.0) {
        return Err(DynamicsError::NonPositiveTemperature(bath.temperature));
    }
    let secs = sectors(bath.n_spins);
    let energies: Vec<Vec<f64>> = secs
        .iter()
        .map(|s| s.m_values().map(|m| bath.energy(s.j(), m)).collect())
        .collect();
    let ground = energies.iter().flatten().cloned().fold(f64::INFINITY, f64::min);
    let mut z = 0.0;
    let sectors = secs
        .into_iter()
        .zip(energies)
        .map(|(sector, energies)| {
            let rel: Vec<f64> = energies
                .iter()
                .map(|e| (-(e - ground) / bath.temperature).exp())
                .collect();
            z += sector.multiplicity_f64() * rel.iter().sum::<f64>();
            SectorWeights { sector, energies, relative_boltzmann: rel }
        })
        .collect();
    Ok(ThermalWeights {
        temperature: bath.temperature,
        sectors,
        ground_energy: ground,
        relative_partition_function: z,
    })
}

/// Reduced states along a time grid, with `d/dt` of each state when requested.
#[derive(Clone, Debug)]
pub struct Trajectory {
    pub times: Vec<f64>,
    pub states: Vec<DenseMatrix>,
    pub generators: Option<Vec<DenseMatrix>>,
}

/// Worst-case physicality figures over a trajectory.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PhysicalityReport {
    pub max_trace_error: f64,
    pub max_hermiticity_error: f64,
    pub min_eigenvalue: f64,
    pub max_purity: f64,
}

impl Trajectory {
    pub fn len(&self) -> usize {
        self.times.len()
    }

    pub fn is_empty(&self) -> bool {
        self.times.is_empty()
    }

    pub fn physicality(&self) -> PhysicalityReport {
        let mut rep = PhysicalityReport {
            max_trace_error: 0.0,
            max_hermiticity_error: 0.0,
            min_eigenvalue: f64::INFINITY,
            max_purity: 0.0,
        };
        for rho in &self.states {
            rep.max_trace_error = rep.max_trace_error.max((rho.trace() - 1.0).norm());
            rep.max_hermiticity_error = rep.max_hermiticity_error.max(rho.hermiticity_error());
            let vals = hermitian_eigenvalues(&rho.hermitian_part()).expect("hermitian part");
            rep.min_eigenvalue = rep.min_eigenvalue.min(vals[0]);
            let purity: f64 = rho.as_slice().iter().map(|z| z.norm_sqr()).sum();
            rep.max_purity = rep.max_purity.max(purity);
        }
        rep
    }
}

/// A linear map on qubit operators in the row-stacking convention:
/// `vec(ρ)[2a + b] = ρ[a][b]`, and column `2a + b` of `mat` is the image of
/// the matrix unit |a⟩⟨b|.
#[derive(Clone, Debug, PartialEq)]
pub struct QubitSuperoperator {
    pub mat: DenseMatrix,
}

impl QubitSuperoperator {
    pub fn identity() -> Self {
        QubitSuperoperator { mat: DenseMatrix::identity(4) }
    }

    pub fn apply(&self, rho: &DenseMatrix) -> DenseMatrix {
        assert_eq!(rho.dim(), 2);
        DenseMatrix::from_vec(self.mat.apply(rho.as_slice())).unwrap()
    }

    /// Largest deviation of `Tr Λ(X)` from `Tr X` over the matrix units.
    pub fn trace_preservation_error(&self) -> f64 {
        (0..4)
            .map(|col| {
                let out_tr = self.mat[(0, col)] + self.mat[(3, col)];
                let in_tr = if col == 0 || col == 3 { 1.0 } else { 0.0 };
                (out_tr - in_tr).norm()
            })
            .fold(0.0, f64::max)
    }

    /// The 16×16 matrix of `Λ_A ⊗ Λ_B` acting on row-stacked two-qubit
    /// operators, qubit A being the most significant factor.
    pub fn tensor(&self, other: &QubitSuperoperator) -> DenseMatrix {
        let mut out = DenseMatrix::zeros(16);
        let pair = |a: usize, b: usize| 2 * a + b;
        for o1 in 0..2 {
            for o2 in 0..2 {
                for p1 in 0..2 {
                    for p2 in 0..2 {
                        let row = (2 * o1 + o2) * 4 + (2 * p1 + p2);
                        for a1 in 0..2 {
                            for a2 in 0..2 {
                                for b1 in 0..2 {
                                    for b2 in 0..2 {
                                        let col = (2 * a1 + a2) * 4 + (2 * b1 + b2);
                                        out[(row, col)] = self.mat[(pair(o1, p1), pair(a1, b1))]
                                            * other.mat[(pair(o2, p2), pair(a2, b2))];
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        out
    }
}

/// Map and (optionally) its time derivative at one instant.
#[derive(Clone, Debug)]
pub struct QubitMapSample {
    pub time: f64,
    pub map: QubitSuperoperator,
    pub derivative: Option<QubitSuperoperator>,
}

// ---------------------------------------------------------------------------
// sector propagation engine

/// Input for one sector: its Hamiltonian on system ⊗ bath-sector and the
/// total thermal weight carried by each bath basis state.
struct SectorJob {
    h: DenseMatrix,
    sys_dim: usize,
    weights: Vec<f64>,
}

/// `Σ_ab p_a conj(p_b) amp[a][b]` contributes to entry (row, col) of the
/// reduced image of initial operator `op`, where p are the eigen-phases of
/// blocks `rb` (rows) and `cb` (columns).
struct Term {
    op: usize,
    row: usize,
    col: usize,
    rb: usize,
    cb: usize,
    amp: Vec<C64>,
}

struct PreparedSector {
    blocks: Vec<SpectralBlock>,
    terms: Vec<Term>,
}

impl PreparedSector {
    fn new(job: SectorJob, ops: &[DenseMatrix]) -> Result<Self, DynamicsError> {
        let n = job.h.dim();
        let ds = job.sys_dim;
        let de = n / ds;
        debug_assert_eq!(job.weights.len(), de);
        let blocks = hermitian_block_eig(&job.h)?;
        let mut loc = vec![(0usize, 0usize); n];
        for (b, blk) in blocks.iter().enumerate() {
            for (p, &i) in blk.indices.iter().enumerate() {
                loc[i] = (b, p);
            }
        }

        // initial operators X ⊗ diag(w), rotated into the eigenbasis block by block
        let mut rotated: BTreeMap<(usize, usize, usize), Vec<C64>> = BTreeMap::new();
        for (r, x) in ops.iter().enumerate() {
            for s in 0..ds {
                for sp in 0..ds {
                    let xv = x[(s, sp)];
                    if xv == ZERO {
                        continue;
                    }
                    for (e, &w) in job.weights.iter().enumerate() {
                        if w == 0.0 {
                            continue;
                        }
                        let (c, pi) = loc[s * de + e];
                        let (d, pk) = loc[sp * de + e];
                        let (bc, bd) = (&blocks[c], &blocks[d]);
                        let nd = bd.indices.len();
                        let mat = rotated
                            .entry((r, c, d))
                            .or_insert_with(|| vec![ZERO; bc.indices.len() * nd]);
                        let coeff = xv * w;
                        for (a, row) in mat.chunks_exact_mut(nd).enumerate() {
                            let ua = bc.vectors[(pi, a)].conj() * coeff;
                            if ua == ZERO {
                                continue;
                            }
                            for (m, &v) in row.iter_mut().zip(bd.vectors.row(pk)) {
                                *m += ua * v;
                            }
                        }
                    }
                }
            }
        }

        // partial-trace contractions, grouped by block pair
        let pairs: BTreeSet<(usize, usize)> = rotated.keys().map(|&(_, c, d)| (c, d)).collect();
        let mut contractions: BTreeMap<(usize, usize), Vec<(usize, usize, usize, usize)>> =
            BTreeMap::new();
        for s in 0..ds {
            for sp in 0..ds {
                for f in 0..de {
                    let (c, pi) = loc[s * de + f];
                    let (d, pk) = loc[sp * de + f];
                    if pairs.contains(&(c, d)) {
                        contractions.entry((c, d)).or_default().push((s, sp, pi, pk));
                    }
                }
            }
        }

        let mut terms = Vec::new();
        for (&(r, c, d), rho) in &rotated {
            let Some(list) = contractions.get(&(c, d)) else { continue };
            let (bc, bd) = (&blocks[c], &blocks[d]);
            let nd = bd.indices.len();
            let mut k = 0;
            while k < list.len() {
                let (s, sp) = (list[k].0, list[k].1);
                let mut amp = vec![ZERO; bc.indices.len() * nd];
                while k < list.len() && (list[k].0, list[k].1) == (s, sp) {
                    let (pi, pk) = (list[k].2, list[k].3);
                    for (a, row) in amp.chunks_exact_mut(nd).enumerate() {
                        let ua = bc.vectors[(pi, a)];
                        if ua == ZERO {
                            continue;
                        }
                        for (m, &v) in row.iter_mut().zip(bd.vectors.row(pk)) {
                            *m += ua * v.conj();
                        }
                    }
                    k += 1;
                }
                for (m, &x) in amp.iter_mut().zip(rho) {
                    *m *= x;
                }
                if amp.iter().any(|z| *z != ZERO) {
                    terms.push(Term { op: r, row: s, col: sp, rb: c, cb: d, amp });
                }
            }
        }
        Ok(PreparedSector { blocks, terms })
    }

    fn accumulate(&self, t: f64, ds: usize, vals: &mut [C64], gens: Option<&mut [C64]>) {
        let phases: Vec<Vec<C64>> = self
            .blocks
            .iter()
            .map(|b| b.eigenvalues.iter().map(|&l| C64::from_polar(1.0, -l * t)).collect())
            .collect();
        let mut gens = gens;
        for term in &self.terms {
            let (pc, pd) = (&phases[term.rb], &phases[term.cb]);
            let (lc, ld) = (&self.blocks[term.rb].eigenvalues, &self.blocks[term.cb].eigenvalues);
            let nd = pd.len();
            let idx = (term.op * ds + term.row) * ds + term.col;
            match gens.as_deref_mut() {
                None => {
                    let mut val = ZERO;
                    for (a, row) in term.amp.chunks_exact(nd).enumerate() {
                        let r0: C64 = row.iter().zip(pd).map(|(x, p)| x * p.conj()).sum();
                        val += pc[a] * r0;
                    }
                    vals[idx] += val;
                }
                Some(g) => {
                    let (mut val, mut gen) = (ZERO, ZERO);
                    for (a, row) in term.amp.chunks_exact(nd).enumerate() {
                        let (mut r0, mut r1) = (ZERO, ZERO);
                        for ((x, p), &l) in row.iter().zip(pd).zip(ld) {
                            let y = x * p.conj();
                            r0 += y;
                            r1 += y * l;
                        }
                        val += pc[a] * r0;
                        gen += pc[a] * (r0 * lc[a] - r1);
                    }
                    vals[idx] += val;
                    g[idx] += -I * gen;
                }
            }
        }
    }
}

struct Snapshot {
    values: Vec<DenseMatrix>,
    generators: Option<Vec<DenseMatrix>>,
}

/// Evolves a fixed set of initial system operators (each tensored with the
/// thermal bath) through every sector of a model.
struct Propagator {
    sectors: Vec<PreparedSector>,
    sys_dim: usize,
    n_ops: usize,
}

impl Propagator {
    fn new<F>(n_jobs: usize, job: F, sys_dim: usize, ops: &[DenseMatrix]) -> Result<Self, DynamicsError>
    where
        F: Fn(usize) -> Result<SectorJob, DynamicsError> + Sync + Send,
    {
        let sectors = par::try_map_range(n_jobs, |k| PreparedSector::new(job(k)?, ops))?;
        Ok(Propagator { sectors, sys_dim, n_ops: ops.len() })
    }

    fn evaluate(&self, times: &[f64], with_generators: bool) -> Vec<Snapshot> {
        let ds = self.sys_dim;
        let len = self.n_ops * ds * ds;
        par::map_collect(times, |&t| {
            let mut vals = vec![ZERO; len];
            let mut gens = with_generators.then(|| vec![ZERO; len]);
            for sec in &self.sectors {
                sec.accumulate(t, ds, &mut vals, gens.as_deref_mut());
            }
            let split = |v: Vec<C64>| -> Vec<DenseMatrix> {
                v.chunks_exact(ds * ds)
                    .map(|c| DenseMatrix::from_vec(c.to_vec()).unwrap())
                    .collect()
            };
            Snapshot { values: split(vals), generators: gens.map(split) }
        })
    }
}

fn single_propagator(cfg: &ModelConfig, ops: &[DenseMatrix]) -> Result<Propagator, DynamicsError> {
    cfg.validate()?;
    let thermal = thermal_weights(&cfg.bath())?;
    Propagator::new(
        thermal.sectors.len(),
        |k| {
            let sh = single_qubit_sector_h(cfg, &thermal.sectors[k].sector)?;
            Ok(SectorJob { h: sh.h, sys_dim: 2, weights: thermal.sector_probabilities(k) })
        },
        2,
        ops,
    )
}

fn two_qubit_propagator(cfg: &TwoQubitConfig, ops: &[DenseMatrix]) -> Result<Propagator, DynamicsError> {
    cfg.validate()?;
    let ta = thermal_weights(&cfg.bath_a())?;
    let tb = thermal_weights(&cfg.bath_b())?;
    let nb = tb.sectors.len();
    Propagator::new(
        ta.sectors.len() * nb,
        |k| {
            let (k1, k2) = (k / nb, k % nb);
            let sh = two_qubit_sector_h(cfg, &ta.sectors[k1].sector, &tb.sectors[k2].sector)?;
            let (wa, wb) = (ta.sector_probabilities(k1), tb.sector_probabilities(k2));
            let weights = wa.iter().flat_map(|x| wb.iter().map(move |y| x * y)).collect();
            Ok(SectorJob { h: sh.h, sys_dim: 4, weights })
        },
        4,
        ops,
    )
}

// ---------------------------------------------------------------------------
// validation helpers

fn check_times(times: &[f64]) -> Result<(), DynamicsError> {
    if times.is_empty() {
        return Err(DynamicsError::EmptyTimeGrid);
    }
    if times.iter().any(|t| !t.is_finite()) {
        return Err(DynamicsError::InvalidTimeGrid("non-finite time".into()));
    }
    if times.windows(2).any(|w| w[1] <= w[0]) {
        return Err(DynamicsError::InvalidTimeGrid("times must be strictly ascending".into()));
    }
    Ok(())
}

/// Checks Hermiticity, unit trace and positivity within [`STATE_TOL`].
pub fn validate_density(rho: &DenseMatrix, dim: usize) -> Result<(), DynamicsError> {
    if rho.dim() != dim {
        return Err(DynamicsError::InvalidState(format!(
            "expected a {dim}x{dim} density matrix, got {0}x{0}",
            rho.dim()
        )));
    }
    let herm = rho.hermiticity_error();
    if herm > STATE_TOL {
        return Err(DynamicsError::InvalidState(format!("not Hermitian (deviation {herm:e})")));
    }
    let tr = rho.trace();
    if (tr - 1.0).norm() > STATE_TOL {
        return Err(DynamicsError::InvalidState(format!("trace is {tr}, not 1")));
    }
    let min = hermitian_eigenvalues(&rho.hermitian_part())?[0];
    if min < -STATE_TOL {
        return Err(DynamicsError::InvalidState(format!("negative eigenvalue {min:e}")));
    }
    Ok(())
}

fn check_positivity(times: &[f64], states: &[DenseMatrix]) -> Result<(), DynamicsError> {
    for (&time, rho) in times.iter().zip(states) {
        let min = hermitian_eigenvalues(&rho.hermitian_part())?[0];
        if min < -POSITIVITY_TOL {
            return Err(DynamicsError::PositivityViolation { time, min_eigenvalue: min });
        }
    }
    Ok(())
}

fn assemble(times: &[f64], snaps: Vec<Snapshot>, with_generators: bool) -> Result<Trajectory, DynamicsError> {
    let mut states = Vec::with_capacity(snaps.len());
    let mut generators = with_generators.then(|| Vec::with_capacity(snaps.len()));
    for snap in snaps {
        states.extend(snap.values.into_iter().take(1));
        if let (Some(g), Some(sg)) = (generators.as_mut(), snap.generators) {
            g.extend(sg.into_iter().take(1));
        }
    }
    check_positivity(times, &states)?;
    Ok(Trajectory { times: times.to_vec(), states, generators })
}

// ---------------------------------------------------------------------------
// public evolution entry points

/// Reduced state of the central qubit, `Tr_E[U(t) (ρ₀ ⊗ ρ_E) U†(t)]`, on a time grid.
pub fn evolve_single(
    cfg: &ModelConfig,
    rho0: &DenseMatrix,
    times: &[f64],
    with_generators: bool,
) -> Result<Trajectory, DynamicsError> {
    validate_density(rho0, 2)?;
    check_times(times)?;
    let prop = single_propagator(cfg, std::slice::from_ref(rho0))?;
    assemble(times, prop.evaluate(times, with_generators), with_generators)
}

/// Two central qubits under the joint (global) Hamiltonian.
pub fn evolve_two_qubit_global(
    cfg: &TwoQubitConfig,
    rho0: &DenseMatrix,
    times: &[f64],
    with_generators: bool,
) -> Result<Trajectory, DynamicsError> {
    if cfg.scenario != Scenario::Global {
        return Err(ModelError::ScenarioMismatch { expected: Scenario::Global }.into());
    }
    validate_density(rho0, 4)?;
    check_times(times)?;
    let prop = two_qubit_propagator(cfg, std::slice::from_ref(rho0))?;
    assemble(times, prop.evaluate(times, with_generators), with_generators)
}

/// Two central qubits with independent baths: `(Λ_A ⊗ Λ_B)(ρ₀)`.
pub fn evolve_two_qubit_local(
    cfg_a: &ModelConfig,
    cfg_b: &ModelConfig,
    rho0: &DenseMatrix,
    times: &[f64],
    with_generators: bool,
) -> Result<Trajectory, DynamicsError> {
    validate_density(rho0, 4)?;
    check_times(times)?;
    let maps_a = qubit_maps(cfg_a, times, with_generators)?;
    let maps_b = qubit_maps(cfg_b, times, with_generators)?;
    let apply = |ta: &QubitSuperoperator, tb: &QubitSuperoperator| {
        DenseMatrix::from_vec(ta.tensor(tb).apply(rho0.as_slice())).unwrap()
    };
    let mut states = Vec::with_capacity(times.len());
    let mut generators = with_generators.then(|| Vec::with_capacity(times.len()));
    for (a, b) in maps_a.iter().zip(&maps_b) {
        states.push(apply(&a.map, &b.map));
        if let Some(g) = generators.as_mut() {
            let (da, db) = (a.derivative.as_ref().unwrap(), b.derivative.as_ref().unwrap());
            g.push(&apply(da, &b.map) + &apply(&a.map, db));
        }
    }
    check_positivity(times, &states)?;
    Ok(Trajectory { times: times.to_vec(), states, generators })
}

/// Dispatches on the configuration's scenario.
pub fn evolve_two_qubit(
    cfg: &TwoQubitConfig,
    rho0: &DenseMatrix,
    times: &[f64],
    with_generators: bool,
) -> Result<Trajectory, DynamicsError> {
    match cfg.scenario {
        Scenario::Global => evolve_two_qubit_global(cfg, rho0, times, with_generators),
        Scenario::Local => {
            cfg.validate()?;
            evolve_two_qubit_local(&cfg.qubit_a(), &cfg.qubit_b(), rho0, times, with_generators)
        }
    }
}

fn matrix_units() -> Vec<DenseMatrix> {
    (0..4)
        .map(|k| {
            let mut m = DenseMatrix::zeros(2);
            m[(k / 2, k % 2)] = C64::new(1.0, 0.0);
            m
        })
        .collect()
}

/// The single-qubit dynamical map (and its time derivative) on a grid,
/// obtained by evolving the four matrix units |a⟩⟨b| ⊗ ρ_E.
pub fn qubit_maps(
    cfg: &ModelConfig,
    times: &[f64],
    with_derivatives: bool,
) -> Result<Vec<QubitMapSample>, DynamicsError> {
    check_times(times)?;
    if times[0] < 0.0 {
        return Err(DynamicsError::InvalidTimeGrid("map times must be non-negative".into()));
    }
    let prop = single_propagator(cfg, &matrix_units())?;
    let to_super = |images: &[DenseMatrix]| {
        QubitSuperoperator { mat: DenseMatrix::from_fn(4, |row, col| images[col][(row / 2, row % 2)]) }
    };
    Ok(prop
        .evaluate(times, with_derivatives)
        .into_iter()
        .zip(times)
        .map(|(snap, &time)| QubitMapSample {
            time,
            map: to_super(&snap.values),
            derivative: snap.generators.as_deref().map(to_super),
        })
        .collect())
}

/// Dynamical map of the central qubit at time `t`.
pub fn qubit_map(cfg: &ModelConfig, t: f64) -> Result<QubitSuperoperator, DynamicsError> {
    Ok(qubit_maps(cfg, &[t], false)?.remove(0).map)
}

/// `L(ρ_t) = Tr_E(-i[H, ρ_SE(t)])` for the single-qubit model, computed from
/// the commutator in each sector's eigenbasis.
pub fn generator_single(cfg: &ModelConfig, rho0: &DenseMatrix, t: f64) -> Result<DenseMatrix, DynamicsError> {
    let traj = evolve_single(cfg, rho0, &[t], true)?;
    Ok(traj.generators.unwrap().remove(0))
}

/// Two-qubit counterpart of [`generator_single`] (either scenario).
pub fn generator_two_qubit(cfg: &TwoQubitConfig, rho0: &DenseMatrix, t: f64) -> Result<DenseMatrix, DynamicsError> {
    let traj = evolve_two_qubit(cfg, rho0, &[t], true)?;
    Ok(traj.generators.unwrap().remove(0))
}
