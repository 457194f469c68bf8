//! Hamiltonians of the single- and two-qubit central spin models.
//!
//! The production path builds one block per bath sector (or pair of
//! sectors) from collective operators. [`bruteforce_full_h`] writes the same
//! Hamiltonians out spin by spin from Pauli strings on the full tensor
//! product space; it exists to validate the sector path.
//!
//! Units: ħ = k_B = 1. Qubit basis: index 0 is |0⟩ with σz = +1, index 1 is
//! |1⟩ with σz = -1. Subsystems are ordered system qubits first, then baths.

use thiserror::Error;

use crate::collective::{collective_ops, CollectiveOps, SectorSpec};
use crate::numerics::{kron_all, pauli_x, pauli_y, pauli_z, DenseMatrix, C64, I, ONE, ZERO};

/// Largest total spin count accepted by [`bruteforce_full_h`].
pub const BRUTEFORCE_MAX_SPINS: u32 = 14;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ModelError {
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error("sector 2j = {two_j} does not occur in a bath of {n_bath} spins")]
    InvalidSector { two_j: u32, n_bath: u32 },
    #[error("operation requires the {expected:?} scenario")]
    ScenarioMismatch { expected: Scenario },
    #[error("{spins} spins exceed the brute-force cap of {BRUTEFORCE_MAX_SPINS}")]
    TooLarge { spins: u32 },
}

/// A homogeneous spin-1/2 bath in its thermal state.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BathSpec {
    pub n_spins: u32,
    pub omega: f64,
    pub temperature: f64,
    pub interacting: bool,
}

impl BathSpec {
    /// Energy of |j, m⟩ under the bath Hamiltonian.
    ///
    /// Interacting: `ω((j(j+1) - m(m-1))/N - 1/2)`. Non-interacting: `(ω/N) m`.
    pub fn energy(&self, j: f64, m: f64) -> f64 {
        let n = self.n_spins as f64;
        if self.interacting {
            self.omega * ((j * (j + 1.0) - m * (m - 1.0)) / n - 0.5)
        } else {
            self.omega / n * m
        }
    }

    /// Bath Hamiltonian restricted to one sector, built from the collective
    /// operators: `ω(J+J-/N - 1/2)` or `(ω/N) Jz`.
    pub fn sector_hamiltonian(&self, ops: &CollectiveOps) -> DenseMatrix {
        let n = self.n_spins as f64;
        if self.interacting {
            let d = ops.jz.dim();
            &ops.jplus.matmul(&ops.jminus).scale_real(self.omega / n)
                - &DenseMatrix::identity(d).scale_real(self.omega / 2.0)
        } else {
            ops.jz.scale_real(self.omega / n)
        }
    }

    fn validate(&self, label: &str) -> Result<(), ModelError> {
        if self.n_spins == 0 {
            return Err(ModelError::InvalidConfig(format!("{label}: bath needs at least one spin")));
        }
        if !(self.temperature > 0.0) || !self.temperature.is_finite() {
            return Err(ModelError::InvalidConfig(format!(
                "{label}: temperature must be positive, got {}",
                self.temperature
            )));
        }
        if !self.omega.is_finite() {
            return Err(ModelError::InvalidConfig(format!("{label}: bath frequency must be finite")));
        }
        Ok(())
    }
}

/// Single central qubit coupled to one bath.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ModelConfig {
    pub omega0: f64,
    pub omega: f64,
    pub epsilon: f64,
    pub n_bath: u32,
    pub temperature: f64,
    pub bath_interacting: bool,
}

impl ModelConfig {
    pub fn bath(&self) -> BathSpec {
        BathSpec {
            n_spins: self.n_bath,
            omega: self.omega,
            temperature: self.temperature,
            interacting: self.bath_interacting,
        }
    }

    pub fn validate(&self) -> Result<(), ModelError> {
        self.bath().validate("bath")?;
        if !self.omega0.is_finite() || !self.epsilon.is_finite() {
            return Err(ModelError::InvalidConfig("frequencies and couplings must be finite".into()));
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Scenario {
    /// No central-spin coupling; dynamics is a product of single-qubit maps.
    Local,
    /// Central spins coupled with strength δ; joint Hamiltonian evolution.
    Global,
}

/// Axis of the central spin-spin coupling term `(δ/2) σ⊗σ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CouplingAxis {
    ZZ,
    XX,
}

/// Two central qubits, each with its own bath (M spins for qubit 1, N for qubit 2).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TwoQubitConfig {
    pub omega1: f64,
    pub omega2: f64,
    pub omega_a: f64,
    pub omega_b: f64,
    pub eps1: f64,
    pub eps2: f64,
    pub delta: f64,
    pub m_bath: u32,
    pub n_bath: u32,
    pub temperature: f64,
    pub bath_interacting: bool,
    pub scenario: Scenario,
    pub coupling_axis: CouplingAxis,
}

impl TwoQubitConfig {
    pub fn bath_a(&self) -> BathSpec {
        BathSpec {
            n_spins: self.m_bath,
            omega: self.omega_a,
            temperature: self.temperature,
            interacting: self.bath_interacting,
        }
    }

    pub fn bath_b(&self) -> BathSpec {
        BathSpec {
            n_spins: self.n_bath,
            omega: self.omega_b,
            temperature: self.temperature,
            interacting: self.bath_interacting,
        }
    }

    /// Single-qubit model seen by the first central spin.
    pub fn qubit_a(&self) -> ModelConfig {
        ModelConfig {
            omega0: self.omega1,
            omega: self.omega_a,
            epsilon: self.eps1,
            n_bath: self.m_bath,
            temperature: self.temperature,
            bath_interacting: self.bath_interacting,
        }
    }

    pub fn qubit_b(&self) -> ModelConfig {
        ModelConfig {
            omega0: self.omega2,
            omega: self.omega_b,
            epsilon: self.eps2,
            n_bath: self.n_bath,
            temperature: self.temperature,
            bath_interacting: self.bath_interacting,
        }
    }

    /// Central coupling actually in effect (zero in the local scenario).
    pub fn effective_delta(&self) -> f64 {
        match self.scenario {
            Scenario::Local => 0.0,
            Scenario::Global => self.delta,
        }
    }

    pub fn validate(&self) -> Result<(), ModelError> {
        self.bath_a().validate("bath a")?;
        self.bath_b().validate("bath b")?;
        let finite = [self.omega1, self.omega2, self.eps1, self.eps2, self.delta];
        if finite.iter().any(|x| !x.is_finite()) {
            return Err(ModelError::InvalidConfig("frequencies and couplings must be finite".into()));
        }
        if self.scenario == Scenario::Local && self.coupling_axis == CouplingAxis::XX {
            return Err(ModelError::InvalidConfig(
                "coupling axis xx only applies to the global scenario".into(),
            ));
        }
        Ok(())
    }
}

/// One block of a model Hamiltonian: system qubits ⊗ one bath sector per bath.
#[derive(Clone, Debug)]
pub struct SectorHamiltonian {
    pub sectors: Vec<SectorSpec>,
    pub h: DenseMatrix,
    pub dims: Vec<usize>,
}

impl SectorHamiltonian {
    pub fn system_dim(&self) -> usize {
        self.dims[..self.dims.len() - self.sectors.len()].iter().product()
    }

    pub fn bath_dim(&self) -> usize {
        self.dims[self.dims.len() - self.sectors.len()..].iter().product()
    }
}

fn check_sector(sector: &SectorSpec, n_bath: u32) -> Result<(), ModelError> {
    if sector.is_valid_for(n_bath) {
        Ok(())
    } else {
        Err(ModelError::InvalidSector { two_j: sector.two_j, n_bath })
    }
}

/// Block of the single-qubit Hamiltonian in one bath sector:
/// `(ω₀/2)σz⊗1 + 1⊗H_E + (ε/√N)(σx⊗Jx + σy⊗Jy)`.
pub fn single_qubit_sector_h(
    cfg: &ModelConfig,
    sector: &SectorSpec,
) -> Result<SectorHamiltonian, ModelError> {
    cfg.validate()?;
    check_sector(sector, cfg.n_bath)?;
    let ops = collective_ops(sector.two_j);
    let d = sector.dim();
    let id2 = DenseMatrix::identity(2);
    let idb = DenseMatrix::identity(d);
    let g = cfg.epsilon / (cfg.n_bath as f64).sqrt();

    let mut h = kron_all(&[&pauli_z(), &idb]).scale_real(cfg.omega0 / 2.0);
    h += &kron_all(&[&id2, &cfg.bath().sector_hamiltonian(&ops)]);
    let coupling = &kron_all(&[&pauli_x(), &ops.jx]) + &kron_all(&[&pauli_y(), &ops.jy]);
    h += &coupling.scale_real(g);
    Ok(SectorHamiltonian { sectors: vec![sector.clone()], h, dims: vec![2, d] })
}

/// Block of the two-qubit global Hamiltonian for the sector pair (s1, s2) on
/// qubit₁ ⊗ qubit₂ ⊗ sector₁ ⊗ sector₂.
pub fn two_qubit_global_sector_h(
    cfg: &TwoQubitConfig,
    s1: &SectorSpec,
    s2: &SectorSpec,
) -> Result<SectorHamiltonian, ModelError> {
    if cfg.scenario != Scenario::Global {
        return Err(ModelError::ScenarioMismatch { expected: Scenario::Global });
    }
    two_qubit_sector_h(cfg, s1, s2)
}

/// Joint two-qubit sector block; the local scenario gets δ = 0.
pub(crate) fn two_qubit_sector_h(
    cfg: &TwoQubitConfig,
    s1: &SectorSpec,
    s2: &SectorSpec,
) -> Result<SectorHamiltonian, ModelError> {
    cfg.validate()?;
    check_sector(s1, cfg.m_bath)?;
    check_sector(s2, cfg.n_bath)?;
    let (ops1, ops2) = (collective_ops(s1.two_j), collective_ops(s2.two_j));
    let (d1, d2) = (s1.dim(), s2.dim());
    let id2 = DenseMatrix::identity(2);
    let (i1, i2) = (DenseMatrix::identity(d1), DenseMatrix::identity(d2));
    let (sx, sy, sz) = (pauli_x(), pauli_y(), pauli_z());
    let g1 = cfg.eps1 / (cfg.m_bath as f64).sqrt();
    let g2 = cfg.eps2 / (cfg.n_bath as f64).sqrt();

    let mut h = kron_all(&[&sz, &id2, &i1, &i2]).scale_real(cfg.omega1 / 2.0);
    h += &kron_all(&[&id2, &sz, &i1, &i2]).scale_real(cfg.omega2 / 2.0);
    let central = match cfg.coupling_axis {
        CouplingAxis::ZZ => kron_all(&[&sz, &sz, &i1, &i2]),
        CouplingAxis::XX => kron_all(&[&sx, &sx, &i1, &i2]),
    };
    h += &central.scale_real(cfg.effective_delta() / 2.0);
    h += &kron_all(&[&id2, &id2, &cfg.bath_a().sector_hamiltonian(&ops1), &i2]);
    h += &kron_all(&[&id2, &id2, &i1, &cfg.bath_b().sector_hamiltonian(&ops2)]);
    let c1 = &kron_all(&[&sx, &id2, &ops1.jx, &i2]) + &kron_all(&[&sy, &id2, &ops1.jy, &i2]);
    h += &c1.scale_real(g1);
    let c2 = &kron_all(&[&id2, &sx, &i1, &ops2.jx]) + &kron_all(&[&id2, &sy, &i1, &ops2.jy]);
    h += &c2.scale_real(g2);
    Ok(SectorHamiltonian { sectors: vec![s1.clone(), s2.clone()], h, dims: vec![2, 2, d1, d2] })
}

/// Either model family, for the full-space builder.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum FullSpaceModel {
    Single(ModelConfig),
    TwoQubit(TwoQubitConfig),
}

impl From<ModelConfig> for FullSpaceModel {
    fn from(c: ModelConfig) -> Self {
        FullSpaceModel::Single(c)
    }
}

impl From<TwoQubitConfig> for FullSpaceModel {
    fn from(c: TwoQubitConfig) -> Self {
        FullSpaceModel::TwoQubit(c)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Pauli {
    X,
    Y,
    Z,
}

/// Accumulates sums of Pauli strings on `n` spins as a dense matrix.
/// Spin 0 is the most significant tensor factor.
pub struct PauliSum {
    n: u32,
    m: DenseMatrix,
}

impl PauliSum {
    pub fn new(n: u32) -> Self {
        PauliSum { n, m: DenseMatrix::zeros(1usize << n) }
    }

    /// Adds `coeff · ∏ σ^{p}_{site}`.
    pub fn add(&mut self, coeff: f64, ops: &[(u32, Pauli)]) {
        let dim = 1usize << self.n;
        for col in 0..dim {
            let mut row = col;
            let mut amp = C64::new(coeff, 0.0);
            for &(site, p) in ops {
                let bit = 1usize << (self.n - 1 - site);
                let up = row & bit == 0;
                match p {
                    Pauli::X => row ^= bit,
                    Pauli::Y => {
                        amp *= if up { I } else { -I };
                        row ^= bit;
                    }
                    Pauli::Z => {
                        if !up {
                            amp = -amp;
                        }
                    }
                }
            }
            self.m[(row, col)] += amp;
        }
    }

    pub fn into_matrix(self) -> DenseMatrix {
        self.m
    }
}

/// Adds the bath Hamiltonian of `bath` on sites `first..first+N`.
fn add_bath_terms(sum: &mut PauliSum, bath: &BathSpec, first: u32) {
    let n = bath.n_spins;
    let pref = bath.omega / (2.0 * n as f64);
    for i in 0..n {
        sum.add(pref, &[(first + i, Pauli::Z)]);
        if bath.interacting {
            for j in 0..n {
                if j != i {
                    sum.add(pref / 2.0, &[(first + i, Pauli::X), (first + j, Pauli::X)]);
                    sum.add(pref / 2.0, &[(first + i, Pauli::Y), (first + j, Pauli::Y)]);
                }
            }
        }
    }
}

fn add_coupling_terms(sum: &mut PauliSum, center: u32, first: u32, n: u32, eps: f64) {
    let g = eps / (2.0 * (n as f64).sqrt());
    for i in 0..n {
        sum.add(g, &[(center, Pauli::X), (first + i, Pauli::X)]);
        sum.add(g, &[(center, Pauli::Y), (first + i, Pauli::Y)]);
    }
}

/// Bath Hamiltonian on its own N-spin space, written out per spin.
pub fn bruteforce_bath_h(bath: &BathSpec) -> Result<DenseMatrix, ModelError> {
    if bath.n_spins > BRUTEFORCE_MAX_SPINS {
        return Err(ModelError::TooLarge { spins: bath.n_spins });
    }
    let mut sum = PauliSum::new(bath.n_spins);
    add_bath_terms(&mut sum, bath, 0);
    Ok(sum.into_matrix())
}

/// Full Hamiltonian on 2^(system + bath spins) dimensions, assembled
/// literally from per-spin Pauli operators including every pairwise bath term.
///
/// Site order: central qubit(s), then bath spins (bath 1 before bath 2).
pub fn bruteforce_full_h(model: impl Into<FullSpaceModel>) -> Result<DenseMatrix, ModelError> {
    match model.into() {
        FullSpaceModel::Single(cfg) => {
            cfg.validate()?;
            let spins = 1 + cfg.n_bath;
            if spins > BRUTEFORCE_MAX_SPINS {
                return Err(ModelError::TooLarge { spins });
            }
            let mut sum = PauliSum::new(spins);
            sum.add(cfg.omega0 / 2.0, &[(0, Pauli::Z)]);
            add_bath_terms(&mut sum, &cfg.bath(), 1);
            add_coupling_terms(&mut sum, 0, 1, cfg.n_bath, cfg.epsilon);
            Ok(sum.into_matrix())
        }
        FullSpaceModel::TwoQubit(cfg) => {
            cfg.validate()?;
            let spins = 2 + cfg.m_bath + cfg.n_bath;
            if spins > BRUTEFORCE_MAX_SPINS {
                return Err(ModelError::TooLarge { spins });
            }
            let (first_a, first_b) = (2, 2 + cfg.m_bath);
            let mut sum = PauliSum::new(spins);
            sum.add(cfg.omega1 / 2.0, &[(0, Pauli::Z)]);
            sum.add(cfg.omega2 / 2.0, &[(1, Pauli::Z)]);
            let axis = match cfg.coupling_axis {
                CouplingAxis::ZZ => Pauli::Z,
                CouplingAxis::XX => Pauli::X,
            };
            sum.add(cfg.effective_delta() / 2.0, &[(0, axis), (1, axis)]);
            add_bath_terms(&mut sum, &cfg.bath_a(), first_a);
            add_bath_terms(&mut sum, &cfg.bath_b(), first_b);
            add_coupling_terms(&mut sum, 0, first_a, cfg.m_bath, cfg.eps1);
            add_coupling_terms(&mut sum, 1, first_b, cfg.n_bath, cfg.eps2);
            Ok(sum.into_matrix())
        }
    }
}

/// Computational-basis ket |b₀ b₁ …⟩ for a list of qubit values (0 or 1).
pub fn basis_ket(bits: &[u8]) -> Vec<C64> {
    let mut idx = 0usize;
    for &b in bits {
        idx = (idx << 1) | b as usize;
    }
    let mut psi = vec![ZERO; 1 << bits.len()];
    psi[idx] = ONE;
    psi
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::collective::sectors;
    use crate::numerics::{hermitian_eigenvalues, kron};

    pub(crate) fn single_cfg(n: u32, interacting: bool) -> ModelConfig {
        ModelConfig { omega0: 2.0, omega: 2.0, epsilon: 1.0, n_bath: n, temperature: 1.0, bath_interacting: interacting }
    }

    pub(crate) fn two_cfg(m: u32, n: u32, interacting: bool, axis: CouplingAxis) -> TwoQubitConfig {
        TwoQubitConfig {
            omega1: 3.0,
            omega2: 3.1,
            omega_a: 2.0,
            omega_b: 2.1,
            eps1: 2.4,
            eps2: 2.5,
            delta: 4.0,
            m_bath: m,
            n_bath: n,
            temperature: 1.0,
            bath_interacting: interacting,
            scenario: Scenario::Global,
            coupling_axis: axis,
        }
    }

    fn union_spectrum(blocks: impl Iterator<Item = (DenseMatrix, usize)>) -> Vec<f64> {
        let mut all = Vec::new();
        for (h, mult) in blocks {
            let vals = hermitian_eigenvalues(&h).unwrap();
            for _ in 0..mult {
                all.extend_from_slice(&vals);
            }
        }
        all.sort_by(f64::total_cmp);
        all
    }

    fn max_spectrum_gap(a: &[f64], b: &[f64]) -> f64 {
        assert_eq!(a.len(), b.len());
        a.iter().zip(b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
    }

    #[test]
    fn single_spin_bath_matches_hand_assembled_paulis() {
        // N = 1, non-interacting: (ω₀/2)σz⊗1 + (ω/2) 1⊗σz + (ε/2)(σx⊗σx + σy⊗σy)
        let cfg = ModelConfig { omega0: 1.3, omega: 0.7, epsilon: 0.9, n_bath: 1, temperature: 1.0, bath_interacting: false };
        let sector = &sectors(1)[0];
        let got = single_qubit_sector_h(&cfg, sector).unwrap().h;
        let id = DenseMatrix::identity(2);
        let mut want = kron(&pauli_z(), &id).scale_real(0.65);
        want += &kron(&id, &pauli_z()).scale_real(0.35);
        want += &(&kron(&pauli_x(), &pauli_x()) + &kron(&pauli_y(), &pauli_y())).scale_real(0.45);
        assert!(got.max_abs_diff(&want) < 1e-14);
        let full = bruteforce_full_h(cfg).unwrap();
        assert!(got.max_abs_diff(&full) < 1e-14);
    }

    #[test]
    fn two_qubit_single_spin_baths_match_hand_assembled_paulis() {
        let mut cfg = two_cfg(1, 1, false, CouplingAxis::ZZ);
        cfg.omega_a = 0.8;
        let s = &sectors(1)[0];
        let got = two_qubit_global_sector_h(&cfg, s, s).unwrap().h;
        let (id, sx, sy, sz) = (DenseMatrix::identity(2), pauli_x(), pauli_y(), pauli_z());
        let k = |a: &DenseMatrix, b: &DenseMatrix, c: &DenseMatrix, d: &DenseMatrix| kron_all(&[a, b, c, d]);
        let mut want = k(&sz, &id, &id, &id).scale_real(1.5);
        want += &k(&id, &sz, &id, &id).scale_real(1.55);
        want += &k(&sz, &sz, &id, &id).scale_real(2.0);
        want += &k(&id, &id, &sz, &id).scale_real(0.4);
        want += &k(&id, &id, &id, &sz).scale_real(1.05);
        want += &(&k(&sx, &id, &sx, &id) + &k(&sy, &id, &sy, &id)).scale_real(1.2);
        want += &(&k(&id, &sx, &id, &sx) + &k(&id, &sy, &id, &sy)).scale_real(1.25);
        assert!(got.max_abs_diff(&want) < 1e-14);
        assert!(got.max_abs_diff(&bruteforce_full_h(cfg).unwrap()) < 1e-14);
    }

    #[test]
    fn builders_are_hermitian() {
        for interacting in [false, true] {
            for s in sectors(5) {
                let h = single_qubit_sector_h(&single_cfg(5, interacting), &s).unwrap();
                assert!(h.h.hermiticity_error() < 1e-12);
                assert_eq!(h.h.dim(), h.dims.iter().product::<usize>());
            }
            for axis in [CouplingAxis::ZZ, CouplingAxis::XX] {
                let cfg = two_cfg(3, 2, interacting, axis);
                for s1 in sectors(3) {
                    for s2 in sectors(2) {
                        let h = two_qubit_global_sector_h(&cfg, &s1, &s2).unwrap();
                        assert!(h.h.hermiticity_error() < 1e-12);
                        assert_eq!(h.system_dim(), 4);
                        assert_eq!(h.bath_dim(), s1.dim() * s2.dim());
                    }
                }
            }
        }
    }

    #[test]
    fn single_qubit_sector_spectra_match_full_space() {
        for n in 1..=8u32 {
            for interacting in [false, true] {
                let cfg = single_cfg(n, interacting);
                let full = hermitian_eigenvalues(&bruteforce_full_h(cfg).unwrap()).unwrap();
                let blocks = sectors(n).into_iter().map(|s| {
                    let mult = num_traits::ToPrimitive::to_usize(&s.multiplicity).unwrap();
                    (single_qubit_sector_h(&cfg, &s).unwrap().h, mult)
                });
                let gap = max_spectrum_gap(&full, &union_spectrum(blocks));
                assert!(gap < 1e-10, "n = {n}, interacting = {interacting}, gap = {gap:e}");
            }
        }
    }

    #[test]
    fn two_qubit_sector_spectra_match_full_space() {
        for m in 1..=4u32 {
            for interacting in [false, true] {
                for axis in [CouplingAxis::ZZ, CouplingAxis::XX] {
                    let cfg = two_cfg(m, m, interacting, axis);
                    let full = hermitian_eigenvalues(&bruteforce_full_h(cfg).unwrap()).unwrap();
                    let mut blocks = Vec::new();
                    for s1 in sectors(m) {
                        for s2 in sectors(m) {
                            let mult = num_traits::ToPrimitive::to_usize(&(&s1.multiplicity * &s2.multiplicity)).unwrap();
                            blocks.push((two_qubit_global_sector_h(&cfg, &s1, &s2).unwrap().h, mult));
                        }
                    }
                    let gap = max_spectrum_gap(&full, &union_spectrum(blocks.into_iter()));
                    assert!(gap < 1e-10, "m = {m}, {interacting}, {axis:?}, gap = {gap:e}");
                }
            }
        }
    }

    #[test]
    fn parameters_enter_linearly() {
        let cfg = ModelConfig { omega0: 1.1, omega: 0.6, epsilon: 0.8, n_bath: 6, temperature: 1.0, bath_interacting: true };
        let doubled = ModelConfig { omega0: 2.2, omega: 1.2, epsilon: 1.6, ..cfg };
        for s in sectors(6) {
            let a = hermitian_eigenvalues(&single_qubit_sector_h(&cfg, &s).unwrap().h).unwrap();
            let b = hermitian_eigenvalues(&single_qubit_sector_h(&doubled, &s).unwrap().h).unwrap();
            for (x, y) in a.iter().zip(&b) {
                assert!((2.0 * x - y).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn coupling_preserves_excitation_blocks() {
        // the flip-flop coupling conserves σz/2 + Jz, so each sector splits
        // into blocks of at most two states
        for s in sectors(9) {
            let h = single_qubit_sector_h(&single_cfg(9, true), &s).unwrap().h;
            let blocks = crate::numerics::hermitian_block_eig(&h).unwrap();
            assert!(blocks.iter().all(|b| b.indices.len() <= 2));
        }
    }

    #[test]
    fn rejects_bad_inputs() {
        let cfg = single_cfg(4, true);
        let bad = SectorSpec { two_j: 3, multiplicity: 1u32.into() };
        assert_eq!(
            single_qubit_sector_h(&cfg, &bad).unwrap_err(),
            ModelError::InvalidSector { two_j: 3, n_bath: 4 }
        );
        let mut local = two_cfg(2, 2, true, CouplingAxis::ZZ);
        local.scenario = Scenario::Local;
        let s = &sectors(2)[0];
        assert!(matches!(
            two_qubit_global_sector_h(&local, s, s),
            Err(ModelError::ScenarioMismatch { .. })
        ));
        assert_eq!(bruteforce_full_h(single_cfg(14, true)).unwrap_err(), ModelError::TooLarge { spins: 15 });
        let cold = ModelConfig { temperature: 0.0, ..cfg };
        assert!(matches!(cold.validate(), Err(ModelError::InvalidConfig(_))));
    }

    #[test]
    fn local_bruteforce_drops_central_coupling() {
        let mut cfg = two_cfg(1, 1, true, CouplingAxis::ZZ);
        cfg.scenario = Scenario::Local;
        let local = bruteforce_full_h(cfg).unwrap();
        let global = bruteforce_full_h(TwoQubitConfig { delta: 0.0, scenario: Scenario::Global, ..cfg }).unwrap();
        assert!(local.max_abs_diff(&global) < 1e-15);
    }

    #[test]
    fn basis_ket_ordering() {
        let k = basis_ket(&[1, 0]);
        assert_eq!(k[2], ONE);
        assert_eq!(k.iter().filter(|z| **z != ZERO).count(), 1);
    }
}
