//! Full tensor-product evolution, used to validate the sector method.
//!
//! Everything here works on the 2^(spins) space built by
//! [`bruteforce_full_h`]: the bath Gibbs state is the matrix exponential of
//! the literal Pauli-sum bath Hamiltonian, the propagator is
//! `V e^{-iΛt} V†` from a dense eigendecomposition, and the reduced state is
//! a partial trace over the bath factor. Expensive; meant for at most ~10 spins.

use crate::dynamics::{validate_density, DynamicsError};
use crate::models::{bruteforce_bath_h, bruteforce_full_h, BathSpec, FullSpaceModel, Scenario};
use crate::numerics::{hermitian_eig, kron, partial_trace, DenseMatrix, EigDecomposition, C64};
use crate::par;

/// `exp(-H_E / T) / Z` on the bath's full 2^N space.
pub fn bruteforce_thermal_state(bath: &BathSpec) -> Result<DenseMatrix, DynamicsError> {
    if !(bath.temperature > 0.0) {
        return Err(DynamicsError::NonPositiveTemperature(bath.temperature));
    }
    let eig = hermitian_eig(&bruteforce_bath_h(bath)?)?;
    let e0 = eig.eigenvalues[0];
    let unnorm = eig.map_spectrum(|e| C64::new((-(e - e0) / bath.temperature).exp(), 0.0));
    let z = unnorm.trace().re;
    Ok(unnorm.scale_real(1.0 / z))
}

/// A model on the full space with its joint initial states.
pub struct FullSpaceEvolution {
    pub hamiltonian: DenseMatrix,
    eig: EigDecomposition,
    system_dim: usize,
    bath_dim: usize,
    bath_state: DenseMatrix,
}

impl FullSpaceEvolution {
    pub fn new(model: impl Into<FullSpaceModel>) -> Result<Self, DynamicsError> {
        let model = model.into();
        let (system_dim, bath_state) = match &model {
            FullSpaceModel::Single(cfg) => (2, bruteforce_thermal_state(&cfg.bath())?),
            FullSpaceModel::TwoQubit(cfg) => {
                if cfg.scenario != Scenario::Global {
                    return Err(crate::models::ModelError::ScenarioMismatch { expected: Scenario::Global }.into());
                }
                let ra = bruteforce_thermal_state(&cfg.bath_a())?;
                let rb = bruteforce_thermal_state(&cfg.bath_b())?;
                (4, kron(&ra, &rb))
            }
        };
        let hamiltonian = bruteforce_full_h(model)?;
        let eig = hermitian_eig(&hamiltonian)?;
        Ok(FullSpaceEvolution {
            bath_dim: bath_state.dim(),
            hamiltonian,
            eig,
            system_dim,
            bath_state,
        })
    }

    /// `ρ_S(0) ⊗ ρ_E`.
    pub fn joint_initial_state(&self, rho0: &DenseMatrix) -> Result<DenseMatrix, DynamicsError> {
        validate_density(rho0, self.system_dim)?;
        Ok(kron(rho0, &self.bath_state))
    }

    pub fn propagator(&self, t: f64) -> DenseMatrix {
        self.eig.map_spectrum(|e| C64::from_polar(1.0, -e * t))
    }

    /// `U ρ U†` for Hermitian `rho`, computed as `U (U ρ)†`.
    pub fn evolve_joint(&self, u: &DenseMatrix, rho: &DenseMatrix) -> DenseMatrix {
        u.matmul(&u.matmul(rho).adjoint())
    }

    pub fn reduce(&self, joint: &DenseMatrix) -> DenseMatrix {
        partial_trace(joint, &[self.system_dim, self.bath_dim], &[0]).expect("dims are consistent")
    }

    /// Reduced trajectories for several initial states.
    ///
    /// Same result as reducing `U(t) ρ U(t)†` at every time, but contracted
    /// in the eigenbasis: with `ρ̃ = V† ρ V` and
    /// `W^{ab}_{kl} = Σ_e V_{(a,e)k} conj(V_{(b,e)l})`,
    /// `ρ_S(t)_{ab} = Σ_{kl} W^{ab}_{kl} ρ̃_{kl} e^{-i(λ_k - λ_l)t}`.
    pub fn reduced_trajectories(
        &self,
        rho0s: &[DenseMatrix],
        times: &[f64],
    ) -> Result<Vec<Vec<DenseMatrix>>, DynamicsError> {
        let v = &self.eig.eigenvectors;
        let d = v.dim();
        let (s, nb) = (self.system_dim, self.bath_dim);
        let vh = v.adjoint();
        let rotated = rho0s
            .iter()
            .map(|r| Ok(vh.matmul(&self.joint_initial_state(r)?.matmul(v))))
            .collect::<Result<Vec<_>, DynamicsError>>()?;
        let nonzero: Vec<Vec<(usize, C64)>> = (0..d)
            .map(|r| v.row(r).iter().enumerate().filter(|(_, x)| x.norm_sqr() > 0.0).map(|(k, &x)| (k, x)).collect())
            .collect();
        let phases: Vec<Vec<C64>> = times
            .iter()
            .map(|&t| self.eig.eigenvalues.iter().map(|&e| C64::from_polar(1.0, -e * t)).collect())
            .collect();

        let mut out = vec![vec![DenseMatrix::zeros(s); times.len()]; rho0s.len()];
        for a in 0..s {
            for b in a..s {
                let mut w = DenseMatrix::zeros(d);
                for e in 0..nb {
                    for &(k, x) in &nonzero[a * nb + e] {
                        for &(l, y) in &nonzero[b * nb + e] {
                            w[(k, l)] += x * y.conj();
                        }
                    }
                }
                for (traj, rho) in out.iter_mut().zip(&rotated) {
                    let g: Vec<(usize, usize, C64)> = (0..d)
                        .flat_map(|k| (0..d).map(move |l| (k, l)))
                        .filter_map(|(k, l)| {
                            let x = w[(k, l)] * rho[(k, l)];
                            (x.norm_sqr() > 0.0).then_some((k, l, x))
                        })
                        .collect();
                    let values = par::map_collect(&phases, |ph| {
                        g.iter().fold(C64::new(0.0, 0.0), |acc, &(k, l, x)| acc + x * ph[k] * ph[l].conj())
                    });
                    for (state, value) in traj.iter_mut().zip(values) {
                        state[(a, b)] = value;
                        state[(b, a)] = value.conj();
                    }
                }
            }
        }
        Ok(out)
    }
}
