//! Scalar diagnostics on reduced states and trajectories.

use std::f64::consts::{FRAC_PI_2, PI};

use thiserror::Error;

use crate::dynamics::Trajectory;
use crate::numerics::{
    hermitian_eig, hermitian_eigenvalues, kron, matrix_norms, pauli_y, pauli_z, DenseMatrix, C64,
};

/// Negative eigenvalues down to this are treated as rounding and clipped.
pub const EIGEN_CLIP_TOL: f64 = 1e-9;
/// Allowed deviation of a state's trace (and Hermiticity) from the ideal.
pub const STATE_TRACE_TOL: f64 = 1e-8;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum MeasureError {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("invalid state: {0}")]
    InvalidState(String),
    #[error("trajectory does not start in the given pure state (deviation {deviation:e})")]
    ImpureInitialState { deviation: f64 },
    #[error("trajectory carries no generators")]
    MissingGenerators,
    #[error("time grid is not uniform from 0: {0}")]
    NonUniformGrid(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LogBase {
    Natural,
    Two,
}

impl LogBase {
    fn log(self, x: f64) -> f64 {
        match self {
            LogBase::Natural => x.ln(),
            LogBase::Two => x.log2(),
        }
    }
}

/// `Tr(σ_z ρ)` for a single qubit.
pub fn sigma_z_expectation(rho: &DenseMatrix) -> f64 {
    assert_eq!(rho.dim(), 2);
    pauli_z().matmul(rho).trace().re
}

/// `½ Σ |λ(ρ₁ − ρ₂)|`.
pub fn trace_distance(rho1: &DenseMatrix, rho2: &DenseMatrix) -> Result<f64, MeasureError> {
    if rho1.dim() != rho2.dim() {
        return Err(MeasureError::DimensionMismatch(format!("{} vs {}", rho1.dim(), rho2.dim())));
    }
    let diff = (rho1 - rho2).hermitian_part();
    Ok(0.5 * matrix_norms(&diff).tr)
}

fn check_state(rho: &DenseMatrix, dim: Option<usize>) -> Result<Vec<f64>, MeasureError> {
    if let Some(d) = dim {
        if rho.dim() != d {
            return Err(MeasureError::DimensionMismatch(format!("expected {d}x{d}, got {0}x{0}", rho.dim())));
        }
    }
    let herm = rho.hermiticity_error();
    if herm > STATE_TRACE_TOL {
        return Err(MeasureError::InvalidState(format!("not Hermitian (deviation {herm:e})")));
    }
    let tr = rho.trace();
    if (tr - 1.0).norm() > STATE_TRACE_TOL {
        return Err(MeasureError::InvalidState(format!("trace {tr} differs from 1")));
    }
    let vals = hermitian_eigenvalues(&rho.hermitian_part())
        .map_err(|e| MeasureError::InvalidState(e.to_string()))?;
    if vals[0] < -EIGEN_CLIP_TOL {
        return Err(MeasureError::InvalidState(format!("eigenvalue {:e} is negative", vals[0])));
    }
    Ok(vals.into_iter().map(|v| v.max(0.0)).collect())
}

fn entropy_of_spectrum(vals: impl IntoIterator<Item = f64>, base: LogBase) -> f64 {
    let s: f64 = vals.into_iter().filter(|&l| l > 0.0).map(|l| -l * base.log(l)).sum();
    s.max(0.0)
}

/// `-Tr ρ log ρ` with `0 log 0 = 0`.
pub fn von_neumann_entropy(rho: &DenseMatrix, base: LogBase) -> Result<f64, MeasureError> {
    Ok(entropy_of_spectrum(check_state(rho, None)?, base))
}

// ---------------------------------------------------------------------------
// quantum speed limit

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QslResult {
    pub tau: f64,
    pub bures_angle: f64,
    pub lambda_op: f64,
    pub lambda_hs: f64,
    pub lambda_tr: f64,
    pub tau_qsl: f64,
}

impl QslResult {
    fn new(tau: f64, fidelity: f64, integrals: [f64; 3]) -> Self {
        let bures_angle = fidelity.clamp(0.0, 1.0).sqrt().acos();
        let [lambda_op, lambda_hs, lambda_tr] = if tau > 0.0 { integrals.map(|x| x / tau) } else { [0.0; 3] };
        let sin2 = bures_angle.sin().powi(2);
        // the 1/λ_op branch is the largest since ‖·‖_op ≤ ‖·‖_hs ≤ ‖·‖_tr
        let tau_qsl = if lambda_op > 0.0 {
            [lambda_op, lambda_hs, lambda_tr].iter().map(|l| 1.0 / l).fold(0.0, f64::max) * sin2
        } else {
            0.0
        };
        QslResult { tau, bures_angle, lambda_op, lambda_hs, lambda_tr, tau_qsl }
    }
}

struct QslInputs<'a> {
    generators: &'a [DenseMatrix],
    step: f64,
}

fn qsl_inputs<'a>(traj: &'a Trajectory, psi0: &[C64]) -> Result<QslInputs<'a>, MeasureError> {
    let generators = traj.generators.as_deref().ok_or(MeasureError::MissingGenerators)?;
    let times = &traj.times;
    if times.is_empty() || times[0].abs() > 1e-12 {
        return Err(MeasureError::NonUniformGrid("grid must start at t = 0".into()));
    }
    let step = if times.len() > 1 { times[1] - times[0] } else { 0.0 };
    let span = times[times.len() - 1];
    for (k, w) in times.windows(2).enumerate() {
        if ((w[1] - w[0]) - step).abs() > 1e-9 * span.max(1.0) {
            return Err(MeasureError::NonUniformGrid(format!("step {k} is {}", w[1] - w[0])));
        }
    }
    let norm: f64 = psi0.iter().map(|z| z.norm_sqr()).sum();
    if (norm - 1.0).abs() > 1e-10 {
        return Err(MeasureError::InvalidState(format!("initial vector has squared norm {norm}")));
    }
    if traj.states[0].dim() != psi0.len() {
        return Err(MeasureError::DimensionMismatch("initial vector vs trajectory states".into()));
    }
    let deviation = traj.states[0].max_abs_diff(&DenseMatrix::outer(psi0));
    if deviation > 1e-8 {
        return Err(MeasureError::ImpureInitialState { deviation });
    }
    Ok(QslInputs { generators, step })
}

fn fidelity(psi0: &[C64], rho: &DenseMatrix) -> f64 {
    rho.expectation(psi0).re
}

/// Speed-limit time for driving time `tau`, the last point of `traj`.
///
/// The trajectory must start at t = 0 in |ψ₀⟩⟨ψ₀| on a uniform grid and carry
/// generators; the norm averages use the composite trapezoidal rule on that grid.
pub fn qsl_time(traj: &Trajectory, psi0: &[C64], tau: f64) -> Result<QslResult, MeasureError> {
    let inputs = qsl_inputs(traj, psi0)?;
    let end = *traj.times.last().unwrap();
    if (end - tau).abs() > 1e-9 * tau.abs().max(1.0) {
        return Err(MeasureError::NonUniformGrid(format!("grid ends at {end}, expected τ = {tau}")));
    }
    let mut integrals = [0.0; 3];
    let norms: Vec<[f64; 3]> = inputs.generators.iter().map(norm_triple).collect();
    for w in norms.windows(2) {
        for i in 0..3 {
            integrals[i] += 0.5 * inputs.step * (w[0][i] + w[1][i]);
        }
    }
    Ok(QslResult::new(tau, fidelity(psi0, traj.states.last().unwrap()), integrals))
}

/// [`qsl_time`] for every grid point taken as the driving time, sharing one
/// cumulative quadrature. Entry k has `tau = times[k]`.
pub fn qsl_profile(traj: &Trajectory, psi0: &[C64]) -> Result<Vec<QslResult>, MeasureError> {
    let inputs = qsl_inputs(traj, psi0)?;
    let norms: Vec<[f64; 3]> = inputs.generators.iter().map(norm_triple).collect();
    let mut integrals = [0.0; 3];
    let mut out = Vec::with_capacity(norms.len());
    for (k, (&t, rho)) in traj.times.iter().zip(&traj.states).enumerate() {
        if k > 0 {
            for i in 0..3 {
                integrals[i] += 0.5 * inputs.step * (norms[k - 1][i] + norms[k][i]);
            }
        }
        out.push(QslResult::new(t, fidelity(psi0, rho), integrals));
    }
    Ok(out)
}

fn norm_triple(g: &DenseMatrix) -> [f64; 3] {
    let n = matrix_norms(&g.hermitian_part());
    [n.op, n.hs, n.tr]
}

// ---------------------------------------------------------------------------
// two-qubit correlations

/// Wootters concurrence `max{0, λ₁ − λ₂ − λ₃ − λ₄}`.
pub fn concurrence(rho: &DenseMatrix) -> Result<f64, MeasureError> {
    check_state(rho, Some(4))?;
    let rho = rho.hermitian_part();
    let yy = kron(&pauli_y(), &pauli_y());
    let tilde = yy.matmul(&rho.conj()).matmul(&yy);
    let sqrt_rho = hermitian_eig(&rho)
        .map_err(|e| MeasureError::InvalidState(e.to_string()))?
        .map_spectrum(|l| C64::new(l.max(0.0).sqrt(), 0.0));
    let r = sqrt_rho.matmul(&tilde).matmul(&sqrt_rho).hermitian_part();
    let mut lam: Vec<f64> = hermitian_eigenvalues(&r)
        .map_err(|e| MeasureError::InvalidState(e.to_string()))?
        .into_iter()
        .map(|x| x.max(0.0).sqrt())
        .collect();
    lam.sort_by(|a, b| b.total_cmp(a));
    Ok((lam[0] - lam[1] - lam[2] - lam[3]).max(0.0))
}

/// Which qubit of the pair receives the projective measurement.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum MeasuredQubit {
    P,
    #[default]
    Q,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DiscordResult {
    /// In bits.
    pub discord: f64,
    pub optimal_theta: f64,
    pub optimal_phi: f64,
    /// Minimal conditional entropy on the search grid, before refinement.
    pub grid_value: f64,
    /// Minimal conditional entropy after refinement.
    pub conditional_entropy: f64,
}

pub const DISCORD_THETA_POINTS: usize = 61;
pub const DISCORD_PHI_POINTS: usize = 121;
const PROB_FLOOR: f64 = 1e-12;

/// Entropy (bits) of a 2×2 Hermitian PSD matrix given by its entries, not normalized.
fn qubit_entropy_bits(a: f64, d: f64, b: C64) -> f64 {
    let tr = a + d;
    let disc = ((a - d) * (a - d) + 4.0 * b.norm_sqr()).sqrt();
    let l1 = (0.5 * (tr + disc)) / tr;
    let l2 = ((0.5 * (tr - disc)) / tr).max(0.0);
    entropy_of_spectrum([l1, l2], LogBase::Two)
}

/// Measurement basis `|u⟩ = (cos θ, e^{iφ} sin θ)`, `|v⟩ = (sin θ, −e^{iφ} cos θ)`.
pub fn measurement_basis(theta: f64, phi: f64) -> [[C64; 2]; 2] {
    let (s, c) = theta.sin_cos();
    let e = C64::from_polar(1.0, phi);
    [[C64::new(c, 0.0), e * s], [C64::new(s, 0.0), -e * c]]
}

/// `Σ_j p_j S(ρ_{unmeasured|j})` for a projective measurement along (θ, φ), in bits.
pub fn conditional_entropy(rho: &DenseMatrix, side: MeasuredQubit, theta: f64, phi: f64) -> f64 {
    let mut total = 0.0;
    for w in measurement_basis(theta, phi) {
        // unnormalized post-measurement state of the other qubit
        let mut m = [[C64::new(0.0, 0.0); 2]; 2];
        for (x, row) in m.iter_mut().enumerate() {
            for (y, entry) in row.iter_mut().enumerate() {
                let mut acc = C64::new(0.0, 0.0);
                for q in 0..2 {
                    for qp in 0..2 {
                        let (r, c) = match side {
                            MeasuredQubit::Q => (2 * x + q, 2 * y + qp),
                            MeasuredQubit::P => (2 * q + x, 2 * qp + y),
                        };
                        acc += w[q].conj() * rho[(r, c)] * w[qp];
                    }
                }
                *entry = acc;
            }
        }
        let p = m[0][0].re + m[1][1].re;
        if p < PROB_FLOOR {
            continue;
        }
        total += p * qubit_entropy_bits(m[0][0].re, m[1][1].re, m[0][1]);
    }
    total
}

fn golden_min(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64, tol: f64) -> (f64, f64) {
    let g = (5f64.sqrt() - 1.0) / 2.0;
    let mut x1 = hi - g * (hi - lo);
    let mut x2 = lo + g * (hi - lo);
    let (mut f1, mut f2) = (f(x1), f(x2));
    while hi - lo > tol {
        if f1 <= f2 {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - g * (hi - lo);
            f1 = f(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + g * (hi - lo);
            f2 = f(x2);
        }
    }
    if f1 <= f2 { (x1, f1) } else { (x2, f2) }
}

/// Quantum discord (bits) with the measurement on `side`:
/// `S(ρ_measured) − S(ρ) + min Σ_j p_j S(ρ_{other|j})`.
///
/// The minimum is taken over a 61×121 grid on θ ∈ [0, π/2], φ ∈ [0, 2π),
/// then refined by alternating golden-section searches around the grid argmin.
pub fn quantum_discord_with(rho: &DenseMatrix, side: MeasuredQubit) -> Result<DiscordResult, MeasureError> {
    let spectrum = check_state(rho, Some(4))?;
    let rho = rho.hermitian_part();
    let keep = match side {
        MeasuredQubit::P => 0,
        MeasuredQubit::Q => 1,
    };
    let marginal = crate::numerics::partial_trace(&rho, &[2, 2], &[keep])
        .map_err(|e| MeasureError::DimensionMismatch(e.to_string()))?;
    let s_measured = qubit_entropy_bits(marginal[(0, 0)].re, marginal[(1, 1)].re, marginal[(0, 1)]);
    let s_joint = entropy_of_spectrum(spectrum, LogBase::Two);

    let objective = |theta: f64, phi: f64| conditional_entropy(&rho, side, theta, phi);
    let d_theta = FRAC_PI_2 / (DISCORD_THETA_POINTS - 1) as f64;
    let d_phi = 2.0 * PI / DISCORD_PHI_POINTS as f64;
    let cells = crate::par::map_range(DISCORD_THETA_POINTS * DISCORD_PHI_POINTS, |k| {
        let (theta, phi) = ((k / DISCORD_PHI_POINTS) as f64 * d_theta, (k % DISCORD_PHI_POINTS) as f64 * d_phi);
        (objective(theta, phi), theta, phi)
    });
    // row-major (θ, φ) order, so strict < keeps the lexicographically smallest tie
    let (grid_value, mut theta, mut phi) =
        cells.into_iter().fold((f64::INFINITY, 0.0, 0.0), |best, c| if c.0 < best.0 { c } else { best });

    let mut value = grid_value;
    for _ in 0..200 {
        let before = value;
        let (t, v) = golden_min(|x| objective(x, phi), (theta - d_theta).max(0.0), (theta + d_theta).min(FRAC_PI_2), 1e-12);
        if v < value {
            theta = t;
            value = v;
        }
        let (p, v) = golden_min(|x| objective(theta, x), phi - d_phi, phi + d_phi, 1e-12);
        if v < value {
            phi = p.rem_euclid(2.0 * PI);
            value = v;
        }
        if before - value < 1e-14 {
            break;
        }
    }

    Ok(DiscordResult {
        discord: s_measured - s_joint + value,
        optimal_theta: theta,
        optimal_phi: phi,
        grid_value,
        conditional_entropy: value,
    })
}

/// [`quantum_discord_with`] measuring the second qubit.
pub fn quantum_discord(rho: &DenseMatrix) -> Result<DiscordResult, MeasureError> {
    quantum_discord_with(rho, MeasuredQubit::Q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models::basis_ket;
    use crate::numerics::hermitian_eig;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn bell() -> DenseMatrix {
        let s = std::f64::consts::FRAC_1_SQRT_2;
        DenseMatrix::outer(&[C64::new(s, 0.0), C64::new(0.0, 0.0), C64::new(0.0, 0.0), C64::new(s, 0.0)])
    }

    fn werner(p: f64) -> DenseMatrix {
        &bell().scale_real(p) + &DenseMatrix::identity(4).scale_real((1.0 - p) / 4.0)
    }

    fn random_state(rng: &mut ChaCha8Rng, dim: usize) -> DenseMatrix {
        let a = DenseMatrix::from_fn(dim, |_, _| C64::new(rng.random::<f64>() - 0.5, rng.random::<f64>() - 0.5));
        let p = a.matmul(&a.adjoint());
        let tr = p.trace().re;
        p.scale_real(1.0 / tr)
    }

    fn random_unitary(rng: &mut ChaCha8Rng, dim: usize) -> DenseMatrix {
        let h = random_state(rng, dim);
        let h = &h + &DenseMatrix::from_fn(dim, |i, j| if i == j { C64::new(rng.random::<f64>(), 0.0) } else { C64::new(0.0, 0.0) });
        hermitian_eig(&h).unwrap().eigenvectors
    }

    fn state_from(entries: &[f64], dim: usize) -> DenseMatrix {
        let a = DenseMatrix::from_fn(dim, |i, j| C64::new(entries[2 * (i * dim + j)], entries[2 * (i * dim + j) + 1]));
        let p = a.matmul(&a.adjoint());
        let tr = p.trace().re;
        p.scale_real(1.0 / tr)
    }

    fn conj_by(u: &DenseMatrix, rho: &DenseMatrix) -> DenseMatrix {
        u.matmul(rho).matmul(&u.adjoint())
    }

    #[test]
    fn trace_distance_anchors() {
        let k0 = DenseMatrix::outer(&basis_ket(&[0]));
        let k1 = DenseMatrix::outer(&basis_ket(&[1]));
        let mixed = DenseMatrix::identity(2).scale_real(0.5);
        assert_eq!(trace_distance(&k0, &k0).unwrap(), 0.0);
        assert!((trace_distance(&k0, &k1).unwrap() - 1.0).abs() < 1e-15);
        assert!((trace_distance(&k0, &mixed).unwrap() - 0.5).abs() < 1e-15);
        assert!(matches!(trace_distance(&k0, &bell()), Err(MeasureError::DimensionMismatch(_))));
    }

    #[test]
    fn entropy_anchors() {
        let mixed = DenseMatrix::identity(2).scale_real(0.5);
        assert!(von_neumann_entropy(&bell(), LogBase::Two).unwrap().abs() < 1e-12);
        assert!((von_neumann_entropy(&mixed, LogBase::Two).unwrap() - 1.0).abs() < 1e-15);
        assert!((von_neumann_entropy(&mixed, LogBase::Natural).unwrap() - 2f64.ln()).abs() < 1e-15);
        let d = DenseMatrix::from_diagonal(&[0.25, 0.75]);
        let want = -0.25 * 0.25f64.log2() - 0.75 * 0.75f64.log2();
        assert!((von_neumann_entropy(&d, LogBase::Two).unwrap() - want).abs() < 1e-14);
        assert!((want - 0.8113).abs() < 1e-4);
    }

    #[test]
    fn entropy_rejects_bad_states() {
        let neg = DenseMatrix::from_diagonal(&[1.0 + 1e-6, -1e-6]);
        assert!(matches!(von_neumann_entropy(&neg, LogBase::Two), Err(MeasureError::InvalidState(_))));
        let tiny = DenseMatrix::from_diagonal(&[1.0 + 1e-10, -1e-10]);
        assert!(von_neumann_entropy(&tiny, LogBase::Two).unwrap().abs() < 1e-8);
        let untraced = DenseMatrix::from_diagonal(&[0.6, 0.6]);
        assert!(matches!(von_neumann_entropy(&untraced, LogBase::Two), Err(MeasureError::InvalidState(_))));
    }

    #[test]
    fn concurrence_anchors() {
        assert!((concurrence(&bell()).unwrap() - 1.0).abs() < 1e-12);
        assert!((concurrence(&werner(0.5)).unwrap() - 0.25).abs() < 1e-12);
        assert!(concurrence(&werner(0.2)).unwrap() == 0.0);
        let k11 = DenseMatrix::outer(&basis_ket(&[1, 1]));
        assert_eq!(concurrence(&k11).unwrap(), 0.0);
    }

    /// Closed-form Werner discord with projective measurement on either side.
    fn werner_discord(p: f64) -> f64 {
        let xlx = |x: f64| if x > 0.0 { x * x.log2() } else { 0.0 };
        0.25 * xlx(1.0 - p) - 0.5 * xlx(1.0 + p) + 0.25 * xlx(1.0 + 3.0 * p)
    }

    #[test]
    fn discord_anchors() {
        let b = quantum_discord(&bell()).unwrap();
        assert!((b.discord - 1.0).abs() < 1e-6);
        for p in [0.1, 0.5, 0.9] {
            let d = quantum_discord(&werner(p)).unwrap().discord;
            assert!((d - werner_discord(p)).abs() < 1e-8, "p = {p}: {d} vs {}", werner_discord(p));
        }
        let k11 = DenseMatrix::outer(&basis_ket(&[1, 1]));
        assert!(quantum_discord(&k11).unwrap().discord.abs() < 1e-9);
    }

    #[test]
    fn discord_matches_fine_grid_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let states = [werner(0.5), random_state(&mut rng, 4)];
        for rho in &states {
            let res = quantum_discord(rho).unwrap();
            // independent fine grid over the same parameter domain
            let (nt, np) = (600usize, 1200usize);
            let mut best = f64::INFINITY;
            for i in 0..=nt {
                for k in 0..np {
                    let theta = FRAC_PI_2 * i as f64 / nt as f64;
                    let phi = 2.0 * PI * k as f64 / np as f64;
                    best = best.min(conditional_entropy(rho, MeasuredQubit::Q, theta, phi));
                }
            }
            let marginal = crate::numerics::partial_trace(rho, &[2, 2], &[1]).unwrap();
            let s_q = von_neumann_entropy(&marginal, LogBase::Two).unwrap();
            let s_pq = von_neumann_entropy(rho, LogBase::Two).unwrap();
            let oracle = s_q - s_pq + best;
            assert!((res.discord - oracle).abs() < 1e-4, "{} vs {oracle}", res.discord);
            assert!(res.conditional_entropy <= res.grid_value + 1e-9);
            assert!(res.conditional_entropy <= best + 1e-9);
        }
    }

    #[test]
    fn conditional_entropy_of_computational_measurement() {
        // θ = 0 measures σ_z on Q; for |Φ+⟩ each outcome leaves P pure
        assert!(conditional_entropy(&bell(), MeasuredQubit::Q, 0.0, 0.0).abs() < 1e-12);
        let basis = measurement_basis(0.3, 1.1);
        let overlap: C64 = basis[0].iter().zip(&basis[1]).map(|(a, b)| a.conj() * b).sum();
        assert!(overlap.norm() < 1e-15);
    }

    #[test]
    fn discord_side_swap_symmetry() {
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        let rho = random_state(&mut rng, 4);
        let swap = DenseMatrix::from_fn(4, |i, j| {
            let sw = |k: usize| (k % 2) * 2 + k / 2;
            if i == sw(j) { C64::new(1.0, 0.0) } else { C64::new(0.0, 0.0) }
        });
        let swapped = conj_by(&swap, &rho);
        let a = quantum_discord_with(&rho, MeasuredQubit::P).unwrap().discord;
        let b = quantum_discord_with(&swapped, MeasuredQubit::Q).unwrap().discord;
        assert!((a - b).abs() < 1e-8);
    }

    #[test]
    fn qsl_closed_qubit_closed_form() {
        // H = σz, so L(ρ_t) = -i[σz, ρ_t]; exact trajectory supplied directly
        let tau = std::f64::consts::FRAC_PI_4;
        let n = 1000;
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let psi0 = [C64::new(s, 0.0), C64::new(s, 0.0)];
        let times: Vec<f64> = (0..=n).map(|k| tau * k as f64 / n as f64).collect();
        let hs = pauli_z();
        let states: Vec<DenseMatrix> = times
            .iter()
            .map(|&t| DenseMatrix::outer(&[psi0[0] * C64::from_polar(1.0, -t), psi0[1] * C64::from_polar(1.0, t)]))
            .collect();
        let generators = states.iter().map(|r| hs.commutator(r).scale(C64::new(0.0, -1.0))).collect();
        let traj = Trajectory { times, states, generators: Some(generators) };
        let res = qsl_time(&traj, &psi0, tau).unwrap();
        assert!((res.tau_qsl - 0.5).abs() < 1e-4);
        assert!(res.lambda_op <= res.lambda_hs && res.lambda_hs <= res.lambda_tr);
        let profile = qsl_profile(&traj, &psi0).unwrap();
        assert_eq!(profile.last().unwrap().tau_qsl, res.tau_qsl);
        assert_eq!(profile[0].tau_qsl, 0.0);
        for r in &profile {
            assert!(r.tau_qsl <= r.tau + 1e-9);
        }
    }

    #[test]
    fn qsl_input_errors() {
        let psi0 = basis_ket(&[1]);
        let rho = DenseMatrix::outer(&psi0);
        let mut traj = Trajectory { times: vec![0.0, 0.5, 1.0], states: vec![rho.clone(); 3], generators: None };
        assert_eq!(qsl_time(&traj, &psi0, 1.0).unwrap_err(), MeasureError::MissingGenerators);
        traj.generators = Some(vec![DenseMatrix::zeros(2); 3]);
        let r = qsl_time(&traj, &psi0, 1.0).unwrap();
        assert_eq!((r.bures_angle, r.tau_qsl), (0.0, 0.0));
        traj.times = vec![0.0, 0.4, 1.0];
        assert!(matches!(qsl_time(&traj, &psi0, 1.0), Err(MeasureError::NonUniformGrid(_))));
        traj.times = vec![0.0, 0.5, 1.0];
        let other = basis_ket(&[0]);
        assert!(matches!(qsl_time(&traj, &other, 1.0), Err(MeasureError::ImpureInitialState { .. })));
    }

    fn vec_strategy(len: usize) -> impl Strategy<Value = Vec<f64>> {
        proptest::collection::vec(-1.0f64..1.0, len)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn trace_distance_is_a_metric(a in vec_strategy(8), b in vec_strategy(8), c in vec_strategy(8)) {
            let (x, y, z) = (state_from(&a, 2), state_from(&b, 2), state_from(&c, 2));
            let dxy = trace_distance(&x, &y).unwrap();
            prop_assert_eq!(dxy, trace_distance(&y, &x).unwrap());
            prop_assert!(dxy <= trace_distance(&x, &z).unwrap() + trace_distance(&z, &y).unwrap() + 1e-12);
            prop_assert!(trace_distance(&x, &x).unwrap() < 1e-15);
            prop_assert!((0.0..=1.0 + 1e-12).contains(&dxy));
        }

        #[test]
        fn entropy_is_concave(a in vec_strategy(32), b in vec_strategy(32)) {
            let (x, y) = (state_from(&a, 4), state_from(&b, 4));
            let mid = (&x + &y).scale_real(0.5);
            let lhs = von_neumann_entropy(&mid, LogBase::Natural).unwrap();
            let rhs = 0.5 * (von_neumann_entropy(&x, LogBase::Natural).unwrap() + von_neumann_entropy(&y, LogBase::Natural).unwrap());
            prop_assert!(lhs >= rhs - 1e-10);
        }

        #[test]
        fn discord_and_concurrence_are_nonnegative_and_bounded(a in vec_strategy(32)) {
            let rho = state_from(&a, 4);
            let d = quantum_discord(&rho).unwrap();
            prop_assert!(d.discord >= -1e-9);
            prop_assert!(d.conditional_entropy <= d.grid_value + 1e-9);
            let c = concurrence(&rho).unwrap();
            prop_assert!((0.0..=1.0 + 1e-12).contains(&c));
        }

        #[test]
        fn product_states_carry_no_correlations(a in vec_strategy(8), b in vec_strategy(8)) {
            let rho = kron(&state_from(&a, 2), &state_from(&b, 2));
            prop_assert!(concurrence(&rho).unwrap() <= 1e-6);
            prop_assert!(quantum_discord(&rho).unwrap().discord.abs() <= 1e-6);
        }

        #[test]
        fn separable_mixtures_have_zero_concurrence(seed in any::<u64>()) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut mix = DenseMatrix::zeros(4);
            let mut total = 0.0;
            for _ in 0..50 {
                let w = rng.random::<f64>();
                total += w;
                mix += &kron(&random_state(&mut rng, 2), &random_state(&mut rng, 2)).scale_real(w);
            }
            let mix = mix.scale_real(1.0 / total);
            prop_assert!(concurrence(&mix).unwrap() <= 1e-9);
        }

        #[test]
        fn measures_are_unitarily_invariant(seed in any::<u64>()) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let (x, y) = (random_state(&mut rng, 4), random_state(&mut rng, 4));
            let g = random_unitary(&mut rng, 4);
            let local = kron(&random_unitary(&mut rng, 2), &random_unitary(&mut rng, 2));
            let td = trace_distance(&x, &y).unwrap();
            prop_assert!((td - trace_distance(&conj_by(&g, &x), &conj_by(&g, &y)).unwrap()).abs() < 1e-8);
            let s = von_neumann_entropy(&x, LogBase::Two).unwrap();
            prop_assert!((s - von_neumann_entropy(&conj_by(&g, &x), LogBase::Two).unwrap()).abs() < 1e-8);
            let xl = conj_by(&local, &x);
            prop_assert!((concurrence(&x).unwrap() - concurrence(&xl).unwrap()).abs() < 1e-8);
            prop_assert!((quantum_discord(&x).unwrap().discord - quantum_discord(&xl).unwrap().discord).abs() < 1e-8);
        }
    }
}
