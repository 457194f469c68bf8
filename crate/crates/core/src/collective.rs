//! Total-spin sectors of an N-spin-1/2 bath and the collective angular
//! momentum matrices acting inside one sector.
//!
//! Half-integer spins are carried as `two_j = 2j`. Inside a sector the basis
//! is |j, m⟩ with m descending from j to -j.

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};

use crate::numerics::{DenseMatrix, C64};

/// One irreducible total-spin-j block of the bath and how often it occurs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SectorSpec {
    pub two_j: u32,
    pub multiplicity: BigUint,
}

impl SectorSpec {
    pub fn j(&self) -> f64 {
        self.two_j as f64 / 2.0
    }

    /// Dimension 2j + 1 of the irrep.
    pub fn dim(&self) -> usize {
        self.two_j as usize + 1
    }

    pub fn multiplicity_f64(&self) -> f64 {
        self.multiplicity.to_f64().unwrap_or(f64::INFINITY)
    }

    /// m values in basis order (descending).
    pub fn m_values(&self) -> impl Iterator<Item = f64> {
        let two_j = self.two_j as i64;
        (0..=two_j).map(move |k| (two_j - 2 * k) as f64 / 2.0)
    }

    /// Whether this sector can occur in a bath of `n` spins.
    pub fn is_valid_for(&self, n: u32) -> bool {
        self.two_j <= n && (n - self.two_j) % 2 == 0 && !self.multiplicity.is_zero()
    }
}

fn binomial(n: u32, k: u32) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::from(1u32);
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// Number of spin-j irreps in (1/2)^⊗n, `C(n, n/2 - j) - C(n, n/2 - j - 1)`.
pub fn multiplicity(n: u32, two_j: u32) -> BigUint {
    if two_j > n || (n - two_j) % 2 != 0 {
        return BigUint::zero();
    }
    let k = (n - two_j) / 2;
    let lower = if k == 0 { BigUint::zero() } else { binomial(n, k - 1) };
    binomial(n, k) - lower
}

/// All sectors of an `n`-spin bath, largest j first.
pub fn sectors(n: u32) -> Vec<SectorSpec> {
    (0..=n)
        .rev()
        .filter(|two_j| (n - two_j) % 2 == 0)
        .map(|two_j| SectorSpec { two_j, multiplicity: multiplicity(n, two_j) })
        .collect()
}

/// Spin-j matrices in the |j, m⟩ basis (m descending), ħ = 1.
#[derive(Clone, Debug)]
pub struct CollectiveOps {
    pub two_j: u32,
    pub jx: DenseMatrix,
    pub jy: DenseMatrix,
    pub jz: DenseMatrix,
    pub jplus: DenseMatrix,
    pub jminus: DenseMatrix,
}

pub fn collective_ops(two_j: u32) -> CollectiveOps {
    let dim = two_j as usize + 1;
    let tj = two_j as f64;
    let two_m = |i: usize| tj - 2.0 * i as f64;

    let jz = DenseMatrix::from_diagonal(&(0..dim).map(|i| two_m(i) / 2.0).collect::<Vec<_>>());
    let mut jplus = DenseMatrix::zeros(dim);
    for i in 1..dim {
        // ⟨m+1| J+ |m⟩ with m = m_i, and |m+1⟩ sitting at index i - 1
        let m2 = two_m(i);
        let val = ((tj * (tj + 2.0) - m2 * (m2 + 2.0)) / 4.0).sqrt();
        jplus[(i - 1, i)] = C64::new(val, 0.0);
    }
    let jminus = jplus.adjoint();
    let jx = (&jplus + &jminus).scale_real(0.5);
    let jy = (&jplus - &jminus).scale(C64::new(0.0, -0.5));
    CollectiveOps { two_j, jx, jy, jz, jplus, jminus }
}
