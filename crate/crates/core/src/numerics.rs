//! Dense complex linear algebra: the matrix carrier used for every operator
//! and density matrix, Hermitian eigendecomposition, tensor products,
//! partial traces and the operator / Hilbert-Schmidt / trace norms.
//!
//! Storage is row-major. Subsystem ordering in tensor products follows the
//! argument order, with the first factor as the most significant index.

use std::fmt;
use std::ops::{Add, AddAssign, Index, IndexMut, Mul, Sub};

use nalgebra::DMatrix;
use num_complex::Complex64;
use thiserror::Error;

use crate::par;

pub type C64 = Complex64;

pub const ZERO: C64 = C64::new(0.0, 0.0);
pub const ONE: C64 = C64::new(1.0, 0.0);
pub const I: C64 = C64::new(0.0, 1.0);

/// Default absolute tolerance used by [`hermitian_eig`] to accept an input
/// as Hermitian. Scaled by the largest entry magnitude when that exceeds 1.
pub const HERMITIAN_TOL: f64 = 1e-10;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum NumericsError {
    #[error("entry count {len} is not a perfect square")]
    NonSquare { len: usize },
    #[error("matrix is not Hermitian (max |A - A^dagger| = {deviation:e})")]
    NonHermitian { deviation: f64 },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
}

/// Square complex matrix in row-major order.
#[derive(Clone, PartialEq)]
pub struct DenseMatrix {
    dim: usize,
    data: Vec<C64>,
}

impl DenseMatrix {
    pub fn zeros(dim: usize) -> Self {
        DenseMatrix { dim, data: vec![ZERO; dim * dim] }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.data[i * dim + i] = ONE;
        }
        m
    }

    /// Builds a matrix from row-major entries. The length must be a square.
    pub fn from_vec(data: Vec<C64>) -> Result<Self, NumericsError> {
        let dim = (data.len() as f64).sqrt().round() as usize;
        if dim * dim != data.len() {
            return Err(NumericsError::NonSquare { len: data.len() });
        }
        Ok(DenseMatrix { dim, data })
    }

    pub fn from_real(data: &[f64]) -> Result<Self, NumericsError> {
        Self::from_vec(data.iter().map(|&x| C64::new(x, 0.0)).collect())
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> C64) -> Self {
        let mut data = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                data.push(f(i, j));
            }
        }
        DenseMatrix { dim, data }
    }

    pub fn from_diagonal(diag: &[f64]) -> Self {
        let mut m = Self::zeros(diag.len());
        for (i, &d) in diag.iter().enumerate() {
            m[(i, i)] = C64::new(d, 0.0);
        }
        m
    }

    /// The projector |ψ⟩⟨ψ| for a (not necessarily normalized) vector.
    pub fn outer(psi: &[C64]) -> Self {
        Self::from_fn(psi.len(), |i, j| psi[i] * psi[j].conj())
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn as_slice(&self) -> &[C64] {
        &self.data
    }

    pub fn as_mut_slice(&mut self) -> &mut [C64] {
        &mut self.data
    }

    pub fn into_vec(self) -> Vec<C64> {
        self.data
    }

    pub fn row(&self, i: usize) -> &[C64] {
        &self.data[i * self.dim..(i + 1) * self.dim]
    }

    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.dim, |i, j| self[(j, i)].conj())
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.dim, |i, j| self[(j, i)])
    }

    pub fn conj(&self) -> Self {
        DenseMatrix { dim: self.dim, data: self.data.iter().map(|z| z.conj()).collect() }
    }

    pub fn trace(&self) -> C64 {
        (0..self.dim).map(|i| self[(i, i)]).sum()
    }

    pub fn diagonal_real(&self) -> Vec<f64> {
        (0..self.dim).map(|i| self[(i, i)].re).collect()
    }

    pub fn scale(&self, s: C64) -> Self {
        DenseMatrix { dim: self.dim, data: self.data.iter().map(|&z| z * s).collect() }
    }

    pub fn scale_real(&self, s: f64) -> Self {
        DenseMatrix { dim: self.dim, data: self.data.iter().map(|&z| z * s).collect() }
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// Largest entry-wise modulus of `self - other`.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        assert_eq!(self.dim, other.dim, "dimension mismatch in max_abs_diff");
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    /// Largest entry-wise modulus of `A - A†`.
    pub fn hermiticity_error(&self) -> f64 {
        let n = self.dim;
        let mut worst = 0.0f64;
        for i in 0..n {
            for j in i..n {
                worst = worst.max((self[(i, j)] - self[(j, i)].conj()).norm());
            }
        }
        worst
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.hermiticity_error() <= tol
    }

    /// `(A + A†) / 2`.
    pub fn hermitian_part(&self) -> Self {
        Self::from_fn(self.dim, |i, j| (self[(i, j)] + self[(j, i)].conj()) * 0.5)
    }

    /// Matrix product. Zero entries of `self` are skipped, so products with
    /// structurally sparse left factors (block-diagonal propagators) are cheap.
    pub fn matmul(&self, rhs: &Self) -> Self {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch in matmul");
        let n = self.dim;
        let rows = par::map_range(n, |i| {
            let mut out = vec![ZERO; n];
            for (k, &a) in self.row(i).iter().enumerate() {
                if a == ZERO {
                    continue;
                }
                for (o, &b) in out.iter_mut().zip(rhs.row(k)) {
                    *o += a * b;
                }
            }
            out
        });
        DenseMatrix { dim: n, data: rows.into_iter().flatten().collect() }
    }

    /// `[A, B] = AB - BA`.
    pub fn commutator(&self, other: &Self) -> Self {
        &self.matmul(other) - &other.matmul(self)
    }

    /// `A x` for a column vector `x`.
    pub fn apply(&self, x: &[C64]) -> Vec<C64> {
        assert_eq!(self.dim, x.len());
        (0..self.dim)
            .map(|i| self.row(i).iter().zip(x).map(|(a, b)| a * b).sum())
            .collect()
    }

    /// `⟨x| A |x⟩`.
    pub fn expectation(&self, x: &[C64]) -> C64 {
        self.apply(x).iter().zip(x).map(|(ax, xi)| xi.conj() * ax).sum()
    }
}

impl fmt::Debug for DenseMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "DenseMatrix({}x{}) [", self.dim, self.dim)?;
        for i in 0..self.dim {
            write!(f, "  ")?;
            for z in self.row(i) {
                write!(f, "{:+.6}{:+.6}i  ", z.re, z.im)?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

impl Index<(usize, usize)> for DenseMatrix {
    type Output = C64;
    #[inline]
    fn index(&self, (i, j): (usize, usize)) -> &C64 {
        &self.data[i * self.dim + j]
    }
}

impl IndexMut<(usize, usize)> for DenseMatrix {
    #[inline]
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut C64 {
        &mut self.data[i * self.dim + j]
    }
}

impl Add for &DenseMatrix {
    type Output = DenseMatrix;
    fn add(self, rhs: &DenseMatrix) -> DenseMatrix {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch in add");
        DenseMatrix {
            dim: self.dim,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &DenseMatrix {
    type Output = DenseMatrix;
    fn sub(self, rhs: &DenseMatrix) -> DenseMatrix {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch in sub");
        DenseMatrix {
            dim: self.dim,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Mul for &DenseMatrix {
    type Output = DenseMatrix;
    fn mul(self, rhs: &DenseMatrix) -> DenseMatrix {
        self.matmul(rhs)
    }
}

impl AddAssign<&DenseMatrix> for DenseMatrix {
    fn add_assign(&mut self, rhs: &DenseMatrix) {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch in add_assign");
        for (a, b) in self.data.iter_mut().zip(&rhs.data) {
            *a += b;
        }
    }
}

pub fn pauli_x() -> DenseMatrix {
    DenseMatrix::from_real(&[0.0, 1.0, 1.0, 0.0]).unwrap()
}

pub fn pauli_y() -> DenseMatrix {
    DenseMatrix::from_vec(vec![ZERO, -I, I, ZERO]).unwrap()
}

pub fn pauli_z() -> DenseMatrix {
    DenseMatrix::from_real(&[1.0, 0.0, 0.0, -1.0]).unwrap()
}

/// Kronecker product, `A ⊗ B` with `A` as the most significant factor.
pub fn kron(a: &DenseMatrix, b: &DenseMatrix) -> DenseMatrix {
    let (da, db) = (a.dim(), b.dim());
    let n = da * db;
    let mut out = DenseMatrix::zeros(n);
    for i in 0..da {
        for j in 0..da {
            let aij = a[(i, j)];
            if aij == ZERO {
                continue;
            }
            for k in 0..db {
                let row = (i * db + k) * n + j * db;
                for (l, &bkl) in b.row(k).iter().enumerate() {
                    out.data[row + l] = aij * bkl;
                }
            }
        }
    }
    out
}

/// Kronecker product of a list of factors, left to right.
pub fn kron_all(factors: &[&DenseMatrix]) -> DenseMatrix {
    factors
        .iter()
        .fold(DenseMatrix::identity(1), |acc, f| kron(&acc, f))
}

/// Reduced operator on the subsystems listed in `keep`, tracing out the rest.
///
/// `dims` lists the subsystem dimensions in tensor-product order; `keep`
/// holds subsystem indices (any order, no duplicates). The kept factors
/// appear in the output in ascending subsystem order.
pub fn partial_trace(
    rho: &DenseMatrix,
    dims: &[usize],
    keep: &[usize],
) -> Result<DenseMatrix, NumericsError> {
    let total: usize = dims.iter().product();
    if dims.is_empty() || dims.contains(&0) || total != rho.dim() {
        return Err(NumericsError::DimensionMismatch(format!(
            "subsystem dims {dims:?} do not factor dimension {}",
            rho.dim()
        )));
    }
    if keep.is_empty() {
        return Err(NumericsError::DimensionMismatch("no subsystem kept".into()));
    }
    let mut kept = keep.to_vec();
    kept.sort_unstable();
    kept.dedup();
    if kept.len() != keep.len() || kept.iter().any(|&k| k >= dims.len()) {
        return Err(NumericsError::DimensionMismatch(format!(
            "invalid kept subsystems {keep:?} for {} factors",
            dims.len()
        )));
    }
    let traced: Vec<usize> = (0..dims.len()).filter(|k| !kept.contains(k)).collect();

    let mut strides = vec![1usize; dims.len()];
    for k in (0..dims.len().saturating_sub(1)).rev() {
        strides[k] = strides[k + 1] * dims[k + 1];
    }
    let offsets = |factors: &[usize]| -> Vec<usize> {
        let mut offs = vec![0usize];
        for &f in factors {
            let stride = strides[f];
            offs = offs
                .iter()
                .flat_map(|&o| (0..dims[f]).map(move |x| o + x * stride))
                .collect();
        }
        offs
    };
    let keep_off = offsets(&kept);
    let trace_off = offsets(&traced);

    let dk = keep_off.len();
    let mut out = DenseMatrix::zeros(dk);
    for (x1, &r) in keep_off.iter().enumerate() {
        for (x2, &c) in keep_off.iter().enumerate() {
            out[(x1, x2)] = trace_off.iter().map(|&y| rho[(r + y, c + y)]).sum();
        }
    }
    Ok(out)
}

/// Eigenpairs of a Hermitian matrix: ascending eigenvalues and the matching
/// orthonormal eigenvectors stored as columns.
#[derive(Clone, Debug)]
pub struct EigDecomposition {
    pub eigenvalues: Vec<f64>,
    pub eigenvectors: DenseMatrix,
}

impl EigDecomposition {
    /// `V diag(f(λ)) V†`.
    pub fn map_spectrum(&self, f: impl Fn(f64) -> C64) -> DenseMatrix {
        let n = self.eigenvalues.len();
        let v = &self.eigenvectors;
        let fl: Vec<C64> = self.eigenvalues.iter().map(|&l| f(l)).collect();
        DenseMatrix::from_fn(n, |i, j| {
            (0..n).map(|a| v[(i, a)] * fl[a] * v[(j, a)].conj()).sum()
        })
    }

    pub fn reconstruct(&self) -> DenseMatrix {
        self.map_spectrum(|l| C64::new(l, 0.0))
    }
}

/// One connected component of a Hermitian matrix's sparsity graph together
/// with its eigenpairs. `vectors[(p, a)]` is the amplitude of eigenvector
/// `a` on basis state `indices[p]`.
#[derive(Clone, Debug)]
pub struct SpectralBlock {
    pub indices: Vec<usize>,
    pub eigenvalues: Vec<f64>,
    pub vectors: DenseMatrix,
}

fn check_hermitian(a: &DenseMatrix) -> Result<(), NumericsError> {
    let deviation = a.hermiticity_error();
    if deviation > HERMITIAN_TOL * a.max_abs().max(1.0) {
        return Err(NumericsError::NonHermitian { deviation });
    }
    Ok(())
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// Eigendecomposition split along the exact block structure of `a`.
///
/// Basis states connected through nonzero off-diagonal entries are grouped
/// into components (ordered by their smallest index); each component is
/// diagonalized independently with eigenvalues ascending inside the block.
pub fn hermitian_block_eig(a: &DenseMatrix) -> Result<Vec<SpectralBlock>, NumericsError> {
    check_hermitian(a)?;
    let n = a.dim();
    let mut parent: Vec<usize> = (0..n).collect();
    for i in 0..n {
        for j in i + 1..n {
            if a[(i, j)] != ZERO || a[(j, i)] != ZERO {
                let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                if ri != rj {
                    parent[ri.max(rj)] = ri.min(rj);
                }
            }
        }
    }
    let mut groups: Vec<Vec<usize>> = Vec::new();
    let mut slot = vec![usize::MAX; n];
    for i in 0..n {
        let r = find(&mut parent, i);
        if slot[r] == usize::MAX {
            slot[r] = groups.len();
            groups.push(Vec::new());
        }
        groups[slot[r]].push(i);
    }

    Ok(groups
        .into_iter()
        .map(|indices| {
            let m = indices.len();
            let block = DMatrix::from_fn(m, m, |p, q| {
                (a[(indices[p], indices[q])] + a[(indices[q], indices[p])].conj()) * 0.5
            });
            let eig = block.symmetric_eigen();
            let mut order: Vec<usize> = (0..m).collect();
            order.sort_by(|&x, &y| eig.eigenvalues[x].total_cmp(&eig.eigenvalues[y]));
            let eigenvalues = order.iter().map(|&k| eig.eigenvalues[k]).collect();
            let vectors = DenseMatrix::from_fn(m, |p, a| eig.eigenvectors[(p, order[a])]);
            SpectralBlock { indices, eigenvalues, vectors }
        })
        .collect())
}

/// Full eigendecomposition of a Hermitian matrix with ascending eigenvalues.
pub fn hermitian_eig(a: &DenseMatrix) -> Result<EigDecomposition, NumericsError> {
    let blocks = hermitian_block_eig(a)?;
    let n = a.dim();
    let mut pairs: Vec<(f64, usize, usize)> = blocks
        .iter()
        .enumerate()
        .flat_map(|(b, blk)| blk.eigenvalues.iter().enumerate().map(move |(k, &l)| (l, b, k)))
        .collect();
    pairs.sort_by(|x, y| x.0.total_cmp(&y.0));
    let mut vectors = DenseMatrix::zeros(n);
    for (col, &(_, b, k)) in pairs.iter().enumerate() {
        let blk = &blocks[b];
        for (p, &row) in blk.indices.iter().enumerate() {
            vectors[(row, col)] = blk.vectors[(p, k)];
        }
    }
    Ok(EigDecomposition { eigenvalues: pairs.iter().map(|p| p.0).collect(), eigenvectors: vectors })
}

/// Eigenvalues only, ascending.
pub fn hermitian_eigenvalues(a: &DenseMatrix) -> Result<Vec<f64>, NumericsError> {
    let mut vals: Vec<f64> = hermitian_block_eig(a)?
        .into_iter()
        .flat_map(|b| b.eigenvalues)
        .collect();
    vals.sort_by(f64::total_cmp);
    Ok(vals)
}

/// Operator, Hilbert-Schmidt and trace norms.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MatrixNorms {
    pub op: f64,
    pub hs: f64,
    pub tr: f64,
}

impl MatrixNorms {
    fn from_singular_values(sv: impl Iterator<Item = f64>) -> Self {
        let (mut op, mut sq, mut tr) = (0.0f64, 0.0, 0.0);
        for s in sv {
            op = op.max(s);
            sq += s * s;
            tr += s;
        }
        MatrixNorms { op, hs: sq.sqrt(), tr }
    }
}

/// Singular values of `a`, descending.
pub fn singular_values(a: &DenseMatrix) -> Vec<f64> {
    let gram = a.adjoint().matmul(a).hermitian_part();
    let mut sv: Vec<f64> = hermitian_eigenvalues(&gram)
        .expect("Gram matrix is Hermitian by construction")
        .into_iter()
        .map(|m| m.max(0.0).sqrt())
        .collect();
    sv.reverse();
    sv
}

/// The three norms built from the singular values of `a`. Hermitian inputs
/// take the |λ| path, which avoids the square-root loss of the Gram route.
pub fn matrix_norms(a: &DenseMatrix) -> MatrixNorms {
    if a.hermiticity_error() <= 1e-13 * a.max_abs().max(1e-300) {
        if let Ok(vals) = hermitian_eigenvalues(&a.hermitian_part()) {
            return MatrixNorms::from_singular_values(vals.into_iter().map(f64::abs));
        }
    }
    MatrixNorms::from_singular_values(singular_values(a).into_iter())
}

/// Norms always computed through the Gram matrix `A†A`.
pub fn matrix_norms_gram(a: &DenseMatrix) -> MatrixNorms {
    MatrixNorms::from_singular_values(singular_values(a).into_iter())
}
