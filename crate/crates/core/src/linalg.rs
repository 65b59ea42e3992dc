//! Dense complex linear algebra: matrices, unit vectors, quadratic forms and
//! a cyclic Jacobi eigensolver for Hermitian matrices.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
#[allow(unused_imports)] // Float is shadowed by inherent f64 methods when std is linked
use num_traits::{Float, Zero};

use crate::{Error, Result};

/// Complex scalar used throughout the crate.
pub type ComplexScalar = Complex64;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// Hermitian inputs to [`hermitian_eigs`] may deviate from `H*` by at most this much.
pub const HERMITIAN_TOL: f64 = 1e-10;
/// Jacobi stops once the off-diagonal Frobenius mass drops below this fraction of `‖H‖_F`.
pub const JACOBI_REL_TOL: f64 = 1e-12;
/// Sweep budget for the Jacobi eigensolver.
pub const JACOBI_MAX_SWEEPS: usize = 100;

fn finite(z: Complex64) -> bool {
    z.re.is_finite() && z.im.is_finite()
}

/// An immutable `n × n` complex matrix stored row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseMatrix {
    dim: usize,
    entries: Vec<Complex64>,
}

impl DenseMatrix {
    /// Builds a matrix from `dim²` row-major entries.
    pub fn from_row_major(dim: usize, entries: Vec<Complex64>) -> Result<Self> {
        if dim == 0 || entries.len() != dim * dim {
            return Err(Error::NotSquare);
        }
        if !entries.iter().all(|z| finite(*z)) {
            return Err(Error::NonFinite);
        }
        Ok(Self { dim, entries })
    }

    pub fn from_rows(rows: &[Vec<Complex64>]) -> Result<Self> {
        let dim = rows.len();
        if rows.iter().any(|r| r.len() != dim) {
            return Err(Error::NotSquare);
        }
        Self::from_row_major(dim, rows.iter().flatten().copied().collect())
    }

    pub fn from_real_rows(rows: &[&[f64]]) -> Result<Self> {
        let dim = rows.len();
        if rows.iter().any(|r| r.len() != dim) {
            return Err(Error::NotSquare);
        }
        let entries = rows
            .iter()
            .flat_map(|r| r.iter().map(|&x| Complex64::new(x, 0.0)))
            .collect();
        Self::from_row_major(dim, entries)
    }

    pub fn zeros(dim: usize) -> Self {
        assert!(dim > 0, "dimension must be positive");
        Self {
            dim,
            entries: vec![ZERO; dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        Self::scalar(dim, ONE)
    }

    /// `c·I`.
    pub fn scalar(dim: usize, c: Complex64) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.entries[i * dim + i] = c;
        }
        m
    }

    pub fn diag(values: &[Complex64]) -> Result<Self> {
        let dim = values.len();
        if dim == 0 {
            return Err(Error::NotSquare);
        }
        let mut entries = vec![ZERO; dim * dim];
        for (i, v) in values.iter().enumerate() {
            entries[i * dim + i] = *v;
        }
        Self::from_row_major(dim, entries)
    }

    pub fn real_diag(values: &[f64]) -> Result<Self> {
        let v: Vec<Complex64> = values.iter().map(|&x| Complex64::new(x, 0.0)).collect();
        Self::diag(&v)
    }

    /// Rank-one matrix `x y*`.
    pub fn outer(x: &UnitVector, y: &UnitVector) -> Result<Self> {
        ensure_dim(x.dim(), y.dim())?;
        let n = x.dim();
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(x.entries[i] * y.entries[j].conj());
            }
        }
        Self::from_row_major(n, entries)
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        self.entries[row * self.dim + col]
    }

    pub fn entries(&self) -> &[Complex64] {
        &self.entries
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Complex64]> {
        self.entries.chunks(self.dim)
    }

    /// Conjugate transpose: `result[i][j] = conj(M[j][i])`.
    pub fn adjoint(&self) -> Self {
        let n = self.dim;
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(self.entries[j * n + i].conj());
            }
        }
        Self { dim: n, entries }
    }

    pub fn scale(&self, c: Complex64) -> Self {
        self.map(|z| z * c)
    }

    fn map(&self, f: impl Fn(Complex64) -> Complex64) -> Self {
        Self {
            dim: self.dim,
            entries: self.entries.iter().map(|&z| f(z)).collect(),
        }
    }

    fn zip(&self, other: &Self, f: impl Fn(Complex64, Complex64) -> Complex64) -> Self {
        assert_eq!(self.dim, other.dim, "matrix dimensions differ");
        Self {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        }
    }

    /// `self + c·other`.
    pub fn add_scaled(&self, c: Complex64, other: &Self) -> Self {
        self.zip(other, |a, b| a + c * b)
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        ensure_dim(self.dim, other.dim)?;
        Ok(self + other)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        ensure_dim(self.dim, other.dim)?;
        Ok(self * other)
    }

    /// Largest entry modulus, with its position.
    pub fn max_entry(&self) -> (usize, usize, f64) {
        let mut best = (0, 0, 0.0);
        for (k, z) in self.entries.iter().enumerate() {
            let m = z.norm();
            if m > best.2 {
                best = (k / self.dim, k % self.dim, m);
            }
        }
        best
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.entries.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|z| z.is_zero())
    }

    /// `max |M - M*|` over entries.
    pub fn hermitian_deviation(&self) -> f64 {
        let n = self.dim;
        let mut dev = 0.0f64;
        for i in 0..n {
            for j in i..n {
                let d = (self.entries[i * n + j] - self.entries[j * n + i].conj()).norm();
                dev = dev.max(d);
            }
        }
        dev
    }

    /// `M x` on raw coordinates.
    pub fn apply(&self, x: &[Complex64]) -> Vec<Complex64> {
        self.rows()
            .map(|row| row.iter().zip(x).map(|(&a, &b)| a * b).sum())
            .collect()
    }

    /// `M* x` without forming the adjoint.
    pub fn apply_adjoint(&self, x: &[Complex64]) -> Vec<Complex64> {
        let n = self.dim;
        let mut out = vec![ZERO; n];
        for (i, row) in self.rows().enumerate() {
            for (j, a) in row.iter().enumerate() {
                out[j] += a.conj() * x[i];
            }
        }
        out
    }
}

impl<'a> Add<&'a DenseMatrix> for &'a DenseMatrix {
    type Output = DenseMatrix;
    fn add(self, rhs: &DenseMatrix) -> DenseMatrix {
        self.zip(rhs, |a, b| a + b)
    }
}

impl<'a> Sub<&'a DenseMatrix> for &'a DenseMatrix {
    type Output = DenseMatrix;
    fn sub(self, rhs: &DenseMatrix) -> DenseMatrix {
        self.zip(rhs, |a, b| a - b)
    }
}

impl Neg for &DenseMatrix {
    type Output = DenseMatrix;
    fn neg(self) -> DenseMatrix {
        self.map(|z| -z)
    }
}

impl Mul<Complex64> for &DenseMatrix {
    type Output = DenseMatrix;
    fn mul(self, c: Complex64) -> DenseMatrix {
        self.scale(c)
    }
}

impl<'a> Mul<&'a DenseMatrix> for &'a DenseMatrix {
    type Output = DenseMatrix;
    fn mul(self, rhs: &DenseMatrix) -> DenseMatrix {
        assert_eq!(self.dim, rhs.dim, "matrix dimensions differ");
        let n = self.dim;
        let mut entries = vec![ZERO; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.entries[i * n + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    entries[i * n + j] += a * rhs.entries[k * n + j];
                }
            }
        }
        DenseMatrix { dim: n, entries }
    }
}

pub(crate) fn ensure_dim(left: usize, right: usize) -> Result<()> {
    if left == right {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { left, right })
    }
}

/// A point of the unit sphere in `ℂⁿ`.
#[derive(Debug, Clone, PartialEq)]
pub struct UnitVector {
    entries: Vec<Complex64>,
}

impl UnitVector {
    /// Normalizes `entries` onto the unit sphere.
    pub fn new(entries: Vec<Complex64>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::NotSquare);
        }
        if !entries.iter().all(|z| finite(*z)) {
            return Err(Error::NonFinite);
        }
        let norm = entries.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if !norm.is_finite() || norm <= 0.0 {
            return Err(Error::ZeroVector);
        }
        Ok(Self {
            entries: entries.into_iter().map(|z| z / norm).collect(),
        })
    }

    /// The standard basis vector `e_index` of `ℂ^dim`.
    pub fn basis(dim: usize, index: usize) -> Self {
        assert!(index < dim, "basis index out of range");
        let mut entries = vec![ZERO; dim];
        entries[index] = ONE;
        Self { entries }
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Complex64] {
        &self.entries
    }

    /// `⟨self, other⟩ = Σ selfᵢ · conj(otherᵢ)`.
    pub fn inner(&self, other: &Self) -> Complex64 {
        self.entries.iter().zip(&other.entries).map(|(a, b)| a * b.conj()).sum()
    }

    /// Chordal distance modulo phase: `√(1 − |⟨x,y⟩|²)`.
    pub fn phase_distance(&self, other: &Self) -> f64 {
        (1.0 - self.inner(other).norm_sqr()).max(0.0).sqrt()
    }

    pub fn norm(&self) -> f64 {
        self.entries.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }
}

/// `⟨Mx, x⟩ = Σᵢⱼ M[i][j]·x[j]·conj(x[i])`.
pub fn quad_form(m: &DenseMatrix, x: &UnitVector) -> Result<Complex64> {
    ensure_dim(m.dim(), x.dim())?;
    Ok(quad(m, x.entries()))
}

pub(crate) fn quad(m: &DenseMatrix, x: &[Complex64]) -> Complex64 {
    m.rows()
        .zip(x)
        .map(|(row, xi)| {
            let mx: Complex64 = row.iter().zip(x).map(|(&a, &b)| a * b).sum();
            mx * xi.conj()
        })
        .sum()
}

pub fn adjoint(m: &DenseMatrix) -> DenseMatrix {
    m.adjoint()
}

/// Spectral decomposition of a Hermitian matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct EigenDecomposition {
    /// Sorted descending.
    pub eigenvalues: Vec<f64>,
    /// `eigenvectors[k]` belongs to `eigenvalues[k]`.
    pub eigenvectors: Vec<UnitVector>,
}

impl EigenDecomposition {
    pub fn max_eigenvalue(&self) -> f64 {
        self.eigenvalues[0]
    }

    pub fn min_eigenvalue(&self) -> f64 {
        *self.eigenvalues.last().expect("non-empty spectrum")
    }
}

struct Jacobi {
    values: Vec<f64>,
    /// Column-major: column k is the k-th eigenvector.
    vectors: Option<Vec<Complex64>>,
    converged: bool,
    sweeps: usize,
    off: f64,
}

fn off_diagonal_mass(a: &[Complex64], n: usize) -> f64 {
    let mut s = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                s += a[i * n + j].norm_sqr();
            }
        }
    }
    s.sqrt()
}

/// Cyclic complex Jacobi. Each rotation zeroes `a[p][q]` with the unitary
/// `J = [[c, s], [-s·e^{-iφ}, c·e^{-iφ}]]` where `a[p][q] = |a[p][q]|·e^{iφ}`.
fn jacobi(h: &DenseMatrix, with_vectors: bool) -> Jacobi {
    let n = h.dim();
    let mut a = h.entries.clone();
    for i in 0..n {
        a[i * n + i] = Complex64::new(a[i * n + i].re, 0.0);
    }
    let mut v = if with_vectors {
        let mut v = vec![ZERO; n * n];
        for i in 0..n {
            v[i * n + i] = ONE;
        }
        Some(v)
    } else {
        None
    };
    let scale = h.frobenius_norm();
    let target = JACOBI_REL_TOL * scale;
    let mut off = off_diagonal_mass(&a, n);
    let mut sweeps = 0;
    while off > target && sweeps < JACOBI_MAX_SWEEPS {
        sweeps += 1;
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[p * n + q];
                let mag = apq.norm();
                if mag <= f64::MIN_POSITIVE {
                    continue;
                }
                let phase = apq / mag;
                let app = a[p * n + p].re;
                let aqq = a[q * n + q].re;
                let tau = (aqq - app) / (2.0 * mag);
                let t = if tau >= 0.0 {
                    1.0 / (tau + (1.0 + tau * tau).sqrt())
                } else {
                    -1.0 / (-tau + (1.0 + tau * tau).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                let ph_conj = phase.conj();
                // A ← A J (columns p, q)
                for k in 0..n {
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    a[k * n + p] = akp * c - akq * ph_conj * s;
                    a[k * n + q] = akp * s + akq * ph_conj * c;
                }
                // A ← J* A (rows p, q)
                for k in 0..n {
                    let apk = a[p * n + k];
                    let aqk = a[q * n + k];
                    a[p * n + k] = apk * c - aqk * phase * s;
                    a[q * n + k] = apk * s + aqk * phase * c;
                }
                a[p * n + q] = ZERO;
                a[q * n + p] = ZERO;
                a[p * n + p] = Complex64::new(app - t * mag, 0.0);
                a[q * n + q] = Complex64::new(aqq + t * mag, 0.0);
                if let Some(v) = v.as_mut() {
                    for k in 0..n {
                        let vkp = v[k * n + p];
                        let vkq = v[k * n + q];
                        v[k * n + p] = vkp * c - vkq * ph_conj * s;
                        v[k * n + q] = vkp * s + vkq * ph_conj * c;
                    }
                }
            }
        }
        off = off_diagonal_mass(&a, n);
    }
    Jacobi {
        values: (0..n).map(|i| a[i * n + i].re).collect(),
        vectors: v,
        converged: off <= target,
        sweeps,
        off,
    }
}

fn check_hermitian(h: &DenseMatrix) -> Result<()> {
    let deviation = h.hermitian_deviation();
    if deviation > HERMITIAN_TOL {
        return Err(Error::NotHermitian { deviation });
    }
    Ok(())
}

/// Full eigendecomposition of a Hermitian matrix by cyclic Jacobi rotations.
pub fn hermitian_eigs(h: &DenseMatrix) -> Result<EigenDecomposition> {
    check_hermitian(h)?;
    let n = h.dim();
    let jac = jacobi(h, true);
    if !jac.converged {
        return Err(Error::NoConvergence {
            sweeps: jac.sweeps,
            off_diagonal: jac.off,
        });
    }
    let v = jac.vectors.expect("vectors requested");
    let mut order: Vec<usize> = (0..n).collect();
    // Stable sort keeps the original index order among ties.
    order.sort_by(|&i, &j| jac.values[j].total_cmp(&jac.values[i]));
    let eigenvalues = order.iter().map(|&k| jac.values[k]).collect();
    let eigenvectors = order
        .iter()
        .map(|&k| {
            let col: Vec<Complex64> = (0..n).map(|r| v[r * n + k]).collect();
            UnitVector::new(col)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(EigenDecomposition {
        eigenvalues,
        eigenvectors,
    })
}

/// Largest eigenvalue of a Hermitian matrix, skipping eigenvector accumulation.
/// Dimensions 1 and 2 use the closed-form characteristic roots.
pub(crate) fn lambda_max(h: &DenseMatrix) -> Result<f64> {
    match h.dim() {
        1 => Ok(h.get(0, 0).re),
        2 => {
            let a = h.get(0, 0).re;
            let d = h.get(1, 1).re;
            let b = h.get(0, 1).norm();
            let half_gap = 0.5 * (a - d);
            Ok(0.5 * (a + d) + half_gap.hypot(b))
        }
        _ => {
            let jac = jacobi(h, false);
            if !jac.converged {
                return Err(Error::NoConvergence {
                    sweeps: jac.sweeps,
                    off_diagonal: jac.off,
                });
            }
            Ok(jac.values.into_iter().fold(f64::NEG_INFINITY, f64::max))
        }
    }
}

/// Largest singular value, `√λ_max(M*M)`.
pub fn operator_norm(m: &DenseMatrix) -> f64 {
    let gram = &m.adjoint() * m;
    // Jacobi on a PSD Gram matrix always converges well inside the sweep
    // budget; a non-converged run still leaves usable diagonal estimates.
    let jac = jacobi(&gram, false);
    jac.values.into_iter().fold(0.0f64, f64::max).max(0.0).sqrt()
}

/// True iff `M` is Hermitian within `tol` and `λ_min(M) ≥ −tol`.
pub fn is_positive_semidefinite(m: &DenseMatrix, tol: f64) -> bool {
    if m.hermitian_deviation() > tol {
        return false;
    }
    // Symmetrize so small asymmetries within tol don't trip the eigensolver.
    let sym = (m + &m.adjoint()).scale(Complex64::new(0.5, 0.0));
    let jac = jacobi(&sym, false);
    jac.values.into_iter().fold(f64::INFINITY, f64::min) >= -tol
}

/// Gram–Schmidt orthonormalization of the columns of `m`. Returns a unitary
/// matrix when `m` is nonsingular.
pub fn orthonormalize_columns(m: &DenseMatrix) -> Result<DenseMatrix> {
    let n = m.dim();
    let mut cols: Vec<Vec<Complex64>> = Vec::with_capacity(n);
    for j in 0..n {
        let mut c: Vec<Complex64> = (0..n).map(|i| m.get(i, j)).collect();
        // two passes for numerical orthogonality
        for _ in 0..2 {
            for q in &cols {
                let proj: Complex64 = q.iter().zip(&c).map(|(qi, ci)| qi.conj() * ci).sum();
                for (ci, qi) in c.iter_mut().zip(q) {
                    *ci -= proj * qi;
                }
            }
        }
        let u = UnitVector::new(c)?;
        cols.push(u.entries);
    }
    let mut entries = vec![ZERO; n * n];
    for (j, col) in cols.iter().enumerate() {
        for (i, z) in col.iter().enumerate() {
            entries[i * n + j] = *z;
        }
    }
    DenseMatrix::from_row_major(n, entries)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn nilpotent() -> DenseMatrix {
        DenseMatrix::from_real_rows(&[&[0.0, 1.0], &[0.0, 0.0]]).unwrap()
    }

    #[test]
    fn adjoint_examples() {
        assert_eq!(DenseMatrix::identity(3).adjoint(), DenseMatrix::identity(3));
        let expected = DenseMatrix::from_real_rows(&[&[0.0, 0.0], &[1.0, 0.0]]).unwrap();
        assert_eq!(nilpotent().adjoint(), expected);
        let m = DenseMatrix::diag(&[c(0.0, 1.0), c(0.0, 0.0)]).unwrap();
        assert_eq!(m.adjoint(), DenseMatrix::diag(&[c(0.0, -1.0), c(0.0, 0.0)]).unwrap());
    }

    #[test]
    fn quad_form_examples() {
        let x = UnitVector::new(vec![c(0.3, -0.2), c(0.1, 0.9), c(-0.5, 0.0)]).unwrap();
        let q = quad_form(&DenseMatrix::identity(3), &x).unwrap();
        assert!((q - ONE).norm() < 1e-15);

        let e1 = UnitVector::basis(2, 0);
        let q = quad_form(&DenseMatrix::real_diag(&[1.0, 0.0]).unwrap(), &e1).unwrap();
        assert_eq!(q, ONE);

        // x = (1,1)/√2: only the (0,1) entry contributes, x₁·conj(x₀) = ½.
        let x = UnitVector::new(vec![ONE, ONE]).unwrap();
        let q = quad_form(&nilpotent(), &x).unwrap();
        assert!((q - c(0.5, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn quad_form_rejects_dimension_mismatch() {
        let x = UnitVector::basis(3, 0);
        assert_eq!(
            quad_form(&nilpotent(), &x),
            Err(Error::DimensionMismatch { left: 2, right: 3 })
        );
    }

    #[test]
    fn eigs_examples() {
        let d = hermitian_eigs(&DenseMatrix::real_diag(&[3.0, 1.0]).unwrap()).unwrap();
        assert_eq!(d.eigenvalues, vec![3.0, 1.0]);
        assert_eq!(d.eigenvectors[0], UnitVector::basis(2, 0));
        assert_eq!(d.eigenvectors[1], UnitVector::basis(2, 1));

        let x = DenseMatrix::from_real_rows(&[&[0.0, 1.0], &[1.0, 0.0]]).unwrap();
        let d = hermitian_eigs(&x).unwrap();
        assert!((d.eigenvalues[0] - 1.0).abs() < 1e-14);
        assert!((d.eigenvalues[1] + 1.0).abs() < 1e-14);

        // ½(N + N*) has characteristic polynomial λ² − ¼.
        let n = nilpotent();
        let h = (&n + &n.adjoint()).scale(c(0.5, 0.0));
        let d = hermitian_eigs(&h).unwrap();
        assert!((d.eigenvalues[0] - 0.5).abs() < 1e-14);
        assert!((d.eigenvalues[1] + 0.5).abs() < 1e-14);
    }

    #[test]
    fn eigs_complex_hermitian_pairs() {
        let h = DenseMatrix::from_rows(&[
            vec![c(2.0, 0.0), c(1.0, -1.0), c(0.0, 0.5)],
            vec![c(1.0, 1.0), c(-1.0, 0.0), c(0.25, 0.0)],
            vec![c(0.0, -0.5), c(0.25, 0.0), c(0.5, 0.0)],
        ])
        .unwrap();
        let d = hermitian_eigs(&h).unwrap();
        for (lam, v) in d.eigenvalues.iter().zip(&d.eigenvectors) {
            let hv = h.apply(v.entries());
            let resid: f64 = hv
                .iter()
                .zip(v.entries())
                .map(|(a, b)| (a - b * lam).norm_sqr())
                .sum::<f64>()
                .sqrt();
            assert!(resid < 1e-12, "residual {resid}");
        }
        for i in 0..3 {
            for j in 0..3 {
                let ip = d.eigenvectors[i].inner(&d.eigenvectors[j]).norm();
                let want = if i == j { 1.0 } else { 0.0 };
                assert!((ip - want).abs() < 1e-12);
            }
        }
        assert!(d.eigenvalues.windows(2).all(|w| w[0] >= w[1]));
    }

    #[test]
    fn eigs_rejects_non_hermitian() {
        assert!(matches!(hermitian_eigs(&nilpotent()), Err(Error::NotHermitian { .. })));
    }

    #[test]
    fn lambda_max_closed_form_matches_jacobi() {
        let h = DenseMatrix::from_rows(&[vec![c(0.3, 0.0), c(-1.2, 0.7)], vec![c(-1.2, -0.7), c(-2.0, 0.0)]]).unwrap();
        let full = hermitian_eigs(&h).unwrap();
        assert!((lambda_max(&h).unwrap() - full.max_eigenvalue()).abs() < 1e-14);
    }

    #[test]
    fn operator_norm_examples() {
        assert!((operator_norm(&DenseMatrix::identity(4)) - 1.0).abs() < 1e-15);
        assert!((operator_norm(&nilpotent()) - 1.0).abs() < 1e-15);
        let m = DenseMatrix::from_real_rows(&[&[0.0, -1.0], &[0.0, 1.0]]).unwrap();
        assert!((operator_norm(&m) - 2f64.sqrt()).abs() < 1e-14);
    }

    #[test]
    fn positive_semidefinite_examples() {
        assert!(is_positive_semidefinite(&DenseMatrix::identity(2), 1e-12));
        assert!(!is_positive_semidefinite(
            &DenseMatrix::real_diag(&[1.0, -1.0]).unwrap(),
            1e-12
        ));
        let m = DenseMatrix::from_real_rows(&[&[1.0, 1.0], &[0.0, 1.0]]).unwrap();
        assert!(!is_positive_semidefinite(&m, 1e-12));
    }

    #[test]
    fn construction_rejects_bad_input() {
        assert_eq!(DenseMatrix::from_row_major(0, vec![]), Err(Error::NotSquare));
        assert_eq!(DenseMatrix::from_row_major(2, vec![ONE; 3]), Err(Error::NotSquare));
        assert_eq!(
            DenseMatrix::from_row_major(1, vec![c(f64::NAN, 0.0)]),
            Err(Error::NonFinite)
        );
        assert_eq!(UnitVector::new(vec![ZERO, ZERO]), Err(Error::ZeroVector));
    }

    #[test]
    fn orthonormalize_gives_unitary() {
        let m = DenseMatrix::from_rows(&[
            vec![c(1.0, 0.2), c(0.0, 1.0), c(2.0, 0.0)],
            vec![c(0.5, 0.0), c(1.0, -1.0), c(0.0, 0.3)],
            vec![c(-1.0, 0.0), c(0.2, 0.0), c(1.0, 1.0)],
        ])
        .unwrap();
        let u = orthonormalize_columns(&m).unwrap();
        let g = &u.adjoint() * &u;
        let diff = &g - &DenseMatrix::identity(3);
        assert!(diff.max_entry().2 < 1e-14);
    }
}
