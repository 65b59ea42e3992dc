//! Seeded random matrix ensembles.

use alloc::vec::Vec;
use core::fmt;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

use crate::linalg::{hermitian_eigs, orthonormalize_columns, DenseMatrix, UnitVector};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EnsembleKind {
    General,
    Hermitian,
    SkewHermitian,
    PositiveSemidefinite,
    NilpotentSquareZero,
    UpperTriangular2x2,
    Unitary,
}

impl EnsembleKind {
    pub const ALL: [EnsembleKind; 7] = [
        EnsembleKind::General,
        EnsembleKind::Hermitian,
        EnsembleKind::SkewHermitian,
        EnsembleKind::PositiveSemidefinite,
        EnsembleKind::NilpotentSquareZero,
        EnsembleKind::UpperTriangular2x2,
        EnsembleKind::Unitary,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            EnsembleKind::General => "general",
            EnsembleKind::Hermitian => "hermitian",
            EnsembleKind::SkewHermitian => "skew_hermitian",
            EnsembleKind::PositiveSemidefinite => "positive_semidefinite",
            EnsembleKind::NilpotentSquareZero => "nilpotent_square_zero",
            EnsembleKind::UpperTriangular2x2 => "upper_triangular_2x2",
            EnsembleKind::Unitary => "unitary",
        }
    }

    /// Accepts the canonical names and the short forms `positive`, `psd`,
    /// `skew`, `nilpotent` and `triangular`.
    pub fn parse(name: &str) -> Option<Self> {
        let kind = match name {
            "positive" | "psd" => EnsembleKind::PositiveSemidefinite,
            "skew" => EnsembleKind::SkewHermitian,
            "nilpotent" => EnsembleKind::NilpotentSquareZero,
            "triangular" | "upper_triangular" => EnsembleKind::UpperTriangular2x2,
            other => return Self::ALL.into_iter().find(|k| k.as_str() == other),
        };
        Some(kind)
    }
}

impl fmt::Display for EnsembleKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A reproducible family of `count` random matrices. Trial `i` draws from
/// ChaCha8 seeded with `seed` on stream `i`, so trials are independent of
/// each other and of evaluation order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Ensemble {
    pub kind: EnsembleKind,
    pub dim: usize,
    pub seed: u64,
    pub count: usize,
}

impl Ensemble {
    pub fn new(kind: EnsembleKind, dim: usize, seed: u64, count: usize) -> Self {
        Ensemble { kind, dim, seed, count }
    }

    pub fn trial_rng(&self, trial: usize) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(trial as u64);
        rng
    }

    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> Result<DenseMatrix> {
        random_matrix(self.kind, self.dim, rng)
    }

    /// The first matrix of each of the `count` trial streams.
    pub fn matrices(&self) -> Result<Vec<DenseMatrix>> {
        (0..self.count).map(|i| self.sample(&mut self.trial_rng(i))).collect()
    }
}

/// Standard complex Gaussian: real and imaginary parts `N(0, ½)`.
pub fn complex_gaussian<R: Rng + ?Sized>(rng: &mut R) -> Complex64 {
    let re: f64 = StandardNormal.sample(rng);
    let im: f64 = StandardNormal.sample(rng);
    Complex64::new(re, im) * core::f64::consts::FRAC_1_SQRT_2
}

pub fn gaussian_matrix<R: Rng + ?Sized>(dim: usize, rng: &mut R) -> Result<DenseMatrix> {
    let entries = (0..dim * dim).map(|_| complex_gaussian(rng)).collect();
    DenseMatrix::from_row_major(dim, entries)
}

pub fn random_unit_vector<R: Rng + ?Sized>(dim: usize, rng: &mut R) -> Result<UnitVector> {
    UnitVector::new((0..dim).map(|_| complex_gaussian(rng)).collect())
}

pub fn random_unitary<R: Rng + ?Sized>(dim: usize, rng: &mut R) -> Result<DenseMatrix> {
    orthonormalize_columns(&gaussian_matrix(dim, rng)?)
}

/// `½(M + M*)`, exactly Hermitian.
pub fn hermitian_part(m: &DenseMatrix) -> DenseMatrix {
    (m + &m.adjoint()).scale(Complex64::new(0.5, 0.0))
}

/// `½(M − M*)`, exactly skew-Hermitian.
pub fn skew_hermitian_part(m: &DenseMatrix) -> DenseMatrix {
    (m - &m.adjoint()).scale(Complex64::new(0.5, 0.0))
}

pub fn random_matrix<R: Rng + ?Sized>(kind: EnsembleKind, dim: usize, rng: &mut R) -> Result<DenseMatrix> {
    if dim == 0 {
        return Err(Error::InvalidArgument("dimension must be positive"));
    }
    match kind {
        EnsembleKind::General => gaussian_matrix(dim, rng),
        EnsembleKind::Hermitian => Ok(hermitian_part(&gaussian_matrix(dim, rng)?)),
        EnsembleKind::SkewHermitian => Ok(skew_hermitian_part(&gaussian_matrix(dim, rng)?)),
        EnsembleKind::PositiveSemidefinite => {
            let a = gaussian_matrix(dim, rng)?;
            Ok(hermitian_part(&(&a.adjoint() * &a)))
        }
        EnsembleKind::NilpotentSquareZero => {
            if dim < 2 {
                return Err(Error::InvalidArgument("square-zero ensemble needs dim ≥ 2"));
            }
            // strictly upper 2×2 blocks, conjugated by a random unitary
            let mut n = DenseMatrix::zeros(dim);
            let mut entries = n.entries().to_vec();
            for b in 0..dim / 2 {
                entries[(2 * b) * dim + 2 * b + 1] = complex_gaussian(rng);
            }
            n = DenseMatrix::from_row_major(dim, entries)?;
            let u = random_unitary(dim, rng)?;
            Ok(&(&u.adjoint() * &n) * &u)
        }
        EnsembleKind::UpperTriangular2x2 => {
            if dim != 2 {
                return Err(Error::InvalidArgument("upper-triangular ensemble is 2×2 only"));
            }
            let a = complex_gaussian(rng);
            let b = complex_gaussian(rng);
            let d = complex_gaussian(rng);
            DenseMatrix::from_row_major(2, alloc::vec![a, b, Complex64::new(0.0, 0.0), d])
        }
        EnsembleKind::Unitary => random_unitary(dim, rng),
    }
}

/// Structural predicate of `kind`, checked to `tol` relative to the size
/// of `m`.
pub fn satisfies_kind(kind: EnsembleKind, m: &DenseMatrix, tol: f64) -> bool {
    let scale = 1.0 + m.frobenius_norm();
    match kind {
        EnsembleKind::General => true,
        EnsembleKind::Hermitian => m.hermitian_deviation() <= tol * scale,
        EnsembleKind::SkewHermitian => (m + &m.adjoint()).max_entry().2 <= tol * scale,
        EnsembleKind::PositiveSemidefinite => {
            m.hermitian_deviation() <= tol * scale
                && hermitian_eigs(&hermitian_part(m))
                    .map(|e| e.min_eigenvalue() >= -tol * scale)
                    .unwrap_or(false)
        }
        EnsembleKind::NilpotentSquareZero => (m * m).max_entry().2 <= tol * scale * scale,
        EnsembleKind::UpperTriangular2x2 => m.dim() == 2 && m.get(1, 0).norm() <= tol * scale,
        EnsembleKind::Unitary => {
            let gram = &m.adjoint() * m;
            (&gram - &DenseMatrix::identity(m.dim())).max_entry().2 <= tol * scale
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_kind_satisfies_its_predicate() {
        for kind in EnsembleKind::ALL {
            let dims: &[usize] = if kind == EnsembleKind::UpperTriangular2x2 {
                &[2]
            } else {
                &[2, 3, 5]
            };
            for &dim in dims {
                let ens = Ensemble::new(kind, dim, 11, 20);
                for m in ens.matrices().unwrap() {
                    assert!(satisfies_kind(kind, &m, 1e-12), "{kind} dim {dim}");
                }
            }
        }
    }

    #[test]
    fn kinds_are_distinguished() {
        let ens = Ensemble::new(EnsembleKind::General, 3, 1, 5);
        for m in ens.matrices().unwrap() {
            assert!(!satisfies_kind(EnsembleKind::Hermitian, &m, 1e-12));
            assert!(!satisfies_kind(EnsembleKind::NilpotentSquareZero, &m, 1e-12));
        }
    }

    #[test]
    fn streams_are_reproducible_and_distinct() {
        let ens = Ensemble::new(EnsembleKind::General, 2, 99, 3);
        let a = ens.matrices().unwrap();
        let b = ens.matrices().unwrap();
        assert_eq!(a, b);
        assert_ne!(a[0], a[1]);
        let other = Ensemble { seed: 100, ..ens };
        assert_ne!(other.matrices().unwrap()[0], a[0]);
    }

    #[test]
    fn parse_round_trips() {
        for kind in EnsembleKind::ALL {
            assert_eq!(EnsembleKind::parse(kind.as_str()), Some(kind));
        }
        assert_eq!(
            EnsembleKind::parse("positive"),
            Some(EnsembleKind::PositiveSemidefinite)
        );
        assert_eq!(EnsembleKind::parse("bogus"), None);
    }

    #[test]
    fn shape_errors() {
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        assert!(random_matrix(EnsembleKind::UpperTriangular2x2, 3, &mut rng).is_err());
        assert!(random_matrix(EnsembleKind::NilpotentSquareZero, 1, &mut rng).is_err());
        assert!(random_matrix(EnsembleKind::General, 0, &mut rng).is_err());
    }
}
