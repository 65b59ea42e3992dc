//! Numerical-radius parallelism `T ∥_ω S` (`ω(T + λS) = ω(T) + ω(S)` for
//! some unimodular `λ`) and the vector-level characterization through a
//! common attaining vector.

use alloc::vec::Vec;
use core::f64::consts::TAU;

use num_complex::Complex64;
#[allow(unused_imports)] // shadowed by inherent f64 methods when std is linked
use num_traits::Float;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

use crate::linalg::{quad, DenseMatrix, UnitVector};
use crate::optimize::{periodic_max, sphere_ascent, AlignedProduct, PairObjective, ProductModulusSq};
use crate::orthogonality::{Status, Verdict, Witness};
use crate::radius::{same_dims, RadiusSolver};
use crate::{Result, Settings};

const ASCENT_MAX_ITER: usize = 2000;

/// Phase of `λ`, a unit vector and `⟨Tx,x⟩·conj(⟨Sx,x⟩)` at that vector.
#[derive(Debug, Clone, PartialEq)]
pub struct ParallelWitness {
    /// `arg λ` in `[0, 2π)`.
    pub lambda_phase: f64,
    pub x: UnitVector,
    pub product_value: Complex64,
}

impl ParallelWitness {
    pub fn lambda(&self) -> Complex64 {
        Complex64::from_polar(1.0, self.lambda_phase)
    }

    fn at(t: &DenseMatrix, s: &DenseMatrix, x: UnitVector) -> Self {
        let qt = quad(t, x.entries());
        let qs = quad(s, x.entries());
        let lambda_phase = wrap(qt.arg() - qs.arg());
        ParallelWitness {
            lambda_phase,
            x,
            product_value: qt * qs.conj(),
        }
    }
}

fn wrap(angle: f64) -> f64 {
    let a = angle % TAU;
    if a < 0.0 {
        a + TAU
    } else {
        a
    }
}

/// `max_φ ω(T + e^{iφ}S)` against `ω(T) + ω(S)` on a phase grid refined by
/// golden section. Margin is `max − ω(T) − ω(S)` (never positive beyond
/// rounding).
pub fn radius_parallel(t: &DenseMatrix, s: &DenseMatrix, tol: f64, settings: &Settings) -> Result<Verdict> {
    same_dims(t, s)?;
    let solver = RadiusSolver::from_settings(settings);
    let omega_t = solver.omega(t)?;
    let omega_s = solver.omega(s)?;
    if omega_t <= tol || omega_s <= tol {
        return Ok(Verdict {
            status: Status::Holds,
            witness: None,
            margin: 0.0,
            tolerance: tol,
        });
    }
    let (phase, best) = periodic_max(
        |phi| solver.omega(&t.add_scaled(Complex64::from_polar(1.0, phi), s)),
        TAU,
        settings.phase_grid,
        settings.theta_tol,
    )?;
    let margin = best - omega_t - omega_s;
    let status = Status::from_deficit((-margin).max(0.0), tol);
    let combined = t.add_scaled(Complex64::from_polar(1.0, phase), s);
    let x = solver.certificate(&combined)?.x_star;
    let mut witness = ParallelWitness::at(t, s, x);
    witness.lambda_phase = phase;
    Ok(Verdict {
        status,
        witness: Some(Witness::Parallel(witness)),
        margin,
        tolerance: tol,
    })
}

/// Starting vectors for sphere ascent: the given anchors followed by
/// `restarts` complex Gaussian vectors from a ChaCha8 stream seeded with
/// `settings.seed`.
fn ascent_starts(dim: usize, anchors: Vec<UnitVector>, restarts: usize, settings: &Settings) -> Vec<Vec<Complex64>> {
    let mut rng = ChaCha8Rng::seed_from_u64(settings.seed);
    let mut starts: Vec<Vec<Complex64>> = anchors.into_iter().map(|x| x.entries().to_vec()).collect();
    for _ in 0..restarts {
        let v: Vec<Complex64> = (0..dim)
            .map(|_| {
                let re: f64 = StandardNormal.sample(&mut rng);
                let im: f64 = StandardNormal.sample(&mut rng);
                Complex64::new(re, im)
            })
            .collect();
        starts.push(v);
    }
    starts
}

fn best_ascent(
    t: &DenseMatrix,
    s: &DenseMatrix,
    objective: &impl PairObjective,
    starts: &[Vec<Complex64>],
) -> Result<(f64, UnitVector)> {
    let mut best: Option<(f64, Vec<Complex64>)> = None;
    for start in starts {
        let run = sphere_ascent(t, s, objective, start, ASCENT_MAX_ITER);
        if best.as_ref().map_or(true, |b| run.value > b.0) {
            best = Some((run.value, run.x));
        }
    }
    let (value, x) = best.expect("at least one start");
    Ok((value, UnitVector::new(x)?))
}

/// Maximizes `|⟨Tx,x⟩|·|⟨Sx,x⟩|` over unit `x`. Returns the maximum and a
/// witness whose `λ` aligns the two quadratic forms.
pub fn parallel_witness_search(
    t: &DenseMatrix,
    s: &DenseMatrix,
    restarts: usize,
    settings: &Settings,
) -> Result<(f64, ParallelWitness)> {
    same_dims(t, s)?;
    let solver = RadiusSolver::from_settings(settings);
    let anchors = alloc::vec![solver.certificate(t)?.x_star, solver.certificate(s)?.x_star];
    let starts = ascent_starts(t.dim(), anchors, restarts, settings);
    let (value, x) = best_ascent(t, s, &ProductModulusSq, &starts)?;
    Ok((value.max(0.0).sqrt(), ParallelWitness::at(t, s, x)))
}

/// Decides `T ∥_ω S` through a common attaining vector: holds when
/// `max_x |⟨Tx,x⟩|·|⟨Sx,x⟩|` reaches `ω(T)·ω(S)`. The tolerance is scaled by
/// `max(1, ω(T) + ω(S))` since the compared quantity is a product.
pub fn witness_parallel(t: &DenseMatrix, s: &DenseMatrix, tol: f64, settings: &Settings) -> Result<Verdict> {
    same_dims(t, s)?;
    let solver = RadiusSolver::from_settings(settings);
    let omega_t = solver.omega(t)?;
    let omega_s = solver.omega(s)?;
    let tolerance = tol * (omega_t + omega_s).max(1.0);
    if omega_t <= tol || omega_s <= tol {
        return Ok(Verdict {
            status: Status::Holds,
            witness: None,
            margin: 0.0,
            tolerance,
        });
    }
    let (best, witness) = parallel_witness_search(t, s, settings.ascent_restarts, settings)?;
    let margin = best - omega_t * omega_s;
    Ok(Verdict {
        status: Status::from_deficit((-margin).max(0.0), tolerance),
        witness: Some(Witness::Parallel(witness)),
        margin,
        tolerance,
    })
}

/// Two routes to `ω(T + S) = ω(T) + ω(S)` and their reconciliation.
#[derive(Debug, Clone, PartialEq)]
pub struct TriangleEquality {
    /// Agreement of the two routes, otherwise inconclusive.
    pub combined: Verdict,
    /// `|ω(T+S) − ω(T) − ω(S)|` against `tol`.
    pub direct: Verdict,
    /// `max_x Re{⟨Tx,x⟩·conj(⟨Sx,x⟩)}` against `ω(T)·ω(S)`, with the
    /// imaginary part at the maximizer checked as well.
    pub certificate: Verdict,
}

pub fn triangle_equality(t: &DenseMatrix, s: &DenseMatrix, tol: f64, settings: &Settings) -> Result<TriangleEquality> {
    same_dims(t, s)?;
    let solver = RadiusSolver::from_settings(settings);
    let omega_t = solver.omega(t)?;
    let omega_s = solver.omega(s)?;
    let sum = solver.certificate(&(t + s))?;
    let gap = sum.omega - omega_t - omega_s;
    let direct = Verdict {
        status: Status::from_deficit(gap.abs(), tol),
        witness: Some(Witness::Vector(sum.x_star.clone())),
        margin: gap,
        tolerance: tol,
    };

    let tolerance = tol * (omega_t + omega_s).max(1.0);
    let anchors = alloc::vec![sum.x_star, solver.certificate(t)?.x_star, solver.certificate(s)?.x_star,];
    let starts = ascent_starts(t.dim(), anchors, settings.ascent_restarts, settings);
    let (value, x) = best_ascent(t, s, &AlignedProduct, &starts)?;
    let target = omega_t * omega_s;
    let margin = value - target;
    let mut status = Status::from_deficit((-margin).max(0.0), tolerance);
    let witness = ParallelWitness::at(t, s, x);
    // Re ≥ ωω − δ and |product| ≤ ωω force |Im| ≤ √(2ωω·δ); anything
    // beyond that is numerical trouble.
    let im_bound = (2.0 * target * tolerance).sqrt() + tolerance;
    if status == Status::Holds && witness.product_value.im.abs() > im_bound {
        status = Status::Inconclusive;
    }
    let certificate = Verdict {
        status,
        witness: Some(Witness::Parallel(witness)),
        margin,
        tolerance,
    };
    let mut combined = direct.reconcile(&certificate);
    combined.witness = certificate.witness.clone();
    Ok(TriangleEquality {
        combined,
        direct,
        certificate,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn real(rows: &[&[f64]]) -> DenseMatrix {
        DenseMatrix::from_real_rows(rows).unwrap()
    }

    #[test]
    fn parallel_examples() {
        let cfg = Settings::default();
        let i2 = DenseMatrix::identity(2);
        let v = radius_parallel(&i2, &i2, 1e-6, &cfg).unwrap();
        assert!(v.holds(), "{v:?}");

        let a = DenseMatrix::real_diag(&[1.0, 0.0]).unwrap();
        let b = DenseMatrix::real_diag(&[0.0, 1.0]).unwrap();
        let v = radius_parallel(&a, &b, 1e-6, &cfg).unwrap();
        assert!(v.fails());
        assert!((v.margin + 1.0).abs() < 1e-9);

        let t = real(&[&[0.0, 1.0], &[0.0, 0.0]]);
        let s = DenseMatrix::scalar(2, Complex64::new(0.0, 1.0));
        let v = radius_parallel(&t, &s, 1e-6, &cfg).unwrap();
        assert!(v.holds(), "{v:?}");
    }

    #[test]
    fn parallel_is_invariant_under_phase_of_s() {
        let cfg = Settings::default();
        let t = real(&[&[1.0, 2.0], &[0.0, -0.5]]);
        let rot = Complex64::from_polar(1.0, 1.1);
        let v = radius_parallel(&t, &t.scale(rot), 1e-6, &cfg).unwrap();
        assert!(v.holds());
        let Some(Witness::Parallel(w)) = v.witness else {
            panic!()
        };
        assert!((Complex64::from_polar(1.0, w.lambda_phase) * rot - 1.0).norm() < 1e-4);
    }

    #[test]
    fn witness_search_matches_theory() {
        let cfg = Settings::default();
        let i2 = DenseMatrix::identity(2);
        let (value, _) = parallel_witness_search(&i2, &i2, 4, &cfg).unwrap();
        assert!((value - 1.0).abs() < 1e-9);

        let a = DenseMatrix::real_diag(&[1.0, 0.0]).unwrap();
        let b = DenseMatrix::real_diag(&[0.0, 1.0]).unwrap();
        // |q_T|·|q_S| = t(1−t) with t = |x₁|², maximal at 1/4.
        let (value, _) = parallel_witness_search(&a, &b, 8, &cfg).unwrap();
        assert!((value - 0.25).abs() < 1e-9, "{value}");
        assert!(witness_parallel(&a, &b, 1e-6, &cfg).unwrap().fails());
        assert!(witness_parallel(&i2, &i2, 1e-6, &cfg).unwrap().holds());
    }

    #[test]
    fn witness_lambda_aligns_forms() {
        let cfg = Settings::default();
        let t = real(&[&[0.0, 1.0], &[0.0, 0.0]]);
        let s = DenseMatrix::scalar(2, Complex64::new(0.0, 1.0));
        let (value, w) = parallel_witness_search(&t, &s, 8, &cfg).unwrap();
        assert!((value - 0.5).abs() < 1e-7);
        let qt = quad(&t, w.x.entries());
        let qs = quad(&s, w.x.entries());
        assert!((qt.norm() + qs.norm() - (qt + w.lambda() * qs).norm()).abs() < 1e-9);
    }

    #[test]
    fn triangle_examples() {
        let cfg = Settings::default();
        let i2 = DenseMatrix::identity(2);
        let r = triangle_equality(&i2, &i2, 1e-6, &cfg).unwrap();
        assert!(r.combined.holds(), "{r:?}");

        let a = DenseMatrix::real_diag(&[1.0, 0.0]).unwrap();
        let b = DenseMatrix::real_diag(&[0.0, 1.0]).unwrap();
        let r = triangle_equality(&a, &b, 1e-6, &cfg).unwrap();
        assert!(r.direct.fails());
        assert!(r.certificate.fails());
        assert!(r.combined.fails());

        let t = real(&[&[0.0, 1.0], &[0.0, 0.0]]);
        let r = triangle_equality(&t, &(&t * Complex64::new(2.0, 0.0)), 1e-6, &cfg).unwrap();
        assert!(r.combined.holds(), "{r:?}");
    }

    #[test]
    fn zero_operator_is_parallel() {
        let cfg = Settings::default();
        let t = real(&[&[1.0, 2.0], &[0.0, -0.5]]);
        let z = DenseMatrix::zeros(2);
        assert!(radius_parallel(&t, &z, 1e-6, &cfg).unwrap().holds());
        assert!(witness_parallel(&z, &t, 1e-6, &cfg).unwrap().holds());
    }
}
