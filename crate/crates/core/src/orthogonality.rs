//! Deciders for usual, Birkhoff, numerical-radius Birkhoff and
//! numerical-radius Pythagorean orthogonality, plus an attainment-based
//! certifier for numerical-radius Birkhoff orthogonality.
//!
//! Every decider returns a three-state [`Verdict`]. The relations here are
//! one-sided equalities: `min_λ ω(T+λS) ≤ ω(T)` always (take `λ = 0`), so
//! "holds" means the computed deficit is within `tol`, "fails" means it
//! exceeds `FAIL_FACTOR·tol`, and the band in between is inconclusive.

use alloc::vec::Vec;
use core::f64::consts::TAU;

use num_complex::Complex64;
#[allow(unused_imports)] // shadowed by inherent f64 methods when std is linked
use num_traits::Float;

use crate::linalg::{hermitian_eigs, operator_norm, quad, DenseMatrix, UnitVector};
use crate::optimize::{nelder_mead, nelder_mead_polished, SimplexResult};
use crate::parallelism::ParallelWitness;
use crate::radius::{attainment_peaks, attainment_sample_with, rotated_hermitian_part, same_dims, RadiusSolver};
use crate::{Result, Settings};

/// A deficit above `FAIL_FACTOR · tol` is a failure; between `tol` and
/// that it is inconclusive.
pub const FAIL_FACTOR: f64 = 2.0;

/// Relative simplex size at which the multi-start phase hands over to polishing.
const COARSE_SIMPLEX: f64 = 1e-4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Status {
    Holds,
    Fails,
    Inconclusive,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Holds => "holds",
            Status::Fails => "fails",
            Status::Inconclusive => "inconclusive",
        }
    }

    /// Classifies a non-negative deficit against `tol`.
    pub fn from_deficit(deficit: f64, tol: f64) -> Self {
        if deficit <= tol {
            Status::Holds
        } else if deficit > FAIL_FACTOR * tol {
            Status::Fails
        } else {
            Status::Inconclusive
        }
    }
}

/// Evidence attached to a verdict.
#[derive(Debug, Clone, PartialEq)]
pub enum Witness {
    /// The minimizing `λ` of `‖T+λS‖` or `ω(T+λS)`.
    Lambda(Complex64),
    /// Largest entry of `S*T`.
    Entry {
        row: usize,
        col: usize,
        value: Complex64,
    },
    /// Worst angle of the attainment certifier, the best sampled vector
    /// there and its value `Re{e^{−iθ}⟨Tx,x⟩·conj(⟨Sx,x⟩)}`.
    Theta {
        theta: f64,
        x: UnitVector,
        value: f64,
    },
    /// Hausdorff distance between two attainment samples and the vector realizing it.
    Distance {
        distance: f64,
        x: UnitVector,
    },
    Vector(UnitVector),
    Parallel(ParallelWitness),
}

/// Three-state decision with a signed margin.
#[derive(Debug, Clone, PartialEq)]
pub struct Verdict {
    pub status: Status,
    pub witness: Option<Witness>,
    /// Signed distance of the computed quantity from its threshold.
    pub margin: f64,
    pub tolerance: f64,
}

impl Verdict {
    pub fn holds(&self) -> bool {
        self.status == Status::Holds
    }

    pub fn fails(&self) -> bool {
        self.status == Status::Fails
    }

    fn vacuous(tolerance: f64) -> Self {
        Verdict {
            status: Status::Holds,
            witness: None,
            margin: 0.0,
            tolerance,
        }
    }

    /// Combines two procedures that decide the same relation: agreement
    /// keeps `self`, a holds/fails split (or any inconclusive side) becomes
    /// inconclusive.
    pub fn reconcile(&self, other: &Verdict) -> Verdict {
        if self.status == other.status {
            self.clone()
        } else {
            Verdict {
                status: Status::Inconclusive,
                ..self.clone()
            }
        }
    }
}

/// `S ⊥ T` in the usual sense: `S*T = 0` entrywise within `tol`.
pub fn usual_orthogonal(s: &DenseMatrix, t: &DenseMatrix, tol: f64) -> Result<Verdict> {
    same_dims(s, t)?;
    let product = &s.adjoint() * t;
    let (row, col, modulus) = product.max_entry();
    let status = Status::from_deficit(modulus, tol);
    Ok(Verdict {
        status,
        witness: (status != Status::Holds).then(|| Witness::Entry {
            row,
            col,
            value: product.get(row, col),
        }),
        margin: -modulus,
        tolerance: tol,
    })
}

struct LambdaMin {
    lambda: Complex64,
    value: f64,
}

/// Minimizes a convex, coercive `f(λ)` over `ℂ` from five deterministic
/// starts `0, ±r, ±ir`. The minimizer lies in `|λ| ≤ 2r`; points outside
/// are pulled back radially and pay the excess distance as a penalty.
///
/// Every start runs to a coarse simplex; only the best is polished down to
/// `settings.simplex_tol · r`. Ties keep the earliest start.
fn minimize_over_lambda(mut f: impl FnMut(Complex64) -> Result<f64>, r: f64, settings: &Settings) -> Result<LambdaMin> {
    let trust = 2.0 * r;
    let mut objective = |p: &[f64]| -> Result<f64> {
        let lambda = Complex64::new(p[0], p[1]);
        let modulus = lambda.norm();
        if modulus > trust {
            Ok(f(lambda * (trust / modulus))? + (modulus - trust))
        } else {
            f(lambda)
        }
    };
    let starts = [[0.0, 0.0], [r, 0.0], [-r, 0.0], [0.0, r], [0.0, -r]];
    let mut best: Option<SimplexResult> = None;
    for start in &starts {
        let run = nelder_mead(
            &mut objective,
            start,
            0.5 * r,
            COARSE_SIMPLEX * r,
            settings.simplex_max_evals,
        )?;
        if best.as_ref().map_or(true, |b| run.value < b.value) {
            best = Some(run);
        }
    }
    let coarse = best.expect("at least one start");
    let polished = nelder_mead_polished(
        &mut objective,
        &coarse.x,
        10.0 * COARSE_SIMPLEX * r,
        settings.simplex_tol * r,
        settings.simplex_max_evals,
    )?;
    let run = if polished.value <= coarse.value {
        polished
    } else {
        coarse
    };
    let mut lambda = Complex64::new(run.x[0], run.x[1]);
    if lambda.norm() > trust {
        lambda *= trust / lambda.norm();
    }
    Ok(LambdaMin {
        lambda,
        value: run.value,
    })
}

/// Iteration cap of [`ridge_descent`].
const RIDGE_ITERS: usize = 80;

/// Point of least modulus in the convex hull of `points`; zero when the
/// origin is inside.
fn min_norm_point(points: &[Complex64]) -> Complex64 {
    let cross = |o: Complex64, a: Complex64, b: Complex64| (a - o).re * (b - o).im - (a - o).im * (b - o).re;
    let mut pts: Vec<Complex64> = points.to_vec();
    pts.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
    pts.dedup();
    // monotone chain, counter-clockwise
    let mut hull: Vec<Complex64> = Vec::with_capacity(2 * pts.len());
    for pass in 0..2 {
        let floor = hull.len();
        let iter: alloc::boxed::Box<dyn Iterator<Item = &Complex64>> = if pass == 0 {
            alloc::boxed::Box::new(pts.iter())
        } else {
            alloc::boxed::Box::new(pts.iter().rev())
        };
        for &p in iter {
            while hull.len() >= floor + 2 && cross(hull[hull.len() - 2], hull[hull.len() - 1], p) <= 0.0 {
                hull.pop();
            }
            hull.push(p);
        }
        hull.pop();
    }
    if hull.is_empty() {
        hull.push(pts[0]);
    }
    let zero = Complex64::new(0.0, 0.0);
    let k = hull.len();
    if k >= 3 && (0..k).all(|i| cross(hull[i], hull[(i + 1) % k], zero) >= 0.0) {
        return zero;
    }
    let mut best = hull[0];
    for i in 0..k {
        let a = hull[i];
        let d = hull[(i + 1) % k] - a;
        let len = d.norm_sqr();
        let t = if len > 0.0 {
            (-(a.conj() * d).re / len).clamp(0.0, 1.0)
        } else {
            0.0
        };
        let p = a + d * t;
        if p.norm_sqr() < best.norm_sqr() {
            best = p;
        }
    }
    best
}

/// Steepest descent on `λ ↦ ω(T + λS)` from the simplex result.
///
/// Near `λ`, `ω(T + (λ+μ)S) ≈ ω + max_k Re(μ·a_k)` with
/// `a_k = ⟨Sx_k,x_k⟩·conj(q_k)/|q_k|` over maximizers `x_k` of `T + λS`
/// (`q_k = ⟨(T+λS)x_k,x_k⟩`). The least-modulus point of the hull of the
/// `a_k` gives the steepest descent direction. Maximizers are collected
/// with a slack that shrinks whenever no descent is found. This follows the
/// ridges where two maximizers stay active, on which the simplex stalls.
fn ridge_descent(t: &DenseMatrix, s: &DenseMatrix, start: LambdaMin, r: f64, settings: &Settings) -> Result<LambdaMin> {
    let solver = RadiusSolver::from_settings(settings);
    let mut cur = start;
    let scale = cur.value.max(f64::MIN_POSITIVE);
    let floor = 1e-13 * scale;
    let mut eps = 1e-6 * scale;
    let mut step = 1e-2 * r;
    for _ in 0..RIDGE_ITERS {
        let m = t.add_scaled(cur.lambda, s);
        let mut grads = Vec::new();
        for peak in attainment_peaks(&m, eps, settings)? {
            for x in &peak.basis {
                let q = quad(&m, x.entries());
                if q.norm() > 0.0 {
                    grads.push(quad(s, x.entries()) * q.conj() / q.norm());
                }
            }
        }
        let a = if grads.is_empty() {
            Complex64::new(0.0, 0.0)
        } else {
            min_norm_point(&grads)
        };
        let mut moved = false;
        if a.norm() > 0.0 {
            let dir = -a.conj() / a.norm();
            let mut h = (2.0 * step).min(r);
            while h > 1e-15 * r {
                let lambda = cur.lambda + dir * h;
                let value = solver.omega(&t.add_scaled(lambda, s))?;
                if value < cur.value {
                    cur = LambdaMin { lambda, value };
                    step = h;
                    moved = true;
                    break;
                }
                h *= 0.5;
            }
        }
        if !moved {
            if eps <= floor {
                break;
            }
            eps = (eps * 0.1).max(floor);
        }
    }
    Ok(cur)
}

fn birkhoff_verdict(base: f64, min: LambdaMin, tol: f64) -> Verdict {
    let margin = min.value - base;
    let status = Status::from_deficit((-margin).max(0.0), tol);
    Verdict {
        status,
        witness: (status != Status::Holds).then_some(Witness::Lambda(min.lambda)),
        margin,
        tolerance: tol,
    }
}

/// `T ⊥_B S`: `‖T + λS‖ ≥ ‖T‖` for all `λ ∈ ℂ`.
pub fn birkhoff_norm_orth(t: &DenseMatrix, s: &DenseMatrix, tol: f64, settings: &Settings) -> Result<Verdict> {
    same_dims(t, s)?;
    let norm_t = operator_norm(t);
    let norm_s = operator_norm(s);
    if norm_s <= tol || norm_t <= tol {
        return Ok(Verdict::vacuous(tol));
    }
    let min = minimize_over_lambda(
        |lambda| Ok(operator_norm(&t.add_scaled(lambda, s))),
        norm_t / norm_s,
        settings,
    )?;
    Ok(birkhoff_verdict(norm_t, min, tol))
}

/// `T ⊥_{ωB} S`: `ω(T + λS) ≥ ω(T)` for all `λ ∈ ℂ`.
pub fn birkhoff_radius_orth(t: &DenseMatrix, s: &DenseMatrix, tol: f64, settings: &Settings) -> Result<Verdict> {
    same_dims(t, s)?;
    let solver = RadiusSolver::from_settings(settings);
    let omega_t = solver.omega(t)?;
    let omega_s = solver.omega(s)?;
    if omega_s <= tol || omega_t <= tol {
        return Ok(Verdict::vacuous(tol));
    }
    let r = omega_t / omega_s;
    let min = minimize_over_lambda(|lambda| solver.omega(&t.add_scaled(lambda, s)), r, settings)?;
    let min = ridge_descent(t, s, min, r, settings)?;
    Ok(birkhoff_verdict(omega_t, min, tol))
}

/// The `λ` minimizing `ω(T + λS)`, with the minimum. Used to build pairs
/// with `T + λ*S ⊥_{ωB} S`.
pub fn radius_minimizing_lambda(t: &DenseMatrix, s: &DenseMatrix, settings: &Settings) -> Result<(Complex64, f64)> {
    same_dims(t, s)?;
    let solver = RadiusSolver::from_settings(settings);
    let omega_t = solver.omega(t)?;
    let omega_s = solver.omega(s)?;
    if omega_s == 0.0 || omega_t == 0.0 {
        return Ok((Complex64::new(0.0, 0.0), omega_t));
    }
    let r = omega_t / omega_s;
    let min = minimize_over_lambda(|lambda| solver.omega(&t.add_scaled(lambda, s)), r, settings)?;
    let min = ridge_descent(t, s, min, r, settings)?;
    Ok((min.lambda, min.value))
}

/// `T ⊥_{ωp} S`: `ω²(T+S) = ω²(T) + ω²(S)`.
pub fn pythagorean_radius_orth(t: &DenseMatrix, s: &DenseMatrix, tol: f64, settings: &Settings) -> Result<Verdict> {
    same_dims(t, s)?;
    let solver = RadiusSolver::from_settings(settings);
    let sum = solver.omega(&(t + s))?;
    let omega_t = solver.omega(t)?;
    let omega_s = solver.omega(s)?;
    let margin = sum * sum - omega_t * omega_t - omega_s * omega_s;
    Ok(Verdict {
        status: Status::from_deficit(margin.abs(), tol),
        witness: None,
        margin,
        tolerance: tol,
    })
}

/// Attainment-based certifier for `T ⊥_{ωB} S`: for every θ on an
/// `n_theta` grid some vector `x` attaining `ω(T)` up to `slack` must
/// satisfy `Re{e^{−iθ}⟨Tx,x⟩·conj(⟨Sx,x⟩)} ≥ −slack`.
///
/// Candidates come from [`attainment_peaks`]. On a peak at angle `φ` with
/// a multi-dimensional eigenspace `Q`, every unit `x ∈ Q` has
/// `⟨Tx,x⟩ = ω e^{−iφ}`, so the best `x` for θ is the top eigenvector of
/// `Q*·H_{θ+φ}(S)·Q`; the basis vectors are tried as well. The reported
/// value is always recomputed from `x`.
///
/// Only exact maximizers are sampled, while the conditions concern vectors
/// that attain `ω(T)` up to `slack`. Those lie within phase distance about
/// `√(2·slack)` of the sample, which moves the product by about
/// `√(2·slack)·ω(T)·ω(S)`; a deficit between `slack` and that resolution
/// (at least `2·slack`) is inconclusive.
///
/// Peaks are found on a finite grid, so a failure should be compared with
/// [`birkhoff_radius_orth`] through [`Verdict::reconcile`].
pub fn certify_orth_attainment(
    t: &DenseMatrix,
    s: &DenseMatrix,
    n_theta: usize,
    slack: f64,
    settings: &Settings,
) -> Result<Verdict> {
    same_dims(t, s)?;
    if n_theta == 0 {
        return Err(crate::Error::InvalidArgument("n_theta must be positive"));
    }
    let mut peaks = attainment_peaks(t, slack, settings)?;
    peaks.truncate(settings.attainment_budget.max(1));
    let value_at = |x: &UnitVector, rot: Complex64| {
        let p = quad(t, x.entries()) * quad(s, x.entries()).conj();
        (rot * p).re
    };

    let mut worst: Option<(f64, UnitVector, f64)> = None;
    for k in 0..n_theta {
        let theta = TAU * k as f64 / n_theta as f64;
        let rot = Complex64::from_polar(1.0, -theta);
        let mut best: Option<(UnitVector, f64)> = None;
        let mut consider = |x: UnitVector| {
            let v = value_at(&x, rot);
            if best.as_ref().map_or(true, |b| v > b.1) {
                best = Some((x, v));
            }
        };
        for peak in &peaks {
            for x in &peak.basis {
                consider(x.clone());
            }
            if peak.basis.len() > 1 {
                consider(best_in_eigenspace(&peak.basis, s, theta + peak.theta)?);
            }
        }
        let (x, value) = best.expect("at least one peak");
        if worst.as_ref().map_or(true, |w| value < w.2) {
            worst = Some((theta, x, value));
        }
    }
    let (theta, x, value) = worst.expect("n_theta > 0");
    let solver = RadiusSolver::from_settings(settings);
    let resolution = (FAIL_FACTOR * slack).max((2.0 * slack).sqrt() * solver.omega(t)? * solver.omega(s)?);
    let deficit = (-value).max(0.0);
    let status = if deficit <= slack {
        Status::Holds
    } else if deficit > resolution {
        Status::Fails
    } else {
        Status::Inconclusive
    };
    Ok(Verdict {
        status,
        witness: (status != Status::Holds).then_some(Witness::Theta { theta, x, value }),
        margin: value,
        tolerance: slack,
    })
}

/// Unit vector in `span(basis)` maximizing `⟨H_ψ(S) x, x⟩`.
fn best_in_eigenspace(basis: &[UnitVector], s: &DenseMatrix, psi: f64) -> Result<UnitVector> {
    let k = basis.len();
    let hs = rotated_hermitian_part(s, psi);
    let images: Vec<Vec<Complex64>> = basis.iter().map(|q| hs.apply(q.entries())).collect();
    let mut entries = Vec::with_capacity(k * k);
    for qa in basis {
        for hb in &images {
            // (Q* H Q)_{ab} = ⟨H q_b, q_a⟩
            let z: Complex64 = hb.iter().zip(qa.entries()).map(|(h, q)| h * q.conj()).sum();
            entries.push(z);
        }
    }
    let compressed = DenseMatrix::from_row_major(k, entries)?;
    let compressed = &(&compressed + &compressed.adjoint()) * Complex64::new(0.5, 0.0);
    let y = hermitian_eigs(&compressed)?.eigenvectors[0].clone();
    let n = s.dim();
    let mut x = alloc::vec![Complex64::new(0.0, 0.0); n];
    for (q, c) in basis.iter().zip(y.entries()) {
        for (xi, qi) in x.iter_mut().zip(q.entries()) {
            *xi += c * qi;
        }
    }
    UnitVector::new(x)
}

/// Compares the attainment samples of `T` and `S` modulo phase under
/// `d(x, y) = √(1 − |⟨x,y⟩|²)`. With `τ = √(2·slack)`: symmetric Hausdorff
/// distance below `τ/2` holds, above `2τ` fails, otherwise inconclusive.
pub fn attainment_sets_equal(t: &DenseMatrix, s: &DenseMatrix, slack: f64, settings: &Settings) -> Result<Verdict> {
    same_dims(t, s)?;
    let a = attainment_sample_with(t, slack, settings.attainment_budget, settings)?;
    let b = attainment_sample_with(s, slack, settings.attainment_budget, settings)?;
    let directed = |from: &[UnitVector], to: &[UnitVector]| -> (f64, usize) {
        from.iter()
            .enumerate()
            .map(|(i, x)| {
                let d = to.iter().map(|y| x.phase_distance(y)).fold(f64::INFINITY, f64::min);
                (d, i)
            })
            .fold((0.0, 0), |acc, cur| if cur.0 > acc.0 { cur } else { acc })
    };
    let (dab, ia) = directed(&a.vectors, &b.vectors);
    let (dba, ib) = directed(&b.vectors, &a.vectors);
    let (distance, x) = if dab >= dba {
        (dab, a.vectors[ia].clone())
    } else {
        (dba, b.vectors[ib].clone())
    };
    let threshold = (2.0 * slack).sqrt();
    let status = if distance < 0.5 * threshold {
        Status::Holds
    } else if distance > FAIL_FACTOR * threshold {
        Status::Fails
    } else {
        Status::Inconclusive
    };
    Ok(Verdict {
        status,
        witness: Some(Witness::Distance { distance, x }),
        margin: threshold - distance,
        tolerance: threshold,
    })
}

/// Re-evaluates a failing Birkhoff verdict at its witness `λ`: true when
/// `ω(T + λS) < ω(T) − tol`.
pub fn birkhoff_witness_rechecks(
    t: &DenseMatrix,
    s: &DenseMatrix,
    verdict: &Verdict,
    settings: &Settings,
) -> Result<bool> {
    let Some(Witness::Lambda(lambda)) = verdict.witness else {
        return Ok(false);
    };
    let solver = RadiusSolver::from_settings(settings);
    let at = solver.omega(&t.add_scaled(lambda, s))?;
    Ok(at < solver.omega(t)? - verdict.tolerance)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn real(rows: &[&[f64]]) -> DenseMatrix {
        DenseMatrix::from_real_rows(rows).unwrap()
    }

    #[test]
    fn min_norm_point_of_small_hulls() {
        let c = Complex64::new;
        assert_eq!(min_norm_point(&[c(2.0, 1.0)]), c(2.0, 1.0));
        assert_eq!(min_norm_point(&[c(1.0, 1.0), c(1.0, -1.0)]), c(1.0, 0.0));
        assert_eq!(min_norm_point(&[c(1.0, 0.0), c(-1.0, 0.0)]), c(0.0, 0.0));
        let around = [c(1.0, 0.0), c(-1.0, 1.0), c(-1.0, -1.0), c(0.1, 0.1)];
        assert_eq!(min_norm_point(&around), c(0.0, 0.0));
        let p = min_norm_point(&[c(1.0, 2.0), c(3.0, 0.0), c(4.0, 4.0), c(2.0, 1.5)]);
        assert!((p - c(1.5, 1.5)).norm() < 1e-12, "{p}");
    }

    fn settings() -> Settings {
        Settings::default()
    }

    #[test]
    fn usual_examples() {
        let s = real(&[&[0.0, -1.0], &[0.0, 1.0]]);
        let t = real(&[&[0.0, 1.0], &[0.0, 1.0]]);
        assert!(usual_orthogonal(&s, &t, 1e-12).unwrap().holds());
        let i2 = DenseMatrix::identity(2);
        let v = usual_orthogonal(&i2, &i2, 1e-12).unwrap();
        assert!(v.fails());
        assert!(matches!(v.witness, Some(Witness::Entry { .. })));
        let a = DenseMatrix::real_diag(&[1.0, 0.0]).unwrap();
        let b = DenseMatrix::real_diag(&[0.0, 1.0]).unwrap();
        assert!(usual_orthogonal(&a, &b, 1e-12).unwrap().holds());
    }

    #[test]
    fn birkhoff_norm_examples() {
        let cfg = settings();
        let t = real(&[&[1.0, 2.0], &[0.0, -1.0]]);
        assert!(birkhoff_norm_orth(&t, &DenseMatrix::zeros(2), 1e-6, &cfg)
            .unwrap()
            .holds());
        let a = DenseMatrix::real_diag(&[1.0, 0.0]).unwrap();
        let b = DenseMatrix::real_diag(&[0.0, 1.0]).unwrap();
        assert!(birkhoff_norm_orth(&a, &b, 1e-6, &cfg).unwrap().holds());
        let i2 = DenseMatrix::identity(2);
        let v = birkhoff_norm_orth(&i2, &i2, 1e-6, &cfg).unwrap();
        assert!(v.fails());
        let Some(Witness::Lambda(lambda)) = v.witness else {
            panic!("no witness")
        };
        assert!((lambda + 1.0).norm() < 1e-8);
    }

    #[test]
    fn birkhoff_radius_examples() {
        let cfg = settings();
        let t = DenseMatrix::real_diag(&[1.0, 0.0]).unwrap();
        let s = real(&[&[0.0, 1.0], &[0.0, -1.0]]);
        let v = birkhoff_radius_orth(&t, &s, 1e-6, &cfg).unwrap();
        assert!(v.holds(), "{v:?}");
        let v = birkhoff_radius_orth(&s, &t, 1e-6, &cfg).unwrap();
        assert!(v.fails());
        assert!(birkhoff_witness_rechecks(&s, &t, &v, &cfg).unwrap());

        let s = real(&[&[0.0, -1.0], &[0.0, 1.0]]);
        let t = real(&[&[0.0, 1.0], &[0.0, 1.0]]);
        let v = birkhoff_radius_orth(&s, &t, 1e-6, &cfg).unwrap();
        assert!(v.fails());
        assert!(birkhoff_witness_rechecks(&s, &t, &v, &cfg).unwrap());
    }

    #[test]
    fn birkhoff_zero_operators() {
        let cfg = settings();
        let t = real(&[&[1.0, 2.0], &[0.5, -1.0]]);
        let z = DenseMatrix::zeros(2);
        assert!(birkhoff_radius_orth(&t, &z, 1e-6, &cfg).unwrap().holds());
        assert!(birkhoff_radius_orth(&z, &t, 1e-6, &cfg).unwrap().holds());
        assert!(birkhoff_radius_orth(&z, &z, 1e-6, &cfg).unwrap().holds());
    }

    #[test]
    fn pythagorean_examples() {
        let cfg = settings();
        let t = real(&[&[1.0, 2.0], &[0.5, -1.0]]);
        assert!(pythagorean_radius_orth(&t, &DenseMatrix::zeros(2), 1e-9, &cfg)
            .unwrap()
            .holds());
        let i2 = DenseMatrix::identity(2);
        let v = pythagorean_radius_orth(&i2, &i2, 1e-9, &cfg).unwrap();
        assert!(v.fails());
        assert!((v.margin - 2.0).abs() < 1e-12);
    }

    #[test]
    fn pythagorean_hermitian_plus_skew() {
        // T = diag(1,0), S = [[0,1],[-1,0]]: ω(T)=ω(S)=1 and T+S = [[1,1],[-1,0]].
        // ω(T+S)² from the brute-force oracle decides the outcome.
        let cfg = settings();
        let t = DenseMatrix::real_diag(&[1.0, 0.0]).unwrap();
        let s = real(&[&[0.0, 1.0], &[-1.0, 0.0]]);
        let oracle = crate::radius::radius_oracle_2x2(&(&t + &s), 2000, 2000).unwrap();
        let v = pythagorean_radius_orth(&t, &s, 1e-6, &cfg).unwrap();
        assert!((v.margin - (oracle * oracle - 2.0)).abs() < 1e-4);
        // q_T is real, q_S imaginary: ω(T+S)² = max(q_T² + |q_S|²) < 2 because
        // e₁ (the only maximizer of q_T) has q_S = 0.
        assert!(v.fails());
    }

    #[test]
    fn certifier_examples() {
        let cfg = settings();
        let t = DenseMatrix::real_diag(&[1.0, 0.0]).unwrap();
        let s = real(&[&[0.0, 1.0], &[0.0, -1.0]]);
        assert!(certify_orth_attainment(&t, &s, 360, 1e-6, &cfg).unwrap().holds());

        let i2 = DenseMatrix::identity(2);
        let v = certify_orth_attainment(&i2, &i2, 360, 1e-6, &cfg).unwrap();
        assert!(v.fails());
        let Some(Witness::Theta { theta, value, .. }) = v.witness else {
            panic!()
        };
        assert!((theta - core::f64::consts::PI).abs() < 1e-12);
        assert!((value + 1.0).abs() < 1e-12);

        let t = DenseMatrix::real_diag(&[1.0, -1.0]).unwrap();
        let s = real(&[&[1.0, 1.0], &[0.0, 1.0]]);
        assert!(certify_orth_attainment(&t, &s, 360, 1e-6, &cfg).unwrap().holds());
    }

    #[test]
    fn certifier_searches_degenerate_eigenspaces() {
        // W(S) is the disk of radius 2 around 1, so some x has ⟨Sx,x⟩ = 0,
        // but neither basis vector does.
        let cfg = settings();
        let i2 = DenseMatrix::identity(2);
        let s = real(&[&[1.0, 4.0], &[0.0, 1.0]]);
        assert!(birkhoff_radius_orth(&i2, &s, 1e-6, &cfg).unwrap().holds());
        let v = certify_orth_attainment(&i2, &s, 360, 1e-6, &cfg).unwrap();
        assert!(v.holds(), "{v:?}");
        // shrinking the disk so it misses 0 makes both fail
        let s = real(&[&[1.0, 1.0], &[0.0, 1.0]]);
        assert!(birkhoff_radius_orth(&i2, &s, 1e-6, &cfg).unwrap().fails());
        assert!(certify_orth_attainment(&i2, &s, 360, 1e-6, &cfg).unwrap().fails());
    }

    #[test]
    fn certifier_sees_every_peak() {
        // T attains ω at e₁ and e₂ with ⟨Te,e⟩ = 1 and i; S picks values
        // whose products with conj point in opposite directions.
        let cfg = settings();
        let t = DenseMatrix::diag(&[Complex64::new(1.0, 0.0), Complex64::new(0.0, 1.0)]).unwrap();
        let s = DenseMatrix::diag(&[Complex64::new(1.0, 0.0), Complex64::new(0.0, -1.0)]).unwrap();
        // p₁ = 1·1 = 1, p₂ = i·conj(−i) = i·i = −1
        assert!(birkhoff_radius_orth(&t, &s, 1e-6, &cfg).unwrap().holds());
        assert!(certify_orth_attainment(&t, &s, 360, 1e-6, &cfg).unwrap().holds());
    }

    #[test]
    fn attainment_set_examples() {
        let cfg = settings();
        let a = DenseMatrix::real_diag(&[1.0, 0.0]).unwrap();
        let b = DenseMatrix::real_diag(&[0.0, 1.0]).unwrap();
        let c = DenseMatrix::real_diag(&[2.0, 0.0]).unwrap();
        assert!(attainment_sets_equal(&a, &a, 1e-8, &cfg).unwrap().holds());
        let v = attainment_sets_equal(&a, &b, 1e-8, &cfg).unwrap();
        assert!(v.fails());
        let Some(Witness::Distance { distance, .. }) = v.witness else {
            panic!()
        };
        assert!((distance - 1.0).abs() < 1e-12);
        assert!(attainment_sets_equal(&a, &c, 1e-8, &cfg).unwrap().holds());
    }

    #[test]
    fn dimension_mismatch_is_an_error() {
        let cfg = settings();
        let a = DenseMatrix::identity(2);
        let b = DenseMatrix::identity(3);
        assert!(usual_orthogonal(&a, &b, 1e-9).is_err());
        assert!(birkhoff_norm_orth(&a, &b, 1e-9, &cfg).is_err());
        assert!(birkhoff_radius_orth(&a, &b, 1e-9, &cfg).is_err());
        assert!(pythagorean_radius_orth(&a, &b, 1e-9, &cfg).is_err());
        assert!(certify_orth_attainment(&a, &b, 8, 1e-6, &cfg).is_err());
        assert!(attainment_sets_equal(&a, &b, 1e-6, &cfg).is_err());
    }

    #[test]
    fn reconcile_rules() {
        let holds = Verdict {
            status: Status::Holds,
            witness: None,
            margin: 0.0,
            tolerance: 1e-6,
        };
        let fails = Verdict {
            status: Status::Fails,
            ..holds.clone()
        };
        assert_eq!(holds.reconcile(&holds).status, Status::Holds);
        assert_eq!(holds.reconcile(&fails).status, Status::Inconclusive);
        assert_eq!(fails.reconcile(&fails).status, Status::Fails);
        let _ = vec![0u8];
    }

    #[test]
    fn status_band() {
        assert_eq!(Status::from_deficit(0.0, 1e-6), Status::Holds);
        assert_eq!(Status::from_deficit(1e-6, 1e-6), Status::Holds);
        assert_eq!(Status::from_deficit(1.5e-6, 1e-6), Status::Inconclusive);
        assert_eq!(Status::from_deficit(3e-6, 1e-6), Status::Fails);
    }
}
