//! Numerical radius and numerical range.
//!
//! `ω(T)` is computed through the support function of `W(T)`: for
//! `H_θ = ½(e^{iθ}T + e^{−iθ}T*)` we have `λ_max(H_θ) = max_{x} Re(e^{iθ}⟨Tx,x⟩)`
//! and therefore `ω(T) = max_θ λ_max(H_θ)`. The maximization over θ runs on a
//! uniform grid followed by golden-section refinement, and the top
//! eigenvector at the optimal θ certifies the value.

use alloc::vec::Vec;
use core::f64::consts::{FRAC_PI_2, TAU};

use num_complex::Complex64;
#[allow(unused_imports)] // shadowed by inherent f64 methods when std is linked
use num_traits::Float;

use crate::linalg::{ensure_dim, hermitian_eigs, lambda_max, quad, DenseMatrix, UnitVector};
use crate::optimize::{golden_section_max, periodic_max_pruned};
use crate::{Error, Result, Settings};

/// Coarse θ grid used to prune cells of the full grid.
const COARSE_GRID: usize = 64;

/// `ω(T)` together with the angle and unit vector attaining it.
#[derive(Debug, Clone, PartialEq)]
pub struct RadiusCertificate {
    pub omega: f64,
    /// In `[0, 2π)`.
    pub theta_star: f64,
    pub x_star: UnitVector,
    /// `|ω − |⟨T x*, x*⟩||`.
    pub residual: f64,
}

/// Near-maximizers of `|⟨Tx,x⟩|`, deduplicated modulo global phase.
#[derive(Debug, Clone, PartialEq)]
pub struct AttainmentSample {
    pub vectors: Vec<UnitVector>,
    /// `values[i] = ⟨T vectors[i], vectors[i]⟩`.
    pub values: Vec<Complex64>,
    pub slack: f64,
    /// `ω(T)` the sample was measured against.
    pub omega: f64,
}

/// `H_θ = ½(e^{iθ}T + e^{−iθ}T*)`, exactly Hermitian.
pub fn rotated_hermitian_part(t: &DenseMatrix, theta: f64) -> DenseMatrix {
    let n = t.dim();
    let rot = Complex64::from_polar(1.0, theta);
    let mut entries = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let z = if i == j {
                Complex64::new((rot * t.get(i, i)).re, 0.0)
            } else if i < j {
                (rot * t.get(i, j) + (rot * t.get(j, i)).conj()) * 0.5
            } else {
                ((rot * t.get(j, i) + (rot * t.get(i, j)).conj()) * 0.5).conj()
            };
            entries.push(z);
        }
    }
    DenseMatrix::from_row_major(n, entries).expect("finite input gives finite output")
}

/// Grid + golden-section solver for `ω(T)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadiusSolver {
    pub theta_grid: usize,
    pub theta_tol: f64,
}

impl Default for RadiusSolver {
    fn default() -> Self {
        Self::from_settings(&Settings::default())
    }
}

impl RadiusSolver {
    pub fn from_settings(settings: &Settings) -> Self {
        Self {
            theta_grid: settings.theta_grid,
            theta_tol: settings.theta_tol,
        }
    }

    /// Returns `(ω, θ*)` without computing the attaining vector.
    pub fn omega_and_angle(&self, t: &DenseMatrix) -> Result<(f64, f64)> {
        if t.is_zero() {
            return Ok((0.0, 0.0));
        }
        // λ_max(H_θ) is a support function, so on a cell of width w it is
        // at most max(endpoints)/cos(w/2). The slack covers eigenvalue error.
        let slack = 1e-12 * t.frobenius_norm();
        let upper = |lo: f64, hi: f64, width: f64| {
            let m = lo.max(hi);
            if m > 0.0 {
                m / (0.5 * width).cos() + slack
            } else {
                m + slack
            }
        };
        let (theta, value) = periodic_max_pruned(
            |theta| lambda_max(&rotated_hermitian_part(t, theta)),
            TAU,
            self.theta_grid,
            self.theta_tol,
            COARSE_GRID,
            upper,
        )?;
        Ok((value.max(0.0), theta))
    }

    pub fn omega(&self, t: &DenseMatrix) -> Result<f64> {
        Ok(self.omega_and_angle(t)?.0)
    }

    pub fn certificate(&self, t: &DenseMatrix) -> Result<RadiusCertificate> {
        if t.is_zero() {
            return Ok(RadiusCertificate {
                omega: 0.0,
                theta_star: 0.0,
                x_star: UnitVector::basis(t.dim(), 0),
                residual: 0.0,
            });
        }
        let (omega, theta_star) = self.omega_and_angle(t)?;
        let eig = hermitian_eigs(&rotated_hermitian_part(t, theta_star))?;
        let x_star = eig.eigenvectors[0].clone();
        let residual = (omega - quad(t, x_star.entries()).norm()).abs();
        Ok(RadiusCertificate {
            omega,
            theta_star,
            x_star,
            residual,
        })
    }
}

/// `ω(T)` with the default 1024-point θ grid and 1e−10 refinement.
pub fn numerical_radius(t: &DenseMatrix) -> Result<RadiusCertificate> {
    RadiusSolver::default().certificate(t)
}

/// `½|a+d| + ½√(|a−d|² + |b|²)` for `[[a, b], [0, d]]`.
///
/// `W` of this matrix is an ellipse with centre `(a+d)/2` and major
/// semi-axis `½√(|a−d|² + |b|²)`, so the formula bounds `ω` from above. It
/// equals `ω` when the major axis points at the origin, which holds when
/// `a·conj(d)` is real. For `diag(1, i)` it gives `√2` while `ω = 1`.
pub fn radius_2x2_triangular(a: Complex64, b: Complex64, d: Complex64) -> f64 {
    0.5 * (a + d).norm() + 0.5 * ((a - d).norm_sqr() + b.norm_sqr()).sqrt()
}

/// Support points of `W(T)`: for each θ on a uniform grid of `n_theta`
/// points, `⟨T x_θ, x_θ⟩` with `x_θ` a top eigenvector of `H_θ`.
pub fn numerical_range_boundary(t: &DenseMatrix, n_theta: usize) -> Result<Vec<Complex64>> {
    Ok(boundary_with_angles(t, n_theta)?.into_iter().map(|(_, z)| z).collect())
}

/// Like [`numerical_range_boundary`], paired with the grid angle of each point.
pub fn boundary_with_angles(t: &DenseMatrix, n_theta: usize) -> Result<Vec<(f64, Complex64)>> {
    if n_theta < 3 {
        return Err(Error::InvalidArgument("n_theta must be at least 3"));
    }
    (0..n_theta)
        .map(|k| {
            let theta = TAU * k as f64 / n_theta as f64;
            let eig = hermitian_eigs(&rotated_hermitian_part(t, theta))?;
            Ok((theta, quad(t, eig.eigenvectors[0].entries())))
        })
        .collect()
}

/// Brute-force `ω` of a 2×2 matrix over `x = (cos t, e^{is} sin t)`,
/// `t ∈ [0, π/2]` (`n_t` points, endpoints included) and `s ∈ [0, 2π)` (`n_s`
/// points). The global phase of `x` does not change `|⟨Tx,x⟩|`.
pub fn radius_oracle_2x2(t: &DenseMatrix, n_t: usize, n_s: usize) -> Result<f64> {
    if t.dim() != 2 {
        return Err(Error::InvalidArgument("the 2x2 oracle needs a 2x2 matrix"));
    }
    if n_t < 2 || n_s < 1 {
        return Err(Error::InvalidArgument("oracle grid too small"));
    }
    let phases: Vec<Complex64> = (0..n_s)
        .map(|k| Complex64::from_polar(1.0, TAU * k as f64 / n_s as f64))
        .collect();
    let (t00, t01, t10, t11) = (t.get(0, 0), t.get(0, 1), t.get(1, 0), t.get(1, 1));
    let mut best = 0.0f64;
    for i in 0..n_t {
        let angle = FRAC_PI_2 * i as f64 / (n_t - 1) as f64;
        let (sn, cs) = angle.sin_cos();
        for &e in &phases {
            // x = (cs, e·sn); ⟨Tx,x⟩ = Σᵢⱼ T_ij x_j conj(x_i)
            let x0 = Complex64::new(cs, 0.0);
            let x1 = e * sn;
            let tx0 = t00 * x0 + t01 * x1;
            let tx1 = t10 * x0 + t11 * x1;
            let q = tx0 * x0.conj() + tx1 * x1.conj();
            best = best.max(q.norm_sqr());
        }
    }
    Ok(best.sqrt())
}

/// A local maximum of `θ ↦ λ_max(H_θ)` within slack of `ω(T)`.
#[derive(Debug, Clone, PartialEq)]
pub struct AttainmentPeak {
    pub theta: f64,
    pub value: f64,
    /// Orthonormal eigenvectors of `H_θ` with eigenvalue within slack of
    /// the top one. Every unit vector in their span attains `value`.
    pub basis: Vec<UnitVector>,
}

/// Peaks refined by golden section; further candidates keep their grid angle.
const MAX_REFINED_PEAKS: usize = 32;

fn angle_gap(a: f64, b: f64) -> f64 {
    let d = (a - b).abs() % TAU;
    d.min(TAU - d)
}

fn wrap_angle(a: f64) -> f64 {
    let w = a % TAU;
    if w < 0.0 {
        w + TAU
    } else {
        w
    }
}

/// All angles at which `T` attains `ω(T)` up to `slack`, best first.
///
/// The θ grid is scanned in full; every discrete local maximum that could
/// belong to a peak within `slack` of `ω` is refined and kept when its
/// refined value clears `ω − slack`. The certificate angle is always the
/// first peak. On flat stretches (e.g. a disk-shaped numerical range) every
/// grid angle is a peak.
pub fn attainment_peaks(t: &DenseMatrix, slack: f64, settings: &Settings) -> Result<Vec<AttainmentPeak>> {
    if slack.is_nan() || slack <= 0.0 {
        return Err(Error::InvalidArgument("slack must be positive"));
    }
    let solver = RadiusSolver::from_settings(settings);
    let (omega, theta_star) = solver.omega_and_angle(t)?;
    let grid = solver.theta_grid;
    let step = TAU / grid as f64;
    let h = |theta: f64| lambda_max(&rotated_hermitian_part(t, theta));
    let mut values = Vec::with_capacity(grid);
    for k in 0..grid {
        values.push(h(k as f64 * step)?);
    }
    let noise = 1e-12 * t.frobenius_norm();
    let floor = (omega - slack) * step.cos() - slack;
    let mut candidates: Vec<usize> = (0..grid)
        .filter(|&k| {
            let v = values[k];
            v >= floor && v + noise >= values[(k + grid - 1) % grid] && v + noise >= values[(k + 1) % grid]
        })
        .collect();
    candidates.sort_by(|&a, &b| values[b].total_cmp(&values[a]).then(a.cmp(&b)));

    let mut angles: Vec<(f64, f64)> = alloc::vec![(theta_star, omega)];
    for (rank, &k) in candidates.iter().enumerate() {
        let node = k as f64 * step;
        let (theta, value) = if rank < MAX_REFINED_PEAKS {
            let (x, v) = golden_section_max(h, node - step, node + step, solver.theta_tol)?;
            if v >= values[k] {
                (wrap_angle(x), v)
            } else {
                (node, values[k])
            }
        } else {
            (node, values[k])
        };
        if value < omega - slack {
            continue;
        }
        if angles.iter().any(|&(a, _)| angle_gap(a, theta) < 0.5 * step) {
            continue;
        }
        angles.push((theta, value));
    }

    let mut peaks = Vec::with_capacity(angles.len());
    for (theta, value) in angles {
        let eig = hermitian_eigs(&rotated_hermitian_part(t, theta))?;
        let top = eig.eigenvalues[0];
        let basis = eig
            .eigenvalues
            .iter()
            .zip(eig.eigenvectors)
            .take_while(|(lam, _)| **lam >= top - slack)
            .map(|(_, v)| v)
            .collect();
        peaks.push(AttainmentPeak { theta, value, basis });
    }
    Ok(peaks)
}

/// Collects unit vectors attaining `ω(T)` up to `slack`.
pub fn attainment_sample(t: &DenseMatrix, slack: f64, budget: usize) -> Result<AttainmentSample> {
    attainment_sample_with(t, slack, budget, &Settings::default())
}

/// Candidates are the certificate's `x*`, the eigenspace bases of every
/// [`attainment_peaks`] entry, and for multi-dimensional eigenspaces the
/// combinations `(u_a + i^k u_b)/√2`. A candidate is kept when
/// `|⟨Tx,x⟩| ≥ ω − slack` and it is not within `settings.dedup_gap` of an
/// already kept vector modulo phase.
pub fn attainment_sample_with(
    t: &DenseMatrix,
    slack: f64,
    budget: usize,
    settings: &Settings,
) -> Result<AttainmentSample> {
    if slack.is_nan() || slack <= 0.0 {
        return Err(Error::InvalidArgument("slack must be positive"));
    }
    if budget == 0 {
        return Err(Error::InvalidArgument("budget must be positive"));
    }
    let solver = RadiusSolver::from_settings(settings);
    let cert = solver.certificate(t)?;
    let omega = cert.omega;
    let mut sample = AttainmentSample {
        vectors: Vec::new(),
        values: Vec::new(),
        slack,
        omega,
    };
    let offer = |x: UnitVector, sample: &mut AttainmentSample| {
        if sample.vectors.len() >= budget {
            return;
        }
        let q = quad(t, x.entries());
        if q.norm() < omega - slack {
            return;
        }
        let duplicate = sample
            .vectors
            .iter()
            .any(|y| y.inner(&x).norm() > 1.0 - settings.dedup_gap);
        if !duplicate {
            sample.vectors.push(x);
            sample.values.push(q);
        }
    };

    offer(cert.x_star, &mut sample);
    let peaks = attainment_peaks(t, slack, settings)?;
    for peak in &peaks {
        for v in &peak.basis {
            offer(v.clone(), &mut sample);
        }
    }
    let phases = [
        Complex64::new(1.0, 0.0),
        Complex64::new(0.0, 1.0),
        Complex64::new(-1.0, 0.0),
        Complex64::new(0.0, -1.0),
    ];
    for peak in &peaks {
        for a in 0..peak.basis.len() {
            for b in a + 1..peak.basis.len() {
                for phase in phases {
                    let combo = peak.basis[a]
                        .entries()
                        .iter()
                        .zip(peak.basis[b].entries())
                        .map(|(x, y)| x + phase * y)
                        .collect();
                    offer(UnitVector::new(combo)?, &mut sample);
                }
            }
        }
    }
    Ok(sample)
}

/// Checks `ω(T) ≤ ‖T‖ ≤ 2ω(T)` with absolute slack `tol`; returns the
/// signed margins `(‖T‖ − ω, 2ω − ‖T‖)`.
pub fn sandwich_margins(omega: f64, norm: f64) -> (f64, f64) {
    (norm - omega, 2.0 * omega - norm)
}

pub(crate) fn same_dims(t: &DenseMatrix, s: &DenseMatrix) -> Result<()> {
    ensure_dim(t.dim(), s.dim())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::operator_norm;
    use alloc::vec;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn real(rows: &[&[f64]]) -> DenseMatrix {
        DenseMatrix::from_real_rows(rows).unwrap()
    }

    #[test]
    fn pruned_scan_matches_full_scan() {
        use crate::optimize::periodic_max;
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let mut cases = vec![
            DenseMatrix::identity(3),
            real(&[&[0.0, 1.0], &[0.0, 0.0]]),
            DenseMatrix::real_diag(&[1.0, -1.0, 0.5]).unwrap(),
        ];
        for n in 2..=6 {
            for _ in 0..20 {
                let entries = (0..n * n)
                    .map(|_| c(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)))
                    .collect();
                cases.push(DenseMatrix::from_row_major(n, entries).unwrap());
            }
        }
        let solver = RadiusSolver::default();
        for t in &cases {
            let full = periodic_max(
                |theta| lambda_max(&rotated_hermitian_part(t, theta)),
                TAU,
                solver.theta_grid,
                solver.theta_tol,
            )
            .unwrap();
            let (omega, _) = solver.omega_and_angle(t).unwrap();
            let full = full.1.max(0.0);
            let cell = TAU / solver.theta_grid as f64;
            assert!(omega >= full, "{omega} < {full}");
            assert!(omega <= full / (0.5 * cell).cos() + 1e-12);
        }
    }

    #[test]
    fn nearly_equal_peaks_are_both_refined() {
        // the higher eigenvalue sits half a cell off the grid, the lower
        // one on a node, so the best node belongs to the lower peak
        let h = TAU / RadiusSolver::default().theta_grid as f64;
        let t = DenseMatrix::diag(&[
            Complex64::from_polar(1.0, 0.5 * h),
            Complex64::from_polar(1.0 - 1e-7, core::f64::consts::PI),
        ])
        .unwrap();
        let (omega, theta) = RadiusSolver::default().omega_and_angle(&t).unwrap();
        assert!((omega - 1.0).abs() < 1e-12, "{omega}");
        assert!((theta - (TAU - 0.5 * h)).abs() < 1e-6, "{theta}");
    }

    const GOLDEN_OMEGA: f64 = 1.207_106_781_186_547_5; // (1+√2)/2

    #[test]
    fn rotated_part_examples() {
        let i2 = DenseMatrix::identity(2);
        assert_eq!(rotated_hermitian_part(&i2, 0.0), i2);

        let n = real(&[&[0.0, 1.0], &[0.0, 0.0]]);
        assert_eq!(rotated_hermitian_part(&n, 0.0), real(&[&[0.0, 0.5], &[0.5, 0.0]]));

        let t = DenseMatrix::diag(&[c(0.0, 1.0), c(0.0, 0.0)]).unwrap();
        let h = rotated_hermitian_part(&t, FRAC_PI_2);
        assert!((h.get(0, 0) - c(-1.0, 0.0)).norm() < 1e-15);
        assert_eq!(h.get(1, 1), c(0.0, 0.0));
        assert_eq!(h.hermitian_deviation(), 0.0);
    }

    #[test]
    fn radius_examples() {
        let s = real(&[&[0.0, -1.0], &[0.0, 1.0]]);
        let cert = numerical_radius(&s).unwrap();
        assert!((cert.omega - GOLDEN_OMEGA).abs() < 1e-10);
        assert!(cert.residual < 1e-9);
        assert!((0.0..TAU).contains(&cert.theta_star));

        let cert = numerical_radius(&DenseMatrix::identity(3)).unwrap();
        assert!((cert.omega - 1.0).abs() < 1e-12);

        let cert = numerical_radius(&real(&[&[0.0, 1.0], &[0.0, 0.0]])).unwrap();
        assert!((cert.omega - 0.5).abs() < 1e-12);
    }

    #[test]
    fn zero_matrix_has_canonical_certificate() {
        let cert = numerical_radius(&DenseMatrix::zeros(3)).unwrap();
        assert_eq!(cert.omega, 0.0);
        assert_eq!(cert.theta_star, 0.0);
        assert_eq!(cert.x_star, UnitVector::basis(3, 0));
    }

    #[test]
    fn closed_form_values() {
        let z = c(0.0, 0.0);
        let one = c(1.0, 0.0);
        assert!((radius_2x2_triangular(z, -one, one) - GOLDEN_OMEGA).abs() < 1e-15);
        assert!((radius_2x2_triangular(z, one, -one) - GOLDEN_OMEGA).abs() < 1e-15);
        assert!((radius_2x2_triangular(one, one, -one) - 5f64.sqrt() / 2.0).abs() < 1e-15);
    }

    #[test]
    fn oracle_examples() {
        let s = real(&[&[0.0, -1.0], &[0.0, 1.0]]);
        assert!((radius_oracle_2x2(&s, 2000, 2000).unwrap() - GOLDEN_OMEGA).abs() < 1e-4);
        let i2 = DenseMatrix::identity(2);
        assert!((radius_oracle_2x2(&i2, 50, 50).unwrap() - 1.0).abs() < 1e-12);
        let t = real(&[&[1.0, 1.0], &[0.0, -1.0]]);
        assert!((radius_oracle_2x2(&t, 2000, 2000).unwrap() - 5f64.sqrt() / 2.0).abs() < 1e-4);
        assert!(radius_oracle_2x2(&DenseMatrix::identity(3), 10, 10).is_err());
    }

    #[test]
    fn boundary_examples() {
        for z in numerical_range_boundary(&DenseMatrix::identity(2), 7).unwrap() {
            assert_eq!(z, c(1.0, 0.0));
        }
        for z in numerical_range_boundary(&DenseMatrix::real_diag(&[1.0, 0.0]).unwrap(), 33).unwrap() {
            assert!(z.im.abs() < 1e-15 && (-1e-15..=1.0 + 1e-15).contains(&z.re));
        }
        let n = real(&[&[0.0, 1.0], &[0.0, 0.0]]);
        for z in numerical_range_boundary(&n, 4).unwrap() {
            assert!((z.norm() - 0.5).abs() < 1e-12);
        }
        assert!(numerical_range_boundary(&n, 2).is_err());
    }

    #[test]
    fn attainment_examples() {
        let t = DenseMatrix::real_diag(&[1.0, 0.0]).unwrap();
        let sample = attainment_sample(&t, 1e-8, 16).unwrap();
        assert_eq!(sample.vectors.len(), 1);
        assert!(sample.vectors[0].inner(&UnitVector::basis(2, 0)).norm() > 1.0 - 1e-12);

        let sample = attainment_sample(&DenseMatrix::identity(3), 1e-8, 4).unwrap();
        assert!(!sample.vectors.is_empty() && sample.vectors.len() <= 4);
        for x in &sample.vectors {
            assert!((x.inner(x).norm() - 1.0).abs() < 1e-14);
        }

        let t = DenseMatrix::real_diag(&[1.0, -1.0]).unwrap();
        let sample = attainment_sample(&t, 1e-8, 16).unwrap();
        let near = |k: usize| {
            let e = UnitVector::basis(2, k);
            sample.vectors.iter().any(|x| x.inner(&e).norm() > 1.0 - 1e-9)
        };
        assert!(near(0) && near(1));
        for q in &sample.values {
            assert!(q.norm() >= 1.0 - 1e-8);
        }
    }

    #[test]
    fn peaks_of_structured_matrices() {
        let cfg = Settings::default();
        let t = DenseMatrix::real_diag(&[1.0, -1.0]).unwrap();
        let peaks = attainment_peaks(&t, 1e-8, &cfg).unwrap();
        assert_eq!(peaks.len(), 2);
        let mut angles: Vec<f64> = peaks.iter().map(|p| p.theta).collect();
        angles.sort_by(f64::total_cmp);
        assert!(angles[0].abs() < 1e-7);
        assert!((angles[1] - core::f64::consts::PI).abs() < 1e-7, "{angles:?}");

        let peaks = attainment_peaks(&DenseMatrix::identity(3), 1e-8, &cfg).unwrap();
        assert_eq!(peaks.len(), 1);
        assert_eq!(peaks[0].basis.len(), 3);
        assert!((peaks[0].value - 1.0).abs() < 1e-12);

        // a normal matrix with two equal-modulus eigenvalues and a smaller one
        let t = DenseMatrix::diag(&[c(1.0, 0.0), c(0.0, 1.0), c(0.3, 0.0)]).unwrap();
        let peaks = attainment_peaks(&t, 1e-8, &cfg).unwrap();
        assert_eq!(peaks.len(), 2);
        for p in &peaks {
            assert_eq!(p.basis.len(), 1);
            assert!((p.value - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn attainment_rejects_bad_arguments() {
        let t = DenseMatrix::identity(2);
        assert!(attainment_sample(&t, 0.0, 4).is_err());
        assert!(attainment_sample(&t, 1e-8, 0).is_err());
    }

    #[test]
    fn nilpotent_disk_sample_spans_the_circle() {
        let n = real(&[&[0.0, 1.0], &[0.0, 0.0]]);
        let sample = attainment_sample(&n, 1e-9, 2048).unwrap();
        // every grid angle attains; deduplication keeps them distinct
        assert!(sample.vectors.len() > 500);
        let q0 = sample.values[0];
        assert!((q0.norm() - 0.5).abs() < 1e-12);
    }

    #[test]
    fn sandwich_on_a_fixed_matrix() {
        let t = DenseMatrix::from_rows(&[
            vec![c(1.0, 2.0), c(-0.5, 0.0), c(0.0, 1.0)],
            vec![c(0.0, 0.0), c(2.0, -1.0), c(1.0, 1.0)],
            vec![c(0.3, 0.0), c(0.0, 0.0), c(-1.0, 0.0)],
        ])
        .unwrap();
        let omega = numerical_radius(&t).unwrap().omega;
        let (lo, hi) = sandwich_margins(omega, operator_norm(&t));
        assert!(lo >= -1e-9 && hi >= -1e-9);
    }
}
