//! Derivative-free and first-order searches used by the deciders: grid +
//! golden-section maximization on an interval, Nelder–Mead on `ℝᵈ`, and
//! projected ascent on the unit sphere of `ℂⁿ`.

use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;
#[allow(unused_imports)] // shadowed by inherent f64 methods when std is linked
use num_traits::Float;

use crate::linalg::{quad, DenseMatrix};

const INV_PHI: f64 = 0.618_033_988_749_894_8;

/// Maximizes `f` on `[lo, hi]` by golden-section search until the bracket
/// is narrower than `tol`. Returns the best point seen and its value.
pub fn golden_section_max<E>(
    mut f: impl FnMut(f64) -> Result<f64, E>,
    lo: f64,
    hi: f64,
    tol: f64,
) -> Result<(f64, f64), E> {
    let (mut a, mut b) = (lo, hi);
    let mut c = b - INV_PHI * (b - a);
    let mut d = a + INV_PHI * (b - a);
    let mut fc = f(c)?;
    let mut fd = f(d)?;
    let mut best = if fc >= fd { (c, fc) } else { (d, fd) };
    while (b - a).abs() > tol {
        if fc >= fd {
            b = d;
            d = c;
            fd = fc;
            c = b - INV_PHI * (b - a);
            fc = f(c)?;
            if fc > best.1 {
                best = (c, fc);
            }
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + INV_PHI * (b - a);
            fd = f(d)?;
            if fd > best.1 {
                best = (d, fd);
            }
        }
    }
    Ok(best)
}

/// Maximizes a `period`-periodic function: uniform grid of `grid` points,
/// then golden-section refinement on the two cells around the best node.
/// Ties on the grid resolve to the lowest index.
pub fn periodic_max<E>(
    mut f: impl FnMut(f64) -> Result<f64, E>,
    period: f64,
    grid: usize,
    tol: f64,
) -> Result<(f64, f64), E> {
    let h = period / grid as f64;
    let mut best = (0.0, f64::NEG_INFINITY);
    for k in 0..grid {
        let x = k as f64 * h;
        let v = f(x)?;
        if v > best.1 {
            best = (x, v);
        }
    }
    refine_periodic(f, best, h, period, tol)
}

/// Distinct peaks refined by [`periodic_max_pruned`].
const MAX_REFINED_NODES: usize = 16;

/// Like [`periodic_max`], but grid nodes inside a cell are only evaluated
/// when `upper(f(left), f(right), width)` could beat the best node seen so
/// far, and the best node of up to `MAX_REFINED_NODES` separate peaks with
/// `upper(v, v, h) ≥ best` is refined rather than only the overall best
/// node. `upper` must bound `f` on the whole cell.
///
/// The grid is first sampled every `grid / coarse` nodes and surviving
/// cells are bisected. Falls back to the full scan when `coarse` does not
/// divide `grid`.
pub fn periodic_max_pruned<E>(
    mut f: impl FnMut(f64) -> Result<f64, E>,
    period: f64,
    grid: usize,
    tol: f64,
    coarse: usize,
    upper: impl Fn(f64, f64, f64) -> f64,
) -> Result<(f64, f64), E> {
    if coarse == 0 || grid % coarse != 0 || grid / coarse < 2 {
        return periodic_max(f, period, grid, tol);
    }
    let h = period / grid as f64;
    let stride = grid / coarse;
    let mut values: Vec<Option<f64>> = vec![None; grid];
    let mut top = f64::NEG_INFINITY;
    for k in (0..grid).step_by(stride) {
        let v = f(k as f64 * h)?;
        values[k] = Some(v);
        top = top.max(v);
    }
    let mut cells: Vec<(usize, usize)> = (0..coarse).map(|c| (c * stride, stride)).collect();
    while let Some((start, width)) = cells.pop() {
        if width < 2 {
            continue;
        }
        let lo = values[start].expect("cell ends are evaluated");
        let hi = values[(start + width) % grid].expect("cell ends are evaluated");
        if upper(lo, hi, width as f64 * h) < top {
            continue;
        }
        let mid = start + width / 2;
        let v = f(mid as f64 * h)?;
        values[mid] = Some(v);
        top = top.max(v);
        cells.push((start, mid - start));
        cells.push((mid, start + width - mid));
    }
    // Two peaks of nearly equal height may swap order after refinement, so
    // every node whose neighbourhood could still beat `top` is a candidate.
    // Candidates next to an already refined node belong to the same peak.
    let mut candidates: Vec<(usize, f64)> = values
        .iter()
        .enumerate()
        .filter_map(|(k, v)| v.filter(|&v| upper(v, v, h) >= top).map(|v| (k, v)))
        .collect();
    candidates.sort_by(|a, b| b.1.total_cmp(&a.1).then(a.0.cmp(&b.0)));
    let mut refined: Vec<usize> = Vec::new();
    let mut best = (0.0, f64::NEG_INFINITY);
    for (k, v) in candidates {
        if refined.len() >= MAX_REFINED_NODES {
            break;
        }
        let near = |&r: &usize| {
            let d = k.abs_diff(r);
            d.min(grid - d) <= 2
        };
        if refined.iter().any(near) {
            continue;
        }
        refined.push(k);
        let candidate = refine_periodic(&mut f, (k as f64 * h, v), h, period, tol)?;
        if candidate.1 > best.1 {
            best = candidate;
        }
    }
    Ok(best)
}

fn refine_periodic<E>(
    mut f: impl FnMut(f64) -> Result<f64, E>,
    mut best: (f64, f64),
    h: f64,
    period: f64,
    tol: f64,
) -> Result<(f64, f64), E> {
    let (x, v) = golden_section_max(&mut f, best.0 - h, best.0 + h, tol)?;
    if v > best.1 {
        let wrapped = x % period;
        best = (if wrapped < 0.0 { wrapped + period } else { wrapped }, v);
    }
    Ok(best)
}

/// Outcome of a Nelder–Mead run.
#[derive(Debug, Clone)]
pub struct SimplexResult {
    pub x: Vec<f64>,
    pub value: f64,
    pub evaluations: usize,
    pub converged: bool,
}

/// Nelder–Mead minimization with standard coefficients (1, 2, ½, ½).
///
/// Stops when the simplex diameter falls below `xtol` or after `max_evals`
/// objective evaluations.
pub fn nelder_mead<E>(
    mut f: impl FnMut(&[f64]) -> Result<f64, E>,
    x0: &[f64],
    step: f64,
    xtol: f64,
    max_evals: usize,
) -> Result<SimplexResult, E> {
    let n = x0.len();
    let mut simplex: Vec<Vec<f64>> = Vec::with_capacity(n + 1);
    simplex.push(x0.to_vec());
    for i in 0..n {
        let mut v = x0.to_vec();
        v[i] += step;
        simplex.push(v);
    }
    let mut values = Vec::with_capacity(n + 1);
    for v in &simplex {
        values.push(f(v)?);
    }
    let mut evals = n + 1;
    let mut converged = false;

    while evals < max_evals {
        let mut order: Vec<usize> = (0..=n).collect();
        order.sort_by(|&a, &b| values[a].total_cmp(&values[b]));
        simplex = order.iter().map(|&i| simplex[i].clone()).collect();
        values = order.iter().map(|&i| values[i]).collect();

        let diameter = simplex[1..].iter().map(|v| dist(v, &simplex[0])).fold(0.0, f64::max);
        if diameter < xtol {
            converged = true;
            break;
        }

        let mut centroid = vec![0.0; n];
        for v in &simplex[..n] {
            for (c, x) in centroid.iter_mut().zip(v) {
                *c += x / n as f64;
            }
        }
        let along = |t: f64| -> Vec<f64> { centroid.iter().zip(&simplex[n]).map(|(c, w)| c + t * (c - w)).collect() };

        let xr = along(1.0);
        let fr = f(&xr)?;
        evals += 1;
        if fr < values[0] {
            let xe = along(2.0);
            let fe = f(&xe)?;
            evals += 1;
            if fe < fr {
                simplex[n] = xe;
                values[n] = fe;
            } else {
                simplex[n] = xr;
                values[n] = fr;
            }
            continue;
        }
        if fr < values[n - 1] {
            simplex[n] = xr;
            values[n] = fr;
            continue;
        }
        let (xc, fc) = if fr < values[n] {
            let xc = along(0.5);
            let fc = f(&xc)?;
            (xc, fc)
        } else {
            let xc = along(-0.5);
            let fc = f(&xc)?;
            (xc, fc)
        };
        evals += 1;
        if fc < values[n].min(fr) {
            simplex[n] = xc;
            values[n] = fc;
            continue;
        }
        // shrink toward the best vertex
        for i in 1..=n {
            let shrunk: Vec<f64> = simplex[0]
                .iter()
                .zip(&simplex[i])
                .map(|(b, x)| b + 0.5 * (x - b))
                .collect();
            values[i] = f(&shrunk)?;
            simplex[i] = shrunk;
        }
        evals += n;
    }

    let best = (0..=n)
        .min_by(|&a, &b| values[a].total_cmp(&values[b]))
        .expect("non-empty simplex");
    Ok(SimplexResult {
        x: simplex[best].clone(),
        value: values[best],
        evaluations: evals,
        converged,
    })
}

/// Nelder–Mead restarted from its own optimum until a restart stops
/// improving. Nelder–Mead can stall on non-smooth objectives; restarting
/// with a fresh simplex removes most of those stalls.
pub fn nelder_mead_polished<E>(
    mut f: impl FnMut(&[f64]) -> Result<f64, E>,
    x0: &[f64],
    step: f64,
    xtol: f64,
    max_evals: usize,
) -> Result<SimplexResult, E> {
    let mut result = nelder_mead(&mut f, x0, step, xtol, max_evals)?;
    let mut restart_step = step * 0.1;
    for _ in 0..8 {
        if result.evaluations >= max_evals || restart_step < xtol {
            break;
        }
        let budget = max_evals - result.evaluations;
        let next = nelder_mead(&mut f, &result.x, restart_step, xtol, budget)?;
        let improved = next.value < result.value;
        let evaluations = result.evaluations + next.evaluations;
        if improved {
            result = SimplexResult { evaluations, ..next };
        } else {
            result.evaluations = evaluations;
            break;
        }
        restart_step *= 0.1;
    }
    Ok(result)
}

fn dist(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum::<f64>().sqrt()
}

/// A smooth real function `f(⟨Tx,x⟩, ⟨Sx,x⟩)` together with its Wirtinger
/// partials `∂f/∂q_T` and `∂f/∂q_S`.
pub trait PairObjective {
    fn eval(&self, qt: Complex64, qs: Complex64) -> (f64, Complex64, Complex64);
}

/// `|q_T|²·|q_S|²`, whose square root is the parallelism witness value.
pub struct ProductModulusSq;

impl PairObjective for ProductModulusSq {
    fn eval(&self, qt: Complex64, qs: Complex64) -> (f64, Complex64, Complex64) {
        let (at, as_) = (qt.norm_sqr(), qs.norm_sqr());
        (at * as_, qt.conj() * as_, qs.conj() * at)
    }
}

/// `Re(q_T · conj(q_S))`.
pub struct AlignedProduct;

impl PairObjective for AlignedProduct {
    fn eval(&self, qt: Complex64, qs: Complex64) -> (f64, Complex64, Complex64) {
        ((qt * qs.conj()).re, qs.conj() * 0.5, qt.conj() * 0.5)
    }
}

/// Result of a sphere ascent run.
#[derive(Debug, Clone)]
pub struct AscentResult {
    pub value: f64,
    pub x: Vec<Complex64>,
    pub iterations: usize,
}

/// Maximizes `objective(⟨Tx,x⟩, ⟨Sx,x⟩)` over the unit sphere from `start`.
///
/// Each step moves along the tangent component of the gradient
/// `2·∂f/∂x̄ = 2·Σ (f_q·Mx + conj(f_q)·M*x)` and renormalizes; the step
/// length grows on success and halves on failure.
pub fn sphere_ascent(
    t: &DenseMatrix,
    s: &DenseMatrix,
    objective: &impl PairObjective,
    start: &[Complex64],
    max_iter: usize,
) -> AscentResult {
    let norm = |v: &[Complex64]| v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    let mut x: Vec<Complex64> = {
        let n0 = norm(start);
        start.iter().map(|z| z / n0).collect()
    };
    let eval = |x: &[Complex64]| objective.eval(quad(t, x), quad(s, x));
    let (mut value, mut dqt, mut dqs) = eval(&x);
    let scale = {
        let a = t.frobenius_norm() + s.frobenius_norm();
        if a > 0.0 {
            1.0 / (a * a)
        } else {
            1.0
        }
    };
    let mut eta = scale;
    let mut stalls = 0;
    let mut iterations = 0;
    while iterations < max_iter {
        iterations += 1;
        let tx = t.apply(&x);
        let thx = t.apply_adjoint(&x);
        let sx = s.apply(&x);
        let shx = s.apply_adjoint(&x);
        let mut g: Vec<Complex64> = (0..x.len())
            .map(|i| dqt * tx[i] + dqt.conj() * thx[i] + dqs * sx[i] + dqs.conj() * shx[i])
            .collect();
        // project onto the tangent space at x
        let radial: Complex64 = g.iter().zip(&x).map(|(gi, xi)| gi * xi.conj()).sum();
        let radial = Complex64::new(radial.re, 0.0);
        for (gi, xi) in g.iter_mut().zip(&x) {
            *gi -= radial * xi;
        }
        if norm(&g) < 1e-15 * (1.0 + value.abs()) {
            break;
        }
        let mut accepted = false;
        while eta > scale * 1e-16 {
            let trial: Vec<Complex64> = x.iter().zip(&g).map(|(xi, gi)| xi + gi * eta).collect();
            let n = norm(&trial);
            let trial: Vec<Complex64> = trial.into_iter().map(|z| z / n).collect();
            let (v, a, b) = eval(&trial);
            if v > value {
                let gain = v - value;
                x = trial;
                value = v;
                dqt = a;
                dqs = b;
                eta *= 1.5;
                accepted = true;
                if gain <= 1e-15 * value.abs().max(1e-300) {
                    stalls += 1;
                } else {
                    stalls = 0;
                }
                break;
            }
            eta *= 0.5;
        }
        if !accepted || stalls >= 20 {
            break;
        }
    }
    AscentResult { value, x, iterations }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn golden_section_finds_parabola_peak() {
        let (x, v) = golden_section_max(|x| Ok::<_, ()>(-(x - 0.3) * (x - 0.3) + 2.0), -1.0, 1.0, 1e-10).unwrap();
        assert!((x - 0.3).abs() < 1e-7);
        assert!((v - 2.0).abs() < 1e-15);
    }

    #[test]
    fn periodic_max_wraps_into_period() {
        let two_pi = 2.0 * core::f64::consts::PI;
        // peak at θ = 2π − 0.001, i.e. just below the period boundary
        let (x, v) = periodic_max(|x: f64| Ok::<_, ()>((x + 0.001).cos()), two_pi, 64, 1e-12).unwrap();
        assert!((v - 1.0).abs() < 1e-15);
        assert!((0.0..two_pi).contains(&x));
        assert!((x - (two_pi - 0.001)).abs() < 1e-6);
    }

    #[test]
    fn nelder_mead_on_convex_nonsmooth() {
        let f = |p: &[f64]| Ok::<_, ()>((p[0] - 1.0).abs() + 2.0 * (p[1] + 0.5).abs());
        let r = nelder_mead_polished(f, &[0.0, 0.0], 0.5, 1e-12, 5000).unwrap();
        assert!(r.value < 1e-9, "value {}", r.value);
        assert!((r.x[0] - 1.0).abs() < 1e-9);
        assert!((r.x[1] + 0.5).abs() < 1e-9);
    }

    #[test]
    fn nelder_mead_rosenbrock() {
        let f = |p: &[f64]| Ok::<_, ()>((1.0 - p[0]).powi(2) + 100.0 * (p[1] - p[0] * p[0]).powi(2));
        let r = nelder_mead_polished(f, &[-1.2, 1.0], 0.5, 1e-12, 20000).unwrap();
        assert!(r.value < 1e-12);
    }

    #[test]
    fn sphere_ascent_finds_top_eigenvalue() {
        // with S = I, Re(q_T·1) is maximized at λ_max(½(T+T*)) = 3
        let t = DenseMatrix::real_diag(&[1.0, 3.0, -2.0]).unwrap();
        let s = DenseMatrix::identity(3);
        let start = [
            Complex64::new(0.6, 0.1),
            Complex64::new(0.2, -0.3),
            Complex64::new(0.5, 0.5),
        ];
        let r = sphere_ascent(&t, &s, &AlignedProduct, &start, 10_000);
        assert!((r.value - 3.0).abs() < 1e-10, "value {}", r.value);
    }
}
