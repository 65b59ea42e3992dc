//! The registered claims: one generator and one judge each.

use alloc::format;
use alloc::vec::Vec;
use core::f64::consts::{PI, TAU};

use num_complex::Complex64;
#[allow(unused_imports)] // shadowed by inherent f64 methods when std is linked
use num_traits::Float;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::ensemble::{
    gaussian_matrix, hermitian_part, random_matrix, random_unit_vector, random_unitary, skew_hermitian_part,
};
use super::{agreement, both, implication, Claim, ClaimKind, Ensemble, EnsembleKind, Instance, Judgement, Tolerances};
use crate::linalg::{hermitian_eigs, is_positive_semidefinite, operator_norm, quad, DenseMatrix, UnitVector};
use crate::orthogonality::{
    attainment_sets_equal, birkhoff_norm_orth, birkhoff_radius_orth, certify_orth_attainment, pythagorean_radius_orth,
    radius_minimizing_lambda, usual_orthogonal, Status, Verdict, Witness, FAIL_FACTOR,
};
use crate::parallelism::{radius_parallel, triangle_equality, witness_parallel};
use crate::radius::{attainment_sample_with, sandwich_margins, AttainmentSample, RadiusSolver};
use crate::{Error, Result, Settings};

use ClaimKind::{Property, SearchTarget};
use EnsembleKind::{General, PositiveSemidefinite};

macro_rules! claim {
    ($id:literal, $kind:expr, $statement:literal, $ens:expr, $dim:literal, $gen:ident, $judge:ident) => {
        Claim {
            id: $id,
            kind: $kind,
            statement: $statement,
            default_kind: $ens,
            default_dim: $dim,
            generate: $gen,
            judge: $judge,
        }
    };
}

pub(super) static CLAIMS: &[Claim] = &[
    claim!(
        "eq_1_1_sandwich",
        Property,
        "ω(T) ≤ ‖T‖ ≤ 2ω(T)",
        General,
        3,
        gen_single,
        judge_sandwich
    ),
    claim!(
        "self_adjoint_equality",
        Property,
        "T Hermitian ⟹ ω(T) = ‖T‖",
        General,
        3,
        gen_hermitian,
        judge_self_adjoint_equality
    ),
    claim!(
        "nondegeneracy",
        Property,
        "T ⊥_{ωB} T iff T = 0; for T ≠ 0 the minimizing λ is −1",
        General,
        2,
        gen_single,
        judge_nondegeneracy
    ),
    claim!(
        "homogeneity",
        Property,
        "T ⊥_{ωB} S ⟹ αT ⊥_{ωB} βS",
        General,
        2,
        gen_homogeneity,
        judge_homogeneity
    ),
    claim!(
        "adjoint_stability",
        Property,
        "T ⊥_{ωB} S iff T* ⊥_{ωB} S*",
        General,
        2,
        gen_shifted_pair,
        judge_adjoint_stability
    ),
    claim!(
        "self_adjoint_birkhoff",
        Property,
        "T Hermitian and T ⊥_{ωB} S ⟹ T ⊥_B S",
        General,
        2,
        gen_self_adjoint_birkhoff,
        judge_self_adjoint_birkhoff
    ),
    claim!(
        "square_zero_birkhoff",
        Property,
        "T² = 0 and T ⊥_B S ⟹ T ⊥_{ωB} S",
        General,
        2,
        gen_square_zero_birkhoff,
        judge_square_zero_birkhoff
    ),
    claim!(
        "identity_symmetry",
        Property,
        "T ⊥_{ωB} I ⟹ I ⊥_{ωB} T",
        General,
        2,
        gen_identity_symmetry,
        judge_identity_symmetry
    ),
    claim!(
        "surjectivity",
        Property,
        "S invertible and S*T = 0 ⟹ T = 0, hence S ⊥_{ωB} T",
        General,
        2,
        gen_pair,
        judge_surjectivity
    ),
    claim!(
        "certifier_consistency",
        Property,
        "the attainment certifier and the λ-minimizing decider agree",
        General,
        2,
        gen_shifted_pair,
        judge_certifier_consistency
    ),
    claim!(
        "attainment_symmetry",
        Property,
        "equal attainment sets ⟹ (T ⊥_{ωB} S iff S ⊥_{ωB} T)",
        General,
        2,
        gen_attainment_symmetry,
        judge_attainment_symmetry
    ),
    claim!(
        "attainment_overlap",
        Property,
        "T ⊥_{ωB} S and every maximizer of T maximizes S ⟹ S ⊥_{ωB} T",
        General,
        3,
        gen_attainment_overlap,
        judge_attainment_overlap
    ),
    claim!(
        "triangle_from_orthogonality",
        Property,
        "T ⊥_{ωB} (ω(T)S − ω(S)T) ⟹ ω(T+S) = ω(T)+ω(S); ω(e^{−iθ}T+S) = ω(T)+ω(S) ∀θ ⟹ T ⊥_{ωB} (ω(S)T − ω(T)S)",
        General,
        2,
        gen_triangle_from_orthogonality,
        judge_triangle_from_orthogonality
    ),
    claim!(
        "positive_shift",
        Property,
        "T positive ⟹ (T ⊥_{ωB} S iff T + I ⊥_{ωB} S)",
        General,
        2,
        gen_positive_shift,
        judge_positive_shift
    ),
    claim!(
        "remark_2_9",
        SearchTarget,
        "positive T, S with ω(S) ≠ 0 ⟹ T not ⊥_{ωB} S; S, U positive ⟹ (T ⊥_{ωB} S and T ⊥_{ωB} U iff T ⊥_{ωB} S+U)",
        PositiveSemidefinite,
        2,
        gen_remark_2_9,
        judge_remark_2_9
    ),
    claim!(
        "parallel_symmetry",
        Property,
        "T ∥_ω T, and T ∥_ω S iff S ∥_ω T with conjugate phase",
        General,
        2,
        gen_parallel_pair,
        judge_parallel_symmetry
    ),
    claim!(
        "parallel_witness_consistency",
        Property,
        "T ∥_ω S iff some x has |⟨Tx,x⟩⟨Sx,x⟩| = ω(T)ω(S), and such x attains both radii",
        General,
        2,
        gen_parallel_pair,
        judge_parallel_witness_consistency
    ),
    claim!(
        "parallel_upper_bound",
        Property,
        "ω(T + e^{iφ}S) ≤ ω(T) + ω(S)",
        General,
        3,
        gen_pair,
        judge_parallel_upper_bound
    ),
    claim!(
        "triangle_equality_routes",
        Property,
        "ω(T+S) = ω(T)+ω(S) iff some x has ⟨Tx,x⟩·conj⟨Sx,x⟩ = ω(T)ω(S)",
        General,
        2,
        gen_aligned_pair,
        judge_triangle_routes
    ),
    claim!(
        "parallel_pythagorean_equivalence",
        Property,
        "Re⟨Tx,x⟩conj⟨Sx,x⟩ = 0 on the relevant maximizers ⟹ (T ∥_ω S iff T ⊥_{ωp} S)",
        General,
        2,
        gen_rotated_hermitian_skew,
        judge_parallel_pythagorean
    ),
    claim!(
        "hermitian_skew_parallel",
        Property,
        "T Hermitian, S skew-Hermitian ⟹ (T ∥_ω S iff T ⊥_{ωp} S)",
        General,
        2,
        gen_hermitian_skew,
        judge_hermitian_skew_parallel
    ),
    claim!(
        "sum_difference_attainment",
        Property,
        "ω(T+S) = ω(T−S) with equal attainment sets iff Re⟨Tx,x⟩conj⟨Sx,x⟩ = 0 on the maximizers of T±S",
        General,
        2,
        gen_sum_difference_attainment,
        judge_sum_difference_attainment
    ),
    claim!(
        "sum_difference_parallel",
        Property,
        "ω(T+S) = ω(T−S) and T ⊥_{ωp} S ⟹ (T ∥_ω S iff T+S ∥_ω T−S)",
        General,
        2,
        gen_sum_difference_parallel,
        judge_sum_difference_parallel
    ),
    claim!(
        "sum_difference_pythagorean",
        Property,
        "S ∥_ω T and T+S ∥_ω T−S ⟹ (T ⊥_{ωp} S iff ω(T+S) = ω(T−S))",
        General,
        2,
        gen_sum_difference_pythagorean,
        judge_sum_difference_pythagorean
    ),
];

// ---------------------------------------------------------------------------
// shared helpers

fn c64(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

fn uniform(rng: &mut ChaCha8Rng, lo: f64, hi: f64) -> f64 {
    rng.random_range(lo..hi)
}

fn unimodular(rng: &mut ChaCha8Rng) -> Complex64 {
    Complex64::from_polar(1.0, uniform(rng, 0.0, TAU))
}

fn draw(ens: &Ensemble, rng: &mut ChaCha8Rng) -> Result<DenseMatrix> {
    random_matrix(ens.kind, ens.dim, rng)
}

fn omega(m: &DenseMatrix, settings: &Settings) -> Result<f64> {
    RadiusSolver::from_settings(settings).omega(m)
}

fn birkhoff(t: &DenseMatrix, s: &DenseMatrix, tol: &Tolerances, settings: &Settings) -> Result<Verdict> {
    birkhoff_radius_orth(t, s, tol.optimization, settings)
}

fn verdict(status: Status, margin: f64, tolerance: f64) -> Verdict {
    Verdict {
        status,
        witness: None,
        margin,
        tolerance,
    }
}

/// `|a − b|` judged as an equality at `tol`.
fn equality(a: f64, b: f64, tol: f64) -> Verdict {
    let gap = a - b;
    verdict(Status::from_deficit(gap.abs(), tol), gap, tol)
}

fn premise_then(premise: Status, body: impl FnOnce() -> Result<Judgement>) -> Result<Judgement> {
    match premise {
        Status::Fails => Ok(Judgement::Vacuous),
        Status::Inconclusive => Ok(Judgement::Inconclusive),
        Status::Holds => body(),
    }
}

/// Eigenvector of a Hermitian matrix whose eigenvalue has the largest modulus.
fn top_modulus_eigvec(h: &DenseMatrix) -> Result<UnitVector> {
    let eig = hermitian_eigs(h)?;
    let last = eig.eigenvalues.len() - 1;
    let k = if eig.eigenvalues[0].abs() >= eig.eigenvalues[last].abs() {
        0
    } else {
        last
    };
    Ok(eig.eigenvectors[k].clone())
}

fn rank_one(v: &UnitVector) -> Result<DenseMatrix> {
    DenseMatrix::outer(v, v)
}

/// `I − vv*`.
fn complement(v: &UnitVector) -> Result<DenseMatrix> {
    Ok(&DenseMatrix::identity(v.dim()) - &rank_one(v)?)
}

/// `T + λS` with `λ` minimizing `ω(T + λS)`, so that the result is
/// orthogonal to `S` up to optimizer accuracy.
fn orth_shift(t: &DenseMatrix, s: &DenseMatrix, settings: &Settings) -> Result<DenseMatrix> {
    let (lambda, _) = radius_minimizing_lambda(t, s, settings)?;
    Ok(t.add_scaled(lambda, s))
}

/// `cT + d·e^{iφ}·xx*` with `x` attaining `ω(T)`. With `φ = arg⟨Tx,x⟩`
/// the vector `x` attains both radii with aligned quadratic forms.
fn partner(t: &DenseMatrix, rng: &mut ChaCha8Rng, aligned: bool, settings: &Settings) -> Result<DenseMatrix> {
    let cert = RadiusSolver::from_settings(settings).certificate(t)?;
    let x = cert.x_star;
    let phase = if aligned {
        Complex64::from_polar(1.0, quad(t, x.entries()).arg())
    } else {
        unimodular(rng)
    };
    let c = uniform(rng, 0.2, 2.0);
    let d = uniform(rng, 0.0, 1.0);
    Ok((t * c64(c)).add_scaled(phase * d, &rank_one(&x)?))
}

/// Hermitian `H` and skew-Hermitian `K = i(c·vv* + PK₀P)` with `v` a top
/// eigenvector of `H` in modulus, `P = I − vv*` and `‖PK₀P‖ ≤ 0.8c`, so
/// that `v` attains both radii.
fn hermitian_skew_shared(dim: usize, rng: &mut ChaCha8Rng) -> Result<(DenseMatrix, DenseMatrix)> {
    let h = hermitian_part(&gaussian_matrix(dim, rng)?);
    let v = top_modulus_eigvec(&h)?;
    let c = uniform(rng, 0.5, 2.0);
    let p = complement(&v)?;
    let mut rest = &(&p * &hermitian_part(&gaussian_matrix(dim, rng)?)) * &p;
    let norm = operator_norm(&rest);
    if norm > 0.0 {
        rest = rest.scale(c64(0.8 * c * uniform(rng, 0.0, 1.0) / norm));
    }
    let inner = (&rank_one(&v)? * c64(c)).add_scaled(c64(1.0), &rest);
    Ok((h, inner.scale(Complex64::new(0.0, 1.0))))
}

fn hermitian_skew_random(dim: usize, rng: &mut ChaCha8Rng) -> Result<(DenseMatrix, DenseMatrix)> {
    let h = hermitian_part(&gaussian_matrix(dim, rng)?);
    let k = skew_hermitian_part(&gaussian_matrix(dim, rng)?);
    Ok((h, k))
}

fn pair_instance(variant: &str, t: DenseMatrix, s: DenseMatrix) -> Instance {
    Instance::new(variant).with("T", t).with("S", s)
}

fn pair(inst: &Instance) -> Result<(&DenseMatrix, &DenseMatrix)> {
    Ok((inst.get("T")?, inst.get("S")?))
}

fn is_capped(sample: &AttainmentSample, settings: &Settings) -> bool {
    sample.vectors.len() >= settings.attainment_budget
}

/// Largest `|Re⟨Tx,x⟩·conj⟨Sx,x⟩|` over the given vectors.
fn real_part_deviation<'a>(t: &DenseMatrix, s: &DenseMatrix, vectors: impl Iterator<Item = &'a UnitVector>) -> f64 {
    vectors
        .map(|x| (quad(t, x.entries()) * quad(s, x.entries()).conj()).re.abs())
        .fold(0.0, f64::max)
}

fn violated(margin: f64, detail: alloc::string::String) -> Judgement {
    Judgement::Violated { margin, detail }
}

// ---------------------------------------------------------------------------
// generators

fn gen_single(rng: &mut ChaCha8Rng, ens: &Ensemble, _: usize, _: &Settings) -> Result<Instance> {
    Ok(Instance::new("random").with("T", draw(ens, rng)?))
}

fn gen_pair(rng: &mut ChaCha8Rng, ens: &Ensemble, _: usize, _: &Settings) -> Result<Instance> {
    let t = draw(ens, rng)?;
    let s = draw(ens, rng)?;
    Ok(pair_instance("random", t, s))
}

fn gen_hermitian(rng: &mut ChaCha8Rng, ens: &Ensemble, _: usize, _: &Settings) -> Result<Instance> {
    let t = hermitian_part(&gaussian_matrix(ens.dim, rng)?);
    Ok(Instance::new("hermitian").with("T", t))
}

/// Even trials replace `T` by `T + λS` orthogonal to `S`.
fn gen_shifted_pair(rng: &mut ChaCha8Rng, ens: &Ensemble, trial: usize, settings: &Settings) -> Result<Instance> {
    let t = draw(ens, rng)?;
    let s = draw(ens, rng)?;
    if trial % 2 == 0 {
        Ok(pair_instance("orthogonal_shift", orth_shift(&t, &s, settings)?, s))
    } else {
        Ok(pair_instance("random", t, s))
    }
}

fn gen_homogeneity(rng: &mut ChaCha8Rng, ens: &Ensemble, trial: usize, settings: &Settings) -> Result<Instance> {
    let t = draw(ens, rng)?;
    let s = draw(ens, rng)?;
    let alpha = Complex64::from_polar(uniform(rng, 0.25, 4.0), uniform(rng, 0.0, TAU));
    let beta = Complex64::from_polar(uniform(rng, 0.25, 4.0), uniform(rng, 0.0, TAU));
    let (variant, t) = if trial % 4 == 3 {
        ("random", t)
    } else {
        ("orthogonal_shift", orth_shift(&t, &s, settings)?)
    };
    Ok(pair_instance(variant, t, s)
        .with_scalar("alpha", alpha)
        .with_scalar("beta", beta))
}

/// Hermitian `T`; on three trials in four `S` is shifted by a multiple of
/// `I` so that `⟨Sv,v⟩ = 0` at a top eigenvector `v` of `T`.
fn gen_self_adjoint_birkhoff(rng: &mut ChaCha8Rng, ens: &Ensemble, trial: usize, _: &Settings) -> Result<Instance> {
    let t = hermitian_part(&gaussian_matrix(ens.dim, rng)?);
    let mut s = draw(ens, rng)?;
    let mut variant = "random";
    if trial % 4 != 3 {
        let v = top_modulus_eigvec(&t)?;
        let shift = quad(&s, v.entries());
        s = s.add_scaled(-shift, &DenseMatrix::identity(ens.dim));
        variant = "centered";
    }
    Ok(pair_instance(variant, t, s))
}

/// Square-zero `T`; on three trials in four `S` is moved along `T` so that
/// `⟨Sx, Tx⟩ = 0` at a top right singular vector `x` of `T`.
fn gen_square_zero_birkhoff(rng: &mut ChaCha8Rng, ens: &Ensemble, trial: usize, _: &Settings) -> Result<Instance> {
    let t = random_matrix(EnsembleKind::NilpotentSquareZero, ens.dim, rng)?;
    let mut s = draw(ens, rng)?;
    let mut variant = "random";
    if trial % 4 != 3 {
        let gram = hermitian_part(&(&t.adjoint() * &t));
        let x = hermitian_eigs(&gram)?.eigenvectors[0].clone();
        let tx = t.apply(x.entries());
        let sx = s.apply(x.entries());
        let num: Complex64 = sx.iter().zip(&tx).map(|(a, b)| a * b.conj()).sum();
        let den: f64 = tx.iter().map(|z| z.norm_sqr()).sum();
        if den > 0.0 {
            s = s.add_scaled(-num / den, &t);
            variant = "norm_orthogonal";
        }
    }
    Ok(pair_instance(variant, t, s))
}

fn gen_identity_symmetry(rng: &mut ChaCha8Rng, ens: &Ensemble, trial: usize, settings: &Settings) -> Result<Instance> {
    let t = draw(ens, rng)?;
    if trial % 4 == 3 {
        return Ok(Instance::new("random").with("T", t));
    }
    let shifted = orth_shift(&t, &DenseMatrix::identity(ens.dim), settings)?;
    Ok(Instance::new("identity_shift").with("T", shifted))
}

/// Normal `T`, `S` in a common random eigenbasis, each with exactly two
/// eigenvalues of top modulus. Both attainment sets are then the two
/// eigenvector rays, and `T ⊥_{ωB} S` iff `t₁·conj(s₁) = −c·t₂·conj(s₂)`
/// for some `c ≥ 0`. `orthogonal` selects phases satisfying that relation.
/// With `extra_peak` and `n ≥ 3`, `S` gets a third eigenvalue of top modulus.
fn normal_two_peak(
    dim: usize,
    rng: &mut ChaCha8Rng,
    orthogonal: bool,
    extra_peak: bool,
) -> Result<(DenseMatrix, DenseMatrix)> {
    if dim < 2 {
        return Err(Error::InvalidArgument("two-peak construction needs dim ≥ 2"));
    }
    let sign = |rng: &mut ChaCha8Rng| if rng.random_bool(0.5) { 1.0 } else { -1.0 };
    let r = uniform(rng, 0.5, 2.0);
    let rho = uniform(rng, 0.5, 2.0);
    let a = uniform(rng, 0.0, TAU);
    let b = a + sign(rng) * uniform(rng, 0.8, 2.3);
    let c = uniform(rng, 0.0, TAU);
    let d = if orthogonal {
        // arg(t₂·conj s₂) = arg(t₁·conj s₁) + π
        b - a + c - PI
    } else {
        c + sign(rng) * uniform(rng, 0.8, 2.3)
    };
    let mut t = Vec::with_capacity(dim);
    let mut s = Vec::with_capacity(dim);
    t.push(Complex64::from_polar(r, a));
    t.push(Complex64::from_polar(r, b));
    s.push(Complex64::from_polar(rho, c));
    s.push(Complex64::from_polar(rho, d));
    for k in 2..dim {
        t.push(Complex64::from_polar(
            uniform(rng, 0.0, 0.7 * r),
            uniform(rng, 0.0, TAU),
        ));
        if k == 2 && extra_peak {
            // a third top-modulus direction, kept away from the other two
            let angle = c + (d - c) * 0.5 + PI;
            s.push(Complex64::from_polar(rho, angle));
        } else {
            s.push(Complex64::from_polar(
                uniform(rng, 0.0, 0.7 * rho),
                uniform(rng, 0.0, TAU),
            ));
        }
    }
    let u = random_unitary(dim, rng)?;
    let conj = |diag: &[Complex64]| -> Result<DenseMatrix> { Ok(&(&u * &DenseMatrix::diag(diag)?) * &u.adjoint()) };
    Ok((conj(&t)?, conj(&s)?))
}

fn gen_attainment_symmetry(rng: &mut ChaCha8Rng, ens: &Ensemble, trial: usize, _: &Settings) -> Result<Instance> {
    let orthogonal = trial % 2 == 0;
    let (t, s) = normal_two_peak(ens.dim, rng, orthogonal, false)?;
    Ok(pair_instance(
        if orthogonal { "two_peak_orthogonal" } else { "two_peak" },
        t,
        s,
    ))
}

fn gen_attainment_overlap(rng: &mut ChaCha8Rng, ens: &Ensemble, trial: usize, _: &Settings) -> Result<Instance> {
    let orthogonal = trial % 2 == 0;
    let (t, s) = normal_two_peak(ens.dim, rng, orthogonal, true)?;
    Ok(pair_instance(
        if orthogonal { "nested_orthogonal" } else { "nested" },
        t,
        s,
    ))
}

fn gen_triangle_from_orthogonality(
    rng: &mut ChaCha8Rng,
    ens: &Ensemble,
    trial: usize,
    settings: &Settings,
) -> Result<Instance> {
    match trial % 4 {
        0 | 2 => {
            let t = draw(ens, rng)?;
            let aligned = trial % 4 == 0;
            let s = partner(&t, rng, aligned, settings)?;
            Ok(pair_instance(if aligned { "aligned" } else { "misaligned" }, t, s))
        }
        k => {
            // W(T) is a disk about 0, so ω(e^{−iθ}T + cI) = ω(T) + |c| for all θ
            let t = random_matrix(EnsembleKind::NilpotentSquareZero, ens.dim, rng)?;
            let c = unimodular(rng) * uniform(rng, 0.2, 2.0);
            let mut s = DenseMatrix::scalar(ens.dim, c);
            let mut variant = "square_zero_scalar";
            if k == 3 {
                s = s.add_scaled(c64(0.3), &gaussian_matrix(ens.dim, rng)?);
                variant = "square_zero_perturbed";
            }
            Ok(pair_instance(variant, t, s))
        }
    }
}

fn gen_positive_shift(rng: &mut ChaCha8Rng, ens: &Ensemble, trial: usize, _: &Settings) -> Result<Instance> {
    let t = random_matrix(PositiveSemidefinite, ens.dim, rng)?;
    let mut s = draw(ens, rng)?;
    let mut variant = "random";
    if trial % 2 == 0 {
        let v = hermitian_eigs(&t)?.eigenvectors[0].clone();
        let shift = quad(&s, v.entries());
        s = s.add_scaled(-shift, &DenseMatrix::identity(ens.dim));
        variant = "centered";
    }
    Ok(pair_instance(variant, t, s))
}

fn gen_remark_2_9(rng: &mut ChaCha8Rng, ens: &Ensemble, trial: usize, _: &Settings) -> Result<Instance> {
    let n = ens.dim;
    let psd = |rng: &mut ChaCha8Rng| random_matrix(PositiveSemidefinite, n, rng);
    match trial % 4 {
        0 => Ok(pair_instance("positive_pair", psd(rng)?, psd(rng)?)),
        1 => {
            // S compressed off the top eigenvector of T
            let t = psd(rng)?;
            let v = hermitian_eigs(&t)?.eigenvectors[0].clone();
            let p = complement(&v)?;
            let s = hermitian_part(&(&(&p * &psd(rng)?) * &p));
            Ok(pair_instance("compressed_pair", t, s))
        }
        2 => {
            let t = gaussian_matrix(n, rng)?;
            Ok(pair_instance("additivity", t, psd(rng)?).with("U", psd(rng)?))
        }
        _ => {
            // singular positive summands whose sum is generically invertible
            let t = DenseMatrix::scalar(n, c64(uniform(rng, 0.5, 2.0)));
            let singular = |rng: &mut ChaCha8Rng| -> Result<DenseMatrix> {
                let p = complement(&random_unit_vector(n, rng)?)?;
                Ok(hermitian_part(&(&(&p * &psd(rng)?) * &p)))
            };
            let s = singular(rng)?;
            let u = singular(rng)?;
            Ok(pair_instance("additivity_scalar", t, s).with("U", u))
        }
    }
}

/// Reflexive, constructed-parallel (rotated by a random phase) and random
/// pairs in turn.
fn gen_parallel_pair(rng: &mut ChaCha8Rng, ens: &Ensemble, trial: usize, settings: &Settings) -> Result<Instance> {
    let t = draw(ens, rng)?;
    match trial % 3 {
        0 => Ok(pair_instance("reflexive", t.clone(), t)),
        1 => {
            let s = &partner(&t, rng, true, settings)? * unimodular(rng);
            Ok(pair_instance("common_maximizer", t, s))
        }
        _ => {
            let s = draw(ens, rng)?;
            Ok(pair_instance("random", t, s))
        }
    }
}

fn gen_aligned_pair(rng: &mut ChaCha8Rng, ens: &Ensemble, trial: usize, settings: &Settings) -> Result<Instance> {
    let t = draw(ens, rng)?;
    if trial % 2 == 0 {
        let s = partner(&t, rng, true, settings)?;
        Ok(pair_instance("aligned", t, s))
    } else {
        let s = draw(ens, rng)?;
        Ok(pair_instance("random", t, s))
    }
}

/// `e^{iα}H, e^{iα}K` for Hermitian `H` and skew-Hermitian `K` (sharing a
/// maximizer on one trial in three), or a random pair.
fn gen_rotated_hermitian_skew(rng: &mut ChaCha8Rng, ens: &Ensemble, trial: usize, _: &Settings) -> Result<Instance> {
    let rot = unimodular(rng);
    let (variant, (h, k)) = match trial % 3 {
        0 => ("rotated_shared", hermitian_skew_shared(ens.dim, rng)?),
        1 => ("rotated_hermitian_skew", hermitian_skew_random(ens.dim, rng)?),
        _ => {
            let t = draw(ens, rng)?;
            let s = draw(ens, rng)?;
            return Ok(pair_instance("random", t, s));
        }
    };
    Ok(pair_instance(variant, &h * rot, &k * rot))
}

fn gen_hermitian_skew(rng: &mut ChaCha8Rng, ens: &Ensemble, trial: usize, _: &Settings) -> Result<Instance> {
    let (variant, (h, k)) = if trial % 2 == 0 {
        ("shared_maximizer", hermitian_skew_shared(ens.dim, rng)?)
    } else {
        ("random", hermitian_skew_random(ens.dim, rng)?)
    };
    Ok(pair_instance(variant, h, k))
}

fn gen_sum_difference_attainment(rng: &mut ChaCha8Rng, ens: &Ensemble, trial: usize, _: &Settings) -> Result<Instance> {
    if trial % 2 == 0 {
        let (h, k) = hermitian_skew_random(ens.dim, rng)?;
        Ok(pair_instance("hermitian_skew", h, k))
    } else {
        let t = draw(ens, rng)?;
        let s = draw(ens, rng)?;
        Ok(pair_instance("random", t, s))
    }
}

/// `S = c·(±i)·T`.
fn quarter_turn_multiple(ens: &Ensemble, rng: &mut ChaCha8Rng) -> Result<(DenseMatrix, DenseMatrix)> {
    let t = draw(ens, rng)?;
    let sign = if rng.random_bool(0.5) { 1.0 } else { -1.0 };
    let s = &t * Complex64::new(0.0, sign * uniform(rng, 0.2, 2.0));
    Ok((t, s))
}

fn gen_sum_difference_parallel(rng: &mut ChaCha8Rng, ens: &Ensemble, trial: usize, _: &Settings) -> Result<Instance> {
    let (variant, (t, s)) = match trial % 3 {
        0 => ("shared_maximizer", hermitian_skew_shared(ens.dim, rng)?),
        1 => ("hermitian_skew", hermitian_skew_random(ens.dim, rng)?),
        _ => ("quarter_turn_multiple", quarter_turn_multiple(ens, rng)?),
    };
    Ok(pair_instance(variant, t, s))
}

fn gen_sum_difference_pythagorean(
    rng: &mut ChaCha8Rng,
    ens: &Ensemble,
    trial: usize,
    _: &Settings,
) -> Result<Instance> {
    let (variant, (t, s)) = match trial % 3 {
        0 => ("quarter_turn_multiple", quarter_turn_multiple(ens, rng)?),
        1 => {
            let t = draw(ens, rng)?;
            let s = &t * (unimodular(rng) * uniform(rng, 0.2, 2.0));
            ("rotated_multiple", (t, s))
        }
        _ => ("shared_maximizer", hermitian_skew_shared(ens.dim, rng)?),
    };
    Ok(pair_instance(variant, t, s))
}

// ---------------------------------------------------------------------------
// judges

fn judge_sandwich(inst: &Instance, tol: &Tolerances, settings: &Settings) -> Result<Judgement> {
    let t = inst.get("T")?;
    let w = omega(t, settings)?;
    let norm = operator_norm(t);
    let (upper, lower) = sandwich_margins(w, norm);
    let worst = upper.min(lower);
    let bound = 10.0 * tol.algebraic;
    if worst < -bound {
        return Ok(violated(worst, format!("ω = {w:e}, ‖T‖ = {norm:e}")));
    }
    Ok(Judgement::Supported)
}

fn judge_self_adjoint_equality(inst: &Instance, tol: &Tolerances, settings: &Settings) -> Result<Judgement> {
    let t = inst.get("T")?;
    if t.hermitian_deviation() > tol.algebraic {
        return Ok(Judgement::Vacuous);
    }
    let w = omega(t, settings)?;
    let norm = operator_norm(t);
    let gap = (w - norm).abs();
    if gap > 10.0 * tol.algebraic {
        return Ok(violated(-gap, format!("ω = {w:e}, ‖T‖ = {norm:e}")));
    }
    Ok(Judgement::Supported)
}

fn judge_nondegeneracy(inst: &Instance, tol: &Tolerances, settings: &Settings) -> Result<Judgement> {
    let t = inst.get("T")?;
    let zero = DenseMatrix::zeros(t.dim());
    let z = birkhoff(&zero, &zero, tol, settings)?;
    if !z.holds() {
        return Ok(violated(-1.0, format!("0 ⊥ 0 reported {}", z.status.as_str())));
    }
    if t.is_zero() {
        return Ok(Judgement::Vacuous);
    }
    let v = birkhoff(t, t, tol, settings)?;
    match v.status {
        Status::Inconclusive => Ok(Judgement::Inconclusive),
        Status::Holds => Ok(violated(
            v.margin - v.tolerance,
            format!("T ⊥ T holds with margin {:e}", v.margin),
        )),
        Status::Fails => {
            let Some(Witness::Lambda(lambda)) = v.witness else {
                return Ok(violated(v.margin, "failing verdict without λ".into()));
            };
            let off = (lambda + 1.0).norm();
            if off > tol.optimization {
                return Ok(violated(-off, format!("minimizing λ = {lambda} is not −1")));
            }
            Ok(Judgement::Supported)
        }
    }
}

fn judge_homogeneity(inst: &Instance, tol: &Tolerances, settings: &Settings) -> Result<Judgement> {
    let (t, s) = pair(inst)?;
    let alpha = inst.scalar("alpha")?;
    let beta = inst.scalar("beta")?;
    let premise = birkhoff(t, s, tol, settings)?.status;
    implication(
        premise,
        || birkhoff_radius_orth(&(t * alpha), &(s * beta), tol.optimization * alpha.norm(), settings),
        "αT ⊥ βS",
    )
}

fn judge_adjoint_stability(inst: &Instance, tol: &Tolerances, settings: &Settings) -> Result<Judgement> {
    let (t, s) = pair(inst)?;
    let direct = birkhoff(t, s, tol, settings)?;
    let adjoint = birkhoff(&t.adjoint(), &s.adjoint(), tol, settings)?;
    Ok(agreement(&direct, &adjoint, "T ⊥ S vs T* ⊥ S*"))
}

fn judge_self_adjoint_birkhoff(inst: &Instance, tol: &Tolerances, settings: &Settings) -> Result<Judgement> {
    let (t, s) = pair(inst)?;
    if t.hermitian_deviation() > tol.algebraic {
        return Ok(Judgement::Vacuous);
    }
    let premise = birkhoff(t, s, tol, settings)?.status;
    implication(
        premise,
        || birkhoff_norm_orth(t, s, tol.optimization, settings),
        "T ⊥_B S",
    )
}

fn judge_square_zero_birkhoff(inst: &Instance, tol: &Tolerances, settings: &Settings) -> Result<Judgement> {
    let (t, s) = pair(inst)?;
    let scale = 1.0 + t.frobenius_norm().powi(2);
    if (t * t).max_entry().2 > tol.algebraic * scale {
        return Ok(Judgement::Vacuous);
    }
    let premise = birkhoff_norm_orth(t, s, tol.optimization, settings)?.status;
    implication(premise, || birkhoff(t, s, tol, settings), "T ⊥_{ωB} S")
}

fn judge_identity_symmetry(inst: &Instance, tol: &Tolerances, settings: &Settings) -> Result<Judgement> {
    let t = inst.get("T")?;
    let id = DenseMatrix::identity(t.dim());
    let premise = birkhoff(t, &id, tol, settings)?.status;
    implication(premise, || birkhoff(&id, t, tol, settings), "I ⊥ T")
}

fn judge_surjectivity(inst: &Instance, tol: &Tolerances, settings: &Settings) -> Result<Judgement> {
    let (t, s) = pair(inst)?;
    let n = s.dim();
    let eig = hermitian_eigs(&hermitian_part(&(s * &s.adjoint())))?;
    let scale = 1.0 + eig.max_eigenvalue();
    if eig.min_eigenvalue() <= tol.algebraic * scale || t.is_zero() {
        return Ok(Judgement::Vacuous);
    }
    // projection onto ker S*; zero for invertible S
    let mut kernel = DenseMatrix::zeros(n);
    for (value, v) in eig.eigenvalues.iter().zip(&eig.eigenvectors) {
        if *value <= tol.algebraic * scale {
            kernel = &kernel + &rank_one(v)?;
        }
    }
    if !kernel.is_zero() {
        return Ok(violated(-1.0, "invertible S has a nontrivial kernel".into()));
    }
    let forced = usual_orthogonal(s, &kernel, tol.algebraic)?;
    let consequence = birkhoff(s, &kernel, tol, settings)?;
    if !forced.holds() || !consequence.holds() {
        return Ok(violated(-1.0, "S ⊥ 0 or S ⊥_{ωB} 0 rejected".into()));
    }
    let v = usual_orthogonal(s, t, tol.algebraic)?;
    Ok(match v.status {
        Status::Fails => Judgement::Supported,
        Status::Inconclusive => Judgement::Inconclusive,
        Status::Holds => violated(v.margin - v.tolerance, "S*T = 0 with S invertible and T ≠ 0".into()),
    })
}

fn judge_certifier_consistency(inst: &Instance, tol: &Tolerances, settings: &Settings) -> Result<Judgement> {
    let (t, s) = pair(inst)?;
    let decider = birkhoff(t, s, tol, settings)?;
    let certifier = certify_orth_attainment(t, s, 360, tol.optimization, settings)?;
    Ok(agreement(&decider, &certifier, "decider vs certifier"))
}

fn judge_attainment_symmetry(inst: &Instance, tol: &Tolerances, settings: &Settings) -> Result<Judgement> {
    let (t, s) = pair(inst)?;
    let premise = attainment_sets_equal(t, s, tol.optimization, settings)?.status;
    premise_then(premise, || {
        let forward = birkhoff(t, s, tol, settings)?;
        let backward = birkhoff(s, t, tol, settings)?;
        Ok(agreement(&forward, &backward, "T ⊥ S vs S ⊥ T"))
    })
}

/// Whether every sampled maximizer of `T` is (modulo phase) a sampled
/// maximizer of `S`, with the same bands as [`attainment_sets_equal`].
fn contained_maximizers(t: &DenseMatrix, s: &DenseMatrix, slack: f64, settings: &Settings) -> Result<Status> {
    let a = attainment_sample_with(t, slack, settings.attainment_budget, settings)?;
    let b = attainment_sample_with(s, slack, settings.attainment_budget, settings)?;
    if is_capped(&a, settings) || is_capped(&b, settings) {
        return Ok(Status::Inconclusive);
    }
    let distance = a
        .vectors
        .iter()
        .map(|x| {
            b.vectors
                .iter()
                .map(|y| x.phase_distance(y))
                .fold(f64::INFINITY, f64::min)
        })
        .fold(0.0, f64::max);
    let threshold = (2.0 * slack).sqrt();
    Ok(if distance < 0.5 * threshold {
        Status::Holds
    } else if distance > FAIL_FACTOR * threshold {
        Status::Fails
    } else {
        Status::Inconclusive
    })
}

fn judge_attainment_overlap(inst: &Instance, tol: &Tolerances, settings: &Settings) -> Result<Judgement> {
    let (t, s) = pair(inst)?;
    let orth = birkhoff(t, s, tol, settings)?.status;
    let premise = if orth == Status::Fails {
        Status::Fails
    } else {
        both(orth, contained_maximizers(t, s, tol.optimization, settings)?)
    };
    implication(premise, || birkhoff(s, t, tol, settings), "S ⊥ T")
}

fn judge_triangle_from_orthogonality(inst: &Instance, tol: &Tolerances, settings: &Settings) -> Result<Judgement> {
    let (t, s) = pair(inst)?;
    let wt = omega(t, settings)?;
    let ws = omega(s, settings)?;
    if inst.variant.starts_with("square_zero") {
        // all-θ premise sampled on 16 angles
        let mut deficit = 0.0f64;
        for k in 0..16 {
            let rot = Complex64::from_polar(1.0, -TAU * k as f64 / 16.0);
            let value = omega(&(t * rot).add_scaled(c64(1.0), s), settings)?;
            deficit = deficit.max(wt + ws - value);
        }
        let premise = Status::from_deficit(deficit, tol.optimization);
        let target = (t * c64(ws)).add_scaled(c64(-wt), s);
        implication(premise, || birkhoff(t, &target, tol, settings), "T ⊥ (ω(S)T − ω(T)S)")
    } else {
        let target = (s * c64(wt)).add_scaled(c64(-ws), t);
        let premise = birkhoff(t, &target, tol, settings)?.status;
        implication(
            premise,
            || Ok(triangle_equality(t, s, tol.optimization, settings)?.combined),
            "ω(T+S) = ω(T)+ω(S)",
        )
    }
}

fn judge_positive_shift(inst: &Instance, tol: &Tolerances, settings: &Settings) -> Result<Judgement> {
    let (t, s) = pair(inst)?;
    if !is_positive_semidefinite(t, tol.algebraic) {
        return Ok(Judgement::Vacuous);
    }
    let plain = birkhoff(t, s, tol, settings)?;
    let shifted = birkhoff(&(t + &DenseMatrix::identity(t.dim())), s, tol, settings)?;
    Ok(agreement(&plain, &shifted, "T ⊥ S vs T+I ⊥ S"))
}

fn judge_remark_2_9(inst: &Instance, tol: &Tolerances, settings: &Settings) -> Result<Judgement> {
    let (t, s) = pair(inst)?;
    let psd = |m: &DenseMatrix| is_positive_semidefinite(m, tol.algebraic);
    if inst.variant.starts_with("additivity") {
        let u = inst.get("U")?;
        if !psd(s) || !psd(u) {
            return Ok(Judgement::Vacuous);
        }
        let vs = birkhoff(t, s, tol, settings)?;
        let vu = birkhoff(t, u, tol, settings)?;
        let sum = birkhoff(t, &(s + u), tol, settings)?;
        let separate = verdict(both(vs.status, vu.status), vs.margin.min(vu.margin), tol.optimization);
        return Ok(agreement(&separate, &sum, "T ⊥ S and T ⊥ U vs T ⊥ S+U"));
    }
    if !psd(t) || !psd(s) || omega(s, settings)? <= tol.algebraic {
        return Ok(Judgement::Vacuous);
    }
    let v = birkhoff(t, s, tol, settings)?;
    Ok(match v.status {
        Status::Fails => Judgement::Supported,
        Status::Inconclusive => Judgement::Inconclusive,
        Status::Holds => violated(
            v.margin - v.tolerance,
            format!("positive pair with T ⊥_{{ωB}} S (min ω(T+λS) − ω(T) = {:e})", v.margin),
        ),
    })
}

fn parallel_phase(v: &Verdict) -> Option<f64> {
    match &v.witness {
        Some(Witness::Parallel(w)) => Some(w.lambda_phase),
        _ => None,
    }
}

fn judge_parallel_symmetry(inst: &Instance, tol: &Tolerances, settings: &Settings) -> Result<Judgement> {
    let (t, s) = pair(inst)?;
    let forward = radius_parallel(t, s, tol.optimization, settings)?;
    if inst.variant == "reflexive" && forward.fails() {
        return Ok(violated(forward.margin, "T ∥ T rejected".into()));
    }
    let backward = radius_parallel(s, t, tol.optimization, settings)?;
    let judgement = agreement(&forward, &backward, "T ∥ S vs S ∥ T");
    if judgement != Judgement::Supported || !forward.holds() {
        return Ok(judgement);
    }
    let (Some(a), Some(b)) = (parallel_phase(&forward), parallel_phase(&backward)) else {
        return Ok(judgement);
    };
    let sum = (((a + b) % TAU) + TAU) % TAU;
    let gap = sum.min(TAU - sum);
    if gap <= 1e-4 {
        return Ok(judgement);
    }
    // the maximizing phase need not be unique; accept any conjugate phase
    // that also attains the bound
    let value = omega(&s.add_scaled(Complex64::from_polar(1.0, -a), t), settings)?;
    let target = omega(t, settings)? + omega(s, settings)?;
    Ok(if value >= target - tol.optimization {
        Judgement::Supported
    } else {
        Judgement::Inconclusive
    })
}

fn judge_parallel_witness_consistency(inst: &Instance, tol: &Tolerances, settings: &Settings) -> Result<Judgement> {
    let (t, s) = pair(inst)?;
    let sweep = radius_parallel(t, s, tol.optimization, settings)?;
    let witness = witness_parallel(t, s, tol.optimization, settings)?;
    let judgement = agreement(&sweep, &witness, "phase sweep vs common maximizer");
    if !witness.holds() {
        return Ok(judgement);
    }
    if let Some(Witness::Parallel(w)) = &witness.witness {
        let bound = 10.0 * witness.tolerance;
        let dt = quad(t, w.x.entries()).norm() - omega(t, settings)?;
        let ds = quad(s, w.x.entries()).norm() - omega(s, settings)?;
        let worst = dt.min(ds);
        if worst < -bound {
            return Ok(violated(worst, format!("witness misses a radius by {:e}", -worst)));
        }
    }
    Ok(judgement)
}

fn judge_parallel_upper_bound(inst: &Instance, tol: &Tolerances, settings: &Settings) -> Result<Judgement> {
    let (t, s) = pair(inst)?;
    let bound = omega(t, settings)? + omega(s, settings)?;
    let mut excess = f64::NEG_INFINITY;
    for k in 0..16 {
        let phase = Complex64::from_polar(1.0, TAU * k as f64 / 16.0);
        excess = excess.max(omega(&t.add_scaled(phase, s), settings)? - bound);
    }
    if excess > 10.0 * tol.algebraic {
        return Ok(violated(
            -excess,
            format!("ω(T + e^{{iφ}}S) exceeds ω(T)+ω(S) by {excess:e}"),
        ));
    }
    Ok(Judgement::Supported)
}

fn judge_triangle_routes(inst: &Instance, tol: &Tolerances, settings: &Settings) -> Result<Judgement> {
    let (t, s) = pair(inst)?;
    let te = triangle_equality(t, s, tol.optimization, settings)?;
    Ok(agreement(&te.direct, &te.certificate, "direct vs product certificate"))
}

fn judge_parallel_pythagorean(inst: &Instance, tol: &Tolerances, settings: &Settings) -> Result<Judgement> {
    let (t, s) = pair(inst)?;
    let slack = tol.optimization;
    let budget = settings.attainment_budget;
    let st = attainment_sample_with(t, slack, budget, settings)?;
    let ss = attainment_sample_with(s, slack, budget, settings)?;
    let sum = attainment_sample_with(&(t + s), slack, budget, settings)?;
    if is_capped(&st, settings) || is_capped(&ss, settings) || is_capped(&sum, settings) {
        return Ok(Judgement::Inconclusive);
    }
    let common_t = st
        .vectors
        .iter()
        .filter(|x| quad(s, x.entries()).norm() >= ss.omega - slack);
    let common_s = ss
        .vectors
        .iter()
        .filter(|x| quad(t, x.entries()).norm() >= st.omega - slack);
    let deviation = real_part_deviation(t, s, common_t.chain(common_s).chain(sum.vectors.iter()));
    let scale = (st.omega * ss.omega).max(1.0);
    let premise = Status::from_deficit(deviation, tol.optimization * scale);
    premise_then(premise, || {
        let parallel = radius_parallel(t, s, tol.optimization, settings)?;
        let pythagorean = pythagorean_radius_orth(t, s, tol.optimization, settings)?;
        Ok(agreement(&parallel, &pythagorean, "T ∥ S vs T ⊥_p S"))
    })
}

fn judge_hermitian_skew_parallel(inst: &Instance, tol: &Tolerances, settings: &Settings) -> Result<Judgement> {
    let (t, s) = pair(inst)?;
    if t.hermitian_deviation() > tol.algebraic || (s + &s.adjoint()).max_entry().2 > tol.algebraic {
        return Ok(Judgement::Vacuous);
    }
    let parallel = radius_parallel(t, s, tol.optimization, settings)?;
    let pythagorean = pythagorean_radius_orth(t, s, tol.optimization, settings)?;
    Ok(agreement(&parallel, &pythagorean, "T ∥ S vs T ⊥_p S"))
}

fn judge_sum_difference_attainment(inst: &Instance, tol: &Tolerances, settings: &Settings) -> Result<Judgement> {
    let (t, s) = pair(inst)?;
    let slack = tol.optimization;
    let plus = t + s;
    let minus = t - s;
    let sp = attainment_sample_with(&plus, slack, settings.attainment_budget, settings)?;
    let sm = attainment_sample_with(&minus, slack, settings.attainment_budget, settings)?;
    if is_capped(&sp, settings) || is_capped(&sm, settings) {
        return Ok(Judgement::Inconclusive);
    }
    let scale = (omega(t, settings)? * omega(s, settings)?).max(1.0);
    let deviation = real_part_deviation(t, s, sp.vectors.iter().chain(&sm.vectors));
    let re_condition = verdict(
        Status::from_deficit(deviation, tol.optimization * scale),
        -deviation,
        tol.optimization * scale,
    );
    let radii = equality(sp.omega, sm.omega, tol.optimization);
    let sets = attainment_sets_equal(&plus, &minus, slack, settings)?;
    let equal = verdict(both(radii.status, sets.status), radii.margin, tol.optimization);
    Ok(agreement(&equal, &re_condition, "equal radii and sets vs Re-condition"))
}

fn judge_sum_difference_parallel(inst: &Instance, tol: &Tolerances, settings: &Settings) -> Result<Judgement> {
    let (t, s) = pair(inst)?;
    let plus = t + s;
    let minus = t - s;
    let radii = equality(omega(&plus, settings)?, omega(&minus, settings)?, tol.optimization);
    let pythagorean = pythagorean_radius_orth(t, s, tol.optimization, settings)?;
    premise_then(both(radii.status, pythagorean.status), || {
        let direct = radius_parallel(t, s, tol.optimization, settings)?;
        let combined = radius_parallel(&plus, &minus, tol.optimization, settings)?;
        Ok(agreement(&direct, &combined, "T ∥ S vs T+S ∥ T−S"))
    })
}

fn judge_sum_difference_pythagorean(inst: &Instance, tol: &Tolerances, settings: &Settings) -> Result<Judgement> {
    let (t, s) = pair(inst)?;
    let plus = t + s;
    let minus = t - s;
    let first = radius_parallel(s, t, tol.optimization, settings)?.status;
    let premise = if first == Status::Fails {
        Status::Fails
    } else {
        both(
            first,
            radius_parallel(&plus, &minus, tol.optimization, settings)?.status,
        )
    };
    premise_then(premise, || {
        let pythagorean = pythagorean_radius_orth(t, s, tol.optimization, settings)?;
        let radii = equality(omega(&plus, settings)?, omega(&minus, settings)?, tol.optimization);
        Ok(agreement(&pythagorean, &radii, "T ⊥_p S vs ω(T+S) = ω(T−S)"))
    })
}
