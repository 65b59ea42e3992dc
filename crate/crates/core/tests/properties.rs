use num_complex::Complex64;
use omegaorth_core::claims::ensemble::{hermitian_part, random_unitary};
use omegaorth_core::claims::{check_claim, Ensemble, EnsembleKind};
use omegaorth_core::linalg::{hermitian_eigs, operator_norm, quad_form, DenseMatrix, UnitVector};
use omegaorth_core::radius::RadiusSolver;
use omegaorth_core::Settings;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn entries(n: usize) -> impl Strategy<Value = Vec<Complex64>> {
    prop::collection::vec((-2.0..2.0f64, -2.0..2.0f64), n * n)
        .prop_map(|v| v.into_iter().map(|(re, im)| Complex64::new(re, im)).collect())
}

fn matrix() -> impl Strategy<Value = DenseMatrix> {
    (1usize..=4).prop_flat_map(|n| entries(n).prop_map(move |e| DenseMatrix::from_row_major(n, e).unwrap()))
}

fn matrix_pair() -> impl Strategy<Value = (DenseMatrix, DenseMatrix)> {
    (1usize..=4).prop_flat_map(|n| {
        (entries(n), entries(n)).prop_map(move |(a, b)| {
            (
                DenseMatrix::from_row_major(n, a).unwrap(),
                DenseMatrix::from_row_major(n, b).unwrap(),
            )
        })
    })
}

fn scalar() -> impl Strategy<Value = Complex64> {
    (-3.0..3.0f64, -3.0..3.0f64).prop_map(|(re, im)| Complex64::new(re, im))
}

fn omega(m: &DenseMatrix) -> f64 {
    RadiusSolver::default().omega(m).unwrap()
}

fn close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * (1.0 + a.abs().max(b.abs()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn adjoint_is_an_involution(t in matrix()) {
        prop_assert_eq!(t.adjoint().adjoint(), t);
    }

    #[test]
    fn eigendecomposition_reconstructs(t in matrix()) {
        let h = hermitian_part(&t);
        let eig = hermitian_eigs(&h).unwrap();
        let mut rebuilt = DenseMatrix::zeros(h.dim());
        for (value, v) in eig.eigenvalues.iter().zip(&eig.eigenvectors) {
            rebuilt = rebuilt.add_scaled(Complex64::new(*value, 0.0), &DenseMatrix::outer(v, v).unwrap());
        }
        prop_assert!((&rebuilt - &h).frobenius_norm() <= 1e-10 * (1.0 + h.frobenius_norm()));
        prop_assert!(eig.eigenvalues.windows(2).all(|w| w[0] >= w[1]));
    }

    #[test]
    fn operator_norm_axioms((t, s) in matrix_pair(), c in scalar()) {
        prop_assert!(operator_norm(&(&t + &s)) <= operator_norm(&t) + operator_norm(&s) + 1e-10);
        prop_assert!(close(operator_norm(&(&t * c)), c.norm() * operator_norm(&t), 1e-10));
        prop_assert!(operator_norm(&t) <= t.frobenius_norm() + 1e-10);
    }

    #[test]
    fn adjoint_conjugates_the_quadratic_form(t in matrix(), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = omegaorth_core::claims::ensemble::random_unit_vector(t.dim(), &mut rng).unwrap();
        let q = quad_form(&t, &x).unwrap();
        let q_adj = quad_form(&t.adjoint(), &x).unwrap();
        prop_assert!((q.conj() - q_adj).norm() <= 1e-12 * (1.0 + q.norm()));
        prop_assert!(q.norm() <= omega(&t) + 1e-9);
    }

    #[test]
    fn radius_is_a_norm((t, s) in matrix_pair(), c in scalar()) {
        let (wt, ws) = (omega(&t), omega(&s));
        prop_assert!(wt >= 0.0);
        prop_assert!(omega(&(&t + &s)) <= wt + ws + 1e-9);
        prop_assert!(close(omega(&(&t * c)), c.norm() * wt, 1e-9));
        prop_assert!(close(omega(&t.adjoint()), wt, 1e-9));
    }

    #[test]
    fn radius_sandwich(t in matrix()) {
        let (w, n) = (omega(&t), operator_norm(&t));
        prop_assert!(w <= n + 1e-9);
        prop_assert!(n <= 2.0 * w + 1e-9);
    }

    #[test]
    fn radius_is_unitarily_invariant(t in matrix(), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let u = random_unitary(t.dim(), &mut rng).unwrap();
        let rotated = &(&u * &t) * &u.adjoint();
        prop_assert!(close(omega(&rotated), omega(&t), 1e-9));
    }

    #[test]
    fn normalized_vectors_have_unit_norm(v in prop::collection::vec((-2.0..2.0f64, -2.0..2.0f64), 1..5)) {
        let v: Vec<Complex64> = v.into_iter().map(|(re, im)| Complex64::new(re, im)).collect();
        if let Ok(u) = UnitVector::new(v) {
            prop_assert!((u.norm() - 1.0).abs() < 1e-12);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    #[test]
    fn claim_reports_are_reproducible(seed in any::<u64>(), pick in 0usize..4) {
        let id = ["adjoint_stability", "parallel_symmetry", "positive_shift", "remark_2_9"][pick];
        let kind = if id == "remark_2_9" { EnsembleKind::PositiveSemidefinite } else { EnsembleKind::General };
        let ens = Ensemble::new(kind, 2, seed, 4);
        let s = Settings::default();
        prop_assert_eq!(check_claim(id, &ens, &s).unwrap(), check_claim(id, &ens, &s).unwrap());
    }
}
