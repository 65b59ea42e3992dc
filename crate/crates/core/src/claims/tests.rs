use super::*;
use alloc::collections::BTreeSet;

fn settings() -> Settings {
    Settings::default()
}

#[test]
fn registry_ids_are_unique() {
    let ids: BTreeSet<_> = registry().iter().map(|c| c.id).collect();
    assert_eq!(ids.len(), registry().len());
    for id in ["eq_1_1_sandwich", "nondegeneracy", "remark_2_9"] {
        assert!(find_claim(id).is_ok(), "{id}");
    }
    for id in PARALLEL_SUITE {
        assert!(find_claim(id).is_ok(), "{id}");
    }
}

#[test]
fn unknown_claim_is_an_error() {
    assert!(matches!(find_claim("no_such_claim"), Err(Error::UnknownClaim)));
    let ens = Ensemble::new(EnsembleKind::General, 2, 1, 1);
    assert!(check_claim("no_such_claim", &ens, &settings()).is_err());
}

#[test]
fn report_counts_add_up() {
    let s = settings();
    for id in ["eq_1_1_sandwich", "homogeneity", "self_adjoint_birkhoff"] {
        let claim = find_claim(id).unwrap();
        let report = check_claim(id, &claim.default_ensemble(7, 8), &s).unwrap();
        assert_eq!(report.trials + report.vacuous, 8, "{id}");
        assert_eq!(
            report.supported + report.violated + report.inconclusive,
            report.trials,
            "{id}"
        );
        assert_eq!(report.violated == 0, report.worst_witness.is_none(), "{id}");
    }
}

#[test]
fn runs_are_reproducible() {
    let s = settings();
    let ens = Ensemble::new(EnsembleKind::General, 2, 42, 6);
    let a = check_claim("adjoint_stability", &ens, &s).unwrap();
    let b = check_claim("adjoint_stability", &ens, &s).unwrap();
    assert_eq!(a, b);
    let claim = find_claim("certifier_consistency").unwrap();
    assert_eq!(
        claim.generate(&ens, 3, &s).unwrap(),
        claim.generate(&ens, 3, &s).unwrap()
    );
}

#[test]
fn positive_pair_search_finds_a_witness_that_revalidates() {
    let s = settings();
    let ens = Ensemble::new(EnsembleKind::PositiveSemidefinite, 2, s.seed, 8);
    let report = counterexample_search("remark_2_9", &ens, 8, &s).unwrap();
    let witness = report.worst_witness.expect("the compressed pair is orthogonal");
    assert!(witness.margin < 0.0);
    assert!(find_claim("remark_2_9").unwrap().revalidate(&witness, &s).unwrap());
}

#[test]
fn merged_report_sums_counts() {
    let mut a = ClaimReport::new("a", ClaimKind::Property);
    let mut b = ClaimReport::new("b", ClaimKind::Property);
    let inst = Instance::new("x").with("T", DenseMatrix::identity(1));
    a.record(Judgement::Supported, 0, &inst);
    a.record(Judgement::Vacuous, 1, &inst);
    b.record(
        Judgement::Violated {
            margin: -2.0,
            detail: "worse".into(),
        },
        0,
        &inst,
    );
    b.record(
        Judgement::Violated {
            margin: -1.0,
            detail: "milder".into(),
        },
        1,
        &inst,
    );
    let m = ClaimReport::merge("m", ClaimKind::Property, &[a, b]);
    assert_eq!((m.trials, m.supported, m.violated, m.vacuous), (3, 1, 2, 1));
    assert_eq!(m.worst_witness.unwrap().detail, "worse");
}

#[test]
fn fixture_suite_passes() {
    let reports = run_fixture_suite(&settings());
    for r in &reports {
        match r.kind {
            ClaimKind::SearchTarget => assert!(r.violated > 0, "{}", r.claim_id),
            _ => assert!(
                r.is_clean() && r.inconclusive == 0,
                "{}: {:?}",
                r.claim_id,
                r.worst_witness
            ),
        }
    }
}
