//! Fixed examples with known outcomes. Each check is one trial of its
//! report; a mismatch (or an error) is recorded as a violation.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::f64::consts::TAU;

use num_complex::Complex64;
#[allow(unused_imports)] // shadowed by inherent f64 methods when std is linked
use num_traits::Float;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{find_claim, ClaimKind, ClaimReport, Instance, Judgement, Tolerances};
use crate::linalg::DenseMatrix;
use crate::orthogonality::{
    attainment_sets_equal, birkhoff_radius_orth, birkhoff_witness_rechecks, certify_orth_attainment,
    pythagorean_radius_orth, usual_orthogonal, Status, Verdict, Witness,
};
use crate::parallelism::{parallel_witness_search, radius_parallel, triangle_equality, witness_parallel};
use crate::radius::{radius_2x2_triangular, radius_oracle_2x2, RadiusSolver};
use crate::{Result, Settings};

use ClaimKind::{DerivedFixture, ReferenceFixture, SearchTarget};

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn real(rows: &[&[f64]]) -> DenseMatrix {
    DenseMatrix::from_real_rows(rows).expect("fixture matrix")
}

fn fail(margin: f64, detail: String) -> Judgement {
    Judgement::Violated {
        margin: -margin.abs().max(f64::MIN_POSITIVE),
        detail,
    }
}

fn expect_close(label: &str, got: f64, want: f64, tol: f64) -> Judgement {
    let gap = (got - want).abs();
    if gap <= tol {
        Judgement::Supported
    } else {
        fail(gap, format!("{label}: got {got:.15}, expected {want:.15}"))
    }
}

fn expect_status(label: &str, v: &Verdict, want: Status) -> Judgement {
    if v.status == want {
        Judgement::Supported
    } else {
        fail(
            v.margin,
            format!(
                "{label}: {} (margin {:e}), expected {}",
                v.status.as_str(),
                v.margin,
                want.as_str()
            ),
        )
    }
}

fn expect(label: &str, ok: bool) -> Judgement {
    if ok {
        Judgement::Supported
    } else {
        fail(1.0, format!("{label}: check failed"))
    }
}

/// First violation, else inconclusive if any, else supported.
fn all(judgements: impl IntoIterator<Item = Judgement>) -> Judgement {
    let mut out = Judgement::Supported;
    for j in judgements {
        match j {
            Judgement::Violated { .. } => return j,
            Judgement::Inconclusive => out = Judgement::Inconclusive,
            _ => {}
        }
    }
    out
}

struct Fixture {
    report: ClaimReport,
}

impl Fixture {
    fn new(id: &str, kind: ClaimKind) -> Self {
        Fixture {
            report: ClaimReport::new(id, kind),
        }
    }

    fn check(&mut self, instance: Instance, outcome: impl FnOnce(&Instance) -> Result<Judgement>) {
        let trial = self.report.trials + self.report.vacuous;
        let judgement = outcome(&instance).unwrap_or_else(|e| fail(1.0, format!("error: {e}")));
        self.report.record(judgement, trial, &instance);
    }
}

fn pair(variant: &str, t: DenseMatrix, s: DenseMatrix) -> Instance {
    Instance::new(variant).with("T", t).with("S", s)
}

fn ts(inst: &Instance) -> Result<(&DenseMatrix, &DenseMatrix)> {
    Ok((inst.get("T")?, inst.get("S")?))
}

/// Replays every fixed example and returns one report per group.
pub fn run_fixture_suite(settings: &Settings) -> Vec<ClaimReport> {
    let tol = Tolerances::from_settings(settings);
    let solver = RadiusSolver::from_settings(settings);
    let omega = |m: &DenseMatrix| solver.omega(m);
    let opt = tol.optimization;
    let half_root_two = (1.0 + 2.0.sqrt()) / 2.0;
    let half_root_five = 5.0.sqrt() / 2.0;
    let mut reports = Vec::new();

    // closed-form values of the 2×2 triangular radius
    let mut f = Fixture::new("closed_form_values", ReferenceFixture);
    for (a, b, d, want) in [
        (0.0, -1.0, 1.0, half_root_two),
        (0.0, 1.0, -1.0, half_root_two),
        (1.0, 1.0, -1.0, half_root_five),
    ] {
        let m = real(&[&[a, b], &[0.0, d]]);
        f.check(Instance::new("triangular").with("T", m), |_| {
            Ok(expect_close(
                "closed form",
                radius_2x2_triangular(c(a, 0.0), c(b, 0.0), c(d, 0.0)),
                want,
                1e-12,
            ))
        });
    }
    reports.push(f.report);

    let mut f = Fixture::new("radius_values", ReferenceFixture);
    for (m, want) in [
        (real(&[&[0.0, -1.0], &[0.0, 1.0]]), half_root_two),
        (real(&[&[0.0, 1.0], &[0.0, -1.0]]), half_root_two),
        (real(&[&[1.0, 1.0], &[0.0, -1.0]]), half_root_five),
        (real(&[&[1.0, 0.0], &[0.0, -1.0]]), 1.0),
        (DenseMatrix::identity(3), 1.0),
        (real(&[&[0.0, 1.0], &[0.0, 0.0]]), 0.5),
    ] {
        f.check(Instance::new("radius").with("T", m), |inst| {
            Ok(expect_close("ω", omega(inst.get("T")?)?, want, 1e-9))
        });
    }
    reports.push(f.report);

    // usual orthogonality without radius Birkhoff orthogonality
    let mut f = Fixture::new("ex-usual-not-wB", ReferenceFixture);
    let s = real(&[&[0.0, -1.0], &[0.0, 1.0]]);
    let t = real(&[&[0.0, 1.0], &[0.0, 1.0]]);
    f.check(pair("usual", t.clone(), s.clone()), |inst| {
        let (t, s) = ts(inst)?;
        Ok(expect_status(
            "S ⊥ T",
            &usual_orthogonal(s, t, tol.algebraic)?,
            Status::Holds,
        ))
    });
    f.check(pair("birkhoff", t.clone(), s.clone()), |inst| {
        let (t, s) = ts(inst)?;
        let v = birkhoff_radius_orth(s, t, opt, settings)?;
        Ok(all([
            expect_status("S ⊥_{ωB} T", &v, Status::Fails),
            expect("witness λ re-checks", birkhoff_witness_rechecks(s, t, &v, settings)?),
        ]))
    });
    f.check(pair("value", t, s), |inst| {
        let (t, s) = ts(inst)?;
        Ok(all([
            expect_close("ω(S)", omega(s)?, half_root_two, 1e-9),
            expect_close("ω(S − T)", omega(&(s - t))?, 1.0, 1e-9),
        ]))
    });
    reports.push(f.report);

    // radius Birkhoff orthogonality is not symmetric
    let mut f = Fixture::new("ex-nonsymmetry", ReferenceFixture);
    let t = real(&[&[1.0, 0.0], &[0.0, 0.0]]);
    let s = real(&[&[0.0, 1.0], &[0.0, -1.0]]);
    f.check(pair("forward", t.clone(), s.clone()), |inst| {
        let (t, s) = ts(inst)?;
        Ok(expect_status(
            "T ⊥_{ωB} S",
            &birkhoff_radius_orth(t, s, opt, settings)?,
            Status::Holds,
        ))
    });
    f.check(pair("backward", t.clone(), s.clone()), |inst| {
        let (t, s) = ts(inst)?;
        let v = birkhoff_radius_orth(s, t, opt, settings)?;
        Ok(all([
            expect_status("S ⊥_{ωB} T", &v, Status::Fails),
            expect("witness λ re-checks", birkhoff_witness_rechecks(s, t, &v, settings)?),
        ]))
    });
    f.check(pair("values", t.clone(), s.clone()), |inst| {
        let (t, s) = ts(inst)?;
        Ok(all([
            expect_close("ω(T)", omega(t)?, 1.0, 1e-9),
            expect_close("ω(S)", omega(s)?, half_root_two, 1e-9),
            expect_close("ω(S + T)", omega(&(s + t))?, half_root_five, 1e-6),
        ]))
    });
    // the displayed formula for ω(T + λS) is exact for real λ
    f.check(pair("formula", t, s), |inst| {
        let (t, s) = ts(inst)?;
        let mut checks = Vec::new();
        for k in 0..20 {
            let lambda = -3.0 + 6.0 * k as f64 / 19.0;
            let want = 0.5 * (1.0 - lambda).abs() + 0.5 * ((1.0 + lambda).powi(2) + lambda * lambda).sqrt();
            checks.push(expect_close(
                "ω(T + λS)",
                omega(&t.add_scaled(c(lambda, 0.0), s))?,
                want,
                1e-6,
            ));
            checks.push(expect("ω(T + λS) ≥ ω(T)", want >= 1.0 - 1e-12));
        }
        Ok(all(checks))
    });
    reports.push(f.report);

    // the positivity assumption of the shift equivalence cannot be dropped
    let mut f = Fixture::new("ex-positivity-needed", ReferenceFixture);
    let t = real(&[&[1.0, 0.0], &[0.0, -1.0]]);
    let s = real(&[&[1.0, 1.0], &[0.0, 1.0]]);
    f.check(pair("unshifted", t.clone(), s.clone()), |inst| {
        let (t, s) = ts(inst)?;
        Ok(expect_status(
            "T ⊥_{ωB} S",
            &birkhoff_radius_orth(t, s, opt, settings)?,
            Status::Holds,
        ))
    });
    f.check(pair("shifted", t.clone(), s.clone()), |inst| {
        let (t, s) = ts(inst)?;
        let shifted = t + &DenseMatrix::identity(2);
        let v = birkhoff_radius_orth(&shifted, s, opt, settings)?;
        Ok(all([
            expect_status("T + I ⊥_{ωB} S", &v, Status::Fails),
            expect(
                "witness λ re-checks",
                birkhoff_witness_rechecks(&shifted, s, &v, settings)?,
            ),
            expect_close("ω(T + I)", omega(&shifted)?, 2.0, 1e-9),
        ]))
    });
    f.check(pair("formulas", t.clone(), s.clone()), |inst| {
        let (t, s) = ts(inst)?;
        let shifted = t + &DenseMatrix::identity(2);
        let mut checks = Vec::new();
        for k in 0..20 {
            let lambda = -3.0 + 6.0 * k as f64 / 19.0;
            let root = (4.0 + lambda * lambda).sqrt();
            let want_shifted = 0.5 * (2.0 + 2.0 * lambda).abs() + 0.5 * root;
            let want_plain = lambda.abs() + 0.5 * root;
            let l = c(lambda, 0.0);
            checks.push(expect_close(
                "ω(T + I + λS)",
                omega(&shifted.add_scaled(l, s))?,
                want_shifted,
                1e-6,
            ));
            checks.push(expect_close("ω(T + λS)", omega(&t.add_scaled(l, s))?, want_plain, 1e-6));
        }
        Ok(all(checks))
    });
    f.check(pair("minus_one", t, s), |inst| {
        let (t, s) = ts(inst)?;
        let value = omega(&(&(t + &DenseMatrix::identity(2)) - s))?;
        Ok(all([
            expect_close("ω(T + I − S)", value, half_root_five, 1e-9),
            expect("ω(T + I − S) < ω(T + I)", value < 2.0),
        ]))
    });
    reports.push(f.report);

    let mut f = Fixture::new("certifier_fixtures", ReferenceFixture);
    for (variant, t, s, want) in [
        (
            "nonsymmetry",
            real(&[&[1.0, 0.0], &[0.0, 0.0]]),
            real(&[&[0.0, 1.0], &[0.0, -1.0]]),
            Status::Holds,
        ),
        (
            "identity",
            DenseMatrix::identity(2),
            DenseMatrix::identity(2),
            Status::Fails,
        ),
        (
            "positivity",
            real(&[&[1.0, 0.0], &[0.0, -1.0]]),
            real(&[&[1.0, 1.0], &[0.0, 1.0]]),
            Status::Holds,
        ),
    ] {
        f.check(pair(variant, t, s), |inst| {
            let (t, s) = ts(inst)?;
            let cert = certify_orth_attainment(t, s, 360, opt, settings)?;
            let decider = birkhoff_radius_orth(t, s, opt, settings)?;
            Ok(all([
                expect_status("certifier", &cert, want),
                expect_status("decider", &decider, want),
            ]))
        });
    }
    reports.push(f.report);

    // known candidate counterexamples; a violation here is a finding
    let mut f = Fixture::new("remark_2_9_candidates", SearchTarget);
    let judge_positive_pair = |inst: &Instance| find_claim("remark_2_9")?.judge(inst, &tol, settings);
    f.check(
        pair(
            "positive_pair",
            real(&[&[1.0, 0.0], &[0.0, 0.0]]),
            real(&[&[0.0, 0.0], &[0.0, 1.0]]),
        ),
        judge_positive_pair,
    );
    f.check(
        pair("positive_pair", DenseMatrix::identity(2), DenseMatrix::identity(2)),
        judge_positive_pair,
    );
    f.check(
        pair(
            "additivity",
            DenseMatrix::identity(2),
            real(&[&[1.0, 0.0], &[0.0, 0.0]]),
        )
        .with("U", real(&[&[0.0, 0.0], &[0.0, 1.0]])),
        judge_positive_pair,
    );
    reports.push(f.report);

    // λ-grids evaluated with the brute-force 2×2 radius
    let mut f = Fixture::new("birkhoff_grid_oracle", DerivedFixture);
    for (variant, t, s, holds) in [
        (
            "nonsymmetry",
            real(&[&[1.0, 0.0], &[0.0, 0.0]]),
            real(&[&[0.0, 1.0], &[0.0, -1.0]]),
            true,
        ),
        (
            "positive_pair",
            real(&[&[1.0, 0.0], &[0.0, 0.0]]),
            real(&[&[0.0, 0.0], &[0.0, 1.0]]),
            true,
        ),
        ("identity", DenseMatrix::identity(2), DenseMatrix::identity(2), false),
    ] {
        f.check(pair(variant, t, s), |inst| {
            let (t, s) = ts(inst)?;
            let base = radius_oracle_2x2(t, 200, 200)?;
            let mut min = f64::INFINITY;
            for i in 0..13 {
                for j in 0..13 {
                    let lambda = c(-3.0 + 0.5 * i as f64, -3.0 + 0.5 * j as f64);
                    min = min.min(radius_oracle_2x2(&t.add_scaled(lambda, s), 200, 200)?);
                }
            }
            let decider = birkhoff_radius_orth(t, s, opt, settings)?;
            Ok(if holds {
                all([
                    expect("grid minimum ≥ ω(T)", min >= base - 1e-4),
                    expect_status("decider", &decider, Status::Holds),
                ])
            } else {
                all([
                    expect("grid minimum < ω(T)", min < base - 1e-2),
                    expect_status("decider", &decider, Status::Fails),
                ])
            })
        });
    }
    reports.push(f.report);

    let mut f = Fixture::new("attainment_fixtures", DerivedFixture);
    for (variant, t, s, want) in [
        (
            "identical",
            real(&[&[1.0, 0.0], &[0.0, 0.0]]),
            real(&[&[1.0, 0.0], &[0.0, 0.0]]),
            Status::Holds,
        ),
        (
            "orthogonal_maximizers",
            real(&[&[1.0, 0.0], &[0.0, 0.0]]),
            real(&[&[0.0, 0.0], &[0.0, 1.0]]),
            Status::Fails,
        ),
        (
            "scaled",
            real(&[&[1.0, 0.0], &[0.0, 0.0]]),
            real(&[&[2.0, 0.0], &[0.0, 0.0]]),
            Status::Holds,
        ),
    ] {
        f.check(pair(variant, t, s), |inst| {
            let (t, s) = ts(inst)?;
            Ok(expect_status(
                "attainment sets",
                &attainment_sets_equal(t, s, opt, settings)?,
                want,
            ))
        });
    }
    reports.push(f.report);

    let mut f = Fixture::new("pythagorean_fixtures", DerivedFixture);
    f.check(
        pair("zero", real(&[&[1.0, 2.0], &[0.0, -1.0]]), DenseMatrix::zeros(2)),
        |inst| {
            let (t, s) = ts(inst)?;
            Ok(expect_status(
                "T ⊥_{ωp} 0",
                &pythagorean_radius_orth(t, s, opt, settings)?,
                Status::Holds,
            ))
        },
    );
    f.check(
        pair("identity", DenseMatrix::identity(2), DenseMatrix::identity(2)),
        |inst| {
            let (t, s) = ts(inst)?;
            Ok(expect_status(
                "I ⊥_{ωp} I",
                &pythagorean_radius_orth(t, s, opt, settings)?,
                Status::Fails,
            ))
        },
    );
    f.check(
        pair(
            "hermitian_skew",
            real(&[&[1.0, 0.0], &[0.0, 0.0]]),
            real(&[&[0.0, 1.0], &[-1.0, 0.0]]),
        ),
        |inst| {
            let (t, s) = ts(inst)?;
            let sum = t + s;
            let oracle = radius_oracle_2x2(&sum, 2000, 2000)?;
            let want = if (oracle * oracle - 2.0).abs() > 1e-3 {
                Status::Fails
            } else {
                Status::Holds
            };
            Ok(all([
                expect_close("ω(T + S) vs oracle", omega(&sum)?, oracle, 1e-4),
                expect_status("T ⊥_{ωp} S", &pythagorean_radius_orth(t, s, opt, settings)?, want),
            ]))
        },
    );
    reports.push(f.report);

    let mut f = Fixture::new("parallel_fixtures", DerivedFixture);
    let i2 = DenseMatrix::identity(2);
    f.check(pair("rotated_identity", i2.clone(), &i2 * c(0.0, 1.0)), |inst| {
        let (t, s) = ts(inst)?;
        Ok(expect_status(
            "I ∥ iI",
            &radius_parallel(t, s, opt, settings)?,
            Status::Holds,
        ))
    });
    f.check(pair("identity", i2.clone(), i2.clone()), |inst| {
        let (t, s) = ts(inst)?;
        let v = radius_parallel(t, s, opt, settings)?;
        Ok(all([expect_status("I ∥ I", &v, Status::Holds), phase_near_zero(&v)]))
    });
    let base = real(&[&[1.0, 2.0], &[0.0, -1.0]]);
    f.check(pair("positive_multiple", base.clone(), &base * c(2.0, 0.0)), |inst| {
        let (t, s) = ts(inst)?;
        let v = radius_parallel(t, s, opt, settings)?;
        Ok(all([expect_status("T ∥ 2T", &v, Status::Holds), phase_near_zero(&v)]))
    });
    let e1 = real(&[&[1.0, 0.0], &[0.0, 0.0]]);
    let e2 = real(&[&[0.0, 0.0], &[0.0, 1.0]]);
    f.check(pair("orthogonal_projections", e1.clone(), e2.clone()), |inst| {
        let (t, s) = ts(inst)?;
        let mut max = 0.0f64;
        for k in 0..64 {
            let phase = Complex64::from_polar(1.0, TAU * k as f64 / 64.0);
            max = max.max(radius_oracle_2x2(&t.add_scaled(phase, s), 200, 200)?);
        }
        Ok(all([
            expect_close("oracle max_φ ω(T + e^{iφ}S)", max, 1.0, 1e-4),
            expect_status("T ∥ S", &radius_parallel(t, s, opt, settings)?, Status::Fails),
            expect_status(
                "common maximizer",
                &witness_parallel(t, s, opt, settings)?,
                Status::Fails,
            ),
        ]))
    });
    f.check(pair("witness_values", e1.clone(), e2.clone()), |inst| {
        let (t, s) = ts(inst)?;
        let (same, _) = parallel_witness_search(t, t, settings.ascent_restarts, settings)?;
        let (cross, _) = parallel_witness_search(t, s, settings.ascent_restarts, settings)?;
        // g(x) = |x₁|²·|x₂|² ≤ ¼
        Ok(all([
            expect_close("max g, equal", same, 1.0, 1e-6),
            expect_close("max g, crossed", cross, 0.25, 1e-6),
        ]))
    });
    f.check(
        pair("nonsymmetry", e1.clone(), real(&[&[0.0, 1.0], &[0.0, -1.0]])),
        |inst| {
            let (t, s) = ts(inst)?;
            let sweep = radius_parallel(t, s, opt, settings)?;
            let witness = witness_parallel(t, s, opt, settings)?;
            let mut max = 0.0f64;
            for k in 0..64 {
                let phase = Complex64::from_polar(1.0, TAU * k as f64 / 64.0);
                max = max.max(radius_oracle_2x2(&t.add_scaled(phase, s), 200, 200)?);
            }
            let gap = 1.0 + (1.0 + 2.0.sqrt()) / 2.0 - max;
            let want = if gap > 1e-2 { Status::Fails } else { Status::Holds };
            Ok(all([
                expect_status("phase sweep", &sweep, want),
                expect_status("common maximizer", &witness, want),
            ]))
        },
    );
    reports.push(f.report);

    let mut f = Fixture::new("triangle_fixtures", DerivedFixture);
    f.check(pair("equal", base.clone(), base.clone()), |inst| {
        let (t, s) = ts(inst)?;
        Ok(expect_status(
            "ω(2T) = 2ω(T)",
            &triangle_equality(t, s, opt, settings)?.combined,
            Status::Holds,
        ))
    });
    f.check(pair("orthogonal_projections", e1.clone(), e2.clone()), |inst| {
        let (t, s) = ts(inst)?;
        Ok(expect_status(
            "ω(I) = 2",
            &triangle_equality(t, s, opt, settings)?.combined,
            Status::Fails,
        ))
    });
    f.check(
        pair("projection_and_jordan", e1.clone(), real(&[&[1.0, 1.0], &[0.0, 0.0]])),
        |inst| {
            let (t, s) = ts(inst)?;
            let te = triangle_equality(t, s, opt, settings)?;
            let oracle = radius_oracle_2x2(s, 2000, 2000)?;
            let agree = te.direct.status == te.certificate.status;
            Ok(all([
                expect_close(
                    "ω(S) vs oracle",
                    radius_2x2_triangular(c(1.0, 0.0), c(1.0, 0.0), c(0.0, 0.0)),
                    oracle,
                    1e-4,
                ),
                expect("direct and certificate agree", agree),
            ]))
        },
    );
    reports.push(f.report);

    let mut f = Fixture::new("positive_shift_fixtures", DerivedFixture);
    let judge_shift = |inst: &Instance| find_claim("positive_shift")?.judge(inst, &tol, settings);
    f.check(
        pair("zero", DenseMatrix::zeros(2), real(&[&[1.0, 2.0], &[0.0, -1.0]])),
        judge_shift,
    );
    f.check(
        pair("projection", e1.clone(), real(&[&[0.0, 1.0], &[0.0, -1.0]])),
        judge_shift,
    );
    reports.push(f.report);

    reports.push(closed_form_scope(settings));
    reports
}

fn phase_near_zero(v: &Verdict) -> Judgement {
    match &v.witness {
        Some(Witness::Parallel(w)) => {
            let phase = ((w.lambda_phase % TAU) + TAU) % TAU;
            let gap = phase.min(TAU - phase);
            expect_close("maximizing phase", gap, 0.0, 1e-3)
        }
        _ => fail(1.0, "no phase witness".into()),
    }
}

/// `½|a+d| + ½√(|a−d|² + |b|²)` is the centre modulus plus the major
/// semi-axis of the elliptical range: an upper bound for `ω`, exact when
/// `a·conj(d)` is real.
fn closed_form_scope(settings: &Settings) -> ClaimReport {
    let solver = RadiusSolver::from_settings(settings);
    let mut f = Fixture::new("closed_form_scope", DerivedFixture);
    let tri = |a: Complex64, b: Complex64, d: Complex64| {
        DenseMatrix::from_row_major(2, alloc::vec![a, b, Complex64::new(0.0, 0.0), d]).expect("2x2")
    };
    let i = c(0.0, 1.0);
    f.check(
        Instance::new("diag_one_i").with("T", tri(c(1.0, 0.0), c(0.0, 0.0), i)),
        |inst| {
            let w = solver.omega(inst.get("T")?)?;
            let closed = radius_2x2_triangular(c(1.0, 0.0), c(0.0, 0.0), i);
            Ok(all([
                expect_close("ω(diag(1, i))", w, 1.0, 1e-9),
                expect_close("closed form − ω", closed - w, 2.0.sqrt() - 1.0, 1e-9),
            ]))
        },
    );
    let mut rng = ChaCha8Rng::seed_from_u64(settings.seed);
    let gauss = |rng: &mut ChaCha8Rng| c(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0));
    for _ in 0..25 {
        let (a, b, d) = (gauss(&mut rng), gauss(&mut rng), gauss(&mut rng));
        f.check(Instance::new("complex").with("T", tri(a, b, d)), |inst| {
            let w = solver.omega(inst.get("T")?)?;
            Ok(expect("closed form ≥ ω", radius_2x2_triangular(a, b, d) >= w - 1e-9))
        });
    }
    for _ in 0..25 {
        let phase = Complex64::from_polar(1.0, rng.random_range(0.0..TAU));
        let a = phase * rng.random_range(-1.0..1.0);
        let d = phase * rng.random_range(-1.0..1.0);
        let b = gauss(&mut rng);
        f.check(Instance::new("collinear").with("T", tri(a, b, d)), |inst| {
            let w = solver.omega(inst.get("T")?)?;
            Ok(expect_close("closed form", radius_2x2_triangular(a, b, d), w, 1e-9))
        });
    }
    f.report
}
