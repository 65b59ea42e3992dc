//! Falsification harness: replays the worked examples and property-tests
//! the known implications between the relations on seeded random ensembles.
//!
//! A claim is a pair of functions. `generate` builds the operators of one
//! trial from a per-trial random stream (often by construction, so that a
//! conditional statement's premise actually holds) and `judge` decides the
//! statement on those operators at given tolerances. Keeping the two apart
//! means a reported violation can be re-judged on exactly the same
//! matrices: the runner re-checks every violation at ten times tighter
//! tolerances and downgrades it to inconclusive if it does not persist.
//!
//! Trials whose premise fails are counted as vacuous, outside
//! `supported + violated + inconclusive = trials`.

mod catalog;
pub mod ensemble;
mod fixtures;

use alloc::string::{String, ToString};
use alloc::vec::Vec;

use num_complex::Complex64;

pub use ensemble::{Ensemble, EnsembleKind};
pub use fixtures::run_fixture_suite;

use crate::linalg::DenseMatrix;
use crate::orthogonality::{Status, Verdict};
use crate::{Error, Result, Settings};
use rand_chacha::ChaCha8Rng;

/// Factor by which tolerances shrink when a violation is re-checked.
pub const RECHECK_FACTOR: f64 = 10.0;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    /// For identities that hold to rounding error.
    pub algebraic: f64,
    /// For anything produced by an optimizer.
    pub optimization: f64,
}

impl Tolerances {
    pub fn from_settings(settings: &Settings) -> Self {
        Tolerances {
            algebraic: settings.tol_algebraic,
            optimization: settings.tol_opt,
        }
    }

    pub fn tightened(self, factor: f64) -> Self {
        Tolerances {
            algebraic: self.algebraic / factor,
            optimization: self.optimization / factor,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ClaimKind {
    /// A value or verdict printed in the source, replayed exactly.
    ReferenceFixture,
    /// A fixed example whose expected outcome is computed independently.
    DerivedFixture,
    /// A statement expected to hold on every trial.
    Property,
    /// A statement under suspicion; violations are recorded, not fatal.
    SearchTarget,
}

impl ClaimKind {
    pub fn as_str(self) -> &'static str {
        match self {
            ClaimKind::ReferenceFixture => "reference_fixture",
            ClaimKind::DerivedFixture => "derived_fixture",
            ClaimKind::Property => "property",
            ClaimKind::SearchTarget => "search_target",
        }
    }
}

/// Named operators of one trial. Scalars travel as 1×1 matrices.
#[derive(Debug, Clone, PartialEq)]
pub struct Instance {
    pub variant: String,
    pub matrices: Vec<(String, DenseMatrix)>,
}

impl Instance {
    pub fn new(variant: &str) -> Self {
        Instance {
            variant: variant.to_string(),
            matrices: Vec::new(),
        }
    }

    pub fn with(mut self, name: &str, m: DenseMatrix) -> Self {
        self.matrices.push((name.to_string(), m));
        self
    }

    pub fn with_scalar(self, name: &str, c: Complex64) -> Self {
        self.with(name, DenseMatrix::scalar(1, c))
    }

    pub fn get(&self, name: &str) -> Result<&DenseMatrix> {
        self.matrices
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, m)| m)
            .ok_or(Error::InvalidArgument("instance is missing an operator"))
    }

    pub fn scalar(&self, name: &str) -> Result<Complex64> {
        let m = self.get(name)?;
        if m.dim() != 1 {
            return Err(Error::InvalidArgument("expected a 1x1 scalar"));
        }
        Ok(m.get(0, 0))
    }
}

/// Outcome of judging one trial.
#[derive(Debug, Clone, PartialEq)]
pub enum Judgement {
    Supported,
    /// `margin` is negative; more negative means a clearer violation.
    Violated {
        margin: f64,
        detail: String,
    },
    Inconclusive,
    Vacuous,
}

/// The operators and numbers behind a reported violation.
#[derive(Debug, Clone, PartialEq)]
pub struct WitnessRecord {
    pub trial: usize,
    pub variant: String,
    pub matrices: Vec<(String, DenseMatrix)>,
    pub margin: f64,
    pub detail: String,
}

impl WitnessRecord {
    pub fn instance(&self) -> Instance {
        Instance {
            variant: self.variant.clone(),
            matrices: self.matrices.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ClaimReport {
    pub claim_id: String,
    pub kind: ClaimKind,
    /// Trials with a decidable premise: `supported + violated + inconclusive`.
    pub trials: usize,
    pub supported: usize,
    pub violated: usize,
    pub inconclusive: usize,
    /// Trials whose premise failed.
    pub vacuous: usize,
    /// The violation with the smallest margin.
    pub worst_witness: Option<WitnessRecord>,
}

impl ClaimReport {
    pub fn new(claim_id: &str, kind: ClaimKind) -> Self {
        ClaimReport {
            claim_id: claim_id.to_string(),
            kind,
            trials: 0,
            supported: 0,
            violated: 0,
            inconclusive: 0,
            vacuous: 0,
            worst_witness: None,
        }
    }

    pub fn record(&mut self, judgement: Judgement, trial: usize, instance: &Instance) {
        match judgement {
            Judgement::Vacuous => {
                self.vacuous += 1;
                return;
            }
            Judgement::Supported => self.supported += 1,
            Judgement::Inconclusive => self.inconclusive += 1,
            Judgement::Violated { margin, detail } => {
                self.violated += 1;
                let worse = self.worst_witness.as_ref().map_or(true, |w| margin < w.margin);
                if worse {
                    self.worst_witness = Some(WitnessRecord {
                        trial,
                        variant: instance.variant.clone(),
                        matrices: instance.matrices.clone(),
                        margin,
                        detail,
                    });
                }
            }
        }
        self.trials += 1;
    }

    /// Sums several reports under a new id. The worst witness is the one
    /// with the smallest margin.
    pub fn merge(claim_id: &str, kind: ClaimKind, reports: &[ClaimReport]) -> Self {
        let mut out = ClaimReport::new(claim_id, kind);
        for r in reports {
            out.trials += r.trials;
            out.supported += r.supported;
            out.violated += r.violated;
            out.inconclusive += r.inconclusive;
            out.vacuous += r.vacuous;
            if let Some(w) = &r.worst_witness {
                if out.worst_witness.as_ref().map_or(true, |o| w.margin < o.margin) {
                    out.worst_witness = Some(w.clone());
                }
            }
        }
        out
    }

    pub fn is_clean(&self) -> bool {
        self.violated == 0
    }
}

type Generate = fn(&mut ChaCha8Rng, &Ensemble, usize, &Settings) -> Result<Instance>;
type Judge = fn(&Instance, &Tolerances, &Settings) -> Result<Judgement>;

/// A registered statement.
#[derive(Clone, Copy)]
pub struct Claim {
    pub id: &'static str,
    pub kind: ClaimKind,
    pub statement: &'static str,
    /// Ensemble kind and dimension used by [`verify_suite`].
    pub default_kind: EnsembleKind,
    pub default_dim: usize,
    generate: Generate,
    judge: Judge,
}

impl core::fmt::Debug for Claim {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_struct("Claim")
            .field("id", &self.id)
            .field("kind", &self.kind)
            .finish()
    }
}

impl Claim {
    pub fn default_ensemble(&self, seed: u64, count: usize) -> Ensemble {
        Ensemble::new(self.default_kind, self.default_dim, seed, count)
    }

    pub fn generate(&self, ensemble: &Ensemble, trial: usize, settings: &Settings) -> Result<Instance> {
        let mut rng = ensemble.trial_rng(trial);
        (self.generate)(&mut rng, ensemble, trial, settings)
    }

    pub fn judge(&self, instance: &Instance, tol: &Tolerances, settings: &Settings) -> Result<Judgement> {
        (self.judge)(instance, tol, settings)
    }

    /// Judges one trial, re-checking a violation at tightened tolerances.
    pub fn run_trial(&self, ensemble: &Ensemble, trial: usize, settings: &Settings) -> Result<(Instance, Judgement)> {
        let instance = match self.generate(ensemble, trial, settings) {
            Ok(instance) => instance,
            Err(Error::NoConvergence { .. }) => return Ok((Instance::new("unconverged"), Judgement::Inconclusive)),
            Err(e) => return Err(e),
        };
        let tol = Tolerances::from_settings(settings);
        let judgement = match self.judge(&instance, &tol, settings) {
            Ok(Judgement::Violated { margin, detail }) => {
                match self.judge(&instance, &tol.tightened(RECHECK_FACTOR), settings) {
                    Ok(Judgement::Violated { .. }) => Judgement::Violated { margin, detail },
                    Ok(_) | Err(Error::NoConvergence { .. }) => Judgement::Inconclusive,
                    Err(e) => return Err(e),
                }
            }
            Ok(j) => j,
            Err(Error::NoConvergence { .. }) => Judgement::Inconclusive,
            Err(e) => return Err(e),
        };
        Ok((instance, judgement))
    }

    /// Re-judges a reported witness at tightened tolerances; true when the
    /// violation persists.
    pub fn revalidate(&self, witness: &WitnessRecord, settings: &Settings) -> Result<bool> {
        let tol = Tolerances::from_settings(settings).tightened(RECHECK_FACTOR);
        Ok(matches!(
            self.judge(&witness.instance(), &tol, settings)?,
            Judgement::Violated { .. }
        ))
    }
}

/// Every registered claim, in a fixed order.
pub fn registry() -> &'static [Claim] {
    catalog::CLAIMS
}

pub fn find_claim(id: &str) -> Result<&'static Claim> {
    registry().iter().find(|c| c.id == id).ok_or(Error::UnknownClaim)
}

fn run(
    claim: &Claim,
    ensemble: &Ensemble,
    budget: usize,
    settings: &Settings,
    stop_early: bool,
) -> Result<ClaimReport> {
    let mut report = ClaimReport::new(claim.id, claim.kind);
    for trial in 0..budget {
        let (instance, judgement) = claim.run_trial(ensemble, trial, settings)?;
        let violated = matches!(judgement, Judgement::Violated { .. });
        report.record(judgement, trial, &instance);
        if stop_early && violated {
            break;
        }
    }
    Ok(report)
}

/// Runs `ensemble.count` trials of a claim.
pub fn check_claim(claim_id: &str, ensemble: &Ensemble, settings: &Settings) -> Result<ClaimReport> {
    run(find_claim(claim_id)?, ensemble, ensemble.count, settings, false)
}

/// Runs up to `budget` trials, stopping at the first confirmed violation.
pub fn counterexample_search(
    claim_id: &str,
    ensemble: &Ensemble,
    budget: usize,
    settings: &Settings,
) -> Result<ClaimReport> {
    run(find_claim(claim_id)?, ensemble, budget, settings, true)
}

/// Both parts of the orthogonality-to-triangle-equality statement.
pub fn check_theorem_2_7(ensemble: &Ensemble, settings: &Settings) -> Result<ClaimReport> {
    check_claim("triangle_from_orthogonality", ensemble, settings)
}

/// Positive `T`: `T ⊥_{ωB} S` iff `T + I ⊥_{ωB} S`.
pub fn check_positive_shift(ensemble: &Ensemble, settings: &Settings) -> Result<ClaimReport> {
    check_claim("positive_shift", ensemble, settings)
}

/// Positive pairs are never orthogonal, and orthogonality is additive over
/// positive summands. Both are search targets.
pub fn check_remark_2_9(ensemble: &Ensemble, settings: &Settings) -> Result<ClaimReport> {
    check_claim("remark_2_9", ensemble, settings)
}

/// Claims tying parallelism to Pythagorean orthogonality and to the pair
/// `T ± S`, merged into one report.
pub const PARALLEL_SUITE: [&str; 4] = [
    "hermitian_skew_parallel",
    "sum_difference_attainment",
    "sum_difference_parallel",
    "sum_difference_pythagorean",
];

pub fn check_section3(ensemble: &Ensemble, settings: &Settings) -> Result<ClaimReport> {
    let reports = PARALLEL_SUITE
        .iter()
        .map(|id| check_claim(id, ensemble, settings))
        .collect::<Result<Vec<_>>>()?;
    Ok(ClaimReport::merge(
        "parallel_orthogonality_suite",
        ClaimKind::Property,
        &reports,
    ))
}

/// Fixture replay plus every registered claim on its default ensemble.
#[derive(Debug, Clone, PartialEq)]
pub struct SuiteReport {
    pub fixtures: Vec<ClaimReport>,
    pub claims: Vec<ClaimReport>,
}

impl SuiteReport {
    /// False when a fixture replaying a printed value or verdict is violated.
    pub fn reference_fixtures_pass(&self) -> bool {
        self.fixtures
            .iter()
            .chain(&self.claims)
            .filter(|r| r.kind == ClaimKind::ReferenceFixture)
            .all(ClaimReport::is_clean)
    }

    pub fn reports(&self) -> impl Iterator<Item = &ClaimReport> {
        self.fixtures.iter().chain(&self.claims)
    }
}

pub fn verify_suite(settings: &Settings, trials: usize) -> Result<SuiteReport> {
    let fixtures = run_fixture_suite(settings);
    let claims = registry()
        .iter()
        .map(|c| run(c, &c.default_ensemble(settings.seed, trials), trials, settings, false))
        .collect::<Result<Vec<_>>>()?;
    Ok(SuiteReport { fixtures, claims })
}

/// `Status` of a conjunction: fails if either fails, holds if both hold.
fn both(a: Status, b: Status) -> Status {
    match (a, b) {
        (Status::Fails, _) | (_, Status::Fails) => Status::Fails,
        (Status::Holds, Status::Holds) => Status::Holds,
        _ => Status::Inconclusive,
    }
}

/// `premise ⟹ conclusion`, where the conclusion is only evaluated when
/// the premise holds.
fn implication(premise: Status, conclusion: impl FnOnce() -> Result<Verdict>, detail: &str) -> Result<Judgement> {
    match premise {
        Status::Fails => Ok(Judgement::Vacuous),
        Status::Inconclusive => Ok(Judgement::Inconclusive),
        Status::Holds => {
            let v = conclusion()?;
            Ok(match v.status {
                Status::Holds => Judgement::Supported,
                Status::Inconclusive => Judgement::Inconclusive,
                Status::Fails => Judgement::Violated {
                    margin: -v.margin.abs(),
                    detail: alloc::format!("{detail}: conclusion fails with margin {:e}", v.margin),
                },
            })
        }
    }
}

/// Two procedures that must reach the same decision.
fn agreement(a: &Verdict, b: &Verdict, detail: &str) -> Judgement {
    match (a.status, b.status) {
        (Status::Inconclusive, _) | (_, Status::Inconclusive) => Judgement::Inconclusive,
        (x, y) if x == y => Judgement::Supported,
        (x, y) => Judgement::Violated {
            margin: -a.margin.abs().min(b.margin.abs()),
            detail: alloc::format!(
                "{detail}: {} (margin {:e}) vs {} (margin {:e})",
                x.as_str(),
                a.margin,
                y.as_str(),
                b.margin
            ),
        },
    }
}

#[cfg(test)]
mod tests;
