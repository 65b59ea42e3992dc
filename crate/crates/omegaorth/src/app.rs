//! Argument parsing and the subcommands.
//!
//! Exit codes: 0 holds or success, 1 fails (or a violated search / fixture
//! run), 2 usage, parse or lookup errors, 3 eigensolver non-convergence,
//! 4 inconclusive.

use std::ffi::OsString;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use omegaorth_core::claims::{self, Ensemble, EnsembleKind};
use omegaorth_core::linalg::operator_norm;
use omegaorth_core::orthogonality::{
    birkhoff_norm_orth, birkhoff_radius_orth, certify_orth_attainment, pythagorean_radius_orth, usual_orthogonal,
};
use omegaorth_core::parallelism::radius_parallel;
use omegaorth_core::radius::{boundary_with_angles, sandwich_margins, RadiusSolver};
use omegaorth_core::{DenseMatrix, Error, Settings, Status, Verdict};
use serde_json::{json, Value};

use crate::matrix_file::MatrixFile;
use crate::output;

pub const EXIT_OK: u8 = 0;
pub const EXIT_FAILS: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_NO_CONVERGENCE: u8 = 3;
pub const EXIT_INCONCLUSIVE: u8 = 4;

/// Angles used by the attainment certifier.
const CERTIFY_ANGLES: usize = 360;

#[derive(Debug, Parser)]
#[command(
    name = "omegaorth",
    version,
    about = "Numerical radius, orthogonality and parallelism of complex matrices"
)]
struct Cli {
    #[command(flatten)]
    global: GlobalArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct GlobalArgs {
    /// Tolerance for algebraic identities.
    #[arg(long, global = true, default_value_t = 1e-9)]
    tol_alg: f64,
    /// Tolerance for optimizer-derived quantities.
    #[arg(long, global = true, default_value_t = 1e-6)]
    tol_opt: f64,
    /// θ grid points for the numerical radius.
    #[arg(long, global = true, default_value_t = 1024)]
    theta_grid: usize,
    /// Phase grid points for parallelism.
    #[arg(long, global = true, default_value_t = 512)]
    phase_grid: usize,
    /// Per-axis resolution of the 2×2 brute-force oracle.
    #[arg(long, global = true, default_value_t = 2000)]
    oracle_grid: usize,
    #[arg(long, global = true, env = "OMEGAORTH_SEED")]
    seed: Option<u64>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Human)]
    format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Human,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Relation {
    /// `A*B = 0`.
    Usual,
    /// `‖A + λB‖ ≥ ‖A‖` for all λ.
    #[value(name = "birkhoff_norm", alias = "birkhoff-norm")]
    BirkhoffNorm,
    /// `ω(A + λB) ≥ ω(A)` for all λ.
    #[value(name = "birkhoff_radius", alias = "birkhoff-radius")]
    BirkhoffRadius,
    /// `ω²(A+B) = ω²(A) + ω²(B)`.
    Pythagorean,
    /// Attainment-based certificate for `A ⊥_{ωB} B`.
    Certify,
}

impl Relation {
    fn name(self) -> &'static str {
        match self {
            Relation::Usual => "usual",
            Relation::BirkhoffNorm => "birkhoff_norm",
            Relation::BirkhoffRadius => "birkhoff_radius",
            Relation::Pythagorean => "pythagorean",
            Relation::Certify => "certify",
        }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// ω(T) with its certificate, ‖T‖ and the ω ≤ ‖T‖ ≤ 2ω check.
    Radius { file: PathBuf, name: String },
    /// Boundary points of the numerical range as `theta,re,im` rows.
    Range {
        file: PathBuf,
        name: String,
        #[arg(long, default_value_t = 360)]
        points: usize,
    },
    /// Decides an orthogonality relation between two matrices.
    Orth {
        file: PathBuf,
        a: String,
        b: String,
        #[arg(value_enum)]
        relation: Relation,
    },
    /// Decides ω(T + λS) = ω(T) + ω(S) for some unimodular λ.
    Parallel { file: PathBuf, t: String, s: String },
    /// Replays the worked examples and runs every registered claim.
    Verify {
        /// Random trials per claim.
        #[arg(long, default_value_t = 20)]
        trials: usize,
    },
    /// Searches a random ensemble for a violation of a claim.
    Search {
        claim: String,
        kind: String,
        dim: usize,
        budget: usize,
    },
}

/// Text for stdout and stderr plus the process exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: u8,
}

impl Outcome {
    fn ok(stdout: String, code: u8) -> Self {
        Outcome {
            stdout,
            stderr: String::new(),
            code,
        }
    }

    fn error(message: impl std::fmt::Display, code: u8) -> Self {
        Outcome {
            stdout: String::new(),
            stderr: format!("omegaorth: {message}\n"),
            code,
        }
    }
}

struct Failure(Outcome);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::NoConvergence { .. } => EXIT_NO_CONVERGENCE,
            _ => EXIT_USAGE,
        };
        Failure(Outcome::error(e, code))
    }
}

fn usage(message: impl std::fmt::Display) -> Failure {
    Failure(Outcome::error(message, EXIT_USAGE))
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    stdout: String::new(),
                    stderr: text,
                    code: EXIT_USAGE,
                }
            } else {
                Outcome::ok(text, EXIT_OK)
            };
        }
    };
    match dispatch(cli) {
        Ok(outcome) | Err(Failure(outcome)) => outcome,
    }
}

fn settings(g: &GlobalArgs) -> Result<Settings, Failure> {
    let mut s = Settings {
        tol_algebraic: g.tol_alg,
        tol_opt: g.tol_opt,
        theta_grid: g.theta_grid,
        phase_grid: g.phase_grid,
        oracle_grid: g.oracle_grid,
        ..Settings::default()
    };
    if let Some(seed) = g.seed {
        s.seed = seed;
    }
    s.validate()?;
    Ok(s)
}

fn load(file: &Path) -> Result<MatrixFile, Failure> {
    MatrixFile::load(file).map_err(|e| usage(format!("{}: {e}", file.display())))
}

fn matrix<'a>(f: &'a MatrixFile, name: &str) -> Result<&'a DenseMatrix, Failure> {
    f.get(name).ok_or_else(|| usage(format!("no matrix named `{name}`")))
}

fn emit(value: &Value, format: Format) -> String {
    match format {
        Format::Human => output::human(value),
        Format::Json => format!("{}\n", serde_json::to_string_pretty(value).expect("serializable")),
        Format::Csv => output::csv_record(value),
    }
}

fn verdict_code(v: &Verdict) -> u8 {
    match v.status {
        Status::Holds => EXIT_OK,
        Status::Fails => EXIT_FAILS,
        Status::Inconclusive => EXIT_INCONCLUSIVE,
    }
}

fn dispatch(cli: Cli) -> Result<Outcome, Failure> {
    let settings = settings(&cli.global)?;
    let format = cli.global.format;
    match cli.command {
        Command::Radius { file, name } => {
            let f = load(&file)?;
            let t = matrix(&f, &name)?;
            let cert = RadiusSolver::from_settings(&settings).certificate(t)?;
            let norm = operator_norm(t);
            let (lower, upper) = sandwich_margins(cert.omega, norm);
            let tol = settings.tol_algebraic.max(settings.tol_opt);
            let mut v = output::certificate(&cert);
            v.insert("norm".into(), norm.into());
            v.insert(
                "sandwich".into(),
                json!({
                    "lower_margin": lower,
                    "upper_margin": upper,
                    "holds": lower >= -tol && upper >= -tol,
                }),
            );
            Ok(Outcome::ok(emit(&Value::Object(v), format), EXIT_OK))
        }
        Command::Range { file, name, points } => {
            if points < 3 {
                return Err(usage("--points must be at least 3"));
            }
            let f = load(&file)?;
            let t = matrix(&f, &name)?;
            let rows: Vec<Value> = boundary_with_angles(t, points)?
                .into_iter()
                .map(|(theta, z)| json!({"theta": theta, "re": z.re, "im": z.im}))
                .collect();
            let text = match format {
                Format::Json => emit(&Value::Array(rows), format),
                Format::Human | Format::Csv => output::csv_rows(&rows),
            };
            Ok(Outcome::ok(text, EXIT_OK))
        }
        Command::Orth { file, a, b, relation } => {
            let f = load(&file)?;
            let (ma, mb) = (matrix(&f, &a)?, matrix(&f, &b)?);
            let v = match relation {
                Relation::Usual => usual_orthogonal(ma, mb, settings.tol_algebraic)?,
                Relation::BirkhoffNorm => birkhoff_norm_orth(ma, mb, settings.tol_opt, &settings)?,
                Relation::BirkhoffRadius => birkhoff_radius_orth(ma, mb, settings.tol_opt, &settings)?,
                Relation::Pythagorean => pythagorean_radius_orth(ma, mb, settings.tol_opt, &settings)?,
                Relation::Certify => certify_orth_attainment(ma, mb, CERTIFY_ANGLES, settings.tol_opt, &settings)?,
            };
            let mut report = serde_json::Map::new();
            report.insert("relation".into(), relation.name().into());
            report.insert("a".into(), a.into());
            report.insert("b".into(), b.into());
            if let Value::Object(m) = output::verdict(&v) {
                report.extend(m);
            }
            Ok(Outcome::ok(emit(&Value::Object(report), format), verdict_code(&v)))
        }
        Command::Parallel { file, t, s } => {
            let f = load(&file)?;
            let v = radius_parallel(matrix(&f, &t)?, matrix(&f, &s)?, settings.tol_opt, &settings)?;
            let mut report = serde_json::Map::new();
            report.insert("t".into(), t.into());
            report.insert("s".into(), s.into());
            if let Value::Object(m) = output::verdict(&v) {
                report.extend(m);
            }
            Ok(Outcome::ok(emit(&Value::Object(report), format), verdict_code(&v)))
        }
        Command::Verify { trials } => {
            let suite = claims::verify_suite(&settings, trials)?;
            let code = if suite.reference_fixtures_pass() {
                EXIT_OK
            } else {
                EXIT_FAILS
            };
            let value = output::suite_report(&suite, settings.seed, trials);
            let text = match format {
                Format::Json => emit(&value, format),
                Format::Csv => {
                    let rows: Vec<Value> = suite.reports().map(output::claim_report).collect();
                    output::csv_rows(&rows)
                }
                Format::Human => human_suite(&suite, settings.seed, trials),
            };
            Ok(Outcome::ok(text, code))
        }
        Command::Search {
            claim,
            kind,
            dim,
            budget,
        } => {
            let ensemble_kind =
                EnsembleKind::parse(&kind).ok_or_else(|| usage(format!("unknown ensemble kind `{kind}`")))?;
            if dim == 0 {
                return Err(usage("dimension must be positive"));
            }
            let ensemble = Ensemble::new(ensemble_kind, dim, settings.seed, budget);
            let report = match claims::counterexample_search(&claim, &ensemble, budget, &settings) {
                Err(Error::UnknownClaim) => return Err(usage(format!("unknown claim `{claim}`"))),
                other => other?,
            };
            let code = if report.is_clean() { EXIT_OK } else { EXIT_FAILS };
            let value = output::claim_report(&report);
            let text = match format {
                Format::Json | Format::Csv => emit(&value, format),
                Format::Human => human_search(&report),
            };
            Ok(Outcome::ok(text, code))
        }
    }
}

fn counts(r: &claims::ClaimReport) -> String {
    format!(
        "trials={} supported={} violated={} inconclusive={} vacuous={}",
        r.trials, r.supported, r.violated, r.inconclusive, r.vacuous
    )
}

fn human_search(r: &claims::ClaimReport) -> String {
    let mut out = format!("# {} [{}] {}\n", r.claim_id, r.kind.as_str(), counts(r));
    match &r.worst_witness {
        Some(w) => {
            out.push_str(&format!("# trial {} ({}), margin {:?}\n", w.trial, w.variant, w.margin));
            out.push_str(&format!("# {}\n", w.detail));
            out.push_str(&output::witness_snippet(w));
        }
        None => out.push_str("# no violations\n"),
    }
    out
}

fn human_suite(s: &claims::SuiteReport, seed: u64, trials: usize) -> String {
    let mut out = format!("seed: {seed}\ntrials per claim: {trials}\n");
    for (title, reports) in [("fixtures", &s.fixtures), ("claims", &s.claims)] {
        out.push_str(&format!("{title}:\n"));
        for r in reports {
            let mark = if r.is_clean() { "ok" } else { "VIOLATED" };
            out.push_str(&format!(
                "  {mark:8} {:<34} {:<14} {}\n",
                r.claim_id,
                r.kind.as_str(),
                counts(r)
            ));
            if let Some(w) = &r.worst_witness {
                out.push_str(&format!("           worst: {} (margin {:?})\n", w.detail, w.margin));
                for line in output::witness_snippet(w).lines() {
                    out.push_str(&format!("           {line}\n"));
                }
            }
        }
    }
    out.push_str(&format!("reference fixtures pass: {}\n", s.reference_fixtures_pass()));
    out
}
