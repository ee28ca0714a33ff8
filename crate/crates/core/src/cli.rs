//! The `loccalc` command line: argument parsing, dispatch, and JSON output.
//!
//! Every command prints one JSON object on stdout. Failures print
//! `{"error": {"code", "message", "position"}}` and exit with `code`:
//! 2 for usage and parse errors, 3 for precondition failures, 4 for internal
//! invariant violations.

use std::time::Instant;

use clap::{Parser, Subcommand};
use num_rational::BigRational;
use serde_json::{json, Map, Value};

use crate::algebra::{MultiPoly, Ring, VarPrefix};
use crate::error::Error;
use crate::expr::{lower_to_poly, parse_expr};
use crate::gysin::{check_pushforward, flag_pushforward, FiberClass};
use crate::localize::{
    check_flag_integral, check_grassmann, euler_characteristic, euler_characteristic_by_evaluation,
    flag_integral, grassmannian_chern_number, ChernNumber, FlagIntegralProblem, GrassmannProblem,
};
use crate::symfun::chern_monomial_integral;
use crate::weyl::{CartanType, RootSystem};

pub const EXIT_USAGE: i32 = 2;
pub const EXIT_PRECONDITION: i32 = 3;
pub const EXIT_INVARIANT: i32 = 4;

/// Largest fixed-point set the CLI will sum over.
pub const MAX_FIXED_POINTS: u128 = 1_000_000;

fn check_size(points: u128) -> Result<(), JobError> {
    if points > MAX_FIXED_POINTS {
        return Err(Error::precondition(format!(
            "{points} fixed points exceed the limit of {MAX_FIXED_POINTS}"
        ))
        .into());
    }
    Ok(())
}

#[derive(Parser, Debug)]
#[command(
    name = "loccalc",
    version,
    about = "Exact fixed-point localization on flag manifolds and Grassmannians"
)]
pub struct Cli {
    /// Emit JSON (the only output format).
    #[arg(long, global = true)]
    pub json: bool,
    /// Indent the JSON output.
    #[arg(long, global = true)]
    pub pretty: bool,
    /// Worker threads for the fixed-point sums.
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Seed for the evaluation points of the cross-check.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug, Clone, PartialEq, Eq)]
pub enum Command {
    /// Integral of a monomial in the Chern classes of the tautological subbundle of G(k, C^n).
    Grassmann {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        /// m1,...,mk: the exponent of c_r(S) in position r.
        #[arg(long, value_delimiter = ',', required = true)]
        exponents: Vec<u32>,
        /// Compare with the Schubert-calculus value.
        #[arg(long)]
        oracle_check: bool,
    },
    /// Integral over G/T of a polynomial in y1..yl.
    FlagIntegral {
        #[arg(long = "type")]
        kind: CartanType,
        #[arg(long)]
        rank: usize,
        #[arg(long)]
        poly: String,
    },
    /// Pushforward along the complete flag bundle of a rank-n bundle, for a polynomial in a1..an.
    GysinFlag {
        #[arg(long)]
        rank: usize,
        #[arg(long)]
        poly: String,
        /// Read the e-basis after a_i -> -a_i.
        #[arg(long)]
        dual_roots: bool,
    },
    /// Euler characteristic of G/T, i.e. the number of fixed points.
    EulerChar {
        #[arg(long = "type")]
        kind: CartanType,
        #[arg(long)]
        rank: usize,
    },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Grassmann { .. } => "grassmann",
            Command::FlagIntegral { .. } => "flag-integral",
            Command::GysinFlag { .. } => "gysin-flag",
            Command::EulerChar { .. } => "euler-char",
        }
    }
}

/// A fully specified job: a command and the seed of its cross-check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JobSpec {
    pub command: Command,
    pub seed: u64,
}

/// A failure with its exit code and, for parse errors, the byte offset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JobError {
    pub code: i32,
    pub message: String,
    pub position: Option<usize>,
}

impl JobError {
    pub fn to_json(&self) -> Value {
        json!({"error": {"code": self.code, "message": self.message, "position": self.position}})
    }

    fn usage(message: impl Into<String>) -> Self {
        JobError { code: EXIT_USAGE, message: message.into(), position: None }
    }
}

impl From<Error> for JobError {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::Parse(_) => EXIT_USAGE,
            Error::Invariant(_) | Error::NotAPolynomial(_) => EXIT_INVARIANT,
            _ => EXIT_PRECONDITION,
        };
        let position = match &e {
            Error::Parse(p) => Some(p.position),
            _ => None,
        };
        JobError { code, message: e.to_string(), position }
    }
}

fn rational_string(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Parses `src` into `ring`; a foreign prefix or index is a usage error.
fn read_poly(src: &str, ring: Ring) -> Result<MultiPoly, JobError> {
    let e = parse_expr(src).map_err(|p| JobError::from(Error::Parse(p)))?;
    lower_to_poly(&e, ring).map_err(|err| match err {
        Error::IncompatibleRings { .. } | Error::IndexOutOfRange { .. } => {
            JobError::usage(format!("{err}; expected a polynomial in {}", ring))
        }
        other => other.into(),
    })
}

fn put_value(out: &mut Map<String, Value>, p: &MultiPoly) {
    match p.constant_value() {
        Some(c) => {
            out.insert("value".into(), json!(rational_string(&c)));
            out.insert("integer".into(), json!(c.is_integer()));
        }
        None => {
            out.insert("polynomial".into(), json!(p.to_string()));
        }
    }
}

fn cross_checks(evaluation: bool, oracle: Option<bool>) -> Value {
    json!({"evaluation": evaluation, "oracle": oracle})
}

/// `C(n, k)`, saturating.
fn binomial(n: usize, k: usize) -> u128 {
    let k = k.min(n - k);
    let mut acc = 1u128;
    for i in 0..k {
        match acc.checked_mul((n - i) as u128) {
            Some(v) => acc = v / (i as u128 + 1),
            None => return u128::MAX,
        }
    }
    acc
}

fn run_grassmann(
    n: usize,
    k: usize,
    exponents: &[u32],
    oracle_check: bool,
    seed: u64,
    out: &mut Map<String, Value>,
) -> Result<(), JobError> {
    let problem = GrassmannProblem::new(n, k, exponents.to_vec())?;
    check_size(binomial(n, k))?;
    let result = grassmannian_chern_number(&problem)?;
    let evaluation = check_grassmann(&problem, &result, seed)?;
    let oracle = match (&result, oracle_check) {
        (ChernNumber::Constant(c), true) => {
            // the fixed-point formula carries the orientation sign (-1)^{k(n-k)}
            let mut expected = chern_monomial_integral(n, k, exponents)?;
            if problem.dimension() % 2 == 1 {
                expected = -expected;
            }
            Some(*c == expected)
        }
        _ => None,
    };
    match &result {
        ChernNumber::Constant(c) => {
            out.insert("value".into(), json!(rational_string(c)));
            out.insert("integer".into(), json!(c.is_integer()));
        }
        ChernNumber::Polynomial(p) => put_value(out, p),
    }
    out.insert("fixed_points".into(), json!(binomial(n, k)));
    out.insert("cross_checks".into(), cross_checks(evaluation, oracle));
    Ok(())
}

fn run_flag_integral(
    kind: CartanType,
    rank: usize,
    poly: &str,
    seed: u64,
    out: &mut Map<String, Value>,
) -> Result<(), JobError> {
    let rs = RootSystem::new(kind, rank)?;
    check_size(rs.weyl_order())?;
    let f = read_poly(poly, Ring::new(rs.var_count(), VarPrefix::Y))?;
    let order = rs.weyl_order();
    let problem = FlagIntegralProblem::new(rs, f)?;
    let result = flag_integral(&problem)?;
    let evaluation = check_flag_integral(&problem, &result, seed)?;
    put_value(out, &result);
    out.insert("fixed_points".into(), json!(order));
    out.insert("cross_checks".into(), cross_checks(evaluation, None));
    Ok(())
}

fn run_gysin(
    rank: usize,
    poly: &str,
    dual_roots: bool,
    seed: u64,
    out: &mut Map<String, Value>,
) -> Result<(), JobError> {
    if rank == 0 {
        return Err(Error::precondition("bundle rank must be at least 1").into());
    }
    check_size((1..=rank as u128).fold(1u128, |acc, i| acc.saturating_mul(i)))?;
    let b = FiberClass::new(read_poly(poly, Ring::new(rank, VarPrefix::A))?)?;
    let result = flag_pushforward(&b, dual_roots)?;
    let evaluation = check_pushforward(&b, &result.symmetric, seed)?;
    put_value(out, &result.symmetric);
    out.insert("symmetric".into(), json!(result.symmetric.to_string()));
    out.insert("chern_basis".into(), json!(result.chern_form.to_string()));
    out.insert("fixed_points".into(), json!((1..=rank as u128).product::<u128>()));
    out.insert("cross_checks".into(), cross_checks(evaluation, None));
    Ok(())
}

fn run_euler_char(
    kind: CartanType,
    rank: usize,
    seed: u64,
    out: &mut Map<String, Value>,
) -> Result<(), JobError> {
    check_size(RootSystem::new(kind, rank)?.weyl_order())?;
    let chi = euler_characteristic(kind, rank)?;
    let evaluation = match euler_characteristic_by_evaluation(kind, rank, seed) {
        Ok(v) => v == chi,
        Err(Error::Invariant(_)) => false,
        Err(e) => return Err(e.into()),
    };
    out.insert("value".into(), json!(chi.to_string()));
    out.insert("integer".into(), json!(true));
    out.insert("fixed_points".into(), json!(RootSystem::new(kind, rank)?.weyl_order()));
    out.insert("cross_checks".into(), cross_checks(evaluation, None));
    Ok(())
}

/// Runs one job and returns its JSON document, `elapsed_ms` included.
pub fn run_job(spec: &JobSpec) -> Result<Value, JobError> {
    let start = Instant::now();
    let mut out = Map::new();
    out.insert("command".into(), json!(spec.command.name()));
    match &spec.command {
        Command::Grassmann { n, k, exponents, oracle_check } => {
            run_grassmann(*n, *k, exponents, *oracle_check, spec.seed, &mut out)?
        }
        Command::FlagIntegral { kind, rank, poly } => {
            run_flag_integral(*kind, *rank, poly, spec.seed, &mut out)?
        }
        Command::GysinFlag { rank, poly, dual_roots } => {
            run_gysin(*rank, poly, *dual_roots, spec.seed, &mut out)?
        }
        Command::EulerChar { kind, rank } => run_euler_char(*kind, *rank, spec.seed, &mut out)?,
    }
    let ms = start.elapsed().as_secs_f64() * 1000.0;
    out.insert("elapsed_ms".into(), json!((ms * 1000.0).round() / 1000.0));
    Ok(Value::Object(out))
}

/// Parses `args` (program name first), runs the job and returns the text to
/// print on stdout with the process exit code.
pub fn run<I, T>(args: I) -> (String, i32)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                return (e.to_string(), 0);
            }
            let message = e.to_string().lines().next().unwrap_or("usage error").to_string();
            let message = message.trim_start_matches("error: ").to_string();
            return (JobError::usage(message).to_json().to_string(), EXIT_USAGE);
        }
    };
    let spec = JobSpec { command: cli.command.clone(), seed: cli.seed };
    let result = match cli.threads {
        Some(0) => Err(JobError::usage("--threads must be at least 1")),
        Some(t) => match rayon::ThreadPoolBuilder::new().num_threads(t).build() {
            Ok(pool) => pool.install(|| run_job(&spec)),
            Err(e) => Err(JobError::usage(format!("cannot start {t} threads: {e}"))),
        },
        None => run_job(&spec),
    };
    let (doc, code) = match result {
        Ok(v) => (v, 0),
        Err(e) => (e.to_json(), e.code),
    };
    let text = if cli.pretty {
        serde_json::to_string_pretty(&doc).expect("JSON values serialize")
    } else {
        doc.to_string()
    };
    (text, code)
}
