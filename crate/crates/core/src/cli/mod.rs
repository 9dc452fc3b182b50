//! Manifest-driven command-line front end. Every subcommand prints one JSON
//! report with sorted keys and no timing data, so identical inputs give
//! byte-identical output.

mod gallery;
mod tasks;

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::artinian::{ArtinianAlgebra, LinearForm};
use crate::error::Error;
use crate::groebner::IdealHandle;
use crate::lefschetz::SearchParams;
use crate::linalg::is_probable_prime;
use crate::poly::VariableSet;

pub use gallery::{run_gallery, GalleryReport, GALLERY};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_MALFORMED: i32 = 2;
pub const EXIT_NOT_APPLICABLE: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "lefschetz",
    version,
    about = "Exact computations in graded Artinian algebras"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// JSON manifest with `ring`, `ideal` and optional `z`, `tasks`, `seed`,
    /// `trials`, `coeff_bound`.
    #[arg(long, global = true, value_name = "FILE")]
    pub input: Option<PathBuf>,

    /// Linear form used as `z`; overrides the manifest.
    #[arg(long, global = true, value_name = "EXPR")]
    pub z: Option<String>,

    #[arg(long, global = true, value_name = "N")]
    pub seed: Option<u64>,

    /// Number of random candidates in witness searches.
    #[arg(long, global = true, value_name = "N")]
    pub trials: Option<usize>,

    /// Upper bound for random coefficients.
    #[arg(long, global = true, value_name = "N")]
    pub bound: Option<u64>,

    /// Screen candidates by ranks over GF(P) before exact verification.
    #[arg(long = "mod", global = true, value_name = "P")]
    pub modulus: Option<u64>,

    /// Run only this task (for `verify`).
    #[arg(long, global = true, value_name = "NAME")]
    pub task: Option<String>,
}

#[derive(Clone, Debug, Subcommand)]
pub enum Command {
    /// Hilbert function, socle and Sperner data.
    Hilbert,
    /// Reduced grevlex Groebner basis and minimal generators.
    Gb,
    /// Weak Lefschetz witness search.
    Wlp,
    /// Strong Lefschetz witness search.
    Slp,
    /// Jordan type of multiplication by `z`.
    Jordan,
    /// Central simple modules of `(A, z)`.
    Csm,
    /// Associated graded algebra with respect to `z`.
    Gr,
    /// Initial ideal and lowest-`z`-degree ideal.
    Inprime,
    /// Run the manifest's verification tasks.
    Verify,
    /// Run a built-in worked example, or all of them.
    Gallery { name: Option<String> },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Hilbert => "hilbert",
            Command::Gb => "gb",
            Command::Wlp => "wlp",
            Command::Slp => "slp",
            Command::Jordan => "jordan",
            Command::Csm => "csm",
            Command::Gr => "gr",
            Command::Inprime => "inprime",
            Command::Verify => "verify",
            Command::Gallery { .. } => "gallery",
        }
    }
}

/// Variables as a list of names or one comma/space separated string.
#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(untagged)]
pub enum RingDecl {
    List(Vec<String>),
    Text(String),
}

impl RingDecl {
    pub fn names(&self) -> Vec<String> {
        match self {
            RingDecl::List(v) => v.clone(),
            RingDecl::Text(s) => s
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|t| !t.is_empty())
                .map(str::to_string)
                .collect(),
        }
    }
}

#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(untagged)]
pub enum TaskSpec {
    Name(String),
    Detailed {
        name: String,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        alpha: Option<u32>,
    },
}

impl TaskSpec {
    pub fn name(&self) -> &str {
        match self {
            TaskSpec::Name(n) | TaskSpec::Detailed { name: n, .. } => n,
        }
    }

    pub fn alpha(&self) -> Option<u32> {
        match self {
            TaskSpec::Name(_) => None,
            TaskSpec::Detailed { alpha, .. } => *alpha,
        }
    }
}

fn default_trials() -> usize {
    8
}

fn default_bound() -> u64 {
    1000
}

#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct Manifest {
    pub ring: RingDecl,
    pub ideal: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub z: Option<String>,
    #[serde(default)]
    pub tasks: Vec<TaskSpec>,
    #[serde(default)]
    pub seed: u64,
    #[serde(default = "default_trials")]
    pub trials: usize,
    #[serde(default = "default_bound")]
    pub coeff_bound: u64,
}

impl Manifest {
    pub fn from_json(text: &str) -> Result<Self, Failure> {
        serde_json::from_str(text).map_err(|e| Failure::Malformed(format!("manifest: {e}")))
    }
}

/// Parsed manifest with command-line overrides applied.
#[derive(Clone, Debug)]
pub struct Instance {
    pub vars: VariableSet,
    pub ideal: IdealHandle,
    /// The given `z`, or the last variable.
    pub z: LinearForm,
    pub params: SearchParams,
}

impl Instance {
    pub fn new(
        manifest: &Manifest,
        z_override: Option<&str>,
        params: SearchParams,
    ) -> Result<Self, Failure> {
        let vars = VariableSet::new(&manifest.ring.names())?;
        if manifest.ideal.is_empty() {
            return Err(Failure::Malformed("ideal has no generators".into()));
        }
        let ideal = IdealHandle::parse(&vars, &manifest.ideal)?;
        let z = match z_override.or(manifest.z.as_deref()) {
            Some(text) => LinearForm::parse(&vars, text)?,
            None => LinearForm::variable(vars.len(), vars.len() - 1),
        };
        Ok(Instance {
            vars,
            ideal,
            z,
            params,
        })
    }

    pub fn algebra(&self) -> Result<ArtinianAlgebra, Failure> {
        Ok(ArtinianAlgebra::build(self.ideal.clone())?)
    }

    pub fn z_string(&self) -> String {
        self.z.to_string_in(&self.vars)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Failure {
    Algebra(Error),
    Malformed(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Algebra(e)
    }
}

impl Failure {
    pub fn exit_code(&self) -> i32 {
        match self {
            Failure::Algebra(
                Error::NotArtinian(_) | Error::NotGorenstein(_) | Error::NonSymmetricHilbert,
            ) => EXIT_NOT_APPLICABLE,
            _ => EXIT_MALFORMED,
        }
    }

    fn kind(&self) -> &'static str {
        match self {
            Failure::Algebra(Error::NotArtinian(_)) => "not_artinian",
            Failure::Algebra(Error::NotGorenstein(_)) => "not_gorenstein",
            Failure::Algebra(Error::NonSymmetricHilbert) => "non_symmetric_hilbert",
            _ => "malformed_input",
        }
    }

    fn message(&self) -> String {
        match self {
            Failure::Algebra(e) => e.to_string(),
            Failure::Malformed(m) => m.clone(),
        }
    }
}

/// Result of one task: `passed` is absent for plain computations.
#[derive(Clone, Debug, Serialize)]
pub struct TaskResult {
    pub task: String,
    pub passed: Option<bool>,
    pub result: Value,
}

#[derive(Clone, Debug)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parses `argv` (including the program name) and runs the command.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: EXIT_MALFORMED,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome {
                    code: EXIT_OK,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    execute(&cli)
}

pub fn execute(cli: &Cli) -> Outcome {
    match dispatch(cli) {
        Ok((results, echo, params)) => {
            let passed = results.iter().all(|r| r.passed != Some(false));
            let report = json!({
                "tool": "lefschetz",
                "version": env!("CARGO_PKG_VERSION"),
                "command": cli.command.name(),
                "manifest": echo,
                "search": search_json(&params),
                "results": results,
                "passed": passed,
            });
            Outcome {
                code: if passed { EXIT_OK } else { EXIT_VERIFY_FAILED },
                stdout: render(&report),
                stderr: String::new(),
            }
        }
        Err(f) => {
            let report = json!({
                "tool": "lefschetz",
                "version": env!("CARGO_PKG_VERSION"),
                "command": cli.command.name(),
                "error": { "kind": f.kind(), "message": f.message() },
            });
            Outcome {
                code: f.exit_code(),
                stdout: render(&report),
                stderr: format!("error: {}\n", f.message()),
            }
        }
    }
}

/// Pretty JSON with keys sorted at every level.
pub fn render<T: Serialize>(value: &T) -> String {
    let v = serde_json::to_value(value).expect("reports serialize");
    let mut s = serde_json::to_string_pretty(&v).expect("reports serialize");
    s.push('\n');
    s
}

fn search_json(params: &SearchParams) -> Value {
    let mut v = json!({
        "trials": params.trials,
        "seed": params.seed,
        "coeff_bound": params.coeff_bound,
    });
    if let Some(p) = params.modulus {
        v["modular_screen"] = json!({
            "prime": p,
            "heuristic": true,
            "note": "ranks over GF(p) only discard candidates; every reported witness is verified over the rationals",
        });
    }
    v
}

fn search_params(cli: &Cli, manifest: Option<&Manifest>) -> Result<SearchParams, Failure> {
    let mut p = SearchParams::default();
    if let Some(m) = manifest {
        p.seed = m.seed;
        p.trials = m.trials;
        p.coeff_bound = m.coeff_bound;
    }
    p.seed = cli.seed.unwrap_or(p.seed);
    p.trials = cli.trials.unwrap_or(p.trials);
    p.coeff_bound = cli.bound.unwrap_or(p.coeff_bound);
    if p.trials == 0 {
        return Err(Failure::Malformed("trials must be positive".into()));
    }
    if p.coeff_bound == 0 {
        return Err(Failure::Malformed(
            "coefficient bound must be positive".into(),
        ));
    }
    if let Some(q) = cli.modulus {
        if !is_probable_prime(q) {
            return Err(Error::NotPrime(q).into());
        }
        p.modulus = Some(q);
    }
    Ok(p)
}

type Dispatched = (Vec<TaskResult>, Value, SearchParams);

fn dispatch(cli: &Cli) -> Result<Dispatched, Failure> {
    if let Command::Gallery { name } = &cli.command {
        let params = search_params(cli, None)?;
        let names: Vec<&str> = match name {
            Some(n) => vec![n.as_str()],
            None => GALLERY.to_vec(),
        };
        let mut results = Vec::new();
        for n in names {
            let rep = run_gallery(n, &params)?;
            results.push(TaskResult {
                task: rep.name.clone(),
                passed: Some(rep.passed()),
                result: serde_json::to_value(&rep).expect("reports serialize"),
            });
        }
        return Ok((results, Value::Null, params));
    }
    let path = cli
        .input
        .as_ref()
        .ok_or_else(|| Failure::Malformed("--input FILE is required".into()))?;
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Malformed(format!("cannot read {}: {e}", path.display())))?;
    let manifest = Manifest::from_json(&text)?;
    let params = search_params(cli, Some(&manifest))?;
    let inst = Instance::new(&manifest, cli.z.as_deref(), params.clone())?;
    let specs: Vec<TaskSpec> = match (&cli.command, &cli.task) {
        (Command::Verify, Some(t)) => vec![TaskSpec::Name(t.clone())],
        (Command::Verify, None) if manifest.tasks.is_empty() => tasks::DEFAULT_VERIFY
            .iter()
            .map(|t| TaskSpec::Name(t.to_string()))
            .collect(),
        (Command::Verify, None) => manifest.tasks.clone(),
        (other, _) => vec![TaskSpec::Name(other.name().to_string())],
    };
    let results = tasks::run_tasks(&inst, &specs)?;
    let echo = serde_json::to_value(&manifest).expect("manifest serializes");
    Ok((results, echo, params))
}
