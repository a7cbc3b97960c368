//! Command front end: job configuration, JSON input, machine-readable
//! reports and exit codes. The `torus-mirror` binary is a thin wrapper
//! over [`run`].

mod commands;
pub mod json;
mod suites;

use std::path::PathBuf;
use std::time::Instant;

use serde::Serialize;
use serde_json::Value;

use crate::error::{Error, Result};
pub use commands::{example_bundle, example_torus};
pub use suites::SUITES;

pub const DEFAULT_TOL: f64 = 1e-8;
pub const DEFAULT_SEED: u64 = 0;
pub const DEFAULT_BOUND: i64 = 1;
pub const DEFAULT_SAMPLES: usize = 50;
pub const MAX_ENUMERATION_BOUND: i64 = 2;
/// Environment variable consulted for the default tolerance.
pub const TOL_ENV: &str = "TORUS_MIRROR_TOL";

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    FindDelta,
    Mirror,
    CheckBundle,
    BuildUnitaries,
    Verify(String),
    Enumerate,
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::FindDelta => "find-delta",
            Command::Mirror => "mirror",
            Command::CheckBundle => "check-bundle",
            Command::BuildUnitaries => "build-unitaries",
            Command::Verify(_) => "verify",
            Command::Enumerate => "enumerate",
        }
    }
}

/// Where the input JSON comes from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Input {
    /// The built-in example data.
    Default,
    Path(PathBuf),
    Inline(String),
    Stdin,
}

impl Input {
    /// `-` is stdin, text starting with `{` is inline JSON, anything else a
    /// path.
    pub fn parse(s: &str) -> Input {
        if s == "-" {
            Input::Stdin
        } else if s.trim_start().starts_with('{') {
            Input::Inline(s.to_string())
        } else {
            Input::Path(PathBuf::from(s))
        }
    }

    fn describe(&self) -> String {
        match self {
            Input::Default => "default".into(),
            Input::Path(p) => p.display().to_string(),
            Input::Inline(_) => "inline".into(),
            Input::Stdin => "stdin".into(),
        }
    }

    /// `None` for the built-in default.
    pub fn load(&self) -> Result<Option<Value>> {
        let text = match self {
            Input::Default => return Ok(None),
            Input::Inline(s) => s.clone(),
            Input::Path(p) => std::fs::read_to_string(p)
                .map_err(|e| Error::Schema { path: "$".into(), message: format!("cannot read {}: {e}", p.display()) })?,
            Input::Stdin => std::io::read_to_string(std::io::stdin())
                .map_err(|e| Error::Schema { path: "$".into(), message: format!("cannot read stdin: {e}") })?,
        };
        serde_json::from_str(&text)
            .map(Some)
            .map_err(|e| Error::Schema { path: format!("$ (line {}, column {})", e.line(), e.column()), message: e.to_string() })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct JobConfig {
    pub command: Command,
    pub input: Input,
    pub tol: f64,
    pub seed: u64,
    pub bound: i64,
    pub samples: usize,
    /// Accept IEEE doubles in the input, converted exactly.
    pub float_input: bool,
    pub timing: bool,
}

impl JobConfig {
    pub fn new(command: Command) -> Self {
        JobConfig {
            command,
            input: Input::Default,
            tol: DEFAULT_TOL,
            seed: DEFAULT_SEED,
            bound: DEFAULT_BOUND,
            samples: DEFAULT_SAMPLES,
            float_input: false,
            timing: false,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.tol.is_finite() && self.tol > 0.0) {
            return Err(Error::Schema { path: "--tol".into(), message: "tolerance must be positive and finite".into() });
        }
        if self.bound < 0 {
            return Err(Error::Schema { path: "--bound".into(), message: "bound must be nonnegative".into() });
        }
        if self.samples == 0 {
            return Err(Error::Schema { path: "--samples".into(), message: "samples must be positive".into() });
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// One verified predicate. Exact checks carry no residual.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckRecord {
    pub name: String,
    pub predicate: String,
    pub status: Status,
    pub exact: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residual: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tol: Option<f64>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub witnesses: Vec<Value>,
    #[serde(skip_serializing_if = "Value::is_null")]
    pub detail: Value,
}

impl CheckRecord {
    pub fn exact(name: impl Into<String>, predicate: impl Into<String>, ok: bool) -> Self {
        CheckRecord {
            name: name.into(),
            predicate: predicate.into(),
            status: if ok { Status::Pass } else { Status::Fail },
            exact: true,
            residual: None,
            tol: None,
            witnesses: Vec::new(),
            detail: Value::Null,
        }
    }

    /// Passes when `residual <= tol`; a NaN residual fails.
    pub fn float(name: impl Into<String>, predicate: impl Into<String>, residual: f64, tol: f64) -> Self {
        CheckRecord {
            status: if residual <= tol { Status::Pass } else { Status::Fail },
            exact: false,
            residual: Some(residual),
            tol: Some(tol),
            ..CheckRecord::exact(name, predicate, true)
        }
    }

    pub fn with_detail(mut self, detail: Value) -> Self {
        self.detail = detail;
        self
    }

    pub fn with_witnesses(mut self, witnesses: Vec<Value>) -> Self {
        self.witnesses = witnesses;
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConfigEcho {
    pub input: String,
    pub tol: f64,
    pub seed: u64,
    pub bound: i64,
    pub samples: usize,
    pub number_mode: &'static str,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub schema: &'static str,
    pub command: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub suite: Option<String>,
    pub config: ConfigEcho,
    /// Data produced by the command (shift, mirror, unitaries, ...).
    #[serde(skip_serializing_if = "Value::is_null")]
    pub output: Value,
    pub checks: Vec<CheckRecord>,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<f64>,
}

impl Report {
    pub fn exit_code(&self) -> i32 {
        if self.pass {
            EXIT_PASS
        } else {
            EXIT_FAIL
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    /// One line per check.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let head = match &self.suite {
            Some(s) => format!("{} {}", self.command, s),
            None => self.command.clone(),
        };
        out.push_str(&format!("{head}: {}\n", if self.pass { "PASS" } else { "FAIL" }));
        for c in &self.checks {
            let tag = if c.passed() { "PASS" } else { "FAIL" };
            match (c.residual, c.tol) {
                (Some(r), Some(t)) => out.push_str(&format!("  {tag} {}: {} (residual {r:.3e}, tol {t:.1e})\n", c.name, c.predicate)),
                _ => out.push_str(&format!("  {tag} {}: {} (exact)\n", c.name, c.predicate)),
            }
        }
        if let Value::Object(fields) = &self.output {
            for (k, v) in fields {
                out.push_str(&format!("  {k} = {v}\n"));
            }
        }
        out
    }
}

/// Exit code for a finished run: input errors map to `2`.
pub fn exit_code(result: &Result<Report>) -> i32 {
    match result {
        Ok(r) => r.exit_code(),
        Err(_) => EXIT_INPUT,
    }
}

/// Execute a job. Errors are input errors; verification failures come
/// back as a report with `pass == false`.
pub fn run(config: &JobConfig) -> Result<Report> {
    config.validate()?;
    let start = Instant::now();
    let input = config.input.load()?;
    let (output, checks) = match &config.command {
        Command::FindDelta => commands::find_delta_cmd(config, input.as_ref())?,
        Command::Mirror => commands::mirror_cmd(config, input.as_ref())?,
        Command::CheckBundle => commands::check_bundle_cmd(config, input.as_ref())?,
        Command::BuildUnitaries => commands::build_unitaries_cmd(config, input.as_ref())?,
        Command::Verify(suite) => (Value::Null, suites::run_suite(suite, config, input.as_ref())?),
        Command::Enumerate => commands::enumerate_cmd(config, input.as_ref())?,
    };
    let pass = checks.iter().all(CheckRecord::passed);
    Ok(Report {
        schema: json::REPORT_SCHEMA,
        command: config.command.name().to_string(),
        suite: match &config.command {
            Command::Verify(s) => Some(s.clone()),
            _ => None,
        },
        config: ConfigEcho {
            input: config.input.describe(),
            tol: config.tol,
            seed: config.seed,
            bound: config.bound,
            samples: config.samples,
            number_mode: if config.float_input { "float" } else { "exact" },
        },
        output,
        checks,
        pass,
        wall_time_ms: config.timing.then(|| start.elapsed().as_secs_f64() * 1e3),
    })
}
