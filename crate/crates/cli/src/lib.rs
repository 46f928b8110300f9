//! Command-line front end for `gyrokit`.
//!
//! [`execute`] parses arguments, runs the subcommand and renders its
//! [`Artifact`]. Exit status is 0 when every check passes, 1 when a check
//! fails or a precondition is unmet, and 2 on input or parse errors.

pub mod args;
pub mod commands;
pub mod merge;

use std::ffi::OsString;
use std::fs;
use std::path::Path;

use clap::Parser;
use gyrokit::{CheckReport, Verdict};
use serde::Serialize;
use serde_json::{Map, Value};

pub use args::{Command, CommandSpec, Format, Options};
pub use merge::{report_merge, CheckCounts, Summary};

/// Schema version carried by every JSON artifact.
pub const SCHEMA_VERSION: u32 = 1;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CliError {
    /// Unreadable or malformed input.
    #[error("{0}")]
    Input(String),
    /// A precondition or certification the command depends on does not hold.
    #[error("{0}")]
    Check(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => EXIT_INPUT,
            CliError::Check(_) => EXIT_FAIL,
        }
    }
}

impl From<gyrokit::Error> for CliError {
    fn from(e: gyrokit::Error) -> Self {
        use gyrokit::Error as E;
        match e {
            E::Precondition(_) | E::Uncertified(_) | E::Monotonicity { .. } => CliError::Check(e.to_string()),
            _ => CliError::Input(e.to_string()),
        }
    }
}

/// What a subcommand produced.
#[derive(Debug, Clone, PartialEq)]
pub struct Artifact {
    pub command: &'static str,
    pub reports: Vec<CheckReport>,
    /// Command-specific fields, merged into the JSON envelope.
    pub data: Map<String, Value>,
    /// Command-specific lines for the text format.
    pub lines: Vec<String>,
    /// Tabular output for the csv format, when the command has one.
    pub csv: Option<String>,
    /// Verdict contribution beyond the reports.
    pub ok: bool,
}

impl Artifact {
    pub fn new(command: &'static str) -> Self {
        Artifact {
            command,
            reports: Vec::new(),
            data: Map::new(),
            lines: Vec::new(),
            csv: None,
            ok: true,
        }
    }

    pub fn passed(&self) -> bool {
        self.ok && self.reports.iter().all(CheckReport::passed)
    }

    pub fn verdict(&self) -> Verdict {
        if self.passed() {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => self.to_json(),
            Format::Text => self.to_text(),
            Format::Csv => self.csv.clone().unwrap_or_else(|| self.reports_csv()),
        }
    }

    fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct Envelope<'a> {
            v: u32,
            command: &'a str,
            verdict: Verdict,
            reports: &'a [CheckReport],
            #[serde(flatten)]
            data: &'a Map<String, Value>,
        }
        let env = Envelope {
            v: SCHEMA_VERSION,
            command: self.command,
            verdict: self.verdict(),
            reports: &self.reports,
            data: &self.data,
        };
        let mut out = serde_json::to_string_pretty(&env).expect("artifacts serialize");
        out.push('\n');
        out
    }

    fn to_text(&self) -> String {
        let mut out = format!("{}: {}\n", self.command, self.verdict());
        for r in &self.reports {
            out.push_str(&r.summary_line());
            out.push('\n');
            for (kind, list) in [("violation", &r.violations), ("counterexample", &r.counterexamples)] {
                for v in list {
                    out.push_str(&format!("  {kind} {}: [{}]", v.item, v.witness.join(", ")));
                    if let Some(res) = v.residual {
                        out.push_str(&format!(" residual {res:e}"));
                    }
                    if !v.detail.is_empty() {
                        out.push_str(&format!(" {}", v.detail));
                    }
                    out.push('\n');
                }
            }
        }
        for l in &self.lines {
            out.push_str(l);
            out.push('\n');
        }
        out
    }

    fn reports_csv(&self) -> String {
        let mut out = String::from("check,verdict,tuples,violations,counterexamples,max_residual\n");
        for r in &self.reports {
            out.push_str(&format!(
                "{},{},{},{},{},{:e}\n",
                csv_field(&r.check),
                r.verdict,
                r.tuples,
                r.violations.len(),
                r.counterexamples.len(),
                r.max_residual
            ));
        }
        out
    }
}

pub(crate) fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n', '\r']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Execution {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

fn infer_format(spec: &CommandSpec) -> Format {
    if let Some(f) = spec.options.format {
        return f;
    }
    match spec.options.out.as_deref().and_then(Path::extension).and_then(|e| e.to_str()) {
        Some("csv") => Format::Csv,
        Some("txt") => Format::Text,
        _ => Format::Json,
    }
}

/// Runs a parsed command, writing `--out` when given.
pub fn run(spec: &CommandSpec) -> Execution {
    let artifact = match commands::dispatch(spec) {
        Ok(a) => a,
        Err(e) => {
            return Execution {
                code: e.exit_code(),
                stdout: String::new(),
                stderr: format!("gyrokit {}: {e}\n", spec.command.name()),
            }
        }
    };
    let body = artifact.render(infer_format(spec));
    let code = if artifact.passed() { EXIT_PASS } else { EXIT_FAIL };
    match &spec.options.out {
        Some(path) => match fs::write(path, &body) {
            Ok(()) => Execution {
                code,
                stdout: String::new(),
                stderr: format!("{}: {}\n", spec.command.name(), artifact.verdict()),
            },
            Err(e) => Execution {
                code: EXIT_INPUT,
                stdout: String::new(),
                stderr: format!("gyrokit: cannot write {}: {e}\n", path.display()),
            },
        },
        None => Execution {
            code,
            stdout: body,
            stderr: String::new(),
        },
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn execute<I, T>(args: I) -> Execution
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match CommandSpec::try_parse_from(args) {
        Ok(spec) => run(&spec),
        Err(e) => {
            let text = e.render().to_string();
            if e.use_stderr() {
                Execution {
                    code: EXIT_INPUT,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Execution {
                    code: EXIT_PASS,
                    stdout: text,
                    stderr: String::new(),
                }
            }
        }
    }
}
