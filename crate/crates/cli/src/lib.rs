//! Batch front end: one JSON problem document in, one deterministic report
//! out.

pub mod document;

mod commands;
mod resolve;

use std::fmt;

use serde_json::{json, Value};

pub use commands::{Command, Report};
pub use document::{ProblemDocument, SCHEMA_VERSION};

/// Exit codes.
pub const EXIT_PASS: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_MALFORMED: i32 = 2;

#[derive(Debug)]
pub enum CliError {
    /// The input cannot be interpreted.
    Malformed(String),
    /// A computation was refused for mathematical reasons.
    Failed(gscheme::Error),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Malformed(m) => write!(f, "malformed input: {m}"),
            CliError::Failed(e) => write!(f, "{e}"),
        }
    }
}

impl From<gscheme::Error> for CliError {
    fn from(e: gscheme::Error) -> Self {
        use gscheme::Error::*;
        match e {
            NoAntipode | NoSolution | IllDefined(_) | ChecksNotPassed(_) | EmptyVariety => CliError::Failed(e),
            other => CliError::Malformed(other.to_string()),
        }
    }
}

pub struct Outcome {
    pub code: i32,
    pub stdout: String,
}

#[derive(Clone, Copy, Debug, Default)]
pub struct Options {
    pub pretty: bool,
    pub seed: u64,
}

pub fn parse_document(text: &str) -> Result<ProblemDocument, CliError> {
    serde_json::from_str(text).map_err(|e| CliError::Malformed(format!("invalid problem document: {e}")))
}

/// Runs `command` on the document text.
pub fn run(command: Command, text: &str, options: Options) -> Outcome {
    let result = parse_document(text).and_then(|doc| commands::execute(command, &doc, options));
    match result {
        Ok(report) => {
            let code = if report.passes { EXIT_PASS } else { EXIT_CHECK_FAILED };
            let stdout = if options.pretty { report.text } else { to_json(&report.json) };
            Outcome { code, stdout }
        }
        Err(e) => {
            let (code, kind) = match &e {
                CliError::Malformed(_) => (EXIT_MALFORMED, "malformed_input".to_string()),
                CliError::Failed(err) => (EXIT_CHECK_FAILED, error_kind(err)),
            };
            let value = json!({ "command": command.name(), "passes": false, "error": { "kind": kind, "message": e.to_string() } });
            let stdout = if options.pretty { format!("{}: {e}\n", command.name()) } else { to_json(&value) };
            Outcome { code, stdout }
        }
    }
}

fn error_kind(e: &gscheme::Error) -> String {
    let debug = format!("{e:?}");
    let name = debug.split(['(', ' ']).next().unwrap_or_default();
    let mut out = String::new();
    for (k, c) in name.chars().enumerate() {
        if c.is_ascii_uppercase() && k > 0 {
            out.push('_');
        }
        out.push(c.to_ascii_lowercase());
    }
    out
}

fn to_json(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("reports serialize");
    s.push('\n');
    s
}
