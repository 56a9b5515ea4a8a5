//! Batch front-end for `lca-duality`: JSON descriptors in, verdicts out.
//!
//! [`run`] is the whole program; the binary only wires it to the process.
//! Exit codes: `0` the property holds or the construction succeeded, `1` the
//! property fails (the verdict carries witnesses), `2` the input was
//! malformed or the operation could not be carried out.

mod commands;
mod dot;
mod request;

use std::io::{Read, Write};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use lca_duality::{Condition, ConditionReport};

pub use request::Request;

/// Overall outcome of a command.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Holds,
    Fails,
    Error,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Holds => 0,
            Status::Fails => 1,
            Status::Error => 2,
        }
    }
}

/// The counterexample attached to a failed condition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub condition: String,
    pub parts: Vec<(String, String)>,
}

/// Serialized result of one command.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Verdict {
    pub command: String,
    pub status: Status,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub witnesses: Vec<Witness>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub checks: Vec<Condition>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub result: Option<serde_json::Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    /// Wall-clock milliseconds, present only when requested.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<f64>,
}

impl Verdict {
    /// A verdict whose status is decided by the `required` conditions of
    /// `report` (all of them when `required` is `None`).
    pub fn from_report(command: &str, report: ConditionReport, required: Option<&[&str]>) -> Self {
        let counts = |c: &Condition| required.map_or(true, |r| r.contains(&c.name.as_str()));
        let witnesses: Vec<Witness> = report
            .conditions
            .iter()
            .filter(|c| !c.holds && counts(c))
            .map(|c| Witness { condition: c.name.clone(), parts: c.witness.clone() })
            .collect();
        let status = if witnesses.is_empty() { Status::Holds } else { Status::Fails };
        Verdict {
            command: command.into(),
            status,
            witnesses,
            checks: report.conditions,
            result: None,
            error: None,
            timing_ms: None,
        }
    }

    pub fn with_result(mut self, result: impl Serialize) -> Self {
        self.result = Some(serde_json::to_value(result).expect("results serialize"));
        self
    }

    pub fn error(command: &str, message: impl Into<String>) -> Self {
        Verdict {
            command: command.into(),
            status: Status::Error,
            witnesses: Vec::new(),
            checks: Vec::new(),
            result: None,
            error: Some(message.into()),
            timing_ms: None,
        }
    }

    pub fn to_text(&self) -> String {
        let status = match self.status {
            Status::Holds => "holds",
            Status::Fails => "fails",
            Status::Error => "error",
        };
        let mut out = format!("{}: {status}\n", self.command);
        if let Some(e) = &self.error {
            out.push_str(&format!("  error: {e}\n"));
        }
        for c in &self.checks {
            let mark = if c.holds { "ok  " } else { "FAIL" };
            let prov = serde_json::to_value(c.provenance).ok().and_then(|v| v.as_str().map(str::to_owned));
            out.push_str(&format!("  [{mark}] {} ({})", c.name, prov.unwrap_or_default()));
            if !c.witness.is_empty() {
                let parts: Vec<String> = c.witness.iter().map(|(k, v)| format!("{k}={v}")).collect();
                out.push_str(&format!(" {}", parts.join(" ")));
            }
            out.push('\n');
        }
        if let Some(r) = &self.result {
            out.push_str(&format!("  result: {r}\n"));
        }
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Dot,
    Text,
}

#[derive(Debug, Parser)]
#[command(name = "lca-workbench", version, about = "Checks and constructions for local contact algebras and finite spaces")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value = "json", global = true)]
    format: Format,
    /// Include wall-clock timing in the verdict.
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Input {
    /// JSON request file, or `-` for standard input.
    #[arg(default_value = "-")]
    input: String,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Boolean algebra laws for an algebra descriptor.
    CheckAlgebra(Input),
    /// Contact axioms C1-C4 for a relation.
    CheckContact(Input),
    /// Contact axioms plus normality and extensionality.
    CheckNca(Input),
    /// Contact axioms plus the boundedness conditions.
    CheckLca(Input),
    /// The dual space of a finite LCA, or the regular closed LCA of a space.
    Dualize(Input),
    /// The homomorphism dual to a continuous skeletal map.
    DualMap(Input),
    /// Morphism conditions for a homomorphism between finite LCAs.
    CheckMorphism(Input),
    /// Object round trip for a discrete space or a finite LCA.
    RoundTrip(Input),
    /// The frame of δ-ideals and its match with the open sets of the dual.
    Frame(Input),
    /// The open set of the dual space attached to a δ-ideal.
    Iota(Input),
    /// The LCA whose dual is the open set of a δ-ideal.
    OpenDual(Input),
    /// The LCA whose dual is the regular closed set of an element.
    ClosedDual(Input),
    /// Extension relations and their order.
    #[command(subcommand)]
    Compactify(CompactifyOp),
    /// Local proximity spaces and regular closed LCAs.
    #[command(subcommand)]
    Proximity(ProximityOp),
    /// Wallman-type criterion for a family of elements.
    Wallman(Input),
    /// Summary of an LCA: axioms, dual space and extremal extensions.
    Report(Input),
}

#[derive(Debug, Subcommand)]
enum CompactifyOp {
    /// The one-point extension relation.
    Alexandroff(Input),
    /// The Stone-Čech relation.
    Beta(Input),
    /// Least upper bound of admissible relations.
    Sup(Input),
    /// Greatest lower bound of admissible relations.
    Inf(Input),
    /// Position of one relation relative to another.
    Compare(Input),
}

#[derive(Debug, Subcommand)]
enum ProximityOp {
    /// Restrict a local proximity space to its regular closed sets.
    Restrict(Input),
    /// Rebuild a local proximity space from a regular closed LCA.
    Reconstruct(Input),
}

impl Command {
    fn parts(&self) -> (&'static str, &Input) {
        match self {
            Command::CheckAlgebra(i) => ("check-algebra", i),
            Command::CheckContact(i) => ("check-contact", i),
            Command::CheckNca(i) => ("check-nca", i),
            Command::CheckLca(i) => ("check-lca", i),
            Command::Dualize(i) => ("dualize", i),
            Command::DualMap(i) => ("dual-map", i),
            Command::CheckMorphism(i) => ("check-morphism", i),
            Command::RoundTrip(i) => ("round-trip", i),
            Command::Frame(i) => ("frame", i),
            Command::Iota(i) => ("iota", i),
            Command::OpenDual(i) => ("open-dual", i),
            Command::ClosedDual(i) => ("closed-dual", i),
            Command::Compactify(CompactifyOp::Alexandroff(i)) => ("compactify alexandroff", i),
            Command::Compactify(CompactifyOp::Beta(i)) => ("compactify beta", i),
            Command::Compactify(CompactifyOp::Sup(i)) => ("compactify sup", i),
            Command::Compactify(CompactifyOp::Inf(i)) => ("compactify inf", i),
            Command::Compactify(CompactifyOp::Compare(i)) => ("compactify compare", i),
            Command::Proximity(ProximityOp::Restrict(i)) => ("proximity restrict", i),
            Command::Proximity(ProximityOp::Reconstruct(i)) => ("proximity reconstruct", i),
            Command::Wallman(i) => ("wallman", i),
            Command::Report(i) => ("report", i),
        }
    }
}

fn read_input(path: &str, stdin: &mut dyn Read) -> Result<String, String> {
    let mut text = String::new();
    if path == "-" {
        stdin.read_to_string(&mut text).map_err(|e| format!("cannot read standard input: {e}"))?;
    } else {
        text = std::fs::read_to_string(path).map_err(|e| format!("cannot read {path}: {e}"))?;
    }
    Ok(text)
}

/// Runs one command line and returns the exit code.
///
/// `args` includes the program name. Usage errors go to `stderr`; every
/// other outcome, including input errors, is written to `stdout`.
pub fn run<I, S>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    let (name, input) = cli.command.parts();
    let start = Instant::now();
    let outcome = read_input(&input.input, stdin).and_then(|text| {
        let req: Request = serde_json::from_str(&text).map_err(|e| format!("malformed request: {e}"))?;
        commands::dispatch(name, &req).map_err(|e| e.to_string())
    });
    let (mut verdict, dot) = match outcome {
        Ok(out) => (out.verdict, out.dot),
        Err(e) => (Verdict::error(name, e), None),
    };
    if cli.timing {
        verdict.timing_ms = Some(start.elapsed().as_secs_f64() * 1e3);
    }
    let code = verdict.status.exit_code();
    let written = match cli.format {
        Format::Json => {
            writeln!(stdout, "{}", serde_json::to_string_pretty(&verdict).expect("verdicts serialize"))
        }
        Format::Text => write!(stdout, "{}", verdict.to_text()),
        Format::Dot => match dot {
            Some(d) if verdict.status != Status::Error => write!(stdout, "{d}"),
            _ => {
                let v = if verdict.status == Status::Error {
                    verdict
                } else {
                    Verdict::error(name, format!("no DOT rendering for {name}"))
                };
                let _ = writeln!(stdout, "{}", serde_json::to_string_pretty(&v).expect("verdicts serialize"));
                return 2;
            }
        },
    };
    if written.is_err() {
        return 2;
    }
    code
}

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/workbench.md")]
mod book {}
