// SPDX-License-Identifier: Apache-2.0

//! The `gibbs` command line tool.
//!
//! Exit status is 0 on success, 1 when the computation itself fails (the
//! inputs parsed but violate a precondition), and 2 for usage or parse
//! errors. Every error is a single line `error: <CODE>: <detail>` on the
//! error stream.

pub mod bench;
pub mod format;
pub mod selftest;

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde_json::Value;

use crate::algebra::compose_sequence;
use crate::alignment::{align_pair_with, solution_line_with, TOL_LEN};
use crate::error::RotationError;
use crate::sweep::{tube_mesh, Polyline, Profile};

use format::{parse_rotation, parse_vector, Repr, Rotation};

pub const EXIT_OK: i32 = 0;
pub const EXIT_COMPUTATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug)]
pub struct CliError {
    pub code: String,
    pub detail: String,
    pub exit: i32,
}

impl CliError {
    pub fn parse(detail: impl Into<String>) -> Self {
        CliError {
            code: "PARSE".into(),
            detail: detail.into(),
            exit: EXIT_USAGE,
        }
    }

    fn usage(detail: impl Into<String>) -> Self {
        CliError {
            code: "USAGE".into(),
            detail: detail.into(),
            exit: EXIT_USAGE,
        }
    }

    fn io(e: std::io::Error) -> Self {
        CliError {
            code: "IO".into(),
            detail: e.to_string(),
            exit: EXIT_COMPUTATION,
        }
    }

    /// `error: CODE: detail`, always on one line.
    pub fn record(&self) -> String {
        let detail = self.detail.split_whitespace().collect::<Vec<_>>().join(" ");
        format!("error: {}: {}", self.code, detail)
    }
}

impl From<RotationError> for CliError {
    fn from(e: RotationError) -> Self {
        CliError {
            code: e.code().into(),
            detail: e.to_string(),
            exit: EXIT_COMPUTATION,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "gibbs", version, about = "Rotations as Gibbs vectors")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Output {
    /// One JSON object per line instead of text.
    #[arg(long, global = true)]
    json: bool,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Convert a rotation between representations.
    Convert {
        #[arg(long, value_enum)]
        from: Repr,
        #[arg(long, value_enum)]
        to: Repr,
        /// Comma-separated components (matrices row-major).
        #[arg(long, allow_hyphen_values = true)]
        value: String,
        #[command(flatten)]
        out: Output,
    },
    /// Compose rotations; the first --value acts first.
    Compose {
        #[arg(long, value_enum, default_value = "gibbs")]
        from: Repr,
        #[arg(long, value_enum, default_value = "gibbs")]
        to: Repr,
        #[arg(long, required = true, allow_hyphen_values = true)]
        value: Vec<String>,
        #[command(flatten)]
        out: Output,
    },
    /// Rotations taking p to q: the whole line, or one member with --gamma.
    Align {
        #[arg(long, allow_hyphen_values = true)]
        p: String,
        #[arg(long, allow_hyphen_values = true)]
        q: String,
        #[arg(long, allow_hyphen_values = true)]
        gamma: Option<f64>,
        /// Relative length tolerance.
        #[arg(long, default_value_t = TOL_LEN)]
        tol: f64,
        #[command(flatten)]
        out: Output,
    },
    /// The rotation taking p1 to q1 and p2 to q2.
    AlignPair {
        #[arg(long, allow_hyphen_values = true)]
        p1: String,
        #[arg(long, allow_hyphen_values = true)]
        q1: String,
        #[arg(long, allow_hyphen_values = true)]
        p2: String,
        #[arg(long, allow_hyphen_values = true)]
        q2: String,
        #[arg(long, default_value_t = TOL_LEN)]
        tol: f64,
        #[command(flatten)]
        out: Output,
    },
    /// Transport a frame along a polyline read from FILE or stdin.
    Sweep {
        input: Option<PathBuf>,
        /// Emit a swept tube mesh as OBJ instead of the step rotations.
        #[arg(long)]
        obj: bool,
        #[arg(long, default_value = "circle:0.1:16")]
        profile: String,
        #[command(flatten)]
        out: Output,
    },
    /// Time conversions and compositions; CSV on stdout.
    Bench {
        #[arg(long, default_value_t = 100_000, value_parser = clap::value_parser!(u64).range(1..))]
        iters: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Check every fast path against an independent oracle.
    Selftest {
        #[arg(long, default_value_t = 10_000, value_parser = clap::value_parser!(u64).range(1..))]
        iters: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        out: Output,
    },
}

/// Emits either text or a JSON line.
fn emit(out: &mut dyn Write, json: bool, text: String, value: Value) -> Result<(), CliError> {
    if json {
        writeln!(out, "{value}")
    } else {
        writeln!(out, "{text}")
    }
    .map_err(CliError::io)
}

fn emit_rotation(out: &mut dyn Write, json: bool, r: &Rotation) -> Result<(), CliError> {
    emit(out, json, r.text(), r.json())
}

fn check_tol(tol: f64) -> Result<f64, CliError> {
    if tol.is_finite() && tol >= 0.0 {
        Ok(tol)
    } else {
        Err(CliError::parse(format!("--tol must be finite and non-negative, got {tol}")))
    }
}

fn execute(cmd: Command, stdin: &mut dyn Read, out: &mut dyn Write) -> Result<i32, CliError> {
    match cmd {
        Command::Convert { from, to, value, out: o } => {
            let r = parse_rotation(from, &value)?;
            emit_rotation(out, o.json, &r.convert(to))?;
        }
        Command::Compose { from, to, value, out: o } => {
            let rs = value
                .iter()
                .map(|v| parse_rotation(from, v).map(|r| r.to_gibbs()))
                .collect::<Result<Vec<_>, _>>()?;
            let c = compose_sequence(&rs)?;
            emit_rotation(out, o.json, &Rotation::Gibbs(c).convert(to))?;
        }
        Command::Align { p, q, gamma, tol, out: o } => {
            let (p, q) = (parse_vector(&p)?, parse_vector(&q)?);
            let line = solution_line_with(p, q, check_tol(tol)?)?;
            match gamma {
                Some(g) => emit_rotation(out, o.json, &Rotation::Gibbs(line.at(g)?))?,
                None => emit(out, o.json, format::line_text(&line), format::line_json(&line))?,
            }
        }
        Command::AlignPair { p1, q1, p2, q2, tol, out: o } => {
            let r = align_pair_with(
                parse_vector(&p1)?,
                parse_vector(&q1)?,
                parse_vector(&p2)?,
                parse_vector(&q2)?,
                check_tol(tol)?,
            )?;
            emit_rotation(out, o.json, &Rotation::Gibbs(r))?;
        }
        Command::Sweep { input, obj, profile, out: o } => {
            let mut text = String::new();
            match input {
                Some(path) => {
                    text = std::fs::read_to_string(&path)
                        .map_err(|e| CliError::usage(format!("{}: {e}", path.display())))?
                }
                None => {
                    stdin.read_to_string(&mut text).map_err(CliError::io)?;
                }
            }
            let line = Polyline::parse(&text).map_err(|e| CliError::parse(e.to_string()))?;
            if obj {
                let profile: Profile = profile.parse().map_err(|e: RotationError| CliError::parse(e.to_string()))?;
                let mesh = tube_mesh(&line, &profile)?;
                out.write_all(mesh.to_obj().as_bytes()).map_err(CliError::io)?;
            } else {
                for step in line.transport()?.steps {
                    emit_rotation(out, o.json, &Rotation::Gibbs(step))?;
                }
            }
        }
        Command::Bench { iters, seed } => {
            writeln!(out, "{}", bench::HEADER).map_err(CliError::io)?;
            for row in bench::run(iters, seed) {
                writeln!(out, "{}", row.csv()).map_err(CliError::io)?;
            }
        }
        Command::Selftest { iters, seed, out: o } => {
            let checks = selftest::run(iters as usize, seed);
            for c in &checks {
                let value = serde_json::json!({
                    "kind": "check",
                    "name": c.name,
                    "passed": c.passed(),
                    "max_err": c.max_err,
                    "tol": c.tol,
                });
                emit(out, o.json, c.line(), value)?;
            }
            if checks.iter().any(|c| !c.passed()) {
                return Ok(EXIT_COMPUTATION);
            }
        }
    }
    Ok(EXIT_OK)
}

/// Runs the tool on `args` (including the program name) and returns the exit
/// status.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(stdout, "{e}");
                return EXIT_OK;
            }
            let msg = e.to_string();
            let first = msg.lines().next().unwrap_or("").trim_start_matches("error: ");
            let _ = writeln!(stderr, "{}", CliError::usage(first).record());
            return EXIT_USAGE;
        }
    };
    match execute(cli.command, stdin, stdout) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "{}", e.record());
            e.exit
        }
    }
}
