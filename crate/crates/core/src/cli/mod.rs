//! The `cqca` command-line tool.
//!
//! Every command writes its result to stdout and diagnostics to stderr.
//! Exit codes: 0 success, 1 domain rejection (not symplectic, no valid
//! phase, failed validation), 2 input error.

pub mod json;
pub mod parse;
pub mod trace;

use std::fs;
use std::io::Read;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::cocycle::default_phase;
use crate::error::{Error, Result};
use crate::factor::{factorize, multiply_word};
use crate::ffield::Prime;
use crate::laurent::Palindrome;
use crate::oracle::{action_window, check_clifford_action, selftest};
use crate::phasespace::PhaseVector;
use crate::sca::ScaMatrix;

pub use json::{matrix_from_json, matrix_to_json, phase_to_json};
pub use parse::parse_poly;
pub use trace::{evolve, EvolutionTrace, TraceRow};

#[derive(Debug, Parser)]
#[command(name = "cqca", version, about = "Clifford quantum cellular automata over F_p")]
pub struct Cli {
    /// Field characteristic (prime); cross-checked against matrix input.
    #[arg(long, global = true)]
    pub p: Option<u64>,
    /// Lattice dimension; cross-checked against matrix input.
    #[arg(long, global = true)]
    pub d: Option<usize>,
    /// Seed for sampled validations.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TraceFormat {
    Csv,
    Ascii,
    Pgm,
}

/// Matrix arguments are a file path, `-` for stdin, or inline JSON.
#[derive(Debug, Subcommand)]
pub enum Command {
    /// Test the symplectic condition.
    Verify { matrix: String },
    /// Report the shift and palindrome core of a symplectic matrix.
    Classify { matrix: String },
    /// Product of two or more matrices, left to right.
    Compose {
        #[arg(num_args = 2.., required = true)]
        matrices: Vec<String>,
    },
    /// Inverse of a symplectic matrix.
    Invert { matrix: String },
    /// Shift plus generator word for a one-dimensional automaton.
    Factor { matrix: String },
    /// Build ((f, f'), (-h', h)) from palindromes with f h + f' h' = 1.
    Recipe {
        #[arg(long)]
        f: String,
        #[arg(long)]
        h: String,
        /// Defaults to 1 - f h.
        #[arg(long = "f-prime")]
        f_prime: Option<String>,
        /// Defaults to 1.
        #[arg(long = "h-prime")]
        h_prime: Option<String>,
    },
    /// Orbit of a phase-space vector under repeated application.
    Evolve {
        matrix: String,
        #[arg(long, default_value = "1")]
        plus: String,
        #[arg(long, default_value = "0")]
        minus: String,
        #[arg(long, default_value_t = 10)]
        steps: usize,
        #[arg(long, value_enum, default_value_t = TraceFormat::Csv)]
        format: TraceFormat,
    },
    /// Construct and validate the default phase function.
    Phase {
        matrix: String,
        /// Box radius for the cocycle check; defaults to the automaton radius + 1.
        #[arg(long)]
        radius: Option<u64>,
    },
    /// Dense-matrix oracle checks, one JSON line per check class.
    Selftest {
        #[arg(long, default_value_t = 3)]
        window: usize,
    },
}

/// Captured result of one invocation.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: Vec<u8>,
    pub stderr: Vec<u8>,
}

impl Outcome {
    fn ok(stdout: impl Into<Vec<u8>>) -> Self {
        Outcome { code: 0, stdout: stdout.into(), stderr: Vec::new() }
    }

    fn with_code(mut self, code: i32) -> Self {
        self.code = code;
        self
    }
}

/// Exit code for an error: 1 for domain rejections, 2 for bad input.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::NotSymplectic(_) | Error::NoValidPhase | Error::FactorizationMismatch => 1,
        _ => 2,
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, stdin: &mut dyn Read) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string().into_bytes();
            return if e.use_stderr() {
                Outcome { code: 2, stdout: Vec::new(), stderr: text }
            } else {
                Outcome::ok(text)
            };
        }
    };
    match dispatch(&cli, stdin) {
        Ok(out) => out,
        Err(e) => Outcome {
            code: exit_code(&e),
            stdout: Vec::new(),
            stderr: format!("error: {e}\n").into_bytes(),
        },
    }
}

fn line(v: Value) -> Vec<u8> {
    let mut s = v.to_string();
    s.push('\n');
    s.into_bytes()
}

fn read_source(arg: &str, stdin: &mut dyn Read) -> Result<String> {
    if arg == "-" {
        let mut s = String::new();
        stdin.read_to_string(&mut s).map_err(|e| Error::Input(format!("stdin: {e}")))?;
        Ok(s)
    } else if arg.trim_start().starts_with('{') {
        Ok(arg.to_string())
    } else {
        fs::read_to_string(arg).map_err(|e| Error::Input(format!("{arg}: {e}")))
    }
}

fn load(cli: &Cli, arg: &str, stdin: &mut dyn Read) -> Result<ScaMatrix> {
    matrix_from_json(&read_source(arg, stdin)?, cli.p, cli.d)
}

fn shift_json(s: &ScaMatrix) -> Result<(Value, Value)> {
    let cert = s.classify()?;
    Ok((json!(cert.shift), matrix_to_json(&cert.core)))
}

fn dispatch(cli: &Cli, stdin: &mut dyn Read) -> Result<Outcome> {
    match &cli.command {
        Command::Verify { matrix } => {
            let s = load(cli, matrix, stdin)?;
            if s.is_symplectic() {
                let (shift, _) = shift_json(&s)?;
                Ok(Outcome::ok(line(json!({ "symplectic": true, "shift": shift }))))
            } else {
                Ok(Outcome::ok(line(json!({ "symplectic": false }))).with_code(1))
            }
        }
        Command::Classify { matrix } => {
            let s = load(cli, matrix, stdin)?;
            let (shift, core) = shift_json(&s)?;
            Ok(Outcome::ok(line(json!({ "symplectic": true, "shift": shift, "core": core }))))
        }
        Command::Compose { matrices } => {
            let mut acc: Option<ScaMatrix> = None;
            for m in matrices {
                let s = load(cli, m, stdin)?;
                acc = Some(match acc {
                    None => s,
                    Some(a) => a.compose(&s)?,
                });
            }
            let product = acc.expect("clap requires two matrices");
            Ok(Outcome::ok(line(matrix_to_json(&product))))
        }
        Command::Invert { matrix } => {
            let s = load(cli, matrix, stdin)?;
            Ok(Outcome::ok(line(matrix_to_json(&s.inverse()?))))
        }
        Command::Factor { matrix } => {
            let s = load(cli, matrix, stdin)?;
            let word = factorize(&s)?;
            let product = multiply_word(&word);
            let echoed = matrix_to_json(&product);
            if product != s || echoed != matrix_to_json(&s) {
                return Err(Error::FactorizationMismatch);
            }
            let letters: Value = serde_json::from_str(&word.to_json()).expect("word JSON");
            Ok(Outcome::ok(line(json!({
                "p": s.modulus().get(),
                "shift": word.shift(),
                "word": letters,
                "product": echoed,
            }))))
        }
        Command::Recipe { f, h, f_prime, h_prime } => {
            let p = Prime::new(cli.p.unwrap_or(2))?;
            let d = cli.d.unwrap_or(1);
            let pal = |text: &str| Palindrome::new(parse_poly(text, p, d)?);
            let f = pal(f)?;
            let h = pal(h)?;
            let h2 = match h_prime {
                Some(t) => pal(t)?,
                None => Palindrome::one(p, d),
            };
            let f2 = match f_prime {
                Some(t) => pal(t)?,
                None => Palindrome::one(p, d).sub(&f.mul(&h)?)?,
            };
            let s = ScaMatrix::from_recipe(&f, &h, &f2, &h2)?;
            let cert = s.classify()?;
            let mut doc = matrix_to_json(&s);
            doc["certificate"] = json!({ "symplectic": true, "shift": cert.shift });
            Ok(Outcome::ok(line(doc)))
        }
        Command::Evolve { matrix, plus, minus, steps, format } => {
            let s = load(cli, matrix, stdin)?;
            if !s.is_symplectic() {
                return Err(Error::NotSymplectic("evolve needs a symplectic matrix".into()));
            }
            let (p, d) = (s.modulus(), s.dim());
            let xi0 = PhaseVector::new(parse_poly(plus, p, d)?, parse_poly(minus, p, d)?)?;
            let trace = evolve(&s, &xi0, *steps)?;
            Ok(match format {
                TraceFormat::Csv => Outcome::ok(trace.to_csv()),
                TraceFormat::Pgm => Outcome::ok(trace.to_pgm()),
                TraceFormat::Ascii => match trace.to_ascii() {
                    Some(text) => Outcome::ok(text),
                    None => Outcome {
                        code: 0,
                        stdout: trace.to_csv().into_bytes(),
                        stderr: format!(
                            "warning: light cone is {} columns wide (limit {}); writing CSV\n",
                            trace.width(),
                            trace::ASCII_MAX_COLUMNS
                        )
                        .into_bytes(),
                    },
                },
            })
        }
        Command::Phase { matrix, radius } => {
            let s = load(cli, matrix, stdin)?;
            let phi = default_phase(&s)?;
            let radius = radius.unwrap_or(s.radius() + 1);
            let cocycle = phi.validate_cocycle_seeded(radius, cli.seed);
            // the dense check only runs where the window fits
            let action = if s.dim() == 1 {
                match action_window(&s, s.modulus(), 2) {
                    Ok(w) => Some(check_clifford_action(&s, &phi, &w)?),
                    Err(Error::WindowTooLarge(_)) => None,
                    Err(e) => return Err(e),
                }
            } else {
                None
            };
            let mut doc = phase_to_json(&phi);
            doc["cocycle"] = json!(cocycle);
            doc["clifford_action"] = json!(action);
            let passed = cocycle && action != Some(false);
            Ok(Outcome::ok(line(doc)).with_code(if passed { 0 } else { 1 }))
        }
        Command::Selftest { window } => {
            let p = Prime::new(cli.p.unwrap_or(2))?;
            let reports = selftest(p, *window)?;
            let mut out = Vec::new();
            for r in &reports {
                out.extend(line(serde_json::to_value(r).expect("plain data")));
            }
            let passed = reports.iter().all(|r| r.passed);
            Ok(Outcome::ok(out).with_code(if passed { 0 } else { 1 }))
        }
    }
}
