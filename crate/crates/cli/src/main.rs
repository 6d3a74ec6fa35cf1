mod render;

use std::fs;
use std::io::{self, Write};
use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use gsslab_core::analysis::analyze;
use gsslab_core::gf2x::{primitive_polynomials, validate_primitive_in, BinaryPoly, PrimitivePolynomial};
use gsslab_core::gss::{decimation_trace, gss_family, gss_generate, GssIndex, IndexSpec};
use gsslab_core::sequences::generate_msequence;
use gsslab_core::theorems::{run_verifiers, verify_all_on, Workbench, VERIFIER_NAMES};

use render::Format;

const GENERATION_MAX_L: u32 = 24;
const EXHAUSTIVE_MAX_L: u32 = 16;

#[derive(Parser, Debug)]
#[command(name = "gsslab", version, about = "Generalized self-shrinking sequence workbench")]
struct Cli {
    /// Feedback polynomial, symbolic (x^4+x+1) or hex (0x13).
    #[arg(long, global = true)]
    poly: Option<String>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,

    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Largest degree accepted; defaults to 24 for generation and 16 for
    /// whole-family commands.
    #[arg(long = "max-l", global = true, env = "GSSLAB_MAX_L")]
    max_l: Option<u32>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct Scope {
    /// Member at shift s.
    #[arg(long)]
    shift: Option<usize>,
    /// Member named as `zero`, `s=<int>`, `G=<bits>` or `ss`.
    #[arg(long)]
    index: Option<String>,
    /// Every member of the family.
    #[arg(long)]
    family: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Emit one family member or the whole family.
    Generate {
        #[command(flatten)]
        scope: Scope,
        /// Print the decimation table to stderr.
        #[arg(long)]
        trace: bool,
    },
    /// Period, linear complexity, balance and runs.
    Analyze {
        #[command(flatten)]
        scope: Scope,
    },
    /// Run structural checks over the whole family.
    Verify {
        /// Run every registered check.
        #[arg(long)]
        all: bool,
        /// Checks to run, by name.
        #[arg(value_parser = clap::builder::PossibleValuesParser::new(VERIFIER_NAMES))]
        names: Vec<String>,
    },
    /// Verify every primitive polynomial in a degree range.
    Scan {
        /// Inclusive range such as `2..8`.
        #[arg(long, value_parser = parse_degrees)]
        degrees: RangeInclusive<u32>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Cap {
    Generation,
    Exhaustive,
}

struct Failure(String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

fn parse_degrees(s: &str) -> Result<RangeInclusive<u32>, String> {
    let (a, b) = s
        .split_once("..")
        .ok_or_else(|| format!("expected A..B, got `{s}`"))?;
    let a: u32 = a.trim().parse().map_err(|_| format!("bad lower degree `{a}`"))?;
    let b: u32 = b.trim().parse().map_err(|_| format!("bad upper degree `{b}`"))?;
    if a > b {
        return Err(format!("empty range {a}..{b}"));
    }
    Ok(a..=b)
}

impl Cli {
    fn cap(&self, cap: Cap) -> u32 {
        self.max_l.unwrap_or(match cap {
            Cap::Generation => GENERATION_MAX_L,
            Cap::Exhaustive => EXHAUSTIVE_MAX_L,
        })
    }

    fn polynomial(&self, cap: Cap) -> Result<PrimitivePolynomial, Failure> {
        let text = self
            .poly
            .as_deref()
            .ok_or_else(|| Failure("missing --poly".into()))?;
        let raw: BinaryPoly = text.parse().map_err(|e| Failure(format!("poly: {e}")))?;
        validate_primitive_in(raw, 2..=self.cap(cap)).map_err(|e| Failure(format!("poly: {e}")))
    }
}

impl Scope {
    fn cap(&self) -> Cap {
        if self.family {
            Cap::Exhaustive
        } else {
            Cap::Generation
        }
    }

    fn member(&self, poly: &PrimitivePolynomial) -> Result<Option<GssIndex>, Failure> {
        let spec = match (&self.shift, &self.index) {
            (Some(s), _) => IndexSpec::Shift(*s),
            (None, Some(i)) => i.parse().map_err(|e| Failure(format!("index: {e}")))?,
            (None, None) => return Ok(None),
        };
        Ok(Some(spec.resolve(poly).map_err(|e| Failure(format!("index: {e}")))?))
    }
}

/// Rendered output plus whether every check held.
struct Outcome {
    text: String,
    confirmed: bool,
}

fn run(cli: &Cli) -> Result<Outcome, Failure> {
    let ok = |text| Outcome { text, confirmed: true };
    match &cli.command {
        Command::Generate { scope, trace } => {
            let poly = cli.polynomial(scope.cap())?;
            let seq = generate_msequence(&poly);
            match scope.member(&poly)? {
                Some(index) => {
                    if *trace {
                        if let GssIndex::Shift(s) = index {
                            eprint!("{}", render::trace(&decimation_trace(&seq, s)?));
                        }
                    }
                    let member = gss_generate(&seq, index)?;
                    Ok(ok(render::members(cli.format, &poly, std::slice::from_ref(&member))))
                }
                None => {
                    let family = gss_family(&seq);
                    Ok(ok(render::members(cli.format, &poly, &family.members)))
                }
            }
        }
        Command::Analyze { scope } => {
            let poly = cli.polynomial(scope.cap())?;
            let seq = generate_msequence(&poly);
            let reports = match scope.member(&poly)? {
                Some(index) => vec![analyze(Some(index), &gss_generate(&seq, index)?.bits)],
                None => gss_family(&seq)
                    .members
                    .iter()
                    .map(|m| analyze(Some(m.index), &m.bits))
                    .collect(),
            };
            Ok(ok(render::analyses(cli.format, &poly, &reports)))
        }
        Command::Verify { all, names } => {
            if !*all && names.is_empty() {
                return Err(Failure("verify needs --all or at least one check name".into()));
            }
            let poly = cli.polynomial(Cap::Exhaustive)?;
            let wb = Workbench::new(poly)?;
            let reports = if *all {
                verify_all_on(&wb)
            } else {
                let names: Vec<&str> = names.iter().map(String::as_str).collect();
                run_verifiers(&names, &wb)?
            };
            Ok(Outcome {
                confirmed: reports.iter().all(|r| r.is_confirmed()),
                text: render::verdicts(cli.format, &reports),
            })
        }
        Command::Scan { degrees } => {
            let cap = cli.cap(Cap::Exhaustive);
            if *degrees.start() < 2 || *degrees.end() > cap {
                return Err(Failure(format!(
                    "degrees: DegreeOutOfRange: {}..{} not within 2..{cap}",
                    degrees.start(),
                    degrees.end()
                )));
            }
            let mut rows = Vec::new();
            for l in degrees.clone() {
                for poly in primitive_polynomials(l) {
                    rows.push((poly, verify_all_on(&Workbench::new(poly)?)));
                }
            }
            Ok(Outcome {
                confirmed: rows.iter().all(|(_, rs)| rs.iter().all(|r| r.is_confirmed())),
                text: render::scan(cli.format, degrees, &rows),
            })
        }
    }
}

fn emit(cli: &Cli, text: &str) -> io::Result<()> {
    match &cli.out {
        Some(path) => fs::write(path, text),
        None => io::stdout().lock().write_all(text.as_bytes()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(outcome) => {
            if let Err(e) = emit(&cli, &outcome.text) {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
            if outcome.confirmed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
