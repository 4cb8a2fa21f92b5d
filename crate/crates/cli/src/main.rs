//! Command-line front end for the join-dimension engine.
//!
//! Three subcommands: `classify` loads a variety description, measures
//! spans, vertices, secants and pairwise joins, and prints the verdict
//! with its classification case; `corpus` writes the generated example
//! families as description files; `props` runs the seeded property
//! suites behind the classifier.
//!
//! Exit codes are a total function of the outcome: 0 means the union is
//! isomorphically projectable to P^4 (for `props` and `corpus`, plain
//! success), 1 means it is not (or a property violation was found),
//! 2 means bad input (I/O, JSON, schema, degenerate builder data) and
//! 3 means the randomized engine could not certify an answer.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};

use jembed_core::classify::{analyze, classify, CaseId};
use jembed_core::corpus::golden_corpus;
use jembed_core::error::Error;
use jembed_core::field::{Field, PrimeField, Rationals, DEFAULT_PRIME};
use jembed_core::props::{all_suites, ClauseReport, SuiteReport, Violation};
use jembed_core::schema::{PropsDoc, ReportDoc, VarietyDoc};
use jembed_core::terracini::GenericityConfig;

#[derive(Parser)]
#[command(name = "jembed", version, about = "Join dimensions and P^4-projectability of parametrized surface unions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze a variety description and print its classification report.
    Classify {
        /// Variety description JSON file.
        #[arg(long)]
        input: PathBuf,
        /// Root seed for every randomized measurement.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Genericity trials per dimension measurement (at least 2).
        #[arg(long, value_parser = at_least_two)]
        trials: Option<usize>,
        /// Coefficient field.
        #[arg(long, default_value = "rational")]
        field: FieldChoice,
        /// Output format.
        #[arg(long, value_enum, default_value_t = Format::Text)]
        report: Format,
    },
    /// Write the generated example families as variety description files.
    Corpus {
        /// Directory that receives one JSON file per case.
        #[arg(long, required_unless_present = "list")]
        out_dir: Option<PathBuf>,
        /// Seed the case coordinates are derived from.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Print case names and expected cases without writing files.
        #[arg(long)]
        list: bool,
    },
    /// Run the seeded property suites for the join-dimension criteria.
    Props {
        /// Root seed; instance i of a clause uses seed + i.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Random instances per clause (at least 2).
        #[arg(long, default_value_t = 10, value_parser = at_least_two)]
        trials: usize,
        /// Coefficient field.
        #[arg(long, default_value = "rational")]
        field: FieldChoice,
        /// Output format.
        #[arg(long, value_enum, default_value_t = Format::Text)]
        report: Format,
        /// Append a synthetic failing suite; exercises the failure path.
        #[arg(long, hide = true)]
        inject_failure: bool,
    },
}

#[derive(Clone, Copy, Debug)]
enum FieldChoice {
    Rational,
    Prime(u64),
}

impl FromStr for FieldChoice {
    type Err = String;

    fn from_str(s: &str) -> Result<FieldChoice, String> {
        match s {
            "rational" => Ok(FieldChoice::Rational),
            "prime" => Ok(FieldChoice::Prime(DEFAULT_PRIME)),
            _ => match s.strip_prefix("prime:") {
                Some(p) => p
                    .parse()
                    .map(FieldChoice::Prime)
                    .map_err(|_| format!("`{p}` is not a modulus")),
                None => Err(format!(
                    "unknown field `{s}`; expected `rational`, `prime` or `prime:P`"
                )),
            },
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

fn at_least_two(s: &str) -> Result<usize, String> {
    let n: usize = s.parse().map_err(|_| format!("`{s}` is not a count"))?;
    if n < 2 {
        return Err("needs at least 2".into());
    }
    Ok(n)
}

const EXIT_NOT_EMBEDDABLE: u8 = 1;
const EXIT_BAD_INPUT: u8 = 2;
const EXIT_UNCERTIFIED: u8 = 3;

/// Input problems exit 2; failures of the randomized engine exit 3. The
/// split is by error class, not by call site, so the code is stable.
fn exit_for(e: &Error) -> u8 {
    match e {
        Error::Genericity(_)
        | Error::TangencyNotLocated(_)
        | Error::SingularSample { .. }
        | Error::BasePoint(_)
        | Error::DivisionByZero(_) => EXIT_UNCERTIFIED,
        _ => EXIT_BAD_INPUT,
    }
}

fn fail(code: u8, msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(code)
}

fn main() -> ExitCode {
    match Cli::parse().command {
        Command::Classify {
            input,
            seed,
            trials,
            field,
            report,
        } => run_classify(&input, seed, trials, field, report),
        Command::Corpus { out_dir, seed, list } => run_corpus(out_dir.as_deref(), seed, list),
        Command::Props {
            seed,
            trials,
            field,
            report,
            inject_failure,
        } => run_props(seed, trials, field, report, inject_failure),
    }
}

fn run_classify(
    input: &Path,
    seed: u64,
    trials: Option<usize>,
    field: FieldChoice,
    format: Format,
) -> ExitCode {
    let text = match std::fs::read_to_string(input) {
        Ok(t) => t,
        Err(e) => return fail(EXIT_BAD_INPUT, format_args!("{}: {e}", input.display())),
    };
    let doc = match VarietyDoc::from_json(&text) {
        Ok(d) => d,
        Err(e) => return fail(EXIT_BAD_INPUT, e),
    };
    let model = match doc.to_model() {
        Ok(m) => m,
        Err(e) => return fail(exit_for(&e), e),
    };

    let mut cfg = GenericityConfig::new(seed);
    if let Some(t) = trials {
        cfg = cfg.with_trials(t);
    }

    let outcome = match field {
        FieldChoice::Rational => classify_over(&Rationals, seed, cfg, &model),
        FieldChoice::Prime(p) => match PrimeField::new(p) {
            Ok(f) => classify_over(&f, seed, cfg, &model),
            Err(e) => return fail(EXIT_BAD_INPUT, e),
        },
    };
    let report = match outcome {
        Ok(r) => r,
        Err(e) => return fail(exit_for(&e), e),
    };

    match format {
        Format::Text => print!("{}", report.render_text()),
        Format::Json => print!("{}", report.to_json()),
    }
    if report.case_id == CaseId::Unmatched {
        ExitCode::from(EXIT_UNCERTIFIED)
    } else if report.case_id == CaseId::NotJEmbeddable {
        ExitCode::from(EXIT_NOT_EMBEDDABLE)
    } else {
        ExitCode::SUCCESS
    }
}

fn classify_over<F: Field>(
    f: &F,
    seed: u64,
    cfg: GenericityConfig,
    model: &jembed_core::classify::VarietyModel,
) -> Result<ReportDoc, Error> {
    let report = analyze(f, model, &cfg)?;
    let label = classify(f, model, &report, &cfg)?;
    Ok(ReportDoc::build(f, seed, cfg.trials, model, &report, &label))
}

fn run_corpus(out_dir: Option<&Path>, seed: u64, list: bool) -> ExitCode {
    let cases = match golden_corpus(seed) {
        Ok(c) => c,
        Err(e) => return fail(exit_for(&e), e),
    };
    let mut out = String::new();
    for case in &cases {
        if let Some(dir) = out_dir {
            if let Err(e) = std::fs::create_dir_all(dir) {
                return fail(EXIT_BAD_INPUT, format_args!("{}: {e}", dir.display()));
            }
            let path = dir.join(format!("{}.json", case.name));
            let doc = VarietyDoc::from_model(&case.model);
            if let Err(e) = std::fs::write(&path, doc.to_json()) {
                return fail(EXIT_BAD_INPUT, format_args!("{}: {e}", path.display()));
            }
        }
        let verb = if list { "case" } else { "wrote" };
        let name = if list {
            case.name.clone()
        } else {
            format!("{}.json", case.name)
        };
        let _ = writeln!(out, "{verb} {name}  (expected {})", case.expected_case);
    }
    print!("{out}");
    ExitCode::SUCCESS
}

fn run_props(
    seed: u64,
    instances: usize,
    field: FieldChoice,
    format: Format,
    inject_failure: bool,
) -> ExitCode {
    let outcome = match field {
        FieldChoice::Rational => props_over(&Rationals, seed, instances),
        FieldChoice::Prime(p) => match PrimeField::new(p) {
            Ok(f) => props_over(&f, seed, instances),
            Err(e) => return fail(EXIT_BAD_INPUT, e),
        },
    };
    let mut doc = match outcome {
        Ok(d) => d,
        Err(e) => return fail(exit_for(&e), e),
    };
    if inject_failure {
        doc.suites.push(SuiteReport {
            suite: "injected".into(),
            clauses: vec![ClauseReport {
                clause: "forced-failure".into(),
                instances: 1,
                violations: vec![Violation {
                    repro_seed: seed,
                    detail: "synthetic violation requested on the command line".into(),
                }],
            }],
        });
        doc.passed = false;
    }
    match format {
        Format::Text => print!("{}", doc.render_text()),
        Format::Json => print!("{}", doc.to_json()),
    }
    if doc.passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_NOT_EMBEDDABLE)
    }
}

fn props_over<F: Field>(f: &F, seed: u64, instances: usize) -> Result<PropsDoc, Error> {
    let suites = all_suites(f, instances, seed)?;
    Ok(PropsDoc::build(f, seed, instances, suites))
}
