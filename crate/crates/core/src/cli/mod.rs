//! Command-line front end. [`run`] parses arguments, executes one command
//! and returns the process exit code:
//!
//! | code | meaning |
//! |------|---------|
//! | 0 | success |
//! | 1 | verification failure (or an output file could not be written) |
//! | 2 | bound violation |
//! | 3 | parse error |
//!
//! Every JSON document carries `"schema": 1` and has its keys sorted.

pub mod analyze;
pub mod args;
pub mod render;
pub mod verify;

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;

use clap::error::ErrorKind;
use clap::Parser;
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::Error;
use crate::ledger::wall_crossing_report;
use crate::oracles::{
    blattner_multiplicity, branching_multiplicity, character_branching_routes, crosscheck_compact, crosscheck_u_n_1,
    BlattnerInput, DominantWeight,
};
use crate::recipe::{fiber_connectivity_report, harris_numerology, wall_graph, RootLedger, DEFAULT_BOUND};
use crate::weights::{enumerate_strings, HalfInt, InfinitesimalCharacter, InterlacingString, MultiPlaceString};
use args::{Cli, Command, GraphFormat, ListFormat, OracleCommand, ReportFormat};

pub const SCHEMA_VERSION: u64 = 1;
pub const ENUMERATE_MAX_N: usize = 10;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY: i32 = 1;
pub const EXIT_BOUND: i32 = 2;
pub const EXIT_PARSE: i32 = 3;

/// Output of one command, produced off the caller's thread.
#[derive(Default)]
struct Outcome {
    stdout: String,
    stderr: String,
    code: i32,
}

enum Failure {
    Lib(Error),
    /// A library error tied to one command-line token.
    Token(String, Error),
    Io(String),
}

fn token<T>(raw: &str, r: Result<T, Error>) -> Result<T, Failure> {
    r.map_err(|e| Failure::Token(raw.to_string(), e))
}

/// Parses one string per place, blaming the offending place's token.
fn parse_places(list: &str) -> Result<MultiPlaceString, Failure> {
    let strings = list
        .split(',')
        .map(|t| token(t, t.trim().parse::<InterlacingString>()))
        .collect::<Result<Vec<_>, _>>()?;
    token(list, MultiPlaceString::new(strings))
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::BoundExceeded { .. } | Error::InvalidPosition { .. } => EXIT_BOUND,
        _ => EXIT_PARSE,
    }
}

/// Serializes `value` with sorted keys and a top-level schema field.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut v = serde_json::to_value(value).expect("report types serialize");
    if let Value::Object(map) = &mut v {
        map.insert("schema".into(), json!(SCHEMA_VERSION));
    }
    let mut s = serde_json::to_string_pretty(&v).expect("values serialize");
    s.push('\n');
    s
}

fn parse_halfints(list: &str) -> Result<Vec<HalfInt>, Error> {
    list.split(',').filter(|t| !t.trim().is_empty()).map(str::parse).collect()
}

fn parse_character(list: &str) -> Result<InfinitesimalCharacter, Error> {
    InfinitesimalCharacter::new(parse_halfints(list)?)
}

fn parse_ints(list: &str) -> Result<Vec<i64>, Error> {
    list.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse().map_err(|_| Error::InvalidHalfInt(t.to_string())))
        .collect()
}

fn check_range(what: &'static str, n: usize, max: usize) -> Result<(), Error> {
    if n == 0 || n > max {
        return Err(Error::BoundExceeded {
            what,
            value: n as i64,
            bound: max as i64,
        });
    }
    Ok(())
}

fn cmd_enumerate(n: usize, format: ListFormat) -> Result<String, Failure> {
    check_range("n", n, ENUMERATE_MAX_N)?;
    let strings = enumerate_strings(n);
    Ok(match format {
        ListFormat::Plain => strings.iter().map(|s| format!("{s}\n")).collect(),
        ListFormat::Json => to_json(&json!({ "n": n, "count": strings.len(), "strings": strings })),
        ListFormat::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["index", "string", "area"]).map_err(|e| Failure::Io(e.to_string()))?;
            for (i, s) in strings.iter().enumerate() {
                w.write_record([(i + 1).to_string(), s.to_string(), s.area().to_string()])
                    .map_err(|e| Failure::Io(e.to_string()))?;
            }
            let bytes = w.into_inner().map_err(|e| Failure::Io(e.to_string()))?;
            String::from_utf8(bytes).expect("csv of ASCII fields")
        }
    })
}

fn cmd_analyze(a: &args::AnalyzeArgs) -> Result<String, Failure> {
    let record = match (&a.string, &a.a, &a.b) {
        (Some(s), _, _) => analyze::analyze_strings(parse_places(s)?, a.eps_finite)?,
        (None, Some(x), Some(y)) => {
            analyze::analyze_weights(token(x, parse_character(x))?, token(y, parse_character(y))?, a.eps_finite)?
        }
        _ => return Err(Failure::Lib(Error::InvalidHalfInt("give --string or both --a and --b".into()))),
    };
    if let Some(path) = &a.svg {
        let tableaux: Vec<_> = record
            .places
            .iter()
            .map(|p| (p.string.to_string(), p.string.to_tableau()))
            .collect();
        std::fs::write(path, render::svg_tableaux(&tableaux))
            .map_err(|e| Failure::Io(format!("cannot write {}: {e}", path.display())))?;
    }
    Ok(match a.format {
        ReportFormat::Text => analyze::render_text(&record),
        ReportFormat::Json => to_json(&record),
    })
}

fn cmd_fibers(n: usize, format: ReportFormat) -> Result<String, Failure> {
    let r = fiber_connectivity_report(n, DEFAULT_BOUND)?;
    let fibers: Vec<Value> = r
        .partition
        .fibers
        .iter()
        .zip(&r.connected)
        .map(|(f, &c)| json!({ "dist": f.value, "strings": f.strings, "size": f.strings.len(), "connected": c }))
        .collect();
    Ok(match format {
        ReportFormat::Json => to_json(&json!({
            "n": n,
            "string_count": r.partition.string_count,
            "image_size": r.partition.image_size(),
            "injective": r.partition.is_injective(),
            "fibers": fibers,
            "all_connected": r.all_connected,
            "block_class_count": r.block_class_count,
            "block_classes_within_fibers": r.block_classes_within_fibers,
        })),
        ReportFormat::Text => {
            let mut out = String::new();
            let _ = writeln!(
                out,
                "n={n}: {} strings, image {}, {} block classes, all fibers connected: {}",
                r.partition.string_count,
                r.partition.image_size(),
                r.block_class_count,
                r.all_connected
            );
            for (f, c) in r.partition.fibers.iter().zip(&r.connected) {
                let names: Vec<_> = f.strings.iter().map(ToString::to_string).collect();
                let _ = writeln!(out, "{} {}: {}", f.value, if *c { "connected" } else { "split" }, names.join(" "));
            }
            out
        }
    })
}

fn cmd_oracle(which: &OracleCommand) -> Result<String, Failure> {
    Ok(match which {
        OracleCommand::Branching { lambda, mu } => {
            let l = token(lambda, parse_ints(lambda).and_then(DominantWeight::new))?;
            let m = token(mu, parse_ints(mu).and_then(DominantWeight::new))?;
            let routes = character_branching_routes(&l, &m)?;
            to_json(&json!({
                "lambda": l,
                "mu": m,
                "interlacing": branching_multiplicity(&l, &m),
                "gelfand_tsetlin": routes.gelfand_tsetlin,
                "weyl_character": routes.weyl_character,
                "agree": routes.gelfand_tsetlin == routes.weyl_character
                    && routes.weyl_character == branching_multiplicity(&l, &m),
            }))
        }
        OracleCommand::Blattner { k, string, a, b } => {
            let input = match (string, a, b) {
                (Some(s), _, _) => BlattnerInput::from_string(*k, &token(s, s.parse::<InterlacingString>())?)?,
                (None, Some(x), Some(y)) => {
                    BlattnerInput::from_interlacing(*k, &token(x, parse_character(x))?, &token(y, parse_character(y))?)?
                }
                _ => return Err(Failure::Lib(Error::InvalidHalfInt("give --string or both --a and --b".into()))),
            };
            let m = blattner_multiplicity(&input)?;
            to_json(&json!({
                "n": input.n,
                "k": input.k,
                "a": input.a,
                "lambda": input.lambda(),
                "lambda_plus_rho_n": input.lambda_plus_rho_n(),
                "mu": input.mu,
                "mu_u1": input.mu_u1,
                "mu_plus_rho_c": input.mu_plus_rho_c(),
                "multiplicity": m,
            }))
        }
        OracleCommand::Compact { n } => to_json(&crosscheck_compact(*n)?),
        OracleCommand::UN1 { n, k } => to_json(&crosscheck_u_n_1(*n, *k)?),
        OracleCommand::Harris { n } => {
            check_range("n", *n, DEFAULT_BOUND)?;
            let rows = harris_numerology(*n);
            to_json(&json!({
                "n": n,
                "rows": rows,
                "holomorphic_numerology": rows.iter().all(|r| r.holomorphic_numerology()),
            }))
        }
    })
}

fn cmd_verify(max_n: usize, color: bool) -> Result<(String, i32), Failure> {
    let checks = verify::run_checks(max_n)?;
    let mut out = String::new();
    let paint = |pass: bool| match (pass, color) {
        (true, true) => "\x1b[32mPASS\x1b[0m",
        (false, true) => "\x1b[31mFAIL\x1b[0m",
        (true, false) => "PASS",
        (false, false) => "FAIL",
    };
    for c in &checks {
        let _ = writeln!(out, "{} {}: {}", paint(c.pass), c.name, c.detail);
    }
    for line in verify::fiber_summary(max_n) {
        let _ = writeln!(out, "INFO {line}");
    }
    let failed = checks.iter().filter(|c| !c.pass).count();
    let _ = writeln!(out, "{} of {} invariants passed", checks.len() - failed, checks.len());
    Ok((out, if failed == 0 { EXIT_OK } else { EXIT_VERIFY }))
}

fn dispatch(cli: &Cli, color: bool) -> Outcome {
    let result = match &cli.command {
        Command::Enumerate { n, format } => cmd_enumerate(*n, *format).map(|s| (s, EXIT_OK)),
        Command::Analyze(a) => cmd_analyze(a).map(|s| (s, EXIT_OK)),
        Command::Graph { n, eps_finite, format } => wall_graph(*n, &RootLedger::new(*eps_finite, 1), DEFAULT_BOUND)
            .map(|g| match format {
                GraphFormat::Dot => (g.to_dot(), EXIT_OK),
                GraphFormat::Json => (to_json(&g), EXIT_OK),
            })
            .map_err(Failure::from),
        Command::Fibers { n, format } => cmd_fibers(*n, *format).map(|s| (s, EXIT_OK)),
        Command::Walls { strings, eps_finite } => parse_places(strings).and_then(|m| {
            let r = wall_crossing_report(&m, &RootLedger::new(*eps_finite, m.g()))?;
            Ok((to_json(&r), EXIT_OK))
        }),
        Command::Oracle { which } => cmd_oracle(which).map(|s| (s, EXIT_OK)),
        Command::Verify { max_n } => cmd_verify(*max_n, color),
    };
    match result {
        Ok((stdout, code)) => Outcome {
            stdout,
            code,
            ..Outcome::default()
        },
        Err(Failure::Lib(e)) => Outcome {
            stderr: format!("error: {e}\n"),
            code: exit_code(&e),
            ..Outcome::default()
        },
        Err(Failure::Token(raw, e)) => Outcome {
            stderr: format!("error: '{raw}': {e}\n"),
            code: exit_code(&e),
            ..Outcome::default()
        },
        Err(Failure::Io(msg)) => Outcome {
            stderr: format!("error: {msg}\n"),
            code: EXIT_VERIFY,
            ..Outcome::default()
        },
    }
}

/// Runs the CLI with colour disabled.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    run_with_color(args, out, err, false)
}

pub fn run_with_color<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write, color: bool) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion | ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand => {
                    let _ = out.write_all(text.as_bytes());
                    if e.kind() == ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand {
                        EXIT_PARSE
                    } else {
                        EXIT_OK
                    }
                }
                _ => {
                    let _ = err.write_all(text.as_bytes());
                    EXIT_PARSE
                }
            };
        }
    };
    let outcome = match cli.workers {
        Some(0) => Outcome {
            stderr: "error: --workers must be at least 1\n".into(),
            code: EXIT_BOUND,
            ..Outcome::default()
        },
        Some(w) => match rayon::ThreadPoolBuilder::new().num_threads(w).build() {
            Ok(pool) => pool.install(|| dispatch(&cli, color)),
            Err(e) => Outcome {
                stderr: format!("error: cannot start {w} workers: {e}\n"),
                code: EXIT_VERIFY,
                ..Outcome::default()
            },
        },
        None => dispatch(&cli, color),
    };
    let _ = out.write_all(outcome.stdout.as_bytes());
    let _ = err.write_all(outcome.stderr.as_bytes());
    let _ = out.flush();
    outcome.code
}
