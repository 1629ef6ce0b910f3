//! Command-line front end. [`run`] returns the process exit code:
//! 0 when everything passes, 1 on verification failures, 2 on usage or
//! configuration errors.

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::error::Error;
use crate::grid::load_grid_file;
use crate::hyper::DEFAULT_MAX_TERMS;
use crate::identities::{catalog, check, lookup, Expectation, Kind, ParamPoint, Status};
use crate::oracle::oracle_sum;
use crate::report::{run_jobs, Job, Report};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Verification harness for digamma-weighted hypergeometric sums.
#[derive(Debug, Parser)]
#[command(name = "psisum", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List the catalog.
    List {
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Check identities over their default grids or a grid file.
    Verify {
        /// Restrict to these ids (repeatable).
        #[arg(long = "id")]
        ids: Vec<String>,
        /// JSON grid file.
        #[arg(long)]
        grid: Option<PathBuf>,
        /// Override every tolerance.
        #[arg(long)]
        tol: Option<f64>,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
        /// Write the JSON report here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Reproduce a known misprint.
    Erratum {
        #[arg(value_enum)]
        name: ErratumName,
    },
    /// Check a single point.
    Point {
        #[arg(long)]
        id: String,
        /// Comma-separated symbol=value pairs.
        #[arg(long)]
        params: String,
        #[arg(long)]
        tol: Option<f64>,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ErratumName {
    #[value(name = "hansen-55-4-5-2")]
    Hansen5545,
}

/// Entry point shared by the binary and the tests.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{rendered}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{rendered}");
                    EXIT_USAGE
                }
            };
        }
    };
    let result = match cli.command {
        Command::List { format } => cmd_list(format, out),
        Command::Verify { ids, grid, tol, format, out: path } => cmd_verify(&ids, grid, tol, format, path, out),
        Command::Erratum { name: ErratumName::Hansen5545 } => cmd_erratum(out),
        Command::Point { id, params, tol, format } => cmd_point(&id, &params, tol, format, out),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error(transparent)]
    Core(#[from] Error),
    #[error("{0}")]
    Io(#[from] std::io::Error),
}

type CliResult = std::result::Result<i32, CliError>;

#[derive(Serialize)]
struct EntryInfo {
    id: &'static str,
    kind: Kind,
    symbols: Vec<&'static str>,
    anchor: &'static str,
    title: &'static str,
    expectation: Expectation,
}

fn cmd_list(format: Format, out: &mut dyn Write) -> CliResult {
    let infos: Vec<EntryInfo> = catalog()
        .iter()
        .map(|e| EntryInfo {
            id: e.id,
            kind: e.kind,
            symbols: e.symbols(),
            anchor: e.anchor,
            title: e.title,
            expectation: e.expectation,
        })
        .collect();
    match format {
        Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&infos).expect("serializable"))?,
        Format::Table => {
            for i in &infos {
                let kind = match i.kind {
                    Kind::Finite => "finite",
                    Kind::Infinite => "infinite",
                };
                writeln!(out, "{:<22} {:<9} {:<20} {}", i.id, kind, i.symbols.join(","), i.anchor)?;
            }
        }
    }
    Ok(EXIT_OK)
}

fn cmd_verify(
    ids: &[String],
    grid: Option<PathBuf>,
    tol: Option<f64>,
    format: Format,
    path: Option<PathBuf>,
    out: &mut dyn Write,
) -> CliResult {
    for id in ids {
        lookup(id)?;
    }
    let file_specs = match &grid {
        Some(p) => load_grid_file(p)?,
        None => Vec::new(),
    };
    let wanted = |id: &str| ids.is_empty() || ids.iter().any(|i| i == id);
    let mut jobs = Vec::new();
    for spec in file_specs.iter().filter(|s| wanted(&s.id)) {
        jobs.push(Job::from_grid(spec, tol)?);
    }
    let covered: Vec<String> = jobs.iter().map(|j| j.id.clone()).collect();
    for entry in catalog() {
        if covered.iter().any(|c| c == entry.id) {
            continue;
        }
        let selected = if ids.is_empty() {
            // An explicit grid file narrows the sweep to the entries it names.
            grid.is_none() && entry.expectation == Expectation::Holds
        } else {
            wanted(entry.id)
        };
        if selected {
            jobs.push(Job::from_grid(&entry.grid, tol)?);
        }
    }
    let report = Report::new(run_jobs(&jobs)?);
    if let Some(p) = &path {
        std::fs::write(p, report.to_json())?;
    }
    match format {
        Format::Json if path.is_none() => writeln!(out, "{}", report.to_json())?,
        _ => write_table(&report, out)?,
    }
    let s = report.summary;
    Ok(if s.failed > 0 || s.nonconverged > 0 { EXIT_FAILED } else { EXIT_OK })
}

fn write_table(report: &Report, out: &mut dyn Write) -> std::io::Result<()> {
    writeln!(
        out,
        "{:<22} {:>7} {:>7} {:>7} {:>7} {:>7} {:>11}",
        "id", "points", "passed", "failed", "skipped", "noconv", "worst"
    )?;
    let mut i = 0;
    let checks = &report.checks;
    while i < checks.len() {
        let id = &checks[i].id;
        let end = i + checks[i..].iter().take_while(|c| &c.id == id).count();
        let group = &checks[i..end];
        let s = crate::report::Summary::of(group);
        let worst = group
            .iter()
            .filter(|c| c.status == Status::Ok)
            .filter_map(|c| Some(if c.rhs?.abs() < 1.0 { c.abs_diff? } else { c.rel_diff? }))
            .fold(0.0f64, f64::max);
        writeln!(
            out,
            "{:<22} {:>7} {:>7} {:>7} {:>7} {:>7} {:>11.3e}",
            id, s.total, s.passed, s.failed, s.skipped, s.nonconverged, worst
        )?;
        i = end;
    }
    for c in checks.iter().filter(|c| !c.pass && matches!(c.status, Status::Ok | Status::LhsNonconverged)) {
        let show = |v: Option<f64>| v.map_or_else(|| "-".to_string(), |v| format!("{v:e}"));
        writeln!(out, "FAIL {} [{}] lhs={} rhs={} status={}", c.id, c.point, show(c.lhs), show(c.rhs), c.status)?;
    }
    let s = report.summary;
    writeln!(
        out,
        "total {} passed {} failed {} skipped {} nonconverged {}",
        s.total, s.passed, s.failed, s.skipped, s.nonconverged
    )
}

fn cmd_erratum(out: &mut dyn Write) -> CliResult {
    let (a, b, c) = crate::identities::HANSEN_DEMO;
    let point = ParamPoint::new().with("a", a).with("b", b).with("c", c);
    let rhs = (lookup("T4-HANSEN-corrected")?.rhs)(&point)?;
    let corrected = oracle_sum("T4-HANSEN-corrected", &point, DEFAULT_MAX_TERMS)?.to_f64();
    let published = oracle_sum("T4-HANSEN-published", &point, DEFAULT_MAX_TERMS)?.to_f64();
    let rel = |v: f64| (v - rhs).abs() / rhs.abs();
    let (rc, rp) = (rel(corrected), rel(published));
    let reproduced = rc <= 1e-9 && rp > 1e-2;
    writeln!(out, "erratum hansen-55-4-5-2")?;
    writeln!(out, "parameters     a = {a}, b = {b}, c = {c}")?;
    writeln!(out, "condition      a - b - c = {} > 0", a - b - c)?;
    writeln!(out, "closed form    {rhs:.17e}")?;
    writeln!(out, "corrected      psi(c+k): {corrected:.17e}  rel_diff {rc:.3e}")?;
    writeln!(out, "published      psi(c-k): {published:.17e}  rel_diff {rp:.3e}")?;
    writeln!(out, "difference     {:.17e}", published - corrected)?;
    writeln!(
        out,
        "verdict        {}",
        if reproduced { "erratum reproduced: corrected form holds, published form does not" } else { "NOT reproduced" }
    )?;
    Ok(if reproduced { EXIT_OK } else { EXIT_FAILED })
}

fn cmd_point(id: &str, params: &str, tol: Option<f64>, format: Format, out: &mut dyn Write) -> CliResult {
    let entry = lookup(id)?;
    let point = ParamPoint::parse(params)?;
    entry.validate_point(&point)?;
    if let Err(why) = entry.in_domain(&point) {
        return Err(Error::Domain(why).into());
    }
    let r = check(id, &point, tol.unwrap_or_else(|| entry.tolerance()))?;
    match format {
        Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&r).expect("serializable"))?,
        Format::Table => {
            let show = |v: Option<f64>| v.map_or_else(|| "-".to_string(), |x| format!("{x:.17e}"));
            writeln!(out, "id       {}", r.id)?;
            writeln!(out, "point    {}", r.point)?;
            writeln!(out, "lhs      {}", show(r.lhs))?;
            writeln!(out, "rhs      {}", show(r.rhs))?;
            writeln!(out, "abs_diff {}", show(r.abs_diff))?;
            writeln!(out, "rel_diff {}", show(r.rel_diff))?;
            writeln!(out, "status   {}", r.status)?;
            writeln!(out, "result   {}", if r.pass { "pass" } else { "fail" })?;
        }
    }
    Ok(if r.pass { EXIT_OK } else { EXIT_FAILED })
}
