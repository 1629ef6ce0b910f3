//! Sweep execution and the JSON report.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::grid::GridSpec;
use crate::identities::{check, lookup, CheckResult, ParamPoint, Status};

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    /// Domain exclusions and pole hits.
    pub skipped: usize,
    pub nonconverged: usize,
}

impl Summary {
    pub fn of(checks: &[CheckResult]) -> Self {
        let mut s = Summary { total: checks.len(), ..Summary::default() };
        for c in checks {
            match c.status {
                Status::Ok if c.pass => s.passed += 1,
                Status::Ok => s.failed += 1,
                Status::LhsNonconverged => s.nonconverged += 1,
                Status::PoleSkipped | Status::DomainExcluded => s.skipped += 1,
            }
        }
        s
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub tool_version: String,
    pub generated_at: String,
    pub checks: Vec<CheckResult>,
    pub summary: Summary,
}

impl Report {
    /// Sorts the checks and computes the summary.
    pub fn new(mut checks: Vec<CheckResult>) -> Self {
        checks.sort_by(|a, b| a.order(b));
        let summary = Summary::of(&checks);
        Report {
            tool_version: TOOL_VERSION.to_string(),
            generated_at: chrono::Utc::now().to_rfc3339_opts(chrono::SecondsFormat::Secs, true),
            checks,
            summary,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }
}

/// One grid to run, with the tolerance already resolved.
#[derive(Clone, Debug)]
pub struct Job {
    pub id: String,
    pub points: Vec<ParamPoint>,
    pub tol: f64,
}

impl Job {
    /// Tolerance precedence: explicit override, then the grid's own, then the entry default.
    pub fn from_grid(grid: &GridSpec, tol_override: Option<f64>) -> Result<Self> {
        let entry = lookup(&grid.id)?;
        let points = grid.points()?;
        for p in &points {
            entry.validate_point(p)?;
        }
        let tol = tol_override.or(grid.tolerance).unwrap_or_else(|| entry.tolerance());
        Ok(Job { id: grid.id.clone(), points, tol })
    }
}

/// Runs every point of every job in parallel; the result is sorted.
pub fn run_jobs(jobs: &[Job]) -> Result<Vec<CheckResult>> {
    let flat: Vec<(&str, &ParamPoint, f64)> =
        jobs.iter().flat_map(|j| j.points.iter().map(move |p| (j.id.as_str(), p, j.tol))).collect();
    let mut checks = flat.par_iter().map(|&(id, p, tol)| check(id, p, tol)).collect::<Result<Vec<_>>>()?;
    checks.sort_by(|a, b| a.order(b));
    Ok(checks)
}
