//! Catalog of digamma-weighted summation identities, each with a domain
//! predicate, a left-hand series, a closed-form right-hand side and a default
//! verification grid.

mod base;
mod finite;
mod infinite;
mod sofostasios;
mod support;

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::Index;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grid::GridSpec;
use crate::hyper::{sum_series, SeriesResult, TermSeries, DEFAULT_MAX_TERMS, DEFAULT_REL_TOL};
use crate::oracle::sum_extended;
use crate::specfun::digamma;

pub use infinite::HANSEN_DEMO;
pub use sofostasios::{d1_first, d1_second, Inner};

/// Values for the free symbols of an identity.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ParamPoint(pub BTreeMap<String, f64>);

impl ParamPoint {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, symbol: &str, value: f64) -> Self {
        self.0.insert(symbol.to_string(), value);
        self
    }

    pub fn get(&self, symbol: &str) -> Option<f64> {
        self.0.get(symbol).copied()
    }

    /// Parses `a=1,b=2.5`.
    pub fn parse(text: &str) -> Result<Self> {
        let mut p = ParamPoint::new();
        for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (k, v) =
                item.split_once('=').ok_or_else(|| Error::Params(format!("expected symbol=value, got '{item}'")))?;
            let v: f64 = v
                .trim()
                .parse()
                .map_err(|_| Error::Params(format!("not a number for '{}': '{}'", k.trim(), v.trim())))?;
            if p.0.insert(k.trim().to_string(), v).is_some() {
                return Err(Error::Params(format!("symbol '{}' given twice", k.trim())));
            }
        }
        Ok(p)
    }

    /// Lexicographic order of the values in symbol order.
    pub fn cmp_values(&self, other: &Self) -> Ordering {
        let a = self.0.iter();
        let b = other.0.iter();
        for ((ka, va), (kb, vb)) in a.zip(b) {
            let ord = ka.cmp(kb).then(va.total_cmp(vb));
            if ord != Ordering::Equal {
                return ord;
            }
        }
        self.0.len().cmp(&other.0.len())
    }
}

impl Index<&str> for ParamPoint {
    type Output = f64;
    fn index(&self, symbol: &str) -> &f64 {
        self.0.get(symbol).unwrap_or_else(|| panic!("missing symbol {symbol}"))
    }
}

impl fmt::Display for ParamPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|(k, v)| format!("{k}={v}")).collect();
        f.write_str(&parts.join(","))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Param {
    pub symbol: &'static str,
    pub integer: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Kind {
    Finite,
    Infinite,
}

/// Whether the printed closed form is expected to hold.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Expectation {
    Holds,
    /// Reproduces a known misprint; a failing check is the expected outcome.
    Erratum,
}

pub type DomainFn = fn(&ParamPoint) -> std::result::Result<(), String>;
pub type RhsFn = fn(&ParamPoint) -> Result<f64>;

#[derive(Clone, Copy)]
pub enum LhsForm {
    /// A single [`TermSeries`]; both the plain and the extended path apply.
    Series(fn(&ParamPoint) -> Result<TermSeries>),
    /// Anything else, evaluated in binary64 only.
    Custom(fn(&ParamPoint) -> Result<SeriesResult>),
}

/// One catalog entry.
pub struct Identity {
    pub id: &'static str,
    pub title: &'static str,
    pub anchor: &'static str,
    pub params: Vec<Param>,
    pub kind: Kind,
    pub expectation: Expectation,
    pub domain: DomainFn,
    pub lhs: LhsForm,
    pub rhs: RhsFn,
    pub grid: GridSpec,
    /// Evaluate the left-hand side in extended precision by default.
    pub extended: bool,
}

impl fmt::Debug for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Identity").field("id", &self.id).field("kind", &self.kind).finish_non_exhaustive()
    }
}

impl Identity {
    pub fn symbols(&self) -> Vec<&'static str> {
        self.params.iter().map(|p| p.symbol).collect()
    }

    /// Default tolerance for this entry's grid.
    pub fn tolerance(&self) -> f64 {
        self.grid.tolerance.unwrap_or(DEFAULT_TOLERANCE)
    }

    /// The point must name exactly the declared symbols.
    pub fn validate_point(&self, point: &ParamPoint) -> Result<()> {
        for p in &self.params {
            if point.get(p.symbol).is_none() {
                return Err(Error::Params(format!("{}: missing symbol '{}'", self.id, p.symbol)));
            }
        }
        for key in point.0.keys() {
            if !self.params.iter().any(|p| p.symbol == key) {
                return Err(Error::Params(format!("{}: unknown symbol '{key}'", self.id)));
            }
        }
        Ok(())
    }

    /// Domain predicate including integrality of integer symbols.
    pub fn in_domain(&self, point: &ParamPoint) -> std::result::Result<(), String> {
        for p in &self.params {
            let v = point[p.symbol];
            if !v.is_finite() {
                return Err(format!("{} is not finite", p.symbol));
            }
            if p.integer && (v < 0.0 || v.fract() != 0.0) {
                return Err(format!("{} must be a non-negative integer", p.symbol));
            }
        }
        (self.domain)(point)
    }
}

/// Fallback tolerance for entries without their own.
pub const DEFAULT_TOLERANCE: f64 = 1e-9;

static CATALOG: OnceLock<Vec<Identity>> = OnceLock::new();

/// All entries, sorted by id.
pub fn catalog() -> &'static [Identity] {
    CATALOG.get_or_init(|| {
        let mut all = Vec::new();
        all.extend(base::entries());
        all.extend(finite::entries());
        all.extend(infinite::entries());
        all.extend(sofostasios::entries());
        all.sort_by(|a, b| a.id.cmp(b.id));
        #[cfg(debug_assertions)]
        for entry in &all {
            for p in entry.grid.points().expect("default grid") {
                debug_assert!(entry.in_domain(&p).is_ok(), "{} default grid point {p} outside domain", entry.id);
            }
        }
        all
    })
}

pub fn lookup(id: &str) -> Result<&'static Identity> {
    catalog().iter().find(|e| e.id == id).ok_or_else(|| Error::UnknownId(id.to_string()))
}

/// How the left-hand side was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Direct,
    Extended,
    ExtendedTail,
}

#[derive(Clone, Copy, Debug)]
pub struct Evaluation {
    pub lhs: SeriesResult,
    pub rhs: f64,
    pub method: Method,
}

fn lhs_extended(series: &TermSeries) -> Result<(SeriesResult, Method)> {
    let r = sum_extended(series, DEFAULT_MAX_TERMS)?;
    let method = if r.extrapolated { Method::ExtendedTail } else { Method::Extended };
    Ok((
        SeriesResult {
            value: r.value.to_f64(),
            abs_error_estimate: r.abs_error_estimate,
            terms_used: r.terms_used,
            converged: r.converged,
        },
        method,
    ))
}

/// Relative error estimate above which a binary64 sum is redone in extended
/// precision. Alternating series with large intermediate terms land here.
const CANCELLATION_LIMIT: f64 = 1e-13;

/// Evaluates both sides with the default tolerances. Finite entries use the
/// extended path; infinite ones are truncated in binary64 and fall back to the
/// extended path when truncation stalls or cancels too many digits.
pub fn evaluate(id: &str, point: &ParamPoint) -> Result<Evaluation> {
    let entry = lookup(id)?;
    entry.validate_point(point)?;
    entry.in_domain(point).map_err(Error::Domain)?;
    let (lhs, method) = match entry.lhs {
        LhsForm::Series(build) => {
            let series = build(point)?;
            if entry.extended {
                lhs_extended(&series)?
            } else {
                let plain = sum_series(&series, DEFAULT_REL_TOL, DEFAULT_MAX_TERMS)?;
                if plain.converged && plain.abs_error_estimate <= CANCELLATION_LIMIT * plain.value.abs() {
                    (plain, Method::Direct)
                } else {
                    lhs_extended(&series)?
                }
            }
        }
        LhsForm::Custom(f) => (f(point)?, Method::Direct),
    };
    let rhs = (entry.rhs)(point)?;
    Ok(Evaluation { lhs, rhs, method })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Ok,
    LhsNonconverged,
    PoleSkipped,
    DomainExcluded,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Ok => "ok",
            Status::LhsNonconverged => "lhs_nonconverged",
            Status::PoleSkipped => "pole_skipped",
            Status::DomainExcluded => "domain_excluded",
        })
    }
}

/// Outcome of comparing both sides at one point.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckResult {
    pub id: String,
    pub point: ParamPoint,
    pub lhs: Option<f64>,
    pub rhs: Option<f64>,
    pub abs_diff: Option<f64>,
    pub rel_diff: Option<f64>,
    pub status: Status,
    pub pass: bool,
}

impl CheckResult {
    fn skipped(id: &str, point: &ParamPoint, status: Status) -> Self {
        CheckResult {
            id: id.to_string(),
            point: point.clone(),
            lhs: None,
            rhs: None,
            abs_diff: None,
            rel_diff: None,
            status,
            pass: false,
        }
    }

    /// Compares two values: relative difference when |rhs| ≥ 1, absolute otherwise.
    pub fn compare(id: &str, point: &ParamPoint, lhs: f64, rhs: f64, converged: bool, tol: f64) -> Self {
        let abs_diff = (lhs - rhs).abs();
        let rel_diff = if rhs != 0.0 { abs_diff / rhs.abs() } else { abs_diff };
        let status = if converged { Status::Ok } else { Status::LhsNonconverged };
        let measure = if rhs.abs() < 1.0 { abs_diff } else { rel_diff };
        CheckResult {
            id: id.to_string(),
            point: point.clone(),
            lhs: Some(lhs),
            rhs: Some(rhs),
            abs_diff: Some(abs_diff),
            rel_diff: Some(rel_diff),
            status,
            pass: status == Status::Ok && measure <= tol,
        }
    }

    pub fn order(&self, other: &Self) -> Ordering {
        self.id.cmp(&other.id).then_with(|| self.point.cmp_values(&other.point))
    }
}

/// Checks one point. Only an unknown id or a malformed point is an error;
/// everything else is recorded in the status.
pub fn check(id: &str, point: &ParamPoint, tol: f64) -> Result<CheckResult> {
    let entry = lookup(id)?;
    entry.validate_point(point)?;
    if entry.in_domain(point).is_err() {
        return Ok(CheckResult::skipped(id, point, Status::DomainExcluded));
    }
    match evaluate(id, point) {
        Ok(ev) => Ok(CheckResult::compare(id, point, ev.lhs.value, ev.rhs, ev.lhs.converged, tol)),
        Err(e) => Ok(CheckResult::skipped(id, point, status_for(&e))),
    }
}

fn status_for(e: &Error) -> Status {
    match e {
        Error::Pole(_) => Status::PoleSkipped,
        Error::NonConvergence { .. } => Status::LhsNonconverged,
        _ => Status::DomainExcluded,
    }
}

/// Identifier used in reports for [`cross_check_t9`].
pub const T9_CROSS_ID: &str = "T9-JL~T9-CVI";

/// RHS(T9-JL) against RHS(T9-CVI) + ψ(c) ₂F₁(1, a; c; z).
pub fn cross_check_t9(point: &ParamPoint, tol: f64) -> Result<CheckResult> {
    let jl = lookup("T9-JL")?;
    jl.validate_point(point)?;
    if jl.in_domain(point).is_err() {
        return Ok(CheckResult::skipped(T9_CROSS_ID, point, Status::DomainExcluded));
    }
    let both = || -> Result<(f64, f64)> {
        let cvi = lookup("T9-CVI")?;
        let (a, c, z) = (point["a"], point["c"], point["z"]);
        let f = crate::hyper::hypergeometric(&crate::hyper::HyperParams::new(vec![1.0, a], vec![c], z))?;
        Ok(((jl.rhs)(point)?, (cvi.rhs)(point)? + digamma(c)? * f))
    };
    match both() {
        Ok((l, r)) => Ok(CheckResult::compare(T9_CROSS_ID, point, l, r, true, tol)),
        Err(e) => Ok(CheckResult::skipped(T9_CROSS_ID, point, status_for(&e))),
    }
}
