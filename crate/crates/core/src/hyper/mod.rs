//! Generalized hypergeometric series by term recurrence, plain and weighted
//! by ψ(s + k).

mod series;

pub use series::{sum_series, sum_terms, DigammaWalk, SeriesResult, Step, TermSeries, Weight};

use crate::error::{Error, Result};
use crate::specfun::digamma;

pub const DEFAULT_REL_TOL: f64 = 1e-13;
pub const DEFAULT_MAX_TERMS: usize = 100_000;
/// Required Σb - Σa at |z| = 1.
pub const UNIT_ARGUMENT_MARGIN: f64 = 1e-6;

/// pFq parameters: (a_p), (b_q) and the argument z.
#[derive(Clone, Debug, PartialEq)]
pub struct HyperParams {
    pub numerator: Vec<f64>,
    pub denominator: Vec<f64>,
    pub argument: f64,
}

impl HyperParams {
    pub fn new(numerator: Vec<f64>, denominator: Vec<f64>, argument: f64) -> Self {
        HyperParams { numerator, denominator, argument }
    }

    /// Smallest n with -n among the numerator parameters.
    pub fn terminating_degree(&self) -> Option<u64> {
        self.numerator.iter().filter(|a| **a <= 0.0 && a.fract() == 0.0).map(|a| (-a) as u64).min()
    }

    fn series(&self) -> TermSeries {
        TermSeries::new(self.numerator.clone(), self.denominator.clone(), self.argument)
    }
}

/// Precision used by [`pfq_terminating`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Precision {
    Binary64,
    Extended,
}

/// Which per-term weight [`weighted_digamma_series`] applies.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WeightKind {
    PsiOfParamPlusK,
    /// Test hook: weight identically 1.
    One,
}

fn reject_terminating(params: &HyperParams) -> Result<()> {
    if let Some(n) = params.terminating_degree() {
        return Err(Error::Domain(format!("numerator parameter -{n} terminates the series; use pfq_terminating")));
    }
    Ok(())
}

/// Non-terminating pFq(z) by truncation.
pub fn pfq_series(params: &HyperParams, rel_tol: f64, max_terms: usize) -> Result<SeriesResult> {
    if params.argument == 0.0 {
        return Ok(SeriesResult::exact(1.0, 1));
    }
    reject_terminating(params)?;
    sum_series(&params.series(), rel_tol, max_terms)
}

/// Exact (n+1)-term sum of a series with -n among its numerator parameters.
pub fn pfq_terminating(params: &HyperParams, n: u64, precision: Precision) -> Result<f64> {
    let minus_n = -(n as f64);
    if !params.numerator.contains(&minus_n) {
        return Err(Error::Domain(format!("no numerator parameter equals -{n}")));
    }
    let series = params.series().upper(n);
    match precision {
        Precision::Binary64 => sum_series(&series, 0.0, n as usize + 1)?.require_converged(),
        Precision::Extended => Ok(crate::oracle::sum_extended(&series, n as usize + 1)?.value.to_f64()),
    }
}

/// Σ_k Π(a)_k/Π(b)_k z^k/k! · ψ(s + k).
pub fn weighted_digamma_series(
    params: &HyperParams,
    shift: f64,
    weight: WeightKind,
    rel_tol: f64,
    max_terms: usize,
) -> Result<SeriesResult> {
    if params.argument == 0.0 {
        let w = match weight {
            WeightKind::PsiOfParamPlusK => digamma(shift)?,
            WeightKind::One => 1.0,
        };
        return Ok(SeriesResult::exact(w, 1));
    }
    reject_terminating(params)?;
    let series = match weight {
        WeightKind::PsiOfParamPlusK => params.series().digamma(shift),
        WeightKind::One => params.series(),
    };
    sum_series(&series, rel_tol, max_terms)
}

/// pFq(z) as a number: terminating sums exactly, everything else by
/// truncation with the default tolerances. Non-convergence is an error here.
pub fn hypergeometric(params: &HyperParams) -> Result<f64> {
    if params.argument == 0.0 {
        return Ok(1.0);
    }
    if let Some(n) = params.terminating_degree() {
        return pfq_terminating(params, n, Precision::Binary64);
    }
    pfq_series(params, DEFAULT_REL_TOL, DEFAULT_MAX_TERMS)?.require_converged()
}
