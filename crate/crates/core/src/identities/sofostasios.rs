//! Digamma sums obtained by equating two series for the b-derivative of a
//! hypergeometric function, and the two special cases at a = b.

use super::base::incomplete_beta_form;
use super::finite::p1_closed;
use super::infinite::p2_closed;
use super::support::*;
use super::{Expectation, Identity, Kind, LhsForm, ParamPoint};
use crate::error::Result;
use crate::grid::{spread, z_within, GridSpec};
use crate::hyper::{
    pfq_series, pfq_terminating, sum_terms, HyperParams, Precision, SeriesResult, Step, TermSeries, Weight,
    DEFAULT_MAX_TERMS, DEFAULT_REL_TOL,
};

/// How the inner hypergeometric factors of the two D1 representations are
/// obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Inner {
    /// Summed term by term.
    Series,
    /// Taken from the P1 and P2 closed forms.
    ClosedForm,
}

/// 3F2(-k, b, b; b+1, b+1; 1)
fn inner_terminating(b: f64, k: u64, inner: Inner) -> Result<f64> {
    match inner {
        Inner::Series => {
            let params = HyperParams::new(vec![-(k as f64), b, b], vec![b + 1.0, b + 1.0], 1.0);
            pfq_terminating(&params, k, Precision::Extended)
        }
        Inner::ClosedForm => p1_closed(b, k),
    }
}

/// 2F1(α+k+2, β+k+1; α+k+1; z)
fn inner_gauss(alpha: f64, beta: f64, k: u64, z: f64, inner: Inner) -> Result<f64> {
    let kf = k as f64;
    match inner {
        Inner::Series => {
            let params = HyperParams::new(vec![alpha + kf + 2.0, beta + kf + 1.0], vec![alpha + kf + 1.0], z);
            pfq_series(&params, DEFAULT_REL_TOL, DEFAULT_MAX_TERMS)?.require_converged()
        }
        Inner::ClosedForm => Ok(p2_closed(alpha, beta, kf, z)),
    }
}

/// (α+1)β/(b²α) Σ z^k (α+2)_k (β+1)_k/(k! (α+1)_k) 3F2(-k, b, b; b+1, b+1; 1)
pub fn d1_first(point: &ParamPoint, inner: Inner) -> Result<SeriesResult> {
    let (alpha, beta, b, z) = (point["alpha"], point["beta"], point["b"], point["z"]);
    let scale = (alpha + 1.0) * beta / (b * b * alpha);
    // z^k (β+1)_k / k!
    let mut coef = 1.0;
    let mut next = 0u64;
    let mut r = sum_terms(
        |k| {
            debug_assert_eq!(k, next);
            let kf = k as f64;
            let t = scale * coef * (alpha + 1.0 + kf) / (alpha + 1.0) * inner_terminating(b, k, inner)?;
            coef *= z * (beta + 1.0 + kf) / (kf + 1.0);
            next += 1;
            Ok(t)
        },
        DEFAULT_REL_TOL,
        DEFAULT_MAX_TERMS,
    )?;
    r.abs_error_estimate = r.abs_error_estimate.max(1e-15 * r.value.abs());
    Ok(r)
}

/// Σ (-z)^k (α+k+1)/α (β)_{k+1}/(k! (k+b)²) 2F1(α+k+2, β+k+1; α+k+1; z)
pub fn d1_second(point: &ParamPoint, inner: Inner) -> Result<SeriesResult> {
    let (alpha, beta, b, z) = (point["alpha"], point["beta"], point["b"], point["z"]);
    // (-z)^k (β)_{k+1} / k!
    let mut coef = beta;
    let mut next = 0u64;
    sum_terms(
        |k| {
            debug_assert_eq!(k, next);
            let kf = k as f64;
            let t = coef * (alpha + kf + 1.0) / alpha / ((kf + b) * (kf + b)) * inner_gauss(alpha, beta, k, z, inner)?;
            coef *= -z * (beta + kf + 1.0) / (kf + 1.0);
            next += 1;
            Ok(t)
        },
        DEFAULT_REL_TOL,
        DEFAULT_MAX_TERMS,
    )
}

fn t9_common(p: &ParamPoint) -> DomainResult {
    require(p["c"] >= 1.05, || format!("c = {} below 1.05", p["c"]))?;
    z_in(p["z"], -0.9, 0.45)
}

fn nonzero_a(p: &ParamPoint) -> DomainResult {
    require(p["a"].abs() >= 0.05, || "|a| below 0.05".into())?;
    away(p["a"], "a")
}

/// z/(z-1), the argument of the transformed 3F2 factors.
fn pfaff(z: f64) -> f64 {
    z / (z - 1.0)
}

pub(super) fn entries() -> Vec<Identity> {
    vec![
        Identity {
            id: "D1",
            title: "two double-series representations of the b-derivative of 3F2(α+1, β, 1; b, α; z)",
            anchor: "first derivative in a lower parameter, two expansions equated",
            params: vec![real("alpha"), real("beta"), real("b"), real("z")],
            kind: Kind::Infinite,
            expectation: Expectation::Holds,
            domain: |p| {
                let alpha = p["alpha"];
                require(alpha.abs() >= 0.05, || "|alpha| below 0.05".into())?;
                away(alpha, "alpha")?;
                away(alpha + 1.0, "alpha + 1")?;
                away(p["b"], "b")?;
                // Below -(√2 - 1) rounding in the inner 2F1 outgrows the (-z)^k decay.
                z_in(p["z"], -0.4, 0.45)
            },
            lhs: LhsForm::Custom(|p| d1_first(p, Inner::Series)),
            rhs: |p| d1_second(p, Inner::Series)?.require_converged(),
            grid: GridSpec::new("D1")
                .values("alpha", vec![0.5, 1.5, 3.0])
                .values("beta", vec![0.5, 1.7, 3.2])
                .values("b", vec![0.4, 1.3, 2.5])
                .values("z", vec![-0.3, -0.1, 0.1, 0.3, 0.45])
                .tolerance(1e-8),
            extended: false,
        },
        Identity {
            id: "T9",
            title: "Σ z^k (a+1)_k (b)_k/((a)_k (c)_k) ψ(c+k) via ψ(c-1) 3F2(·; z) and two 3F2(·; z/(z-1))",
            anchor: "digamma sum from equating the two derivative expansions",
            params: vec![real("a"), real("b"), real("c"), real("z")],
            kind: Kind::Infinite,
            expectation: Expectation::Holds,
            domain: |p| {
                t9_common(p)?;
                nonzero_a(p)
            },
            lhs: LhsForm::Series(|p| {
                Ok(TermSeries::new(vec![p["a"] + 1.0, p["b"], 1.0], vec![p["a"], p["c"]], p["z"]).digamma(p["c"]))
            }),
            rhs: |p| {
                let (a, b, c, z) = (p["a"], p["b"], p["c"], p["z"]);
                let w = pfaff(z);
                let head = psi(c - 1.0)? * hyp(&[1.0, a + 1.0, b], &[a, c], z)?;
                let first = (a + (b - a) * z) / (c - 1.0) * hyp(&[b, c - 1.0, c - 1.0], &[c, c], w)?;
                let second = b * (c - 1.0) * z / (c * c * (z - 1.0)) * hyp(&[b + 1.0, c, c], &[c + 1.0, c + 1.0], w)?;
                Ok(head + (first + second) / (a * (1.0 - z).powf(1.0 + b)))
            },
            grid: GridSpec::new("T9")
                .values("a", spread(0.0))
                .values("b", spread(0.0))
                .values("c", spread(1.05))
                .values("z", z_within(-0.9, 0.45))
                .tolerance(1e-8),
            extended: false,
        },
        Identity {
            id: "T9-CVI",
            title: "Σ z^k (a)_k/(c)_k [ψ(c+k) - ψ(c)] = a z/(c² (1-z)^{a+1}) 3F2(a+1, c, c; c+1, c+1; z/(z-1))",
            anchor: "Cvijović's form of the a = b case",
            params: vec![real("a"), real("c"), real("z")],
            kind: Kind::Infinite,
            expectation: Expectation::Holds,
            domain: t9_common,
            lhs: LhsForm::Series(|p| {
                Ok(TermSeries::new(vec![p["a"], 1.0], vec![p["c"]], p["z"])
                    .weight(Weight::DigammaDiff { shift: p["c"], step: Step::Up }))
            }),
            rhs: |p| {
                let (a, c, z) = (p["a"], p["c"], p["z"]);
                let f = hyp(&[a + 1.0, c, c], &[c + 1.0, c + 1.0], pfaff(z))?;
                Ok(a * z / (c * c * (1.0 - z).powf(a + 1.0)) * f)
            },
            grid: GridSpec::new("T9-CVI")
                .values("a", spread(0.0))
                .values("c", spread(1.05))
                .values("z", z_within(-0.9, 0.45))
                .tolerance(1e-8),
            extended: false,
        },
        Identity {
            id: "T9-JL",
            title: "Σ z^k (a)_k/(c)_k ψ(c+k) via the incomplete beta function and two 3F2(·; z/(z-1))",
            anchor: "a = b case of the derivative-expansion sum",
            params: vec![real("a"), real("c"), real("z")],
            kind: Kind::Infinite,
            expectation: Expectation::Holds,
            domain: t9_common,
            lhs: LhsForm::Series(|p| Ok(TermSeries::new(vec![p["a"], 1.0], vec![p["c"]], p["z"]).digamma(p["c"]))),
            rhs: |p| {
                let (a, c, z) = (p["a"], p["c"], p["z"]);
                let w = pfaff(z);
                let head = psi(c - 1.0)? * incomplete_beta_form(a, c, z)?;
                let first = hyp(&[a - 1.0, c - 1.0, c - 1.0], &[c, c], w)? / (c - 1.0);
                let second = (c - 1.0) * z / (c * c * (z - 1.0)) * hyp(&[a, c, c], &[c + 1.0, c + 1.0], w)?;
                Ok(head + (first + second) / (1.0 - z).powf(a))
            },
            grid: GridSpec::new("T9-JL")
                .values("a", spread(0.0))
                .values("c", spread(1.05))
                .values("z", z_within(-0.9, 0.45))
                .tolerance(1e-8),
            extended: false,
        },
    ]
}
