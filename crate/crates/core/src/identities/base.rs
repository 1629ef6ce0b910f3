//! Closed-form reductions that the digamma sums are derived from.

use super::support::*;
use super::{Expectation, Identity, Kind, LhsForm};
use crate::grid::{logspread, spread, z_within, GridSpec, N_VALUES};
use crate::hyper::TermSeries;
use crate::specfun::{gamma_ratio, incomplete_beta, pochhammer, prudnikov_beta, scaled_incomplete_beta};

const TOL: f64 = 1e-10;

fn b17_values() -> Vec<f64> {
    (0..112).map(|i| 0.323 + 0.05 * i as f64).collect()
}

pub(super) fn entries() -> Vec<Identity> {
    vec![
        Identity {
            id: "B-CHU",
            title: "Chu-Vandermonde: 2F1(-n, a; c; 1) = (c-a)_n / (c)_n",
            anchor: "Chu-Vandermonde summation",
            params: vec![real("a"), real("c"), int("n")],
            kind: Kind::Finite,
            expectation: Expectation::Holds,
            domain: |p| away(p["c"], "c"),
            lhs: LhsForm::Series(|p| Ok(TermSeries::new(vec![-p["n"], p["a"]], vec![p["c"]], 1.0))),
            rhs: |p| {
                let n = n_of(p["n"]);
                Ok(pochhammer(p["c"] - p["a"], n) / pochhammer(p["c"], n))
            },
            grid: GridSpec::new("B-CHU")
                .values("a", spread(0.0))
                .values("c", spread(0.17))
                .values("n", N_VALUES.to_vec())
                .tolerance(TOL),
            extended: true,
        },
        Identity {
            id: "B-GAUSS",
            title: "Gauss: 2F1(a, b; c; 1) = Γ(c)Γ(c-a-b) / (Γ(c-a)Γ(c-b))",
            anchor: "Gauss summation theorem",
            params: vec![real("a"), real("b"), real("c")],
            kind: Kind::Infinite,
            expectation: Expectation::Holds,
            domain: |p| {
                let (a, b, c) = (p["a"], p["b"], p["c"]);
                require(c - a - b > MARGIN, || format!("c - a - b = {} not above margin", c - a - b))?;
                away(c, "c")?;
                away(c - a, "c - a")?;
                away(c - b, "c - b")
            },
            lhs: LhsForm::Series(|p| Ok(TermSeries::new(vec![p["a"], p["b"]], vec![p["c"]], 1.0))),
            rhs: |p| {
                let (a, b, c) = (p["a"], p["b"], p["c"]);
                gamma_ratio(&[c, c - a - b], &[c - a, c - b])
            },
            grid: GridSpec::new("B-GAUSS")
                .values("a", spread(0.0))
                .values("b", spread(0.0))
                .values("c", spread(12.0))
                .tolerance(TOL),
            extended: false,
        },
        Identity {
            id: "B-QURESHI",
            title: "Σ 2^k (a)_k (2n-k-1)! / (k! (n-k)!) = 2^{2n-1}/n [((1+a)/2)_n + (a/2)_n]",
            anchor: "Qureshi's 2F1(-n, a; 1-2n; 2) after reflection",
            params: vec![real("a"), int("n")],
            kind: Kind::Finite,
            expectation: Expectation::Holds,
            domain: |p| require(p["n"] >= 1.0, || "n must be at least 1".into()),
            lhs: LhsForm::Series(|p| {
                let n = n_of(p["n"]);
                let pre = super::finite::qureshi_prefactor(n);
                Ok(TermSeries::new(vec![-p["n"], p["a"]], vec![1.0 - 2.0 * p["n"]], 2.0).prefactor(pre))
            }),
            rhs: |p| {
                let (a, n) = (p["a"], n_of(p["n"]));
                let s = pochhammer(0.5 * (1.0 + a), n) + pochhammer(0.5 * a, n);
                Ok(2f64.powi(2 * n as i32 - 1) / n as f64 * s)
            },
            grid: GridSpec::new("B-QURESHI")
                .values("a", logspread(0.3, 4.0, 20))
                .values("n", N_VALUES.to_vec())
                .tolerance(TOL),
            extended: true,
        },
        Identity {
            id: "B-HALF",
            title: "2F1(a, 1-a; b; 1/2) = 2^{1-b} √π Γ(b) / (Γ((a+b)/2) Γ((b-a+1)/2))",
            anchor: "2F1 at argument one half with parameters a, 1-a",
            params: vec![real("a"), real("b")],
            kind: Kind::Infinite,
            expectation: Expectation::Holds,
            domain: |p| {
                let (a, b) = (p["a"], p["b"]);
                away(b, "b")?;
                away(0.5 * (a + b), "(a+b)/2")?;
                away(0.5 * (b - a + 1.0), "(b-a+1)/2")
            },
            lhs: LhsForm::Series(|p| Ok(TermSeries::new(vec![p["a"], 1.0 - p["a"]], vec![p["b"]], 0.5))),
            rhs: |p| {
                let (a, b) = (p["a"], p["b"]);
                let g = gamma_ratio(&[b, 0.5], &[0.5 * (a + b), 0.5 * (b - a + 1.0)])?;
                Ok(2f64.powf(1.0 - b) * g)
            },
            grid: GridSpec::new("B-HALF")
                .values("a", logspread(0.3, 4.0, 15))
                .values("b", logspread(0.36, 4.5, 15))
                .tolerance(TOL),
            extended: false,
        },
        Identity {
            id: "B-125",
            title: "2F1(1, b; 2; z) = ((1-z)^{1-b} - 1) / (z (b-1))",
            anchor: "reduction of 2F1(1, b; 2; z)",
            params: vec![real("b"), real("z")],
            kind: Kind::Infinite,
            expectation: Expectation::Holds,
            domain: |p| {
                let (b, z) = (p["b"], p["z"]);
                require((b - 1.0).abs() >= MARGIN, || "b too close to the removable point 1".into())?;
                require(z.abs() >= MARGIN, || "z too close to the removable point 0".into())?;
                z_in(z, -0.95, 0.95)
            },
            lhs: LhsForm::Series(|p| Ok(TermSeries::new(vec![1.0, p["b"]], vec![2.0], p["z"]))),
            rhs: |p| {
                let (b, z) = (p["b"], p["z"]);
                Ok(((1.0 - z).powf(1.0 - b) - 1.0) / (z * (b - 1.0)))
            },
            grid: GridSpec::new("B-125")
                .values("b", logspread(0.3, 4.0, 15))
                .values("z", z_within(-0.95, 0.95))
                .tolerance(TOL),
            extended: false,
        },
        Identity {
            id: "B-NIST",
            title: "2F1(a+1, b; a; z) = [1 - (1 - b/a) z] (1-z)^{-1-b}",
            anchor: "reduction of 2F1(a+1, b; a; z)",
            params: vec![real("a"), real("b"), real("z")],
            kind: Kind::Infinite,
            expectation: Expectation::Holds,
            domain: |p| {
                let a = p["a"];
                away(a, "a")?;
                require(a.abs() >= 0.05, || "|a| below 0.05".into())?;
                z_in(p["z"], -0.95, 0.95)
            },
            lhs: LhsForm::Series(|p| Ok(TermSeries::new(vec![p["a"] + 1.0, p["b"]], vec![p["a"]], p["z"]))),
            rhs: |p| {
                let (a, b, z) = (p["a"], p["b"], p["z"]);
                Ok((1.0 - (1.0 - b / a) * z) * (1.0 - z).powf(-1.0 - b))
            },
            grid: GridSpec::new("B-NIST")
                .values("a", spread(0.0))
                .values("b", spread(0.0))
                .values("z", z_within(-0.95, 0.95))
                .tolerance(TOL),
            extended: false,
        },
        Identity {
            id: "B-17",
            title: "2F1(1, 1; b; 1/2) = 2(b-1) β(b-1)",
            anchor: "2F1(1, 1; b; 1/2) in terms of β",
            params: vec![real("b")],
            kind: Kind::Infinite,
            expectation: Expectation::Holds,
            domain: |p| {
                away(p["b"], "b")?;
                away(p["b"] - 1.0, "b - 1")
            },
            lhs: LhsForm::Series(|p| Ok(TermSeries::new(vec![1.0, 1.0], vec![p["b"]], 0.5))),
            rhs: |p| {
                let b = p["b"];
                Ok(2.0 * (b - 1.0) * prudnikov_beta(b - 1.0)?)
            },
            grid: GridSpec::new("B-17").values("b", b17_values()).tolerance(TOL),
            extended: false,
        },
        Identity {
            id: "B-18",
            title: "2F1(1, 2; b; 1/2) = 2(b-1) [1 - 2(b-2) β(b-1)]",
            anchor: "2F1(1, 2; b; 1/2) in terms of β",
            params: vec![real("b")],
            kind: Kind::Infinite,
            expectation: Expectation::Holds,
            domain: |p| {
                away(p["b"], "b")?;
                away(p["b"] - 1.0, "b - 1")
            },
            lhs: LhsForm::Series(|p| Ok(TermSeries::new(vec![1.0, 2.0], vec![p["b"]], 0.5))),
            rhs: |p| {
                let b = p["b"];
                Ok(2.0 * (b - 1.0) * (1.0 - 2.0 * (b - 2.0) * prudnikov_beta(b - 1.0)?))
            },
            grid: GridSpec::new("B-18").values("b", b17_values()).tolerance(TOL),
            extended: false,
        },
        Identity {
            id: "B-119",
            title: "2F1(1, a; c; z) = z^{1-c} (1-z)^{c-a-1} (c-1) B_z(c-1, a-c+1)",
            anchor: "2F1(1, a; c; z) through the incomplete beta function",
            params: vec![real("a"), real("c"), real("z")],
            kind: Kind::Infinite,
            expectation: Expectation::Holds,
            domain: |p| {
                require(p["c"] >= 1.05, || "c below 1.05".into())?;
                z_in(p["z"], -0.9, 0.95)
            },
            lhs: LhsForm::Series(|p| Ok(TermSeries::new(vec![1.0, p["a"]], vec![p["c"]], p["z"]))),
            rhs: |p| incomplete_beta_form(p["a"], p["c"], p["z"]),
            grid: GridSpec::new("B-119")
                .values("a", spread(0.0))
                .values("c", spread(1.0))
                .values("z", z_within(-0.9, 0.95))
                .tolerance(TOL),
            extended: false,
        },
    ]
}

/// z^{1-c} (1-z)^{c-a-1} (c-1) B_z(c-1, a-c+1), with z^{1-c} B_z taken in
/// scaled form for z ≤ 0.
pub(super) fn incomplete_beta_form(a: f64, c: f64, z: f64) -> crate::error::Result<f64> {
    let (p, q) = (c - 1.0, a - c + 1.0);
    let scaled = if z > 0.0 { z.powf(-p) * incomplete_beta(z, p, q)? } else { scaled_incomplete_beta(z, p, q)? };
    Ok((1.0 - z).powf(c - a - 1.0) * p * scaled)
}
