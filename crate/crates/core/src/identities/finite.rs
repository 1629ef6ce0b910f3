//! Finite digamma sums obtained from Chu-Vandermonde and Qureshi's formula.

use super::support::*;
use super::{Expectation, Identity, Kind, LhsForm};
use crate::error::Result;
use crate::grid::{spread, GridSpec, N_VALUES};
use crate::hyper::{Step, TermSeries, Weight};
use crate::oracle::ExtendedReal;
use crate::specfun::{harmonic, pochhammer, EULER_GAMMA};

const TOL: f64 = 1e-12;
const LN4: f64 = 2.0 * std::f64::consts::LN_2;

/// (2n-1)! / n!
pub(super) fn qureshi_prefactor(n: u64) -> ExtendedReal {
    product_range(n + 1, 2 * n - 1)
}

fn inv_factorial(n: u64) -> ExtendedReal {
    factorial(n).recip()
}

fn central_binomial(n: u64) -> f64 {
    (1..=n).fold(1.0, |acc, k| acc * (n + k) as f64 / k as f64)
}

/// 4^n (H_n - 2γ) + C(2n, n) (2 H_{2n} - H_n - 2γ)
fn qureshi_a1_bracket(n: u64) -> f64 {
    let hn = harmonic(n);
    let h2n = harmonic(2 * n);
    4f64.powi(n as i32) * (hn - 2.0 * EULER_GAMMA) + central_binomial(n) * (2.0 * h2n - hn - 2.0 * EULER_GAMMA)
}

fn n_positive(p: &crate::identities::ParamPoint) -> DomainResult {
    require(p["n"] >= 1.0, || "n must be at least 1".into())
}

pub(super) fn entries() -> Vec<Identity> {
    vec![
        Identity {
            id: "T1",
            title: "Σ (-1)^k C(n,k) (a)_k/(c)_k ψ(a+k) = (c-a)_n/(c)_n [ψ(a) - ψ(c-a+n) + ψ(c-a)]",
            anchor: "Chu-Vandermonde differentiated in a",
            params: vec![real("a"), real("c"), int("n")],
            kind: Kind::Finite,
            expectation: Expectation::Holds,
            domain: |p| {
                let (a, c, n) = (p["a"], p["c"], p["n"]);
                away(a, "a")?;
                away(c, "c")?;
                away(c - a, "c - a")?;
                away(c - a + n, "c - a + n")
            },
            lhs: LhsForm::Series(|p| Ok(TermSeries::new(vec![-p["n"], p["a"]], vec![p["c"]], 1.0).digamma(p["a"]))),
            rhs: |p| {
                let (a, c, n) = (p["a"], p["c"], n_of(p["n"]));
                let ratio = pochhammer(c - a, n) / pochhammer(c, n);
                Ok(ratio * (psi(a)? - psi(c - a + n as f64)? + psi(c - a)?))
            },
            grid: GridSpec::new("T1")
                .values("a", spread(0.0))
                .values("c", spread(0.19))
                .values("n", N_VALUES.to_vec())
                .tolerance(TOL),
            extended: true,
        },
        Identity {
            id: "T1-C",
            title: "Σ (-1)^k ψ(k+1) / ((n-k)! (c)_k) = (c-1)_n/(n! (c)_n) [-γ - ψ(c-1+n) + ψ(c-1)]",
            anchor: "Chu-Vandermonde digamma sum at a = 1",
            params: vec![real("c"), int("n")],
            kind: Kind::Finite,
            expectation: Expectation::Holds,
            domain: |p| {
                let (c, n) = (p["c"], p["n"]);
                away(c, "c")?;
                away(c - 1.0, "c - 1")?;
                away(c - 1.0 + n, "c - 1 + n")
            },
            lhs: LhsForm::Series(|p| {
                Ok(TermSeries::new(vec![-p["n"], 1.0], vec![p["c"]], 1.0)
                    .prefactor(inv_factorial(n_of(p["n"])))
                    .digamma(1.0))
            }),
            rhs: |p| {
                let (c, n) = (p["c"], n_of(p["n"]));
                let ratio = pochhammer(c - 1.0, n) / (factorial(n).to_f64() * pochhammer(c, n));
                Ok(ratio * (-EULER_GAMMA - psi(c - 1.0 + n as f64)? + psi(c - 1.0)?))
            },
            grid: GridSpec::new("T1-C").values("c", spread(0.0)).values("n", N_VALUES.to_vec()).tolerance(TOL),
            extended: true,
        },
        Identity {
            id: "T2",
            title: "Σ (-1)^k C(n,k) (a)_k/(c)_k ψ(c+k) = (c-a)_n/(c)_n [ψ(c+n) + ψ(c-a) - ψ(c-a+n)]",
            anchor: "Chu-Vandermonde differentiated in c",
            params: vec![real("a"), real("c"), int("n")],
            kind: Kind::Finite,
            expectation: Expectation::Holds,
            domain: |p| {
                let (a, c, n) = (p["a"], p["c"], p["n"]);
                away(c, "c")?;
                away(c - a, "c - a")?;
                away(c - a + n, "c - a + n")
            },
            lhs: LhsForm::Series(|p| Ok(TermSeries::new(vec![-p["n"], p["a"]], vec![p["c"]], 1.0).digamma(p["c"]))),
            rhs: |p| {
                let (a, c, n) = (p["a"], p["c"], n_of(p["n"]));
                let nf = n as f64;
                let ratio = pochhammer(c - a, n) / pochhammer(c, n);
                Ok(ratio * (psi(c + nf)? + psi(c - a)? - psi(c - a + nf)?))
            },
            grid: GridSpec::new("T2")
                .values("a", spread(0.0))
                .values("c", spread(0.19))
                .values("n", N_VALUES.to_vec())
                .tolerance(TOL),
            extended: true,
        },
        Identity {
            id: "T2-C1",
            title: "Σ (-1)^k ψ(c+k) / ((n-k)! (c)_k) = (c-1)/(n! (c-1+n)) [1/(c-1+n) + ψ(c-1)]",
            anchor: "digamma sum in c at a = 1",
            params: vec![real("c"), int("n")],
            kind: Kind::Finite,
            expectation: Expectation::Holds,
            domain: |p| {
                let c = p["c"];
                away(c, "c")?;
                away(c - 1.0, "c - 1")
            },
            lhs: LhsForm::Series(|p| {
                Ok(TermSeries::new(vec![-p["n"], 1.0], vec![p["c"]], 1.0)
                    .prefactor(inv_factorial(n_of(p["n"])))
                    .digamma(p["c"]))
            }),
            rhs: |p| {
                let (c, n) = (p["c"], n_of(p["n"]));
                let m = c - 1.0 + n as f64;
                Ok((c - 1.0) / (factorial(n).to_f64() * m) * (1.0 / m + psi(c - 1.0)?))
            },
            grid: GridSpec::new("T2-C1").values("c", spread(0.0)).values("n", N_VALUES.to_vec()).tolerance(TOL),
            extended: true,
        },
        Identity {
            id: "T2-C2",
            title: "Σ (-1)^{k+1} C(n,k) ψ(k+1) = 1/n",
            anchor: "limit c → 1 of the a = 1 digamma sum",
            params: vec![int("n")],
            kind: Kind::Finite,
            expectation: Expectation::Holds,
            domain: n_positive,
            lhs: LhsForm::Series(|p| Ok(TermSeries::new(vec![-p["n"]], vec![], 1.0).prefactor(-1.0).digamma(1.0))),
            rhs: |p| Ok(1.0 / p["n"]),
            grid: GridSpec::new("T2-C2").values("n", N_VALUES.to_vec()).tolerance(TOL),
            extended: true,
        },
        Identity {
            id: "T3",
            title: "Σ 2^k (a)_k (2n-k-1)!/(k! (n-k)!) ψ(a+k) in closed form",
            anchor: "Qureshi's formula differentiated in a",
            params: vec![real("a"), int("n")],
            kind: Kind::Finite,
            expectation: Expectation::Holds,
            domain: |p| {
                n_positive(p)?;
                let a = p["a"];
                away(a, "a")?;
                away(0.5 * a, "a/2")?;
                away(0.5 * (1.0 + a), "(1+a)/2")
            },
            lhs: LhsForm::Series(|p| {
                let n = n_of(p["n"]);
                Ok(TermSeries::new(vec![-p["n"], p["a"]], vec![1.0 - 2.0 * p["n"]], 2.0)
                    .prefactor(qureshi_prefactor(n))
                    .digamma(p["a"]))
            }),
            rhs: |p| t3_rhs(p["a"], n_of(p["n"])),
            grid: GridSpec::new("T3").values("a", spread(0.0)).values("n", N_VALUES.to_vec()).tolerance(TOL),
            extended: true,
        },
        Identity {
            id: "T3-C1a",
            title: "Σ 2^k (2n-k-1)!/(n-k)! ψ(k+1) = (n-1)!/4 [4^n (H_n - 2γ) + C(2n,n)(2H_{2n} - H_n - 2γ)]",
            anchor: "Qureshi digamma sum at a = 1",
            params: vec![int("n")],
            kind: Kind::Finite,
            expectation: Expectation::Holds,
            domain: n_positive,
            lhs: LhsForm::Series(|p| {
                let n = n_of(p["n"]);
                Ok(TermSeries::new(vec![-p["n"], 1.0], vec![1.0 - 2.0 * p["n"]], 2.0)
                    .prefactor(qureshi_prefactor(n))
                    .digamma(1.0))
            }),
            rhs: |p| {
                let n = n_of(p["n"]);
                Ok(factorial(n - 1).to_f64() / 4.0 * qureshi_a1_bracket(n))
            },
            grid: GridSpec::new("T3-C1a").values("n", N_VALUES.to_vec()).tolerance(TOL),
            extended: true,
        },
        Identity {
            id: "T3-C1b",
            title: "Σ (n+k-1)!/(2^k k!) ψ(n+1-k) = (n-1)!/2^{n+2} [4^n (H_n - 2γ) + C(2n,n)(2H_{2n} - H_n - 2γ)]",
            anchor: "Qureshi digamma sum at a = 1, reversed order",
            params: vec![int("n")],
            kind: Kind::Finite,
            expectation: Expectation::Holds,
            domain: n_positive,
            lhs: LhsForm::Series(|p| {
                let n = n_of(p["n"]);
                Ok(TermSeries::new(vec![p["n"]], vec![], 0.5)
                    .prefactor(factorial(n - 1))
                    .weight(Weight::Digamma { shift: p["n"] + 1.0, step: Step::Down })
                    .upper(n))
            }),
            rhs: |p| {
                let n = n_of(p["n"]);
                Ok(factorial(n - 1).to_f64() / 2f64.powi(n as i32 + 2) * qureshi_a1_bracket(n))
            },
            grid: GridSpec::new("T3-C1b").values("n", N_VALUES.to_vec()).tolerance(TOL),
            extended: true,
        },
        Identity {
            id: "P0",
            title: "3F2(-k, a, b; a+1, b+1; 1) = k! a b [(a)_{k+1} - (b)_{k+1}] / ((a-b) (a)_{k+1} (b)_{k+1})",
            anchor: "terminating 3F2 at unit argument with unit parameter shifts",
            params: vec![real("a"), real("b"), int("k")],
            kind: Kind::Finite,
            expectation: Expectation::Holds,
            domain: |p| {
                let (a, b) = (p["a"], p["b"]);
                away(a, "a")?;
                away(b, "b")?;
                require((a - b).abs() >= MARGIN, || "a too close to b".into())
            },
            lhs: LhsForm::Series(|p| {
                let (a, b) = (p["a"], p["b"]);
                Ok(TermSeries::new(vec![-p["k"], a, b], vec![a + 1.0, b + 1.0], 1.0))
            }),
            rhs: |p| {
                let (a, b, k) = (p["a"], p["b"], n_of(p["k"]));
                let pa = pochhammer(a, k + 1);
                let pb = pochhammer(b, k + 1);
                // ((a)_{k+1} - (b)_{k+1}) / ((a)_{k+1} (b)_{k+1}) = 1/(b)_{k+1} - 1/(a)_{k+1}
                Ok(factorial(k).to_f64() * a * b * (1.0 / pb - 1.0 / pa) / (a - b))
            },
            grid: GridSpec::new("P0")
                .values("a", spread(0.0))
                .values("b", vec![0.25, 0.55, 0.9, 1.4, 2.2, 3.3, 4.6])
                .values("k", N_VALUES.to_vec())
                .tolerance(TOL),
            extended: true,
        },
        Identity {
            id: "P1",
            title: "3F2(-k, b, b; b+1, b+1; 1) = k! b/(b+1)_k [ψ(b+1+k) - ψ(b)]",
            anchor: "limit a → b of the terminating 3F2",
            params: vec![real("b"), int("k")],
            kind: Kind::Finite,
            expectation: Expectation::Holds,
            domain: |p| away(p["b"], "b"),
            lhs: LhsForm::Series(|p| {
                let b = p["b"];
                Ok(TermSeries::new(vec![-p["k"], b, b], vec![b + 1.0, b + 1.0], 1.0))
            }),
            rhs: |p| p1_closed(p["b"], n_of(p["k"])),
            grid: GridSpec::new("P1").values("b", spread(0.0)).values("k", N_VALUES.to_vec()).tolerance(TOL),
            extended: true,
        },
    ]
}

/// k! b/(b+1)_k [ψ(b+1+k) - ψ(b)], the difference taken as Σ_{j≤k} 1/(b+j).
pub(crate) fn p1_closed(b: f64, k: u64) -> Result<f64> {
    crate::specfun::check_pole(b)?;
    let diff = crate::oracle::compensated_sum((0..=k).map(|j| 1.0 / (b + j as f64)));
    Ok(factorial(k).to_f64() * b / pochhammer(b + 1.0, k) * diff)
}

fn t3_rhs(a: f64, n: u64) -> Result<f64> {
    let nf = n as f64;
    let h = 0.5 * (1.0 + a);
    let g = 0.5 * a;
    let first = pochhammer(h, n) * (psi(h + nf)? + psi(g)? + LN4);
    let second = pochhammer(g, n) * (psi(g + nf)? + psi(h)? + LN4);
    Ok(2f64.powi(2 * (n as i32 - 1)) / nf * (first + second))
}
