//! Infinite digamma sums from Gauss summation and 2F1 reduction formulas.

use super::support::*;
use super::{Expectation, Identity, Kind, LhsForm, ParamPoint};
use crate::error::Result;
use crate::grid::{spread, z_within, GridSpec};
use crate::hyper::{Step, TermSeries, Weight};
use crate::specfun::{beta_fn, gamma_ratio, pi_cot_pi, prudnikov_beta, prudnikov_beta_prime, EULER_GAMMA};

const TOL: f64 = 1e-9;
const LN4: f64 = 2.0 * std::f64::consts::LN_2;

/// Parameters of the erratum demonstration, in the remark's own naming.
pub const HANSEN_DEMO: (f64, f64, f64) = (5.0, 1.0, 1.5);

fn gauss_domain(p: &ParamPoint) -> DomainResult {
    let (a, b, c) = (p["a"], p["b"], p["c"]);
    require(c - a - b > MARGIN, || format!("c - a - b = {} not above margin", c - a - b))?;
    away(c, "c")?;
    away(c - a, "c - a")?;
    away(c - b, "c - b")
}

fn gauss_ratio(a: f64, b: f64, c: f64) -> Result<f64> {
    gamma_ratio(&[c, c - a - b], &[c - a, c - b])
}

fn hansen_domain(p: &ParamPoint) -> DomainResult {
    let (a, b, c) = (p["a"], p["b"], p["c"]);
    require(a - b - c > MARGIN, || format!("a - b - c = {} not above margin", a - b - c))?;
    away(a, "a")?;
    away(c, "c")?;
    away(a - b, "a - b")?;
    away(a - c, "a - c")
}

fn hansen_rhs(p: &ParamPoint) -> Result<f64> {
    let (a, b, c) = (p["a"], p["b"], p["c"]);
    let g = gamma_ratio(&[a, a - b - c], &[a - b, a - c])?;
    Ok(g * (psi(a - c)? - psi(a - b - c)?))
}

fn hansen_grid(id: &str) -> GridSpec {
    GridSpec::new(id)
        .values("a", vec![5.0, 6.5, 8.0])
        .values("b", vec![0.5, 1.0])
        .values("c", vec![0.75, 1.5])
        .tolerance(TOL)
}

fn unit_disc(p: &ParamPoint) -> DomainResult {
    z_in(p["z"], -0.95, 0.95)
}

fn b_range_above(p: &ParamPoint, lo: f64) -> DomainResult {
    require(p["b"] > lo + MARGIN, || format!("b must exceed {}", lo + MARGIN))
}

pub(super) fn entries() -> Vec<Identity> {
    vec![
        Identity {
            id: "T4",
            title: "Σ (a)_k (b)_k/(k! (c)_k) ψ(a+k) = Γ(c)Γ(c-a-b)/(Γ(c-a)Γ(c-b)) [ψ(c-a) - ψ(c-a-b) + ψ(a)]",
            anchor: "Gauss summation differentiated in a",
            params: vec![real("a"), real("b"), real("c")],
            kind: Kind::Infinite,
            expectation: Expectation::Holds,
            domain: |p| {
                gauss_domain(p)?;
                away(p["a"], "a")
            },
            lhs: LhsForm::Series(|p| Ok(TermSeries::new(vec![p["a"], p["b"]], vec![p["c"]], 1.0).digamma(p["a"]))),
            rhs: |p| {
                let (a, b, c) = (p["a"], p["b"], p["c"]);
                Ok(gauss_ratio(a, b, c)? * (psi(c - a)? - psi(c - a - b)? + psi(a)?))
            },
            grid: GridSpec::new("T4").values("a", spread(0.0)).values("b", spread(0.0)).values("c", spread(12.0)).tolerance(TOL),
            extended: false,
        },
        Identity {
            id: "T4-HANSEN-corrected",
            title: "Σ (b)_k (c)_k/(k! (a)_k) [ψ(c+k) - ψ(c)] = Γ(a)Γ(a-b-c)/(Γ(a-b)Γ(a-c)) [ψ(a-c) - ψ(a-b-c)]",
            anchor: "Hansen 55.4.5.2 with ψ(c+k) in the sum",
            params: vec![real("a"), real("b"), real("c")],
            kind: Kind::Infinite,
            expectation: Expectation::Holds,
            domain: hansen_domain,
            lhs: LhsForm::Series(|p| {
                Ok(TermSeries::new(vec![p["b"], p["c"]], vec![p["a"]], 1.0)
                    .weight(Weight::DigammaDiff { shift: p["c"], step: Step::Up }))
            }),
            rhs: hansen_rhs,
            grid: hansen_grid("T4-HANSEN-corrected"),
            extended: true,
        },
        Identity {
            id: "T4-HANSEN-published",
            title: "Σ (b)_k (c)_k/(k! (a)_k) [ψ(c-k) - ψ(c)] against the same closed form (misprint)",
            anchor: "Hansen 55.4.5.2 as printed, with ψ(c-k)",
            params: vec![real("a"), real("b"), real("c")],
            kind: Kind::Infinite,
            expectation: Expectation::Erratum,
            domain: |p| {
                hansen_domain(p)?;
                off_integers(p["c"], "c")
            },
            lhs: LhsForm::Series(|p| {
                Ok(TermSeries::new(vec![p["b"], p["c"]], vec![p["a"]], 1.0)
                    .weight(Weight::DigammaDiff { shift: p["c"], step: Step::Down }))
            }),
            rhs: hansen_rhs,
            grid: GridSpec::new("T4-HANSEN-published")
                .values("a", vec![HANSEN_DEMO.0])
                .values("b", vec![HANSEN_DEMO.1])
                .values("c", vec![HANSEN_DEMO.2])
                .tolerance(TOL),
            extended: true,
        },
        Identity {
            id: "T4-C1",
            title: "Σ (a)_k (1/2)_k/(k! (k+1)!) ψ(a+k) = 2Γ(3/2-a)/(√π Γ(2-a)) [1/(1-a) + π cot(πa) + 2ψ(a) - ψ(3/2-a)]",
            anchor: "Gauss digamma sum at c = 2, b = 1/2; Brychkov 6.2.1(67) extended to a < 3/2",
            params: vec![real("a")],
            kind: Kind::Infinite,
            expectation: Expectation::Holds,
            domain: |p| {
                let a = p["a"];
                require(a < 1.5 - MARGIN, || "a must stay below 3/2".into())?;
                off_integers(a, "a")
            },
            lhs: LhsForm::Series(|p| Ok(TermSeries::new(vec![p["a"], 0.5], vec![2.0], 1.0).digamma(p["a"]))),
            rhs: |p| {
                let a = p["a"];
                let g = 2.0 * gamma_ratio(&[1.5 - a], &[0.5, 2.0 - a])?;
                Ok(g * (1.0 / (1.0 - a) + pi_cot_pi(a) + 2.0 * psi(a)? - psi(1.5 - a)?))
            },
            grid: GridSpec::new("T4-C1").values("a", spread(2.5).into_iter().map(|v| -v).collect()).tolerance(TOL),
            extended: false,
        },
        Identity {
            id: "T4-C2",
            title: "Σ (-b)_k/k! ψ(a+k) = -B(a, b)",
            anchor: "expansion of the beta function from the Gauss digamma sum at c = a",
            params: vec![real("a"), real("b")],
            kind: Kind::Infinite,
            expectation: Expectation::Holds,
            domain: |p| {
                let (a, b) = (p["a"], p["b"]);
                require(b > MARGIN, || "b must be positive".into())?;
                away(a, "a")?;
                away(a + b, "a + b")
            },
            lhs: LhsForm::Series(|p| Ok(TermSeries::new(vec![-p["b"]], vec![], 1.0).digamma(p["a"]))),
            rhs: |p| Ok(-beta_fn(p["a"], p["b"])?),
            grid: GridSpec::new("T4-C2").values("a", spread(0.0)).values("b", spread(4.0)).tolerance(TOL),
            extended: false,
        },
        Identity {
            id: "T4-R2",
            title: "Σ (a)_k (b)_k/(k! (c)_k) ψ(c+k) = Γ(c)Γ(c-a-b)/(Γ(c-a)Γ(c-b)) [ψ(c-a) + ψ(c-b) - ψ(c-a-b)]",
            anchor: "Gauss summation differentiated in c",
            params: vec![real("a"), real("b"), real("c")],
            kind: Kind::Infinite,
            expectation: Expectation::Holds,
            domain: gauss_domain,
            lhs: LhsForm::Series(|p| Ok(TermSeries::new(vec![p["a"], p["b"]], vec![p["c"]], 1.0).digamma(p["c"]))),
            rhs: |p| {
                let (a, b, c) = (p["a"], p["b"], p["c"]);
                Ok(gauss_ratio(a, b, c)? * (psi(c - a)? + psi(c - b)? - psi(c - a - b)?))
            },
            grid: GridSpec::new("T4-R2").values("a", spread(0.0)).values("b", spread(0.0)).values("c", spread(12.0)).tolerance(TOL),
            extended: false,
        },
        Identity {
            id: "T5",
            title: "Σ (a)_k (1-a)_k/(2^k k! (b)_k) ψ(b+k) = √π Γ(b)/(2^b Γ((a+b)/2) Γ((b-a+1)/2)) [ψ((a+b)/2) + ψ((b-a+1)/2) + ln 4]",
            anchor: "2F1(a, 1-a; b; 1/2) differentiated in b",
            params: vec![real("a"), real("b")],
            kind: Kind::Infinite,
            expectation: Expectation::Holds,
            domain: |p| {
                let (a, b) = (p["a"], p["b"]);
                away(b, "b")?;
                away(0.5 * (a + b), "(a+b)/2")?;
                away(0.5 * (b - a + 1.0), "(b-a+1)/2")
            },
            lhs: LhsForm::Series(|p| Ok(TermSeries::new(vec![p["a"], 1.0 - p["a"]], vec![p["b"]], 0.5).digamma(p["b"]))),
            rhs: |p| {
                let (a, b) = (p["a"], p["b"]);
                let (u, v) = (0.5 * (a + b), 0.5 * (b - a + 1.0));
                let g = gamma_ratio(&[0.5, b], &[u, v])? * 2f64.powf(-b);
                Ok(g * (psi(u)? + psi(v)? + LN4))
            },
            grid: GridSpec::new("T5").values("a", spread(0.0)).values("b", spread(0.05)).tolerance(TOL),
            extended: false,
        },
        Identity {
            id: "T5-C",
            title: "Σ (1-a)_k/(2^k k!) ψ(a+k) = (ψ(a) - γ)/2^a",
            anchor: "2F1(a, 1-a; b; 1/2) digamma sum at b = a",
            params: vec![real("a")],
            kind: Kind::Infinite,
            expectation: Expectation::Holds,
            domain: |p| away(p["a"], "a"),
            lhs: LhsForm::Series(|p| Ok(TermSeries::new(vec![1.0 - p["a"]], vec![], 0.5).digamma(p["a"]))),
            rhs: |p| Ok((psi(p["a"])? - EULER_GAMMA) / 2f64.powf(p["a"])),
            grid: GridSpec::new("T5-C").values("a", spread(0.0)).tolerance(TOL),
            extended: false,
        },
        Identity {
            id: "T6",
            title: "Σ (b)_k z^k/(k+1)! ψ(k+b) in closed form",
            anchor: "2F1(1, b; 2; z) differentiated in b",
            params: vec![real("b"), real("z")],
            kind: Kind::Infinite,
            expectation: Expectation::Holds,
            domain: |p| {
                let (b, z) = (p["b"], p["z"]);
                away(b, "b")?;
                require((b - 1.0).abs() >= MARGIN, || "b too close to the removable point 1".into())?;
                require(z.abs() >= MARGIN, || "z too close to the removable point 0".into())?;
                unit_disc(p)
            },
            lhs: LhsForm::Series(|p| Ok(TermSeries::new(vec![1.0, p["b"]], vec![2.0], p["z"]).digamma(p["b"]))),
            rhs: |p| {
                let (b, z) = (p["b"], p["z"]);
                let w = 1.0 - z;
                let l = w.ln();
                let inner = (1.0 - b) * l - (1.0 - w.powf(b - 1.0)) * (1.0 + (1.0 - b) * psi(b)?);
                Ok(w.powf(1.0 - b) / (z * (1.0 - b) * (1.0 - b)) * inner)
            },
            grid: GridSpec::new("T6").values("b", spread(0.0)).values("z", z_within(-0.95, 0.95)).tolerance(TOL),
            extended: false,
        },
        Identity {
            id: "T6-R1",
            title: "Σ z^k/(k+1) ψ(k+1) = ln(1-z)/(2z) [2γ + ln(1-z)]",
            anchor: "limit b → 1; Brychkov 6.2.1(2)",
            params: vec![real("z")],
            kind: Kind::Infinite,
            expectation: Expectation::Holds,
            domain: |p| {
                require(p["z"].abs() >= MARGIN, || "z too close to the removable point 0".into())?;
                unit_disc(p)
            },
            lhs: LhsForm::Series(|p| Ok(TermSeries::new(vec![1.0, 1.0], vec![2.0], p["z"]).digamma(1.0))),
            rhs: |p| {
                let z = p["z"];
                let l = (1.0 - z).ln();
                Ok(l / (2.0 * z) * (2.0 * EULER_GAMMA + l))
            },
            grid: GridSpec::new("T6-R1").values("z", z_within(-0.95, 0.95)).tolerance(TOL),
            extended: false,
        },
        Identity {
            id: "T6-R2",
            title: "Σ_{k≥1} z^k ψ(k+1) = (γz + ln(1-z))/(z-1)",
            anchor: "case b = 2; Brychkov 6.2.1(1)",
            params: vec![real("z")],
            kind: Kind::Infinite,
            expectation: Expectation::Holds,
            domain: unit_disc,
            lhs: LhsForm::Series(|p| Ok(TermSeries::new(vec![1.0], vec![], p["z"]).prefactor(p["z"]).digamma(2.0))),
            rhs: |p| {
                let z = p["z"];
                Ok((EULER_GAMMA * z + (1.0 - z).ln()) / (z - 1.0))
            },
            grid: GridSpec::new("T6-R2").values("z", z_within(-0.95, 0.95)).tolerance(TOL),
            extended: false,
        },
        Identity {
            id: "T7",
            title: "Σ z^k (a+1)_k (b)_k/(k! (a)_k) ψ(k+b) = {[ψ(b) - ln(1-z)][1 - (1-b/a)z] + z/a}/(1-z)^{1+b}",
            anchor: "2F1(a+1, b; a; z) differentiated in b",
            params: vec![real("a"), real("b"), real("z")],
            kind: Kind::Infinite,
            expectation: Expectation::Holds,
            domain: |p| {
                let a = p["a"];
                require(a.abs() >= 0.05, || "|a| below 0.05".into())?;
                away(a, "a")?;
                away(p["b"], "b")?;
                unit_disc(p)
            },
            lhs: LhsForm::Series(|p| {
                Ok(TermSeries::new(vec![p["a"] + 1.0, p["b"]], vec![p["a"]], p["z"]).digamma(p["b"]))
            }),
            rhs: |p| {
                let (a, b, z) = (p["a"], p["b"], p["z"]);
                let l = (1.0 - z).ln();
                Ok(((psi(b)? - l) * (1.0 - (1.0 - b / a) * z) + z / a) / (1.0 - z).powf(1.0 + b))
            },
            grid: GridSpec::new("T7")
                .values("a", spread(0.0))
                .values("b", spread(0.0))
                .values("z", z_within(-0.95, 0.95))
                .tolerance(TOL),
            extended: false,
        },
        Identity {
            id: "T7-Ca",
            title: "Σ z^k (a+1)_k/k! ψ(k+a) = (ψ(a) - ln(1-z) + z/a)/(1-z)^{1+a}",
            anchor: "2F1(a+1, b; a; z) digamma sum at b = a",
            params: vec![real("a"), real("z")],
            kind: Kind::Infinite,
            expectation: Expectation::Holds,
            domain: |p| {
                let a = p["a"];
                require(a.abs() >= 0.05, || "|a| below 0.05".into())?;
                away(a, "a")?;
                unit_disc(p)
            },
            lhs: LhsForm::Series(|p| Ok(TermSeries::new(vec![p["a"] + 1.0], vec![], p["z"]).digamma(p["a"]))),
            rhs: |p| {
                let (a, z) = (p["a"], p["z"]);
                Ok((psi(a)? - (1.0 - z).ln() + z / a) / (1.0 - z).powf(1.0 + a))
            },
            grid: GridSpec::new("T7-Ca").values("a", spread(0.0)).values("z", z_within(-0.95, 0.95)).tolerance(TOL),
            extended: false,
        },
        Identity {
            id: "T7-Cb",
            title: "Σ z^k (a+k) ψ(k+1) = (z - [γ + ln(1-z)][a + (1-a)z])/(1-z)^2",
            anchor: "2F1(a+1, b; a; z) digamma sum at b = 1",
            params: vec![real("a"), real("z")],
            kind: Kind::Infinite,
            expectation: Expectation::Holds,
            domain: unit_disc,
            lhs: LhsForm::Series(|p| Ok(TermSeries::new(vec![1.0], vec![], p["z"]).linear(p["a"]).digamma(1.0))),
            rhs: |p| {
                let (a, z) = (p["a"], p["z"]);
                let w = 1.0 - z;
                Ok((z - (EULER_GAMMA + w.ln()) * (a + (1.0 - a) * z)) / (w * w))
            },
            grid: GridSpec::new("T7-Cb").values("a", spread(0.0)).values("z", z_within(-0.95, 0.95)).tolerance(TOL),
            extended: false,
        },
        Identity {
            id: "T8",
            title: "Σ (k+1)!/(b)_k 2^{-k} ψ(k+b) in terms of β(b-1) and β'(b-1)",
            anchor: "2F1(1, 2; b; 1/2) differentiated in b",
            params: vec![real("b")],
            kind: Kind::Infinite,
            expectation: Expectation::Holds,
            domain: |p| b_range_above(p, 2.0),
            lhs: LhsForm::Series(|p| Ok(TermSeries::new(vec![1.0, 2.0], vec![p["b"]], 0.5).digamma(p["b"]))),
            rhs: |p| {
                let b = p["b"];
                let (ps, be, bp) = (psi(b)?, prudnikov_beta(b - 1.0)?, prudnikov_beta_prime(b - 1.0)?);
                Ok(2.0 * ((b - 1.0) * ps - 1.0)
                    + 4.0 * (2.0 * b - 3.0 - (b - 1.0) * (b - 2.0) * ps) * be
                    + 4.0 * (b - 1.0) * (b - 2.0) * bp)
            },
            grid: GridSpec::new("T8").values("b", spread(2.0)).tolerance(TOL),
            extended: false,
        },
        Identity {
            id: "T8-R",
            title: "Σ 2^{-k} k!/(b)_k ψ(k+b) = 2[(b-1)ψ(b) - 1] β(b-1) - 2(b-1) β'(b-1)",
            anchor: "2F1(1, 1; b; 1/2) differentiated in b; Brychkov 6.2.1(64)",
            params: vec![real("b")],
            kind: Kind::Infinite,
            expectation: Expectation::Holds,
            domain: |p| {
                away(p["b"], "b")?;
                away(p["b"] - 1.0, "b - 1")
            },
            lhs: LhsForm::Series(|p| Ok(TermSeries::new(vec![1.0, 1.0], vec![p["b"]], 0.5).digamma(p["b"]))),
            rhs: |p| {
                let b = p["b"];
                let (ps, be, bp) = (psi(b)?, prudnikov_beta(b - 1.0)?, prudnikov_beta_prime(b - 1.0)?);
                Ok(2.0 * ((b - 1.0) * ps - 1.0) * be - 2.0 * (b - 1.0) * bp)
            },
            grid: GridSpec::new("T8-R").values("b", spread(1.0)).tolerance(TOL),
            extended: false,
        },
        Identity {
            id: "T8-C",
            title: "Σ k k!/(b)_k 2^{-k-1} ψ(k+b) in terms of β(b-1) and β'(b-1)",
            anchor: "difference of the two 2F1(·; b; 1/2) digamma sums",
            params: vec![real("b")],
            kind: Kind::Infinite,
            expectation: Expectation::Holds,
            domain: |p| {
                away(p["b"], "b")?;
                away(p["b"] - 1.0, "b - 1")
            },
            lhs: LhsForm::Series(|p| {
                Ok(TermSeries::new(vec![1.0, 1.0], vec![p["b"]], 0.5).prefactor(0.5).linear(0.0).digamma(p["b"]))
            }),
            rhs: |p| {
                let b = p["b"];
                let (ps, be, bp) = (psi(b)?, prudnikov_beta(b - 1.0)?, prudnikov_beta_prime(b - 1.0)?);
                Ok((b - 1.0) * (ps + (2.0 * b - 3.0) * bp) + (4.0 * b - 5.0 - (b - 1.0) * (2.0 * b - 3.0) * ps) * be
                    - 1.0)
            },
            grid: GridSpec::new("T8-C").values("b", spread(1.0)).tolerance(TOL),
            extended: false,
        },
        Identity {
            id: "P2",
            title: "2F1(α+k+2, β+k+1; α+k+1; z) = (1 + (β-α)z/(α+k+1)) (1-z)^{-2-β-k}",
            anchor: "2F1(a+1, b; a; z) with shifted parameters",
            params: vec![real("alpha"), real("beta"), int("k"), real("z")],
            kind: Kind::Infinite,
            expectation: Expectation::Holds,
            domain: |p| {
                away(p["alpha"] + p["k"] + 1.0, "alpha + k + 1")?;
                z_in(p["z"], -0.1, 0.95)
            },
            lhs: LhsForm::Series(|p| {
                let (al, be, k) = (p["alpha"], p["beta"], p["k"]);
                Ok(TermSeries::new(vec![al + k + 2.0, be + k + 1.0], vec![al + k + 1.0], p["z"]))
            }),
            rhs: |p| Ok(p2_closed(p["alpha"], p["beta"], p["k"], p["z"])),
            grid: GridSpec::new("P2")
                .values("alpha", spread(0.0))
                .values("beta", spread(0.0))
                .values("k", vec![0.0, 1.0, 2.0, 5.0, 10.0, 25.0])
                .values("z", z_within(-0.1, 0.95))
                .tolerance(TOL),
            extended: false,
        },
    ]
}

/// (1 + (β-α) z/(α+k+1)) (1-z)^{-2-β-k}
pub(crate) fn p2_closed(alpha: f64, beta: f64, k: f64, z: f64) -> f64 {
    (1.0 + (beta - alpha) * z / (alpha + k + 1.0)) * (1.0 - z).powf(-2.0 - beta - k)
}
