//! Acceptance run: one PASS/FAIL line per criterion, non-zero exit on any FAIL.

use std::f64::consts::LN_2;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use psisum::cli;
use psisum::hyper::{sum_series, DEFAULT_MAX_TERMS};
use psisum::identities::{
    catalog, check, cross_check_t9, d1_first, d1_second, evaluate, lookup, Expectation, Inner, Kind, LhsForm, Method,
    ParamPoint, Status,
};
use psisum::oracle::{oracle_sum, ExtendedReal};
use psisum::report::Report;
use psisum::specfun::*;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn rel(a: f64, b: f64) -> f64 {
    if b == 0.0 {
        a.abs()
    } else {
        (a - b).abs() / b.abs()
    }
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within_time(elapsed: Duration, limit: Duration) -> Result<(), String> {
    ensure(elapsed < limit, || format!("took {elapsed:.2?}, limit {limit:?}"))
}

/// Deterministic sample points in [lo, hi).
fn sample(lo: f64, hi: f64, count: usize) -> impl Iterator<Item = f64> {
    // golden-ratio sequence
    let phi = 0.618_033_988_749_894_9;
    (1..=count).map(move |i| lo + (hi - lo) * (i as f64 * phi).fract())
}

fn specfun_properties() -> Outcome {
    let start = Instant::now();
    let mut worst = 0.0f64;
    let mut track = |what: &str, x: f64, err: f64, tol: f64| -> Result<(), String> {
        worst = worst.max(err / tol);
        ensure(err <= tol, || format!("{what} at {x}: {err:e} > {tol:e}"))
    };
    let psi = |x: f64| digamma(x).map_err(|e| e.to_string());

    for x in sample(0.1, 50.0, 2000) {
        let up = psi(x + 1.0)?;
        track("recurrence", x, (up - psi(x)? - 1.0 / x).abs() / up.abs().max(1.0), 1e-12)?;
    }
    for x in sample(-10.0, 10.0, 2000) {
        if (x - x.round()).abs() < 1e-6 {
            continue;
        }
        let cot = pi_cot_pi(x);
        track("reflection", x, (psi(1.0 - x)? - psi(x)? - cot).abs() / cot.abs().max(1.0), 1e-10)?;
    }
    for z in sample(0.1, 100.0, 2000) {
        let rhs = 2.0 * psi(2.0 * z)?;
        track("duplication", z, (psi(z)? + psi(z + 0.5)? + 2.0 * LN_2 - rhs).abs() / rhs.abs().max(1.0), 1e-11)?;
    }
    for n in 0..=50u64 {
        let closed = -EULER_GAMMA - 2.0 * LN_2 + 2.0 * harmonic(2 * n) - harmonic(n);
        track("half-integer", n as f64, rel(psi(n as f64 + 0.5)?, closed), 1e-12)?;
    }
    for (i, x) in sample(-6.0, 6.0, 500).enumerate() {
        let n = (i % 30) as u64;
        let rhs = x * pochhammer(x + 1.0, n);
        track("pochhammer shift", x, rel(pochhammer(x, n + 1), rhs), 1e-14)?;
    }
    for m in (-1535..1536i32).step_by(7).filter(|m| m % 256 != 0) {
        let x = m as f64 / 256.0;
        let n = (m.unsigned_abs() % 20) as u64;
        let sign = if n.is_multiple_of(2) { 1.0 } else { -1.0 };
        track("pochhammer reflection", x, rel(pochhammer(-x, n), sign * pochhammer(x - n as f64 + 1.0, n)), 1e-13)?;
    }
    for n in 0..=100u64 {
        let ln_fact = |m: u64| -> f64 { (1..=m).map(|k| (k as f64).ln()).sum() };
        let expected = ln_fact(2 * n) - n as f64 * 4f64.ln() - ln_fact(n);
        let l = pochhammer_log(0.5, n);
        track("(1/2)_n", n as f64, (l.log_abs - expected).abs() / expected.abs().max(1.0), 1e-12)?;
    }
    within_time(start.elapsed(), Duration::from_secs(1))?;
    Ok(format!("worst error/tolerance {worst:.2} in {:.2?}", start.elapsed()))
}

/// Strict relative difference for every point of every listed entry.
fn sweep(
    ids: &[&str],
    tol: f64,
    mut per_point: impl FnMut(&str, &ParamPoint) -> Result<(), String>,
) -> Result<(usize, f64), String> {
    let mut count = 0;
    let mut worst = 0.0f64;
    for id in ids {
        let entry = lookup(id).map_err(|e| e.to_string())?;
        for p in entry.grid.points().map_err(|e| e.to_string())? {
            per_point(id, &p)?;
            let r = check(id, &p, tol).map_err(|e| e.to_string())?;
            ensure(r.status == Status::Ok, || format!("{id} at {p}: {:?}", r.status))?;
            let d = r.rel_diff.unwrap_or(f64::INFINITY);
            worst = worst.max(d);
            ensure(d <= tol, || format!("{id} at {p}: rel_diff {d:e} > {tol:e}"))?;
            count += 1;
        }
    }
    Ok((count, worst))
}

fn base_entries() -> Outcome {
    let start = Instant::now();
    let ids: Vec<&str> = catalog().iter().map(|e| e.id).filter(|id| id.starts_with("B-")).collect();
    ensure(ids.len() == 9, || format!("expected 9 base entries, found {}", ids.len()))?;
    for id in &ids {
        let n = lookup(id).unwrap().grid.points().map_err(|e| e.to_string())?.len();
        ensure(n >= 100, || format!("{id} has only {n} grid points"))?;
    }
    let (count, worst) = sweep(&ids, 1e-10, |_, _| Ok(()))?;
    within_time(start.elapsed(), Duration::from_secs(10))?;
    Ok(format!("{count} points, max rel_diff {worst:.1e} in {:.2?}", start.elapsed()))
}

const FINITE: [&str; 10] = ["T1", "T1-C", "T2", "T2-C1", "T2-C2", "T3", "T3-C1a", "T3-C1b", "P0", "P1"];

fn finite_entries() -> Outcome {
    let (count, worst) = sweep(&FINITE, 1e-12, |id, p| {
        let entry = lookup(id).unwrap();
        ensure(entry.kind == Kind::Finite, || format!("{id} is not finite"))?;
        let size = p.get("n").or(p.get("k")).unwrap_or(0.0);
        ensure(size <= 25.0, || format!("{id} grid exceeds n = 25"))?;
        if let LhsForm::Series(_) = entry.lhs {
            let ev = evaluate(id, p).map_err(|e| e.to_string())?;
            ensure(ev.method == Method::Extended, || format!("{id} at {p} used {:?}", ev.method))?;
        }
        Ok(())
    })?;
    let n30 = ParamPoint::new().with("n", 30.0);
    let s = oracle_sum("T2-C2", &n30, DEFAULT_MAX_TERMS).map_err(|e| e.to_string())?;
    let target = ExtendedReal::ONE.div_f64(30.0);
    let r30 = ((s - target) / target).to_f64().abs();
    ensure(r30 <= 1e-15, || format!("T2-C2 at n = 30: {r30:e}"))?;
    Ok(format!("{count} points, max rel_diff {worst:.1e}; T2-C2 n=30 oracle {r30:.1e}"))
}

const INFINITE: [&str; 16] = [
    "T4", "T4-C1", "T4-C2", "T4-R2", "T5", "T5-C", "T6", "T6-R1", "T6-R2", "T7", "T7-Ca", "T7-Cb", "T8", "T8-R",
    "T8-C", "P2",
];

fn infinite_entries() -> Outcome {
    let start = Instant::now();
    let mut direct = 0;
    let (count, worst) = sweep(&INFINITE, 1e-9, |id, p| {
        let entry = lookup(id).unwrap();
        ensure(entry.kind == Kind::Infinite, || format!("{id} is not infinite"))?;
        match entry.lhs {
            LhsForm::Series(build) => {
                let series = build(p).map_err(|e| e.to_string())?;
                let plain = sum_series(&series, 1e-13, 100_000).map_err(|e| e.to_string())?;
                if plain.converged {
                    direct += 1;
                } else {
                    // truncation stalls at unit argument; the extended path must converge instead
                    let ev = evaluate(id, p).map_err(|e| e.to_string())?;
                    ensure(ev.lhs.converged, || format!("{id} at {p} did not converge"))?;
                }
            }
            LhsForm::Custom(_) => {
                let ev = evaluate(id, p).map_err(|e| e.to_string())?;
                ensure(ev.lhs.converged, || format!("{id} at {p} did not converge"))?;
            }
        }
        Ok(())
    })?;
    within_time(start.elapsed(), Duration::from_secs(60))?;
    Ok(format!("{count} points ({direct} by plain truncation), max rel_diff {worst:.1e} in {:.2?}", start.elapsed()))
}

fn t9_family() -> Outcome {
    let (count, worst) = sweep(&["T9", "T9-JL", "T9-CVI"], 1e-8, |_, _| Ok(()))?;
    let mut points = lookup("T9-JL").unwrap().grid.points().map_err(|e| e.to_string())?;
    points.push(ParamPoint::new().with("a", 1.5).with("c", 2.5).with("z", 0.3));
    points.push(ParamPoint::new().with("a", 2.0).with("c", 3.0).with("z", -0.5));
    points.push(ParamPoint::new().with("a", 1.5).with("c", 2.5).with("z", 0.0));
    let mut cross = 0;
    for p in &points {
        let r = cross_check_t9(p, 1e-9).map_err(|e| e.to_string())?;
        ensure(r.status == Status::Ok && r.pass, || {
            format!("cross check at {p}: {:?} rel {:?}", r.status, r.rel_diff)
        })?;
        cross += 1;
    }
    ensure(cross >= 20, || format!("only {cross} cross-check points"))?;
    Ok(format!("{count} points, max rel_diff {worst:.1e}; cross check on {cross} points"))
}

fn d1_representations() -> Outcome {
    let points = lookup("D1").unwrap().grid.points().map_err(|e| e.to_string())?;
    ensure(points.len() >= 50, || format!("only {} D1 points", points.len()))?;
    let mut worst = 0.0f64;
    for p in &points {
        let value = |r: psisum::Result<psisum::hyper::SeriesResult>| -> Result<f64, String> {
            let r = r.map_err(|e| format!("D1 at {p}: {e}"))?;
            ensure(r.converged, || format!("D1 at {p} did not converge"))?;
            Ok(r.value)
        };
        let first = value(d1_first(p, Inner::Series))?;
        let second = value(d1_second(p, Inner::Series))?;
        let first_closed = value(d1_first(p, Inner::ClosedForm))?;
        let second_closed = value(d1_second(p, Inner::ClosedForm))?;
        for (what, a, b) in [
            ("first vs second", first, second),
            ("closed-form inner", first_closed, second_closed),
            ("first, inner variants", first, first_closed),
            ("second, inner variants", second, second_closed),
        ] {
            let d = rel(a, b);
            worst = worst.max(d);
            ensure(d <= 1e-8, || format!("D1 {what} at {p}: {d:e}"))?;
        }
    }
    Ok(format!("{} points, max rel_diff {worst:.1e}", points.len()))
}

fn run_cli(args: &[&str]) -> (i32, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = cli::run(std::iter::once("psisum").chain(args.iter().copied()), &mut out, &mut err);
    (code, String::from_utf8_lossy(&out).into_owned())
}

fn erratum() -> Outcome {
    let (code, out) = run_cli(&["erratum", "hansen-55-4-5-2"]);
    ensure(code == cli::EXIT_OK, || format!("exit {code}\n{out}"))?;
    let verdict = out.lines().last().unwrap_or_default().to_string();
    Ok(verdict)
}

fn full_verify() -> Outcome {
    let start = Instant::now();
    let dir = std::env::temp_dir().join(format!("psisum-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).map_err(|e| e.to_string())?;
    let path = dir.join("report.json");
    let path_str = path.to_string_lossy().into_owned();
    let (code, _) = run_cli(&["verify", "--format", "json", "--out", &path_str]);
    let text = std::fs::read_to_string(&path).map_err(|e| e.to_string());
    let _ = std::fs::remove_dir_all(&dir);
    let text = text?;
    ensure(code == cli::EXIT_OK, || format!("exit {code}"))?;

    let value: serde_json::Value = serde_json::from_str(&text).map_err(|e| e.to_string())?;
    for key in ["tool_version", "generated_at", "checks", "summary"] {
        ensure(value.get(key).is_some(), || format!("report lacks '{key}'"))?;
    }
    let stamp = value["generated_at"].as_str().unwrap_or_default();
    ensure(chrono_like(stamp), || format!("generated_at '{stamp}' is not an ISO 8601 UTC time"))?;
    for c in value["checks"].as_array().ok_or("checks is not a list")? {
        for key in ["id", "point", "lhs", "rhs", "abs_diff", "rel_diff", "status", "pass"] {
            ensure(c.get(key).is_some(), || format!("check lacks '{key}'"))?;
        }
    }
    let report = Report::from_json(&text).map_err(|e| e.to_string())?;
    let s = report.summary;
    ensure(s.failed == 0, || format!("{} failed", s.failed))?;
    ensure(s.total == report.checks.len(), || "summary total disagrees with checks".into())?;
    let erratum_ids: Vec<&str> =
        catalog().iter().filter(|e| e.expectation == Expectation::Erratum).map(|e| e.id).collect();
    ensure(report.checks.iter().all(|c| !erratum_ids.contains(&c.id.as_str())), || {
        "erratum entry in default run".into()
    })?;
    within_time(start.elapsed(), Duration::from_secs(120))?;
    Ok(format!("{} checks, {} passed, {} skipped in {:.2?}", s.total, s.passed, s.skipped, start.elapsed()))
}

/// YYYY-MM-DDTHH:MM:SS followed by fractional seconds and a UTC designator.
fn chrono_like(s: &str) -> bool {
    let b = s.as_bytes();
    b.len() >= 20
        && b[4] == b'-'
        && b[7] == b'-'
        && b[10] == b'T'
        && b[13] == b':'
        && b[16] == b':'
        && (s.ends_with('Z') || s.ends_with("+00:00"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("specfun property suite", specfun_properties),
        ("base reductions", base_entries),
        ("finite identities", finite_entries),
        ("infinite identities", infinite_entries),
        ("T9 family and cross check", t9_family),
        ("D1 representations", d1_representations),
        ("erratum reproduction", erratum),
        ("full verify", full_verify),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        match f() {
            Ok(detail) => println!("PASS {} {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {} {name}: {why}", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
