use std::collections::BTreeSet;

use psisum::identities::{catalog, check, evaluate, lookup, Expectation, Kind, ParamPoint, Status};
use psisum::specfun::EULER_GAMMA;
use psisum::Error;

#[test]
fn catalog_is_sorted_and_unique() {
    let ids: Vec<&str> = catalog().iter().map(|e| e.id).collect();
    let mut sorted = ids.clone();
    sorted.sort_unstable();
    assert_eq!(ids, sorted);
    assert_eq!(ids.iter().collect::<BTreeSet<_>>().len(), ids.len());
    assert_eq!(ids.len(), 41);
}

#[test]
fn default_grids_lie_inside_domains() {
    for e in catalog() {
        let points = e.grid.points().unwrap();
        assert!(!points.is_empty(), "{}", e.id);
        for p in points {
            e.validate_point(&p).unwrap();
            assert!(e.in_domain(&p).is_ok(), "{} {p}", e.id);
        }
    }
}

#[test]
fn grid_ids_match_entries() {
    for e in catalog() {
        assert_eq!(e.grid.id, e.id);
        let symbols: Vec<&str> = e.grid.ranges.keys().map(String::as_str).collect();
        let mut declared = e.symbols();
        declared.sort_unstable();
        assert_eq!(symbols, declared, "{}", e.id);
    }
}

#[test]
fn t2_c2_small_n() {
    let ev = evaluate("T2-C2", &ParamPoint::new().with("n", 1.0)).unwrap();
    assert!((ev.lhs.value - 1.0).abs() < 1e-15);
    assert_eq!(ev.rhs, 1.0);
    let ev = evaluate("T2-C2", &ParamPoint::new().with("n", 2.0)).unwrap();
    assert!((ev.lhs.value - 0.5).abs() < 1e-15);
    assert_eq!(ev.rhs, 0.5);
    let r = check("T2-C2", &ParamPoint::new().with("n", 5.0), 1e-12).unwrap();
    assert!(r.pass);
}

#[test]
fn t5_c_at_one_is_minus_gamma() {
    let ev = evaluate("T5-C", &ParamPoint::new().with("a", 1.0)).unwrap();
    assert!((ev.lhs.value + EULER_GAMMA).abs() < 1e-15);
    assert!((ev.rhs + EULER_GAMMA).abs() < 1e-15);
}

#[test]
fn t4_at_one_one_three() {
    let p = ParamPoint::parse("a=1,b=1,c=3").unwrap();
    let ev = evaluate("T4", &p).unwrap();
    let expected = 2.0 * (1.0 - EULER_GAMMA);
    assert!((ev.rhs - expected).abs() < 1e-14);
    assert!((ev.lhs.value - expected).abs() < 1e-12);
    assert!((expected - 0.845_568_670_2).abs() < 1e-10);
}

#[test]
fn published_hansen_form_fails() {
    let p = ParamPoint::parse("a=5,b=1,c=1.5").unwrap();
    let r = check("T4-HANSEN-published", &p, 1e-9).unwrap();
    assert_eq!(r.status, Status::Ok);
    assert!(!r.pass);
    assert!(r.rel_diff.unwrap() > 1e-2);
    assert!(check("T4-HANSEN-corrected", &p, 1e-9).unwrap().pass);
    assert_eq!(lookup("T4-HANSEN-published").unwrap().expectation, Expectation::Erratum);
}

#[test]
fn outside_domain_is_excluded_not_failed() {
    let p = ParamPoint::parse("a=1,b=1,c=1.5").unwrap();
    let r = check("T4", &p, 1e-9).unwrap();
    assert_eq!(r.status, Status::DomainExcluded);
    assert!(!r.pass);
    assert!(r.lhs.is_none());
}

#[test]
fn malformed_points_are_errors() {
    assert!(matches!(check("NOPE", &ParamPoint::new(), 1e-9), Err(Error::UnknownId(_))));
    let missing = ParamPoint::parse("a=1,b=1").unwrap();
    assert!(matches!(check("T4", &missing, 1e-9), Err(Error::Params(_))));
    let extra = ParamPoint::parse("a=1,b=1,c=3,d=0").unwrap();
    assert!(matches!(check("T4", &extra, 1e-9), Err(Error::Params(_))));
    let fractional = ParamPoint::parse("n=2.5").unwrap();
    assert_eq!(check("T2-C2", &fractional, 1e-9).unwrap().status, Status::DomainExcluded);
}

#[test]
fn kinds_partition_the_catalog() {
    let finite: Vec<&str> = catalog().iter().filter(|e| e.kind == Kind::Finite).map(|e| e.id).collect();
    assert_eq!(
        finite,
        ["B-CHU", "B-QURESHI", "P0", "P1", "T1", "T1-C", "T2", "T2-C1", "T2-C2", "T3", "T3-C1a", "T3-C1b"]
    );
}

#[test]
fn qureshi_sums_agree_in_both_orders() {
    // the second form reindexes the first and divides by 2^n, which is exact
    use psisum::oracle::oracle_sum;
    for n in 1..=25 {
        let p = ParamPoint::new().with("n", n as f64);
        let a = oracle_sum("T3-C1a", &p, 1000).unwrap();
        let b = oracle_sum("T3-C1b", &p, 1000).unwrap().mul_f64(2f64.powi(n));
        let gap = ((a - b) / b).to_f64().abs();
        assert!(gap <= 1e-28, "n={n}: {gap:e}");
    }
}
