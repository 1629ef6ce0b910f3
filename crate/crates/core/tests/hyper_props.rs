use proptest::collection::vec;
use proptest::prelude::*;
use psisum::hyper::*;
use psisum::oracle::compensated_sum;
use psisum::specfun::{digamma, pochhammer};

fn factorial(k: u64) -> f64 {
    (1..=k).map(|j| j as f64).product()
}

/// Parameter lists with p ≤ q + 1, p, q ≤ 3.
fn shapes() -> impl Strategy<Value = (Vec<f64>, Vec<f64>)> {
    vec(0.3f64..3.0, 0..=3).prop_flat_map(|den| {
        let p_max = (den.len() + 1).min(3);
        (vec(0.3f64..3.0, 0..=p_max), Just(den))
    })
}

/// Σ_{k≤m} Π(a)_k/Π(b)_k z^k/k! straight from the factorial form, with Σ|t_k|.
fn direct_partial(num: &[f64], den: &[f64], z: f64, m: u64) -> (f64, f64) {
    let terms: Vec<f64> = (0..=m)
        .map(|k| {
            let n: f64 = num.iter().map(|&a| pochhammer(a, k)).product();
            let d: f64 = den.iter().map(|&b| pochhammer(b, k)).product();
            n / d * z.powi(k as i32) / factorial(k)
        })
        .collect();
    (compensated_sum(terms.iter().copied()), terms.iter().map(|t| t.abs()).sum())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn recurrence_matches_factorial_form((num, den) in shapes(), z in -0.5f64..0.5) {
        let params = HyperParams::new(num.clone(), den.clone(), z);
        for m in 0..=10u64 {
            let r = sum_series(&TermSeries::new(num.clone(), den.clone(), z), 0.0, m as usize + 1).unwrap();
            // alternating partial sums can cancel, so the scale is Σ|t_k|
            let (direct, scale) = direct_partial(&num, &den, z, m);
            prop_assert!((r.value - direct).abs() <= 1e-14 * scale, "m={} {} vs {}", m, r.value, direct);
        }
        let full = pfq_series(&params, DEFAULT_REL_TOL, DEFAULT_MAX_TERMS).unwrap();
        prop_assert!(full.converged);
    }

    #[test]
    fn weight_one_hook((num, den) in shapes(), z in -0.5f64..0.5, s in 0.5f64..5.0) {
        let params = HyperParams::new(num, den, z);
        let plain = pfq_series(&params, 1e-14, 10_000).unwrap();
        let hooked = weighted_digamma_series(&params, s, WeightKind::One, 1e-14, 10_000).unwrap();
        prop_assert!((plain.value - hooked.value).abs() <= 1e-14 * plain.value.abs());
    }

    #[test]
    fn terminating_positive_terms(n in 0u64..20, a in 0.3f64..3.0, b in 0.3f64..3.0, z in 0.1f64..2.0) {
        // (-n)_k (-n-3)_k > 0, so every term is positive
        let nf = n as f64;
        let params = HyperParams::new(vec![-nf, -nf - 3.0, a], vec![b], z);
        let exact = pfq_terminating(&params, n, Precision::Binary64).unwrap();
        let summed = sum_series(&TermSeries::new(vec![-nf, -nf - 3.0, a], vec![b], z), 0.0, n as usize + 1).unwrap();
        prop_assert!(summed.converged);
        prop_assert_eq!(exact, summed.value);
        let ext = pfq_terminating(&params, n, Precision::Extended).unwrap();
        prop_assert!((ext - exact).abs() <= 1e-14 * exact.abs());
    }

    #[test]
    fn estimate_and_cap_invariants(num in vec(0.3f64..3.0, 1..=2), den in vec(0.3f64..3.0, 1..=2), z in -0.9f64..0.9, cap in 1usize..200) {
        let r = sum_series(&TermSeries::new(num, den, z), DEFAULT_REL_TOL, cap).unwrap();
        if !r.converged {
            prop_assert_eq!(r.terms_used, cap);
        }
        prop_assert!(r.abs_error_estimate >= 0.0);
    }
}

#[test]
fn divergent_shapes_are_rejected() {
    let p = HyperParams::new(vec![0.3, 0.3, 0.3], vec![0.3], 0.1);
    assert!(matches!(pfq_series(&p, DEFAULT_REL_TOL, DEFAULT_MAX_TERMS), Err(psisum::Error::Domain(_))));
    let p = HyperParams::new(vec![0.5, 0.5], vec![1.0], 1.0);
    assert!(matches!(pfq_series(&p, DEFAULT_REL_TOL, DEFAULT_MAX_TERMS), Err(psisum::Error::Domain(_))));
    let p = HyperParams::new(vec![0.5], vec![1.0], -40.0);
    assert!(pfq_series(&p, DEFAULT_REL_TOL, DEFAULT_MAX_TERMS).unwrap().converged);
}

#[test]
fn terminating_examples() {
    let p = HyperParams::new(vec![0.0, 1.5], vec![2.0], 0.7);
    assert_eq!(pfq_terminating(&p, 0, Precision::Binary64).unwrap(), 1.0);
    let p = HyperParams::new(vec![-2.0, 1.0], vec![2.0], 1.0);
    assert!((pfq_terminating(&p, 2, Precision::Binary64).unwrap() - 1.0 / 3.0).abs() < 1e-16);
    for b in [0.3, 0.8, 2.5] {
        let p = HyperParams::new(vec![-1.0, b, b], vec![b + 1.0, b + 1.0], 1.0);
        let expected = (2.0 * b + 1.0) / ((b + 1.0) * (b + 1.0));
        assert!((pfq_terminating(&p, 1, Precision::Extended).unwrap() - expected).abs() < 1e-15);
    }
}

#[test]
fn digamma_walk_drift() {
    for (shift, step) in [(0.37, Step::Up), (2.5, Step::Up), (1e4 + 0.5, Step::Down)] {
        let mut walk = DigammaWalk::start(shift, step).unwrap();
        for _ in 0..10_000 {
            walk.advance().unwrap();
        }
        let direct = digamma(walk.argument()).unwrap();
        assert!((walk.value() - direct).abs() <= 1e-12, "{shift}: {} vs {direct}", walk.value());
    }
}

#[test]
fn series_examples() {
    let p = HyperParams::new(vec![1.0, 1.0], vec![2.0], 0.5);
    let r = pfq_series(&p, DEFAULT_REL_TOL, DEFAULT_MAX_TERMS).unwrap();
    // -ln(1 - z)/z from the logarithm series, summed separately
    let log_series = compensated_sum((1..200).map(|k| 0.5f64.powi(k) / k as f64)) / 0.5;
    assert!((r.value - log_series).abs() <= 1e-13 * log_series);
    assert!((r.value - 1.386_294_361_1).abs() < 1e-10);
    let p = HyperParams::new(vec![1.0, 3.0], vec![2.0], 0.5);
    let r = pfq_series(&p, DEFAULT_REL_TOL, DEFAULT_MAX_TERMS).unwrap();
    assert!((r.value - 3.0).abs() < 1e-12);
    let p = HyperParams::new(vec![1.0, 3.0], vec![2.0], 0.0);
    assert_eq!(pfq_series(&p, DEFAULT_REL_TOL, 5).unwrap(), SeriesResult::exact(1.0, 1));
}

#[test]
fn geometric_digamma_example() {
    // Σ_{k≥1} 2^{-k} ψ(k+1) = Σ_{j≥0} 2^{-j-1} ψ(j+2)
    let p = HyperParams::new(vec![1.0], vec![], 0.5);
    let r = weighted_digamma_series(&p, 2.0, WeightKind::PsiOfParamPlusK, 1e-15, 1000).unwrap();
    let brute = compensated_sum((1..200).map(|k| 0.5f64.powi(k) * digamma(k as f64 + 1.0).unwrap()));
    assert!((0.5 * r.value - brute).abs() <= 1e-14);
    assert!((brute - (2.0 * std::f64::consts::LN_2 - psisum::specfun::EULER_GAMMA)).abs() <= 1e-14);
    let z0 = HyperParams::new(vec![1.0], vec![], 0.0);
    let r = weighted_digamma_series(&z0, 2.5, WeightKind::PsiOfParamPlusK, 1e-13, 10).unwrap();
    assert_eq!(r.value, digamma(2.5).unwrap());
}
