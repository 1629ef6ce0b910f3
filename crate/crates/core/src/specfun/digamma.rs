use std::f64::consts::PI;

use super::gamma::{check_pole, pi_cot_pi, sin_cos_pi, ASYMPTOTIC_FROM};
use crate::error::Result;
use crate::oracle::compensated_sum;

/// Euler–Mascheroni constant γ = -ψ(1).
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// B_{2k} / (2k), k = 1..6.
const DIGAMMA_ASYMPTOTIC: [f64; 6] =
    [1.0 / 12.0, -1.0 / 120.0, 1.0 / 252.0, -1.0 / 240.0, 1.0 / 132.0, -691.0 / 32_760.0];

/// B_{2k}, k = 1..7 (trigamma expansion carries one more term).
const TRIGAMMA_ASYMPTOTIC: [f64; 7] =
    [1.0 / 6.0, -1.0 / 30.0, 1.0 / 42.0, -1.0 / 30.0, 5.0 / 66.0, -691.0 / 2730.0, 7.0 / 6.0];

fn digamma_asymptotic(x: f64) -> f64 {
    let inv2 = 1.0 / (x * x);
    let mut series = 0.0;
    for c in DIGAMMA_ASYMPTOTIC.iter().rev() {
        series = series * inv2 + c;
    }
    x.ln() - 0.5 / x - series * inv2
}

fn trigamma_asymptotic(x: f64) -> f64 {
    let inv = 1.0 / x;
    let inv2 = inv * inv;
    let mut series = 0.0;
    for c in TRIGAMMA_ASYMPTOTIC.iter().rev() {
        series = series * inv2 + c;
    }
    inv + 0.5 * inv2 + series * inv2 * inv
}

/// Digamma function ψ(x) = Γ′(x)/Γ(x) over the reals.
///
/// Positive arguments are pushed above 10 with ψ(x+1) = ψ(x) + 1/x before
/// the asymptotic expansion; negative arguments go through the reflection
/// ψ(x) = ψ(1-x) - π cot(πx).
pub fn digamma(x: f64) -> Result<f64> {
    check_pole(x)?;
    if x < 0.0 {
        return Ok(digamma_positive(1.0 - x) - pi_cot_pi(x));
    }
    Ok(digamma_positive(x))
}

fn digamma_positive(x: f64) -> f64 {
    let mut shifted = x;
    let mut reciprocal = Vec::new();
    while shifted < ASYMPTOTIC_FROM {
        reciprocal.push(1.0 / shifted);
        shifted += 1.0;
    }
    if reciprocal.is_empty() {
        return digamma_asymptotic(x);
    }
    // Smallest reciprocals first keeps the subtraction tidy.
    reciprocal.reverse();
    digamma_asymptotic(shifted) - compensated_sum(reciprocal)
}

/// Trigamma function ψ′(x).
pub fn trigamma(x: f64) -> Result<f64> {
    check_pole(x)?;
    if x < 0.0 {
        let (s, _) = sin_cos_pi(x);
        return Ok(PI * PI / (s * s) - trigamma_positive(1.0 - x));
    }
    Ok(trigamma_positive(x))
}

fn trigamma_positive(x: f64) -> f64 {
    let mut shifted = x;
    let mut acc = Vec::new();
    while shifted < ASYMPTOTIC_FROM {
        acc.push(1.0 / (shifted * shifted));
        shifted += 1.0;
    }
    acc.reverse();
    acc.push(trigamma_asymptotic(shifted));
    compensated_sum(acc)
}

/// H_n = 1 + 1/2 + … + 1/n, with H_0 = 0.
pub fn harmonic(n: u64) -> f64 {
    if n > 100_000 {
        // Far beyond anything a grid asks for; the recurrence form is exact enough.
        return digamma_positive(n as f64 + 1.0) + EULER_GAMMA;
    }
    compensated_sum((1..=n).rev().map(|k| 1.0 / k as f64))
}

/// β(z) = ½[ψ((z+1)/2) - ψ(z/2)], not to be confused with the beta function.
pub fn prudnikov_beta(z: f64) -> Result<f64> {
    let upper = digamma(0.5 * (z + 1.0))?;
    let lower = digamma(0.5 * z)?;
    Ok(0.5 * (upper - lower))
}

/// β′(z) = ¼[ψ′((z+1)/2) - ψ′(z/2)].
pub fn prudnikov_beta_prime(z: f64) -> Result<f64> {
    let upper = trigamma(0.5 * (z + 1.0))?;
    let lower = trigamma(0.5 * z)?;
    Ok(0.25 * (upper - lower))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use approx::assert_relative_eq;

    const LN4: f64 = 1.386_294_361_119_890_6;

    #[test]
    fn digamma_at_one_is_minus_gamma() {
        assert!((digamma(1.0).unwrap() + EULER_GAMMA).abs() <= 1e-14);
        assert!((digamma(1.0).unwrap() + 0.577_215_664_9).abs() < 1e-10);
    }

    #[test]
    fn digamma_at_half() {
        let v = digamma(0.5).unwrap();
        assert_relative_eq!(v, -EULER_GAMMA - LN4, max_relative = 1e-14);
        assert!((v + 1.963_510_026_0).abs() < 1e-10);
    }

    #[test]
    fn digamma_at_six_uses_harmonic() {
        let v = digamma(6.0).unwrap();
        assert_relative_eq!(v, -EULER_GAMMA + 137.0 / 60.0, max_relative = 1e-14);
        assert!((v - 1.706_117_668_4).abs() < 1e-10);
    }

    #[test]
    fn digamma_at_minus_half() {
        // one recurrence step down from ψ(1/2)
        let v = digamma(-0.5).unwrap();
        assert_relative_eq!(v, 2.0 - EULER_GAMMA - LN4, max_relative = 1e-13);
        assert!((v - 0.036_489_974_0).abs() < 1e-10);
    }

    #[test]
    fn digamma_extremes_of_accuracy_range() {
        // ψ(x) = -1/x - γ + (π²/6) x + O(x²)
        let x = 1e-6;
        let series = -1.0 / x - EULER_GAMMA + PI * PI / 6.0 * x;
        assert_relative_eq!(digamma(x).unwrap(), series, max_relative = 1e-13);
        // ψ(x) = ln x - 1/(2x) - 1/(12x²) + …
        let x: f64 = 1e6;
        let asym = x.ln() - 0.5 / x - 1.0 / (12.0 * x * x);
        assert_relative_eq!(digamma(x).unwrap(), asym, max_relative = 1e-15);
    }

    #[test]
    fn digamma_poles() {
        for x in [0.0, -1.0, -4.0, 1e-13] {
            assert!(matches!(digamma(x), Err(Error::Pole(_))));
            assert!(matches!(trigamma(x), Err(Error::Pole(_))));
        }
    }

    /// Σ_{k≥0} 1/(k+s)² summed to K terms plus the Euler–Maclaurin tail
    /// 1/(K+s) + 1/(2(K+s)²) + 1/(6(K+s)³).
    fn brute_trigamma(s: f64) -> f64 {
        let k_max = 100_000u32;
        let direct = compensated_sum((0..k_max).rev().map(|k| 1.0 / ((k as f64 + s) * (k as f64 + s))));
        let m = k_max as f64 + s;
        direct + 1.0 / m + 0.5 / (m * m) + 1.0 / (6.0 * m * m * m)
    }

    #[test]
    fn trigamma_against_brute_force() {
        assert_relative_eq!(trigamma(1.0).unwrap(), brute_trigamma(1.0), max_relative = 1e-13);
        assert_relative_eq!(trigamma(0.5).unwrap(), brute_trigamma(0.5), max_relative = 1e-13);
        assert_relative_eq!(trigamma(1.0).unwrap(), PI * PI / 6.0, max_relative = 1e-14);
        assert_relative_eq!(trigamma(0.5).unwrap(), PI * PI / 2.0, max_relative = 1e-14);
        assert_relative_eq!(trigamma(2.0).unwrap(), PI * PI / 6.0 - 1.0, max_relative = 1e-14);
    }

    #[test]
    fn trigamma_reflection() {
        for x in [-0.3, -1.7, -5.25] {
            let (s, _) = sin_cos_pi(x);
            let lhs = trigamma(x).unwrap() + trigamma(1.0 - x).unwrap();
            assert_relative_eq!(lhs, PI * PI / (s * s), max_relative = 1e-12);
        }
    }

    #[test]
    fn harmonic_numbers() {
        assert_eq!(harmonic(0), 0.0);
        assert_relative_eq!(harmonic(4), 25.0 / 12.0, max_relative = 1e-15);
        assert_relative_eq!(harmonic(10), 7381.0 / 2520.0, max_relative = 1e-15);
        assert!((harmonic(10) - 2.928_968_254_0).abs() < 1e-10);
    }

    #[test]
    fn prudnikov_beta_values() {
        assert_relative_eq!(prudnikov_beta(1.0).unwrap(), std::f64::consts::LN_2, max_relative = 1e-14);
        assert_relative_eq!(prudnikov_beta(2.0).unwrap(), 1.0 - std::f64::consts::LN_2, max_relative = 1e-13);
        assert!((prudnikov_beta(2.0).unwrap() - 0.306_852_819_4).abs() < 1e-10);
        assert!(prudnikov_beta(0.0).is_err());
        assert!(prudnikov_beta(-2.0).is_err());
        assert!(prudnikov_beta(-3.0).is_err());
    }

    #[test]
    fn prudnikov_beta_prime_values() {
        let oracle = 0.25 * (brute_trigamma(1.0) - brute_trigamma(0.5));
        let v = prudnikov_beta_prime(1.0).unwrap();
        assert_relative_eq!(v, oracle, max_relative = 1e-12);
        assert_relative_eq!(v, -PI * PI / 12.0, max_relative = 1e-14);

        let h = 1e-6;
        let z = 2.3;
        let fd = (prudnikov_beta(z + h).unwrap() - prudnikov_beta(z - h).unwrap()) / (2.0 * h);
        assert_relative_eq!(prudnikov_beta_prime(z).unwrap(), fd, max_relative = 1e-6);

        assert_eq!(prudnikov_beta_prime(2.3).unwrap(), prudnikov_beta_prime(2.3).unwrap());
    }
}
