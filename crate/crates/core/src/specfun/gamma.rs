use std::f64::consts::PI;

use crate::error::{Error, Result};

/// Guard radius around the poles of Γ, ψ and ψ′.
pub const POLE_GUARD: f64 = 1e-12;

const HALF_LN_TWO_PI: f64 = 0.918_938_533_204_672_7;

/// Stirling correction coefficients B_{2k} / (2k (2k-1)), k = 1..7.
const STIRLING: [f64; 7] =
    [1.0 / 12.0, -1.0 / 360.0, 1.0 / 1260.0, -1.0 / 1680.0, 1.0 / 1188.0, -691.0 / 360_360.0, 1.0 / 156.0];

/// Arguments at or above this value go straight to the asymptotic series.
pub(crate) const ASYMPTOTIC_FROM: f64 = 10.0;

/// A real number stored as `sign * exp(log_abs)`.
///
/// `sign == 0` encodes an exact zero; `log_abs` is then meaningless and kept
/// at `-inf`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SignedLogValue {
    pub log_abs: f64,
    pub sign: i8,
}

impl SignedLogValue {
    pub const ZERO: SignedLogValue = SignedLogValue { log_abs: f64::NEG_INFINITY, sign: 0 };
    pub const ONE: SignedLogValue = SignedLogValue { log_abs: 0.0, sign: 1 };

    pub fn new(log_abs: f64, sign: i8) -> Self {
        if sign == 0 {
            Self::ZERO
        } else {
            SignedLogValue { log_abs, sign: sign.signum() }
        }
    }

    pub fn from_f64(x: f64) -> Self {
        if x == 0.0 {
            Self::ZERO
        } else {
            SignedLogValue { log_abs: x.abs().ln(), sign: if x > 0.0 { 1 } else { -1 } }
        }
    }

    pub fn value(self) -> f64 {
        match self.sign {
            0 => 0.0,
            s => f64::from(s) * self.log_abs.exp(),
        }
    }
}

impl std::ops::Mul for SignedLogValue {
    type Output = Self;

    fn mul(self, other: Self) -> Self {
        if self.sign == 0 || other.sign == 0 {
            return Self::ZERO;
        }
        SignedLogValue { log_abs: self.log_abs + other.log_abs, sign: self.sign * other.sign }
    }
}

impl std::ops::Div for SignedLogValue {
    type Output = Self;

    fn div(self, other: Self) -> Self {
        debug_assert!(other.sign != 0, "division by a zero SignedLogValue");
        if self.sign == 0 {
            return Self::ZERO;
        }
        SignedLogValue { log_abs: self.log_abs - other.log_abs, sign: self.sign * other.sign }
    }
}

/// Distance from `x` to the nearest non-positive integer.
pub fn pole_distance(x: f64) -> f64 {
    if x >= 0.0 {
        x
    } else {
        (x - x.round()).abs()
    }
}

/// Errors with [`Error::Pole`] when `x` lies within [`POLE_GUARD`] of a
/// non-positive integer.
pub fn check_pole(x: f64) -> Result<()> {
    if !x.is_finite() {
        return Err(Error::Domain(format!("non-finite argument {x}")));
    }
    if pole_distance(x) < POLE_GUARD {
        return Err(Error::Pole(x));
    }
    Ok(())
}

/// `(sin(πx), cos(πx))` with the argument reduced exactly before scaling by π.
pub fn sin_cos_pi(x: f64) -> (f64, f64) {
    let n = (2.0 * x).round();
    let r = x - 0.5 * n;
    let (s, c) = (PI * r).sin_cos();
    match (n as i64).rem_euclid(4) {
        0 => (s, c),
        1 => (c, -s),
        2 => (-s, -c),
        _ => (-c, s),
    }
}

/// `π cot(πx)`; callers must keep `x` away from the integers.
pub fn pi_cot_pi(x: f64) -> f64 {
    let (s, c) = sin_cos_pi(x);
    PI * c / s
}

fn stirling_log_gamma(x: f64) -> f64 {
    let inv = 1.0 / x;
    let inv2 = inv * inv;
    let mut series = 0.0;
    for c in STIRLING.iter().rev() {
        series = series * inv2 + c;
    }
    (x - 0.5) * x.ln() - x + HALF_LN_TWO_PI + series * inv
}

/// n!, exact in binary64 up to 22!.
fn factorial(n: u64) -> f64 {
    (1..=n).map(|k| k as f64).product()
}

fn log_gamma_positive(x: f64) -> f64 {
    if x.fract() == 0.0 && x <= 20.0 {
        return factorial(x as u64 - 1).ln();
    }
    if x >= ASYMPTOTIC_FROM {
        return stirling_log_gamma(x);
    }
    let mut shifted = x;
    let mut product = 1.0;
    while shifted < ASYMPTOTIC_FROM {
        product *= shifted;
        shifted += 1.0;
    }
    stirling_log_gamma(shifted) - product.ln()
}

/// `log|Γ(x)|` together with the sign of Γ(x).
pub fn log_gamma_signed(x: f64) -> Result<SignedLogValue> {
    check_pole(x)?;
    if x > 0.0 {
        return Ok(SignedLogValue::new(log_gamma_positive(x), 1));
    }
    // Γ(x) Γ(1-x) = π / sin(πx), with Γ(1-x) > 0 here.
    let (s, _) = sin_cos_pi(x);
    let log_abs = PI.ln() - s.abs().ln() - log_gamma_positive(1.0 - x);
    Ok(SignedLogValue::new(log_abs, if s > 0.0 { 1 } else { -1 }))
}

/// Γ(x) as a plain number (may overflow to ±inf).
pub fn gamma(x: f64) -> Result<f64> {
    if x.fract() == 0.0 && (1.0..=23.0).contains(&x) {
        return Ok(factorial(x as u64 - 1));
    }
    Ok(log_gamma_signed(x)?.value())
}

/// `Π Γ(num) / Π Γ(den)`, accumulated in signed-log space and exponentiated
/// once.
///
/// A pole among the denominator arguments makes the ratio vanish; that case
/// is reported as an error as well so that callers never mistake a limit for
/// a value.
pub fn gamma_ratio(num: &[f64], den: &[f64]) -> Result<f64> {
    let mut acc = SignedLogValue::ONE;
    for &x in num {
        acc = acc * log_gamma_signed(x)?;
    }
    for &x in den {
        acc = acc / log_gamma_signed(x)?;
    }
    Ok(acc.value())
}
