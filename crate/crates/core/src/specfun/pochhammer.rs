use super::gamma::{check_pole, log_gamma_signed, SignedLogValue};
use crate::error::Result;

/// Rising factorial (x)_n = x (x+1) … (x+n-1), with (x)_0 = 1.
///
/// The product is exactly zero when x is a non-positive integer with -x < n.
pub fn pochhammer(x: f64, n: u64) -> f64 {
    (0..n).map(|j| x + j as f64).product()
}

/// Overflow-safe (x)_n in signed-log form.
pub fn pochhammer_log(x: f64, n: u64) -> SignedLogValue {
    if n == 0 {
        return SignedLogValue::ONE;
    }
    if x > 0.0 {
        let hi = log_gamma_signed(x + n as f64).expect("positive argument");
        let lo = log_gamma_signed(x).expect("positive argument");
        return SignedLogValue::new(hi.log_abs - lo.log_abs, 1);
    }
    let mut log_abs = 0.0;
    let mut sign = 1i8;
    for j in 0..n {
        let f = x + j as f64;
        if f == 0.0 {
            return SignedLogValue::ZERO;
        }
        log_abs += f.abs().ln();
        if f < 0.0 {
            sign = -sign;
        }
    }
    SignedLogValue::new(log_abs, sign)
}

/// d/dx (x)_n = (x)_n [ψ(x+n) - ψ(x)].
///
/// The digamma difference telescopes to Σ_{j<n} 1/(x+j), which is what is
/// summed here; the pole guard still covers x+j for j = 0..=n.
pub fn pochhammer_deriv(x: f64, n: u64) -> Result<f64> {
    for j in 0..=n {
        check_pole(x + j as f64)?;
    }
    if n == 0 {
        return Ok(0.0);
    }
    let reciprocal_sum = crate::oracle::compensated_sum((0..n).map(|j| 1.0 / (x + j as f64)));
    Ok(pochhammer(x, n) * reciprocal_sum)
}

/// d/dx [1/(x)_n] = -(d/dx (x)_n) / (x)_n².
pub fn reciprocal_pochhammer_deriv(x: f64, n: u64) -> Result<f64> {
    let p = pochhammer(x, n);
    Ok(-pochhammer_deriv(x, n)? / (p * p))
}
