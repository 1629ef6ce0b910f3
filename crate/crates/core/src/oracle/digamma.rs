use super::dd::ExtendedReal;
use crate::error::Result;
use crate::specfun::check_pole;

/// Arguments are shifted up to this point before the asymptotic series.
const SHIFT_TO: f64 = 40.0;

/// B_{2k}/(2k), k = 1..10, as exact rationals.
const COEFFS: [(f64, f64); 10] = [
    (1.0, 12.0),
    (-1.0, 120.0),
    (1.0, 252.0),
    (-1.0, 240.0),
    (1.0, 132.0),
    (-691.0, 32_760.0),
    (1.0, 12.0),
    (-3617.0, 8160.0),
    (43_867.0, 14_364.0),
    (-174_611.0, 6600.0),
];

fn asymptotic(x: ExtendedReal) -> ExtendedReal {
    let inv2 = (x * x).recip();
    let mut series = ExtendedReal::ZERO;
    for &(num, den) in COEFFS.iter().rev() {
        series = series * inv2 + ExtendedReal::from_f64(num).div_f64(den);
    }
    x.ln() - x.recip().mul_f64(0.5) - series * inv2
}

/// ψ(x) in double-double precision for a binary64 argument.
///
/// Negative arguments need no reflection: the upward recurrence
/// ψ(x) = ψ(x+m) - Σ_{j<m} 1/(x+j) is valid on the whole real line away from
/// the poles.
pub fn ext_digamma(x: f64) -> Result<ExtendedReal> {
    check_pole(x)?;
    let mut shifted = ExtendedReal::from_f64(x);
    let mut correction = ExtendedReal::ZERO;
    while shifted.hi < SHIFT_TO {
        correction += shifted.recip();
        shifted = shifted.add_f64(1.0);
    }
    Ok(asymptotic(shifted) - correction)
}
