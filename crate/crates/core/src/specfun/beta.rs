use super::gamma::{check_pole, gamma_ratio};
use crate::error::{Error, Result};
use crate::hyper::{hypergeometric, HyperParams};

/// B(x, y) = Γ(x)Γ(y)/Γ(x+y).
///
/// Both orderings produce bit-identical results: the log-gamma terms are
/// combined with commutative floating-point operations only.
pub fn beta_fn(x: f64, y: f64) -> Result<f64> {
    gamma_ratio(&[x, y], &[x + y])
}

/// Incomplete beta B_z(p, q) = ∫₀ᶻ t^{p-1}(1-t)^{q-1} dt for 0 ≤ z < 1.
///
/// Evaluated as (z^p / p) ₂F₁(p, 1-q; p+1; z), which also covers q ≤ 0 where
/// the integral at z = 1 would diverge.
pub fn incomplete_beta(z: f64, p: f64, q: f64) -> Result<f64> {
    check_pole(p)?;
    if !(0.0..1.0).contains(&z) {
        return Err(Error::Domain(format!("incomplete beta needs 0 <= z < 1, got {z}")));
    }
    if z == 0.0 {
        if p > 0.0 {
            return Ok(0.0);
        }
        return Err(Error::Domain(format!("B_0(p, q) diverges for p = {p} <= 0")));
    }
    Ok(z.powf(p) * scaled_incomplete_beta(z, p, q)?)
}

/// z^{-p} B_z(p, q) = ₂F₁(p, 1-q; p+1; z) / p.
///
/// The power of z cancels, so this form stays real for -1 < z < 0 as well.
pub fn scaled_incomplete_beta(z: f64, p: f64, q: f64) -> Result<f64> {
    check_pole(p)?;
    if z.is_nan() || z.abs() >= 1.0 {
        return Err(Error::Domain(format!("|z| < 1 required, got {z}")));
    }
    let f = hypergeometric(&HyperParams::new(vec![p, 1.0 - q], vec![p + 1.0], z))?;
    Ok(f / p)
}
