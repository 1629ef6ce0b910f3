use super::Param;
use crate::error::Result;
use crate::hyper::{hypergeometric, HyperParams};
use crate::oracle::ExtendedReal;
use crate::specfun::{digamma, pole_distance};

/// Exclusion radius around poles and removable points in domain predicates.
pub const MARGIN: f64 = 0.01;

pub type DomainResult = std::result::Result<(), String>;

pub const fn real(symbol: &'static str) -> Param {
    Param { symbol, integer: false }
}

pub const fn int(symbol: &'static str) -> Param {
    Param { symbol, integer: true }
}

/// `x` keeps at least [`MARGIN`] from the non-positive integers.
pub fn away(x: f64, what: &str) -> DomainResult {
    if pole_distance(x) < MARGIN {
        return Err(format!("{what} = {x} too close to a non-positive integer"));
    }
    Ok(())
}

/// `x` keeps at least [`MARGIN`] from every integer.
pub fn off_integers(x: f64, what: &str) -> DomainResult {
    if (x - x.round()).abs() < MARGIN {
        return Err(format!("{what} = {x} too close to an integer"));
    }
    Ok(())
}

pub fn require(cond: bool, why: impl FnOnce() -> String) -> DomainResult {
    if cond {
        Ok(())
    } else {
        Err(why())
    }
}

pub fn z_in(z: f64, lo: f64, hi: f64) -> DomainResult {
    require((lo..=hi).contains(&z), || format!("z = {z} outside [{lo}, {hi}]"))
}

pub fn psi(x: f64) -> Result<f64> {
    digamma(x)
}

pub fn hyp(num: &[f64], den: &[f64], z: f64) -> Result<f64> {
    hypergeometric(&HyperParams::new(num.to_vec(), den.to_vec(), z))
}

/// Π_{j=lo}^{hi} j in double-double (1 for an empty range).
pub fn product_range(lo: u64, hi: u64) -> ExtendedReal {
    let mut p = ExtendedReal::ONE;
    for j in lo..=hi {
        p = p.mul_f64(j as f64);
    }
    p
}

pub fn factorial(n: u64) -> ExtendedReal {
    product_range(1, n)
}

pub fn n_of(v: f64) -> u64 {
    v as u64
}
