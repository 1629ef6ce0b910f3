use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

/// Splitting constant 2^27 + 1 for Dekker's product.
const SPLITTER: f64 = 134_217_729.0;

/// Error-free sum: `a + b = s + e` exactly.
#[inline]
pub fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    let e = (a - (s - bb)) + (b - bb);
    (s, e)
}

/// Error-free sum when `|a| >= |b|` (or a == 0).
#[inline]
pub fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let e = b - (s - a);
    (s, e)
}

#[inline]
fn split(a: f64) -> (f64, f64) {
    let t = SPLITTER * a;
    let hi = t - (t - a);
    (hi, a - hi)
}

/// Error-free product: `a * b = p + e` exactly (barring overflow).
#[inline]
pub fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    let (ah, al) = split(a);
    let (bh, bl) = split(b);
    let e = ((ah * bh - p) + ah * bl + al * bh) + al * bl;
    (p, e)
}

/// Unevaluated sum `hi + lo` of two binary64 numbers (double-double).
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct ExtendedReal {
    pub hi: f64,
    pub lo: f64,
}

impl ExtendedReal {
    pub const ZERO: ExtendedReal = ExtendedReal { hi: 0.0, lo: 0.0 };
    pub const ONE: ExtendedReal = ExtendedReal { hi: 1.0, lo: 0.0 };
    pub const LN_2: ExtendedReal = ExtendedReal { hi: std::f64::consts::LN_2, lo: 2.319_046_813_846_299_6e-17 };
    pub const PI: ExtendedReal = ExtendedReal { hi: std::f64::consts::PI, lo: 1.224_646_799_147_353_2e-16 };
    pub const EULER_GAMMA: ExtendedReal = ExtendedReal { hi: 0.577_215_664_901_532_9, lo: -4.942_915_152_430_645e-18 };
    pub const SQRT_2: ExtendedReal = ExtendedReal { hi: std::f64::consts::SQRT_2, lo: -9.667_293_313_452_913e-17 };

    /// Builds a normalized value from an arbitrary pair.
    pub fn new(hi: f64, lo: f64) -> Self {
        let (s, e) = two_sum(hi, lo);
        Self::checked(s, e)
    }

    pub const fn from_f64(x: f64) -> Self {
        ExtendedReal { hi: x, lo: 0.0 }
    }

    #[inline]
    fn checked(hi: f64, lo: f64) -> Self {
        debug_assert!(!hi.is_finite() || !lo.is_finite() || hi + lo == hi, "overlapping expansion ({hi:e}, {lo:e})");
        ExtendedReal { hi, lo }
    }

    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    pub fn is_finite(self) -> bool {
        self.hi.is_finite() && self.lo.is_finite()
    }

    pub fn is_zero(self) -> bool {
        self.hi == 0.0
    }

    pub fn abs(self) -> Self {
        if self.hi < 0.0 || (self.hi == 0.0 && self.lo < 0.0) {
            -self
        } else {
            self
        }
    }

    pub fn add_f64(self, b: f64) -> Self {
        let (s, e) = two_sum(self.hi, b);
        let e = e + self.lo;
        let (hi, lo) = quick_two_sum(s, e);
        Self::checked(hi, lo)
    }

    pub fn mul_f64(self, b: f64) -> Self {
        let (p, e) = two_prod(self.hi, b);
        let e = e + self.lo * b;
        let (hi, lo) = quick_two_sum(p, e);
        Self::checked(hi, lo)
    }

    pub fn div_f64(self, b: f64) -> Self {
        self / Self::from_f64(b)
    }

    pub fn recip(self) -> Self {
        Self::ONE / self
    }

    pub fn sqr(self) -> Self {
        self * self
    }

    pub fn powi(self, n: u32) -> Self {
        let mut base = self;
        let mut acc = Self::ONE;
        let mut e = n;
        while e > 0 {
            if e & 1 == 1 {
                acc *= base;
            }
            base = base.sqr();
            e >>= 1;
        }
        acc
    }

    pub fn sqrt(self) -> Self {
        if self.hi <= 0.0 {
            return Self::from_f64(self.hi.sqrt());
        }
        // one Newton step on the binary64 root
        let x = self.hi.sqrt();
        let (p, e) = two_prod(x, x);
        let residual = ((self.hi - p) - e) + self.lo;
        Self::new(x, residual / (2.0 * x))
    }

    /// e^x to about 32 significant digits.
    pub fn exp(self) -> Self {
        if self.hi > 709.78 {
            return Self::from_f64(f64::INFINITY);
        }
        if self.hi < -745.2 {
            return Self::ZERO;
        }
        if self.hi == 0.0 {
            return Self::ONE;
        }
        // x = m ln 2 + r, |r| <= ln2 / 2, then r is scaled by 2^-10.
        let m = (self.hi / Self::LN_2.hi).round();
        let r = (self - Self::LN_2.mul_f64(m)).mul_f64(1.0 / 1024.0);
        let mut term = r;
        let mut sum = r;
        for k in 2..=20 {
            term = (term * r).div_f64(k as f64);
            sum += term;
            if term.hi.abs() < 1e-36 {
                break;
            }
        }
        // (1 + s)^2 - 1 = s (2 + s), repeated ten times
        for _ in 0..10 {
            sum = sum * sum.add_f64(2.0);
        }
        let y = sum.add_f64(1.0);
        let scale = 2f64.powi(m as i32);
        Self::checked(y.hi * scale, y.lo * scale)
    }

    /// Natural logarithm via one Newton step on the binary64 value.
    pub fn ln(self) -> Self {
        if self.hi <= 0.0 {
            return Self::from_f64(f64::NAN);
        }
        let y = Self::from_f64(self.hi.ln());
        // y + x e^{-y} - 1
        y + (self * (-y).exp()).add_f64(-1.0)
    }
}

impl From<f64> for ExtendedReal {
    fn from(x: f64) -> Self {
        Self::from_f64(x)
    }
}

impl Neg for ExtendedReal {
    type Output = Self;
    fn neg(self) -> Self {
        ExtendedReal { hi: -self.hi, lo: -self.lo }
    }
}

impl Add for ExtendedReal {
    type Output = Self;
    /// Accurate (IEEE-style) double-double addition.
    fn add(self, b: Self) -> Self {
        let (s1, s2) = two_sum(self.hi, b.hi);
        let (t1, t2) = two_sum(self.lo, b.lo);
        let s2 = s2 + t1;
        let (s1, s2) = quick_two_sum(s1, s2);
        let s2 = s2 + t2;
        let (hi, lo) = quick_two_sum(s1, s2);
        Self::checked(hi, lo)
    }
}

impl Sub for ExtendedReal {
    type Output = Self;
    fn sub(self, b: Self) -> Self {
        self + (-b)
    }
}

impl Mul for ExtendedReal {
    type Output = Self;
    fn mul(self, b: Self) -> Self {
        let (p, e) = two_prod(self.hi, b.hi);
        let e = e + (self.hi * b.lo + self.lo * b.hi);
        let (hi, lo) = quick_two_sum(p, e);
        Self::checked(hi, lo)
    }
}

impl Div for ExtendedReal {
    type Output = Self;
    /// Long division with three binary64 quotient digits.
    fn div(self, b: Self) -> Self {
        let q1 = self.hi / b.hi;
        let r = self - b.mul_f64(q1);
        let q2 = r.hi / b.hi;
        let r = r - b.mul_f64(q2);
        let q3 = r.hi / b.hi;
        let (hi, lo) = quick_two_sum(q1, q2);
        ExtendedReal::checked(hi, lo).add_f64(q3)
    }
}

impl AddAssign for ExtendedReal {
    fn add_assign(&mut self, b: Self) {
        *self = *self + b;
    }
}

impl SubAssign for ExtendedReal {
    fn sub_assign(&mut self, b: Self) {
        *self = *self - b;
    }
}

impl MulAssign for ExtendedReal {
    fn mul_assign(&mut self, b: Self) {
        *self = *self * b;
    }
}

impl PartialOrd for ExtendedReal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        match self.hi.partial_cmp(&other.hi) {
            Some(Ordering::Equal) => self.lo.partial_cmp(&other.lo),
            ord => ord,
        }
    }
}

impl fmt::Display for ExtendedReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:e} + {:e}", self.hi, self.lo)
    }
}

pub fn ext_add(x: ExtendedReal, y: ExtendedReal) -> ExtendedReal {
    x + y
}

pub fn ext_mul(x: ExtendedReal, y: ExtendedReal) -> ExtendedReal {
    x * y
}

pub fn ext_div(x: ExtendedReal, y: ExtendedReal) -> ExtendedReal {
    x / y
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: ExtendedReal, b: ExtendedReal, rel: f64) -> bool {
        ((a - b).to_f64()).abs() <= rel * b.to_f64().abs()
    }

    #[test]
    fn small_integers_add_exactly() {
        let s = ext_add(1.0.into(), 2.0.into());
        assert_eq!((s.hi, s.lo), (3.0, 0.0));
    }

    #[test]
    fn tiny_addend_is_preserved() {
        let s = ext_add(1.0.into(), 1e-20.into());
        assert_eq!(s.hi, 1.0);
        assert_eq!(s.lo, 1e-20);
    }

    #[test]
    fn sqrt_two_squared() {
        let two = ext_mul(ExtendedReal::SQRT_2, ExtendedReal::SQRT_2);
        assert!((two - 2.0.into()).to_f64().abs() < 1e-30);
        let root = ExtendedReal::from_f64(2.0).sqrt();
        assert!((root - ExtendedReal::SQRT_2).to_f64().abs() < 1e-31);
    }

    #[test]
    fn division_round_trip() {
        let x = ExtendedReal::from_f64(1.0).div_f64(3.0);
        let back = x.mul_f64(3.0);
        assert!((back - 1.0.into()).to_f64().abs() < 1e-31);
        let q = ext_div(ExtendedReal::PI, ExtendedReal::SQRT_2);
        assert!(close(q * ExtendedReal::SQRT_2, ExtendedReal::PI, 1e-31));
    }

    #[test]
    fn exp_and_ln_are_inverse() {
        for x in [-20.0, -1.5, 0.125, 1.0, 7.25, 300.0] {
            let v = ExtendedReal::from_f64(x);
            let back = v.exp().ln();
            assert!((back - v).to_f64().abs() <= 1e-30 * x.abs().max(1.0), "x = {x}");
        }
        let ln2 = ExtendedReal::from_f64(2.0).ln();
        assert!((ln2 - ExtendedReal::LN_2).to_f64().abs() < 1e-32);
    }

    #[test]
    fn exp_one_matches_series_constant() {
        let e = ExtendedReal::ONE.exp();
        let reference = ExtendedReal::new(std::f64::consts::E, 1.445_646_891_729_250_2e-16);
        assert!((e - reference).to_f64().abs() < 1e-31);
    }

    #[test]
    fn powers() {
        let x = ExtendedReal::from_f64(1.5).powi(7);
        assert_eq!(x.to_f64(), 17.0859375);
    }
}
