//! Scalar abstraction for residual evaluation.
//!
//! All identity residuals in this crate are polynomial (occasionally
//! rational-with-square-roots) expressions in point coordinates. They are
//! mathematically exact; floating-point rounding is the only error source.
//! Residual kernels are therefore written once, generic over [`Real`], and
//! instantiated either with `f64` or with [`DoubleDouble`] (an unevaluated
//! sum of two doubles, ~106-bit mantissa) for ill-conditioned fuzz cases.

use core::cmp::Ordering;
use core::ops::{Add, Div, Mul, Neg, Sub};

/// Math shims: `std` inherent methods when available, `libm` otherwise.
pub(crate) mod fp {
    macro_rules! shim {
        ($name:ident, $libm:ident, $($arg:ident),+) => {
            #[inline]
            pub fn $name($($arg: f64),+) -> f64 {
                #[cfg(feature = "std")]
                { f64::$name($($arg),+) }
                #[cfg(not(feature = "std"))]
                { libm::$libm($($arg),+) }
            }
        };
    }
    shim!(sqrt, sqrt, x);
    shim!(sin, sin, x);
    shim!(cos, cos, x);
    shim!(asin, asin, x);
    shim!(atan2, atan2, y, x);
    shim!(hypot, hypot, x, y);
    shim!(abs, fabs, x);

    #[inline]
    pub fn fma(a: f64, b: f64, c: f64) -> f64 {
        #[cfg(feature = "std")]
        {
            f64::mul_add(a, b, c)
        }
        #[cfg(not(feature = "std"))]
        {
            libm::fma(a, b, c)
        }
    }
}

/// Field operations needed by the residual kernels.
pub trait Real:
    Copy
    + PartialOrd
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn from_f64(x: f64) -> Self;
    fn to_f64(self) -> f64;
    fn abs(self) -> Self;
    fn sqrt(self) -> Self;

    #[inline]
    fn max(self, other: Self) -> Self {
        if self > other {
            self
        } else {
            other
        }
    }
}

impl Real for f64 {
    #[inline]
    fn zero() -> Self {
        0.0
    }
    #[inline]
    fn one() -> Self {
        1.0
    }
    #[inline]
    fn from_f64(x: f64) -> Self {
        x
    }
    #[inline]
    fn to_f64(self) -> f64 {
        self
    }
    #[inline]
    fn abs(self) -> Self {
        fp::abs(self)
    }
    #[inline]
    fn sqrt(self) -> Self {
        fp::sqrt(self)
    }
}

/// Double-double number: the unevaluated sum `hi + lo` with `|lo| <= ulp(hi)/2`.
///
/// Standard error-free transformations (Dekker/Knuth, with an FMA product);
/// gives roughly twice the f64 mantissa. Only the operations the residual
/// kernels need are implemented.
#[derive(Clone, Copy, Debug, Default)]
pub struct DoubleDouble {
    pub hi: f64,
    pub lo: f64,
}

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    (s, b - (s - a))
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, fp::fma(a, b, -p))
}

impl DoubleDouble {
    #[inline]
    pub fn new(hi: f64, lo: f64) -> Self {
        let (hi, lo) = quick_two_sum(hi, lo);
        Self { hi, lo }
    }
}

impl From<f64> for DoubleDouble {
    #[inline]
    fn from(x: f64) -> Self {
        Self { hi: x, lo: 0.0 }
    }
}

impl Add for DoubleDouble {
    type Output = Self;
    #[inline]
    fn add(self, rhs: Self) -> Self {
        let (s1, s2) = two_sum(self.hi, rhs.hi);
        let (t1, t2) = two_sum(self.lo, rhs.lo);
        let (s1, s2) = quick_two_sum(s1, s2 + t1);
        let (hi, lo) = quick_two_sum(s1, s2 + t2);
        Self { hi, lo }
    }
}

impl Sub for DoubleDouble {
    type Output = Self;
    #[inline]
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Neg for DoubleDouble {
    type Output = Self;
    #[inline]
    fn neg(self) -> Self {
        Self {
            hi: -self.hi,
            lo: -self.lo,
        }
    }
}

impl Mul for DoubleDouble {
    type Output = Self;
    #[inline]
    fn mul(self, rhs: Self) -> Self {
        let (p1, p2) = two_prod(self.hi, rhs.hi);
        let p2 = p2 + self.hi * rhs.lo + self.lo * rhs.hi;
        let (hi, lo) = quick_two_sum(p1, p2);
        Self { hi, lo }
    }
}

impl Div for DoubleDouble {
    type Output = Self;
    #[inline]
    fn div(self, rhs: Self) -> Self {
        let q1 = self.hi / rhs.hi;
        let r = self - rhs * Self::from(q1);
        let q2 = (r.hi + r.lo) / rhs.hi;
        let r = r - rhs * Self::from(q2);
        let q3 = (r.hi + r.lo) / rhs.hi;
        let (hi, lo) = quick_two_sum(q1, q2);
        let (hi, lo) = quick_two_sum(hi, lo + q3);
        Self { hi, lo }
    }
}

impl PartialEq for DoubleDouble {
    #[inline]
    fn eq(&self, other: &Self) -> bool {
        self.hi == other.hi && self.lo == other.lo
    }
}

impl PartialOrd for DoubleDouble {
    #[inline]
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        match self.hi.partial_cmp(&other.hi) {
            Some(Ordering::Equal) => self.lo.partial_cmp(&other.lo),
            ord => ord,
        }
    }
}

impl Real for DoubleDouble {
    #[inline]
    fn zero() -> Self {
        Self::from(0.0)
    }
    #[inline]
    fn one() -> Self {
        Self::from(1.0)
    }
    #[inline]
    fn from_f64(x: f64) -> Self {
        Self::from(x)
    }
    #[inline]
    fn to_f64(self) -> f64 {
        self.hi + self.lo
    }
    #[inline]
    fn abs(self) -> Self {
        if self.hi < 0.0 || (self.hi == 0.0 && self.lo < 0.0) {
            -self
        } else {
            self
        }
    }
    fn sqrt(self) -> Self {
        if self.hi == 0.0 && self.lo == 0.0 {
            return Self::zero();
        }
        // One Newton step on a double-precision seed doubles its accuracy.
        let y = fp::sqrt(self.hi);
        let yd = Self::from(y);
        let err = (self - yd * yd).hi / (2.0 * y);
        let (hi, lo) = quick_two_sum(y, err);
        Self { hi, lo }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dd_add_mul_roundtrip() {
        let a = DoubleDouble::from(1.0) / DoubleDouble::from(3.0);
        let three = DoubleDouble::from(3.0);
        let r = a * three - DoubleDouble::from(1.0);
        assert!(r.to_f64().abs() < 1e-31, "residual {}", r.to_f64());
    }

    #[test]
    fn dd_sqrt() {
        let two = DoubleDouble::from(2.0);
        let s = two.sqrt();
        let r = s * s - two;
        assert!(r.to_f64().abs() < 1e-30);
    }

    #[test]
    fn dd_captures_cancellation_below_f64() {
        // (1 + 2^-60) - 1 is exactly representable in double-double, not in f64.
        let tiny = 2f64.powi(-60);
        let x = DoubleDouble::from(1.0) + DoubleDouble::from(tiny);
        let d = x - DoubleDouble::from(1.0);
        assert_eq!(d.to_f64(), tiny);
    }
}
