//! Floating-point reals at a configurable decimal precision.
//!
//! Every value is carried at `digits + GUARD_DIGITS` significant decimal digits and
//! reported at `digits`. Binary arithmetic comes from `dashu-float`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use dashu_base::{BitTest, UnsignedAbs};
use dashu_float::round::mode::{HalfAway, HalfEven};
use dashu_float::FBig;
use dashu_int::{IBig, UBig};
use num_bigint::{BigInt, Sign};
use num_rational::BigRational;

type Float = FBig<HalfEven, 2>;

/// Extra decimal digits carried beyond the reported precision.
pub const GUARD_DIGITS: usize = 20;

/// Default reported precision in decimal digits.
pub const DEFAULT_DIGITS: usize = 60;

const LOG2_10: f64 = std::f64::consts::LOG2_10;

/// Decimal precision a computation reports; values are built through it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Precision {
    digits: usize,
}

impl Default for Precision {
    fn default() -> Self {
        Self::new(DEFAULT_DIGITS)
    }
}

impl Precision {
    pub fn new(digits: usize) -> Self {
        assert!(digits > 0, "precision must be positive");
        Self { digits }
    }

    pub fn digits(self) -> usize {
        self.digits
    }

    /// Same reported precision plus `extra` digits.
    pub fn widened(self, extra: usize) -> Self {
        Self::new(self.digits + extra)
    }

    fn bits(self) -> usize {
        ((self.digits + GUARD_DIGITS) as f64 * LOG2_10).ceil() as usize + 4
    }

    fn wrap(self, value: Float) -> HighPrecReal {
        HighPrecReal {
            value: value.with_precision(self.bits()).value(),
            digits: self.digits,
        }
    }

    pub fn int(self, v: i64) -> HighPrecReal {
        self.wrap(Float::from(v))
    }

    pub fn big_int(self, v: &BigInt) -> HighPrecReal {
        self.wrap(Float::from(to_ibig(v)))
    }

    pub fn rational(self, q: &BigRational) -> HighPrecReal {
        let num = self.big_int(q.numer());
        let den = self.big_int(q.denom());
        num / den
    }

    pub fn from_f64(self, v: f64) -> HighPrecReal {
        self.wrap(Float::try_from(v).expect("finite f64"))
    }

    /// Parses a decimal literal such as `"1.6449"` or `"-2.5e-3"`.
    pub fn parse(self, literal: &str) -> Option<HighPrecReal> {
        let dec = FBig::<HalfEven, 10>::from_str(literal).ok()?;
        let bin = dec.with_base_and_precision::<2>(self.bits()).value();
        Some(self.wrap(bin))
    }

    pub fn zero(self) -> HighPrecReal {
        self.int(0)
    }

    pub fn one(self) -> HighPrecReal {
        self.int(1)
    }

    /// Euler's number.
    pub fn e(self) -> HighPrecReal {
        self.one().exp()
    }
}

pub(crate) fn to_ibig(v: &BigInt) -> IBig {
    let (sign, bytes) = v.to_bytes_le();
    let mag = IBig::from(UBig::from_le_bytes(&bytes));
    if sign == Sign::Minus {
        -mag
    } else {
        mag
    }
}

/// A real number at a tracked precision.
#[derive(Clone)]
pub struct HighPrecReal {
    value: Float,
    digits: usize,
}

impl HighPrecReal {
    pub fn precision(&self) -> Precision {
        Precision::new(self.digits)
    }

    fn lift(&self, value: Float) -> Self {
        self.precision().wrap(value)
    }

    pub fn is_zero(&self) -> bool {
        self.value.repr().significand().is_zero()
    }

    pub fn is_negative(&self) -> bool {
        !self.is_zero() && self.value.sign() == dashu_int::Sign::Negative
    }

    pub fn is_positive(&self) -> bool {
        !self.is_zero() && !self.is_negative()
    }

    pub fn abs(&self) -> Self {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    /// Natural logarithm.
    ///
    /// # Panics
    /// If the value is not positive.
    pub fn ln(&self) -> Self {
        assert!(self.is_positive(), "ln of a non-positive value");
        self.lift(self.value.ln())
    }

    pub fn exp(&self) -> Self {
        self.lift(self.value.exp())
    }

    /// # Panics
    /// If the value is negative.
    pub fn sqrt(&self) -> Self {
        assert!(!self.is_negative(), "sqrt of a negative value");
        if self.is_zero() {
            return self.clone();
        }
        self.lift(self.value.sqrt())
    }

    pub fn powi(&self, e: i64) -> Self {
        self.lift(self.value.powi(IBig::from(e)))
    }

    /// `self^e` for a positive base.
    pub fn powf(&self, e: &Self) -> Self {
        (e * &self.ln()).exp()
    }

    pub fn max(self, other: Self) -> Self {
        if other > self {
            other
        } else {
            self
        }
    }

    /// Approximate `log10 |x|`; `-inf` for zero. Safe for magnitudes far outside `f64`.
    pub fn log10_abs(&self) -> f64 {
        if self.is_zero() {
            return f64::NEG_INFINITY;
        }
        let repr = self.value.repr();
        let sig = repr.significand();
        let bits = sig.unsigned_abs().bit_len() as isize;
        // |x| = m · 2^(exponent + bits) with m ∈ [1/2, 1)
        let shift = bits.min(60);
        let top = (sig.unsigned_abs() >> (bits - shift) as usize)
            .to_f64()
            .value();
        let mantissa = top / 2f64.powi(shift as i32);
        (mantissa.log2() + (repr.exponent() + bits) as f64) / LOG2_10
    }

    pub fn to_f64(&self) -> f64 {
        self.value.to_f64().value()
    }

    /// Scientific notation rounded to `digits` significant digits, e.g. `1.2345e-3`.
    pub fn to_scientific(&self, digits: usize) -> String {
        assert!(digits > 0);
        if self.is_zero() {
            return "0".into();
        }
        let dec: FBig<HalfAway, 10> = self.value.to_decimal().value().with_precision(digits).value();
        let repr = dec.repr();
        let sig = repr.significand().to_string();
        let (neg, sig) = match sig.strip_prefix('-') {
            Some(rest) => (true, rest.to_string()),
            None => (false, sig),
        };
        let sig = sig.trim_end_matches('0');
        let sig = if sig.is_empty() { "0" } else { sig };
        let trailing = repr.significand().to_string().trim_start_matches('-').len() - sig.len();
        let exp10 = repr.exponent() + trailing as isize + sig.len() as isize - 1;
        let mut out = String::new();
        if neg {
            out.push('-');
        }
        out.push_str(&sig[..1]);
        if sig.len() > 1 {
            out.push('.');
            out.push_str(&sig[1..]);
        }
        if exp10 != 0 {
            out.push_str(&format!("e{exp10}"));
        }
        out
    }

    /// Rounded to the reported precision.
    pub fn to_reported_string(&self) -> String {
        self.to_scientific(self.digits)
    }
}

impl fmt::Debug for HighPrecReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_scientific(self.digits.min(30)))
    }
}

impl fmt::Display for HighPrecReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_reported_string())
    }
}

impl PartialEq for HighPrecReal {
    fn eq(&self, other: &Self) -> bool {
        self.value == other.value
    }
}

impl PartialOrd for HighPrecReal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.value.cmp(&other.value))
    }
}

fn combined(a: &HighPrecReal, b: &HighPrecReal) -> Precision {
    Precision::new(a.digits.max(b.digits))
}

macro_rules! binop {
    ($trait:ident, $method:ident, $op:tt) => {
        impl $trait<&HighPrecReal> for &HighPrecReal {
            type Output = HighPrecReal;
            fn $method(self, rhs: &HighPrecReal) -> HighPrecReal {
                combined(self, rhs).wrap(&self.value $op &rhs.value)
            }
        }
        impl $trait<HighPrecReal> for HighPrecReal {
            type Output = HighPrecReal;
            fn $method(self, rhs: HighPrecReal) -> HighPrecReal {
                &self $op &rhs
            }
        }
        impl $trait<&HighPrecReal> for HighPrecReal {
            type Output = HighPrecReal;
            fn $method(self, rhs: &HighPrecReal) -> HighPrecReal {
                &self $op rhs
            }
        }
        impl $trait<HighPrecReal> for &HighPrecReal {
            type Output = HighPrecReal;
            fn $method(self, rhs: HighPrecReal) -> HighPrecReal {
                self $op &rhs
            }
        }
    };
}

binop!(Add, add, +);
binop!(Sub, sub, -);
binop!(Mul, mul, *);
binop!(Div, div, /);

impl Neg for &HighPrecReal {
    type Output = HighPrecReal;
    fn neg(self) -> HighPrecReal {
        HighPrecReal {
            value: -&self.value,
            digits: self.digits,
        }
    }
}

impl Neg for HighPrecReal {
    type Output = HighPrecReal;
    fn neg(self) -> HighPrecReal {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_arith::rational::rat;

    #[test]
    fn rational_conversion_and_printing() {
        let p = Precision::new(30);
        let third = p.rational(&rat(1, 3));
        assert_eq!(third.to_scientific(10), "3.333333333e-1");
        assert_eq!(p.int(-1500).to_scientific(5), "-1.5e3");
        assert_eq!(p.int(7).to_scientific(5), "7");
        let big = p.big_int(&"123456789012345678901234567890123".parse().unwrap());
        assert_eq!(big.to_scientific(12), "1.23456789012e32");
    }

    #[test]
    fn elementary_functions() {
        let p = Precision::new(60);
        let e = p.e();
        let e_ref = p
            .parse("2.718281828459045235360287471352662497757247093699959574966967627724")
            .unwrap();
        assert!((&e - &e_ref).abs().log10_abs() < -65.0);
        let two = p.int(2);
        let sq = two.sqrt();
        assert!((&sq * &sq - &two).abs().log10_abs() < -70.0);
        assert!((two.ln().exp() - &two).abs().log10_abs() < -70.0);
        let x = p.rational(&rat(3, 7));
        assert!((x.powf(&p.int(5)) - x.powi(5)).abs().log10_abs() < -70.0);
    }

    #[test]
    fn log10_of_extreme_magnitudes() {
        let p = Precision::new(40);
        let tiny = p.one() / p.int(10).powi(500);
        assert!((tiny.log10_abs() + 500.0).abs() < 1e-9);
        let huge = p.int(-3).powi(1000);
        assert!((huge.log10_abs() - 1000.0 * 3f64.log10()).abs() < 1e-9);
        assert!(p.zero().log10_abs().is_infinite());
    }
}
