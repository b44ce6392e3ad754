//! Helpers around `num_rational::BigRational`, which is always kept in lowest terms
//! with a positive denominator.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Pow, Signed, Zero};

use crate::error::{Error, Result};

pub fn rat(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

/// Parses `"p/q"` or `"p"`.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let parse = |part: &str| {
        part.trim()
            .parse::<BigInt>()
            .map_err(|_| Error::invalid(format!("`{s}` is not a rational number")))
    };
    match s.split_once('/') {
        Some((p, q)) => {
            let q = parse(q)?;
            if q.is_zero() {
                return Err(Error::invalid(format!("`{s}` has a zero denominator")));
            }
            Ok(BigRational::new(parse(p)?, q))
        }
        None => Ok(BigRational::from_integer(parse(s)?)),
    }
}

/// Lossless `"num/den"` form; the denominator is always written.
pub fn format_rational(q: &BigRational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

pub fn is_integer(q: &BigRational) -> bool {
    q.denom().is_one()
}

/// `q^e` for a signed integer exponent.
pub fn rat_pow(q: &BigRational, e: i64) -> BigRational {
    if e >= 0 {
        Pow::pow(q, e as u64)
    } else {
        Pow::pow(q.recip(), e.unsigned_abs())
    }
}

pub fn factorial(n: u64) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * k)
}

pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Least common multiple of a rational's denominator and `acc`.
pub fn lcm_denominator(acc: &BigInt, q: &BigRational) -> BigInt {
    acc.lcm(q.denom())
}

/// Rounds toward −∞.
pub fn floor(q: &BigRational) -> BigInt {
    q.floor().to_integer()
}

pub fn abs(q: &BigRational) -> BigRational {
    q.abs()
}
