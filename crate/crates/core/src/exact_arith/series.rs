//! Power series over the rationals truncated at a fixed order.

use std::ops::{Add, Mul};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::rational::binomial;
use crate::error::{Error, Result};

/// An element of `Q[[t]] / (t^{order+1})`: coefficients of `t^0 ..= t^order`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatPowerSeries {
    coeffs: Vec<BigRational>,
}

impl RatPowerSeries {
    pub fn zero(order: usize) -> Self {
        Self {
            coeffs: vec![BigRational::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = BigRational::one();
        s
    }

    /// Truncates or zero-pads `coeffs` to the given order.
    pub fn from_coeffs(mut coeffs: Vec<BigRational>, order: usize) -> Self {
        coeffs.resize(order + 1, BigRational::zero());
        Self { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// `[t^l]`; zero above the truncation order is *not* implied, so asking for it panics.
    pub fn coeff(&self, l: usize) -> &BigRational {
        &self.coeffs[l]
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// Product of linear factors `Π (lead_j·t + constant_j)` with integer coefficients,
    /// truncated at `order`. Works in integers and converts once.
    pub fn from_integer_linear_factors<'a>(
        factors: impl IntoIterator<Item = (&'a BigInt, &'a BigInt)>,
        order: usize,
    ) -> Self {
        let mut acc = vec![BigInt::zero(); order + 1];
        acc[0] = BigInt::one();
        let mut top = 0usize;
        for (lead, constant) in factors {
            top = (top + 1).min(order);
            for l in (0..=top).rev() {
                let mut v = &acc[l] * constant;
                if l > 0 {
                    v += &acc[l - 1] * lead;
                }
                acc[l] = v;
            }
        }
        Self {
            coeffs: acc.into_iter().map(BigRational::from_integer).collect(),
        }
    }

    /// Expansion of `(1 + t/c)^{-exponent}`:
    /// `[t^l] = (-1)^l · binom(exponent - 1 + l, l) / c^l`.
    pub fn inverse_power(c: &BigRational, exponent: u32, order: usize) -> Result<Self> {
        if c.is_zero() {
            return Err(Error::invalid("series_inverse_power with c = 0"));
        }
        if exponent == 0 {
            return Err(Error::invalid("series_inverse_power with exponent 0"));
        }
        let inv = c.recip();
        let mut power = BigRational::one();
        let mut coeffs = Vec::with_capacity(order + 1);
        for l in 0..=order {
            let b = BigInt::from(binomial(exponent as u64 - 1 + l as u64, l as u64));
            let term = &power * BigRational::from_integer(b);
            coeffs.push(if l % 2 == 0 { term } else { -term });
            power *= &inv;
        }
        Ok(Self { coeffs })
    }

    fn check_order(&self, other: &Self) {
        assert_eq!(self.order(), other.order(), "series orders differ");
    }
}

impl Add for &RatPowerSeries {
    type Output = RatPowerSeries;
    fn add(self, rhs: &RatPowerSeries) -> RatPowerSeries {
        self.check_order(rhs);
        RatPowerSeries {
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Mul for &RatPowerSeries {
    type Output = RatPowerSeries;
    fn mul(self, rhs: &RatPowerSeries) -> RatPowerSeries {
        self.check_order(rhs);
        let order = self.order();
        let mut out = vec![BigRational::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs[..=order - i].iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        RatPowerSeries { coeffs: out }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_arith::rational::{int, rat};
    use proptest::prelude::*;

    #[test]
    fn geometric_series() {
        let s = RatPowerSeries::inverse_power(&int(1), 1, 3).unwrap();
        assert_eq!(s.coeffs(), &[int(1), int(-1), int(1), int(-1)]);
    }

    #[test]
    fn binomial_series_examples() {
        // Oracle: (1 + t/c)^{-e} = Σ binom(-e, l) (t/c)^l, binom(-e,l) = (-e)(-e-1)…(-e-l+1)/l!
        let oracle = |c: BigRational, e: i64, order: usize| -> Vec<BigRational> {
            let mut out = Vec::new();
            let mut gen = BigRational::one();
            for l in 0..=order as i64 {
                out.push(gen.clone() / rat_pow_int(&c, l));
                gen = gen * int(-e - l) / int(l + 1);
            }
            out
        };
        fn rat_pow_int(c: &BigRational, l: i64) -> BigRational {
            (0..l).fold(BigRational::one(), |acc, _| acc * c)
        }
        let a = RatPowerSeries::inverse_power(&int(-2), 2, 2).unwrap();
        assert_eq!(a.coeffs(), &[int(1), int(1), rat(3, 4)]);
        assert_eq!(a.coeffs(), oracle(int(-2), 2, 2).as_slice());
        let b = RatPowerSeries::inverse_power(&int(3), 4, 1).unwrap();
        assert_eq!(b.coeffs(), &[int(1), rat(-4, 3)]);
        let c = RatPowerSeries::inverse_power(&rat(-5, 7), 6, 9).unwrap();
        assert_eq!(c.coeffs(), oracle(rat(-5, 7), 6, 9).as_slice());
        assert!(RatPowerSeries::inverse_power(&int(0), 2, 2).is_err());
    }

    #[test]
    fn inverse_power_times_power_is_one() {
        // (1 + t/c)^{e} (1 + t/c)^{-e} = 1
        let c = rat(-3, 2);
        let inv = RatPowerSeries::inverse_power(&c, 3, 6).unwrap();
        let lin = RatPowerSeries::from_coeffs(vec![int(1), c.recip()], 6);
        let cube = &(&lin * &lin) * &lin;
        assert_eq!(&cube * &inv, RatPowerSeries::one(6));
    }

    #[test]
    fn integer_linear_factors() {
        // (2t + 1)(t - 3)(3t + 2) = 6t^3 - 11t^2 - 19t - 6
        let f = [(2, 1), (1, -3), (3, 2)].map(|(a, b)| (BigInt::from(a), BigInt::from(b)));
        let full = RatPowerSeries::from_integer_linear_factors(f.iter().map(|(a, b)| (a, b)), 3);
        assert_eq!(full.coeffs(), &[int(-6), int(-19), int(-11), int(6)]);
        let cut = RatPowerSeries::from_integer_linear_factors(f.iter().map(|(a, b)| (a, b)), 1);
        assert_eq!(cut.coeffs(), &[int(-6), int(-19)]);
    }

    fn arb_series(order: usize) -> impl Strategy<Value = RatPowerSeries> {
        prop::collection::vec((-20i64..20, 1i64..9), order + 1).prop_map(move |v| {
            RatPowerSeries::from_coeffs(v.into_iter().map(|(p, q)| rat(p, q)).collect(), order)
        })
    }

    proptest! {
        #[test]
        fn multiplication_is_associative(a in arb_series(5), b in arb_series(5), c in arb_series(5)) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        }
    }
}
