use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use super::sets::DenominatorSet;
use crate::exact_arith::highprec::{HighPrecReal, Precision};
use crate::exact_arith::primes::{euler_phi, factorize, prime_divisors};
use crate::exact_arith::rational::{format_rational, int};

/// `Π base^exponent` with positive integer bases and rational exponents.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct FactoredReal {
    factors: BTreeMap<u64, BigRational>,
}

impl FactoredReal {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn factors(&self) -> &BTreeMap<u64, BigRational> {
        &self.factors
    }

    /// Multiplies in `base^exponent`; bases 1 and zero exponents are dropped.
    pub fn push(&mut self, base: u64, exponent: BigRational) {
        assert!(base > 0);
        if base == 1 || exponent.is_zero() {
            return;
        }
        let e = self.factors.entry(base).or_insert_with(BigRational::zero);
        *e += exponent;
        if e.is_zero() {
            self.factors.remove(&base);
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&b, e) in &other.factors {
            out.push(b, e.clone());
        }
        out
    }

    pub fn pow(&self, e: &BigRational) -> Self {
        let mut out = Self::one();
        for (&b, x) in &self.factors {
            out.push(b, x * e);
        }
        out
    }

    /// The same value over prime bases.
    pub fn to_prime_bases(&self) -> Self {
        let mut out = Self::one();
        for (&b, e) in &self.factors {
            for (p, k) in factorize(b) {
                out.push(p, e * int(k as i64));
            }
        }
        out
    }

    /// Exponent of the prime `p` once normalized to prime bases.
    pub fn prime_exponent(&self, p: u64) -> BigRational {
        self.factors
            .iter()
            .filter(|(b, _)| *b % p == 0)
            .map(|(&b, e)| {
                let k = factorize(b).into_iter().find(|&(q, _)| q == p).unwrap().1;
                e * int(k as i64)
            })
            .sum()
    }

    pub fn ln_f64(&self) -> f64 {
        self.factors
            .iter()
            .map(|(&b, e)| e.to_f64().unwrap() * (b as f64).ln())
            .sum()
    }

    pub fn ln(&self, prec: Precision) -> HighPrecReal {
        self.to_prime_bases()
            .factors
            .iter()
            .fold(prec.zero(), |acc, (&p, e)| acc + prec.rational(e) * prec.int(p as i64).ln())
    }

    /// The exact value raised to `n`, when every `n·exponent` is a nonnegative integer.
    pub fn power(&self, n: u64) -> Option<BigUint> {
        let n = int(n as i64);
        let mut out = BigUint::one();
        for (&b, e) in &self.factors {
            let k = e * &n;
            if !k.is_integer() || k.is_negative() {
                return None;
            }
            out *= BigUint::from(b).pow(k.to_integer().to_u32()?);
        }
        Some(out)
    }

    /// Smallest `n >= 1` for which every `n·exponent` is an integer.
    pub fn exponent_period(&self) -> BigInt {
        self.factors
            .values()
            .fold(BigInt::one(), |acc, e| acc.lcm(e.denom()))
    }
}

impl Serialize for FactoredReal {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.factors.len()))?;
        for (b, e) in &self.factors {
            map.serialize_entry(&b.to_string(), &format_rational(e))?;
        }
        map.end()
    }
}

fn two_r_plus_one(r: &BigRational) -> BigRational {
    assert!(r.is_positive(), "r must be positive");
    r * int(2) + int(1)
}

/// `A₁(B) = Π_b b^{(2r+1)φ(b)}` over composite bases `b`.
pub fn factor_a1(psi: &DenominatorSet, r: &BigRational) -> FactoredReal {
    let w = two_r_plus_one(r);
    let mut out = FactoredReal::one();
    for &b in psi.members() {
        out.push(b, &w * int(euler_phi(b) as i64));
    }
    out
}

/// `A₂(B) = Π_b Π_{p|b} p^{(2r+1)φ(b)/(p-1)}` over prime bases.
pub fn factor_a2(psi: &DenominatorSet, r: &BigRational) -> FactoredReal {
    let w = two_r_plus_one(r);
    let mut out = FactoredReal::one();
    for &b in psi.members() {
        let phi = euler_phi(b) as i64;
        for p in prime_divisors(b) {
            out.push(p, &w * BigRational::new(phi.into(), (p as i64 - 1).into()));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_arith::rational::rat;
    use crate::totient_sets::{build_denominator_set, period};

    fn psi(b: i64) -> DenominatorSet {
        build_denominator_set(&int(b)).unwrap()
    }

    fn pow2_3(a: u32, b: u32) -> BigUint {
        BigUint::from(2u32).pow(a) * BigUint::from(3u32).pow(b)
    }

    #[test]
    fn a1_examples() {
        assert_eq!(factor_a1(&psi(1), &int(2)).power(1), Some(BigUint::from(32u32)));
        let a1 = factor_a1(&psi(2), &int(2));
        assert_eq!(a1.to_prime_bases().power(1), Some(pow2_3(35, 20)));
        let a1 = factor_a1(&psi(1), &rat(9, 4));
        assert_eq!(a1.factors()[&2], rat(11, 2));
        assert_eq!(a1.power(1), None);
        assert_eq!(a1.power(4), Some(BigUint::from(2u32).pow(22)));
    }

    #[test]
    fn a2_examples() {
        assert_eq!(factor_a2(&psi(1), &int(2)).power(1), Some(BigUint::from(32u32)));
        assert_eq!(factor_a2(&psi(2), &int(2)).power(1), Some(pow2_3(25, 10)));
        let n = period(&psi(2), 4).to_u64().unwrap();
        assert_eq!(n, 16);
        assert!(factor_a2(&psi(2), &rat(9, 4)).power(n).is_some());
    }

    #[test]
    fn powers_at_period_are_integers() {
        for (b, r) in [(2, rat(9, 4)), (4, rat(7, 3)), (6, rat(5, 2)), (10, int(2))] {
            let set = psi(b);
            let n = period(&set, r.denom().to_u64().unwrap()).to_u64().unwrap();
            assert!(factor_a1(&set, &r).power(n).is_some(), "A1 B={b}");
            assert!(factor_a2(&set, &r).power(n).is_some(), "A2 B={b}");
        }
    }

    #[test]
    fn logarithms_agree() {
        let a = factor_a1(&psi(6), &rat(9, 4)).mul(&factor_a2(&psi(6), &rat(9, 4)));
        let hp = a.ln(Precision::new(30)).to_f64();
        assert!((hp - a.ln_f64()).abs() < 1e-9 * hp);
        assert_eq!(a.prime_exponent(2), a.to_prime_bases().factors()[&2]);
    }
}
