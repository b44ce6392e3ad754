use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};

use crate::exact_arith::lcm::d_lcm;
use crate::exact_arith::poly::RatPolynomial;
use crate::exact_arith::primes::prime_divisors;
use crate::exact_arith::rational::{factorial, int, is_integer, rat_pow};
use crate::exact_arith::series::RatPowerSeries;
use crate::totient_sets::Fraction;

use super::params::AuxParams;

/// `F̃_{b,a}(t) = scalar · Π (lead·t + constant)` for one zero `a/b`.
#[derive(Debug, Clone)]
pub struct FPoly {
    pub fraction: Fraction,
    pub scalar: BigRational,
    /// `(lead, constant)` pairs; `(b, a - b·rn + b·j)` for `j < (2r+1)n`, plus `(1, -rn)`
    /// when `a/b = 1`.
    pub factors: Vec<(BigInt, BigInt)>,
}

impl FPoly {
    /// Requires `rn`, `(2r+1)n`, `n/den(r)` and `(2r+1)n/(p-1)` to be integers.
    pub(crate) fn new(params: &AuxParams, fraction: Fraction) -> Self {
        let n = int(params.n as i64);
        let den_r = params.den_r();
        let rn = (&params.r * &n).to_integer();
        let len = (params.width() * &n).to_integer().to_u64().unwrap();

        let mut scalar = BigRational::one();
        for p in prime_divisors(fraction.den) {
            let e = params.width() * &n / int(p as i64 - 1);
            debug_assert!(is_integer(&e));
            scalar *= rat_pow(&int(p as i64), e.to_integer().to_i64().unwrap());
        }
        let fact = BigRational::from_integer(factorial(params.n / den_r).into());
        let fact_exp = (params.width() * int(den_r as i64)).to_integer().to_i64().unwrap();
        scalar /= rat_pow(&fact, fact_exp);

        let b = BigInt::from(fraction.den);
        let a = BigInt::from(fraction.num);
        let mut factors: Vec<(BigInt, BigInt)> = (0..len)
            .map(|j| (b.clone(), &a - &b * &rn + &b * BigInt::from(j)))
            .collect();
        if fraction.is_one() {
            factors.push((BigInt::one(), -rn));
        }
        Self {
            fraction,
            scalar,
            factors,
        }
    }

    pub fn degree(&self) -> usize {
        self.factors.len()
    }

    pub fn eval(&self, t: &BigRational) -> BigRational {
        self.factors.iter().fold(self.scalar.clone(), |acc, (l, c)| {
            acc * (t * BigRational::from_integer(l.clone()) + BigRational::from_integer(c.clone()))
        })
    }

    pub(crate) fn shifted_factors(&self, k: u64) -> impl Iterator<Item = (BigInt, BigInt)> + '_ {
        let k = BigInt::from(k);
        self.factors.iter().map(move |(l, c)| (l.clone(), c - l * &k))
    }

    /// `F̃(t - k)` expanded in full.
    pub fn shifted_poly(&self, k: u64) -> RatPolynomial {
        let order = self.degree();
        let shifted: Vec<_> = self.shifted_factors(k).collect();
        let s = RatPowerSeries::from_integer_linear_factors(shifted.iter().map(|(l, c)| (l, c)), order);
        RatPolynomial::new(s.coeffs().to_vec()).scale(&self.scalar)
    }

    pub fn expanded(&self) -> RatPolynomial {
        self.shifted_poly(0)
    }
}

/// Whether `d_n^ℓ · [t^ℓ] F̃(t - k)` is an integer.
pub fn arif_check(fpoly: &FPoly, l: usize, k: u64, n: u64) -> bool {
    let c = fpoly.shifted_poly(k).coeff(l);
    let scaled = c * BigRational::from_integer(d_lcm(n).pow(l as u32).into());
    is_integer(&scaled)
}

/// Checks `arif_check` on every `0 <= ℓ <= deg + 1`, `0 <= k <= n`; returns the failures.
pub fn arif_grid(fpoly: &FPoly, n: u64) -> Vec<(usize, u64)> {
    let dn = BigRational::from_integer(d_lcm(n).into());
    let mut failures = Vec::new();
    for k in 0..=n {
        let p = fpoly.shifted_poly(k);
        let mut scale = BigRational::one();
        for l in 0..=fpoly.degree() + 1 {
            if !is_integer(&(p.coeff(l) * &scale)) {
                failures.push((l, k));
            }
            scale *= &dn;
        }
    }
    failures
}
