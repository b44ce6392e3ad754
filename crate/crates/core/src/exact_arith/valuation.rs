//! q-adic valuations and the lower bound for products of consecutive terms of an
//! arithmetic progression.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};

/// `v_q(m)` for a nonzero integer.
pub fn vq_int(m: &BigInt, q: u64) -> Option<u64> {
    if m.is_zero() {
        return None;
    }
    let q = BigInt::from(q);
    let mut m = m.clone();
    let mut v = 0;
    loop {
        let (quot, rem) = m.div_rem(&q);
        if !rem.is_zero() {
            return Some(v);
        }
        m = quot;
        v += 1;
    }
}

/// `v_q(x)` for a nonzero rational; negative when `q` divides the denominator.
pub fn vq(x: &BigRational, q: u64) -> Result<i64> {
    if q < 2 {
        return Err(Error::invalid(format!("valuation base {q} is not prime")));
    }
    let num = vq_int(x.numer(), q).ok_or_else(|| Error::invalid("v_q(0) is infinite"))?;
    let den = vq_int(x.denom(), q).unwrap_or(0);
    Ok(num as i64 - den as i64)
}

/// `Σ_{i≥1} floor(L / q^i)`: a lower bound for `v_q(x_1 ⋯ x_L)` whenever the `x_j` are
/// `L` consecutive terms of an integer progression whose difference is prime to `q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ValuationBound {
    pub q: u64,
    pub len: u64,
    pub bound: u64,
}

pub fn ap_valuation_bound(len: u64, q: u64) -> ValuationBound {
    assert!(q >= 2);
    let mut bound = 0;
    let mut qi = q;
    while qi <= len {
        bound += len / qi;
        match qi.checked_mul(q) {
            Some(next) => qi = next,
            None => break,
        }
    }
    ValuationBound { q, len, bound }
}

/// Legendre's formula `v_p(n!)`; numerically the same floor sum.
pub fn legendre(n: u64, p: u64) -> u64 {
    ap_valuation_bound(n, p).bound
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_arith::rational::{factorial, rat};

    #[test]
    fn rational_valuations() {
        assert_eq!(vq(&rat(48, 1), 2).unwrap(), 4);
        assert_eq!(vq(&rat(5, 8), 2).unwrap(), -3);
        assert_eq!(vq(&rat(7, 3), 5).unwrap(), 0);
        assert!(vq(&rat(0, 1), 3).is_err());
    }

    #[test]
    fn floor_sums() {
        assert_eq!(ap_valuation_bound(0, 7).bound, 0);
        assert_eq!(ap_valuation_bound(10, 3).bound, 4);
        let ten_fact = BigInt::from(factorial(10));
        assert_eq!(vq_int(&ten_fact, 3), Some(4));
        assert_eq!(legendre(10, 3), 4);
    }

    #[test]
    fn progression_five_step_three() {
        // 5, 8, …, 23
        let prod: BigInt = (0..7).map(|j| BigInt::from(5 + 3 * j)).product();
        let b = ap_valuation_bound(7, 2);
        assert_eq!(b.bound, 4);
        assert!(b.bound <= vq_int(&prod, 2).unwrap());
    }
}
