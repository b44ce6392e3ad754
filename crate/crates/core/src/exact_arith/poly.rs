use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Zero};

/// Dense polynomial over the rationals; `coeffs[i]` multiplies `t^i`.
///
/// The highest stored coefficient is nonzero; the zero polynomial stores nothing.
/// Multiplication is schoolbook, quadratic in the degree.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct RatPolynomial {
    coeffs: Vec<BigRational>,
}

impl RatPolynomial {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::new(vec![c])
    }

    /// `lead·t + constant`
    pub fn linear(lead: BigRational, constant: BigRational) -> Self {
        Self::new(vec![constant, lead])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigRational {
        self.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Horner evaluation.
    pub fn eval(&self, t: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * t + c)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigRational::from_integer(i.into()))
                .collect(),
        )
    }

    /// `p(t + shift)`.
    pub fn shift(&self, shift: &BigRational) -> Self {
        // Horner in the ring: p(t+c) = (((a_d)(t+c) + a_{d-1})(t+c) + …)
        let step = Self::linear(BigRational::one(), shift.clone());
        self.coeffs
            .iter()
            .rev()
            .fold(Self::zero(), |acc, c| &(&acc * &step) + &Self::constant(c.clone()))
    }

    /// Exact division by `t - root`; `None` when `root` is not a root.
    pub fn div_by_root(&self, root: &BigRational) -> Option<Self> {
        if self.is_zero() {
            return Some(Self::zero());
        }
        let d = self.coeffs.len() - 1;
        let mut q = vec![BigRational::zero(); d];
        let mut carry = BigRational::zero();
        for i in (0..=d).rev() {
            let v = &self.coeffs[i] + &carry * root;
            if i == 0 {
                return v.is_zero().then(|| Self::new(q));
            }
            q[i - 1] = v.clone();
            carry = v;
        }
        unreachable!()
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }
}

impl Add for &RatPolynomial {
    type Output = RatPolynomial;
    fn add(self, rhs: &RatPolynomial) -> RatPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        RatPolynomial::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &RatPolynomial {
    type Output = RatPolynomial;
    fn sub(self, rhs: &RatPolynomial) -> RatPolynomial {
        self + &(-rhs)
    }
}

impl Neg for &RatPolynomial {
    type Output = RatPolynomial;
    fn neg(self) -> RatPolynomial {
        RatPolynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &RatPolynomial {
    type Output = RatPolynomial;
    fn mul(self, rhs: &RatPolynomial) -> RatPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return RatPolynomial::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        RatPolynomial::new(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_arith::rational::{int, rat};
    use proptest::prelude::*;

    fn arb_rat() -> impl Strategy<Value = BigRational> {
        (-50i64..50, 1i64..20).prop_map(|(p, q)| rat(p, q))
    }

    fn arb_poly() -> impl Strategy<Value = RatPolynomial> {
        prop::collection::vec(arb_rat(), 0..7).prop_map(RatPolynomial::new)
    }

    proptest! {
        #[test]
        fn product_evaluates_pointwise(p in arb_poly(), q in arb_poly(),
                                       pts in prop::collection::vec(arb_rat(), 20)) {
            let pq = &p * &q;
            for t in &pts {
                prop_assert_eq!(pq.eval(t), p.eval(t) * q.eval(t));
            }
        }

        #[test]
        fn shift_is_composition(p in arb_poly(), c in arb_rat(), t in arb_rat()) {
            prop_assert_eq!(p.shift(&c).eval(&t), p.eval(&(&t + &c)));
        }
    }

    #[test]
    fn trimming_and_degree() {
        let p = RatPolynomial::new(vec![int(1), int(0), int(0)]);
        assert_eq!(p.degree(), Some(0));
        assert_eq!(RatPolynomial::new(vec![int(0)]).degree(), None);
    }

    #[test]
    fn division_by_root() {
        // (t-2)(t+3) = t^2 + t - 6
        let p = RatPolynomial::new(vec![int(-6), int(1), int(1)]);
        assert_eq!(
            p.div_by_root(&int(2)).unwrap(),
            RatPolynomial::new(vec![int(3), int(1)])
        );
        assert!(p.div_by_root(&int(1)).is_none());
        assert_eq!(p.derivative(), RatPolynomial::new(vec![int(1), int(2)]));
    }
}
