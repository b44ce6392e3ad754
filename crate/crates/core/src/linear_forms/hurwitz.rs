use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::exact_arith::bernoulli::bernoulli;
use crate::exact_arith::highprec::{HighPrecReal, Precision, GUARD_DIGITS};
use crate::exact_arith::rational::{factorial, int};

/// `ζ(i, α) = Σ_{m>=0} (m+α)^{-i}` by Euler–Maclaurin.
///
/// The first `N` terms are summed directly, then the tail
/// `x^{1-i}/(i-1) + x^{-i}/2 + Σ_k B_{2k}/(2k)! · i(i+1)…(i+2k-2) · x^{1-i-2k}` at `x = N+α`
/// is added until its terms drop below the working precision. `N` starts at
/// `max(50, 2i)` and doubles whenever the asymptotic series turns before converging.
pub fn hurwitz_zeta(i: u32, alpha: &BigRational, prec: Precision) -> Result<HighPrecReal> {
    if i < 2 {
        return Err(Error::invalid(format!("ζ({i}, α) diverges; need i >= 2")));
    }
    if !alpha.is_positive() {
        return Err(Error::invalid("ζ(i, α) needs α > 0"));
    }
    let working = prec.digits() + GUARD_DIGITS;
    let mut n_direct = 50.max(2 * i as u64);
    loop {
        if let Some(v) = euler_maclaurin(i, alpha, prec, n_direct, working) {
            return Ok(v);
        }
        n_direct *= 2;
    }
}

fn euler_maclaurin(
    i: u32,
    alpha: &BigRational,
    prec: Precision,
    n_direct: u64,
    working: usize,
) -> Option<HighPrecReal> {
    let a = prec.rational(alpha);
    let mut sum = prec.zero();
    for m in 0..n_direct {
        sum = sum + (&a + prec.int(m as i64)).powi(-(i as i64));
    }
    let x = &a + prec.int(n_direct as i64);
    let x_pow = x.powi(-(i as i64));
    sum = sum + &x_pow * &x / prec.int(i as i64 - 1) + &x_pow / prec.int(2);

    let cutoff = -(working as f64) + sum.log10_abs();
    let inv_x2 = (&x * &x).powi(-1);
    // x^{1-i-2k}, starting at k = 1
    let mut x_term = &x_pow / &x;
    let mut previous = f64::INFINITY;
    let mut k: u64 = 1;
    loop {
        let b = bernoulli(2 * k as usize);
        // i(i+1)…(i+2k-2) / (2k)!
        let rising: BigInt = (0..2 * k - 1).map(|j| BigInt::from(i as u64 + j)).product();
        let c = b * BigRational::new(rising, factorial(2 * k).into());
        if !c.is_zero() {
            let term = prec.rational(&c) * &x_term;
            let size = term.log10_abs();
            if size < cutoff {
                return Some(sum);
            }
            if size > previous {
                return None;
            }
            previous = size;
            sum = sum + term;
        }
        x_term = x_term * &inv_x2;
        k += 1;
    }
}

/// `ζ(2)ζ(3)/ζ(6) = 1.9435964…`, the density constant of Ψ_B.
pub fn zeta_ratio(prec: Precision) -> HighPrecReal {
    let z = |i| hurwitz_zeta(i, &int(1), prec).expect("i >= 2");
    z(2) * z(3) / z(6)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_arith::rational::rat;

    const ZETA2: &str = "1.6449340668482264364724151666460251892189499012067984377355582293700074704032";
    const ZETA3: &str = "1.2020569031595942853997381615114499907649862923404988817922715553418382057863";

    fn close(a: &HighPrecReal, b: &HighPrecReal, digits: f64) -> bool {
        (a - b).abs().log10_abs() < b.abs().log10_abs() - digits
    }

    #[test]
    fn classical_values() {
        let p = Precision::new(70);
        assert!(close(&hurwitz_zeta(2, &int(1), p).unwrap(), &p.parse(ZETA2).unwrap(), 70.0));
        assert!(close(&hurwitz_zeta(3, &int(1), p).unwrap(), &p.parse(ZETA3).unwrap(), 70.0));
        // ζ(2, 1/2) = 3ζ(2)
        let half = hurwitz_zeta(2, &rat(1, 2), p).unwrap();
        assert!(close(&half, &(p.parse(ZETA2).unwrap() * p.int(3)), 70.0));
        assert!(hurwitz_zeta(1, &int(1), p).is_err());
        assert!(hurwitz_zeta(2, &int(0), p).is_err());
    }

    #[test]
    fn direct_summation_oracle() {
        // ζ(3) from Σ_{m<N} m^-3 with Richardson extrapolation on N^-2, N^-3, N^-4
        let p = Precision::new(30);
        let partial = |n: i64| (1..n).fold(p.zero(), |acc, m| acc + p.int(m).powi(-3));
        let (s1, s2) = (partial(2000), partial(4000));
        // tail ≈ 1/(2N²) - 1/(2N³) + 1/(4N⁴)
        let tail = |n: i64| {
            let n = p.int(n);
            n.powi(-2) / p.int(2) + n.powi(-3) / p.int(2) + n.powi(-4) / p.int(4)
        };
        let z = hurwitz_zeta(3, &int(1), p).unwrap();
        let e1 = (s1 + tail(2000) - &z).abs().log10_abs();
        let e2 = (s2 + tail(4000) - &z).abs().log10_abs();
        assert!(e1 < -15.0 && e2 < e1 - 1.0, "{e1} {e2}");
    }

    #[test]
    fn multiplication_formula() {
        let p = Precision::new(60);
        for b in [2i64, 3, 4, 6] {
            for i in [3u32, 5, 7] {
                let lhs = (1..=b).fold(p.zero(), |acc, k| {
                    acc + hurwitz_zeta(i, &rat(k, b), p).unwrap()
                });
                let rhs = p.int(b).powi(i as i64) * hurwitz_zeta(i, &int(1), p).unwrap();
                assert!(close(&lhs, &rhs, 55.0), "b={b} i={i}");
            }
        }
    }

    #[test]
    fn high_precision_converges() {
        let p = Precision::new(250);
        let z = hurwitz_zeta(11, &rat(1, 2), p).unwrap();
        let z2 = hurwitz_zeta(11, &rat(1, 2), Precision::new(260)).unwrap();
        assert!(close(&z, &z2, 250.0));
    }

    #[test]
    fn density_constant() {
        let r = zeta_ratio(Precision::new(30)).to_scientific(8);
        assert_eq!(r, "1.9435964");
    }
}
