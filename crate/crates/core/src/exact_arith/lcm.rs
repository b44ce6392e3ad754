use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::One;

use super::primes::primes_up_to;

/// Prime factorization of `d_n = lcm(1, …, n)`: each prime `p <= n` with exponent
/// `floor(log_p n)`.
pub fn d_lcm_factorization(n: u64) -> BTreeMap<u64, u32> {
    primes_up_to(n)
        .into_iter()
        .map(|p| {
            let mut e = 0;
            let mut pk = p;
            while pk <= n {
                e += 1;
                match pk.checked_mul(p) {
                    Some(next) => pk = next,
                    None => break,
                }
            }
            (p, e)
        })
        .collect()
}

/// `d_n = lcm(1, …, n)`, with `d_0 = 1`.
pub fn d_lcm(n: u64) -> BigUint {
    d_lcm_factorization(n)
        .into_iter()
        .fold(BigUint::one(), |acc, (p, e)| acc * BigUint::from(p).pow(e))
}

/// `log d_n` (Chebyshev's ψ(n)) in double precision.
pub fn ln_d_lcm(n: u64) -> f64 {
    d_lcm_factorization(n)
        .into_iter()
        .map(|(p, e)| e as f64 * (p as f64).ln())
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_integer::Integer;

    #[test]
    fn small_values() {
        assert_eq!(d_lcm(0), BigUint::one());
        assert_eq!(d_lcm(1), BigUint::one());
        assert_eq!(d_lcm(6), BigUint::from(60u32));
    }

    #[test]
    fn matches_pairwise_lcm() {
        let mut acc = BigUint::one();
        for k in 1..=60u64 {
            acc = acc.lcm(&BigUint::from(k));
            assert_eq!(d_lcm(k), acc, "n = {k}");
        }
        assert_eq!(d_lcm(30), "2329089562800".parse::<BigUint>().unwrap());
    }

    #[test]
    fn growth_rate_tends_to_e() {
        let gaps: Vec<f64> = [1_000u64, 10_000, 100_000]
            .iter()
            .map(|&n| (ln_d_lcm(n) / n as f64 - 1.0).abs())
            .collect();
        assert!(gaps[0] > gaps[1] && gaps[1] > gaps[2], "{gaps:?}");
        assert!(gaps[2] < 0.05);
    }
}
