use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::rational::binomial;

fn cache() -> &'static RwLock<Vec<BigRational>> {
    static CACHE: OnceLock<RwLock<Vec<BigRational>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(vec![BigRational::one()]))
}

/// The `k`-th Bernoulli number with `B_1 = -1/2`.
///
/// Values are memoized process-wide; extension takes the write lock, lookups only the
/// read lock.
pub fn bernoulli(k: usize) -> BigRational {
    if let Some(b) = cache().read().expect("bernoulli cache poisoned").get(k) {
        return b.clone();
    }
    let mut table = cache().write().expect("bernoulli cache poisoned");
    // Σ_{j=0}^{m} binom(m+1, j) B_j = 0
    while table.len() <= k {
        let m = table.len();
        let b = if m > 1 && m % 2 == 1 {
            BigRational::zero()
        } else {
            let sum = table
                .iter()
                .enumerate()
                .filter(|(_, b)| !b.is_zero())
                .fold(BigRational::zero(), |acc, (j, b)| {
                    acc + b * BigRational::from_integer(BigInt::from(binomial(m as u64 + 1, j as u64)))
                });
            -sum / BigRational::from_integer(BigInt::from(m + 1))
        };
        table.push(b);
    }
    table[k].clone()
}
