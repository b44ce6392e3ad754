use std::cmp::Ordering;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact_arith::primes::{euler_phi, prime_divisors, primes_up_to, totients_up_to};
use crate::exact_arith::rational::{floor, format_rational, int};

/// Ψ_B: every positive integer `b` with `φ(b) <= B`, ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DenominatorSet {
    bound: BigRational,
    members: Vec<u64>,
}

impl DenominatorSet {
    pub fn bound(&self) -> &BigRational {
        &self.bound
    }

    pub fn members(&self) -> &[u64] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, b: u64) -> bool {
        self.members.binary_search(&b).is_ok()
    }

    /// Primes dividing at least one member, ascending.
    pub fn primes(&self) -> Vec<u64> {
        let mut ps: Vec<u64> = self.members.iter().flat_map(|&b| prime_divisors(b)).collect();
        ps.sort_unstable();
        ps.dedup();
        ps
    }
}

fn integer_bound(bound: &BigRational) -> Result<u64> {
    if *bound < int(1) {
        return Err(Error::invalid(format!(
            "B = {} must be at least 1",
            format_rational(bound)
        )));
    }
    floor(bound)
        .to_u64()
        .filter(|&b| b <= 1 << 32)
        .ok_or_else(|| Error::invalid("B is too large to enumerate"))
}

/// Builds Ψ_B by depth-first search over prime-power factorizations.
///
/// φ is multiplicative and `φ(p^k) = p^(k-1)(p-1)`, so only primes with `p - 1 <= B`
/// can divide a member and the search is exact.
pub fn build_denominator_set(bound: &BigRational) -> Result<DenominatorSet> {
    let limit = integer_bound(bound)?;
    let primes = primes_up_to(limit + 1);
    let mut members = Vec::new();
    dfs(&primes, 0, 1, 1, limit, &mut members);
    members.sort_unstable();
    Ok(DenominatorSet {
        bound: bound.clone(),
        members,
    })
}

fn dfs(primes: &[u64], from: usize, b: u64, phi: u64, limit: u64, out: &mut Vec<u64>) {
    out.push(b);
    for (i, &p) in primes.iter().enumerate().skip(from) {
        if phi * (p - 1) > limit {
            break;
        }
        let (mut pb, mut pphi) = (b * p, phi * (p - 1));
        while pphi <= limit {
            dfs(primes, i + 1, pb, pphi, limit, out);
            pb *= p;
            pphi *= p;
        }
    }
}

/// Ψ_B by scanning `1 <= b <= 2·ceil(B)²`, which suffices since `φ(b) >= sqrt(b/2)`.
pub fn build_by_scan(bound: &BigRational) -> Result<DenominatorSet> {
    let limit = integer_bound(bound)?;
    let ceil = bound.ceil().to_integer().to_u64().unwrap_or(limit + 1);
    let top = 2 * ceil * ceil;
    let phi = totients_up_to(top as usize);
    let members = (1..=top).filter(|&b| phi[b as usize] <= limit).collect();
    Ok(DenominatorSet {
        bound: bound.clone(),
        members,
    })
}

/// A reduced fraction `num/den` with positive terms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Fraction {
    pub num: u64,
    pub den: u64,
}

impl Fraction {
    pub fn new(num: u64, den: u64) -> Self {
        assert!(num > 0 && den > 0);
        let g = num.gcd(&den);
        Fraction {
            num: num / g,
            den: den / g,
        }
    }

    pub fn one() -> Self {
        Fraction { num: 1, den: 1 }
    }

    pub fn is_one(&self) -> bool {
        self.num == self.den
    }

    pub fn to_rational(self) -> BigRational {
        BigRational::new(BigInt::from(self.num), BigInt::from(self.den))
    }
}

impl Ord for Fraction {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.num as u128 * other.den as u128).cmp(&(other.num as u128 * self.den as u128))
    }
}

impl PartialOrd for Fraction {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

/// F_B: reduced fractions in (0, 1] whose denominators lie in Ψ_B, ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZeroSet {
    fractions: Vec<Fraction>,
}

impl ZeroSet {
    pub fn fractions(&self) -> &[Fraction] {
        &self.fractions
    }

    pub fn len(&self) -> usize {
        self.fractions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.fractions.is_empty()
    }

    pub fn contains(&self, f: Fraction) -> bool {
        self.fractions.binary_search(&f).is_ok()
    }
}

pub fn build_zero_set(psi: &DenominatorSet) -> ZeroSet {
    let mut fractions: Vec<Fraction> = psi
        .members
        .iter()
        .flat_map(|&b| {
            (1..=b)
                .filter(move |a| a.gcd(&b) == 1)
                .map(move |a| Fraction { num: a, den: b })
        })
        .collect();
    fractions.sort_unstable();
    ZeroSet { fractions }
}

/// `2·den(r)·lcm{p-1 : p prime, p | b for some b ∈ Ψ_B}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PeriodP {
    #[serde(serialize_with = "crate::totient_sets::ser_display")]
    pub value: BigUint,
}

impl PeriodP {
    pub fn to_u64(&self) -> Option<u64> {
        self.value.to_u64()
    }
}

pub fn period(psi: &DenominatorSet, den_r: u64) -> PeriodP {
    assert!(den_r > 0);
    let l = psi
        .primes()
        .into_iter()
        .fold(BigUint::one(), |acc, p| acc.lcm(&BigUint::from(p - 1)));
    PeriodP {
        value: l * (2 * den_r),
    }
}

/// `Σ_{b∈Ψ_B} φ(b)`, which equals `|F_B|`.
pub fn totient_sum(psi: &DenominatorSet) -> u64 {
    psi.members.iter().map(|&b| euler_phi(b)).sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_arith::rational::rat;

    fn psi(b: i64) -> DenominatorSet {
        build_denominator_set(&int(b)).unwrap()
    }

    #[test]
    fn small_denominator_sets() {
        assert_eq!(psi(1).members(), [1, 2]);
        assert_eq!(psi(2).members(), [1, 2, 3, 4, 6]);
        assert_eq!(psi(4).members(), [1, 2, 3, 4, 5, 6, 8, 10, 12]);
        assert_eq!(
            build_denominator_set(&rat(5, 2)).unwrap().members(),
            psi(2).members()
        );
        assert!(build_denominator_set(&rat(1, 2)).is_err());
    }

    #[test]
    fn search_matches_scan() {
        for b in 1..=80 {
            let bound = rat(2 * b + 1, 2);
            assert_eq!(
                build_denominator_set(&bound).unwrap().members(),
                build_by_scan(&bound).unwrap().members(),
                "B = {b}.5"
            );
        }
    }

    #[test]
    fn divisor_closed() {
        let set = psi(200);
        for &b in set.members() {
            for d in 1..=b {
                if b % d == 0 {
                    assert!(set.contains(d), "{d} | {b}");
                }
            }
        }
    }

    #[test]
    fn zero_set_examples() {
        let f1 = build_zero_set(&psi(1));
        assert_eq!(f1.fractions(), [Fraction::new(1, 2), Fraction::one()]);
        let f2 = build_zero_set(&psi(2));
        assert_eq!(f2.len(), 8);
        for b in [3, 10, 37] {
            let set = psi(b);
            let zs = build_zero_set(&set);
            assert_eq!(zs.len() as u64, totient_sum(&set));
            for &d in set.members() {
                for k in 1..=d {
                    assert!(zs.contains(Fraction::new(k, d)));
                }
            }
        }
    }

    #[test]
    fn period_examples() {
        assert_eq!(period(&psi(1), 1).to_u64(), Some(2));
        assert_eq!(period(&psi(2), 1).to_u64(), Some(4));
        assert_eq!(period(&psi(2), 4).to_u64(), Some(16));
        let set = psi(30);
        let p = period(&set, 3);
        for q in set.primes() {
            assert_eq!(&p.value % BigUint::from(6 * (q - 1)), BigUint::from(0u32));
        }
    }
}
