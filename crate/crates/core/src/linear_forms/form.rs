use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::aux_function::PartialFraction;
use crate::error::{Error, Result};
use crate::exact_arith::highprec::{HighPrecReal, Precision};
use crate::exact_arith::lcm::d_lcm;
use crate::exact_arith::rational::{format_rational, int, is_integer};
use crate::totient_sets::{Fraction, ZeroSet};

use super::hurwitz::hurwitz_zeta;

/// `r_{n,θ} = ρ_{0,θ} + Σ_{odd 3<=i<=s} ρ_i ζ(i, θ)` with exact coefficients.
#[derive(Debug, Clone, PartialEq)]
pub struct LinearForm {
    pub n: u64,
    pub s: u32,
    /// `ρ_i` for odd `3 <= i <= s`.
    pub rho: BTreeMap<u32, BigRational>,
    /// `ρ_{0,θ}` for every `θ ∈ F_B`.
    pub rho0: BTreeMap<Fraction, BigRational>,
}

/// `ρ_i = Σ_k a_{i,k}` and `ρ_{0,θ} = -Σ_k Σ_{ℓ<=k} Σ_i a_{i,k}/(ℓ+θ)^i`.
///
/// Fails if `ρ_1` or any even-index sum is nonzero.
pub fn build_linear_form(pf: &PartialFraction, zero_set: &ZeroSet) -> Result<LinearForm> {
    let s = pf.max_order();
    let n = pf.n();
    let mut rho = BTreeMap::new();
    for i in 1..=s {
        let sum: BigRational = pf.row(i).iter().sum();
        if i % 2 == 0 || i == 1 {
            if !sum.is_zero() {
                return Err(Error::assertion(format!(
                    "Σ_k a_({i},k) = {} should vanish",
                    format_rational(&sum)
                )));
            }
        } else {
            rho.insert(i, sum);
        }
    }
    // tails[i-1][ℓ] = Σ_{k>=ℓ} a_{i,k}
    let tails: Vec<Vec<BigRational>> = (1..=s)
        .map(|i| {
            let mut acc = BigRational::zero();
            let mut out = vec![BigRational::zero(); n as usize + 1];
            for k in (0..=n as usize).rev() {
                acc += &pf.row(i)[k];
                out[k] = acc.clone();
            }
            out
        })
        .collect();
    let rho0 = zero_set
        .fractions()
        .iter()
        .map(|&theta| {
            let th = theta.to_rational();
            let mut total = BigRational::zero();
            for l in 0..=n as usize {
                let inv = (&th + int(l as i64)).recip();
                let mut pow = BigRational::one();
                for tail in &tails {
                    pow *= &inv;
                    total += &tail[l] * &pow;
                }
            }
            (theta, -total)
        })
        .collect();
    Ok(LinearForm { n, s, rho, rho0 })
}

impl LinearForm {
    /// Decimal orders of magnitude of the largest coefficient, for precision planning.
    pub fn magnitude(&self) -> f64 {
        let p = Precision::new(20);
        self.rho
            .values()
            .chain(self.rho0.values())
            .filter(|q| !q.is_zero())
            .map(|q| p.rational(q).log10_abs())
            .fold(0.0, f64::max)
    }

    /// `ρ_{0,θ} + Σ ρ_i ζ(i,θ)`, carrying enough extra digits to absorb the cancellation
    /// between the large coefficients and the small result.
    pub fn evaluate(&self, theta: Fraction, prec: Precision) -> Result<HighPrecReal> {
        let extra = self.magnitude().max(0.0).ceil() as usize + 10;
        let work = prec.widened(extra);
        let alpha = theta.to_rational();
        let rho0 = self
            .rho0
            .get(&theta)
            .ok_or_else(|| Error::invalid(format!("θ = {theta} is not in the zero set")))?;
        let mut acc = work.rational(rho0);
        for (&i, rho) in &self.rho {
            if !rho.is_zero() {
                acc = acc + work.rational(rho) * hurwitz_zeta(i, &alpha, work)?;
            }
        }
        Ok(prec.one() * acc)
    }

    pub fn rho_strings(&self) -> BTreeMap<String, String> {
        self.rho
            .iter()
            .map(|(i, q)| (i.to_string(), format_rational(q)))
            .collect()
    }

    pub fn rho0_strings(&self) -> BTreeMap<String, String> {
        self.rho0
            .iter()
            .map(|(t, q)| (t.to_string(), format_rational(q)))
            .collect()
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct IntegralityEntry {
    pub label: String,
    pub integral: bool,
    /// Denominator left after scaling; `"1"` when integral.
    pub leftover: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct IntegralityReport {
    pub entries: Vec<IntegralityEntry>,
    pub all_pass: bool,
}

fn entry(label: String, q: &BigRational, scale: &BigInt) -> IntegralityEntry {
    let scaled = q * BigRational::from_integer(scale.clone());
    IntegralityEntry {
        label,
        integral: is_integer(&scaled),
        leftover: scaled.denom().to_string(),
    }
}

/// `d_n^{s+1-i} ρ_i ∈ ℤ` and `d_{n+1}^{s+1} ρ_{0,θ} ∈ ℤ`.
pub fn verify_integrality(lf: &LinearForm) -> IntegralityReport {
    let dn = BigInt::from(d_lcm(lf.n));
    let dn1 = BigInt::from(d_lcm(lf.n + 1)).pow(lf.s + 1);
    let mut entries: Vec<IntegralityEntry> = lf
        .rho
        .iter()
        .map(|(&i, q)| entry(format!("rho_{i}"), q, &dn.pow(lf.s + 1 - i)))
        .collect();
    entries.extend(
        lf.rho0
            .iter()
            .map(|(t, q)| entry(format!("rho_0,{t}"), q, &dn1)),
    );
    IntegralityReport {
        all_pass: entries.iter().all(|e| e.integral),
        entries,
    }
}

/// `r̂_{n,b} = Σ_{k=1}^{b} r_{n,k/b}`, each `k/b` reduced into `F_B`.
pub fn r_hat(values: &BTreeMap<Fraction, HighPrecReal>, b: u64) -> Result<HighPrecReal> {
    let mut acc: Option<HighPrecReal> = None;
    for k in 1..=b {
        let theta = Fraction::new(k, b);
        let v = values
            .get(&theta)
            .ok_or_else(|| Error::invalid(format!("no value for θ = {theta}")))?;
        acc = Some(match acc {
            Some(a) => a + v,
            None => v.clone(),
        });
    }
    acc.ok_or_else(|| Error::invalid("b must be positive"))
}

/// `Σ_θ ρ_{0,θ}` over the cosets `k/b`, exact.
pub fn rho0_coset_sum(lf: &LinearForm, b: u64) -> Result<BigRational> {
    (1..=b)
        .map(|k| {
            let theta = Fraction::new(k, b);
            lf.rho0
                .get(&theta)
                .cloned()
                .ok_or_else(|| Error::invalid(format!("θ = {theta} is not in the zero set")))
        })
        .sum()
}
