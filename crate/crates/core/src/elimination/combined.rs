use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact_arith::highprec::{HighPrecReal, Precision};
use crate::exact_arith::lcm::d_lcm;
use crate::exact_arith::rational::{format_rational, int, is_integer};
use crate::linear_forms::{hurwitz_zeta, r_hat, rho0_coset_sum, LinearForm};
use crate::totient_sets::Fraction;

use super::weights::WeightVector;

/// `r̃_n = Σ_b w_b Σ_k ρ_{0,k/b} + Σ_{i∈I_s∖J} (Σ_b w_b b^i) ρ_i ζ(i)`.
#[derive(Debug, Clone)]
pub struct CombinedForm {
    pub constant: BigRational,
    /// Surviving coordinates only; `i ∈ J` never appears.
    pub coefficients: BTreeMap<u32, BigRational>,
    /// `(Σ_b w_b b^j) ρ_j` is zero for every `j ∈ J`.
    pub eliminated_vanish: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct CombinedSummary {
    pub constant: String,
    pub coefficients: BTreeMap<String, String>,
    pub eliminated_vanish: bool,
}

impl CombinedForm {
    pub fn summary(&self) -> CombinedSummary {
        CombinedSummary {
            constant: format_rational(&self.constant),
            coefficients: self
                .coefficients
                .iter()
                .map(|(i, q)| (i.to_string(), format_rational(q)))
                .collect(),
            eliminated_vanish: self.eliminated_vanish,
        }
    }

    fn magnitude(&self) -> f64 {
        let p = Precision::new(20);
        std::iter::once(&self.constant)
            .chain(self.coefficients.values())
            .filter(|q| !q.is_zero())
            .map(|q| p.rational(q).log10_abs())
            .fold(0.0, f64::max)
    }

    /// Numeric value with enough extra digits for the cancellation.
    pub fn evaluate(&self, prec: Precision) -> Result<HighPrecReal> {
        let work = prec.widened(self.magnitude().max(0.0).ceil() as usize + 10);
        let mut acc = work.rational(&self.constant);
        for (&i, c) in &self.coefficients {
            if !c.is_zero() {
                acc = acc + work.rational(c) * hurwitz_zeta(i, &int(1), work)?;
            }
        }
        Ok(prec.one() * acc)
    }
}

fn check_members(lf: &LinearForm, weights: &WeightVector) -> Result<()> {
    for &b in &weights.members {
        if !lf.rho0.contains_key(&Fraction::new(1, b)) {
            return Err(Error::invalid(format!("b = {b} has no cosets in the zero set")));
        }
    }
    Ok(())
}

pub fn combined_form(lf: &LinearForm, weights: &WeightVector) -> Result<CombinedForm> {
    check_members(lf, weights)?;
    let mut constant = BigRational::zero();
    for (&b, w) in weights.members.iter().zip(&weights.w) {
        constant += rho0_coset_sum(lf, b)? * BigRational::from_integer(w.clone());
    }
    let mut coefficients = BTreeMap::new();
    let mut eliminated_vanish = true;
    for (&i, rho) in &lf.rho {
        let c = rho * BigRational::from_integer(weights.moment(i));
        if weights.j.contains(&i) {
            eliminated_vanish &= c.is_zero();
        } else {
            coefficients.insert(i, c);
        }
    }
    Ok(CombinedForm {
        constant,
        coefficients,
        eliminated_vanish,
    })
}

/// `Σ_b w_b r̂_{n,b}` from per-`θ` values.
pub fn weighted_hats(
    values: &BTreeMap<Fraction, HighPrecReal>,
    weights: &WeightVector,
) -> Result<HighPrecReal> {
    let prec = values
        .values()
        .next()
        .ok_or_else(|| Error::invalid("no values"))?
        .precision();
    let mut acc = prec.zero();
    for (&b, w) in weights.members.iter().zip(&weights.w) {
        acc = acc + prec.big_int(w) * r_hat(values, b)?;
    }
    Ok(acc)
}

#[derive(Debug, Clone, Serialize)]
pub struct CombinedIntegrality {
    pub entries: Vec<(String, bool)>,
    pub all_pass: bool,
}

/// `d_{n+1}^{s+1}` times every rational coefficient of `r̃_n` is an integer.
pub fn integrality_of_combined(lf: &LinearForm, weights: &WeightVector) -> Result<CombinedIntegrality> {
    let form = combined_form(lf, weights)?;
    let scale = BigRational::from_integer(BigInt::from(d_lcm(lf.n + 1)).pow(lf.s + 1));
    let mut entries = vec![("constant".to_string(), is_integer(&(&form.constant * &scale)))];
    for (i, c) in &form.coefficients {
        entries.push((format!("zeta_{i}"), is_integer(&(c * &scale))));
    }
    Ok(CombinedIntegrality {
        all_pass: entries.iter().all(|(_, ok)| *ok),
        entries,
    })
}
