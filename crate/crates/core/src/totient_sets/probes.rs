use num_bigint::BigUint;
use serde::Serialize;

use super::factored::{factor_a1, factor_a2};
use super::sets::{build_denominator_set, totient_sum, DenominatorSet};
use crate::error::{Error, Result};
use crate::exact_arith::primes::euler_phi;
use crate::exact_arith::rational::int;
use crate::par;

#[derive(Debug, Clone, Serialize)]
pub struct DensityRow {
    pub bound: u64,
    pub size: usize,
    pub ratio: f64,
}

/// `(B, |Ψ_B|, |Ψ_B|/B)` for each `B`.
pub fn density_report(bounds: &[u64]) -> Result<Vec<DensityRow>> {
    par::map(bounds.to_vec(), |b| {
        let psi = build_denominator_set(&int(b as i64))?;
        Ok(DensityRow {
            bound: b,
            size: psi.len(),
            ratio: psi.len() as f64 / b as f64,
        })
    })
    .into_iter()
    .collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct OptimalityVerdict {
    pub d: usize,
    pub minimizer: Vec<u64>,
    #[serde(serialize_with = "crate::totient_sets::ser_display")]
    pub product: BigUint,
    /// The `d` smallest integers under `m ≺ m'` iff `(φ(m), m) < (φ(m'), m')`.
    pub order_prefix: Vec<u64>,
    /// Some `B` with `Ψ_{B-1} ⊂ minimizer ⊂ Ψ_B`.
    pub sandwich_bound: Option<u64>,
    pub consistent: bool,
}

const OPTIMALITY_RANGE: u64 = 24;

fn weight(b: u64) -> BigUint {
    BigUint::from(b).pow(euler_phi(b) as u32)
}

/// Exhaustive minimum of `Π b^φ(b)` over `d`-subsets of `{1, …, 24}`.
pub fn optimality_probe(d: usize) -> Result<OptimalityVerdict> {
    if d == 0 || d > 5 {
        return Err(Error::invalid(format!(
            "optimality probe needs 1 <= D <= 5, got {d}"
        )));
    }
    let weights: Vec<BigUint> = (1..=OPTIMALITY_RANGE).map(weight).collect();
    let mut best: Option<(BigUint, Vec<u64>)> = None;
    let mut idx: Vec<usize> = (0..d).collect();
    loop {
        let prod = idx.iter().fold(BigUint::from(1u32), |acc, &i| acc * &weights[i]);
        if best.as_ref().is_none_or(|(p, _)| prod < *p) {
            best = Some((prod, idx.iter().map(|&i| i as u64 + 1).collect()));
        }
        // next combination in lexicographic order
        let n = OPTIMALITY_RANGE as usize;
        let Some(pos) = (0..d).rev().find(|&i| idx[i] < n - d + i) else {
            break;
        };
        idx[pos] += 1;
        for j in pos + 1..d {
            idx[j] = idx[j - 1] + 1;
        }
    }
    let (product, minimizer) = best.expect("at least one subset");

    let mut order: Vec<u64> = (1..=OPTIMALITY_RANGE).collect();
    order.sort_by_key(|&m| (euler_phi(m), m));
    let mut order_prefix = order[..d].to_vec();
    order_prefix.sort_unstable();

    let sandwich_bound = (1..=OPTIMALITY_RANGE).find(|&b| {
        minimizer.iter().all(|&m| euler_phi(m) <= b)
            && (1..=OPTIMALITY_RANGE)
                .filter(|&m| euler_phi(m) < b)
                .all(|m| minimizer.contains(&m))
    });
    let consistent = minimizer == order_prefix && sandwich_bound.is_some();
    Ok(OptimalityVerdict {
        d,
        minimizer,
        product,
        order_prefix,
        sandwich_bound,
        consistent,
    })
}

/// Result of scanning an inequality over integer `B` in `[from, to]`.
#[derive(Debug, Clone, Serialize)]
pub struct ThresholdReport {
    pub from: u64,
    pub to: u64,
    pub last_failure: Option<u64>,
    /// Smallest `B0` such that the inequality holds for every tested `B >= B0`.
    pub threshold: u64,
}

fn threshold(from: u64, to: u64, holds: impl Fn(u64) -> bool) -> ThresholdReport {
    let last_failure = (from..=to).rev().find(|&b| !holds(b));
    ThresholdReport {
        from,
        to,
        last_failure,
        threshold: last_failure.map_or(from, |b| b + 1),
    }
}

/// `|F_B|` for every integer `B` in `1..=max`.
pub fn zero_set_sizes(max: u64) -> Result<Vec<u64>> {
    let psi = build_denominator_set(&int(max as i64))?;
    let mut by_phi = vec![0u64; max as usize + 1];
    for &b in psi.members() {
        let phi = euler_phi(b);
        by_phi[phi as usize] += phi;
    }
    let mut acc = 0;
    Ok(by_phi
        .into_iter()
        .map(|c| {
            acc += c;
            acc
        })
        .skip(1)
        .collect())
}

/// Where `|F_B| <= B²` starts to hold for good, scanning `1..=max`.
pub fn zero_set_threshold(max: u64) -> Result<ThresholdReport> {
    let sizes = zero_set_sizes(max)?;
    Ok(threshold(1, max, |b| sizes[b as usize - 1] <= b * b))
}

/// `log A₂(B) / ((2r+1)·B²·(log log B)²)`; independent of `r`.
pub fn a2_bound_ratio(psi: &DenominatorSet) -> f64 {
    let b = psi.bound().to_integer().to_string().parse::<f64>().unwrap();
    let ln_a2 = factor_a2(psi, &int(1)).ln_f64() / 3.0;
    ln_a2 / (b * b * b.ln().ln().powi(2))
}

/// Where `log A₂(B) <= 10(2r+1)B²(log log B)²` starts to hold for good, over `3..=max`.
pub fn a2_threshold(max: u64) -> Result<ThresholdReport> {
    let ratios = par::map((3..=max).collect(), |b| {
        build_denominator_set(&int(b as i64)).map(|psi| a2_bound_ratio(&psi))
    })
    .into_iter()
    .collect::<Result<Vec<f64>>>()?;
    Ok(threshold(3, max, |b| ratios[b as usize - 3] <= 10.0))
}

/// `log A₁(B) / ((2r+1)·½·κ·B² log B)` for the density constant `κ`; independent of `r`.
pub fn a1_growth_ratio(psi: &DenominatorSet, kappa: f64) -> f64 {
    let b = psi.bound().to_integer().to_string().parse::<f64>().unwrap();
    let ln_a1 = factor_a1(psi, &int(1)).ln_f64() / 3.0;
    ln_a1 / (0.5 * kappa * b * b * b.ln())
}

/// `|F_B| = Σ φ(b)`, cross-checked against the zero set itself.
pub fn zero_set_size(psi: &DenominatorSet) -> u64 {
    totient_sum(psi)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn density_small() {
        let rows = density_report(&[2, 4]).unwrap();
        assert_eq!((rows[0].size, rows[0].ratio), (5, 2.5));
        assert_eq!(rows[1].size, 9);
    }

    #[test]
    fn optimality_examples() {
        let v1 = optimality_probe(1).unwrap();
        assert_eq!((v1.minimizer.clone(), v1.product.clone()), (vec![1], BigUint::from(1u32)));
        let v2 = optimality_probe(2).unwrap();
        assert_eq!((v2.minimizer.clone(), v2.product.clone()), (vec![1, 2], BigUint::from(2u32)));
        for d in 1..=5 {
            assert!(optimality_probe(d).unwrap().consistent, "D = {d}");
        }
        let v4 = optimality_probe(4).unwrap();
        let b = v4.sandwich_bound.unwrap();
        let psi = build_denominator_set(&int(b as i64)).unwrap();
        assert!(v4.minimizer.iter().all(|&m| psi.contains(m)));
        assert!(optimality_probe(6).is_err());
    }

    #[test]
    fn zero_set_sizes_match_sets() {
        let sizes = zero_set_sizes(40).unwrap();
        for b in [1u64, 2, 7, 40] {
            let psi = build_denominator_set(&int(b as i64)).unwrap();
            assert_eq!(sizes[b as usize - 1], zero_set_size(&psi));
        }
        assert_eq!(sizes[0], 2);
        assert_eq!(sizes[1], 8);
    }

    #[test]
    fn empirical_thresholds() {
        // |F_B|/B² tends to κ/2 ≈ 0.972, so the last violations come late
        let zs = zero_set_threshold(4000).unwrap();
        assert_eq!(zs.last_failure, Some(1441), "{zs:?}");
        let sizes = zero_set_sizes(4000).unwrap();
        for b in zs.threshold..=4000 {
            assert!(sizes[b as usize - 1] <= b * b);
        }
        let a2 = a2_threshold(200).unwrap();
        assert!(a2.threshold <= 30, "{a2:?}");
    }
}
