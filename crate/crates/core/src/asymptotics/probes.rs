use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::aux_function::AuxParams;
use crate::error::{Error, Result};
use crate::exact_arith::highprec::{HighPrecReal, Precision};
use crate::exact_arith::rational::int;
use crate::linear_forms::{linear_form_for, verify_identity, zeta_ratio};
use crate::par;
use crate::totient_sets::{build_denominator_set, Fraction};

use super::saddle::{solve_saddle, SaddleProblem};

#[derive(Debug, Clone, Serialize)]
pub struct ScaledRow {
    pub s: u64,
    pub bound: f64,
    pub psi_size: usize,
    pub zero_set_size: u64,
    /// `g(x₀)^{1/(s+1)}`.
    pub root: f64,
    pub target: f64,
    pub relative_error: f64,
}

/// `exp(κ(2r+1)c²/4)·r^r/(r+1)^{r+1}`.
pub fn scaled_limit_target(r: &BigRational, c: &BigRational, prec: Precision) -> HighPrecReal {
    let rr = prec.rational(r);
    let cc = prec.rational(c);
    let w = prec.int(2) * &rr + prec.one();
    let r1 = &rr + prec.one();
    (zeta_ratio(prec) * w * &cc * &cc / prec.int(4)).exp() * rr.powf(&rr) / r1.powf(&r1)
}

/// `g(x₀)^{1/(s+1)}` at `B = c s^{1/2}/log^{1/2} s`, against the limit as `s → ∞`.
pub fn scaled_limit_probe(
    r: &BigRational,
    c: &BigRational,
    s_list: &[u64],
    prec: Precision,
) -> Result<Vec<ScaledRow>> {
    let target = scaled_limit_target(r, c, prec).to_f64();
    par::map(s_list.to_vec(), |s| {
        let ss = prec.int(s as i64);
        let bound = prec.rational(c) * (&ss / ss.ln()).sqrt();
        let floor = bound.to_f64().floor() as i64;
        if floor < 1 {
            return Err(Error::invalid(format!("B < 1 at s = {s}")));
        }
        let psi = build_denominator_set(&int(floor))?;
        let sp = SaddleProblem::new(r.clone(), s, &psi)?;
        let sol = solve_saddle(&sp, prec)?;
        let root = (sol.log_g_x0 / prec.int(s as i64 + 1)).exp().to_f64();
        Ok(ScaledRow {
            s,
            bound: bound.to_f64(),
            psi_size: psi.len(),
            zero_set_size: sp.zero_set_size,
            root,
            target,
            relative_error: (root - target).abs() / target,
        })
    })
    .into_iter()
    .collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct ConvergenceRow {
    pub n: u64,
    pub r_n1: String,
    pub log_r_over_n: f64,
    pub gap: f64,
    /// `r_{n,1}/r_{n,θ}` for each `θ ≠ 1`.
    pub ratios: BTreeMap<String, f64>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ConvergenceReport {
    pub log_g_x0: f64,
    /// The identity check at the smallest `n`, one entry per `θ`.
    pub identity_pass: bool,
    pub rows: Vec<ConvergenceRow>,
}

/// `|log r_{n,1}/n - log g(x₀)|` and `r_{n,1}/r_{n,θ}` along `n_list`, with `r_{n,θ}`
/// from the exact form. The identity is checked against the direct series at the first
/// `n` with `identity_terms` terms.
pub fn convergence_probe(
    r: &BigRational,
    s: u32,
    bound: &BigRational,
    n_list: &[u64],
    identity_terms: u64,
    prec: Precision,
) -> Result<ConvergenceReport> {
    let psi = build_denominator_set(bound)?;
    let sp = SaddleProblem::new(r.clone(), s as u64, &psi)?;
    let log_g = solve_saddle(&sp, prec)?.log_g_x0.to_f64();
    let mut identity_pass = true;
    let mut rows = Vec::new();
    for (idx, &n) in n_list.iter().enumerate() {
        let (aux, _, lf) = linear_form_for(AuxParams::new(r.clone(), s, bound.clone(), n)?)?;
        let thetas: Vec<Fraction> = aux.zero_set().fractions().to_vec();
        if idx == 0 {
            for &theta in &thetas {
                identity_pass &= verify_identity(&lf, &aux, theta, identity_terms, prec)?.pass;
            }
        }
        let values: Vec<HighPrecReal> = par::map(thetas.clone(), |t| lf.evaluate(t, prec))
            .into_iter()
            .collect::<Result<_>>()?;
        let r1 = values.last().expect("1 ∈ F_B").clone();
        if !r1.is_positive() {
            return Err(Error::assertion(format!("r_(n,1) = {r1} is not positive at n = {n}")));
        }
        let log_r_over_n = r1.ln().to_f64() / n as f64;
        let ratios = thetas
            .iter()
            .zip(&values)
            .filter(|(t, _)| !t.is_one())
            .map(|(t, v)| (t.to_string(), (&r1 / v).to_f64()))
            .collect();
        rows.push(ConvergenceRow {
            n,
            r_n1: r1.to_scientific(20),
            log_r_over_n,
            gap: (log_r_over_n - log_g).abs(),
            ratios,
        });
    }
    Ok(ConvergenceReport {
        log_g_x0: log_g,
        identity_pass,
        rows,
    })
}

/// `n = P, 2P, 4P, …` (`count` values) for the tuple.
pub fn doubling_schedule(r: &BigRational, bound: &BigRational, count: u32) -> Result<Vec<u64>> {
    let psi = build_denominator_set(bound)?;
    let p = crate::totient_sets::period(&psi, r.denom().to_u64().unwrap())
        .to_u64()
        .ok_or_else(|| Error::invalid("period too large"))?;
    Ok((0..count).map(|k| p << k).collect())
}
