use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::asymptotics::{solve_saddle, SaddleProblem};
use crate::error::{Error, Result};
use crate::exact_arith::highprec::Precision;
use crate::exact_arith::rational::{format_rational, int};
use crate::totient_sets::{build_denominator_set, period};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Holds,
    Fails,
    NotApplicable,
}

/// The outcome of testing `g(x₀) < e^{-(s+1)}` at `(r, s, B)`.
#[derive(Debug, Clone, Serialize)]
pub struct Certificate {
    pub r: String,
    pub s: u64,
    #[serde(rename = "B")]
    pub bound: String,
    pub psi_size: usize,
    pub zero_set_size: usize,
    pub log_g_x0: Option<String>,
    pub threshold: i64,
    pub verdict: Verdict,
    /// `|Ψ_B|` capped at `|I_s| = (s-1)/2`, only when the criterion holds.
    pub count: Option<usize>,
    /// `s >= 10(2r+1)B²`.
    pub analysis_gate: bool,
    /// `P`, the least `n` for which `A₁^n`, `A₂^n` are integers as required.
    pub period: String,
    pub a_powers_integral: bool,
    pub note: Option<String>,
}

/// Runs the saddle analysis with exact `A₁`, `A₂` and reports the criterion.
pub fn certify(r: &BigRational, s: u64, bound: &BigRational, prec: Precision) -> Result<Certificate> {
    let psi = build_denominator_set(bound)?;
    if s < 3 || s.is_multiple_of(2) {
        return Err(Error::invalid(format!("s = {s} must be odd and >= 3")));
    }
    let den_r = r.denom().to_u64().ok_or_else(|| Error::invalid("den(r) too large"))?;
    let p = period(&psi, den_r);
    let analysis_gate =
        int(s as i64) >= int(10) * (r * int(2) + int(1)) * bound * bound;
    let mut cert = Certificate {
        r: format_rational(r),
        s,
        bound: format_rational(bound),
        psi_size: psi.len(),
        zero_set_size: 0,
        log_g_x0: None,
        threshold: -(s as i64 + 1),
        verdict: Verdict::NotApplicable,
        count: None,
        analysis_gate,
        period: p.value.to_string(),
        a_powers_integral: false,
        note: None,
    };
    let sp = match SaddleProblem::new(r.clone(), s, &psi) {
        Ok(sp) => sp,
        Err(e @ Error::Gate { .. }) => {
            cert.note = Some(e.to_string());
            return Ok(cert);
        }
        Err(e) => return Err(e),
    };
    cert.zero_set_size = sp.zero_set_size as usize;
    cert.a_powers_integral = p
        .to_u64()
        .is_some_and(|n| sp.a1.power(n).is_some() && sp.a2.power(n).is_some());
    let sol = solve_saddle(&sp, prec)?;
    cert.log_g_x0 = Some(sol.log_g_x0.to_scientific(prec.digits().min(30)));
    if sol.criterion {
        cert.verdict = Verdict::Holds;
        cert.count = Some(psi.len().min((s as usize - 1) / 2));
    } else {
        cert.verdict = Verdict::Fails;
    }
    Ok(cert)
}
