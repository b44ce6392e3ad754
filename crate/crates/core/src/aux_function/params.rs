use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact_arith::rational::{format_rational, int};
use crate::totient_sets::{
    build_denominator_set, build_zero_set, period, DenominatorSet, PeriodP, ZeroSet,
};

/// The tuple `(r, s, B, n)`, validated for shape but not yet against the gates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AuxParams {
    pub r: BigRational,
    pub s: u32,
    pub bound: BigRational,
    pub n: u64,
}

impl AuxParams {
    pub fn new(r: BigRational, s: u32, bound: BigRational, n: u64) -> Result<Self> {
        if !r.is_positive() {
            return Err(Error::invalid(format!("r = {} must be positive", format_rational(&r))));
        }
        if s.is_multiple_of(2) {
            return Err(Error::invalid(format!("s = {s} must be odd")));
        }
        if bound < int(1) {
            return Err(Error::invalid("B must be at least 1"));
        }
        if n == 0 {
            return Err(Error::invalid("n must be positive"));
        }
        Ok(Self { r, s, bound, n })
    }

    pub fn den_r(&self) -> u64 {
        self.r.denom().to_u64().expect("den(r) fits in u64")
    }

    /// `2r + 1`.
    pub fn width(&self) -> BigRational {
        &self.r * int(2) + int(1)
    }

    /// `s >= 10(2r+1)B²`, the regime the asymptotic analysis assumes.
    pub fn analysis_gate(&self) -> bool {
        int(self.s as i64) >= int(10) * self.width() * &self.bound * &self.bound
    }
}

/// `1 + (2r+1)|F_B|n - (s+1)(n+1)`; `None` when `(2r+1)n` is not an integer.
pub fn aux_degree(params: &AuxParams, zero_set_size: usize) -> Option<i64> {
    let len = params.width() * int(params.n as i64);
    if !len.is_integer() {
        return None;
    }
    let len = len.to_integer().to_i64()?;
    Some(1 + len * zero_set_size as i64 - (params.s as i64 + 1) * (params.n as i64 + 1))
}

/// Everything about a parameter tuple that does not depend on the expansion.
#[derive(Debug, Clone)]
pub struct GateReport {
    pub period: PeriodP,
    pub degree: Option<i64>,
    pub period_ok: bool,
    pub degree_ok: bool,
    pub analysis_ok: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct GateSummary {
    pub period: String,
    pub degree: Option<i64>,
    pub period_ok: bool,
    pub degree_ok: bool,
    pub analysis_ok: bool,
}

impl GateReport {
    pub fn summary(&self) -> GateSummary {
        GateSummary {
            period: self.period.value.to_string(),
            degree: self.degree,
            period_ok: self.period_ok,
            degree_ok: self.degree_ok,
            analysis_ok: self.analysis_ok,
        }
    }
}

/// The sets behind a parameter tuple together with its gate verdicts.
#[derive(Debug, Clone)]
pub struct Setting {
    pub params: AuxParams,
    pub psi: DenominatorSet,
    pub zero_set: ZeroSet,
    pub gates: GateReport,
}

impl Setting {
    pub fn new(params: AuxParams) -> Result<Self> {
        let psi = build_denominator_set(&params.bound)?;
        let zero_set = build_zero_set(&psi);
        let period = period(&psi, params.den_r());
        let period_ok = (BigInt::from(params.n) % BigInt::from(period.value.clone()))
            == BigInt::from(0);
        let degree = aux_degree(&params, zero_set.len());
        let gates = GateReport {
            period_ok,
            degree_ok: period_ok && degree.is_some_and(|d| d <= -2),
            analysis_ok: params.analysis_gate(),
            degree,
            period,
        };
        Ok(Self {
            params,
            psi,
            zero_set,
            gates,
        })
    }

    /// Fails with the first violated algebraic gate.
    pub fn enforce(&self) -> Result<()> {
        if !self.gates.period_ok {
            return Err(Error::gate(
                "period",
                format!(
                    "n = {} is not a multiple of P = {}",
                    self.params.n, self.gates.period.value
                ),
            ));
        }
        match self.gates.degree {
            Some(d) if d <= -2 => Ok(()),
            Some(d) => Err(Error::gate("degree", format!("deg R_n = {d} > -2"))),
            None => Err(Error::gate("degree", "(2r+1)n is not an integer")),
        }
    }
}
