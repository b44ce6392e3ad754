use serde::Serialize;

use crate::aux_function::AuxFunction;
use crate::exact_arith::highprec::{HighPrecReal, Precision};
use crate::totient_sets::Fraction;

/// A truncated series with a bound on the neglected tail.
#[derive(Debug, Clone)]
pub struct SeriesValue {
    pub value: HighPrecReal,
    pub tail_bound: HighPrecReal,
    pub terms_used: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct SeriesSummary {
    pub value: String,
    pub tail_bound: String,
    pub terms_used: u64,
}

impl SeriesValue {
    pub fn summary(&self, digits: usize) -> SeriesSummary {
        SeriesSummary {
            value: self.value.to_scientific(digits),
            tail_bound: self.tail_bound.to_scientific(6),
            terms_used: self.terms_used,
        }
    }
}

/// `R_n(t)` in floating point, from the factored form (no cancellation).
pub fn evaluate_real(aux: &AuxFunction, t: &HighPrecReal) -> HighPrecReal {
    let prec = t.precision();
    let p = aux.params();
    let mut num = prec.rational(&aux.numerator_scalar());
    for f in aux.fpolys() {
        for (l, c) in &f.factors {
            num = num * (t * prec.big_int(l) + prec.big_int(c));
        }
    }
    let mut den = prec.one();
    for j in 0..=p.n {
        den = den * (t + prec.int(j as i64));
    }
    num / den.powi(p.s as i64 + 1)
}

/// `Σ_{m=1}^{M} R_n(m+θ)` plus a tail bound `C·M^{deg+1}/(-deg-1)`.
///
/// `C` is twice the largest `|R_n(x)|·x^{-deg}` over 33 samples of `[M, 2M]`, which bounds
/// the tail once `|R_n(x)|·x^{-deg}` is monotone beyond `M`. The bound is heuristic in that
/// monotonicity is assumed, not proven.
pub fn r_n_theta_direct(aux: &AuxFunction, theta: Fraction, m_max: u64, prec: Precision) -> SeriesValue {
    let deg = aux.degree();
    assert!(deg <= -2, "series diverges for deg R_n = {deg}");
    let th = prec.rational(&theta.to_rational());
    let mut sum = prec.zero();
    for m in 1..=m_max {
        sum = sum + evaluate_real(aux, &(prec.int(m as i64) + &th));
    }
    let mm = prec.int(m_max as i64);
    let mut c = prec.zero();
    for j in 0..=32i64 {
        let x = &mm + &mm * prec.int(j) / prec.int(32);
        let v = evaluate_real(aux, &(&x + &th)).abs() * x.powi(-deg);
        c = c.max(v);
    }
    let tail = prec.int(2) * c * mm.powi(deg + 1) / prec.int(-deg - 1);
    SeriesValue {
        value: sum,
        tail_bound: tail,
        terms_used: m_max,
    }
}
