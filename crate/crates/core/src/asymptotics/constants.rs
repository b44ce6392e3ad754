use num_rational::BigRational;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact_arith::bernoulli::bernoulli;
use crate::exact_arith::highprec::{HighPrecReal, Precision, GUARD_DIGITS};
use crate::exact_arith::rational::int;
use crate::linear_forms::zeta_ratio;

#[derive(Debug, Clone)]
pub struct Constants {
    /// Maximizer of `φ(r) = ((r+1)log(r+1) - r log r - 1)/(2r+1)`, `(√(4e²+1)-1)/2`.
    pub r0: HighPrecReal,
    /// `φ(r₀) = 1 - log r₀`.
    pub max_value: HighPrecReal,
    /// `√(4κ(1 - log r₀))`.
    pub c0: HighPrecReal,
    /// `κ = ζ(2)ζ(3)/ζ(6)`.
    pub zeta_ratio: HighPrecReal,
    pub euler_gamma: HighPrecReal,
}

#[derive(Debug, Clone, Serialize)]
pub struct ConstantsSummary {
    pub r0: String,
    pub max_value: String,
    pub c0: String,
    pub zeta_ratio: String,
    pub euler_gamma: String,
}

impl Constants {
    pub fn summary(&self, digits: usize) -> ConstantsSummary {
        let f = |x: &HighPrecReal| x.to_scientific(digits);
        ConstantsSummary {
            r0: f(&self.r0),
            max_value: f(&self.max_value),
            c0: f(&self.c0),
            zeta_ratio: f(&self.zeta_ratio),
            euler_gamma: f(&self.euler_gamma),
        }
    }
}

/// `φ(r) = ((r+1)log(r+1) - r log r - 1)/(2r+1)`.
pub fn objective(r: &HighPrecReal) -> HighPrecReal {
    let p = r.precision();
    let r1 = r + p.one();
    (&r1 * r1.ln() - r * r.ln() - p.one()) / (p.int(2) * r + p.one())
}

/// Numerator of `φ'(r)`, `2 - log(r(r+1))`; decreasing in `r`.
fn objective_slope(r: &HighPrecReal) -> HighPrecReal {
    let p = r.precision();
    p.int(2) - (r * (r + p.one())).ln()
}

/// Maximizes `φ` by bisection of `φ'` on `[1, 4]` to full working precision.
pub fn optimize_r(prec: Precision) -> Constants {
    let (mut lo, mut hi) = (prec.int(1), prec.int(4));
    let steps = ((prec.digits() + GUARD_DIGITS) as f64 * std::f64::consts::LOG2_10) as usize + 4;
    for _ in 0..steps {
        let mid = (&lo + &hi) / prec.int(2);
        if objective_slope(&mid).is_positive() {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let r0 = (lo + hi) / prec.int(2);
    let zeta_ratio = zeta_ratio(prec);
    let max_value = prec.one() - r0.ln();
    let c0 = (prec.int(4) * &zeta_ratio * &max_value).sqrt();
    Constants {
        r0,
        max_value,
        c0,
        zeta_ratio,
        euler_gamma: euler_gamma(prec),
    }
}

/// Euler's constant from `H_N - log N - 1/(2N) + Σ B_{2k}/(2k N^{2k})`, `N` doubling until
/// the correction terms fall below the working precision.
pub fn euler_gamma(prec: Precision) -> HighPrecReal {
    let working = (prec.digits() + GUARD_DIGITS) as f64;
    let mut n: i64 = 64;
    'outer: loop {
        let nn = prec.int(n);
        let harmonic = (1..=n).fold(prec.zero(), |acc, k| acc + prec.int(k).powi(-1));
        let mut sum = harmonic - nn.ln() - (prec.int(2) * &nn).powi(-1);
        let inv2 = (&nn * &nn).powi(-1);
        let mut pow = inv2.clone();
        let mut previous = f64::INFINITY;
        for k in 1..=400usize {
            let c = bernoulli(2 * k) / int(2 * k as i64);
            let term = prec.rational(&c) * &pow;
            let size = term.log10_abs();
            if size < -working {
                return sum;
            }
            if size > previous {
                n *= 2;
                continue 'outer;
            }
            previous = size;
            sum = sum + term;
            pow = pow * &inv2;
        }
        n *= 2;
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CountBound {
    pub s: u64,
    pub epsilon: f64,
    /// `(c₀ - ε/10)/κ`.
    pub c: f64,
    /// `c·s^{1/2}/log^{1/2} s`.
    pub bound: f64,
    /// `(c₀ - ε)·s^{1/2}/log^{1/2} s`.
    pub predicted_count: f64,
}

/// The choice `B = c s^{1/2}/log^{1/2} s` with `c = (c₀ - ε/10)/κ` and the count it targets.
pub fn count_bound(s: u64, epsilon: &BigRational, constants: &Constants) -> Result<CountBound> {
    let prec = constants.c0.precision();
    let eps = prec.rational(epsilon);
    if !eps.is_positive() || eps >= constants.c0 {
        return Err(Error::invalid("need 0 < ε < c₀"));
    }
    if s < 3 || s.is_multiple_of(2) {
        return Err(Error::invalid(format!("s = {s} must be odd and >= 3")));
    }
    let c = (&constants.c0 - &eps / prec.int(10)) / &constants.zeta_ratio;
    let ss = prec.int(s as i64);
    let scale = (&ss / ss.ln()).sqrt();
    Ok(CountBound {
        s,
        epsilon: eps.to_f64(),
        c: c.to_f64(),
        bound: (c * &scale).to_f64(),
        predicted_count: ((&constants.c0 - eps) * scale).to_f64(),
    })
}
