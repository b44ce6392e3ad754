use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact_arith::highprec::{HighPrecReal, Precision};
use crate::exact_arith::rational::{format_rational, int};
use crate::totient_sets::{
    build_zero_set, factor_a1, factor_a2, DenominatorSet, FactoredReal,
};

/// `f(X) = ((X+2r+1)/X)^{|F|} ((X+r)/(X+r+1))^{s+1}` and
/// `g(X) = A₁A₂ den(r)^{(2r+1)|F|} (X+2r+1)^{(2r+1)|F|} ((X+r)^r/(X+r+1)^{r+1})^{s+1}`.
#[derive(Debug, Clone)]
pub struct SaddleProblem {
    pub r: BigRational,
    pub s: u64,
    pub zero_set_size: u64,
    pub a1: FactoredReal,
    pub a2: FactoredReal,
    pub den_r: u64,
}

impl SaddleProblem {
    /// Requires `s` odd and `s + 1 > (2r+1)|F_B|`.
    pub fn new(r: BigRational, s: u64, psi: &DenominatorSet) -> Result<Self> {
        if !r.is_positive() {
            return Err(Error::invalid("r must be positive"));
        }
        if s.is_multiple_of(2) {
            return Err(Error::invalid(format!("s = {s} must be odd")));
        }
        let zero_set_size = build_zero_set(psi).len() as u64;
        let sp = Self {
            a1: factor_a1(psi, &r),
            a2: factor_a2(psi, &r),
            den_r: r.denom().to_u64().expect("den(r) fits in u64"),
            r,
            s,
            zero_set_size,
        };
        if !sp.excess().is_positive() {
            return Err(Error::gate(
                "saddle",
                format!(
                    "s + 1 = {} must exceed (2r+1)|F_B| = {}",
                    s + 1,
                    format_rational(&(sp.width() * int(zero_set_size as i64)))
                ),
            ));
        }
        Ok(sp)
    }

    pub fn width(&self) -> BigRational {
        &self.r * int(2) + int(1)
    }

    /// `s + 1 - (2r+1)|F_B|`.
    pub fn excess(&self) -> BigRational {
        int(self.s as i64 + 1) - self.width() * int(self.zero_set_size as i64)
    }

    /// `r(r+1)|F_B| / (s+1-(2r+1)|F_B|)`, an upper bound for `x₀`.
    pub fn x0_bound(&self) -> BigRational {
        &self.r * (&self.r + int(1)) * int(self.zero_set_size as i64) / self.excess()
    }

    pub fn log_f(&self, x: &HighPrecReal) -> HighPrecReal {
        let p = x.precision();
        let r = p.rational(&self.r);
        let w = p.rational(&self.width());
        let fsz = p.int(self.zero_set_size as i64);
        let s1 = p.int(self.s as i64 + 1);
        fsz * ((x + &w).ln() - x.ln()) + s1 * ((x + &r).ln() - (x + &r + p.one()).ln())
    }

    /// `d/dx log f`.
    pub fn log_f_derivative(&self, x: &HighPrecReal) -> HighPrecReal {
        let p = x.precision();
        let r = p.rational(&self.r);
        let w = p.rational(&self.width());
        let fsz = p.int(self.zero_set_size as i64);
        let s1 = p.int(self.s as i64 + 1);
        fsz * ((x + &w).powi(-1) - x.powi(-1))
            + s1 * ((x + &r).powi(-1) - (x + &r + p.one()).powi(-1))
    }

    pub fn f(&self, x: &HighPrecReal) -> HighPrecReal {
        self.log_f(x).exp()
    }

    /// `log A₁ + log A₂ + (2r+1)|F| log den(r)`, the `X`-independent part of `log g`.
    pub fn log_arithmetic(&self, prec: Precision) -> HighPrecReal {
        let wf = prec.rational(&(self.width() * int(self.zero_set_size as i64)));
        self.a1.ln(prec) + self.a2.ln(prec) + wf * prec.int(self.den_r as i64).ln()
    }

    fn log_g_with(&self, x: &HighPrecReal, arithmetic: &HighPrecReal) -> HighPrecReal {
        let p = x.precision();
        let r = p.rational(&self.r);
        let w = p.rational(&self.width());
        let wf = &w * p.int(self.zero_set_size as i64);
        let s1 = p.int(self.s as i64 + 1);
        arithmetic
            + wf * (x + &w).ln()
            + s1 * (&r * (x + &r).ln() - (&r + p.one()) * (x + &r + p.one()).ln())
    }

    pub fn log_g(&self, x: &HighPrecReal) -> HighPrecReal {
        self.log_g_with(x, &self.log_arithmetic(x.precision()))
    }

    /// `log h = x log f + log g`; `h'/h = log f`.
    pub fn log_h(&self, x: &HighPrecReal) -> HighPrecReal {
        x * self.log_f(x) + self.log_g(x)
    }

    /// The positive root of `a x² + (2r+1) a x - r(r+1)(2r+1)|F| = 0`, `a = s+1-(2r+1)|F|`.
    pub fn x1(&self, prec: Precision) -> HighPrecReal {
        let a = prec.rational(&self.excess());
        let w = prec.rational(&self.width());
        let c = prec.rational(&(&self.r * (&self.r + int(1)) * self.width()))
            * prec.int(self.zero_set_size as i64);
        let b = &w * &a;
        // 2C / (B + sqrt(B² + 4aC)) avoids the cancellation of the textbook formula
        let disc = (&b * &b + prec.int(4) * &a * &c).sqrt();
        prec.int(2) * c / (b + disc)
    }

    /// Left side of the quadratic for `x₁`, divided by its constant term.
    pub fn x1_residual(&self, x: &HighPrecReal) -> HighPrecReal {
        let p = x.precision();
        let a = p.rational(&self.excess());
        let w = p.rational(&self.width());
        let c = p.rational(&(&self.r * (&self.r + int(1)) * self.width()))
            * p.int(self.zero_set_size as i64);
        ((&a * x * x + &w * &a * x - &c) / c).abs()
    }
}

#[derive(Debug, Clone)]
pub struct SaddleSolution {
    pub x0: HighPrecReal,
    pub x1: HighPrecReal,
    pub log_g_x0: HighPrecReal,
    /// `|log f(x₀)|`.
    pub log_f_residual: HighPrecReal,
    pub threshold: i64,
    /// `log g(x₀) < -(s+1)`.
    pub criterion: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct SaddleSummary {
    pub x0: String,
    pub x1: String,
    pub log_g_x0: String,
    pub log_f_residual: String,
    pub threshold: i64,
    pub criterion: bool,
}

impl SaddleSolution {
    pub fn summary(&self, digits: usize) -> SaddleSummary {
        SaddleSummary {
            x0: self.x0.to_scientific(digits),
            x1: self.x1.to_scientific(digits),
            log_g_x0: self.log_g_x0.to_scientific(digits),
            log_f_residual: self.log_f_residual.to_scientific(6),
            threshold: self.threshold,
            criterion: self.criterion,
        }
    }
}

/// `x₀` solves `f(x₀) = 1` on `(0, x₁)`, where `f` decreases from `+∞`.
///
/// Bisection runs on `log f`: geometric while the bracket spans more than a factor 2
/// (the lower end starts at `10^-30` and is pushed down until `log f > 0`), arithmetic
/// down to relative width `10^-20`, then Newton steps finish.
pub fn solve_saddle(sp: &SaddleProblem, prec: Precision) -> Result<SaddleSolution> {
    let x1 = sp.x1(prec);
    let mut hi = x1.clone();
    if sp.log_f(&hi).is_positive() {
        return Err(Error::assertion("log f(x₁) >= 0: no root below x₁"));
    }
    let tiny = prec.int(10).powi(-30);
    let mut lo = tiny.clone();
    let mut pushes = 0;
    while !sp.log_f(&lo).is_positive() {
        lo = lo * &tiny;
        pushes += 1;
        if pushes > 1000 {
            return Err(Error::assertion("bisection bracket: log f stays negative near 0"));
        }
    }
    let two = prec.int(2);
    while (&hi / &lo).to_f64() > 2.0 {
        let mid = (&lo * &hi).sqrt();
        if sp.log_f(&mid).is_positive() {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let rel = prec.int(10).powi(-20);
    while (&hi - &lo) > &rel * &hi {
        let mid = (&lo + &hi) / &two;
        if sp.log_f(&mid).is_positive() {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let mut x = (&lo + &hi) / &two;
    let stop = prec.int(10).powi(-(prec.digits() as i64) + 5);
    for _ in 0..60 {
        let step = sp.log_f(&x) / sp.log_f_derivative(&x);
        x = &x - &step;
        if step.abs() <= &stop * &x {
            break;
        }
    }
    let log_f_residual = sp.log_f(&x).abs();
    let log_g_x0 = sp.log_g(&x);
    let threshold = -(sp.s as i64 + 1);
    Ok(SaddleSolution {
        criterion: log_g_x0 < prec.int(threshold),
        x0: x,
        x1,
        log_g_x0,
        log_f_residual,
        threshold,
    })
}

/// `log g(x₀) < -(s+1)`.
pub fn criterion(sp: &SaddleProblem, prec: Precision) -> Result<bool> {
    Ok(solve_saddle(sp, prec)?.criterion)
}

/// `f'(x)` by the five-point central stencil with step `h`.
pub fn f_prime_stencil(sp: &SaddleProblem, x: &HighPrecReal, h: &HighPrecReal) -> HighPrecReal {
    let p = x.precision();
    let f = |k: i64| sp.f(&(x + h * p.int(k)));
    (f(-2) - p.int(8) * f(-1) + p.int(8) * f(1) - f(2)) / (p.int(12) * h)
}
