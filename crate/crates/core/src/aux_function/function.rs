use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact_arith::rational::{factorial, int, rat_pow};
use crate::totient_sets::{DenominatorSet, ZeroSet};

use super::fpoly::FPoly;
use super::params::{AuxParams, Setting};

/// `R_n(t) = n!^{s+1} · Π_{a/b ∈ F_B} F̃_{b,a}(t) / Π_{j=0}^{n} (t+j)^{s+1}`, unexpanded.
#[derive(Debug, Clone)]
pub struct AuxFunction {
    setting: Setting,
    global: BigRational,
    fpolys: Vec<FPoly>,
}

impl AuxFunction {
    /// Builds `R_n`, rejecting tuples that fail the period or degree gate.
    pub fn new(params: AuxParams) -> Result<Self> {
        let setting = Setting::new(params)?;
        setting.enforce()?;
        Ok(Self::from_setting(setting))
    }

    pub(crate) fn from_setting(setting: Setting) -> Self {
        let p = &setting.params;
        let global = BigRational::from_integer(BigInt::from(factorial(p.n)).pow(p.s + 1));
        let fpolys = setting
            .zero_set
            .fractions()
            .iter()
            .map(|&f| FPoly::new(p, f))
            .collect();
        Self {
            setting,
            global,
            fpolys,
        }
    }

    pub fn params(&self) -> &AuxParams {
        &self.setting.params
    }

    pub fn setting(&self) -> &Setting {
        &self.setting
    }

    pub fn psi(&self) -> &DenominatorSet {
        &self.setting.psi
    }

    pub fn zero_set(&self) -> &ZeroSet {
        &self.setting.zero_set
    }

    pub fn fpolys(&self) -> &[FPoly] {
        &self.fpolys
    }

    /// `n!^{s+1}`.
    pub fn global_scalar(&self) -> &BigRational {
        &self.global
    }

    /// Product of the per-fraction scalars.
    pub fn numerator_scalar(&self) -> BigRational {
        self.fpolys
            .iter()
            .fold(self.global.clone(), |acc, f| acc * &f.scalar)
    }

    pub fn numerator_degree(&self) -> usize {
        self.fpolys.iter().map(FPoly::degree).sum()
    }

    pub fn degree(&self) -> i64 {
        let p = self.params();
        self.numerator_degree() as i64 - (p.s as i64 + 1) * (p.n as i64 + 1)
    }

    pub fn multiplicity(&self) -> u32 {
        self.params().s + 1
    }

    /// Exact `R_n(t)`; rejects the poles `0, -1, …, -n`.
    pub fn evaluate_at(&self, t: &BigRational) -> Result<BigRational> {
        let n = self.params().n;
        let mut den = BigRational::one();
        for j in 0..=n {
            let v = t + int(j as i64);
            if v.is_zero() {
                return Err(Error::invalid(format!("t = -{j} is a pole of R_n")));
            }
            den *= v;
        }
        let num = self
            .fpolys
            .iter()
            .fold(self.global.clone(), |acc, f| acc * f.eval(t));
        Ok(num / rat_pow(&den, self.multiplicity() as i64))
    }
}
