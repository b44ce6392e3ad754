use serde::Serialize;

use crate::aux_function::AuxFunction;
use crate::error::Result;
use crate::exact_arith::highprec::{HighPrecReal, Precision};
use crate::totient_sets::Fraction;

use super::direct::{r_n_theta_direct, SeriesSummary, SeriesValue};
use super::form::LinearForm;

/// Direct series against the exact form at one `θ`.
#[derive(Debug, Clone)]
pub struct IdentityCheck {
    pub theta: Fraction,
    pub direct: SeriesValue,
    pub form: HighPrecReal,
    pub residual: HighPrecReal,
    /// `tail_bound + 10^{5-D}`.
    pub threshold: HighPrecReal,
    pub pass: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct IdentitySummary {
    pub theta: String,
    pub direct: SeriesSummary,
    pub form: String,
    pub residual: String,
    pub threshold: String,
    pub pass: bool,
}

impl IdentityCheck {
    pub fn summary(&self, digits: usize) -> IdentitySummary {
        IdentitySummary {
            theta: self.theta.to_string(),
            direct: self.direct.summary(digits),
            form: self.form.to_scientific(digits),
            residual: self.residual.to_scientific(6),
            threshold: self.threshold.to_scientific(6),
            pass: self.pass,
        }
    }
}

/// `|Σ_{m=1}^{M} R_n(m+θ) - (ρ_{0,θ} + Σ ρ_i ζ(i,θ))| <= tail + 10^{5-D}`.
pub fn verify_identity(
    lf: &LinearForm,
    aux: &AuxFunction,
    theta: Fraction,
    m_max: u64,
    prec: Precision,
) -> Result<IdentityCheck> {
    let direct = r_n_theta_direct(aux, theta, m_max, prec);
    let form = lf.evaluate(theta, prec)?;
    let residual = (&direct.value - &form).abs();
    let noise = prec.int(10).powi(5 - prec.digits() as i64);
    let threshold = &direct.tail_bound + noise;
    Ok(IdentityCheck {
        theta,
        pass: residual <= threshold,
        direct,
        form,
        residual,
        threshold,
    })
}
