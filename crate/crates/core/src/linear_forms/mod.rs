//! Linear forms `r_{n,θ} = Σ_{m>=1} R_n(m+θ) = ρ_{0,θ} + Σ_{odd i} ρ_i ζ(i,θ)`: exact
//! coefficients, Hurwitz zeta values, the series identity and the integrality of
//! `d_n^{s+1-i} ρ_i` and `d_{n+1}^{s+1} ρ_{0,θ}`.

mod direct;
mod form;
mod hurwitz;
mod identity;

pub use direct::{evaluate_real, r_n_theta_direct, SeriesSummary, SeriesValue};
pub use form::{
    build_linear_form, r_hat, rho0_coset_sum, verify_integrality, IntegralityEntry,
    IntegralityReport, LinearForm,
};
pub use hurwitz::{hurwitz_zeta, zeta_ratio};
pub use identity::{verify_identity, IdentityCheck, IdentitySummary};

use crate::aux_function::{AuxFunction, AuxParams, PartialFraction};
use crate::Result;

/// Builds `R_n`, its partial fractions and its linear form in one go.
pub fn linear_form_for(params: AuxParams) -> Result<(AuxFunction, PartialFraction, LinearForm)> {
    let aux = AuxFunction::new(params)?;
    let pf = PartialFraction::of_aux(&aux)?;
    let lf = build_linear_form(&pf, aux.zero_set())?;
    Ok((aux, pf, lf))
}

#[cfg(test)]
mod tests;
