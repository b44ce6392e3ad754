//! Elimination of `|Ψ_B| - 1` odd zeta values by integer generalized-Vandermonde weights,
//! the combined form `r̃_n = Σ_b w_b r̂_{n,b}`, and the irrationality-count certificate.

mod certificate;
mod combined;
mod weights;

pub use certificate::{certify, Certificate, Verdict};
pub use combined::{
    combined_form, integrality_of_combined, weighted_hats, CombinedForm, CombinedIntegrality,
    CombinedSummary,
};
pub use weights::{
    default_j, kernel_weights, odd_indices, vandermonde_weights, weight_sweep, SweepReport,
    WeightSummary, WeightVector,
};

#[cfg(test)]
mod tests;
