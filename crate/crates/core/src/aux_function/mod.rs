//! The auxiliary rational function
//! `R_n(t) = n!^{s+1} Π_{a/b ∈ F_B} F̃_{b,a}(t) / Π_{j=0}^{n} (t+j)^{s+1}`
//! and its exact partial-fraction coefficients `a_{i,k}`.

mod checks;
mod fpoly;
mod function;
mod params;
mod partial;

pub use checks::{arif_report, random_test_point, symmetry_check, ArifReport, SymmetryReport};
pub use fpoly::{arif_check, arif_grid, FPoly};
pub use function::AuxFunction;
pub use params::{aux_degree, AuxParams, GateReport, GateSummary, Setting};
pub use partial::{PartialFraction, PartialFractionRow};

/// `partial_fractions(aux)`: the `a_{i,k}` table of `R_n`.
pub fn partial_fractions(aux: &AuxFunction) -> crate::Result<PartialFraction> {
    PartialFraction::of_aux(aux)
}
