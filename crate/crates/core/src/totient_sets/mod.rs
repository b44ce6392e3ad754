//! The denominator set Ψ_B = {b : φ(b) <= B}, the zero set F_B of reduced fractions
//! with denominators in Ψ_B, the period P, and the arithmetic factors A₁, A₂.

mod factored;
mod probes;
mod sets;

pub use factored::{factor_a1, factor_a2, FactoredReal};
pub use probes::{
    a1_growth_ratio, a2_bound_ratio, a2_threshold, density_report, optimality_probe,
    zero_set_size, zero_set_sizes, zero_set_threshold, DensityRow, OptimalityVerdict,
    ThresholdReport,
};
pub use sets::{
    build_by_scan, build_denominator_set, build_zero_set, period, totient_sum, DenominatorSet,
    Fraction, PeriodP, ZeroSet,
};

pub(crate) fn ser_display<T: std::fmt::Display, S: serde::Serializer>(
    v: &T,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(v)
}
