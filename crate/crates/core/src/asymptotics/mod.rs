//! Saddle-point analysis of `r_{n,1}^{1/n} → g(x₀)`, the constants `r₀` and `c₀`, the
//! criterion `g(x₀) < e^{-(s+1)}` and the count bound it yields.

mod constants;
mod probes;
mod saddle;

pub use constants::{count_bound, euler_gamma, objective, optimize_r, Constants, ConstantsSummary, CountBound};
pub use probes::{
    convergence_probe, doubling_schedule, scaled_limit_probe, scaled_limit_target,
    ConvergenceReport, ConvergenceRow, ScaledRow,
};
pub use saddle::{
    criterion, f_prime_stencil, solve_saddle, SaddleProblem, SaddleSolution, SaddleSummary,
};

#[cfg(test)]
mod tests;
