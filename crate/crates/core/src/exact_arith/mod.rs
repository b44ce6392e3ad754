//! Exact and high-precision arithmetic shared by every other module.

pub mod bernoulli;
pub mod highprec;
pub mod lcm;
pub mod poly;
pub mod primes;
pub mod rational;
pub mod series;
pub mod valuation;

pub use bernoulli::bernoulli;
pub use highprec::{HighPrecReal, Precision};
pub use lcm::{d_lcm, d_lcm_factorization, ln_d_lcm};
pub use poly::RatPolynomial;
pub use primes::{euler_phi, factorize};
pub use series::RatPowerSeries;
pub use valuation::{ap_valuation_bound, vq, ValuationBound};
