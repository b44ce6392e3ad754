//! Linear forms in odd zeta values built from auxiliary rational functions whose
//! rational zeros are indexed by an inverse-totient set.
//!
//! The pipeline runs bottom-up: [`totient_sets`] builds the denominator and zero sets,
//! [`aux_function`] the auxiliary rational function and its exact partial fractions,
//! [`linear_forms`] the resulting forms in Hurwitz zeta values, [`asymptotics`] the
//! saddle-point analysis and constants, and [`elimination`] the weighted combination and
//! the irrationality-count certificate.

pub mod elimination;
pub mod error;
pub mod exact_arith;
pub mod acceptance;
pub mod asymptotics;
pub mod aux_function;
pub mod linear_forms;
pub mod totient_sets;

mod par;

pub use error::{Error, Result};
