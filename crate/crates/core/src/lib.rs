//! Exact Bernoulli and Euler numbers, closed-form zeta values, numeric
//! zeta oracles and p-adic integral checks.

pub mod arith;
pub mod cli;
pub mod error;
pub mod padic;
pub mod powerseries;
pub mod series_eval;
pub mod special_numbers;
pub mod zeta_values;

pub use error::{Error, Result};
