//! Exact rational and arbitrary-precision real arithmetic.

pub mod bigfloat;
pub mod elementary;
pub mod rational;

pub use bigfloat::BigFloat;
pub use elementary::{exp, ln2, log, pi, pow_real, powi, residual, two_pow};
pub use rational::{binomial, factorial, parse_rational, rat, valuation, Rational};
