//! p-adic integers mod p^N, Riemann sums for the fermionic and Volkenborn
//! integrals, and q-analogues of the Bernoulli numbers.

pub mod int;
pub mod integrals;
pub mod number;
pub mod qanalog;

pub use int::{check_odd_prime, padic_of_rational, PadicInt, PadicValuation};
pub use integrals::{
    fermionic_moments, fermionic_shift_check, fermionic_sum, half_cot_from_moments, iterated_shift_check,
    mu_minus_q_distribution_check, tan_half_from_moments, volkenborn_sum, ShiftCheck, VolkenbornSum,
};
pub use number::PadicNumber;
pub use qanalog::{
    carlitz_q_bernoulli, padic_log, q_bosonic_sum, q_int, q_zeta_residual, QBernoulli, QRational, QValue,
    QZetaDiagnostic,
};
