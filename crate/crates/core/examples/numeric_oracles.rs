//! Arbitrary-precision evaluation: Euler-Maclaurin for zeta and Hurwitz
//! zeta, accelerated alternating sums for eta, the Euler zeta function and
//! Dirichlet beta.

use eulerzeta::arith::{pi, residual, BigFloat};
use eulerzeta::series_eval::{dirichlet_beta_eval, eta_accel, euler_zeta_eval, hurwitz_em, zeta_em};
use eulerzeta::zeta_values::{corollary2_residual, euler_zeta_even};

fn main() {
    let bits = 256;
    let digits = BigFloat::decimal_digits_for(bits);
    let s = |n: u32| BigFloat::from_int(n, bits + 32);

    println!("pi       = {}", pi(bits).to_decimal(digits));
    println!("zeta(3)  = {}", zeta_em(&s(3), bits).unwrap().to_decimal(digits));
    println!("Catalan  = {}", dirichlet_beta_eval(&s(2), bits).unwrap().to_decimal(digits));
    let half = BigFloat::one(bits + 32).mul_pow2(-1);
    println!("eta(1/2) = {}", eta_accel(&half, bits).unwrap().to_decimal(digits));
    let quarter = BigFloat::one(bits + 32).mul_pow2(-2);
    println!("zeta(3, 1/4) = {}", hurwitz_em(&s(3), &quarter, bits).unwrap().to_decimal(digits));

    let value = euler_zeta_eval(&s(6), bits).unwrap();
    let exact = euler_zeta_even(3).unwrap();
    println!("\nzeta_E(6) = {} = {exact}", value.to_decimal(20));
    println!("relative residual {}", residual(&value, &exact.to_bigfloat(bits), bits).to_decimal(3));

    for n in 1..=3 {
        println!("zeta(2n+1, 1/4) relation, n = {n}: residual {}", corollary2_residual(n, bits).unwrap().to_decimal(3));
    }

    // the series route has no analytic continuation
    println!("\nzeta(1/2): {}", zeta_em(&half, bits).unwrap_err());
}
