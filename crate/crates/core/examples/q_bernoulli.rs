//! Carlitz q-Bernoulli numbers in real and p-adic mode, the q -> 1 limit,
//! and the q-zeta diagnostic.

use eulerzeta::arith::{rat, BigFloat, Rational};
use eulerzeta::padic::{carlitz_q_bernoulli, q_bosonic_sum, q_zeta_residual, QBernoulli, QRational};
use eulerzeta::special_numbers::bernoulli;

fn real(m: u32, q: Rational) -> BigFloat {
    match carlitz_q_bernoulli(m, &QRational::real(q).unwrap(), 128).unwrap() {
        QBernoulli::Real(x) => x,
        QBernoulli::Padic(_) => unreachable!(),
    }
}

fn main() {
    println!("beta_(m,q) at q = 1 + 10^-k approaching B_m:");
    for m in [1u32, 2, 4] {
        let row: Vec<String> = (2..=6)
            .map(|k| real(m, rat(1, 1) + rat(1, 10i64.pow(k))).to_decimal(10))
            .collect();
        println!("  m={m} B_m={:<6} {}", bernoulli(m as usize).to_string(), row.join("  "));
    }

    let q = rat(6, 1);
    println!("\n5-adic, q = 6:");
    for m in 0..=3 {
        let depth = 6;
        let beta = carlitz_q_bernoulli(m, &QRational::padic_of(&q, 5, depth).unwrap(), 0).unwrap();
        let sum = q_bosonic_sum(m, 5, depth, &q).unwrap();
        println!("  m={m}: beta = {beta}\n        sum  = {sum}");
    }

    println!("\nzeta_q(1-k) + beta_(k,q)/k at q = 1/2:");
    for k in 1..=4 {
        let d = q_zeta_residual(k, &rat(1, 2), 128).unwrap();
        println!("  k={k}: residual {} (exactly {})", d.residual.to_decimal(4), d.exact_residual);
    }
}
