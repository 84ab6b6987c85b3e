//! Special values as rational multiples of powers of pi.

use eulerzeta::zeta_values::{
    beta_odd, euler_zeta_even, euler_zeta_neg, lambda_even, mixed_identity, zeta_even, zeta_even_via_euler,
    zeta_neg,
};

fn main() {
    println!("{:>3}  {:<32} {:<32} {}", "n", "zeta(2n)", "lambda(2n)", "zeta_E(2n)");
    for n in 1..=6 {
        let z = zeta_even(n).unwrap();
        assert_eq!(z, zeta_even_via_euler(n).unwrap());
        println!(
            "{n:>3}  {:<32} {:<32} {}",
            z.to_string(),
            lambda_even(n).unwrap().to_string(),
            euler_zeta_even(n).unwrap()
        );
    }

    println!();
    for n in 0..=4 {
        println!("beta({}) = {}", 2 * n + 1, beta_odd(n));
    }

    println!();
    for n in 1..=5 {
        println!("zeta(-{n}) = {:<8} zeta_E(-{n}) = {}", zeta_neg(n).unwrap().to_string(), euler_zeta_neg(n));
    }

    let (lhs, rhs) = mixed_identity(5).unwrap();
    println!("\nBernoulli-Euler identity at k = 5: {lhs} = {rhs}");

    let z = zeta_even(2).unwrap();
    println!("zeta(4) ~ {}", z.to_bigfloat(128).to_decimal(30));
}
