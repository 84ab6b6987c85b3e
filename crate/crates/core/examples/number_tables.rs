//! Bernoulli and Euler number tables, Euler polynomials, and the
//! relations between them.
//!
//! ```text
//! cargo run --example number_tables
//! ```

use eulerzeta::arith::rat;
use eulerzeta::special_numbers::{
    alt_power_sum, bernoulli, euler_first, euler_poly, euler_second, second_from_first, NumberKind, NumberTable,
};

fn main() {
    let table = NumberTable::build(NumberKind::Bernoulli, 20);
    for n in (0..=table.max_index()).filter(|&n| n < 2 || n % 2 == 0) {
        println!("B_{n:<2} = {}", table.get(n).unwrap());
    }

    println!();
    for n in 0..=9 {
        println!("E*_{n} = {:<8}  E_{n} = {}", euler_first(n), euler_second(n));
    }

    // E_k from the first-kind numbers
    let k = 10;
    println!("\nsum C({k},l) 2^l E*_l = {} = E_{k} = {}", second_from_first(k), euler_second(k));

    let x = rat(7, 3);
    println!("\nE*_n(7/3) for n = 0..5:");
    for n in 0..=5 {
        println!("  {}", euler_poly(n, &x));
    }

    // odd n: E*_k(n) + E*_k = 2 sum_{l<n} (-1)^l l^k
    let (n, k) = (5u64, 3u32);
    let lhs = euler_poly(k as usize, &rat(n as i64, 1)) + euler_first(k as usize);
    println!("\nE*_3(5) + E*_3 = {lhs}, alternating power sum = {}", alt_power_sum(n, k));

    println!("\nB_60 = {}", bernoulli(60));
}
